#include <doctest.h>

#include <cmath>
#include <random>

#include "ccm/gaussian.hpp"

using namespace ccm;
using namespace ccm::gaussian;

TEST_CASE("capacity function examples") {
  CHECK(cap(0.0) == doctest::Approx(0.0));
  CHECK(cap(3.0) == doctest::Approx(2.0));
  CHECK(cap(15.0) == doctest::Approx(4.0));
  CHECK(cap(-1e-14) == doctest::Approx(0.0));
  CHECK_THROWS(cap(-0.5));
}

TEST_CASE("outer bound pair at a full cognitive split") {
  const GaussianChannelParams p{1.0, 1.0, 3.0, 12.0};
  const auto [r1, sum] = outer_bounds(p, 1.0);
  CHECK(r1 == doctest::Approx(2.0));
  CHECK(sum == doctest::Approx(4.0));
  CHECK_THROWS(outer_bounds(p, 1.5));
}

TEST_CASE("weak cross gain caps the cognitive rate") {
  const GaussianChannelParams p{0.0, 0.5, 12.0, 0.0};
  const auto [r1, sum] = outer_bounds(p, 1.0);
  CHECK(r1 == doctest::Approx(2.0));  // min{1, 1/4} * 12 = 3
  CHECK(sum == doctest::Approx(2.0));
}

TEST_CASE("outer bounds grow with either power") {
  std::mt19937 rng(101);
  std::uniform_real_distribution<double> g(0.0, 5.0);
  std::uniform_real_distribution<double> pw(0.0, 20.0);
  std::uniform_real_distribution<double> al(0.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    const double a = g(rng), b = g(rng), p1 = pw(rng), p2 = pw(rng);
    const double alpha = al(rng);
    const GaussianChannelParams base{a, b, p1, p2};
    const GaussianChannelParams more1{a, b, p1 + 1.0, p2};
    const GaussianChannelParams more2{a, b, p1, p2 + 1.0};
    const auto [r1, sum] = outer_bounds(base, alpha);
    const auto [r1a, suma] = outer_bounds(more1, alpha);
    const auto [r1b, sumb] = outer_bounds(more2, alpha);
    CHECK(r1a >= r1 - 1e-12);
    CHECK(suma >= sum - 1e-12);
    CHECK(r1b >= r1 - 1e-12);
    CHECK(sumb >= sum - 1e-12);
  }
}

TEST_CASE("outer region depends on the cross gain only through its magnitude") {
  const GaussianChannelParams pa{0.0, 2.0, 4.0, 7.0};
  const GaussianChannelParams pb{5.0, cplx{0.0, -2.0}, 4.0, 7.0};
  const RateRegion ra = outer_region(pa, 101);
  const RateRegion rb = outer_region(pb, 101);
  CHECK(contains(ra, rb, 1e-9));
  CHECK(contains(rb, ra, 1e-9));
}

TEST_CASE("costa scaling examples") {
  CHECK(lambda_costa(2.0, 1.0, 1.0, 1.0).real() == doctest::Approx(1.0));
  CHECK(lambda_costa(1.0, 1.0, 0.5, 6.0).real() == doctest::Approx(0.75));
  CHECK(std::abs(lambda_costa(3.0, 1.0, 0.0, 5.0)) == doctest::Approx(0.0));
  CHECK_THROWS(lambda_costa(1.0, 0.0, 0.5, 1.0));
}

TEST_CASE("pre-coding term collapses at the matched scaling") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> g(0.1, 5.0);
  std::uniform_real_distribution<double> al(0.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    const GaussianChannelParams p{g(rng), g(rng), g(rng), g(rng)};
    const double alpha = al(rng);
    const double sigma2 = g(rng);
    const cplx h{g(rng), g(rng) - 2.5};
    const cplx lc = lambda_costa(h, sigma2, alpha, p.p1);
    const double expect = std::log2((sigma2 + alpha * p.p1) / sigma2);
    CHECK(f_term(h, sigma2, lc, alpha, p) == doctest::Approx(expect).epsilon(1e-12));
  }
}

TEST_CASE("pre-coding term vanishes without a fresh signal") {
  const GaussianChannelParams p{1.0, 1.0, 4.0, 9.0};
  CHECK(f_term(2.0, 1.0, 0.0, 0.0, p) == doctest::Approx(0.0));
  CHECK_THROWS_WITH(f_term(2.0, 1.0, 0.5, 0.0, p), "pre-coding ratio undefined");
}

TEST_CASE("mismatched scaling loses rate") {
  const GaussianChannelParams p{1.0, 1.0, 4.0, 9.0};
  const cplx lc = lambda_costa(2.0, 1.0, 0.5, p.p1);
  const double matched = f_term(2.0, 1.0, lc, 0.5, p);
  CHECK(f_term(2.0, 1.0, 0.3 * lc, 0.5, p) < matched);
  CHECK(f_term(2.0, 1.0, 2.0 * lc, 0.5, p) < matched);
}

TEST_CASE("oracle matches the closed forms where they are exact") {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> g(0.0, 20.0);
  std::uniform_real_distribution<double> al(0.0, 1.0);
  for (int trial = 0; trial < 500; ++trial) {
    const GaussianChannelParams p{g(rng) / 4.0, g(rng) / 4.0, g(rng), g(rng)};
    const double alpha = al(rng);
    const SchemeEAssignment s = scheme_e_assignment(p, alpha);
    const SchemeEBounds ob = gaussian_mi_oracle(p, s);
    const SchemeEBounds cb = inner_bounds_scheme_e(p, s);
    CHECK(ob.r1_bin == doctest::Approx(cb.r1_bin).epsilon(1e-9));
    CHECK(ob.r1_dec == doctest::Approx(cb.r1_dec).epsilon(1e-9));
    CHECK(ob.sum_b == doctest::Approx(cb.sum_b).epsilon(1e-9));
    const double b2 = std::norm(p.b);
    CHECK(ob.r1() ==
          doctest::Approx(cap(alpha * std::min(1.0, b2) * p.p1)).epsilon(1e-9));
  }
}

TEST_CASE("full cognitive split with a strong direct gain hits the point capacity") {
  for (double b : {1.0, 2.0, 7.5}) {
    const GaussianChannelParams p{1.3, b, 6.0, 11.0};
    const SchemeEBounds ob = gaussian_mi_oracle(p, scheme_e_assignment(p, 1.0));
    CHECK(ob.r1() == doctest::Approx(cap(p.p1)).epsilon(1e-9));
  }
}

TEST_CASE("no primary power means no interference to pre-code against") {
  const GaussianChannelParams p{2.0, 1.0, 5.0, 0.0};
  for (double alpha : {0.0, 0.3, 1.0}) {
    const SchemeEBounds ob = gaussian_mi_oracle(p, scheme_e_assignment(p, alpha));
    CHECK(ob.r1() == doctest::Approx(cap(alpha * p.p1)).epsilon(1e-9));
  }
}

TEST_CASE("ignoring the interference costs the usual SNR penalty") {
  const GaussianChannelParams p{2.0, 1.0, 3.0, 4.0};
  const SchemeEAssignment s{1.0, 0.0, 0.0};  // alpha = 1, no pre-coding
  const SchemeEBounds ob = gaussian_mi_oracle(p, s);
  const double expect = cap(p.p1 / (1.0 + std::norm(p.a) * p.p2));
  CHECK(ob.r1_bin == doctest::Approx(expect).epsilon(1e-9));
}

TEST_CASE("scheme region sits inside the outer region") {
  std::mt19937 rng(13);
  std::uniform_real_distribution<double> g(0.0, 10.0);
  for (int trial = 0; trial < 10; ++trial) {
    const GaussianChannelParams p{g(rng), g(rng), g(rng), g(rng)};
    CHECK(contains(outer_region(p, 101), inner_region(p, 101), 1e-9));
  }
}

TEST_CASE("time division sits inside the outer region") {
  std::mt19937 rng(17);
  std::uniform_real_distribution<double> g(0.0, 10.0);
  for (int trial = 0; trial < 10; ++trial) {
    const GaussianChannelParams p{g(rng), g(rng), g(rng), g(rng)};
    CHECK(contains(outer_region(p, 101), time_division_region(p, 101), 1e-9));
  }
}

TEST_CASE("time division endpoints") {
  const GaussianChannelParams p{0.0, 1.0, 3.0, 15.0};
  const RateRegion td = time_division_region(p, 101);
  CHECK(td.r1_max() == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(td.r2_max() == doctest::Approx(4.0).epsilon(1e-9));
}

TEST_CASE("zero-power channels collapse to the expected segments") {
  const GaussianChannelParams no1{1.0, 1.0, 0.0, 3.0};
  const RateRegion o1 = outer_region(no1, 51);
  CHECK(o1.r1_max() <= 1e-9);
  CHECK(o1.r2_max() == doctest::Approx(2.0).epsilon(1e-9));

  const GaussianChannelParams no2{1.0, 1.0, 3.0, 0.0};
  const RateRegion o2 = outer_region(no2, 51);
  CHECK(o2.r1_max() == doctest::Approx(2.0).epsilon(1e-9));
  const RateRegion i2 = inner_region(no2, 51);
  CHECK(contains(o2, i2, 1e-9));
  CHECK(i2.r1_max() == doctest::Approx(2.0).epsilon(1e-9));
}

TEST_CASE("dead channel carries nothing") {
  const GaussianChannelParams p{0.0, 0.0, 5.0, 0.0};
  const RateRegion o = outer_region(p, 51);
  CHECK(o.r1_max() <= 1e-9);
  CHECK(o.r2_max() <= 1e-9);
}

TEST_CASE("very strong interference predicate examples") {
  CHECK(is_very_strong({2.0, 1.0, 1.0, 1.0}));
  CHECK_FALSE(is_very_strong({1.0, 2.0, 1.0, 1.0}));
  CHECK(is_very_strong({1.0, 1.0, 1.0, 1.0}));  // a = |b|: equality holds
}

TEST_CASE("pre-coding regime covers every weak direct gain") {
  std::mt19937 rng(19);
  std::uniform_real_distribution<double> a(0.0, 20.0);
  std::uniform_real_distribution<double> b(0.0, 1.0);
  std::uniform_real_distribution<double> pw(0.0, 20.0);
  for (int trial = 0; trial < 10000; ++trial) {
    CHECK(is_pdc({a(rng), b(rng), pw(rng), pw(rng)}));
  }
}

TEST_CASE("pre-coding regime fails for a huge direct gain") {
  CHECK_FALSE(is_pdc({0.0, 1000.0, 10.0, 10.0}));
}

TEST_CASE("regime classification combines both predicates") {
  CHECK(regime_classify({2.0, 0.5, 1.0, 1.0}) == RegimeLabel::BOTH);
  CHECK(regime_classify({0.0, 0.5, 1.0, 1.0}) == RegimeLabel::PDC);
  CHECK(regime_classify({0.0, 1000.0, 10.0, 10.0}) == RegimeLabel::GAP_ONLY);
  CHECK(std::string(regime_name(RegimeLabel::VERY_STRONG)) == "VERY_STRONG");
}

TEST_CASE("weak direct gain keeps the scheme within a millibit of the outer bound") {
  std::mt19937 rng(23);
  std::uniform_real_distribution<double> g(0.0, 20.0);
  std::uniform_real_distribution<double> bb(0.0, 1.0);
  for (int trial = 0; trial < 5; ++trial) {
    const GaussianChannelParams p{g(rng), bb(rng), g(rng), g(rng)};
    const double gap = max_gap(outer_region(p, 1001), inner_region(p, 1001));
    CHECK(gap < 1e-3);
  }
}

TEST_CASE("superposition region stays inside the outer bound") {
  std::mt19937 rng(29);
  std::uniform_real_distribution<double> g(0.0, 20.0);
  for (int trial = 0; trial < 10; ++trial) {
    const GaussianChannelParams p{g(rng), g(rng), g(rng), g(rng)};
    CHECK(contains(outer_region(p, 201), superposition_region(p, 201), 1e-9));
  }
}

TEST_CASE("superposition meets the outer bound under very strong interference") {
  const GaussianChannelParams p{2.0, 1.0, 1.0, 1.0};
  REQUIRE(is_very_strong(p));
  CHECK(max_gap(outer_region(p, 1001), superposition_region(p, 1001)) < 1e-3);
}

TEST_CASE("best inner hull contains scheme and superposition, fits the outer bound") {
  const GaussianChannelParams p{1.5, 2.0, 10.0, 5.0};
  const RateRegion best = best_inner_region(p, 201);
  CHECK(contains(best, inner_region(p, 201), 1e-9));
  CHECK(contains(best, superposition_region(p, 201), 1e-9));
  CHECK(contains(outer_region(p, 201), best, 1e-9));
}

TEST_CASE("the pre-coding-scale grid recovers rate the matched scaling loses") {
  // Strong direct gain, lopsided powers: the matched scaling leaves a gap of
  // more than two bits; scanning the scale closes most of it.
  const GaussianChannelParams p{0.5, 10.0, 100.0, 1.0};
  const RateRegion outer = outer_region(p, 501);
  const double costa_gap =
      max_gap(outer, union_hull({inner_region(p, 501), time_division_region(p, 501)}));
  const double best_gap =
      max_gap(outer, union_hull({best_inner_region(p, 501), time_division_region(p, 501)}));
  CHECK(costa_gap > 2.0);
  CHECK(best_gap < 1.0);
  CHECK(best_gap < costa_gap);
}
