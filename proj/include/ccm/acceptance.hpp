#ifndef CCM_ACCEPTANCE_HPP
#define CCM_ACCEPTANCE_HPP

// The release gate: nine checks covering the symbolic projection, the
// semi-deterministic capacity identity, the Gaussian oracle/closed-form
// agreement, the additive-gap and multiplicative-factor claims, containment,
// and the regime map. Every check is seeded and deterministic, so reports are
// byte-identical across runs.

#include <chrono>
#include <cmath>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ccm/dmc.hpp"
#include "ccm/fme.hpp"
#include "ccm/gaussian.hpp"
#include "ccm/io.hpp"
#include "ccm/region.hpp"
#include "ccm/sweep.hpp"

namespace ccm::acceptance {

struct CriterionResult {
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

namespace detail {

inline double now_seconds() {
  return std::chrono::duration<double>(
             std::chrono::steady_clock::now().time_since_epoch())
      .count();
}

// |X1| = |X2| = 2, deterministic Y1 = X1 xor h(X2) (so (Y1, X2) recovers X1,
// the case the capacity identity covers), stochastic Y2 with ny2 letters.
inline dmc::Dmc random_semidet_channel(std::mt19937& rng, std::size_t ny2) {
  std::uniform_int_distribution<std::size_t> flip(0, 1);
  std::uniform_real_distribution<double> u(0.05, 1.0);
  std::vector<double> t(2 * 2 * 2 * ny2, 0.0);
  for (std::size_t x2 = 0; x2 < 2; ++x2) {
    const std::size_t h = flip(rng);
    for (std::size_t x1 = 0; x1 < 2; ++x1) {
      const std::size_t y1 = x1 ^ h;
      std::vector<double> row(ny2);
      double mass = 0.0;
      for (double& v : row) mass += (v = u(rng));
      for (std::size_t y2 = 0; y2 < ny2; ++y2) {
        t[((x1 * 2 + x2) * 2 + y1) * ny2 + y2] = row[y2] / mass;
      }
    }
  }
  return dmc::Dmc(2, 2, 2, ny2, t);
}

inline bool vertices_match(const RateRegion& a, const RateRegion& b, double tol,
                           double& worst) {
  auto va = a.vertices();
  auto vb = b.vertices();
  auto lex = [](const RatePoint& p, const RatePoint& q) {
    return p.r1 < q.r1 || (p.r1 == q.r1 && p.r2 < q.r2);
  };
  std::sort(va.begin(), va.end(), lex);
  std::sort(vb.begin(), vb.end(), lex);
  if (va.size() != vb.size()) return false;
  bool ok = true;
  for (std::size_t i = 0; i < va.size(); ++i) {
    const double d = std::max(std::abs(va[i].r1 - vb[i].r1),
                              std::abs(va[i].r2 - vb[i].r2));
    worst = std::max(worst, d);
    ok = ok && d <= tol;
  }
  return ok;
}

}  // namespace detail

// 1. The canned pre-elimination system projects to exactly the five published
//    bounds, in under a second.
inline CriterionResult criterion_fme_projection() {
  CriterionResult r{"fme-projection"};
  const double t0 = detail::now_seconds();
  try {
    const fme::SymbolicSystem out = fme::derive_th2();
    r.seconds = detail::now_seconds() - t0;
    r.passed = out.inequalities.size() == 5 && r.seconds < 1.0;
    r.detail = "5 inequalities, exact symbolic match";
  } catch (const std::exception& e) {
    r.seconds = detail::now_seconds() - t0;
    r.detail = e.what();
  }
  return r;
}

// 2. Twenty seeded semi-deterministic channels: the scheme assignment achieves
//    the capacity formulas at every grid point, and the capacity region equals
//    the outer-bound region vertex for vertex.
inline CriterionResult criterion_semidet_identity() {
  CriterionResult r{"semidet-identity"};
  const double t0 = detail::now_seconds();
  std::mt19937 rng(2024);
  std::vector<dmc::Dmc> channels;
  for (int i = 0; i < 20; ++i) {
    channels.push_back(detail::random_semidet_channel(rng, 2 + i % 2));
  }
  std::vector<std::string> fail(channels.size());
  std::vector<double> worst_dev(channels.size(), 0.0);
  std::vector<double> worst_vertex(channels.size(), 0.0);
  sweep::parallel_for(channels.size(), [&](std::size_t i) {
    try {
      const dmc::SemidetReport rep = dmc::verify_semidet(channels[i], 16);
      worst_dev[i] = rep.worst_deviation;
      if (rep.passed != rep.total || rep.worst_deviation >= 1e-12) {
        fail[i] = "verification deviation " + io::fmt(rep.worst_deviation);
        return;
      }
      const RateRegion cap = dmc::semidet_capacity_region(channels[i], 16);
      const RateRegion outer = dmc::outer_bound_region(channels[i], 16);
      if (!detail::vertices_match(cap, outer, 1e-9, worst_vertex[i])) {
        fail[i] = "vertex mismatch " + io::fmt(worst_vertex[i]);
      }
    } catch (const std::exception& e) {
      fail[i] = e.what();
    }
  });
  r.seconds = detail::now_seconds() - t0;
  double dev = 0.0, vdev = 0.0;
  std::string first_fail;
  for (std::size_t i = 0; i < channels.size(); ++i) {
    dev = std::max(dev, worst_dev[i]);
    vdev = std::max(vdev, worst_vertex[i]);
    if (first_fail.empty() && !fail[i].empty()) {
      first_fail = "channel " + std::to_string(i) + ": " + fail[i];
    }
  }
  r.passed = first_fail.empty() && r.seconds < 120.0;
  r.detail = first_fail.empty()
                 ? "20 channels, worst scheme deviation " + io::fmt(dev) +
                       ", worst vertex deviation " + io::fmt(vdev)
                 : first_fail;
  return r;
}

// 3. One thousand seeded parameter draws: the Gaussian oracle reproduces the
//    closed forms for the cognitive rate and the coherent sum bound, and the
//    pre-coding term collapses at the matched scaling.
inline CriterionResult criterion_oracle_agreement(
    std::vector<gaussian::GaussianChannelParams>& touched) {
  using gaussian::cap;
  CriterionResult r{"oracle-agreement"};
  const double t0 = detail::now_seconds();
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> g(0.0, 20.0);
  std::uniform_real_distribution<double> al(0.0, 1.0);
  double worst_r1 = 0.0, worst_sum = 0.0, worst_f = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    const gaussian::GaussianChannelParams p{g(rng), g(rng), g(rng), g(rng)};
    const double alpha = al(rng);
    touched.push_back(p);
    const gaussian::SchemeEAssignment s = gaussian::scheme_e_assignment(p, alpha);
    const gaussian::SchemeEBounds ob = gaussian::gaussian_mi_oracle(p, s);
    const double b2 = std::norm(p.b);
    worst_r1 = std::max(
        worst_r1, std::abs(ob.r1() - cap(alpha * std::min(1.0, b2) * p.p1)));
    worst_sum = std::max(
        worst_sum,
        std::abs(ob.sum_b - cap(b2 * p.p1 + p.p2 +
                                2.0 * std::sqrt((1.0 - alpha) * b2 * p.p1 * p.p2))));
    const double sigma2 = 0.25 + g(rng) / 10.0;
    const gaussian::cplx h{g(rng) - 10.0, g(rng) - 10.0};
    const gaussian::cplx lc = gaussian::lambda_costa(h, sigma2, alpha, p.p1);
    worst_f = std::max(
        worst_f, std::abs(gaussian::f_term(h, sigma2, lc, alpha, p) -
                          std::log2((sigma2 + alpha * p.p1) / sigma2)));
  }
  r.seconds = detail::now_seconds() - t0;
  r.passed = worst_r1 <= 1e-9 && worst_sum <= 1e-9 && worst_f <= 1e-12;
  r.detail = "worst r1 " + io::fmt(worst_r1) + ", worst sum " + io::fmt(worst_sum) +
             ", worst f " + io::fmt(worst_f);
  return r;
}

namespace detail {

inline CriterionResult gap_criterion(
    std::string name, const std::vector<gaussian::GaussianChannelParams>& params,
    double budget_seconds, bool with_superposition) {
  CriterionResult r{std::move(name)};
  const double t0 = now_seconds();
  std::vector<double> gaps(params.size(), 0.0);
  std::vector<std::string> fail(params.size());
  sweep::parallel_for(params.size(), [&](std::size_t i) {
    try {
      RateRegion achievable = gaussian::inner_region(params[i], 1001);
      if (with_superposition) {
        achievable = union_hull(
            {achievable, gaussian::superposition_region(params[i], 1001)});
      }
      gaps[i] = max_gap(gaussian::outer_region(params[i], 1001), achievable);
    } catch (const std::exception& e) {
      fail[i] = e.what();
    }
  });
  r.seconds = now_seconds() - t0;
  double worst = 0.0;
  std::size_t argmax = 0;
  std::string first_fail;
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (gaps[i] > worst) {
      worst = gaps[i];
      argmax = i;
    }
    if (first_fail.empty() && !fail[i].empty()) first_fail = fail[i];
  }
  r.passed = first_fail.empty() && worst < 1e-3 && r.seconds < budget_seconds;
  const gaussian::GaussianChannelParams& am = params[argmax];
  r.detail = first_fail.empty()
                 ? "worst gap " + io::fmt(worst) + " at a=" + io::fmt(am.a.real()) +
                       " b=" + io::fmt(am.b.real()) + " p1=" + io::fmt(am.p1) +
                       " p2=" + io::fmt(am.p2)
                 : first_fail;
  return r;
}

}  // namespace detail

// 4. Five hundred seeded draws with |b| <= 1: the scheme is capacity-achieving
//    to within a millibit.
inline CriterionResult criterion_weak_gain_capacity(
    std::vector<gaussian::GaussianChannelParams>& touched) {
  std::mt19937 rng(4);
  std::uniform_real_distribution<double> g(0.0, 20.0);
  std::uniform_real_distribution<double> bu(0.0, 1.0);
  std::vector<gaussian::GaussianChannelParams> params;
  for (int i = 0; i < 500; ++i) {
    params.push_back({g(rng), bu(rng), g(rng), g(rng)});
  }
  touched.insert(touched.end(), params.begin(), params.end());
  return detail::gap_criterion("weak-gain-capacity", params, 300.0, false);
}

// 5. Five hundred seeded draws in the very-strong-interference regime: same
//    millibit agreement. Capacity there is met by the superposition-only
//    assignment, so that region joins the binning scheme in the union.
inline CriterionResult criterion_very_strong_capacity(
    std::vector<gaussian::GaussianChannelParams>& touched) {
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> g(0.0, 20.0);
  std::vector<gaussian::GaussianChannelParams> params;
  while (params.size() < 500) {
    const gaussian::GaussianChannelParams p{g(rng), g(rng), g(rng), g(rng)};
    if (gaussian::is_very_strong(p)) params.push_back(p);
  }
  touched.insert(touched.end(), params.begin(), params.end());
  return detail::gap_criterion("very-strong-capacity", params, 300.0, true);
}

inline std::vector<gaussian::GaussianChannelParams> constant_gap_grid() {
  std::vector<gaussian::GaussianChannelParams> grid;
  for (double a : {0.0, 0.5, 1.0, 2.0, 5.0, 10.0}) {
    for (double b : {1.1, 1.5, 2.0, 5.0, 10.0}) {
      for (double p1 : {1.0, 10.0, 100.0, 1000.0}) {
        for (double p2 : {1.0, 10.0, 100.0, 1000.0}) {
          grid.push_back({a, b, p1, p2});
        }
      }
    }
  }
  return grid;
}

// 6. Over the strong-gain sweep grid, the outer bound exceeds the best inner
//    region (scheme over the pre-coding-scale grid, superposition, and time
//    division, hulled) by at most 1.87 bits.
inline CriterionResult criterion_constant_gap(const sweep::GapSweepResult& sweep_result) {
  CriterionResult r{"constant-gap"};
  const sweep::GapRow& am = sweep_result.rows[sweep_result.argmax_gap];
  r.passed = sweep_result.max_gap_bits <= 1.87;
  r.detail = "max gap " + io::fmt(sweep_result.max_gap_bits) + " at a=" +
             io::fmt(am.params.a.real()) + " b=" + io::fmt(am.params.b.real()) +
             " p1=" + io::fmt(am.params.p1) + " p2=" + io::fmt(am.params.p2);
  return r;
}

// 7. Same sweep: the outer bound is within a multiplicative factor 2 of the
//    best inner region.
inline CriterionResult criterion_constant_factor(
    const sweep::GapSweepResult& sweep_result) {
  CriterionResult r{"constant-factor"};
  const sweep::GapRow& am = sweep_result.rows[sweep_result.argmax_ratio];
  r.passed = sweep_result.max_ratio <= 2.0 + 1e-6;
  r.detail = "max ratio " + io::fmt(sweep_result.max_ratio) + " at a=" +
             io::fmt(am.params.a.real()) + " b=" + io::fmt(am.params.b.real()) +
             " p1=" + io::fmt(am.params.p1) + " p2=" + io::fmt(am.params.p2);
  return r;
}

// 8. Every parameter set touched above keeps the scheme region inside the
//    outer region at tolerance 1e-9.
inline CriterionResult criterion_containment(
    const std::vector<gaussian::GaussianChannelParams>& touched) {
  CriterionResult r{"containment"};
  const double t0 = detail::now_seconds();
  std::vector<char> ok(touched.size(), 0);
  sweep::parallel_for(touched.size(), [&](std::size_t i) {
    ok[i] = contains(gaussian::outer_region(touched[i], 1001),
                     gaussian::inner_region(touched[i], 1001), 1e-9)
                ? 1
                : 0;
  });
  r.seconds = detail::now_seconds() - t0;
  std::size_t bad = 0, first = touched.size();
  for (std::size_t i = 0; i < touched.size(); ++i) {
    if (!ok[i]) {
      ++bad;
      first = std::min(first, i);
    }
  }
  r.passed = bad == 0;
  if (bad == 0) {
    r.detail = std::to_string(touched.size()) + " parameter sets contained";
  } else {
    const gaussian::GaussianChannelParams& p = touched[first];
    r.detail = std::to_string(bad) + " violations, first at a=" +
               io::fmt(p.a.real()) + " b=" + io::fmt(p.b.real()) + " p1=" +
               io::fmt(p.p1) + " p2=" + io::fmt(p.p2);
  }
  return r;
}

// 9. The 60x60 regime map at unit powers: every weak-gain cell carries the
//    pre-coding label, and the very-strong set grows monotonically with the
//    interference gain along each row.
inline CriterionResult criterion_regime_map() {
  CriterionResult r{"regime-map"};
  const double t0 = detail::now_seconds();
  const int n = 60;
  const std::vector<io::RegimeCell> cells = sweep::regime_map(3.0, 3.0, n, 1.0, 1.0);
  std::string fail;
  for (int ib = 0; ib < n && fail.empty(); ++ib) {
    bool vsi_seen = false;
    for (int ia = 0; ia < n; ++ia) {
      const io::RegimeCell& c = cells[static_cast<std::size_t>(ib) * n + ia];
      const bool vsi = c.label == gaussian::RegimeLabel::VERY_STRONG ||
                       c.label == gaussian::RegimeLabel::BOTH;
      if (c.b <= 1.0 && c.label != gaussian::RegimeLabel::PDC &&
          c.label != gaussian::RegimeLabel::BOTH) {
        fail = "cell a=" + io::fmt(c.a) + " b=" + io::fmt(c.b) +
               " lost the pre-coding label (" + gaussian::regime_name(c.label) + ")";
        break;
      }
      if (vsi_seen && !vsi) {
        fail = "very-strong set not monotone in row b=" + io::fmt(c.b) +
               ": drops at a=" + io::fmt(c.a);
        break;
      }
      vsi_seen = vsi_seen || vsi;
    }
  }
  r.seconds = detail::now_seconds() - t0;
  r.passed = fail.empty();
  r.detail = fail.empty() ? "3600 cells labeled, both structure checks hold" : fail;
  return r;
}

inline std::vector<CriterionResult> run_all() {
  std::vector<CriterionResult> results;
  std::vector<gaussian::GaussianChannelParams> touched;
  results.push_back(criterion_fme_projection());
  results.push_back(criterion_semidet_identity());
  results.push_back(criterion_oracle_agreement(touched));
  results.push_back(criterion_weak_gain_capacity(touched));
  results.push_back(criterion_very_strong_capacity(touched));

  const std::vector<gaussian::GaussianChannelParams> grid = constant_gap_grid();
  touched.insert(touched.end(), grid.begin(), grid.end());
  const double t0 = detail::now_seconds();
  const sweep::GapSweepResult sweep_result = sweep::gap_sweep(grid);
  const double sweep_seconds = detail::now_seconds() - t0;

  CriterionResult c6 = criterion_constant_gap(sweep_result);
  c6.seconds = sweep_seconds;
  results.push_back(c6);
  results.push_back(criterion_constant_factor(sweep_result));
  results.push_back(criterion_containment(touched));
  results.push_back(criterion_regime_map());
  return results;
}

// Deterministic report body: no timings, so reruns are byte-identical.
inline io::json report_json(const std::vector<CriterionResult>& results) {
  io::json checks = io::json::array();
  bool all = true;
  for (const CriterionResult& r : results) {
    checks.push_back({{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
    all = all && r.passed;
  }
  return {{"command", "verify-all"}, {"passed", all}, {"checks", checks}};
}

}  // namespace ccm::acceptance

#endif  // CCM_ACCEPTANCE_HPP
