#ifndef CCM_GAUSSIAN_HPP
#define CCM_GAUSSIAN_HPP

// Gaussian channel in standard form: Y1 = X1 + a*X2 + Z1, Y2 = |b|*X1 + X2 + Z2,
// unit noise variances, powers P1 and P2. Closed-form outer bounds, the
// superposition + dirty-paper scheme with the Costa scaling, an exact Gaussian
// mutual-information oracle on the scheme's joint covariance, regime
// predicates, and the time-division baseline.
//
// All rates in bits; complex, circularly symmetric inputs throughout (no 1/2
// factor in the Gaussian mutual-information formulas).

#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "ccm/region.hpp"

namespace ccm::gaussian {

using cplx = std::complex<double>;

struct GaussianChannelParams {
  cplx a{0.0, 0.0};
  cplx b{0.0, 0.0};
  double p1 = 0.0;
  double p2 = 0.0;

  void validate() const {
    if (!(p1 >= 0.0) || !(p2 >= 0.0)) throw std::invalid_argument("negative power");
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag()) ||
        !std::isfinite(b.real()) || !std::isfinite(b.imag())) {
      throw std::invalid_argument("non-finite channel gain");
    }
  }
};

inline double cap(double x) {
  if (x < 0.0) {
    if (x < -1e-12) throw std::invalid_argument("cap of negative argument");
    x = 0.0;
  }
  return std::log1p(x) / std::log(2.0);
}

// (R1 cap, sum cap) at one power split.
inline std::pair<double, double> outer_bounds(const GaussianChannelParams& p,
                                              double alpha) {
  if (alpha < 0.0 || alpha > 1.0) throw std::invalid_argument("alpha out of [0,1]");
  const double b2 = std::norm(p.b);
  const double r1 = cap(alpha * std::min(1.0, b2) * p.p1);
  const double sum =
      cap(p.p2 + b2 * p.p1 + 2.0 * std::sqrt((1.0 - alpha) * b2 * p.p1 * p.p2));
  return {r1, sum};
}

inline RateRegion outer_region(const GaussianChannelParams& p, int alpha_steps = 1001) {
  if (alpha_steps < 2) throw std::invalid_argument("alpha_steps must be >= 2");
  std::vector<RateRegion> boxes;
  boxes.reserve(static_cast<std::size_t>(alpha_steps));
  for (int i = 0; i < alpha_steps; ++i) {
    const double alpha = static_cast<double>(i) / (alpha_steps - 1);
    const auto [r1, sum] = outer_bounds(p, alpha);
    boxes.push_back(RateRegion({{1.0, 0.0, r1}, {1.0, 1.0, sum}}));
  }
  return union_hull(boxes);
}

// Power split of the scheme: fresh cognitive power alpha*P1, the rest sent
// coherently with X2; lambda is the dirty-paper scaling relative to the total
// interference coefficient seen at the cognitive receiver.
struct SchemeEAssignment {
  double alpha = 0.0;
  double lambda = 0.0;
  double superposition_gain = 0.0;
};

inline SchemeEAssignment scheme_e_assignment(const GaussianChannelParams& p,
                                             double alpha) {
  if (alpha < 0.0 || alpha > 1.0) throw std::invalid_argument("alpha out of [0,1]");
  SchemeEAssignment s;
  s.alpha = alpha;
  s.lambda = alpha * p.p1 / (alpha * p.p1 + 1.0);
  s.superposition_gain = (p.p2 > 0.0) ? std::sqrt((1.0 - alpha) * p.p1 / p.p2) : 0.0;
  return s;
}

inline cplx lambda_costa(cplx h, double sigma2, double alpha, double p1) {
  if (!(sigma2 > 0.0)) throw std::invalid_argument("sigma2 must be positive");
  const double a1 = alpha * p1;
  return a1 / (a1 + sigma2) * h;
}

// The printed mismatched-pre-coding term, base-2 logarithm. `lambda` is the
// absolute coefficient on the interference inside the auxiliary codeword.
inline double f_term(cplx h, double sigma2, cplx lambda, double alpha,
                     const GaussianChannelParams& p) {
  if (!(sigma2 > 0.0)) throw std::invalid_argument("sigma2 must be positive");
  const double a1 = alpha * p.p1;
  const cplx lc = lambda_costa(h, sigma2, alpha, p.p1);
  double dev = 0.0;
  if (std::abs(lc) == 0.0) {
    if (std::abs(lambda) > 0.0) {
      throw std::runtime_error("pre-coding ratio undefined");
    }
  } else {
    dev = std::norm(lambda / lc - 1.0);
  }
  const double q = a1 * std::norm(h) * p.p2;
  const double mult = (q > 0.0) ? q / (q + sigma2) : 0.0;
  return std::log2((sigma2 + a1) / (sigma2 + mult * dev));
}

namespace detail {

// Every scheme variable is a linear combination of four independent complex
// Gaussians (fresh signal, primary input, two noises); vectors are stored
// pre-scaled by the standard deviations, so covariances are plain inner
// products and conditional variances are squared projection residuals.
using Coef = std::array<cplx, 4>;

inline double norm2(const Coef& v) {
  double s = 0.0;
  for (const cplx& c : v) s += std::norm(c);
  return s;
}

inline cplx dot(const Coef& a, const Coef& b) {
  cplx s = 0.0;
  for (std::size_t i = 0; i < 4; ++i) s += a[i] * std::conj(b[i]);
  return s;
}

inline double cond_var(Coef target, std::vector<Coef> given) {
  // modified Gram-Schmidt on the conditioning set, tiny directions dropped
  std::vector<Coef> basis;
  for (Coef& g : given) {
    for (const Coef& e : basis) {
      const cplx c = dot(g, e);
      for (std::size_t i = 0; i < 4; ++i) g[i] -= c * e[i];
    }
    const double n2 = norm2(g);
    if (n2 > 1e-26) {
      const double inv = 1.0 / std::sqrt(n2);
      for (cplx& c : g) c *= inv;
      basis.push_back(g);
    }
  }
  for (const Coef& e : basis) {
    const cplx c = dot(target, e);
    for (std::size_t i = 0; i < 4; ++i) target[i] -= c * e[i];
  }
  return norm2(target);
}

// I(T;S) via log2 cv(T)/cv(T|S) for scalar T; zero-variance T carries nothing.
inline double mi(const Coef& t, const std::vector<Coef>& s,
                 const std::vector<Coef>& extra_cond = {}) {
  const double num = cond_var(t, extra_cond);
  if (num <= 1e-24) return 0.0;
  std::vector<Coef> all = extra_cond;
  all.insert(all.end(), s.begin(), s.end());
  const double den = cond_var(t, all);
  if (den <= num * 1e-15) {
    throw std::runtime_error("covariance degenerate: conditional variance " +
                             std::to_string(den));
  }
  return std::log2(num / den);
}

}  // namespace detail

// The scheme's rate bounds for one assignment.
struct SchemeEBounds {
  double r1_bin = 0.0;  // binned bound at the cognitive receiver
  double r1_dec = 0.0;  // decoding bound at the primary receiver
  double sum_a = 0.0;   // cross sum bound (cognitive + primary halves)
  double sum_b = 0.0;   // primary-receiver sum bound
  double r1() const { return std::min(r1_bin, r1_dec); }
  double sum() const { return std::min(sum_a, sum_b); }
};

// Evaluates the four scheme bounds from the joint covariance of the jointly
// Gaussian assignment; authoritative over the printed closed forms.
inline SchemeEBounds gaussian_mi_oracle(const GaussianChannelParams& p,
                                        const SchemeEAssignment& s) {
  using detail::Coef;
  p.validate();
  const double sa = std::sqrt(s.alpha * p.p1);
  const double s2 = std::sqrt(p.p2);
  const double gamma = s.superposition_gain;
  const cplx h1 = p.a + gamma;
  const double babs = std::abs(p.b);

  const Coef x2 = {0.0, s2, 0.0, 0.0};
  const Coef x1 = {sa, gamma * s2, 0.0, 0.0};
  const Coef u = {sa, s.lambda * h1 * s2, 0.0, 0.0};
  const Coef y1 = {sa, h1 * s2, 1.0, 0.0};
  const Coef y2 = {babs * sa, (babs * gamma + 1.0) * s2, 0.0, 1.0};

  SchemeEBounds out;
  const double i_y1_u = detail::mi(y1, {u});
  const double i_u_x2 = detail::mi(u, {x2});
  out.r1_bin = i_y1_u - i_u_x2;
  out.r1_dec = detail::mi(y2, {x1}, {x2});
  out.sum_a = i_y1_u + detail::mi(y2, {x2}, {u});
  out.sum_b = detail::mi(y2, {x1, x2});
  return out;
}

// Printed closed forms of the scheme bounds, with the coherent-combining
// reading of the pre-coding arguments (see README); the oracle remains the
// authority for region construction.
inline SchemeEBounds inner_bounds_scheme_e(const GaussianChannelParams& p,
                                           const SchemeEAssignment& s) {
  p.validate();
  const double b2 = std::norm(p.b);
  const double albar = 1.0 - s.alpha;
  const double csum =
      cap(b2 * p.p1 + p.p2 + 2.0 * std::sqrt(albar * b2 * p.p1 * p.p2));
  SchemeEBounds out;
  out.r1_bin = cap(s.alpha * p.p1);
  out.r1_dec = cap(s.alpha * b2 * p.p1);
  out.sum_b = csum;
  if (b2 <= 0.0) {
    out.sum_a = csum;  // scheme degenerates, no cognitive signal reaches Y2
    return out;
  }
  const double gamma = s.superposition_gain;
  const cplx h1 = p.a + gamma;
  const cplx h2 = 1.0 / std::abs(p.b) + gamma;
  const cplx lam = s.lambda * h1;
  out.sum_a = csum + f_term(h1, 1.0, lam, s.alpha, p) -
              f_term(h2, 1.0 / b2, lam, s.alpha, p);
  return out;
}

inline RateRegion inner_region(const GaussianChannelParams& p, int alpha_steps = 1001) {
  if (alpha_steps < 2) throw std::invalid_argument("alpha_steps must be >= 2");
  std::vector<RateRegion> boxes;
  boxes.reserve(static_cast<std::size_t>(alpha_steps));
  for (int i = 0; i < alpha_steps; ++i) {
    const double alpha = static_cast<double>(i) / (alpha_steps - 1);
    const SchemeEBounds b = gaussian_mi_oracle(p, scheme_e_assignment(p, alpha));
    boxes.push_back(RateRegion({{1.0, 0.0, std::max(b.r1(), 0.0)},
                                {1.0, 1.0, std::max(b.sum(), 0.0)}}));
  }
  return union_hull(boxes);
}

// Superposition-only assignment (public primary codeword carries X2, the
// cognitive codeword is X1 itself; both receivers decode everything). This is
// the capacity-achieving scheme under very strong interference; no binning.
struct SuperpositionBounds {
  double r1_y1 = 0.0;   // I(Y1;X1|X2)
  double r1_y2 = 0.0;   // I(Y2;X1|X2)
  double sum_y1 = 0.0;  // I(Y1;X1,X2)
  double sum_y2 = 0.0;  // I(Y2;X1,X2)
  double r1() const { return std::min(r1_y1, r1_y2); }
  double sum() const { return std::min(sum_y1, sum_y2); }
};

inline SuperpositionBounds superposition_bounds(const GaussianChannelParams& p,
                                                double alpha) {
  using detail::Coef;
  p.validate();
  if (alpha < 0.0 || alpha > 1.0) throw std::invalid_argument("alpha out of [0,1]");
  const double sa = std::sqrt(alpha * p.p1);
  const double s2 = std::sqrt(p.p2);
  const double gamma = (p.p2 > 0.0) ? std::sqrt((1.0 - alpha) * p.p1 / p.p2) : 0.0;
  const double babs = std::abs(p.b);
  const Coef x2 = {0.0, s2, 0.0, 0.0};
  const Coef x1 = {sa, gamma * s2, 0.0, 0.0};
  const Coef y1 = {sa, (p.a + gamma) * s2, 1.0, 0.0};
  const Coef y2 = {babs * sa, (babs * gamma + 1.0) * s2, 0.0, 1.0};
  SuperpositionBounds out;
  out.r1_y1 = detail::mi(y1, {x1}, {x2});
  out.r1_y2 = detail::mi(y2, {x1}, {x2});
  out.sum_y1 = detail::mi(y1, {x1, x2});
  out.sum_y2 = detail::mi(y2, {x1, x2});
  return out;
}

inline RateRegion superposition_region(const GaussianChannelParams& p,
                                       int alpha_steps = 1001) {
  if (alpha_steps < 2) throw std::invalid_argument("alpha_steps must be >= 2");
  std::vector<RateRegion> boxes;
  boxes.reserve(static_cast<std::size_t>(alpha_steps));
  for (int i = 0; i < alpha_steps; ++i) {
    const double alpha = static_cast<double>(i) / (alpha_steps - 1);
    const SuperpositionBounds b = superposition_bounds(p, alpha);
    boxes.push_back(RateRegion({{1.0, 0.0, std::max(b.r1(), 0.0)},
                                {1.0, 1.0, std::max(b.sum(), 0.0)}}));
  }
  return union_hull(boxes);
}

// Hull of everything achievable here at fixed grids: the Costa-scaled scheme,
// the same scheme over a pre-coding-scale grid (mismatched scalings trade the
// cognitive rate for the sum rate), and the superposition-only scheme. The
// published constant-gap result needs the scale freedom; the Costa choice
// alone loses several tenths of a bit at strong direct gains.
inline RateRegion best_inner_region(const GaussianChannelParams& p,
                                    int alpha_steps = 1001, int lambda_steps = 21) {
  if (alpha_steps < 2) throw std::invalid_argument("alpha_steps must be >= 2");
  if (lambda_steps < 2) throw std::invalid_argument("lambda_steps must be >= 2");
  std::vector<RateRegion> boxes;
  boxes.reserve(static_cast<std::size_t>(alpha_steps) * (lambda_steps + 1));
  for (int i = 0; i < alpha_steps; ++i) {
    const double alpha = static_cast<double>(i) / (alpha_steps - 1);
    const SchemeEAssignment costa = scheme_e_assignment(p, alpha);
    for (int j = 0; j < lambda_steps; ++j) {
      SchemeEAssignment s = costa;
      s.lambda = costa.lambda * 2.0 * j / (lambda_steps - 1);
      const SchemeEBounds b = gaussian_mi_oracle(p, s);
      boxes.push_back(RateRegion({{1.0, 0.0, std::max(b.r1(), 0.0)},
                                  {1.0, 1.0, std::max(b.sum(), 0.0)}}));
    }
    const SuperpositionBounds sb = superposition_bounds(p, alpha);
    boxes.push_back(RateRegion({{1.0, 0.0, std::max(sb.r1(), 0.0)},
                                {1.0, 1.0, std::max(sb.sum(), 0.0)}}));
  }
  return union_hull(boxes);
}

// Time sharing with per-phase power boosting; tau*cap(x/tau) -> 0 as tau -> 0.
inline RateRegion time_division_region(const GaussianChannelParams& p,
                                       int tau_steps = 1001) {
  if (tau_steps < 2) throw std::invalid_argument("tau_steps must be >= 2");
  p.validate();
  const double g1 = std::min(1.0, std::norm(p.b)) * p.p1;
  std::vector<RateRegion> boxes;
  boxes.reserve(static_cast<std::size_t>(tau_steps));
  for (int i = 0; i < tau_steps; ++i) {
    const double tau = static_cast<double>(i) / (tau_steps - 1);
    const double r1 = (tau > 0.0) ? tau * cap(g1 / tau) : 0.0;
    const double r2 = (tau < 1.0) ? (1.0 - tau) * cap(p.p2 / (1.0 - tau)) : 0.0;
    boxes.push_back(RateRegion({{1.0, 0.0, r1}, {0.0, 1.0, r2}}));
  }
  return union_hull(boxes);
}

inline bool is_very_strong(const GaussianChannelParams& p) {
  p.validate();
  const double babs = std::abs(p.b);
  return (std::norm(p.a) - 1.0) * p.p2 - (babs * babs - 1.0) * p.p1 -
             2.0 * std::abs(p.a - babs) * std::sqrt(p.p1 * p.p2) >=
         0.0;
}

inline bool is_pdc(const GaussianChannelParams& p) {
  p.validate();
  const double babs = std::abs(p.b);
  const double b2 = babs * babs;
  const double lhs = p.p2 * std::norm(1.0 - p.a * babs);
  const double base = 1.0 + p.p1 + std::norm(p.a) * p.p2;
  const double rhs1 = (b2 - 1.0) * base - p.p1 * p.p2 * std::norm(1.0 - p.a * babs);
  const double rhs2 =
      (b2 - 1.0) * (base + 2.0 * p.a.real() * std::sqrt(p.p1 * p.p2));
  return lhs >= rhs1 && lhs >= rhs2;
}

enum class RegimeLabel { VERY_STRONG, PDC, BOTH, GAP_ONLY };

inline RegimeLabel regime_classify(const GaussianChannelParams& p) {
  const bool vsi = is_very_strong(p);
  const bool pdc = is_pdc(p);
  if (vsi && pdc) return RegimeLabel::BOTH;
  if (vsi) return RegimeLabel::VERY_STRONG;
  if (pdc) return RegimeLabel::PDC;
  return RegimeLabel::GAP_ONLY;
}

inline const char* regime_name(RegimeLabel label) {
  switch (label) {
    case RegimeLabel::VERY_STRONG: return "VERY_STRONG";
    case RegimeLabel::PDC: return "PDC";
    case RegimeLabel::BOTH: return "BOTH";
    case RegimeLabel::GAP_ONLY: return "GAP_ONLY";
  }
  return "GAP_ONLY";
}

}  // namespace ccm::gaussian

#endif  // CCM_GAUSSIAN_HPP
