#ifndef CCM_DMC_HPP
#define CCM_DMC_HPP

// Discrete memoryless two-receiver channel with a common cognitive message:
// entropy/mutual-information evaluation on finite joint distributions, the
// outer bound, the five-line inner bound, the semi-deterministic capacity
// formulas, and exhaustive simplex-grid enumeration of input distributions.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "ccm/region.hpp"

namespace ccm::dmc {

inline constexpr double kMassTol = 1e-12;
inline constexpr std::uint64_t kGridGuard = 10'000'000;

inline double log2_safe(double x) { return std::log2(x); }

// Probability tensor over an ordered list of named finite variables.
class JointDistribution {
 public:
  JointDistribution(std::vector<std::string> names, std::vector<std::size_t> sizes,
                    std::vector<double> table)
      : names_(std::move(names)), sizes_(std::move(sizes)), table_(std::move(table)) {
    if (names_.size() != sizes_.size()) {
      throw std::invalid_argument("names/sizes length mismatch");
    }
    std::size_t total = 1;
    for (std::size_t s : sizes_) total *= s;
    if (table_.size() != total) throw std::invalid_argument("table size mismatch");
    double mass = 0.0;
    for (double p : table_) {
      if (p < -kMassTol || p > 1.0 + kMassTol) {
        throw std::invalid_argument("probability out of [0,1]");
      }
      mass += p;
    }
    if (std::abs(mass - 1.0) > 1e-9) {
      throw std::invalid_argument("total mass differs from 1");
    }
  }

  const std::vector<std::string>& names() const { return names_; }
  const std::vector<std::size_t>& sizes() const { return sizes_; }
  const std::vector<double>& table() const { return table_; }

  std::size_t index_of(const std::string& name) const {
    const auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) throw std::invalid_argument("unknown variable " + name);
    return static_cast<std::size_t>(it - names_.begin());
  }

  // Entropy (bits) of the marginal over the named group.
  double entropy(const std::vector<std::string>& group) const {
    std::vector<std::size_t> axes;
    axes.reserve(group.size());
    for (const std::string& g : group) axes.push_back(index_of(g));
    std::size_t msize = 1;
    for (std::size_t a : axes) msize *= sizes_[a];
    std::vector<double> marg(msize, 0.0);
    std::vector<std::size_t> idx(sizes_.size(), 0);
    for (std::size_t flat = 0; flat < table_.size(); ++flat) {
      std::size_t m = 0;
      for (std::size_t a : axes) m = m * sizes_[a] + idx[a];
      marg[m] += table_[flat];
      for (std::size_t d = sizes_.size(); d-- > 0;) {
        if (++idx[d] < sizes_[d]) break;
        idx[d] = 0;
      }
    }
    double h = 0.0;
    for (double p : marg) {
      if (p > 0.0) h -= p * log2_safe(p);
    }
    return h;
  }

 private:
  std::vector<std::string> names_;
  std::vector<std::size_t> sizes_;
  std::vector<double> table_;
};

// I(A;B|C) = H(A,C) + H(B,C) - H(A,B,C) - H(C), clamped to >= 0.
inline double cond_mutual_information(const JointDistribution& joint,
                                      const std::vector<std::string>& group_a,
                                      const std::vector<std::string>& group_b,
                                      const std::vector<std::string>& group_c = {}) {
  auto join = [](std::vector<std::string> x, const std::vector<std::string>& y) {
    x.insert(x.end(), y.begin(), y.end());
    return x;
  };
  const double v = joint.entropy(join(group_a, group_c)) +
                   joint.entropy(join(group_b, group_c)) -
                   joint.entropy(join(join(group_a, group_b), group_c)) -
                   joint.entropy(group_c);
  return std::max(v, 0.0);
}

inline double cond_entropy(const JointDistribution& joint,
                           const std::vector<std::string>& group,
                           const std::vector<std::string>& given) {
  std::vector<std::string> both = group;
  both.insert(both.end(), given.begin(), given.end());
  return joint.entropy(both) - joint.entropy(given);
}

// Finite-alphabet transition probability P(y1, y2 | x1, x2).
struct Dmc {
  std::size_t nx1 = 0, nx2 = 0, ny1 = 0, ny2 = 0;
  std::vector<double> transition;  // [x1][x2][y1][y2]

  Dmc(std::size_t x1, std::size_t x2, std::size_t y1, std::size_t y2,
      std::vector<double> p)
      : nx1(x1), nx2(x2), ny1(y1), ny2(y2), transition(std::move(p)) {
    if (transition.size() != nx1 * nx2 * ny1 * ny2) {
      throw std::invalid_argument("transition tensor size mismatch");
    }
    for (std::size_t a = 0; a < nx1; ++a) {
      for (std::size_t b = 0; b < nx2; ++b) {
        double row = 0.0;
        for (std::size_t c = 0; c < ny1; ++c) {
          for (std::size_t d = 0; d < ny2; ++d) {
            const double v = at(a, b, c, d);
            if (v < -kMassTol || v > 1.0 + kMassTol) {
              throw std::invalid_argument("transition probability out of [0,1]");
            }
            row += v;
          }
        }
        if (std::abs(row - 1.0) > kMassTol) {
          throw std::invalid_argument("conditional slice does not sum to 1");
        }
      }
    }
  }

  double at(std::size_t x1, std::size_t x2, std::size_t y1, std::size_t y2) const {
    return transition[((x1 * nx2 + x2) * ny1 + y1) * ny2 + y2];
  }

  double marginal_y1(std::size_t x1, std::size_t x2, std::size_t y1) const {
    double p = 0.0;
    for (std::size_t y2 = 0; y2 < ny2; ++y2) p += at(x1, x2, y1, y2);
    return p;
  }
};

// Joint law of (X1, X2, Y1, Y2) under input distribution x transition.
inline JointDistribution channel_joint(const Dmc& ch, const std::vector<double>& input) {
  if (input.size() != ch.nx1 * ch.nx2) {
    throw std::invalid_argument("input distribution dimension mismatch");
  }
  std::vector<double> table;
  table.reserve(input.size() * ch.ny1 * ch.ny2);
  for (std::size_t x1 = 0; x1 < ch.nx1; ++x1) {
    for (std::size_t x2 = 0; x2 < ch.nx2; ++x2) {
      const double pin = input[x1 * ch.nx2 + x2];
      for (std::size_t y1 = 0; y1 < ch.ny1; ++y1) {
        for (std::size_t y2 = 0; y2 < ch.ny2; ++y2) {
          table.push_back(pin * ch.at(x1, x2, y1, y2));
        }
      }
    }
  }
  return JointDistribution({"X1", "X2", "Y1", "Y2"},
                           {ch.nx1, ch.nx2, ch.ny1, ch.ny2}, std::move(table));
}

// The three outer-bound right-hand sides for one input distribution.
struct BoundTriple {
  double r1_y1 = 0.0;   // I(Y1;X1|X2)
  double r1_y2 = 0.0;   // I(Y2;X1|X2)
  double sum_y2 = 0.0;  // I(Y2;X1,X2)
};

inline BoundTriple outer_bound_point(const Dmc& ch, const std::vector<double>& input) {
  const JointDistribution j = channel_joint(ch, input);
  return {cond_mutual_information(j, {"Y1"}, {"X1"}, {"X2"}),
          cond_mutual_information(j, {"Y2"}, {"X1"}, {"X2"}),
          cond_mutual_information(j, {"Y2"}, {"X1", "X2"})};
}

inline RateRegion triple_region(const BoundTriple& t) {
  return RateRegion({{1.0, 0.0, t.r1_y1}, {1.0, 0.0, t.r1_y2}, {1.0, 1.0, t.sum_y2}});
}

inline std::uint64_t composition_count(std::uint64_t n, std::uint64_t k) {
  // C(n + k - 1, k - 1), saturating at the guard.
  std::uint64_t c = 1;
  for (std::uint64_t i = 1; i < k; ++i) {
    c = c * (n + i) / i;
    if (c > kGridGuard * 16) return c;
  }
  return c;
}

// Enumerates all distributions with denominator `grid_steps` on a simplex of
// `cells` cells; exact rationals evaluated in floating point at the end.
inline void for_each_grid_distribution(
    std::size_t cells, unsigned grid_steps,
    const std::function<void(const std::vector<double>&)>& fn) {
  if (grid_steps == 0) throw std::invalid_argument("grid_steps must be positive");
  if (composition_count(grid_steps, cells) > kGridGuard) {
    throw std::runtime_error("grid too fine: enumeration guard exceeded, coarsen grid");
  }
  std::vector<unsigned> counts(cells, 0);
  std::vector<double> probs(cells, 0.0);
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t cell,
                                                       unsigned remaining) {
    if (cell + 1 == cells) {
      counts[cell] = remaining;
      for (std::size_t i = 0; i < cells; ++i) {
        probs[i] = static_cast<double>(counts[i]) / grid_steps;
      }
      fn(probs);
      return;
    }
    for (unsigned c = 0; c <= remaining; ++c) {
      counts[cell] = c;
      rec(cell + 1, remaining - c);
    }
  };
  rec(0, grid_steps);
}

inline RateRegion outer_bound_region(const Dmc& ch, unsigned grid_steps) {
  std::vector<RateRegion> boxes;
  for_each_grid_distribution(ch.nx1 * ch.nx2, grid_steps,
                             [&](const std::vector<double>& input) {
                               boxes.push_back(triple_region(outer_bound_point(ch, input)));
                             });
  return union_hull(boxes);
}

inline bool is_semideterministic(const Dmc& ch) {
  for (std::size_t x1 = 0; x1 < ch.nx1; ++x1) {
    for (std::size_t x2 = 0; x2 < ch.nx2; ++x2) {
      for (std::size_t y1 = 0; y1 < ch.ny1; ++y1) {
        const double p = ch.marginal_y1(x1, x2, y1);
        if (p > kMassTol && p < 1.0 - kMassTol) return false;
      }
    }
  }
  return true;
}

// Grid-level certificate for I(X1;Y1|X2) <= I(X1;Y2|X2); evidence only, not a
// proof over all distributions.
inline bool is_strong_interference(const Dmc& ch, unsigned grid_steps) {
  bool holds = true;
  for_each_grid_distribution(ch.nx1 * ch.nx2, grid_steps,
                             [&](const std::vector<double>& input) {
                               if (!holds) return;
                               const BoundTriple t = outer_bound_point(ch, input);
                               if (t.r1_y1 > t.r1_y2 + kMassTol) holds = false;
                             });
  return holds;
}

// Joint law of (U1c, U2c, X1, X2, Y1, Y2) under auxiliary joint x transition.
inline JointDistribution aux_channel_joint(const Dmc& ch, const JointDistribution& aux) {
  const std::vector<std::string> want = {"U1c", "U2c", "X1", "X2"};
  if (aux.names() != want) {
    throw std::invalid_argument("auxiliary joint must be over (U1c, U2c, X1, X2)");
  }
  const std::size_t nu1 = aux.sizes()[0];
  const std::size_t nu2 = aux.sizes()[1];
  if (aux.sizes()[2] != ch.nx1 || aux.sizes()[3] != ch.nx2) {
    throw std::invalid_argument("auxiliary joint input alphabets mismatch channel");
  }
  std::vector<double> table;
  table.reserve(aux.table().size() * ch.ny1 * ch.ny2);
  std::size_t flat = 0;
  for (std::size_t u1 = 0; u1 < nu1; ++u1) {
    for (std::size_t u2 = 0; u2 < nu2; ++u2) {
      for (std::size_t x1 = 0; x1 < ch.nx1; ++x1) {
        for (std::size_t x2 = 0; x2 < ch.nx2; ++x2, ++flat) {
          const double pa = aux.table()[flat];
          for (std::size_t y1 = 0; y1 < ch.ny1; ++y1) {
            for (std::size_t y2 = 0; y2 < ch.ny2; ++y2) {
              table.push_back(pa * ch.at(x1, x2, y1, y2));
            }
          }
        }
      }
    }
  }
  return JointDistribution({"U1c", "U2c", "X1", "X2", "Y1", "Y2"},
                           {nu1, nu2, ch.nx1, ch.nx2, ch.ny1, ch.ny2},
                           std::move(table));
}

// The five inner-bound right-hand sides, in printed order: R1 via Y1 with the
// binning penalty, R1 via Y2, sum via Y1+Y2, sum via Y2, and 2R1+R2.
inline std::vector<double> inner_bound_point(const Dmc& ch, const JointDistribution& aux) {
  const JointDistribution j = aux_channel_joint(ch, aux);
  const double pen = cond_mutual_information(j, {"U1c"}, {"X2"}, {"U2c"});
  return {
      cond_mutual_information(j, {"Y1"}, {"U1c"}, {"U2c"}) - pen,
      cond_mutual_information(j, {"Y2"}, {"X1"}, {"X2", "U2c"}),
      cond_mutual_information(j, {"Y1"}, {"U1c", "U2c"}) +
          cond_mutual_information(j, {"Y2"}, {"X2"}, {"U1c", "U2c"}),
      cond_mutual_information(j, {"Y2"}, {"X1", "X2"}),
      cond_mutual_information(j, {"Y1"}, {"U1c", "U2c"}) +
          cond_mutual_information(j, {"Y2"}, {"X1", "X2"}, {"U2c"}) - pen,
  };
}

inline RateRegion semidet_capacity_region(const Dmc& ch, unsigned grid_steps) {
  if (!is_semideterministic(ch)) {
    throw std::runtime_error("channel is not semi-deterministic");
  }
  std::vector<RateRegion> boxes;
  for_each_grid_distribution(
      ch.nx1 * ch.nx2, grid_steps, [&](const std::vector<double>& input) {
        const JointDistribution j = channel_joint(ch, input);
        const double h = cond_entropy(j, {"Y1"}, {"X2"});
        const double r1y2 = cond_mutual_information(j, {"Y2"}, {"X1"}, {"X2"});
        const double sum = cond_mutual_information(j, {"Y2"}, {"X1", "X2"});
        boxes.push_back(triple_region({h, r1y2, sum}));
      });
  return union_hull(boxes);
}

// Auxiliary joint realizing U2c constant and U1c = Y1 (possible because Y1 is
// a deterministic function of the inputs).
inline JointDistribution semidet_assignment(const Dmc& ch,
                                            const std::vector<double>& input) {
  std::vector<double> table(ch.ny1 * 1 * ch.nx1 * ch.nx2, 0.0);
  for (std::size_t u1 = 0; u1 < ch.ny1; ++u1) {
    for (std::size_t x1 = 0; x1 < ch.nx1; ++x1) {
      for (std::size_t x2 = 0; x2 < ch.nx2; ++x2) {
        table[(u1 * ch.nx1 + x1) * ch.nx2 + x2] =
            input[x1 * ch.nx2 + x2] * ch.marginal_y1(x1, x2, u1);
      }
    }
  }
  return JointDistribution({"U1c", "U2c", "X1", "X2"}, {ch.ny1, 1, ch.nx1, ch.nx2},
                           std::move(table));
}

struct SemidetReport {
  std::size_t total = 0;
  std::size_t passed = 0;
  double worst_deviation = 0.0;
};

// Checks, at every grid input distribution, that the U1c = Y1 assignment makes
// the scheme's R1 bound equal H(Y1|X2) and the active sum bound equal
// I(Y2;X1,X2), each within 1e-12.
inline SemidetReport verify_semidet(const Dmc& ch, unsigned grid_steps) {
  if (!is_semideterministic(ch)) {
    throw std::runtime_error("channel is not semi-deterministic");
  }
  SemidetReport report;
  for_each_grid_distribution(
      ch.nx1 * ch.nx2, grid_steps, [&](const std::vector<double>& input) {
        const std::vector<double> bounds =
            inner_bound_point(ch, semidet_assignment(ch, input));
        const JointDistribution j = channel_joint(ch, input);
        const double h = cond_entropy(j, {"Y1"}, {"X2"});
        const double sum = cond_mutual_information(j, {"Y2"}, {"X1", "X2"});
        const double dev_r1 = std::abs(bounds[0] - h);
        const double dev_sum = std::abs(std::min(bounds[2], bounds[3]) - sum);
        const double dev = std::max(dev_r1, dev_sum);
        report.total += 1;
        report.worst_deviation = std::max(report.worst_deviation, dev);
        if (dev < 1e-12) report.passed += 1;
      });
  return report;
}

}  // namespace ccm::dmc

#endif  // CCM_DMC_HPP
