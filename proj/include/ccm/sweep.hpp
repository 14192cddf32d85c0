#ifndef CCM_SWEEP_HPP
#define CCM_SWEEP_HPP

// Sweep orchestration: parameter grids for the gap/factor studies and the
// regime map. Sweeps run in parallel with a deterministic ordered merge; the
// CCM_THREADS environment variable caps the worker count.

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <string>
#include <thread>
#include <vector>

#include "ccm/gaussian.hpp"
#include "ccm/io.hpp"
#include "ccm/region.hpp"

namespace ccm::sweep {

inline unsigned thread_cap() {
  unsigned n = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("CCM_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v >= 1) n = std::min<unsigned>(n, static_cast<unsigned>(v));
  }
  return n;
}

// Index-sharded parallel loop; results must be written to slot i only.
inline void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body) {
  const unsigned workers = std::min<std::size_t>(thread_cap(), count ? count : 1);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < count; i += workers) body(i);
    });
  }
  for (std::thread& t : pool) t.join();
}

struct GapRow {
  gaussian::GaussianChannelParams params;
  double gap_bits = 0.0;
  double ratio = 0.0;
  bool containment_ok = false;
};

struct GapSweepResult {
  std::vector<GapRow> rows;
  double max_gap_bits = 0.0;
  double max_ratio = 1.0;
  std::size_t argmax_gap = 0;
  std::size_t argmax_ratio = 0;
  bool all_contained = true;
};

// Gap against the hull of every implemented achievable region plus time
// division; the ratio is pinned to the Costa-scaled scheme + time division.
inline GapRow evaluate_gap_point(const gaussian::GaussianChannelParams& p,
                                 int alpha_steps, int tau_steps) {
  GapRow row;
  row.params = p;
  const RateRegion outer = gaussian::outer_region(p, alpha_steps);
  const RateRegion inner = gaussian::inner_region(p, alpha_steps);
  const RateRegion td = gaussian::time_division_region(p, tau_steps);
  const RateRegion best =
      union_hull({gaussian::best_inner_region(p, alpha_steps), td});
  row.containment_ok = contains(outer, inner, 1e-9) && contains(outer, best, 1e-9);
  row.gap_bits = max_gap(outer, best);
  row.ratio = max_ratio(outer, union_hull({inner, td}));
  return row;
}

inline GapSweepResult gap_sweep(const std::vector<gaussian::GaussianChannelParams>& grid,
                                int alpha_steps = 1001, int tau_steps = 1001) {
  GapSweepResult result;
  result.rows.resize(grid.size());
  parallel_for(grid.size(), [&](std::size_t i) {
    result.rows[i] = evaluate_gap_point(grid[i], alpha_steps, tau_steps);
  });
  for (std::size_t i = 0; i < result.rows.size(); ++i) {
    const GapRow& r = result.rows[i];
    if (r.gap_bits > result.max_gap_bits) {
      result.max_gap_bits = r.gap_bits;
      result.argmax_gap = i;
    }
    if (r.ratio > result.max_ratio) {
      result.max_ratio = r.ratio;
      result.argmax_ratio = i;
    }
    result.all_contained = result.all_contained && r.containment_ok;
  }
  return result;
}

inline std::string gap_sweep_csv(const GapSweepResult& r) {
  std::ostringstream os;
  os << "a_re,a_im,b_re,b_im,p1,p2,gap_bits,ratio\n";
  for (const GapRow& row : r.rows) {
    os << io::fmt(row.params.a.real()) << "," << io::fmt(row.params.a.imag()) << ","
       << io::fmt(row.params.b.real()) << "," << io::fmt(row.params.b.imag()) << ","
       << io::fmt(row.params.p1) << "," << io::fmt(row.params.p2) << ","
       << io::fmt(row.gap_bits) << "," << io::fmt(row.ratio) << "\n";
  }
  os << "max,,,,,," << io::fmt(r.max_gap_bits) << "," << io::fmt(r.max_ratio) << "\n";
  return os.str();
}

// Cell-center sampling of the (a, b) plane at fixed powers.
inline std::vector<io::RegimeCell> regime_map(double a_max, double b_max, int cells,
                                              double p1, double p2) {
  if (cells < 1) throw std::invalid_argument("cells must be >= 1");
  std::vector<io::RegimeCell> out(static_cast<std::size_t>(cells) * cells);
  parallel_for(out.size(), [&](std::size_t i) {
    const int ia = static_cast<int>(i) % cells;
    const int ib = static_cast<int>(i) / cells;
    const double a = a_max * (ia + 0.5) / cells;
    const double b = b_max * (ib + 0.5) / cells;
    out[i] = {a, b, gaussian::regime_classify({a, b, p1, p2})};
  });
  return out;
}

}  // namespace ccm::sweep

#endif  // CCM_SWEEP_HPP
