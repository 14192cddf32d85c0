// Command-line front end: Gaussian region emission, the regime map, gap/factor
// sweeps, discrete-channel capacity regions, symbolic elimination, and the
// full verification suite. All outputs are written atomically; exit codes are
// 0 (success), 1 (check failure), 2 (usage or input error).

#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ccm/acceptance.hpp"
#include "ccm/dmc.hpp"
#include "ccm/fme.hpp"
#include "ccm/gaussian.hpp"
#include "ccm/io.hpp"
#include "ccm/region.hpp"
#include "ccm/sweep.hpp"

namespace {

using ccm::io::json;

json load_json(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot open " + path);
  try {
    return json::parse(is);
  } catch (const json::exception& e) {
    throw std::runtime_error("malformed JSON in " + path + ": " + e.what());
  }
}

void emit_region(const std::filesystem::path& dir, const std::string& stem,
                 const ccm::RateRegion& region, int frontier_points) {
  ccm::io::atomic_write(dir / (stem + ".json"),
                        ccm::io::region_to_json(region).dump(2) + "\n");
  ccm::io::atomic_write(dir / (stem + "_frontier.csv"),
                        ccm::io::frontier_csv(ccm::frontier(region, frontier_points)));
}

int cmd_gauss_region(const ccm::gaussian::GaussianChannelParams& p, int alpha_steps,
                     const std::string& out_dir) {
  p.validate();
  const std::filesystem::path dir(out_dir);
  emit_region(dir, "outer", ccm::gaussian::outer_region(p, alpha_steps), 201);
  emit_region(dir, "inner", ccm::gaussian::inner_region(p, alpha_steps), 201);
  emit_region(dir, "td", ccm::gaussian::time_division_region(p, alpha_steps), 201);
  std::printf("gauss-region: wrote outer/inner/td region JSON + frontier CSV to %s\n",
              dir.string().c_str());
  return 0;
}

int cmd_regime_map(double a_max, double b_max, int cells, double p1, double p2,
                   const std::string& out_dir) {
  const auto grid = ccm::sweep::regime_map(a_max, b_max, cells, p1, p2);
  const std::filesystem::path dir(out_dir);
  ccm::io::atomic_write(dir / "regime_map.csv", ccm::io::regime_map_csv(grid));
  ccm::io::atomic_write(dir / "regime_map.svg",
                        ccm::io::regime_map_svg(grid, cells, a_max, b_max));
  std::printf("regime-map: %d x %d cells written to %s\n", cells, cells,
              dir.string().c_str());
  return 0;
}

int cmd_gap_sweep(const std::string& spec_path, const std::string& out_dir) {
  const json spec = load_json(spec_path);
  auto list = [&](const char* key) {
    if (!spec.contains(key)) {
      throw std::runtime_error("malformed JSON in " + spec_path +
                               ": missing field \"" + key + "\"");
    }
    return spec.at(key).get<std::vector<double>>();
  };
  std::vector<ccm::gaussian::GaussianChannelParams> grid;
  for (double a : list("a")) {
    for (double b : list("b")) {
      for (double p1 : list("p1")) {
        for (double p2 : list("p2")) grid.push_back({a, b, p1, p2});
      }
    }
  }
  const int alpha_steps = spec.value("alpha_steps", 1001);
  const int tau_steps = spec.value("tau_steps", 1001);
  const auto result = ccm::sweep::gap_sweep(grid, alpha_steps, tau_steps);
  ccm::io::atomic_write(std::filesystem::path(out_dir) / "gap_sweep.csv",
                        ccm::sweep::gap_sweep_csv(result));
  std::printf("gap-sweep: %zu points, max gap %s bits, max ratio %s%s\n",
              grid.size(), ccm::io::fmt(result.max_gap_bits).c_str(),
              ccm::io::fmt(result.max_ratio).c_str(),
              result.all_contained ? "" : ", CONTAINMENT VIOLATED");
  return result.all_contained ? 0 : 1;
}

int cmd_dmc_capacity(const std::string& channel_path, unsigned grid, std::string mode,
                     const std::string& out_dir) {
  const ccm::dmc::Dmc ch = ccm::io::dmc_from_json(load_json(channel_path));
  const std::filesystem::path dir(out_dir);
  if (mode == "outer" || mode == "semidet") {
    const ccm::RateRegion region = mode == "outer"
                                       ? ccm::dmc::outer_bound_region(ch, grid)
                                       : ccm::dmc::semidet_capacity_region(ch, grid);
    emit_region(dir, mode, region, 101);
    std::printf("dmc-capacity: %s region written to %s\n", mode.c_str(),
                dir.string().c_str());
    return 0;
  }
  const ccm::dmc::SemidetReport rep = ccm::dmc::verify_semidet(ch, grid);
  const bool ok = rep.passed == rep.total && rep.worst_deviation < 1e-12;
  const json report = {{"total", rep.total},
                       {"passed", rep.passed},
                       {"worst_deviation", rep.worst_deviation},
                       {"ok", ok}};
  ccm::io::atomic_write(dir / "verify_report.json", report.dump(2) + "\n");
  std::printf("dmc-capacity: verify %zu/%zu grid points, worst deviation %s\n",
              rep.passed, rep.total, ccm::io::fmt(rep.worst_deviation).c_str());
  return ok ? 0 : 1;
}

int cmd_fme(const std::string& system_path, const std::string& eliminate_list,
            bool do_prune, const std::string& out_path) {
  ccm::fme::SymbolicSystem system =
      ccm::io::system_from_json(load_json(system_path));
  system = ccm::fme::apply_substitutions(system);
  std::stringstream vars(eliminate_list);
  std::string var;
  while (std::getline(vars, var, ',')) {
    if (!var.empty()) system = ccm::fme::eliminate(system, var);
  }
  if (do_prune) system = ccm::fme::prune(system);
  for (const auto& ineq : system.inequalities) {
    std::printf("%s\n", ineq.str().c_str());
  }
  if (!out_path.empty()) {
    ccm::io::atomic_write(out_path, ccm::io::system_to_json(system).dump(2) + "\n");
  }
  std::printf("fme: %zu inequalities\n", system.inequalities.size());
  return 0;
}

int cmd_verify_all(const std::string& out_path) {
  const auto results = ccm::acceptance::run_all();
  bool all = true;
  for (const auto& r : results) {
    std::printf("[%s] %-22s %s (%.1fs)\n", r.passed ? "PASS" : "FAIL",
                r.name.c_str(), r.detail.c_str(), r.seconds);
    all = all && r.passed;
  }
  ccm::io::atomic_write(out_path,
                        ccm::acceptance::report_json(results).dump(2) + "\n");
  std::printf("verify-all: %s, report at %s\n", all ? "all checks passed" : "FAILED",
              out_path.c_str());
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cognitive interference channel rate-region toolkit"};
  app.require_subcommand(1);

  // gauss-region
  auto* gauss = app.add_subcommand("gauss-region",
                                   "Outer/inner/time-division Gaussian regions");
  double a_re = 0.0, a_im = 0.0, b_re = 0.0, b_im = 0.0, p1 = 0.0, p2 = 0.0;
  int alpha_steps = 1001;
  std::string gauss_out = ".";
  gauss->add_option("--a-re", a_re)->required();
  gauss->add_option("--a-im", a_im);
  gauss->add_option("--b-re", b_re)->required();
  gauss->add_option("--b-im", b_im);
  gauss->add_option("--p1", p1)->required();
  gauss->add_option("--p2", p2)->required();
  gauss->add_option("--alpha-steps", alpha_steps);
  gauss->add_option("--out", gauss_out);

  // regime-map
  auto* rmap = app.add_subcommand("regime-map", "Regime labels over the (a,b) plane");
  double a_max = 3.0, b_max = 3.0, rp1 = 1.0, rp2 = 1.0;
  int cells = 60;
  std::string rmap_out = ".";
  rmap->add_option("--a-max", a_max);
  rmap->add_option("--b-max", b_max);
  rmap->add_option("--cells", cells);
  rmap->add_option("--p1", rp1)->required();
  rmap->add_option("--p2", rp2)->required();
  rmap->add_option("--out", rmap_out);

  // gap-sweep
  auto* gsweep = app.add_subcommand("gap-sweep", "Additive gap / factor sweep");
  std::string sweep_spec, sweep_out = ".";
  gsweep->add_option("--grid", sweep_spec)->required();
  gsweep->add_option("--out", sweep_out);

  // dmc-capacity
  auto* dcap = app.add_subcommand("dmc-capacity", "Discrete channel regions");
  std::string channel_path, mode = "outer", dmc_out = ".";
  unsigned grid_steps = 16;
  dcap->add_option("--channel", channel_path)->required();
  dcap->add_option("--grid", grid_steps);
  dcap->add_option("--mode", mode)
      ->check(CLI::IsMember({"outer", "semidet", "verify"}));
  dcap->add_option("--out", dmc_out);

  // fme
  auto* fme_cmd = app.add_subcommand("fme", "Symbolic rate-variable elimination");
  std::string system_path, eliminate_list, fme_out;
  bool do_prune = false;
  fme_cmd->add_option("--system", system_path)->required();
  fme_cmd->add_option("--eliminate", eliminate_list);
  fme_cmd->add_flag("--prune", do_prune);
  fme_cmd->add_option("--out", fme_out);

  // verify-all
  auto* vall = app.add_subcommand("verify-all", "Run every acceptance check");
  std::string report_out = "report.json";
  vall->add_option("--out", report_out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (gauss->parsed()) {
      return cmd_gauss_region({{a_re, a_im}, {b_re, b_im}, p1, p2}, alpha_steps,
                              gauss_out);
    }
    if (rmap->parsed()) return cmd_regime_map(a_max, b_max, cells, rp1, rp2, rmap_out);
    if (gsweep->parsed()) return cmd_gap_sweep(sweep_spec, sweep_out);
    if (dcap->parsed()) {
      return cmd_dmc_capacity(channel_path, grid_steps, mode, dmc_out);
    }
    if (fme_cmd->parsed()) {
      return cmd_fme(system_path, eliminate_list, do_prune, fme_out);
    }
    if (vall->parsed()) return cmd_verify_all(report_out);
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    const std::string what = e.what();
    std::fprintf(stderr, "error: %s\n", what.c_str());
    return what.rfind("malformed JSON", 0) == 0 || what.rfind("cannot open", 0) == 0
               ? 2
               : 1;
  }
  return 2;
}
