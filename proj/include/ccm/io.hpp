#ifndef CCM_IO_HPP
#define CCM_IO_HPP

// Serialization: rate regions and symbolic systems to/from JSON, frontiers to
// CSV, the regime map to CSV + SVG. All file emission is atomic (temp file in
// the target directory, then rename). Numbers print with 12 significant
// digits so cross-language reproduction stays auditable.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "ccm/dmc.hpp"
#include "ccm/fme.hpp"
#include "ccm/gaussian.hpp"
#include "ccm/region.hpp"

namespace ccm::io {

using nlohmann::json;

inline std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

inline void atomic_write(const std::filesystem::path& path, const std::string& content) {
  const std::filesystem::path dir =
      path.has_parent_path() ? path.parent_path() : std::filesystem::path(".");
  std::filesystem::create_directories(dir);
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
    if (!os) throw std::runtime_error("cannot open " + tmp.string());
    os << content;
    if (!os.flush()) throw std::runtime_error("write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

// ---- rate regions -----------------------------------------------------------

inline json region_to_json(const RateRegion& r) {
  json hs = json::array();
  for (const Halfspace& h : r.halfspaces()) {
    hs.push_back({{"c1", h.c1}, {"c2", h.c2}, {"bound", h.bound}});
  }
  return {{"halfspaces", hs}};
}

inline RateRegion region_from_json(const json& j) {
  std::vector<Halfspace> hs;
  for (const json& h : j.at("halfspaces")) {
    hs.push_back({h.at("c1").get<double>(), h.at("c2").get<double>(),
                  h.at("bound").get<double>()});
  }
  return RateRegion(std::move(hs));
}

inline std::string frontier_csv(const std::vector<RatePoint>& pts) {
  std::ostringstream os;
  os << "r1,r2\n";
  for (const RatePoint& p : pts) os << fmt(p.r1) << "," << fmt(p.r2) << "\n";
  return os.str();
}

// ---- symbolic systems -------------------------------------------------------

inline json system_to_json(const fme::SymbolicSystem& s) {
  json ineqs = json::array();
  for (const fme::SymbolicInequality& i : s.inequalities) {
    json rates = json::object();
    for (const auto& [k, v] : i.rates) rates[k] = v;
    json rhs = json::object();
    for (const auto& [k, v] : i.rhs.coeffs) rhs[k] = v;
    ineqs.push_back({{"rates", rates}, {"rhs", rhs}});
  }
  json subs = json::array();
  for (const fme::Substitution& sub : s.substitutions) {
    subs.push_back({{"introduced", sub.introduced}, {"parts", sub.parts}});
  }
  return {{"variables", s.variables}, {"inequalities", ineqs}, {"substitutions", subs}};
}

inline fme::SymbolicSystem system_from_json(const json& j) {
  fme::SymbolicSystem s;
  s.variables = j.at("variables").get<std::vector<std::string>>();
  for (const json& i : j.at("inequalities")) {
    fme::SymbolicInequality ineq;
    for (const auto& [k, v] : i.at("rates").items()) {
      ineq.rates[k] = v.get<long long>();
    }
    if (i.contains("rhs")) {
      for (const auto& [k, v] : i.at("rhs").items()) {
        ineq.rhs.coeffs[k] = v.get<long long>();
      }
    }
    ineq.normalize();
    s.inequalities.push_back(std::move(ineq));
  }
  if (j.contains("substitutions")) {
    for (const json& sub : j.at("substitutions")) {
      s.substitutions.push_back({sub.at("introduced").get<std::string>(),
                                 sub.at("parts").get<std::vector<std::string>>()});
    }
  }
  return s;
}

// ---- discrete channels ------------------------------------------------------

// {"sizes": [|X1|,|X2|,|Y1|,|Y2|], "transition": nested arrays [x1][x2][y1][y2]}
inline dmc::Dmc dmc_from_json(const json& j) {
  const auto sizes = j.at("sizes").get<std::vector<std::size_t>>();
  if (sizes.size() != 4) throw std::invalid_argument("sizes must have 4 entries");
  std::vector<double> flat;
  flat.reserve(sizes[0] * sizes[1] * sizes[2] * sizes[3]);
  const json& t = j.at("transition");
  for (const json& a : t) {
    for (const json& b : a) {
      for (const json& c : b) {
        for (const json& d : c) flat.push_back(d.get<double>());
      }
    }
  }
  return dmc::Dmc(sizes[0], sizes[1], sizes[2], sizes[3], std::move(flat));
}

inline json dmc_to_json(const dmc::Dmc& ch) {
  json t = json::array();
  for (std::size_t x1 = 0; x1 < ch.nx1; ++x1) {
    json a = json::array();
    for (std::size_t x2 = 0; x2 < ch.nx2; ++x2) {
      json b = json::array();
      for (std::size_t y1 = 0; y1 < ch.ny1; ++y1) {
        json c = json::array();
        for (std::size_t y2 = 0; y2 < ch.ny2; ++y2) c.push_back(ch.at(x1, x2, y1, y2));
        b.push_back(c);
      }
      a.push_back(b);
    }
    t.push_back(a);
  }
  return {{"sizes", {ch.nx1, ch.nx2, ch.ny1, ch.ny2}}, {"transition", t}};
}

// ---- regime map -------------------------------------------------------------

struct RegimeCell {
  double a = 0.0;
  double b = 0.0;
  gaussian::RegimeLabel label = gaussian::RegimeLabel::GAP_ONLY;
};

inline std::string regime_map_csv(const std::vector<RegimeCell>& cells) {
  std::ostringstream os;
  os << "a,b,label\n";
  for (const RegimeCell& c : cells) {
    os << fmt(c.a) << "," << fmt(c.b) << "," << gaussian::regime_name(c.label) << "\n";
  }
  return os.str();
}

// Direct rectangle rendering, one cell per rectangle plus a legend.
inline std::string regime_map_svg(const std::vector<RegimeCell>& cells, int n,
                                  double a_max, double b_max) {
  const int px = 10;
  const int w = n * px;
  const int h = n * px;
  const int legend_h = 24;
  auto color = [](gaussian::RegimeLabel l) {
    switch (l) {
      case gaussian::RegimeLabel::VERY_STRONG: return "#2e8b57";
      case gaussian::RegimeLabel::PDC: return "#4169e1";
      case gaussian::RegimeLabel::BOTH: return "#20b2aa";
      case gaussian::RegimeLabel::GAP_ONLY: return "#c0c0c0";
    }
    return "#c0c0c0";
  };
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\""
     << h + legend_h << "\">\n";
  for (const RegimeCell& c : cells) {
    const int ix = static_cast<int>(c.a / a_max * n - 0.5 + 1e-9);
    const int iy = static_cast<int>(c.b / b_max * n - 0.5 + 1e-9);
    os << "<rect x=\"" << ix * px << "\" y=\"" << (n - 1 - iy) * px << "\" width=\""
       << px << "\" height=\"" << px << "\" fill=\"" << color(c.label) << "\"/>\n";
  }
  const char* names[] = {"VSI", "PDC", "BOTH", "GAP_ONLY"};
  const gaussian::RegimeLabel labels[] = {
      gaussian::RegimeLabel::VERY_STRONG, gaussian::RegimeLabel::PDC,
      gaussian::RegimeLabel::BOTH, gaussian::RegimeLabel::GAP_ONLY};
  for (int i = 0; i < 4; ++i) {
    os << "<rect x=\"" << 4 + i * 90 << "\" y=\"" << h + 6 << "\" width=\"12\" height=\"12\" fill=\""
       << color(labels[i]) << "\"/>\n"
       << "<text x=\"" << 20 + i * 90 << "\" y=\"" << h + 16
       << "\" font-size=\"11\" font-family=\"sans-serif\">" << names[i] << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace ccm::io

#endif  // CCM_IO_HPP
