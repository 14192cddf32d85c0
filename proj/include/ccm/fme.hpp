#ifndef CCM_FME_HPP
#define CCM_FME_HPP

// Symbolic Fourier-Motzkin elimination over rate variables. Right-hand sides
// are integer combinations of opaque information-term atoms such as
// "I(Y1;U1c|U2c)"; no chain-rule or entropy identities are applied. The canned
// pre-elimination system of the common-cognitive-message scheme lives in
// th2_pre_system(), and derive_th2() mechanically projects it onto (R1, R2).

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace ccm::fme {

// Canonical integer combination of labeled terms: zero coefficients removed,
// deterministic ordering by label (std::map).
struct LinearExpr {
  std::map<std::string, long long> coeffs;

  LinearExpr() = default;
  explicit LinearExpr(std::map<std::string, long long> c) : coeffs(std::move(c)) {
    normalize();
  }

  static LinearExpr atom(const std::string& label, long long coeff = 1) {
    LinearExpr e;
    if (coeff != 0) e.coeffs[label] = coeff;
    return e;
  }

  void normalize() {
    for (auto it = coeffs.begin(); it != coeffs.end();) {
      it = (it->second == 0) ? coeffs.erase(it) : std::next(it);
    }
  }

  bool zero() const { return coeffs.empty(); }

  LinearExpr& operator+=(const LinearExpr& o) {
    for (const auto& [k, v] : o.coeffs) coeffs[k] += v;
    normalize();
    return *this;
  }
  LinearExpr& operator-=(const LinearExpr& o) {
    for (const auto& [k, v] : o.coeffs) coeffs[k] -= v;
    normalize();
    return *this;
  }
  LinearExpr& operator*=(long long s) {
    if (s == 0) {
      coeffs.clear();
    } else {
      for (auto& [k, v] : coeffs) v *= s;
    }
    return *this;
  }
  friend LinearExpr operator+(LinearExpr a, const LinearExpr& b) { return a += b; }
  friend LinearExpr operator-(LinearExpr a, const LinearExpr& b) { return a -= b; }
  friend LinearExpr operator*(LinearExpr a, long long s) { return a *= s; }
  friend bool operator==(const LinearExpr& a, const LinearExpr& b) {
    return a.coeffs == b.coeffs;
  }
  friend bool operator<(const LinearExpr& a, const LinearExpr& b) {
    return a.coeffs < b.coeffs;
  }

  std::string str() const {
    if (coeffs.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, v] : coeffs) {
      if (v < 0) {
        os << (first ? "-" : " - ");
      } else if (!first) {
        os << " + ";
      }
      const long long mag = std::llabs(v);
      if (mag != 1) os << mag << "*";
      os << k;
      first = false;
    }
    return os.str();
  }
};

// sum_i rates[var_i]*var_i <= rhs
struct SymbolicInequality {
  std::map<std::string, long long> rates;
  LinearExpr rhs;

  void normalize() {
    for (auto it = rates.begin(); it != rates.end();) {
      it = (it->second == 0) ? rates.erase(it) : std::next(it);
    }
    long long g = 0;
    for (const auto& [k, v] : rates) g = std::gcd(g, std::llabs(v));
    for (const auto& [k, v] : rhs.coeffs) g = std::gcd(g, std::llabs(v));
    if (g > 1) {
      for (auto& [k, v] : rates) v /= g;
      for (auto& [k, v] : rhs.coeffs) v /= g;
    }
  }

  friend bool operator==(const SymbolicInequality& a, const SymbolicInequality& b) {
    return a.rates == b.rates && a.rhs == b.rhs;
  }
  friend bool operator<(const SymbolicInequality& a, const SymbolicInequality& b) {
    if (a.rates != b.rates) return a.rates < b.rates;
    return a.rhs < b.rhs;
  }

  std::string str() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, v] : rates) {
      if (v < 0) {
        os << (first ? "-" : " - ");
      } else if (!first) {
        os << " + ";
      }
      const long long mag = std::llabs(v);
      if (mag != 1) os << mag << "*";
      os << k;
      first = false;
    }
    if (first) os << "0";
    os << " <= " << rhs.str();
    return os.str();
  }
};

// introduced = sum of parts; parts.back() is the variable rewritten away.
struct Substitution {
  std::string introduced;
  std::vector<std::string> parts;
};

struct SymbolicSystem {
  std::vector<std::string> variables;
  std::vector<SymbolicInequality> inequalities;
  std::vector<Substitution> substitutions;

  bool has_variable(const std::string& v) const {
    return std::find(variables.begin(), variables.end(), v) != variables.end();
  }
};

// Rewrites the system in terms of the introduced variables: for each equality
// N = p_1 + ... + p_k, the variable p_k is replaced by N - p_1 - ... - p_{k-1}.
inline SymbolicSystem apply_substitutions(const SymbolicSystem& system) {
  SymbolicSystem out = system;
  std::vector<std::string> replaced;
  for (const Substitution& sub : out.substitutions) {
    if (sub.parts.empty()) throw std::invalid_argument("substitution with no parts");
    for (const std::string& p : sub.parts) {
      if (std::find(replaced.begin(), replaced.end(), p) != replaced.end() ||
          p == sub.introduced) {
        throw std::runtime_error("cyclic substitution involving " + p);
      }
    }
    const std::string& gone = sub.parts.back();
    for (SymbolicInequality& ineq : out.inequalities) {
      const auto it = ineq.rates.find(gone);
      if (it == ineq.rates.end()) continue;
      const long long c = it->second;
      ineq.rates.erase(it);
      ineq.rates[sub.introduced] += c;
      for (std::size_t i = 0; i + 1 < sub.parts.size(); ++i) {
        ineq.rates[sub.parts[i]] -= c;
      }
      ineq.normalize();
    }
    replaced.push_back(gone);
    out.variables.erase(
        std::remove(out.variables.begin(), out.variables.end(), gone),
        out.variables.end());
    if (!out.has_variable(sub.introduced)) out.variables.push_back(sub.introduced);
  }
  out.substitutions.clear();
  return out;
}

// Standard Fourier-Motzkin step: pair every upper bound on `var` with every
// lower bound, cancel `var`, pass everything else through.
inline SymbolicSystem eliminate(const SymbolicSystem& system, const std::string& var) {
  if (!system.has_variable(var)) {
    throw std::invalid_argument("unknown variable " + var);
  }
  std::vector<SymbolicInequality> uppers, lowers, rest;
  for (const SymbolicInequality& ineq : system.inequalities) {
    const auto it = ineq.rates.find(var);
    if (it == ineq.rates.end() || it->second == 0) {
      rest.push_back(ineq);
    } else if (it->second > 0) {
      uppers.push_back(ineq);
    } else {
      lowers.push_back(ineq);
    }
  }
  SymbolicSystem out;
  out.variables = system.variables;
  out.variables.erase(std::remove(out.variables.begin(), out.variables.end(), var),
                      out.variables.end());
  out.inequalities = std::move(rest);
  for (const SymbolicInequality& up : uppers) {
    const long long cu = up.rates.at(var);
    for (const SymbolicInequality& lo : lowers) {
      const long long cl = -lo.rates.at(var);
      SymbolicInequality combo;
      for (const auto& [k, v] : up.rates) combo.rates[k] += cl * v;
      for (const auto& [k, v] : lo.rates) combo.rates[k] += cu * v;
      combo.rates.erase(var);
      combo.rhs = up.rhs * cl + lo.rhs * cu;
      combo.normalize();
      out.inequalities.push_back(std::move(combo));
    }
  }
  return out;
}

// Redundancy removal:
//  (i)   duplicates,
//  (ii)  P with rates(P) = rates(Q) + rates(R) and rhs(P) = rhs(Q) + rhs(R),
//  (iii) P dominated by Q with equal rates when rhs(P) - rhs(Q) is assumed
//        nonnegative,
//  (iv)  pure atom constraints 0 <= E with E assumed nonnegative (or E = 0).
inline SymbolicSystem prune(const SymbolicSystem& system,
                            const std::vector<LinearExpr>& assumed_nonneg = {}) {
  auto is_nonneg = [&](const LinearExpr& e) {
    if (e.zero()) return true;
    return std::find(assumed_nonneg.begin(), assumed_nonneg.end(), e) !=
           assumed_nonneg.end();
  };
  std::vector<SymbolicInequality> kept;
  for (const SymbolicInequality& ineq : system.inequalities) {
    SymbolicInequality c = ineq;
    c.normalize();
    if (c.rates.empty() && is_nonneg(c.rhs)) continue;
    if (std::find(kept.begin(), kept.end(), c) == kept.end()) kept.push_back(c);
  }
  std::vector<bool> drop(kept.size(), false);
  for (std::size_t p = 0; p < kept.size(); ++p) {
    for (std::size_t q = 0; q < kept.size() && !drop[p]; ++q) {
      if (q == p || drop[q]) continue;
      if (kept[q].rates == kept[p].rates && is_nonneg(kept[p].rhs - kept[q].rhs) &&
          !(kept[p].rhs == kept[q].rhs)) {
        drop[p] = true;  // rule (iii)
      }
      for (std::size_t r = q; r < kept.size() && !drop[p]; ++r) {
        if (r == p || drop[r]) continue;
        SymbolicInequality sum;
        sum.rates = kept[q].rates;
        for (const auto& [k, v] : kept[r].rates) sum.rates[k] += v;
        sum.rhs = kept[q].rhs + kept[r].rhs;
        sum.normalize();
        if (sum.rates == kept[p].rates && sum.rhs == kept[p].rhs) {
          drop[p] = true;  // rule (ii)
        }
      }
    }
  }
  SymbolicSystem out;
  out.variables = system.variables;
  out.substitutions = system.substitutions;
  for (std::size_t i = 0; i < kept.size(); ++i) {
    if (!drop[i]) out.inequalities.push_back(kept[i]);
  }
  return out;
}

// Atom labels of the pre-elimination inner-bound system. The Y2 terms are
// written with X1 in place of the codeword group that determines it, so the
// projected system lands directly on the published bounds.
namespace atoms {
inline const std::string kBinPenalty = "I(U1c;X2|U2c)";
inline const std::string kY1Both = "I(Y1;U1c,U2c)";
inline const std::string kY1Cond = "I(Y1;U1c|U2c)";
inline const std::string kY2All = "I(Y2;X1,X2)";
inline const std::string kY2AllCond = "I(Y2;X1,X2|U2c)";
inline const std::string kY2X1 = "I(Y2;X1|X2,U2c)";
inline const std::string kY2X2 = "I(Y2;X2|U1c,U2c)";
}  // namespace atoms

// The seven-line achievable system before elimination, over the split rates
// R1c, R2c, R2p and the binning rate R1cp, with the rate identifications
// R1 = R1c and R2 = R2c + R2p attached as substitutions.
inline SymbolicSystem th2_pre_system() {
  using namespace atoms;
  SymbolicSystem s;
  s.variables = {"R1c", "R2c", "R2p", "R1cp"};
  auto add = [&](std::map<std::string, long long> rates, LinearExpr rhs) {
    SymbolicInequality ineq;
    ineq.rates = std::move(rates);
    ineq.rhs = std::move(rhs);
    ineq.normalize();
    s.inequalities.push_back(std::move(ineq));
  };
  const LinearExpr pen = LinearExpr::atom(kBinPenalty);
  add({{"R1cp", -1}}, LinearExpr::atom(kBinPenalty, -1));
  add({{"R1c", 1}, {"R1cp", 1}, {"R2c", 1}}, LinearExpr::atom(kY1Both));
  add({{"R1c", 1}, {"R1cp", 1}}, LinearExpr::atom(kY1Cond));
  add({{"R2c", 1}, {"R1c", 1}, {"R1cp", 1}, {"R2p", 1}}, LinearExpr::atom(kY2All) + pen);
  add({{"R1c", 1}, {"R1cp", 1}, {"R2p", 1}}, LinearExpr::atom(kY2AllCond) + pen);
  add({{"R1c", 1}, {"R1cp", 1}}, LinearExpr::atom(kY2X1) + pen);
  add({{"R2p", 1}}, LinearExpr::atom(kY2X2) + pen);
  s.substitutions = {{"R1", {"R1c"}}, {"R2", {"R2c", "R2p"}}};
  return s;
}

// The five published bounds over (R1, R2).
inline std::vector<SymbolicInequality> th2_expected() {
  using namespace atoms;
  std::vector<SymbolicInequality> expected;
  auto add = [&](std::map<std::string, long long> rates, LinearExpr rhs) {
    SymbolicInequality ineq;
    ineq.rates = std::move(rates);
    ineq.rhs = std::move(rhs);
    ineq.normalize();
    expected.push_back(std::move(ineq));
  };
  const LinearExpr pen = LinearExpr::atom(kBinPenalty);
  add({{"R1", 1}}, LinearExpr::atom(kY1Cond) - pen);
  add({{"R1", 1}}, LinearExpr::atom(kY2X1));
  add({{"R1", 1}, {"R2", 1}}, LinearExpr::atom(kY1Both) + LinearExpr::atom(kY2X2));
  add({{"R1", 1}, {"R2", 1}}, LinearExpr::atom(kY2All));
  add({{"R1", 2}, {"R2", 1}}, LinearExpr::atom(kY1Both) + LinearExpr::atom(kY2AllCond) - pen);
  return expected;
}

// Substitute, eliminate R1cp then R2c, prune, and check the result against the
// five published bounds. A mismatch raises with the extra/missing lines.
inline SymbolicSystem derive_th2() {
  SymbolicSystem s = apply_substitutions(th2_pre_system());
  s = eliminate(s, "R1cp");
  s = eliminate(s, "R2c");
  s = prune(s);

  std::vector<SymbolicInequality> got = s.inequalities;
  std::vector<SymbolicInequality> want = th2_expected();
  std::sort(got.begin(), got.end());
  std::sort(want.begin(), want.end());
  if (got != want) {
    std::ostringstream os;
    os << "derived system does not match the published bounds\n";
    for (const SymbolicInequality& i : got) {
      if (std::find(want.begin(), want.end(), i) == want.end()) {
        os << "  extra:   " << i.str() << "\n";
      }
    }
    for (const SymbolicInequality& i : want) {
      if (std::find(got.begin(), got.end(), i) == got.end()) {
        os << "  missing: " << i.str() << "\n";
      }
    }
    throw std::runtime_error(os.str());
  }
  return s;
}

}  // namespace ccm::fme

#endif  // CCM_FME_HPP
