#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hess/errors.hpp"
#include "hess/qpoly.hpp"

namespace hess::symbolic {

// variables z_{ji} (j > i) of an n x n lower unitriangular patch, in the
// canonical order (2,1),(3,1),(3,2),(4,1),... sorted by (j,i).
struct VarTable {
  int n = 0;
  std::vector<std::pair<int, int>> vars;

  explicit VarTable(int n_) : n(n_) {
    if (n < 1) throw invalid_input("VarTable: need n >= 1");
    for (int j = 2; j <= n; ++j)
      for (int i = 1; i < j; ++i) vars.emplace_back(j, i);
  }

  size_t size() const { return vars.size(); }

  size_t index(int j, int i) const {
    for (size_t k = 0; k < vars.size(); ++k)
      if (vars[k].first == j && vars[k].second == i) return k;
    throw invalid_input("VarTable: no variable z_" + std::to_string(j) + std::to_string(i));
  }

  std::string name(size_t k) const {
    const auto [j, i] = vars.at(k);
    if (j < 10 && i < 10) return "z" + std::to_string(j) + std::to_string(i);
    return "z" + std::to_string(j) + "_" + std::to_string(i);
  }
};

using Monomial = std::vector<std::uint8_t>;  // exponents in canonical var order

inline int total_degree(const Monomial& m) {
  int d = 0;
  for (auto e : m) d += e;
  return d;
}

inline bool is_squarefree(const Monomial& m) {
  for (auto e : m)
    if (e > 1) return false;
  return true;
}

// sparse exact polynomial in the patch variables; zero coefficients never
// stored.
class MultiPoly {
 public:
  MultiPoly() = default;
  explicit MultiPoly(size_t nvars) : nvars_(nvars) {}

  static MultiPoly constant(size_t nvars, const bigrat& c) {
    MultiPoly p(nvars);
    if (c != 0) p.terms_[Monomial(nvars, 0)] = c;
    return p;
  }

  static MultiPoly variable(size_t nvars, size_t k) {
    MultiPoly p(nvars);
    Monomial m(nvars, 0);
    m.at(k) = 1;
    p.terms_[std::move(m)] = 1;
    return p;
  }

  size_t nvars() const { return nvars_; }
  const std::map<Monomial, bigrat>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  bigrat constant_term() const {
    auto it = terms_.find(Monomial(nvars_, 0));
    return it == terms_.end() ? bigrat(0) : it->second;
  }

  int degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, total_degree(m));
    return d;
  }

  void add_term(const Monomial& m, const bigrat& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(m, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  MultiPoly& operator+=(const MultiPoly& o) {
    check_shape(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }

  MultiPoly& operator-=(const MultiPoly& o) {
    check_shape(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }

  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    a.check_shape(b);
    MultiPoly out(a.nvars_);
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) {
        Monomial m(a.nvars_);
        for (size_t k = 0; k < a.nvars_; ++k) {
          const int e = ma[k] + mb[k];
          if (e > 255) throw invalid_input("MultiPoly: exponent overflow");
          m[k] = static_cast<std::uint8_t>(e);
        }
        out.add_term(m, ca * cb);
      }
    return out;
  }

  MultiPoly operator-() const {
    MultiPoly out(nvars_);
    for (const auto& [m, c] : terms_) out.terms_[m] = -c;
    return out;
  }

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

  // terms of total degree <= 1
  MultiPoly truncate_degree_1() const {
    MultiPoly out(nvars_);
    for (const auto& [m, c] : terms_)
      if (total_degree(m) <= 1) out.terms_[m] = c;
    return out;
  }

  // degree-one part only (no constant)
  MultiPoly linear_part() const {
    MultiPoly out(nvars_);
    for (const auto& [m, c] : terms_)
      if (total_degree(m) == 1) out.terms_[m] = c;
    return out;
  }

  // reduce integer coefficients into [0, p); rejects non-integer input.
  MultiPoly mod_reduce(long long p) const {
    if (p < 2) throw invalid_input("MultiPoly::mod_reduce: need p >= 2");
    MultiPoly out(nvars_);
    for (const auto& [m, c] : terms_) {
      if (boost::multiprecision::denominator(c) != 1)
        throw invalid_input("MultiPoly::mod_reduce: non-integer coefficient");
      bigint r = boost::multiprecision::numerator(c) % p;
      if (r < 0) r += p;
      if (r != 0) out.terms_[m] = bigrat(r);
    }
    return out;
  }

  std::string render(const VarTable& table) const {
    if (terms_.empty()) return "0";
    std::string out;
    // highest total degree first, then reverse exponent-vector order, so the
    // display leads with the dominant terms.
    std::vector<const std::pair<const Monomial, bigrat>*> ts;
    for (const auto& t : terms_) ts.push_back(&t);
    std::sort(ts.begin(), ts.end(), [](auto* a, auto* b) {
      const int da = total_degree(a->first), db = total_degree(b->first);
      if (da != db) return da > db;
      return a->first > b->first;
    });
    bool first = true;
    for (auto* t : ts) {
      const auto& [m, c] = *t;
      const bool neg = c < 0;
      bigrat mag = neg ? bigrat(-c) : c;
      if (first) {
        if (neg) out += "-";
        first = false;
      } else {
        out += neg ? " - " : " + ";
      }
      std::string vars;
      for (size_t k = 0; k < nvars_; ++k) {
        if (m[k] == 0) continue;
        if (!vars.empty()) vars += "*";
        vars += table.name(k);
        if (m[k] > 1) vars += "^" + std::to_string(static_cast<int>(m[k]));
      }
      const std::string coeff = mag.str();
      if (vars.empty()) {
        out += coeff;
      } else if (coeff == "1") {
        out += vars;
      } else {
        out += coeff + "*" + vars;
      }
    }
    return out;
  }

 private:
  void check_shape(const MultiPoly& o) const {
    if (nvars_ != o.nvars_) throw invalid_input("MultiPoly: variable-count mismatch");
  }

  size_t nvars_ = 0;
  std::map<Monomial, bigrat> terms_;
};

// a variable order is a list of (j,i) pairs, most significant first.
using VarOrder = std::vector<std::pair<int, int>>;

// significance key: the rank of each variable, repeated by its exponent.
inline std::vector<int> lex_key(const Monomial& m, const VarOrder& order, const VarTable& table) {
  std::vector<int> key;
  for (size_t rank = 0; rank < order.size(); ++rank) {
    const auto [j, i] = order[rank];
    const int e = m[table.index(j, i)];
    for (int t = 0; t < e; ++t) key.push_back(static_cast<int>(rank));
  }
  return key;
}

// prefix order on monomials: compare significance keys position by
// position; at the first difference the smaller rank (more significant
// variable) wins, and a proper prefix is smaller than its extension.
inline bool lex_less(const Monomial& a, const Monomial& b, const VarOrder& order,
                     const VarTable& table) {
  const std::vector<int> ka = lex_key(a, order, table), kb = lex_key(b, order, table);
  const size_t common = std::min(ka.size(), kb.size());
  for (size_t t = 0; t < common; ++t)
    if (ka[t] != kb[t]) return ka[t] > kb[t];
  return ka.size() < kb.size();
}

// the largest monomial of the polynomial under the prefix order.
inline Monomial initial_term(const MultiPoly& poly, const VarOrder& order, const VarTable& table) {
  if (poly.is_zero()) throw invalid_input("initial_term: zero polynomial");
  const Monomial* best = nullptr;
  for (const auto& [m, c] : poly.terms())
    if (best == nullptr || lex_less(*best, m, order, table)) best = &m;
  return *best;
}

}  // namespace hess::symbolic
