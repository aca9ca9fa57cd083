#pragma once

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hess/canonical.hpp"
#include "hess/fpmat.hpp"
#include "hess/parallel.hpp"
#include "hess/paving.hpp"
#include "hess/qpoly.hpp"

namespace hess::census {

using core::CanonicalMatrix;
using core::HessenbergVector;
using symgrp::Permutation;

struct AdmissibilityReport {
  bool admissible = false;       // operative test: no two distinct entry values congruent mod p
  bool bound_satisfied = false;  // sufficient bound p > 2 m_s, reported separately
  long long p = 0;
  long long m_s = 0;
};

inline AdmissibilityReport admissibility(const CanonicalMatrix& x, long long p) {
  if (!ffla::is_prime(p)) throw invalid_input("admissibility: p must be prime");
  AdmissibilityReport rep;
  rep.p = p;
  rep.m_s = x.m_s();
  rep.bound_satisfied = p > 2 * rep.m_s;
  rep.admissible = true;
  const auto vals = x.entry_values();
  for (size_t a = 0; a < vals.size() && rep.admissible; ++a)
    for (size_t b = a + 1; b < vals.size(); ++b)
      if ((vals[a] - vals[b]) % p == 0) {
        rep.admissible = false;
        break;
      }
  return rep;
}

inline bool admissible_prime(const CanonicalMatrix& x, long long p) {
  return admissibility(x, p).admissible;
}

// one cell representative u*wdot: u unit upper-triangular supported on the
// free positions of the cell of w.
struct FlagRep {
  Permutation w;
  std::vector<std::pair<int, int>> free_positions;  // (j,k), j < k, sorted
  std::vector<long long> free_values;               // aligned with free_positions
};

// free positions of the cell of w: upper-triangular pairs that are
// inversions of w^{-1}, sorted by (row, column).
inline std::vector<std::pair<int, int>> free_positions(const Permutation& w) {
  const Permutation wi = w.inverse();
  std::vector<std::pair<int, int>> out;
  for (int j = 1; j <= w.n(); ++j)
    for (int k = j + 1; k <= w.n(); ++k)
      if (wi(j) > wi(k)) out.push_back({j, k});
  return out;
}

namespace detail {

// all assignments of k values in [0, p), last position varying fastest.
inline void odometer(size_t k, long long p,
                     const std::function<void(const std::vector<long long>&)>& fn) {
  std::vector<long long> vals(k, 0);
  for (;;) {
    fn(vals);
    int idx = static_cast<int>(k) - 1;
    while (idx >= 0 && ++vals[idx] == p) vals[idx--] = 0;
    if (idx < 0) break;
  }
}

}  // namespace detail

// streams the p^{len(w)} representatives in odometer order (last free
// position varies fastest).
inline void enumerate_cell(const Permutation& w, long long p,
                           const std::function<void(const FlagRep&)>& fn) {
  FlagRep rep;
  rep.w = w;
  rep.free_positions = free_positions(w);
  detail::odometer(rep.free_positions.size(), p, [&](const std::vector<long long>& vals) {
    rep.free_values = vals;
    fn(rep);
  });
}

struct CountReport {
  long long p = 0;
  bigint total = 0;
  std::map<Permutation, bigint> per_cell;  // cells in lexicographic word order
  bool admissible = false;
};

namespace detail {

// membership engine for one cell: counts assignments whose flag u*wdot lies
// in the variety.  works on raw arrays for speed; entries of x are reduced.
class CellCounter {
 public:
  CellCounter(const ffla::FpMatrix& x, const HessenbergVector& m, const Permutation& w)
      : n_(x.n()), p_(x.p()), w_(w.word()), free_(free_positions(w)) {
    x_.assign(static_cast<size_t>(n_) * n_, 0);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) x_[idx(i, j)] = x.at(i + 1, j + 1);
    // membership conditions on a = u^{-1} x u: for each (jj,kk) with
    // jj > m(kk), the entry a[w(jj)][w(kk)] must vanish.
    for (int kk = 1; kk <= n_; ++kk)
      for (int jj = m(kk) + 1; jj <= n_; ++jj)
        checks_.push_back({w_[jj - 1] - 1, w_[kk - 1] - 1});
    u_.assign(static_cast<size_t>(n_) * n_, 0);
    xu_.assign(static_cast<size_t>(n_) * n_, 0);
    a_.assign(static_cast<size_t>(n_) * n_, 0);
    for (int i = 0; i < n_; ++i) u_[idx(i, i)] = 1;
  }

  const std::vector<std::pair<int, int>>& free() const { return free_; }

  // membership for a given assignment of the free values.
  bool member(const std::vector<long long>& vals) {
    for (size_t t = 0; t < free_.size(); ++t)
      u_[idx(free_[t].first - 1, free_[t].second - 1)] = vals[t];
    // xu = x * u
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) {
        long long acc = 0;
        for (int k = 0; k <= j; ++k) acc += x_[idx(i, k)] * u_[idx(k, j)];
        xu_[idx(i, j)] = acc % p_;
      }
    // a = u^{-1} xu by back substitution: a_i = xu_i - sum_{j>i} u_{ij} a_j
    for (int i = n_ - 1; i >= 0; --i)
      for (int col = 0; col < n_; ++col) {
        long long acc = xu_[idx(i, col)];
        for (int j = i + 1; j < n_; ++j) acc -= u_[idx(i, j)] * a_[idx(j, col)];
        a_[idx(i, col)] = ((acc % p_) + p_) % p_;
      }
    for (const auto& [r, c] : checks_)
      if (a_[idx(r, c)] != 0) return false;
    return true;
  }

  bigint count() {
    bigint total = 0;
    std::vector<long long> vals(free_.size(), 0);
    for (;;) {
      if (member(vals)) ++total;
      int t = static_cast<int>(vals.size()) - 1;
      while (t >= 0 && ++vals[t] == p_) vals[t--] = 0;
      if (t < 0) break;
    }
    return total;
  }

 private:
  size_t idx(int i, int j) const { return static_cast<size_t>(i) * n_ + j; }

  int n_;
  long long p_;
  std::vector<int> w_;
  std::vector<std::pair<int, int>> free_;
  std::vector<std::pair<int, int>> checks_;  // (row, col) of a that must vanish
  std::vector<long long> x_, u_, xu_, a_;
};

}  // namespace detail

// exhaustive census of an arbitrary matrix over F_p; the admissible flag is
// meaningful only for canonical matrices and is left false here.  cells are
// independent, so they fan out across `jobs` threads deterministically.
inline CountReport count_points(const ffla::FpMatrix& x, const HessenbergVector& m,
                                int jobs = 1) {
  if (x.n() != m.n()) throw invalid_input("count_points: size mismatch");
  if (x.p() >= (1LL << 29))
    throw invalid_input("count_points: census supports p < 2^29 (the fast kernel's overflow bound)");
  CountReport report;
  report.p = x.p();
  const std::vector<Permutation> words = symgrp::all_permutations(m.n());
  const std::vector<bigint> counts = parallel::map_indexed<bigint>(
      words.size(), jobs, [&](size_t k) { return detail::CellCounter(x, m, words[k]).count(); });
  for (size_t k = 0; k < words.size(); ++k) {
    report.total += counts[k];
    report.per_cell.emplace(words[k], counts[k]);
  }
  return report;
}

// census of the canonical representative of a type.  scalar x is permitted
// and flagged admissible (the census degenerates to the full flag count).
inline CountReport count_points(const CanonicalMatrix& x, const HessenbergVector& m,
                                long long p, int jobs = 1) {
  CountReport report = count_points(x.to_fp(p), m, jobs);
  report.admissible = x.type().is_scalar() || admissible_prime(x, p);
  return report;
}

// |Z_i|: unitriangular u supported on the free positions with row >= i,
// subject to (u^{-1} x u)_{jk} = 0 for all k > j >= i with
// m(w^{-1}(k)) < w^{-1}(j).
inline bigint count_partial_solutions(const Permutation& w, const ffla::FpMatrix& x,
                                      const HessenbergVector& m, int i0) {
  const int n = x.n();
  if (m.n() != n || w.n() != n) throw invalid_input("count_partial_solutions: size mismatch");
  if (i0 < 1 || i0 > n) throw invalid_input("count_partial_solutions: need 1 <= i <= n");
  const long long p = x.p();
  const Permutation wi = w.inverse();

  std::vector<std::pair<int, int>> free;
  for (const auto& pos : free_positions(w))
    if (pos.first >= i0) free.push_back(pos);
  std::vector<std::pair<int, int>> checks;  // (row, col) of u^{-1} x u that must vanish
  for (int j = i0; j <= n; ++j)
    for (int k = j + 1; k <= n; ++k)
      if (m(wi(k)) < wi(j)) checks.push_back({j, k});

  ffla::FpMatrix u = ffla::FpMatrix::identity(n, p);
  bigint total = 0;
  std::vector<long long> vals(free.size(), 0);
  for (;;) {
    for (size_t t = 0; t < free.size(); ++t) u.at(free[t].first, free[t].second) = vals[t];
    const ffla::FpMatrix a = ffla::inverse(u) * (x * u);
    bool ok = true;
    for (const auto& [r, c] : checks)
      if (a.at(r, c) != 0) {
        ok = false;
        break;
      }
    if (ok) ++total;
    int t = static_cast<int>(vals.size()) - 1;
    while (t >= 0 && ++vals[t] == p) vals[t--] = 0;
    if (t < 0) break;
  }
  return total;
}

struct VerifyReport {
  bool pass = false;
  long long p = 0;
  bigint census_total = 0;
  bigint poincare_at_p = 0;
  std::vector<std::string> discrepancies;
};

// census totals vs the Tymoczko polynomial at p, and per-cell counts vs
// p^{dim}.  requires an admissible prime.
inline VerifyReport verify_heuristic(const core::JordanType& type, const HessenbergVector& m,
                                     long long p) {
  const CanonicalMatrix x(type);
  if (!type.is_scalar() && !admissible_prime(x, p))
    throw inadmissible_prime("verify_heuristic: p=" + std::to_string(p) +
                             " is inadmissible for type " + type.str());
  VerifyReport rep;
  rep.p = p;
  const CountReport census = count_points(x, m, p);
  rep.census_total = census.total;
  rep.poincare_at_p = paving::poincare_tymoczko(type, m).eval(p);
  rep.pass = rep.census_total == rep.poincare_at_p;
  if (!rep.pass)
    rep.discrepancies.push_back("total " + rep.census_total.str() + " != polynomial value " +
                                rep.poincare_at_p.str());
  symgrp::for_each_permutation(m.n(), [&](const Permutation& w) {
    const paving::CellDatum d = paving::cell_dimension(w, x, m);
    bigint want = 0;
    if (d.nonempty) {
      want = 1;
      for (int e = 0; e < d.dim; ++e) want *= p;
    }
    const bigint& got = census.per_cell.at(w);
    if (got != want) {
      rep.pass = false;
      rep.discrepancies.push_back("cell " + w.str() + ": census " + got.str() + " != p^d " +
                                  want.str());
    }
  });
  return rep;
}

}  // namespace hess::census
