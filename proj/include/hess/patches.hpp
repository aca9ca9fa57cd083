#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <string>
#include <unordered_map>
#include <vector>

#include "hess/exactmat.hpp"
#include "hess/multipoly.hpp"

namespace hess::patching {

using ffla::ExactMatrix;
using symbolic::Monomial;
using symbolic::MultiPoly;
using symbolic::VarOrder;
using symbolic::VarTable;

namespace detail {

inline std::vector<bigrat> mat_vec(const ExactMatrix& x, const std::vector<bigrat>& v) {
  const int n = x.n();
  std::vector<bigrat> out(n, bigrat(0));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (x.at(i, j) != 0 && v[j - 1] != 0) out[i - 1] += x.at(i, j) * v[j - 1];
  return out;
}

inline bigrat det_of_columns(const std::vector<std::vector<bigrat>>& cols) {
  const int n = static_cast<int>(cols.size());
  std::vector<std::vector<bigrat>> rows(n, std::vector<bigrat>(n));
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) rows[i][j] = cols[j][i];
  return det(ExactMatrix::from_rows(rows));
}

// entries of g u_k, where u_k = e_k + sum_{j>k} z_{jk} e_j:
// (g u_k)_row = g(row,k) + sum_{j>k} g(row,j) z_{jk}
inline std::vector<MultiPoly> gu_column(const ExactMatrix& g, const VarTable& table, int k) {
  const int n = g.n();
  std::vector<MultiPoly> col(n, MultiPoly(table.size()));
  for (int row = 1; row <= n; ++row) {
    MultiPoly e(table.size());
    e.add_term(Monomial(table.size(), 0), g.at(row, k));
    for (int j = k + 1; j <= n; ++j) {
      if (g.at(row, j) == 0) continue;
      Monomial m(table.size(), 0);
      m[table.index(j, k)] = 1;
      e.add_term(m, g.at(row, j));
    }
    col[row - 1] = std::move(e);
  }
  return col;
}

// determinant of a matrix of polynomials by minor expansion along columns,
// memoized on the set of unused rows.
inline MultiPoly det_poly(const std::vector<std::vector<MultiPoly>>& a, size_t nvars) {
  const int n = static_cast<int>(a.size());
  if (n > 62) throw invalid_input("det_poly: matrix too large");
  std::unordered_map<std::uint64_t, MultiPoly> memo;
  std::function<const MultiPoly&(std::uint64_t)> go =
      [&](std::uint64_t mask) -> const MultiPoly& {
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    MultiPoly result(nvars);
    const int col = n - __builtin_popcountll(mask);
    if (col == n) {
      result.add_term(Monomial(nvars, 0), 1);
    } else {
      bool negate = false;
      for (int row = 0; row < n; ++row) {
        if (!(mask >> row & 1)) continue;
        if (!a[row][col].is_zero()) {
          const MultiPoly& sub = go(mask & ~(std::uint64_t{1} << row));
          MultiPoly term = a[row][col] * sub;
          if (negate)
            result -= term;
          else
            result += term;
        }
        negate = !negate;
      }
    }
    return memo.emplace(mask, std::move(result)).first->second;
  };
  const std::uint64_t full = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  return go(full);
}

}  // namespace detail

// determinant of [x g u_1 | g u_1 | g u_2 | ... | g u_{n-1}] as an exact
// polynomial in the patch coordinates z_{jk}.  its constant term vanishes
// exactly when the flag of g lies on the variety cut out by m_max, and the
// patch parametrizes the neighbourhood of that flag.
inline MultiPoly patch_determinant(const ExactMatrix& x, const ExactMatrix& g) {
  const int n = x.n();
  if (g.n() != n) throw invalid_input("patch_determinant: size mismatch");
  if (n < 2) throw invalid_input("patch_determinant: need n >= 2");
  if (ffla::det(g) == 0) throw invalid_input("patch_determinant: g is singular");
  const VarTable table(n);
  std::vector<std::vector<MultiPoly>> a(n, std::vector<MultiPoly>(n, MultiPoly(table.size())));
  const std::vector<MultiPoly> gu1 = detail::gu_column(g, table, 1);
  for (int row = 1; row <= n; ++row) {
    MultiPoly e(table.size());
    for (int s = 1; s <= n; ++s) {
      if (x.at(row, s) == 0) continue;
      MultiPoly scaled(table.size());
      for (const auto& [m, c] : gu1[s - 1].terms()) scaled.add_term(m, c * x.at(row, s));
      e += scaled;
    }
    a[row - 1][0] = std::move(e);
  }
  for (int k = 1; k <= n - 1; ++k) {
    std::vector<MultiPoly> col = detail::gu_column(g, table, k);
    for (int row = 0; row < n; ++row) a[row][k] = std::move(col[row]);
  }
  return detail::det_poly(a, table.size());
}

// the degree-one part of the patch determinant, assembled directly from the
// cofactor formulas
//   sum_{j=2}^{n} z_{j1} det([x v_j | v_1 | ... | v_{n-1}])
// + sum_{i=1}^{n-1} z_{ni} det([x v_1 | v_1 | ... | v_n at slot i | ... | v_{n-1}])
// with v_k the k-th column of g.
inline MultiPoly linear_part_formula(const ExactMatrix& x, const ExactMatrix& g) {
  const int n = x.n();
  if (g.n() != n) throw invalid_input("linear_part_formula: size mismatch");
  const VarTable table(n);
  std::vector<std::vector<bigrat>> v;
  for (int k = 1; k <= n; ++k) v.push_back(g.column(k));
  MultiPoly out(table.size());
  for (int j = 2; j <= n; ++j) {
    std::vector<std::vector<bigrat>> cols;
    cols.push_back(detail::mat_vec(x, v[j - 1]));
    for (int k = 1; k <= n - 1; ++k) cols.push_back(v[k - 1]);
    Monomial m(table.size(), 0);
    m[table.index(j, 1)] = 1;
    out.add_term(m, detail::det_of_columns(cols));
  }
  for (int i = 1; i <= n - 1; ++i) {
    std::vector<std::vector<bigrat>> cols;
    cols.push_back(detail::mat_vec(x, v[0]));
    for (int k = 1; k <= n - 1; ++k) cols.push_back(v[k - 1]);
    cols[i] = v[n - 1];
    Monomial m(table.size(), 0);
    m[table.index(n, i)] = 1;
    out.add_term(m, detail::det_of_columns(cols));
  }
  return out;
}

// degree-one part at a point of the variety (constant term must vanish).
// computed twice, by cofactor formula and by truncating the full
// determinant; the two routes must agree.
inline MultiPoly linear_part(const ExactMatrix& x, const ExactMatrix& g) {
  const MultiPoly det = patch_determinant(x, g);
  if (det.constant_term() != 0)
    throw invalid_input("linear_part: flag is not on the variety (nonzero constant term)");
  const MultiPoly direct = linear_part_formula(x, g);
  if (direct != det.linear_part())
    throw verification_failure("linear_part: cofactor formula disagrees with truncation");
  return direct;
}

inline bool is_smooth_point_mmax(const ExactMatrix& x, const ExactMatrix& g) {
  return !linear_part(x, g).is_zero();
}

// the candidate singular locus: x fixes the line of v_1 and preserves the
// hyperplane spanned by v_1..v_{n-1}; equivalently the flag lies on the
// subvariety cut out by (1, n-1, ..., n-1, n).
inline bool in_sing_candidate(const ExactMatrix& x, const ExactMatrix& g) {
  const int n = x.n();
  if (g.n() != n) throw invalid_input("in_sing_candidate: size mismatch");
  if (ffla::det(g) == 0) throw invalid_input("in_sing_candidate: g is singular");
  std::vector<std::vector<bigrat>> line{g.column(1), detail::mat_vec(x, g.column(1))};
  if (ffla::column_rank(line) > 1) return false;
  std::vector<std::vector<bigrat>> hyper;
  for (int k = 1; k <= n - 1; ++k) hyper.push_back(g.column(k));
  for (int k = 1; k <= n - 1; ++k) hyper.push_back(detail::mat_vec(x, g.column(k)));
  return ffla::column_rank(hyper) == n - 1;
}

struct PatchReport {
  MultiPoly determinant;
  MultiPoly linear;
  bool member = false;
  bool smooth = false;
  bool sing_candidate = false;
};

inline PatchReport patch_report(const ExactMatrix& x, const ExactMatrix& g) {
  PatchReport rep;
  rep.determinant = patch_determinant(x, g);
  rep.member = rep.determinant.constant_term() == 0;
  if (rep.member) {
    const MultiPoly direct = linear_part_formula(x, g);
    if (direct != rep.determinant.linear_part())
      throw verification_failure("patch_report: cofactor formula disagrees with truncation");
    rep.linear = direct;
    rep.smooth = !rep.linear.is_zero();
  } else {
    rep.linear = MultiPoly(rep.determinant.nvars());
  }
  rep.sing_candidate = in_sing_candidate(x, g);
  return rep;
}

enum class WitnessStatus { ok, degenerate, failure };

inline std::string witness_status_name(WitnessStatus s) {
  switch (s) {
    case WitnessStatus::ok: return "ok";
    case WitnessStatus::degenerate: return "degenerate";
    case WitnessStatus::failure: return "failure";
  }
  return "?";
}

struct WitnessReport {
  WitnessStatus status = WitnessStatus::failure;
  VarOrder order;  // most significant variable first; empty unless ok
};

namespace detail {

inline VarOrder all_vars_canon(int n) {
  VarOrder vs;
  for (int j = 2; j <= n; ++j)
    for (int i = 1; i < j; ++i) vs.emplace_back(j, i);
  return vs;
}

inline bool contains(const VarOrder& vs, const std::pair<int, int>& v) {
  return std::find(vs.begin(), vs.end(), v) != vs.end();
}

}  // namespace detail

// variable order making the initial term of the patch determinant at y
// square-free, where y is already in patch position (the determinant taken
// is det([y u_1 | u_1 | ... | u_{n-1}])).  `degenerate` flags an identically
// zero determinant, `failure` the n = 2 case whose determinant is a square.
inline WitnessReport witness_order(const ExactMatrix& y) {
  const int n = y.n();
  if (n < 2) throw invalid_input("witness_order: need n >= 2");
  WitnessReport rep;
  if (n == 2) {
    if (y.at(1, 2) != 0) {
      rep.status = WitnessStatus::failure;  // det = y12 z21^2 + ...: a square leads
      return rep;
    }
    // det = (y11 - y22) z21 - y21
    if (y.at(1, 1) == y.at(2, 2) && y.at(2, 1) == 0) {
      rep.status = WitnessStatus::degenerate;
      return rep;
    }
    rep.status = WitnessStatus::ok;
    rep.order = detail::all_vars_canon(2);
    return rep;
  }

  // rows 1..nu of y agree with c * identity (full row width) -> that c
  auto rows_scalar = [&](int nu) -> std::pair<bool, bigrat> {
    const bigrat c = y.at(1, 1);
    for (int jj = 2; jj <= n; ++jj)
      if (y.at(1, jj) != 0) return {false, 0};
    for (int i = 2; i <= nu; ++i)
      for (int jj = 1; jj <= n; ++jj) {
        if (jj == i) {
          if (y.at(i, jj) != c) return {false, 0};
        } else if (y.at(i, jj) != 0) {
          return {false, 0};
        }
      }
    return {true, c};
  };

  // order for the leading nu x nu determinant, or degenerate
  std::function<std::pair<bool, VarOrder>(int)> rec = [&](int nu) -> std::pair<bool, VarOrder> {
    if (nu == 3) {
      if (rows_scalar(3).first) return {false, {}};
      const bigrat a13 = y.at(1, 3);
      const bigrat a12 = y.at(1, 2);
      VarOrder head;
      if (a13 != 0)
        head = {{3, 2}, {3, 1}};
      else if (a12 != 0)
        head = {{3, 1}, {2, 1}};
      VarOrder out = head;
      for (const auto& v : detail::all_vars_canon(n))
        if (!detail::contains(head, v)) out.push_back(v);
      return {true, out};
    }
    const auto [scalar, c] = rows_scalar(nu - 1);
    if (scalar) {
      // determinant is +/- (l_nu - c z_{nu,1}): linear, any order works
      bool lin_nonzero = y.at(nu, 1) != 0 || y.at(nu, nu) != c;
      for (int jj = 2; jj <= n && !lin_nonzero; ++jj)
        if (jj != nu && y.at(nu, jj) != 0) lin_nonzero = true;
      if (!lin_nonzero) return {false, {}};
      return {true, detail::all_vars_canon(n)};
    }
    const auto [ok, sub] = rec(nu - 1);
    if (!ok) return {false, {}};
    VarOrder head{{nu, nu - 1}};
    for (int i = 2; i <= nu - 2; ++i) head.emplace_back(nu, i);
    VarOrder out = head;
    for (const auto& v : sub)
      if (!detail::contains(head, v)) out.push_back(v);
    return {true, out};
  };

  const auto [ok, order] = rec(n);
  if (!ok) {
    rep.status = WitnessStatus::degenerate;
    return rep;
  }
  rep.status = WitnessStatus::ok;
  rep.order = order;
  return rep;
}

// witness for the flag of g on the variety of x: conjugate into patch
// position and order the variables there.
inline WitnessReport squarefree_witness(const ExactMatrix& x, const ExactMatrix& g) {
  if (g.n() != x.n()) throw invalid_input("squarefree_witness: size mismatch");
  return witness_order(ffla::conjugate(g, x));
}

// post-hoc check: under an `ok` order the initial term of the patch
// determinant at y must be square-free; `degenerate` must mean the
// determinant vanishes identically.
inline bool verify_witness(const ExactMatrix& y, const WitnessReport& rep) {
  const int n = y.n();
  const MultiPoly f = patch_determinant(y, ExactMatrix::identity(n));
  switch (rep.status) {
    case WitnessStatus::degenerate:
      return f.is_zero();
    case WitnessStatus::ok: {
      if (f.is_zero()) return false;
      const VarTable table(n);
      return symbolic::is_squarefree(symbolic::initial_term(f, rep.order, table));
    }
    case WitnessStatus::failure: {
      // only arises at n = 2 with det = y12 z21^2 + (y11-y22) z21 - y21
      if (f.is_zero()) return false;
      const VarTable table(n);
      const VarOrder order = detail::all_vars_canon(n);
      return !symbolic::is_squarefree(symbolic::initial_term(f, order, table));
    }
  }
  return false;
}

}  // namespace hess::patching
