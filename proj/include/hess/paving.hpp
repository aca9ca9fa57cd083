#pragma once

#include <map>
#include <vector>

#include "hess/canonical.hpp"
#include "hess/hessenberg.hpp"
#include "hess/permutation.hpp"
#include "hess/qpoly.hpp"

namespace hess::paving {

using core::CanonicalMatrix;
using core::HessenbergVector;
using symgrp::Permutation;

struct CellDatum {
  Permutation w;
  bool nonempty = false;
  int dim = 0;
  std::vector<int> row_dims;  // d_1..d_{n-1}, grouped by the pair's first index
};

// the cell of w meets the variety iff every nonzero nil entry (i,j) lands
// inside the staircase after relabeling by w: w^{-1}(i) <= m(w^{-1}(j)).
inline bool cell_nonempty(const Permutation& w, const CanonicalMatrix& x,
                          const HessenbergVector& m) {
  const int n = w.n();
  if (x.n() != n || m.n() != n) throw invalid_input("cell_nonempty: size mismatch");
  const Permutation wi = w.inverse();
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (x.nil()[i - 1][j - 1] != 0 && wi(i) > m(wi(j))) return false;
  return true;
}

// dimension formula: count pairs (i < k) that are inversions of w^{-1}.
// equal diagonal values: the pair counts unless row k of nil carries a
// pivot (k,j) with m(w^{-1}(j)) < w^{-1}(i).  unequal diagonal values: the
// pair counts iff m(w^{-1}(k)) >= w^{-1}(i).  rows without pivots satisfy
// the pivot clause vacuously.
inline CellDatum cell_dimension(const Permutation& w, const CanonicalMatrix& x,
                                const HessenbergVector& m) {
  const int n = w.n();
  if (x.n() != n || m.n() != n) throw invalid_input("cell_dimension: size mismatch");
  CellDatum datum;
  datum.w = w;
  datum.nonempty = cell_nonempty(w, x, m);
  // the formula is evaluated even for empty cells (the datum still carries
  // the nonempty flag); only nonempty cells contribute to Betti data.
  datum.row_dims.assign(n > 0 ? n - 1 : 0, 0);

  const Permutation wi = w.inverse();
  std::vector<int> row_pivot(n + 1, 0);  // row -> pivot column, 0 if none
  for (const auto& [pi, pj] : core::pivots(x.nil_exact())) row_pivot[pi] = pj;

  const auto& diag = x.diag();
  for (int i = 1; i <= n; ++i)
    for (int k = i + 1; k <= n; ++k) {
      if (wi(i) <= wi(k)) continue;  // not an inversion of w^{-1}
      bool counts;
      if (diag[i - 1] == diag[k - 1]) {
        counts = true;
        if (row_pivot[k]) counts = m(wi(row_pivot[k])) >= wi(i);
      } else {
        counts = m(wi(k)) >= wi(i);
      }
      if (counts) ++datum.row_dims[i - 1];
    }
  datum.dim = 0;
  for (int d : datum.row_dims) datum.dim += d;
  return datum;
}

inline std::vector<CellDatum> all_cell_data(const CanonicalMatrix& x,
                                            const HessenbergVector& m) {
  std::vector<CellDatum> out;
  symgrp::for_each_permutation(m.n(), [&](const Permutation& w) {
    out.push_back(cell_dimension(w, x, m));
  });
  return out;
}

// sum of t^{dim} over nonempty cells.
inline QPoly poincare_tymoczko(const core::JordanType& type, const HessenbergVector& m) {
  const CanonicalMatrix x(type);
  std::map<int, bigint> by_dim;
  symgrp::for_each_permutation(m.n(), [&](const Permutation& w) {
    CellDatum d = cell_dimension(w, x, m);
    if (d.nonempty) by_dim[d.dim] += 1;
  });
  if (by_dim.empty()) return QPoly();
  std::vector<bigint> c(static_cast<size_t>(by_dim.rbegin()->first) + 1, bigint(0));
  for (const auto& [dim, count] : by_dim) c[static_cast<size_t>(dim)] = count;
  return QPoly(std::move(c));
}

// number of nonempty cells (the Poincare polynomial at t = 1).
inline bigint euler_characteristic(const core::JordanType& type, const HessenbergVector& m) {
  const CanonicalMatrix x(type);
  bigint count = 0;
  symgrp::for_each_permutation(m.n(), [&](const Permutation& w) {
    if (cell_nonempty(w, x, m)) ++count;
  });
  return count;
}

}  // namespace hess::paving
