#pragma once

#include <algorithm>
#include <cassert>
#include <utility>
#include <vector>

#include "hess/errors.hpp"
#include "hess/hessenberg.hpp"
#include "hess/qpoly.hpp"

namespace hess::ffla {

// square matrix with exact rational entries.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  explicit ExactMatrix(int n) : n_(n), a_(static_cast<size_t>(n) * n, bigrat(0)) {
    if (n < 1) throw invalid_input("ExactMatrix: need n >= 1");
  }
  static ExactMatrix identity(int n) {
    ExactMatrix m(n);
    for (int i = 1; i <= n; ++i) m.at(i, i) = 1;
    return m;
  }
  static ExactMatrix from_rows(const std::vector<std::vector<bigrat>>& rows) {
    const int n = static_cast<int>(rows.size());
    ExactMatrix m(n);
    for (int i = 1; i <= n; ++i) {
      if (static_cast<int>(rows[i - 1].size()) != n)
        throw invalid_input("ExactMatrix: ragged rows");
      for (int j = 1; j <= n; ++j) m.at(i, j) = rows[i - 1][j - 1];
    }
    return m;
  }
  // permutation matrix of w: columns are e_{w(1)}, ..., e_{w(n)}, so the
  // flag it defines is span(e_{w(1)}) < span(e_{w(1)}, e_{w(2)}) < ...
  static ExactMatrix permutation(const std::vector<int>& w) {
    const int n = static_cast<int>(w.size());
    ExactMatrix m(n);
    for (int j = 1; j <= n; ++j) m.at(w[j - 1], j) = 1;
    return m;
  }

  int n() const { return n_; }
  bigrat& at(int i, int j) { return a_[static_cast<size_t>(i - 1) * n_ + (j - 1)]; }
  const bigrat& at(int i, int j) const { return a_[static_cast<size_t>(i - 1) * n_ + (j - 1)]; }

  friend bool operator==(const ExactMatrix& x, const ExactMatrix& y) {
    return x.n_ == y.n_ && x.a_ == y.a_;
  }
  friend bool operator!=(const ExactMatrix& x, const ExactMatrix& y) { return !(x == y); }

  friend ExactMatrix operator*(const ExactMatrix& x, const ExactMatrix& y) {
    assert(x.n_ == y.n_);
    const int n = x.n_;
    ExactMatrix out(n);
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        bigrat acc = 0;
        for (int k = 1; k <= n; ++k) acc += x.at(i, k) * y.at(k, j);
        out.at(i, j) = std::move(acc);
      }
    return out;
  }
  friend ExactMatrix operator+(const ExactMatrix& x, const ExactMatrix& y) {
    assert(x.n_ == y.n_);
    ExactMatrix out(x.n_);
    for (size_t k = 0; k < x.a_.size(); ++k) out.a_[k] = x.a_[k] + y.a_[k];
    return out;
  }

  std::vector<bigrat> column(int j) const {
    std::vector<bigrat> out(n_);
    for (int i = 1; i <= n_; ++i) out[i - 1] = at(i, j);
    return out;
  }

  bool is_scalar() const {
    for (int i = 1; i <= n_; ++i)
      for (int j = 1; j <= n_; ++j)
        if (at(i, j) != (i == j ? at(1, 1) : bigrat(0))) return false;
    return true;
  }

 private:
  int n_ = 0;
  std::vector<bigrat> a_;
};

inline int mat_rank(ExactMatrix m) {
  const int n = m.n();
  int rank = 0;
  for (int col = 1; col <= n && rank < n; ++col) {
    int piv = 0;
    for (int i = rank + 1; i <= n; ++i)
      if (m.at(i, col) != 0) {
        piv = i;
        break;
      }
    if (!piv) continue;
    for (int j = 1; j <= n; ++j) std::swap(m.at(rank + 1, j), m.at(piv, j));
    const bigrat lead = m.at(rank + 1, col);
    for (int i = rank + 2; i <= n; ++i) {
      if (m.at(i, col) == 0) continue;
      const bigrat f = m.at(i, col) / lead;
      for (int j = col; j <= n; ++j) m.at(i, j) -= f * m.at(rank + 1, j);
    }
    ++rank;
  }
  return rank;
}

// rank of the n x k matrix whose columns are the given vectors.
inline int column_rank(const std::vector<std::vector<bigrat>>& cols) {
  if (cols.empty()) return 0;
  const int n = static_cast<int>(cols[0].size());
  const int k = static_cast<int>(cols.size());
  // embed into a square matrix padded with zero columns
  const int dim = std::max(n, k);
  ExactMatrix m(dim);
  for (int j = 0; j < k; ++j)
    for (int i = 0; i < n; ++i) m.at(i + 1, j + 1) = cols[j][i];
  return mat_rank(m);
}

inline bigrat det(ExactMatrix m) {
  const int n = m.n();
  bigrat result = 1;
  for (int col = 1; col <= n; ++col) {
    int piv = 0;
    for (int i = col; i <= n; ++i)
      if (m.at(i, col) != 0) {
        piv = i;
        break;
      }
    if (!piv) return bigrat(0);
    if (piv != col) {
      for (int j = 1; j <= n; ++j) std::swap(m.at(col, j), m.at(piv, j));
      result = -result;
    }
    const bigrat lead = m.at(col, col);
    result *= lead;
    for (int i = col + 1; i <= n; ++i) {
      if (m.at(i, col) == 0) continue;
      const bigrat f = m.at(i, col) / lead;
      for (int j = col; j <= n; ++j) m.at(i, j) -= f * m.at(col, j);
    }
  }
  return result;
}

inline ExactMatrix inverse(const ExactMatrix& g) {
  const int n = g.n();
  ExactMatrix m = g;
  ExactMatrix inv = ExactMatrix::identity(n);
  for (int col = 1; col <= n; ++col) {
    int piv = 0;
    for (int i = col; i <= n; ++i)
      if (m.at(i, col) != 0) {
        piv = i;
        break;
      }
    if (!piv) throw invalid_input("ExactMatrix inverse: matrix is singular");
    for (int j = 1; j <= n; ++j) {
      std::swap(m.at(col, j), m.at(piv, j));
      std::swap(inv.at(col, j), inv.at(piv, j));
    }
    const bigrat s = m.at(col, col);
    for (int j = 1; j <= n; ++j) {
      m.at(col, j) /= s;
      inv.at(col, j) /= s;
    }
    for (int i = 1; i <= n; ++i) {
      if (i == col) continue;
      const bigrat f = m.at(i, col);
      if (f == 0) continue;
      for (int j = 1; j <= n; ++j) {
        m.at(i, j) -= f * m.at(col, j);
        inv.at(i, j) -= f * inv.at(col, j);
      }
    }
  }
  return inv;
}

inline bool in_hessenberg(const ExactMatrix& a, const core::HessenbergVector& m) {
  if (a.n() != m.n()) throw invalid_input("in_hessenberg: size mismatch");
  for (int j = 1; j <= a.n(); ++j)
    for (int i = m(j) + 1; i <= a.n(); ++i)
      if (a.at(i, j) != 0) return false;
  return true;
}

// g^{-1} x g; throws on singular g.
inline ExactMatrix conjugate(const ExactMatrix& g, const ExactMatrix& x) {
  if (g.n() != x.n()) throw invalid_input("conjugate: size mismatch");
  return inverse(g) * (x * g);
}

}  // namespace hess::ffla
