#pragma once

#include <cassert>
#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "hess/errors.hpp"
#include "hess/hessenberg.hpp"
#include "hess/qpoly.hpp"

namespace hess::ffla {

inline bool is_prime(long long p) {
  if (p < 2) return false;
  for (long long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// square matrix over F_p, entries stored reduced in [0, p).
class FpMatrix {
 public:
  FpMatrix() = default;
  FpMatrix(int n, long long p) : n_(n), p_(p), a_(static_cast<size_t>(n) * n, 0) {
    if (n < 1) throw invalid_input("FpMatrix: need n >= 1");
    if (!is_prime(p)) throw invalid_input("FpMatrix: modulus must be prime");
  }
  static FpMatrix identity(int n, long long p) {
    FpMatrix m(n, p);
    for (int i = 1; i <= n; ++i) m.at(i, i) = 1;
    return m;
  }
  static FpMatrix from_rows(const std::vector<std::vector<long long>>& rows, long long p) {
    const int n = static_cast<int>(rows.size());
    FpMatrix m(n, p);
    for (int i = 1; i <= n; ++i) {
      if (static_cast<int>(rows[i - 1].size()) != n)
        throw invalid_input("FpMatrix: ragged rows");
      for (int j = 1; j <= n; ++j) m.at(i, j) = ((rows[i - 1][j - 1] % p) + p) % p;
    }
    return m;
  }

  int n() const { return n_; }
  long long p() const { return p_; }
  // 1-based access.
  long long& at(int i, int j) { return a_[static_cast<size_t>(i - 1) * n_ + (j - 1)]; }
  long long at(int i, int j) const { return a_[static_cast<size_t>(i - 1) * n_ + (j - 1)]; }

  friend bool operator==(const FpMatrix& x, const FpMatrix& y) {
    return x.n_ == y.n_ && x.p_ == y.p_ && x.a_ == y.a_;
  }
  friend bool operator!=(const FpMatrix& x, const FpMatrix& y) { return !(x == y); }

  friend FpMatrix operator*(const FpMatrix& x, const FpMatrix& y) {
    assert(x.n_ == y.n_ && x.p_ == y.p_);
    const int n = x.n_;
    const long long p = x.p_;
    FpMatrix out(n, p);
    // entries < p; with p < 2^29 the raw dot product fits in 64 bits for
    // n <= 64, so one reduction at the end suffices.
    const bool small = p < (1LL << 29) && n <= 64;
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        if (small) {
          long long acc = 0;
          for (int k = 1; k <= n; ++k) acc += x.at(i, k) * y.at(k, j);
          out.at(i, j) = acc % p;
        } else {
          unsigned __int128 acc = 0;
          for (int k = 1; k <= n; ++k) {
            acc += static_cast<unsigned __int128>(x.at(i, k)) * static_cast<unsigned __int128>(y.at(k, j));
            acc %= static_cast<unsigned __int128>(p);
          }
          out.at(i, j) = static_cast<long long>(acc);
        }
      }
    return out;
  }

  bool is_scalar() const {
    for (int i = 1; i <= n_; ++i)
      for (int j = 1; j <= n_; ++j)
        if (at(i, j) != (i == j ? at(1, 1) : 0)) return false;
    return true;
  }

 private:
  int n_ = 0;
  long long p_ = 0;
  std::vector<long long> a_;
};

namespace detail {

inline long long fp_inverse(long long v, long long p) {
  // extended Euclid; v in (0, p)
  long long a = v % p, b = p, x0 = 1, x1 = 0;
  while (b) {
    long long q = a / b;
    long long t = a - q * b;
    a = b;
    b = t;
    t = x0 - q * x1;
    x0 = x1;
    x1 = t;
  }
  assert(a == 1);
  return ((x0 % p) + p) % p;
}

}  // namespace detail

inline int mat_rank(FpMatrix m) {
  const int n = m.n();
  const long long p = m.p();
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
    const long long inv = detail::fp_inverse(m.at(rank + 1, col), p);
    for (int j = 1; j <= n; ++j) m.at(rank + 1, j) = m.at(rank + 1, j) * inv % p;
    for (int i = rank + 2; i <= n; ++i) {
      const long long f = m.at(i, col);
      if (!f) continue;
      for (int j = 1; j <= n; ++j)
        m.at(i, j) = ((m.at(i, j) - f * m.at(rank + 1, j)) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

// dim ker(M - lambda I)
inline int kernel_dim(const FpMatrix& m, long long lambda) {
  FpMatrix shifted = m;
  const long long p = m.p();
  const long long lam = ((lambda % p) + p) % p;
  for (int i = 1; i <= m.n(); ++i)
    shifted.at(i, i) = ((shifted.at(i, i) - lam) % p + p) % p;
  return m.n() - mat_rank(shifted);
}

// number of y-invariant lines in F_p^n: eigenlines, summed over lambda in
// F_p as the line count [kernel_dim]_p of each eigenspace.
inline bigint fixed_line_count(const FpMatrix& y) {
  bigint k = 0;
  for (long long lam = 0; lam < y.p(); ++lam)
    k += closedform::q_int_at(kernel_dim(y, lam), y.p());
  return k;
}

// independent oracle: scan every canonical line representative.
inline bigint fixed_line_count_scan(const FpMatrix& y) {
  const int n = y.n();
  const long long p = y.p();
  bigint k = 0;
  std::vector<long long> v(n, 0);
  // odometer over all vectors whose first nonzero coordinate is 1
  std::function<void(int, bool)> rec = [&](int idx, bool lead_placed) {
    if (idx == n) {
      if (!lead_placed) return;
      // y v in span(v)?  find scalar from the first nonzero coordinate.
      std::vector<long long> yv(n, 0);
      for (int i = 0; i < n; ++i) {
        long long acc = 0;
        for (int j = 0; j < n; ++j) acc += y.at(i + 1, j + 1) * v[j];
        yv[i] = acc % p;
      }
      int lead = 0;
      while (v[lead] == 0) ++lead;
      const long long c = yv[lead];  // v[lead] == 1
      for (int i = 0; i < n; ++i)
        if (yv[i] != c * v[i] % p) return;
      k += 1;
      return;
    }
    if (!lead_placed) {
      v[idx] = 0;
      rec(idx + 1, false);
      v[idx] = 1;
      rec(idx + 1, true);
      v[idx] = 0;
    } else {
      for (long long val = 0; val < p; ++val) {
        v[idx] = val;
        rec(idx + 1, true);
      }
      v[idx] = 0;
    }
  };
  rec(0, false);
  return k;
}

inline bool in_hessenberg(const FpMatrix& a, const core::HessenbergVector& m) {
  if (a.n() != m.n()) throw invalid_input("in_hessenberg: size mismatch");
  for (int j = 1; j <= a.n(); ++j)
    for (int i = m(j) + 1; i <= a.n(); ++i)
      if (a.at(i, j) != 0) return false;
  return true;
}

inline FpMatrix inverse(const FpMatrix& g) {
  const int n = g.n();
  const long long p = g.p();
  FpMatrix m = g;
  FpMatrix inv = FpMatrix::identity(n, p);
  for (int col = 1; col <= n; ++col) {
    int piv = 0;
    for (int i = col; i <= n; ++i)
      if (m.at(i, col) != 0) {
        piv = i;
        break;
      }
    if (!piv) throw invalid_input("FpMatrix inverse: matrix is singular");
    for (int j = 1; j <= n; ++j) {
      std::swap(m.at(col, j), m.at(piv, j));
      std::swap(inv.at(col, j), inv.at(piv, j));
    }
    const long long s = detail::fp_inverse(m.at(col, col), p);
    for (int j = 1; j <= n; ++j) {
      m.at(col, j) = m.at(col, j) * s % p;
      inv.at(col, j) = inv.at(col, j) * s % p;
    }
    for (int i = 1; i <= n; ++i) {
      if (i == col) continue;
      const long long f = m.at(i, col);
      if (!f) continue;
      for (int j = 1; j <= n; ++j) {
        m.at(i, j) = ((m.at(i, j) - f * m.at(col, j)) % p + p) % p;
        inv.at(i, j) = ((inv.at(i, j) - f * inv.at(col, j)) % p + p) % p;
      }
    }
  }
  return inv;
}

// g^{-1} x g; throws on singular g.
inline FpMatrix conjugate(const FpMatrix& g, const FpMatrix& x) {
  if (g.n() != x.n() || g.p() != x.p()) throw invalid_input("conjugate: shape/modulus mismatch");
  return inverse(g) * (x * g);
}

}  // namespace hess::ffla
