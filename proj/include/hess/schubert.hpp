#pragma once

#include <array>
#include <vector>

#include "hess/permutation.hpp"
#include "hess/qpoly.hpp"

namespace hess::symgrp {

// sum of t^{length(u)} over u <= w.
inline QPoly schubert_poincare(const Permutation& w) {
  std::vector<bigint> c(static_cast<size_t>(length(w)) + 1, bigint(0));
  for_each_permutation(w.n(), [&](const Permutation& u) {
    if (bruhat_leq(u, w)) c[static_cast<size_t>(length(u))] += 1;
  });
  return QPoly(std::move(c));
}

// number of u <= w (the Poincare polynomial at t = 1).
inline bigint schubert_euler(const Permutation& w) {
  bigint count = 0;
  for_each_permutation(w.n(), [&](const Permutation& u) {
    if (bruhat_leq(u, w)) ++count;
  });
  return count;
}

namespace detail {

// both interchange patterns take a quadruple of positions in w carrying a
// fixed relative value pattern, locate the four rearranged values in v, and
// demand the two spliced words v', w' wedge between:  v' <= v <= w' <= w.
inline bool interchange_pair_exists(const Permutation& v, const Permutation& w) {
  const int n = w.n();
  std::vector<int> pos_v(n + 1);
  for (int i = 1; i <= n; ++i) pos_v[v(i)] = i;

  auto splice = [&](const Permutation& base, const std::array<int, 4>& pos,
                    const std::array<int, 4>& val) {
    std::vector<int> word = base.word();
    for (int t = 0; t < 4; ++t) word[pos[t] - 1] = val[t];
    return Permutation(std::move(word));
  };

  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k)
        for (int l = k + 1; l <= n; ++l) {
          const int wi = w(i), wj = w(j), wk = w(k), wl = w(l);
          // pattern one: w_k < w_l < w_i < w_j at positions i<j<k<l.
          if (wk < wl && wl < wi && wi < wj) {
            const int ip = pos_v[wk], jp = pos_v[wi], kp = pos_v[wl], lp = pos_v[wj];
            if (ip < jp && jp < kp && kp < lp) {
              Permutation vp = splice(w, {i, j, k, l}, {wk, wi, wl, wj});
              Permutation wp = splice(v, {ip, jp, kp, lp}, {v(jp), v(lp), v(ip), v(kp)});
              if (bruhat_leq(vp, v) && bruhat_leq(v, wp) && bruhat_leq(wp, w)) return true;
            }
          }
          // pattern two: w_l < w_j < w_k < w_i at positions i<j<k<l.
          if (wl < wj && wj < wk && wk < wi) {
            const int ip = pos_v[wj], jp = pos_v[wl], kp = pos_v[wi], lp = pos_v[wk];
            if (ip < jp && jp < kp && kp < lp) {
              Permutation vp = splice(w, {i, j, k, l}, {wj, wl, wi, wk});
              Permutation wp = splice(v, {ip, jp, kp, lp}, {v(kp), v(ip), v(lp), v(jp)});
              if (bruhat_leq(vp, v) && bruhat_leq(v, wp) && bruhat_leq(wp, w)) return true;
            }
          }
        }
  return false;
}

}  // namespace detail

// the set of v admitting an interchange pair with w, i.e. the v whose
// Schubert cells lie in the singular locus of the closure indexed by w.
inline std::vector<Permutation> ls_singular_set(const Permutation& w) {
  std::vector<Permutation> out;
  for_each_permutation(w.n(), [&](const Permutation& v) {
    if (detail::interchange_pair_exists(v, w)) out.push_back(v);
  });
  return out;
}

// Bruhat-maximal elements of ls_singular_set(w); the singular locus is the
// union of the closures they index.  empty means the variety is smooth.
inline std::vector<Permutation> ls_singular_maximal(const Permutation& w) {
  std::vector<Permutation> zw = ls_singular_set(w);
  std::vector<Permutation> out;
  for (const Permutation& v : zw) {
    bool maximal = true;
    for (const Permutation& u : zw)
      if (u != v && bruhat_leq(v, u)) {
        maximal = false;
        break;
      }
    if (maximal) out.push_back(v);
  }
  return out;
}

// [n, n-1, ..., 5, 2, 1, 4, 3]: descending word with the last four letters
// replaced by 2,1,4,3.
inline Permutation v2(int n) {
  if (n < 4) throw invalid_input("v2: need n >= 4");
  std::vector<int> w(n);
  for (int i = 1; i <= n - 4; ++i) w[i - 1] = n + 1 - i;
  w[n - 4] = 2;
  w[n - 3] = 1;
  w[n - 2] = 4;
  w[n - 1] = 3;
  return Permutation(std::move(w));
}

// [n-2, n-3, n, n-1, n-4, n-5, ..., 1]: descending word with the first four
// letters replaced by n-2, n-3, n, n-1.
inline Permutation vn2(int n) {
  if (n < 4) throw invalid_input("vn2: need n >= 4");
  std::vector<int> w(n);
  w[0] = n - 2;
  w[1] = n - 3;
  w[2] = n;
  w[3] = n - 1;
  for (int i = 5; i <= n; ++i) w[i - 1] = n + 1 - i;
  return Permutation(std::move(w));
}

}  // namespace hess::symgrp
