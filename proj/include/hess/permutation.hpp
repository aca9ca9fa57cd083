#pragma once

#include <algorithm>
#include <cassert>
#include <functional>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "hess/errors.hpp"

namespace hess::symgrp {

// one-line notation [w_1,...,w_n]; w(i) = word[i-1].
// composition convention: (v*w)(j) = v(w(j)).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> word) : w_(std::move(word)) {
    std::vector<char> seen(w_.size() + 1, 0);
    for (int v : w_) {
      if (v < 1 || v > static_cast<int>(w_.size()) || seen[v])
        throw invalid_input("permutation word is not a bijection of [n]");
      seen[v] = 1;
    }
  }
  static Permutation identity(int n) {
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 1);
    return Permutation(std::move(w));
  }
  // longest element: i -> n+1-i.
  static Permutation w0(int n) {
    std::vector<int> w(n);
    for (int i = 0; i < n; ++i) w[i] = n - i;
    return Permutation(std::move(w));
  }
  // simple reflection exchanging i and i+1 (1-based), fixing the rest.
  static Permutation s(int i, int n) {
    if (i < 1 || i >= n) throw invalid_input("simple reflection index out of range");
    Permutation p = identity(n);
    std::swap(p.w_[i - 1], p.w_[i]);
    return p;
  }

  int n() const { return static_cast<int>(w_.size()); }
  int operator()(int i) const {
    assert(i >= 1 && i <= n());
    return w_[i - 1];
  }
  const std::vector<int>& word() const { return w_; }

  Permutation inverse() const {
    std::vector<int> inv(w_.size());
    for (int i = 1; i <= n(); ++i) inv[w_[i - 1] - 1] = i;
    return Permutation(std::move(inv));
  }
  friend Permutation operator*(const Permutation& v, const Permutation& w) {
    if (v.n() != w.n()) throw invalid_input("permutation size mismatch");
    std::vector<int> out(v.w_.size());
    for (int j = 1; j <= v.n(); ++j) out[j - 1] = v(w(j));
    return Permutation(std::move(out));
  }
  friend bool operator==(const Permutation& a, const Permutation& b) { return a.w_ == b.w_; }
  friend bool operator!=(const Permutation& a, const Permutation& b) { return !(a == b); }
  friend bool operator<(const Permutation& a, const Permutation& b) { return a.w_ < b.w_; }

  std::string str() const {
    std::string out;
    for (size_t i = 0; i < w_.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(w_[i]);
    }
    return out;
  }

 private:
  std::vector<int> w_;
};

// all (i<j) with w_i > w_j.
inline std::set<std::pair<int, int>> inversions(const Permutation& w) {
  std::set<std::pair<int, int>> out;
  for (int i = 1; i <= w.n(); ++i)
    for (int j = i + 1; j <= w.n(); ++j)
      if (w(i) > w(j)) out.insert({i, j});
  return out;
}

inline int length(const Permutation& w) {
  int len = 0;
  for (int i = 1; i <= w.n(); ++i)
    for (int j = i + 1; j <= w.n(); ++j)
      if (w(i) > w(j)) ++len;
  return len;
}

// p-th smallest of {w_1,...,w_q}.
inline int tableau_entry(const Permutation& w, int p, int q) {
  if (!(1 <= p && p <= q && q <= w.n()))
    throw invalid_input("tableau_entry: need 1 <= p <= q <= n");
  std::vector<int> pre(w.word().begin(), w.word().begin() + q);
  std::nth_element(pre.begin(), pre.begin() + (p - 1), pre.end());
  return pre[p - 1];
}

// tableau criterion: v <= w iff the p-th smallest of each q-prefix of v
// never exceeds that of w.  O(n^2) sweep with incremental sorted prefixes.
inline bool bruhat_leq(const Permutation& v, const Permutation& w) {
  if (v.n() != w.n()) throw invalid_input("bruhat_leq: size mismatch");
  const int n = v.n();
  std::vector<int> pv, pw;
  pv.reserve(n);
  pw.reserve(n);
  for (int q = 1; q <= n; ++q) {
    pv.insert(std::upper_bound(pv.begin(), pv.end(), v(q)), v(q));
    pw.insert(std::upper_bound(pw.begin(), pw.end(), w(q)), w(q));
    for (int p = 0; p < q; ++p)
      if (pv[p] > pw[p]) return false;
  }
  return true;
}

// visit all n! permutations in lexicographic word order.
inline void for_each_permutation(int n, const std::function<void(const Permutation&)>& fn) {
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  do {
    fn(Permutation(w));
  } while (std::next_permutation(w.begin(), w.end()));
}

inline std::vector<Permutation> all_permutations(int n) {
  std::vector<Permutation> out;
  for_each_permutation(n, [&](const Permutation& w) { out.push_back(w); });
  return out;
}

// accepts "3,1,2", "w0@n=4", "id@n=4", and "s<i>w0@n=<k>".
inline Permutation parse_permutation(const std::string& text) {
  auto at = text.find("@n=");
  if (at != std::string::npos) {
    int n = 0;
    try {
      n = std::stoi(text.substr(at + 3));
    } catch (...) {
      throw invalid_input("permutation parse: bad size in '" + text + "'");
    }
    std::string head = text.substr(0, at);
    if (head == "id") return Permutation::identity(n);
    if (head == "w0") return Permutation::w0(n);
    if (head.size() > 3 && head[0] == 's' && head.substr(head.size() - 2) == "w0") {
      int i = 0;
      try {
        i = std::stoi(head.substr(1, head.size() - 3));
      } catch (...) {
        throw invalid_input("permutation parse: bad reflection index in '" + text + "'");
      }
      return Permutation::s(i, n) * Permutation::w0(n);
    }
    throw invalid_input("permutation parse: unknown form '" + text + "'");
  }
  std::vector<int> word;
  std::string cur;
  for (char ch : text + ",") {
    if (ch == ',') {
      if (cur.empty()) throw invalid_input("permutation parse: empty entry");
      try {
        word.push_back(std::stoi(cur));
      } catch (...) {
        throw invalid_input("permutation parse: bad entry '" + cur + "'");
      }
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(ch))) {
      cur += ch;
    }
  }
  return Permutation(std::move(word));
}

}  // namespace hess::symgrp
