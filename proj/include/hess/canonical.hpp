#pragma once

#include <algorithm>
#include <set>
#include <utility>
#include <vector>

#include "hess/exactmat.hpp"
#include "hess/fpmat.hpp"
#include "hess/jordan.hpp"

namespace hess::core {

using ffla::ExactMatrix;
using ffla::FpMatrix;

// 0-1 nilpotent from the Young-diagram labeling: boxes are numbered column
// by column, each column bottom to top; entry (i,j) is 1 iff box i sits
// immediately left of box j.  every nonzero entry is a pivot and pivot
// columns are as far right as possible.
inline std::vector<std::vector<int>> highest_form(const std::vector<int>& lam) {
  int n = 0;
  for (size_t k = 0; k < lam.size(); ++k) {
    if (lam[k] < 1) throw invalid_input("highest_form: nonpositive part");
    if (k > 0 && lam[k] > lam[k - 1])
      throw invalid_input("highest_form: partition must be weakly decreasing");
    n += lam[k];
  }
  // column c (0-based) of the diagram has height #{rows r : lam[r] > c}
  std::vector<int> heights;
  for (int c = 0;; ++c) {
    int h = 0;
    for (int part : lam)
      if (part > c) ++h;
    if (!h) break;
    heights.push_back(h);
  }
  // label[r][c] with rows indexed from the top
  std::vector<std::vector<int>> label(lam.size(), std::vector<int>(heights.size(), 0));
  int cur = 1;
  for (size_t c = 0; c < heights.size(); ++c)
    for (int r = heights[c] - 1; r >= 0; --r) label[r][c] = cur++;
  std::vector<std::vector<int>> nil(n, std::vector<int>(n, 0));
  for (size_t c = 0; c + 1 < heights.size(); ++c)
    for (int r = 0; r < heights[c + 1]; ++r)
      nil[label[r][c] - 1][label[r][c + 1] - 1] = 1;
  return nil;
}

// positions (i,j) with a nonzero entry whose column is zero below it and
// whose row is zero to its left.
inline std::set<std::pair<int, int>> pivots(const ExactMatrix& x) {
  std::set<std::pair<int, int>> out;
  const int n = x.n();
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (x.at(i, j) == 0) continue;
      bool pivot = true;
      for (int k = i + 1; k <= n && pivot; ++k)
        if (x.at(k, j) != 0) pivot = false;
      for (int k = 1; k < j && pivot; ++k)
        if (x.at(i, k) != 0) pivot = false;
      if (pivot) out.insert({i, j});
    }
  return out;
}

// canonical conjugacy-class representative x = s + nil: block-diagonal with
// eigenvalue c_j repeated over block j and the block's partition in highest
// form.  s and nil commute because nil never crosses blocks.
class CanonicalMatrix {
 public:
  explicit CanonicalMatrix(const JordanType& type) : type_(type) {
    const int n = type.n();
    diag_.assign(n, 0);
    nil_.assign(n, std::vector<int>(n, 0));
    int off = 0;
    for (int b = 0; b < type.r(); ++b) {
      const auto& lam = type.partitions()[b];
      int sz = 0;
      for (int part : lam) sz += part;
      auto hf = highest_form(lam);
      for (int i = 0; i < sz; ++i) {
        diag_[off + i] = type.eigenvalues()[b];
        for (int j = 0; j < sz; ++j)
          if (hf[i][j]) nil_[off + i][off + j] = 1;
      }
      off += sz;
    }
    m_s_ = 0;
    for (long long v : diag_) m_s_ = std::max(m_s_, v < 0 ? -v : v);
  }

  int n() const { return static_cast<int>(diag_.size()); }
  const JordanType& type() const { return type_; }
  const std::vector<long long>& diag() const { return diag_; }
  const std::vector<std::vector<int>>& nil() const { return nil_; }
  // max |eigenvalue|: p > 2 m_s is a sufficient admissibility bound.
  long long m_s() const { return m_s_; }

  long long entry(int i, int j) const {
    return (i == j ? diag_[i - 1] : 0) + nil_[i - 1][j - 1];
  }

  // the distinct integer values occurring among the entries of x.
  std::vector<long long> entry_values() const {
    std::set<long long> vals;
    const int n = this->n();
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) vals.insert(entry(i, j));
    return std::vector<long long>(vals.begin(), vals.end());
  }

  ExactMatrix to_exact() const {
    const int n = this->n();
    ExactMatrix out(n);
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) out.at(i, j) = entry(i, j);
    return out;
  }
  ffla::FpMatrix to_fp(long long p) const {
    const int n = this->n();
    ffla::FpMatrix out(n, p);
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) out.at(i, j) = ((entry(i, j) % p) + p) % p;
    return out;
  }

  ExactMatrix nil_exact() const {
    const int n = this->n();
    ExactMatrix out(n);
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) out.at(i, j) = nil_[i - 1][j - 1];
    return out;
  }

 private:
  JordanType type_;
  std::vector<long long> diag_;
  std::vector<std::vector<int>> nil_;
  long long m_s_ = 0;
};

inline CanonicalMatrix hfpjf(const JordanType& type) { return CanonicalMatrix(type); }

}  // namespace hess::core
