#pragma once

#include <functional>
#include <string>
#include <vector>

#include "hess/errors.hpp"

namespace hess::core {

// nondecreasing m with m(i) >= i and m(n) = n; the subspace-growth profile
// x V_i <= V_{m(i)} defining a variety inside the flag variety.
class HessenbergVector {
 public:
  HessenbergVector() = default;
  explicit HessenbergVector(std::vector<int> m) : m_(std::move(m)) {
    const int n = static_cast<int>(m_.size());
    if (n < 1) throw invalid_input("hessenberg vector: empty");
    for (int i = 1; i <= n; ++i) {
      if (m_[i - 1] < i || m_[i - 1] > n)
        throw invalid_input("hessenberg vector: need i <= m(i) <= n");
      if (i > 1 && m_[i - 1] < m_[i - 2])
        throw invalid_input("hessenberg vector: must be nondecreasing");
    }
    if (m_[n - 1] != n) throw invalid_input("hessenberg vector: need m(n) = n");
  }

  // (n-1, n, n, ..., n): the codimension-one profile.
  static HessenbergVector m_max(int n) {
    if (n < 2) throw invalid_input("m_max: need n >= 2");
    std::vector<int> m(n, n);
    m[0] = n - 1;
    return HessenbergVector(std::move(m));
  }
  // (1, n-1, ..., n-1, n): the profile whose variety carries the fixed-line
  // fibration.  at n = 3 this is (1, 2, 3).
  static HessenbergVector m_sing(int n) {
    if (n < 3) throw invalid_input("m_sing: need n >= 3");
    std::vector<int> m(n, n - 1);
    m[0] = 1;
    m[n - 1] = n;
    return HessenbergVector(std::move(m));
  }

  int n() const { return static_cast<int>(m_.size()); }
  int operator()(int i) const { return m_[i - 1]; }
  const std::vector<int>& vec() const { return m_; }

  bool is_m_max() const { return n() >= 2 && m_ == m_max(n()).m_; }

  friend bool operator==(const HessenbergVector& a, const HessenbergVector& b) {
    return a.m_ == b.m_;
  }
  friend bool operator!=(const HessenbergVector& a, const HessenbergVector& b) {
    return !(a == b);
  }
  friend bool operator<(const HessenbergVector& a, const HessenbergVector& b) {
    return a.m_ < b.m_;
  }

  std::string str() const {
    std::string out;
    for (size_t i = 0; i < m_.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(m_[i]);
    }
    return out;
  }

 private:
  std::vector<int> m_;
};

// accepts the aliases "max" and "sing" (resolved at size n) or a literal
// comma-separated word like "2,3,4,4".
inline HessenbergVector parse_hessenberg(const std::string& text, int n) {
  if (text == "max") return HessenbergVector::m_max(n);
  if (text == "sing") return HessenbergVector::m_sing(n);
  std::vector<int> m;
  std::string cur;
  for (char ch : text + ",") {
    if (ch == ',') {
      if (cur.empty()) throw invalid_input("hessenberg parse: empty entry");
      try {
        m.push_back(std::stoi(cur));
      } catch (...) {
        throw invalid_input("hessenberg parse: bad entry '" + cur + "'");
      }
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(ch))) {
      cur += ch;
    }
  }
  if (static_cast<int>(m.size()) != n)
    throw invalid_input("hessenberg parse: length disagrees with n");
  return HessenbergVector(std::move(m));
}

// all valid vectors for a given n, in lexicographic order; there are
// Catalan(n) of them (2, 5, 14, 42, 132 for n = 2..6).
inline std::vector<HessenbergVector> all_hessenberg_vectors(int n) {
  std::vector<HessenbergVector> out;
  std::vector<int> m(n);
  std::function<void(int)> rec = [&](int i) {
    if (i == n) {
      if (m[n - 1] == n) out.push_back(HessenbergVector(m));
      return;
    }
    const int lo = std::max(i + 1, i > 0 ? m[i - 1] : 1);
    for (int v = lo; v <= n; ++v) {
      m[i] = v;
      rec(i + 1);
    }
  };
  rec(0);
  return out;
}

}  // namespace hess::core
