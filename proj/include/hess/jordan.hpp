#pragma once

#include <algorithm>
#include <cctype>
#include <functional>
#include <string>
#include <vector>

#include "hess/errors.hpp"

namespace hess::core {

// conjugacy-class data: one integer partition of block sizes per distinct
// eigenvalue.  default eigenvalues are 1..r, which keeps matrix entries
// small (good for prime admissibility) and never changes Betti data.
class JordanType {
 public:
  JordanType() = default;
  JordanType(std::vector<std::vector<int>> partitions, std::vector<long long> eigenvalues)
      : parts_(std::move(partitions)), evs_(std::move(eigenvalues)) {
    validate();
  }
  explicit JordanType(std::vector<std::vector<int>> partitions)
      : parts_(std::move(partitions)) {
    evs_.resize(parts_.size());
    for (size_t j = 0; j < evs_.size(); ++j) evs_[j] = static_cast<long long>(j) + 1;
    validate();
  }

  int n() const {
    int total = 0;
    for (const auto& lam : parts_)
      for (int part : lam) total += part;
    return total;
  }
  int r() const { return static_cast<int>(parts_.size()); }
  const std::vector<std::vector<int>>& partitions() const { return parts_; }
  const std::vector<long long>& eigenvalues() const { return evs_; }

  // geometric multiplicities: d_j = number of parts of the j-th partition
  // (the kernel dimension of x - c_j I).
  std::vector<int> multiplicities() const {
    std::vector<int> d(parts_.size());
    for (size_t j = 0; j < parts_.size(); ++j) d[j] = static_cast<int>(parts_[j].size());
    return d;
  }
  int max_multiplicity() const {
    int best = 0;
    for (const auto& lam : parts_) best = std::max(best, static_cast<int>(lam.size()));
    return best;
  }
  // scalar matrix: one eigenvalue, all blocks trivial.
  bool is_scalar() const {
    if (parts_.size() != 1) return false;
    for (int part : parts_[0])
      if (part != 1) return false;
    return true;
  }
  // one eigenvalue: x is a scalar shift of a nilpotent.
  bool single_eigenvalue() const { return parts_.size() == 1; }

  JordanType with_eigenvalues(std::vector<long long> evs) const {
    return JordanType(parts_, std::move(evs));
  }

  // "[[2,2],[2]] @ [1,-1]"
  std::string str() const {
    std::string out = "[";
    for (size_t j = 0; j < parts_.size(); ++j) {
      if (j) out += ",";
      out += "[";
      for (size_t k = 0; k < parts_[j].size(); ++k) {
        if (k) out += ",";
        out += std::to_string(parts_[j][k]);
      }
      out += "]";
    }
    out += "] @ [";
    for (size_t j = 0; j < evs_.size(); ++j) {
      if (j) out += ",";
      out += std::to_string(evs_[j]);
    }
    out += "]";
    return out;
  }

  friend bool operator==(const JordanType& a, const JordanType& b) {
    return a.parts_ == b.parts_ && a.evs_ == b.evs_;
  }
  friend bool operator!=(const JordanType& a, const JordanType& b) { return !(a == b); }

 private:
  void validate() const {
    if (parts_.empty()) throw invalid_input("jordan type: no partitions");
    if (parts_.size() != evs_.size())
      throw invalid_input("jordan type: partition/eigenvalue count mismatch");
    for (const auto& lam : parts_) {
      if (lam.empty()) throw invalid_input("jordan type: empty partition");
      for (size_t k = 0; k < lam.size(); ++k) {
        if (lam[k] < 1) throw invalid_input("jordan type: nonpositive part");
        if (k > 0 && lam[k] > lam[k - 1])
          throw invalid_input("jordan type: partition must be weakly decreasing");
      }
    }
    for (size_t a = 0; a < evs_.size(); ++a)
      for (size_t b = a + 1; b < evs_.size(); ++b)
        if (evs_[a] == evs_[b])
          throw invalid_input("jordan type: repeated eigenvalue");
  }

  std::vector<std::vector<int>> parts_;
  std::vector<long long> evs_;
};

// accepts "[[2,2],[2]] @ [1,-1]" or "[[2,2],[2]]" (default eigenvalues 1..r).
inline JordanType parse_jordan_type(const std::string& text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  std::string part_text = s, ev_text;
  auto at = s.find('@');
  if (at != std::string::npos) {
    part_text = s.substr(0, at);
    ev_text = s.substr(at + 1);
  }

  size_t pos = 0;
  auto fail = [&](const std::string& why) -> invalid_input {
    return invalid_input("jordan type parse: " + why + " in '" + text + "'");
  };
  auto expect = [&](char ch, const std::string& where) {
    if (pos >= part_text.size() || part_text[pos] != ch) throw fail("expected '" + std::string(1, ch) + "' " + where);
    ++pos;
  };
  auto read_int = [&](const std::string& str, size_t& at_pos) -> long long {
    size_t start = at_pos;
    if (at_pos < str.size() && (str[at_pos] == '-' || str[at_pos] == '+')) ++at_pos;
    while (at_pos < str.size() && std::isdigit(static_cast<unsigned char>(str[at_pos]))) ++at_pos;
    if (at_pos == start) throw fail("expected integer");
    return std::stoll(str.substr(start, at_pos - start));
  };

  std::vector<std::vector<int>> partitions;
  expect('[', "at start");
  while (pos < part_text.size() && part_text[pos] != ']') {
    expect('[', "before partition");
    std::vector<int> lam;
    while (pos < part_text.size() && part_text[pos] != ']') {
      lam.push_back(static_cast<int>(read_int(part_text, pos)));
      if (pos < part_text.size() && part_text[pos] == ',') ++pos;
    }
    expect(']', "after partition");
    partitions.push_back(std::move(lam));
    if (pos < part_text.size() && part_text[pos] == ',') ++pos;
  }
  expect(']', "at end");
  if (pos != part_text.size()) throw fail("trailing characters");

  if (ev_text.empty()) return JordanType(std::move(partitions));

  std::vector<long long> evs;
  size_t epos = 0;
  if (epos >= ev_text.size() || ev_text[epos] != '[') throw fail("expected '[' in eigenvalue list");
  ++epos;
  while (epos < ev_text.size() && ev_text[epos] != ']') {
    evs.push_back(read_int(ev_text, epos));
    if (epos < ev_text.size() && ev_text[epos] == ',') ++epos;
  }
  if (epos >= ev_text.size() || ev_text[epos] != ']') throw fail("unterminated eigenvalue list");
  if (epos + 1 != ev_text.size()) throw fail("trailing characters after eigenvalue list");
  return JordanType(std::move(partitions), std::move(evs));
}

namespace detail {

inline std::vector<std::vector<int>> partitions_of(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int left, int maxpart) {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (int part = std::min(left, maxpart); part >= 1; --part) {
      cur.push_back(part);
      rec(left - part, part);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

}  // namespace detail

// all types of size n with default eigenvalues: ordered tuples of partitions
// over all compositions of n.  counts for n = 2..6: 3, 8, 22, 59, 160.
inline std::vector<JordanType> all_jordan_types(int n) {
  if (n < 1) throw invalid_input("all_jordan_types: need n >= 1");
  std::vector<std::vector<std::vector<int>>> parts_by_size(n + 1);
  for (int k = 1; k <= n; ++k) parts_by_size[k] = detail::partitions_of(k);
  std::vector<JordanType> out;
  std::vector<std::vector<int>> cur;
  std::function<void(int)> rec = [&](int left) {
    if (left == 0) {
      out.push_back(JordanType(cur));
      return;
    }
    for (int k = 1; k <= left; ++k)
      for (const auto& lam : parts_by_size[k]) {
        cur.push_back(lam);
        rec(left - k);
        cur.pop_back();
      }
  };
  rec(n);
  return out;
}

}  // namespace hess::core
