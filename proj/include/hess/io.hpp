#pragma once

#include <cstdint>
#include <limits>
#include <string>

#include "json.hpp"

#include "hess/census.hpp"
#include "hess/exactmat.hpp"
#include "hess/multipoly.hpp"
#include "hess/patches.hpp"
#include "hess/qpoly.hpp"

namespace hess::io {

using json = nlohmann::json;

inline json bigint_json(const bigint& v) {
  static const bigint lo = std::numeric_limits<std::int64_t>::min();
  static const bigint hi = std::numeric_limits<std::int64_t>::max();
  if (v >= lo && v <= hi) return static_cast<std::int64_t>(v);
  return v.str();
}

inline json rational_json(const bigrat& v) {
  if (boost::multiprecision::denominator(v) == 1)
    return bigint_json(boost::multiprecision::numerator(v));
  return v.str();
}

inline bigrat parse_rational(const json& j) {
  try {
    if (j.is_number_integer()) return bigrat(j.get<std::int64_t>());
    if (j.is_string()) return bigrat(j.get<std::string>());
  } catch (const std::exception&) {
    throw invalid_input("not a rational: " + j.dump());
  }
  throw invalid_input("expected an integer or a rational string, got " + j.dump());
}

// a matrix is either a bare row-major 2D array or {"entries": [[...]]} with
// an optional "modulus"; entries are integers or "a/b" strings.
inline ffla::ExactMatrix exact_matrix_from_json(const json& j) {
  const json* entries = nullptr;
  if (j.is_array()) {
    entries = &j;
  } else if (j.is_object() && j.contains("entries")) {
    entries = &j.at("entries");
  } else {
    throw invalid_input("expected a matrix: a 2D array or {\"entries\": [[...]]}");
  }
  if (!entries->is_array() || entries->empty())
    throw invalid_input("matrix entries must be a nonempty 2D array");
  const size_t n = entries->size();
  std::vector<std::vector<bigrat>> rows;
  for (const json& row : *entries) {
    if (!row.is_array() || row.size() != n)
      throw invalid_input("matrix must be square with equal-length rows");
    std::vector<bigrat> r;
    for (const json& e : row) r.push_back(parse_rational(e));
    rows.push_back(std::move(r));
  }
  return ffla::ExactMatrix::from_rows(rows);
}

inline long long modulus_from_json(const json& j, long long fallback) {
  if (j.is_object() && j.contains("modulus")) return j.at("modulus").get<long long>();
  return fallback;
}

inline json poly_json(const QPoly& p, bool q_render = false) {
  json coeffs = json::array();
  for (const bigint& c : p.coeffs()) coeffs.push_back(bigint_json(c));
  json out;
  out["coefficients"] = coeffs;
  out["rendered"] = p.render(q_render);
  return out;
}

inline json count_report_json(const census::CountReport& r) {
  json per = json::object();
  for (const auto& [w, c] : r.per_cell)
    if (c != 0) per[w.str()] = bigint_json(c);
  json out;
  out["p"] = r.p;
  out["total"] = bigint_json(r.total);
  out["admissible"] = r.admissible;
  out["per_cell"] = per;
  return out;
}

inline std::string var_name(int j, int i) {
  if (j < 10 && i < 10) return "z" + std::to_string(j) + std::to_string(i);
  return "z" + std::to_string(j) + "_" + std::to_string(i);
}

inline json multipoly_json(const symbolic::MultiPoly& p, const symbolic::VarTable& table) {
  json terms = json::array();
  for (const auto& [m, c] : p.terms()) {
    json exps = json::object();
    for (size_t k = 0; k < p.nvars(); ++k)
      if (m[k]) exps[table.name(k)] = static_cast<int>(m[k]);
    json term;
    term["exponents"] = exps;
    term["coeff"] = c.str();
    terms.push_back(std::move(term));
  }
  json out;
  out["terms"] = terms;
  out["rendered"] = p.render(table);
  return out;
}

inline json var_order_json(const symbolic::VarOrder& order) {
  json out = json::array();
  for (const auto& [j, i] : order) out.push_back(var_name(j, i));
  return out;
}

inline json patch_report_json(const patching::PatchReport& r, const symbolic::VarTable& table) {
  json out;
  out["determinant"] = multipoly_json(r.determinant, table);
  out["linear_part"] = multipoly_json(r.linear, table);
  out["member"] = r.member;
  out["smooth"] = r.smooth;
  out["sing_candidate"] = r.sing_candidate;
  return out;
}

inline json witness_report_json(const patching::WitnessReport& r) {
  json out;
  out["status"] = patching::witness_status_name(r.status);
  out["order"] = var_order_json(r.order);
  return out;
}

}  // namespace hess::io
