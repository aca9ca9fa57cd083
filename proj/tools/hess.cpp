#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "hess/cache.hpp"
#include "hess/census.hpp"
#include "hess/closedform.hpp"
#include "hess/io.hpp"
#include "hess/patches.hpp"
#include "hess/paving.hpp"
#include "hess/schubert.hpp"

namespace {

using hess::bigint;
using hess::QPoly;
using hess::core::CanonicalMatrix;
using hess::core::HessenbergVector;
using hess::core::JordanType;
using hess::ffla::ExactMatrix;
using hess::symgrp::Permutation;
using json = nlohmann::json;

void emit(const json& out, bool pretty) {
  std::cout << (pretty ? out.dump(2) : out.dump()) << "\n";
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw hess::invalid_input("cannot open " + path);
  try {
    json j;
    in >> j;
    return j;
  } catch (const json::exception& e) {
    throw hess::invalid_input(path + ": " + e.what());
  }
}

// "v2"/"vn2" need the ambient n; everything else is self-describing.
Permutation parse_word(const std::string& text, int n_hint) {
  if (text == "v2" || text == "vn2") {
    if (n_hint < 4)
      throw hess::invalid_input("word '" + text + "' needs --n >= 4");
    return text == "v2" ? hess::symgrp::v2(n_hint) : hess::symgrp::vn2(n_hint);
  }
  return hess::symgrp::parse_permutation(text);
}

int run(int argc, char** argv) {
  CLI::App app{"exact point counts, Poincare polynomials and patch calculus for "
               "codimension-one Hessenberg varieties"};
  app.require_subcommand(1);
  bool pretty = false;
  app.add_flag("--pretty", pretty, "indent JSON output");

  std::string type_str, m_str = "max", method = "tymoczko", word, what;
  std::string x_file, g_file;
  long long p = 0;
  int n = 0, jobs = 1;
  bool force = false, q_render = false;

  auto* cmd_poincare = app.add_subcommand("poincare", "Poincare polynomial of the variety");
  cmd_poincare->add_option("--type", type_str, "Jordan type, e.g. \"[[2,1],[1]] @ [0,5]\"")
      ->required();
  cmd_poincare->add_option("--m", m_str, "Hessenberg vector: \"max\", \"sing\" or \"2,3,4,4\"");
  cmd_poincare->add_option("--method", method, "tymoczko | closed | census-interp")
      ->check(CLI::IsMember({"tymoczko", "closed", "census-interp"}));
  cmd_poincare->add_flag("--q", q_render, "render with doubled exponents");
  cmd_poincare->add_flag("--force", force, "recompute even on a cache hit");
  cmd_poincare->add_option("--jobs", jobs, "worker threads for census routes");

  auto* cmd_count = app.add_subcommand("count", "census of rational points over F_p");
  cmd_count->add_option("--type", type_str, "Jordan type")->required();
  cmd_count->add_option("--m", m_str, "Hessenberg vector");
  cmd_count->add_option("--p", p, "prime modulus")->required();
  cmd_count->add_flag("--force", force, "recompute even on a cache hit");
  cmd_count->add_option("--jobs", jobs, "worker threads");

  auto* cmd_verify = app.add_subcommand("verify", "census total vs polynomial at p, per cell");
  cmd_verify->add_option("--type", type_str, "Jordan type")->required();
  cmd_verify->add_option("--m", m_str, "Hessenberg vector");
  cmd_verify->add_option("--p", p, "admissible prime")->required();
  cmd_verify->add_option("--jobs", jobs, "worker threads");

  auto* cmd_euler = app.add_subcommand("euler", "Euler characteristic of the variety");
  cmd_euler->add_option("--type", type_str, "Jordan type")->required();
  cmd_euler->add_option("--m", m_str, "Hessenberg vector");

  auto* cmd_classify = app.add_subcommand("classify", "irreducibility of the m_max variety");
  cmd_classify->add_option("--type", type_str, "Jordan type");
  cmd_classify->add_option("--n", n, "classify every type of this size");

  auto* cmd_schubert = app.add_subcommand("schubert", "Schubert-variety side");
  cmd_schubert->add_option("--w", word, "permutation: \"4,2,3,1\", \"w0@n=4\", \"v2\", \"vn2\"")
      ->required();
  cmd_schubert->add_option("--n", n, "ambient n for the named words v2/vn2");
  cmd_schubert->add_option("--what", what, "poincare | singular | euler")
      ->check(CLI::IsMember({"poincare", "singular", "euler"}))
      ->required();
  cmd_schubert->add_flag("--q", q_render, "render with doubled exponents");

  auto* cmd_patch = app.add_subcommand("patch", "patch calculus at a flag");
  cmd_patch->add_option("--x-file", x_file, "JSON matrix x")->required();
  cmd_patch->add_option("--g-file", g_file, "JSON matrix g (columns span the flag)")->required();
  cmd_patch->add_option("--what", what, "det | linear | smooth | witness")
      ->check(CLI::IsMember({"det", "linear", "smooth", "witness"}))
      ->required();
  cmd_patch->add_option("--p", p, "also reduce the determinant mod p");

  auto* cmd_cache = app.add_subcommand("cache", "inspect or clear the result cache");
  bool cache_clear = false, cache_status = false;
  cmd_cache->add_flag("--clear", cache_clear, "remove all cached entries");
  cmd_cache->add_flag("--status", cache_status, "report cache directory and entry count");

  for (CLI::App* sub : {cmd_poincare, cmd_count, cmd_verify, cmd_euler, cmd_classify,
                        cmd_schubert, cmd_patch, cmd_cache})
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  if (cmd_poincare->parsed()) {
    const JordanType type = hess::core::parse_jordan_type(type_str);
    const HessenbergVector m = hess::core::parse_hessenberg(m_str, type.n());
    const std::string key =
        hess::cache::make_key(type.n(), 0, type.str(), m.str(), "poincare:" + method);
    json out;
    std::optional<json> hit = force ? std::nullopt : hess::cache::load(key);
    bool cached = false;
    if (hit) {
      out = *hit;
      cached = true;
    } else {
      QPoly poly;
      std::string route;
      if (method == "tymoczko") {
        poly = hess::paving::poincare_tymoczko(type, m);
      } else if (method == "closed") {
        if (!m.is_m_max())
          throw hess::invalid_input("--method closed applies to m = max only");
        poly = hess::closedform::poincare_mmax_closed(type.n(), type.multiplicities());
      } else {
        // census-interp: full interpolation while the census stays feasible,
        // the two-prime per-cell route beyond.
        if (type.n() <= 4) {
          poly = hess::closedform::poincare_census_interp(type, m);
          route = "lagrange";
        } else {
          poly = hess::closedform::poincare_census_percell(type, m, {2, 3});
          route = "per-cell";
        }
      }
      out["type"] = type.str();
      out["m"] = m.str();
      out["method"] = method;
      if (!route.empty()) out["route"] = route;
      out["poincare"] = hess::io::poly_json(poly, q_render);
      hess::cache::store(key, out);
    }
    out["cached"] = cached;
    emit(out, pretty);
    return 0;
  }

  if (cmd_count->parsed()) {
    const JordanType type = hess::core::parse_jordan_type(type_str);
    const HessenbergVector m = hess::core::parse_hessenberg(m_str, type.n());
    if (!hess::ffla::is_prime(p)) throw hess::invalid_input("--p must be prime");
    const CanonicalMatrix x(type);
    // an inadmissible prime distorts the count; refuse unless forced
    if (!type.is_scalar() && !hess::census::admissible_prime(x, p) && !force) {
      const auto adm = hess::census::admissibility(x, p);
      json out;
      out["type"] = type.str();
      out["m"] = m.str();
      out["p"] = p;
      out["admissible"] = adm.admissible;
      out["bound_satisfied"] = adm.bound_satisfied;
      emit(out, pretty);
      throw hess::inadmissible_prime("count: p=" + std::to_string(p) +
                                     " is inadmissible for type " + type.str() +
                                     " (pass --force to count anyway)");
    }
    const std::string key = hess::cache::make_key(type.n(), p, type.str(), m.str(), "count");
    json out;
    std::optional<json> hit = force ? std::nullopt : hess::cache::load(key);
    bool cached = false;
    if (hit) {
      out = *hit;
      cached = true;
    } else {
      out = hess::io::count_report_json(hess::census::count_points(x, m, p, jobs));
      out["type"] = type.str();
      out["m"] = m.str();
      hess::cache::store(key, out);
    }
    out["cached"] = cached;
    emit(out, pretty);
    return 0;
  }

  if (cmd_verify->parsed()) {
    const JordanType type = hess::core::parse_jordan_type(type_str);
    const HessenbergVector m = hess::core::parse_hessenberg(m_str, type.n());
    if (!hess::ffla::is_prime(p)) throw hess::invalid_input("--p must be prime");
    const hess::census::VerifyReport rep = hess::census::verify_heuristic(type, m, p);
    json out;
    out["type"] = type.str();
    out["m"] = m.str();
    out["p"] = rep.p;
    out["pass"] = rep.pass;
    out["census_total"] = hess::io::bigint_json(rep.census_total);
    out["poincare_at_p"] = hess::io::bigint_json(rep.poincare_at_p);
    out["discrepancies"] = rep.discrepancies;
    emit(out, pretty);
    if (!rep.pass) throw hess::verification_failure("verify: census disagrees with polynomial");
    return 0;
  }

  if (cmd_euler->parsed()) {
    const JordanType type = hess::core::parse_jordan_type(type_str);
    const HessenbergVector m = hess::core::parse_hessenberg(m_str, type.n());
    json out;
    out["type"] = type.str();
    out["m"] = m.str();
    out["euler"] = hess::io::bigint_json(hess::paving::euler_characteristic(type, m));
    emit(out, pretty);
    return 0;
  }

  if (cmd_classify->parsed()) {
    json out;
    if (!type_str.empty()) {
      const JordanType type = hess::core::parse_jordan_type(type_str);
      out["type"] = type.str();
      out["classification"] =
          hess::closedform::classification_name(hess::closedform::irreducible_mmax(type));
    } else if (n > 0) {
      json list = json::array();
      for (const JordanType& type : hess::core::all_jordan_types(n)) {
        json row;
        row["type"] = type.str();
        row["classification"] =
            hess::closedform::classification_name(hess::closedform::irreducible_mmax(type));
        list.push_back(std::move(row));
      }
      out["n"] = n;
      out["types"] = list;
    } else {
      throw hess::invalid_input("classify: pass --type or --n");
    }
    emit(out, pretty);
    return 0;
  }

  if (cmd_schubert->parsed()) {
    const Permutation w = parse_word(word, n);
    json out;
    out["w"] = w.str();
    if (what == "poincare") {
      out["poincare"] = hess::io::poly_json(hess::symgrp::schubert_poincare(w), q_render);
    } else if (what == "euler") {
      out["euler"] = hess::io::bigint_json(hess::symgrp::schubert_euler(w));
    } else {
      json max_list = json::array();
      for (const Permutation& u : hess::symgrp::ls_singular_maximal(w)) max_list.push_back(u.str());
      out["singular_maximal"] = max_list;
      out["smooth"] = max_list.empty();
    }
    emit(out, pretty);
    return 0;
  }

  if (cmd_patch->parsed()) {
    const ExactMatrix x = hess::io::exact_matrix_from_json(read_json_file(x_file));
    const ExactMatrix g = hess::io::exact_matrix_from_json(read_json_file(g_file));
    if (x.n() != g.n()) throw hess::invalid_input("patch: x and g sizes differ");
    const hess::symbolic::VarTable table(x.n());
    json out;
    if (what == "det") {
      const hess::symbolic::MultiPoly det = hess::patching::patch_determinant(x, g);
      out["determinant"] = hess::io::multipoly_json(det, table);
      out["member"] = det.constant_term() == 0;
      if (p >= 2) {
        out["p"] = p;
        out["determinant_mod_p"] = hess::io::multipoly_json(det.mod_reduce(p), table);
      }
    } else if (what == "linear") {
      const hess::symbolic::MultiPoly lin = hess::patching::linear_part(x, g);
      out["linear_part"] = hess::io::multipoly_json(lin, table);
      out["smooth"] = !lin.is_zero();
      if (p >= 2) {
        out["p"] = p;
        out["linear_part_mod_p"] = hess::io::multipoly_json(lin.mod_reduce(p), table);
      }
    } else if (what == "smooth") {
      out = hess::io::patch_report_json(hess::patching::patch_report(x, g), table);
    } else {
      const hess::patching::WitnessReport rep = hess::patching::squarefree_witness(x, g);
      out = hess::io::witness_report_json(rep);
      out["verified"] = hess::patching::verify_witness(hess::ffla::conjugate(g, x), rep);
    }
    emit(out, pretty);
    return 0;
  }

  if (cmd_cache->parsed()) {
    json out;
    if (cache_clear) {
      out["removed"] = hess::cache::clear();
    } else {
      const auto [dir, entries] = hess::cache::status();
      out["dir"] = dir.string();
      out["entries"] = entries;
    }
    emit(out, pretty);
    return 0;
  }

  return 2;  // unreachable: a subcommand is required
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const hess::inadmissible_prime& e) {
    std::cerr << "inadmissible prime: " << e.what() << "\n";
    return 3;
  } catch (const hess::verification_failure& e) {
    std::cerr << "verification failure: " << e.what() << "\n";
    return 1;
  } catch (const hess::invalid_input& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
