#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "hess/census.hpp"
#include "hess/jordan.hpp"
#include "hess/paving.hpp"
#include "hess/qpoly.hpp"

namespace hess::closedform {

using core::HessenbergVector;
using core::JordanType;

// [n-2]_t! ( [n]_t [n-2]_t + t^{n-2} * sum_j [d_j]_t )  for the variety cut
// out by m_max, where d are the geometric multiplicities.  multiplicities
// need not exhaust n (blocks of size > 1 contribute fewer kernel vectors).
inline QPoly poincare_mmax_closed(int n, const std::vector<int>& d) {
  if (n < 2) throw invalid_input("poincare_mmax_closed: need n >= 2");
  if (d.empty()) throw invalid_input("poincare_mmax_closed: need at least one multiplicity");
  int total = 0;
  for (int dj : d) {
    if (dj < 1) throw invalid_input("poincare_mmax_closed: multiplicities must be >= 1");
    total += dj;
  }
  if (total > n) throw invalid_input("poincare_mmax_closed: multiplicities exceed n");
  QPoly sum_d;
  for (int dj : d) sum_d += q_int(dj);
  return q_factorial(n - 2) *
         (q_int(n) * q_int(n - 2) + QPoly::monomial(n - 2) * sum_d);
}

// [n-2]_p! ( [n]_p [n-2]_p + k p^{n-2} ): the point count of the m_max
// variety of a matrix fixing exactly k lines.
inline bigint eigenline_count_formula(int n, const bigint& k, long long p) {
  if (n < 2) throw invalid_input("eigenline_count_formula: need n >= 2");
  if (k < 0 || k > q_int_at(n, p))
    throw invalid_input("eigenline_count_formula: need 0 <= k <= [n]_p");
  bigint pe = 1;
  for (int e = 0; e < n - 2; ++e) pe *= p;
  return q_factorial_at(n - 2, p) * (q_int_at(n, p) * q_int_at(n - 2, p) + k * pe);
}

// [n-2]_t! ( [n]_t [n-1]_t - t^{2n-3} - t^{2n-4} ): the Poincare polynomial
// of the codimension-one Schubert varieties indexed by s_2 w_0 and
// s_{n-2} w_0.
inline QPoly schubert_codim1_poincare(int n, int i) {
  if (n < 4) throw invalid_input("schubert_codim1_poincare: need n >= 4");
  if (i != 2 && i != n - 2)
    throw invalid_input("schubert_codim1_poincare: index must be 2 or n-2");
  return q_factorial(n - 2) *
         (q_int(n) * q_int(n - 1) - QPoly::monomial(2 * n - 3) - QPoly::monomial(2 * n - 4));
}

enum class Classification { irreducible, reducible, degenerate_scalar };

inline std::string classification_name(Classification c) {
  switch (c) {
    case Classification::irreducible: return "irreducible";
    case Classification::reducible: return "reducible";
    case Classification::degenerate_scalar: return "degenerate-scalar";
  }
  return "?";
}

// the m_max variety is reducible exactly when some shift x - cI has rank
// one.  rank one means geometric multiplicity n-1 for n >= 3; at n = 2 the
// variety is a finite set of eigenlines, reducible iff there are two.
// scalar x gives the whole flag variety (codimension 0): flagged, not
// classified.
inline Classification irreducible_mmax(const JordanType& type) {
  if (type.is_scalar()) return Classification::degenerate_scalar;
  const int n = type.n();
  if (n == 2)
    return type.r() == 2 ? Classification::reducible : Classification::irreducible;
  return type.max_multiplicity() == n - 1 ? Classification::reducible
                                          : Classification::irreducible;
}

enum class EchessCase { square_zero, non_square_zero };

// Poincare polynomials of the variety cut out by (1, n-1, ..., n-1, n) for
// nilpotent x of rank two:
//   x^2 =  0: [n-2]_t! ( [n-2]_t [n-3]_t + (1+t) t^{n-3} )
//   x^2 != 0: [n-2]_t! ( [n-2]_t + t [n-3]_t^2 )
inline QPoly echess_poincare(int n, EchessCase which) {
  if (n < 4) throw invalid_input("echess_poincare: need n >= 4");
  if (which == EchessCase::square_zero)
    return q_factorial(n - 2) *
           (q_int(n - 2) * q_int(n - 3) +
            (QPoly::constant(1) + QPoly::monomial(1)) * QPoly::monomial(n - 3));
  return q_factorial(n - 2) * (q_int(n - 2) + QPoly::monomial(1) * q_int(n - 3) * q_int(n - 3));
}

inline bigint factorial(int n) {
  bigint f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

struct SchubertVsHessenbergReport {
  int n = 0;
  QPoly schubert_poly;    // codimension-one Schubert variety
  QPoly hessenberg_poly;  // m_max variety with multiplicities (n-2)
  bool poincare_equal = false;
  bigint chi_schubert_singular;        // (n-2)! (n^2 - 5n + 6)
  bigint chi_hessenberg_sing_sqzero;   // (n-2)! (n^2 - 5n + 8)
  bigint chi_hessenberg_sing_nonsq;    // (n-2)! (n^2 - 5n + 7)
  bool singular_chis_all_distinct = false;
};

// the codimension-one Schubert and Hessenberg varieties share Poincare
// polynomials yet their singular loci have different Euler characteristics.
inline SchubertVsHessenbergReport schubert_vs_hessenberg_report(int n) {
  if (n < 4) throw invalid_input("schubert_vs_hessenberg_report: need n >= 4");
  SchubertVsHessenbergReport rep;
  rep.n = n;
  rep.schubert_poly = schubert_codim1_poincare(n, 2);
  rep.hessenberg_poly = poincare_mmax_closed(n, {n - 2});
  rep.poincare_equal = rep.schubert_poly == rep.hessenberg_poly;
  const bigint f = factorial(n - 2);
  rep.chi_schubert_singular = f * (n * n - 5 * n + 6);
  rep.chi_hessenberg_sing_sqzero = f * (n * n - 5 * n + 8);
  rep.chi_hessenberg_sing_nonsq = f * (n * n - 5 * n + 7);
  rep.singular_chis_all_distinct =
      rep.chi_schubert_singular != rep.chi_hessenberg_sing_sqzero &&
      rep.chi_schubert_singular != rep.chi_hessenberg_sing_nonsq &&
      rep.chi_hessenberg_sing_sqzero != rep.chi_hessenberg_sing_nonsq;
  return rep;
}

namespace detail {

// exact Lagrange interpolation through (xs[i], ys[i]); returns rational
// coefficients, constant term first.
inline std::vector<bigrat> lagrange(const std::vector<bigint>& xs, const std::vector<bigint>& ys) {
  const size_t k = xs.size();
  std::vector<bigrat> acc(k, bigrat(0));
  for (size_t i = 0; i < k; ++i) {
    // basis polynomial prod_{j != i} (X - x_j) / (x_i - x_j)
    std::vector<bigrat> basis{bigrat(1)};
    bigrat denom = 1;
    for (size_t j = 0; j < k; ++j) {
      if (j == i) continue;
      std::vector<bigrat> next(basis.size() + 1, bigrat(0));
      for (size_t t = 0; t < basis.size(); ++t) {
        next[t + 1] += basis[t];
        next[t] -= basis[t] * bigrat(xs[j]);
      }
      basis = std::move(next);
      denom *= bigrat(xs[i] - xs[j]);
    }
    const bigrat scale = bigrat(ys[i]) / denom;
    for (size_t t = 0; t < basis.size(); ++t) acc[t] += basis[t] * scale;
  }
  return acc;
}

inline QPoly integral_poly(const std::vector<bigrat>& coeffs, const std::string& what) {
  std::vector<bigint> c;
  c.reserve(coeffs.size());
  for (const bigrat& v : coeffs) {
    if (boost::multiprecision::denominator(v) != 1)
      throw verification_failure(what + ": interpolated coefficients are not integers");
    c.push_back(boost::multiprecision::numerator(v));
  }
  return QPoly(std::move(c));
}

}  // namespace detail

// the smallest `count` admissible primes for the type.
inline std::vector<long long> admissible_primes(const JordanType& type, size_t count) {
  const core::CanonicalMatrix x(type);
  std::vector<long long> out;
  for (long long p = 2; out.size() < count; ++p) {
    if (!ffla::is_prime(p)) continue;
    if (type.is_scalar() || census::admissible_prime(x, p)) out.push_back(p);
  }
  return out;
}

// census-only route to the Poincare polynomial: counts at
// ceil((n^2-n)/2) + 1 admissible primes determine the polynomial exactly
// (its degree is at most the flag-variety dimension).  no cell-dimension
// formula is consulted.
inline QPoly poincare_census_interp(const JordanType& type, const HessenbergVector& m) {
  const int n = type.n();
  if (m.n() != n) throw invalid_input("poincare_census_interp: size mismatch");
  const size_t points = static_cast<size_t>(n * (n - 1) / 2) + 1;
  const std::vector<long long> primes = admissible_primes(type, points);
  const core::CanonicalMatrix x(type);
  std::vector<bigint> xs, ys;
  for (long long p : primes) {
    xs.push_back(p);
    ys.push_back(census::count_points(x, m, p).total);
  }
  QPoly poly = detail::integral_poly(detail::lagrange(xs, ys), "poincare_census_interp");
  for (const bigint& c : poly.coeffs())
    if (c < 0) throw verification_failure("poincare_census_interp: negative Betti coefficient");
  return poly;
}

// census-only route via per-cell counts at two admissible primes: each
// nonempty cell must count an exact power p^{d_w} with the same exponent at
// both primes, pinning the cell dimension without any dimension formula.
inline QPoly poincare_census_percell(const JordanType& type, const HessenbergVector& m,
                                     const std::vector<long long>& primes) {
  const int n = type.n();
  if (m.n() != n) throw invalid_input("poincare_census_percell: size mismatch");
  if (primes.size() < 2) throw invalid_input("poincare_census_percell: need at least two primes");
  const core::CanonicalMatrix x(type);
  for (long long p : primes)
    if (!type.is_scalar() && !census::admissible_prime(x, p))
      throw inadmissible_prime("poincare_census_percell: p=" + std::to_string(p) +
                               " inadmissible for " + type.str());

  std::vector<census::CountReport> reports;
  for (long long p : primes) reports.push_back(census::count_points(x, m, p));

  auto exponent_of = [](const bigint& count, long long p) -> int {
    // count = p^d exactly, else -1
    if (count == 0) return -2;
    bigint c = count;
    int d = 0;
    while (c % p == 0) {
      c /= p;
      ++d;
    }
    return c == 1 ? d : -1;
  };

  std::vector<bigint> coeff_acc;
  symgrp::for_each_permutation(n, [&](const symgrp::Permutation& w) {
    int d0 = exponent_of(reports[0].per_cell.at(w), primes[0]);
    for (size_t r = 1; r < reports.size(); ++r) {
      const int dr = exponent_of(reports[r].per_cell.at(w), primes[r]);
      if (dr != d0)
        throw verification_failure("poincare_census_percell: cell " + w.str() +
                                   " counts disagree across primes");
    }
    if (d0 == -1)
      throw verification_failure("poincare_census_percell: cell " + w.str() +
                                 " count is not a prime power");
    if (d0 == -2) return;  // empty cell
    if (static_cast<size_t>(d0) >= coeff_acc.size()) coeff_acc.resize(d0 + 1, bigint(0));
    coeff_acc[d0] += 1;
  });
  return QPoly(std::move(coeff_acc));
}

}  // namespace hess::closedform
