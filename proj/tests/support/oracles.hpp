#pragma once

// Test-only reference computations. Nothing here calls into the code paths
// they are used to check, beyond basic polynomial arithmetic.

#include <cstdint>
#include <vector>

#include "segre/field.hpp"
#include "segre/groebner.hpp"
#include "segre/hilbert.hpp"
#include "segre/poly.hpp"

namespace segre::testing {

/// Random polynomial with up to max_terms terms of total degree <= max_degree
/// (exactly max_degree when homogeneous).
inline Polynomial random_polynomial(const RingPtr& ring, RandomSource& rng, std::uint32_t max_degree,
                                    std::size_t max_terms, bool homogeneous = false) {
  const PrimeField& F = ring->field();
  std::vector<Term> terms;
  const std::size_t count = 1 + rng.below(max_terms);
  for (std::size_t t = 0; t < count; ++t) {
    Monomial m(ring->num_vars());
    const auto deg = homogeneous ? max_degree : static_cast<std::uint32_t>(rng.below(max_degree + 1));
    for (std::uint32_t i = 0; i < deg; ++i) {
      const auto v = static_cast<std::size_t>(rng.below(ring->num_vars()));
      m.set(v, m[v] + 1);
    }
    terms.push_back({F.random(rng, true), m});
  }
  return Polynomial::from_terms(ring, std::move(terms));
}

inline Monomial random_monomial(std::size_t nvars, RandomSource& rng, std::uint32_t max_exp) {
  Monomial m(nvars);
  for (std::size_t i = 0; i < nvars; ++i) m.set(i, static_cast<std::uint32_t>(rng.below(max_exp + 1)));
  return m;
}

/// Every exponent vector of total degree d in n variables, by odometer over
/// the box [0, d]^n.
inline std::vector<Monomial> brute_force_monomials(std::size_t n, std::uint32_t d) {
  std::vector<Monomial> out;
  std::vector<std::uint32_t> e(n, 0);
  for (;;) {
    std::uint32_t s = 0;
    for (auto x : e) s += x;
    if (s == d) {
      Monomial m(n);
      for (std::size_t i = 0; i < n; ++i) m.set(i, e[i]);
      out.push_back(m);
    }
    std::size_t i = 0;
    while (i < n && e[i] == d) e[i++] = 0;
    if (i == n) break;
    ++e[i];
  }
  return out;
}

/// Number of degree-d monomials not divisible by any generator.
inline std::int64_t standard_monomial_count(const std::vector<Monomial>& gens, std::size_t n, std::uint32_t d) {
  std::int64_t count = 0;
  for (const Monomial& m : brute_force_monomials(n, d)) {
    bool inside = false;
    for (const Monomial& g : gens) inside = inside || g.divides(m);
    if (!inside) ++count;
  }
  return count;
}

/// Coefficient of t^d in numerator(t) / (1-t)^n.
inline std::int64_t series_coefficient(const std::vector<std::int64_t>& numerator, std::size_t n, std::uint32_t d) {
  if (n == 0) return d < numerator.size() ? numerator[d] : 0;
  std::int64_t c = 0;
  for (std::size_t i = 0; i < numerator.size() && i <= d; ++i) {
    // binom(d - i + n - 1, n - 1)
    std::int64_t b = 1;
    const std::int64_t top = static_cast<std::int64_t>(d - i + n - 1);
    for (std::int64_t j = 1; j <= static_cast<std::int64_t>(n) - 1; ++j) b = b * (top - j + 1) / j;
    c += numerator[i] * b;
  }
  return c;
}

/// Buchberger's criterion checked exhaustively: every S-polynomial reduces to 0.
inline bool all_s_pairs_reduce_to_zero(const std::vector<Polynomial>& basis) {
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      if (!normal_form(s_polynomial(basis[i], basis[j]), basis).is_zero()) return false;
    }
  }
  return true;
}

/// Reducedness: no term of any element divisible by another element's
/// leading monomial, and every element monic.
inline bool is_reduced_monic(const std::vector<Polynomial>& basis) {
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (basis[i].leading_coefficient() != basis[i].field().one()) return false;
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (i == j) continue;
      for (const Term& t : basis[i].terms()) {
        if (basis[j].leading_monomial().divides(t.mono)) return false;
      }
    }
  }
  return true;
}

}  // namespace segre::testing
