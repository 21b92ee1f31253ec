#pragma once

#include <random>
#include <string>
#include <vector>

#include "vvkit/linalg.hpp"
#include "vvkit/monomial.hpp"
#include "vvkit/polynomial.hpp"

namespace vvtest {
using namespace vvkit;

inline Polynomial P(const std::string& text, const RingPtr& ring = plane_ring()) {
  return parse_polynomial(text, ring);
}

inline Monomial random_monomial(std::mt19937_64& rng, std::size_t arity, int max_degree) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  Monomial m(arity);
  int d = deg(rng);
  std::uniform_int_distribution<std::size_t> var(0, arity - 1);
  while (d-- > 0) {
    const std::size_t i = var(rng);
    m.set(i, m[i] + 1);
  }
  return m;
}

inline Polynomial random_polynomial(std::mt19937_64& rng, const RingPtr& ring, int max_degree,
                                    int max_terms, int coeff_range = 5) {
  std::uniform_int_distribution<int> nterms(1, max_terms);
  std::uniform_int_distribution<int> coeff(-coeff_range, coeff_range);
  std::vector<Term> terms;
  const int n = nterms(rng);
  for (int k = 0; k < n; ++k) {
    terms.push_back({random_monomial(rng, ring->arity(), max_degree), Rational(coeff(rng))});
  }
  return Polynomial::from_terms(ring, std::move(terms));
}

/// Random form of exactly degree d (may be zero if all coefficients vanish).
inline Polynomial random_form(std::mt19937_64& rng, const RingPtr& ring, int d, int max_terms,
                              int coeff_range = 5) {
  const auto mons = monomials_of_degree(ring->arity(), d);
  std::uniform_int_distribution<std::size_t> pick(0, mons.size() - 1);
  std::uniform_int_distribution<int> coeff(-coeff_range, coeff_range);
  std::vector<Term> terms;
  for (int k = 0; k < max_terms; ++k) terms.push_back({mons[pick(rng)], Rational(coeff(rng))});
  return Polynomial::from_terms(ring, std::move(terms));
}

inline RationalMatrix random_invertible(std::mt19937_64& rng, std::size_t n, int range = 3) {
  std::uniform_int_distribution<int> entry(-range, range);
  while (true) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) m(i, j) = entry(rng);
    }
    if (determinant(m) != 0) return m;
  }
}

}  // namespace vvtest
