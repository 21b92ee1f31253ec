#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "vvkit/linalg.hpp"
#include "vvkit/monomial.hpp"
#include "vvkit/rational.hpp"

namespace vvkit {

struct Term {
  Monomial monomial;
  Rational coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse polynomial with rational coefficients over a named ring.
///
/// Terms are kept sorted by degrevlex, largest first, with no zero
/// coefficients, so equality and printing are canonical.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  static Polynomial constant(RingPtr ring, const Rational& c);
  static Polynomial variable(RingPtr ring, std::size_t index);
  static Polynomial variable(RingPtr ring, std::string_view name);
  static Polynomial from_monomial(RingPtr ring, const Monomial& m, const Rational& c = 1);
  /// Combines like terms and drops zeros; input order is irrelevant.
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const { return ring_; }
  std::span<const Term> terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Total degree of the support; -1 for the zero polynomial.
  int degree() const;
  /// Largest weighted degree of the support (total degree when weights are empty).
  int weighted_degree(std::span<const int> weights) const;
  /// True when every term has the same (weighted) degree. Zero is homogeneous.
  bool is_homogeneous(std::span<const int> weights = {}) const;

  Monomial leading_monomial(const MonomialOrder& order) const;
  Rational leading_coefficient(const MonomialOrder& order) const;
  Rational coefficient(const Monomial& m) const;
  Polynomial homogeneous_part(int degree) const;

  /// Divides by the leading coefficient under `order`.
  Polynomial monic(const MonomialOrder& order) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Rational& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend bool operator==(const Polynomial& a, const Polynomial& b);

  Polynomial pow(unsigned e) const;
  Polynomial times_monomial(const Monomial& m) const;

  Rational evaluate(std::span<const Rational> point) const;
  std::string to_string() const;

 private:
  RingPtr ring_;
  std::vector<Term> terms_;
};

Polynomial multiply(const Polynomial& a, const Polynomial& b);

/// Thrown by parse_polynomial. `offset` is a byte offset into the input.
class ParseError : public std::invalid_argument {
 public:
  enum class Kind { Syntax, UnknownVariable };
  ParseError(Kind kind, std::size_t offset, const std::string& message);
  Kind kind() const { return kind_; }
  std::size_t offset() const { return offset_; }

 private:
  Kind kind_;
  std::size_t offset_;
};

/// Grammar: terms joined by + or -, each term a *-separated product of
/// rational constants and factors `var` or `var^k`.
Polynomial parse_polynomial(std::string_view text, const RingPtr& ring);

Polynomial differentiate(const Polynomial& p, std::size_t var);
Polynomial differentiate(const Polynomial& p, std::string_view var);

/// p(Mx): variable i is replaced by sum_j M(i, j) x_j. Throws
/// std::invalid_argument for a singular or wrongly sized matrix.
Polynomial substitute_linear(const Polynomial& p, const RationalMatrix& m);

/// Re-expresses p in `target`, sending variable i of p's ring to variable
/// var_map[i] of target.
Polynomial map_variables(const Polynomial& p, const RingPtr& target,
                         std::span<const std::size_t> var_map);

/// Embeds p into a ring that contains all of its variables by name.
Polynomial embed(const Polynomial& p, const RingPtr& target);

}  // namespace vvkit
