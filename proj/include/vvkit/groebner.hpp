#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "vvkit/monomial.hpp"
#include "vvkit/polynomial.hpp"

namespace vvkit {

/// Antichain of monomials under divisibility.
class MonomialIdeal {
 public:
  MonomialIdeal() = default;
  /// Keeps only the divisibility-minimal monomials, sorted degrevlex
  /// ascending with duplicates removed.
  MonomialIdeal(std::size_t arity, std::vector<Monomial> generators);

  std::size_t arity() const { return arity_; }
  const std::vector<Monomial>& generators() const { return gens_; }
  bool contains(const Monomial& m) const;
  bool is_zero() const { return gens_.empty(); }

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  std::size_t arity_ = 0;
  std::vector<Monomial> gens_;
};

struct GroebnerOptions {
  /// Nonnegative degree weights used for homogeneity and for degree truncation.
  /// Empty means standard total degree.
  std::vector<int> grading;
  /// For inputs homogeneous in `grading`: stop after this degree. The result
  /// then contains exactly the reduced basis elements of degree <= bound.
  std::optional<int> degree_bound;
};

namespace detail {
struct GroebnerData;
}

/// A reduced Gröbner basis: monic elements sorted by leading monomial
/// ascending. May be degree-truncated (see GroebnerOptions).
class GroebnerBasis {
 public:
  GroebnerBasis() = default;

  const RingPtr& ring() const;
  const MonomialOrder& order() const;
  const std::vector<Polynomial>& elements() const;
  const std::vector<Monomial>& leading_monomials() const;
  /// Degree bound when truncated, nullopt for a complete basis.
  std::optional<int> truncated_at() const;
  const std::vector<int>& grading() const;
  bool is_unit() const;

  /// Remainder of p on division by the basis (unique). Ring mismatch throws.
  Polynomial normal_form(const Polynomial& p) const;
  /// True iff the remainder is zero. Cheaper than normal_form.
  bool reduces_to_zero(const Polynomial& p) const;

  MonomialIdeal initial_ideal() const;

 private:
  friend GroebnerBasis make_groebner_basis(std::shared_ptr<const detail::GroebnerData>);
  std::shared_ptr<const detail::GroebnerData> data_;
};

/// Buchberger with the normal selection strategy (sugar for inhomogeneous
/// input) and the Gebauer–Möller criteria. Output is independent of the
/// order and scaling of the generators. Zero generators are ignored.
GroebnerBasis reduced_groebner_basis(std::span<const Polynomial> gens, const MonomialOrder& order,
                                     const GroebnerOptions& options = {});

Polynomial normal_form(const Polynomial& p, const GroebnerBasis& g);

/// True iff every S-polynomial of `gens` reduces to zero modulo `gens`.
/// Deliberately criterion-free so it can audit the main engine.
bool is_groebner_basis(std::span<const Polynomial> gens, const MonomialOrder& order);

/// Result of the homogeneous minimal-generator pass.
struct MinimalGeneratorSelection {
  /// Indices into the tracked list, ascending, forming a minimal system of
  /// generators of (background + tracked) modulo the background ideal.
  std::vector<std::size_t> selected;
  GroebnerBasis basis;
};

/// Runs Buchberger degree by degree on homogeneous input. Within a degree
/// the background generators are reduced first, then the tracked ones in
/// order; a tracked generator is selected when it does not reduce to zero
/// modulo everything of smaller degree and everything accepted before it.
/// Throws std::invalid_argument on inhomogeneous input.
MinimalGeneratorSelection select_minimal_generators(std::span<const Polynomial> background,
                                                    std::span<const Polynomial> tracked,
                                                    const MonomialOrder& order,
                                                    const GroebnerOptions& options = {});

/// Leading monomials of the reduced basis computed over F_p with
/// p = 2^31 - 1. For prefiltering and cross-checks only; an unlucky prime
/// can give a different answer than the rationals.
std::vector<Monomial> modular_leading_monomials(std::span<const Polynomial> gens,
                                                const MonomialOrder& order,
                                                const GroebnerOptions& options = {});

}  // namespace vvkit
