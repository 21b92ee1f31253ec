#pragma once

#include <initializer_list>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vvkit/groebner.hpp"
#include "vvkit/polynomial.hpp"

namespace vvkit {

/// Generators plus a shared, internally synchronized cache of Gröbner
/// bases. Copies share the cache; generators never change after
/// construction. An empty generator list is the zero ideal.
class Ideal {
 public:
  Ideal() = default;
  /// Zero generators are dropped. Throws on ring mismatch.
  Ideal(RingPtr ring, std::vector<Polynomial> generators);
  Ideal(RingPtr ring, std::initializer_list<std::string_view> generators);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }
  bool is_homogeneous() const { return homogeneous_; }
  /// Largest generator degree; -1 for the zero ideal.
  int max_generator_degree() const;

  /// Full reduced basis for `order`, computed once per order.
  GroebnerBasis groebner_basis(const MonomialOrder& order = MonomialOrder::degrevlex()) const;
  /// Degrevlex basis valid for homogeneous elements of degree <= d. Reuses
  /// any cached basis that covers d. Requires a homogeneous ideal.
  GroebnerBasis groebner_basis_upto(int degree) const;

  /// Pre-seeds the degrevlex truncated cache (used by operations that get a
  /// basis for free).
  void seed_truncated(const GroebnerBasis& basis) const;

 private:
  struct Cache;
  RingPtr ring_;
  std::vector<Polynomial> gens_;
  bool homogeneous_ = true;
  std::shared_ptr<Cache> cache_;
};

Ideal sum(const Ideal& a, const Ideal& b);
/// Pairwise products; homogeneous results are trimmed to a minimal
/// generating set.
Ideal product(const Ideal& a, const Ideal& b);
/// I^t for t >= 1.
Ideal power(const Ideal& a, int t);
Ideal intersect(const Ideal& a, const Ideal& b);
/// (a : b) = {f : f b subset of a}. Throws for the zero ideal b.
Ideal quotient(const Ideal& a, const Ideal& b);
/// a intersected with the subring on the remaining variables; the result
/// lives in the smaller ring (variables in their original order).
Ideal eliminate(const Ideal& a, const std::vector<std::string>& drop);

bool contains(const Ideal& a, const Polynomial& f);
/// Every generator of `inner` lies in `outer`.
bool is_subset(const Ideal& inner, const Ideal& outer);
bool equals(const Ideal& a, const Ideal& b);

/// A minimal homogeneous system of generators chosen among the given
/// generators. Throws for an inhomogeneous ideal.
std::vector<Polynomial> minimal_generators(const Ideal& a);

/// Least n with var^n in a, if any.
std::optional<int> min_pure_power(const Ideal& a, std::string_view var);

MonomialIdeal initial_ideal(const Ideal& a, const MonomialOrder& order = MonomialOrder::degrevlex());

/// (x_1, ..., x_n)^e.
Ideal maximal_ideal_power(const RingPtr& ring, int e);

/// Exact quotient f / g, or nullopt when g does not divide f.
std::optional<Polynomial> divide_exact(const Polynomial& f, const Polynomial& g);

}  // namespace vvkit
