#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace vvkit {

/// Ordered list of variable names. Two rings are the same ring exactly when
/// their name lists agree.
class PolyRing {
 public:
  explicit PolyRing(std::vector<std::string> variables);

  std::size_t arity() const { return vars_.size(); }
  const std::vector<std::string>& variables() const { return vars_; }
  const std::string& name(std::size_t i) const { return vars_.at(i); }
  std::optional<std::size_t> index_of(std::string_view name) const;

  friend bool operator==(const PolyRing& a, const PolyRing& b) { return a.vars_ == b.vars_; }

 private:
  std::vector<std::string> vars_;
};

using RingPtr = std::shared_ptr<const PolyRing>;

RingPtr make_ring(std::vector<std::string> variables);
/// k[x, y, z].
RingPtr plane_ring();
bool same_ring(const RingPtr& a, const RingPtr& b);

/// Exponent vector. Unused slots beyond the arity are always zero, so
/// comparisons never need the arity.
class Monomial {
 public:
  using Exponent = std::uint16_t;
  static constexpr std::size_t kMaxVars = 20;

  Monomial() = default;
  explicit Monomial(std::size_t arity);
  Monomial(std::initializer_list<int> exponents);
  static Monomial from_exponents(std::span<const int> exponents);

  std::size_t arity() const { return arity_; }
  int degree() const { return degree_; }
  int operator[](std::size_t i) const { return e_[i]; }
  void set(std::size_t i, int e);

  int weighted_degree(std::span<const int> weights) const;
  bool is_one() const { return degree_ == 0; }

  bool divides(const Monomial& other) const;
  bool coprime(const Monomial& other) const;
  /// this / other; caller guarantees other divides this.
  Monomial operator/(const Monomial& other) const;
  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend Monomial lcm(const Monomial& a, const Monomial& b);
  friend Monomial gcd(const Monomial& a, const Monomial& b);

  /// Bit signature: variable i contributes bit i when its exponent is
  /// positive, bit 20+i when at least 2 and bit 40+i when at least 4.
  /// a | b implies mask(a) is a subset of mask(b).
  std::uint64_t divisibility_mask() const;

  std::size_t hash() const;
  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.arity_ == b.arity_ && a.e_ == b.e_;
  }

 private:
  std::array<Exponent, kMaxVars> e_{};
  std::uint16_t degree_ = 0;
  std::uint8_t arity_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

/// Global monomial orders. Ties always follow the ring's variable order
/// (first variable largest).
///
/// The block order compares the first `block_size` variables by degrevlex
/// and breaks ties with degrevlex on the remaining variables; it eliminates
/// the first block. Optional positive weights replace the total degree in
/// the degrevlex comparisons of the second block (or of the whole ring for
/// plain degrevlex).
class MonomialOrder {
 public:
  enum class Kind : std::uint8_t { Lex, DegRevLex, Block };

  static MonomialOrder lex();
  static MonomialOrder degrevlex();
  static MonomialOrder block(std::size_t first_block_size);
  /// Accepts "lex", "degrevlex", "block:<k>".
  static MonomialOrder parse(std::string_view name);

  MonomialOrder with_weights(std::vector<int> weights) const;

  Kind kind() const { return kind_; }
  std::size_t block_size() const { return block_; }
  const std::vector<int>& weights() const { return weights_; }
  std::string name() const;

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) = default;

 private:
  Kind kind_ = Kind::DegRevLex;
  std::size_t block_ = 0;
  std::vector<int> weights_;
};

/// Order comparison with an arity check; throws std::invalid_argument on
/// mismatch.
std::strong_ordering compare_monomials(const MonomialOrder& order, const Monomial& a,
                                       const Monomial& b);

/// All monomials of total degree d in n variables, degrevlex descending.
std::vector<Monomial> monomials_of_degree(std::size_t arity, int degree);

}  // namespace vvkit
