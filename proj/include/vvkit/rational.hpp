#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace vvkit {

using BigInt = mpz_class;

/// Exact rational numbers, always canonical (lowest terms, positive
/// denominator). Zero is 0/1.
using Rational = mpq_class;

/// Parses an optionally signed integer or fraction ("-3", "4/6").
/// The result is canonicalized. Throws std::invalid_argument on malformed
/// text or a zero denominator.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);
std::string to_string(const BigInt& z);

/// Element of the prime field F_p with p = 2^31 - 1.
///
/// Only used to predict where exact work is needed; no verdict is ever
/// decided in this field.
class ModP {
 public:
  static constexpr std::uint32_t kPrime = 2147483647u;

  constexpr ModP() = default;
  constexpr explicit ModP(std::uint32_t v) : v_(v % kPrime) {}

  /// Reduces a rational. Throws std::domain_error when the denominator
  /// vanishes modulo p.
  static ModP from(const Rational& q);
  static ModP from(const BigInt& z);

  constexpr std::uint32_t value() const { return v_; }
  constexpr bool is_zero() const { return v_ == 0; }

  friend constexpr ModP operator+(ModP a, ModP b) {
    std::uint64_t s = std::uint64_t{a.v_} + b.v_;
    return ModP(static_cast<std::uint32_t>(s >= kPrime ? s - kPrime : s), Raw{});
  }
  friend constexpr ModP operator-(ModP a, ModP b) {
    return ModP(a.v_ >= b.v_ ? a.v_ - b.v_ : a.v_ + (kPrime - b.v_), Raw{});
  }
  friend constexpr ModP operator-(ModP a) { return ModP(a.v_ == 0 ? 0 : kPrime - a.v_, Raw{}); }
  friend constexpr ModP operator*(ModP a, ModP b) {
    return ModP(static_cast<std::uint32_t>((std::uint64_t{a.v_} * b.v_) % kPrime), Raw{});
  }
  ModP& operator+=(ModP o) { return *this = *this + o; }
  ModP& operator-=(ModP o) { return *this = *this - o; }
  ModP& operator*=(ModP o) { return *this = *this * o; }

  /// Multiplicative inverse; throws std::domain_error for zero.
  ModP inverse() const;

  friend constexpr bool operator==(ModP a, ModP b) = default;

 private:
  struct Raw {};
  constexpr ModP(std::uint32_t v, Raw) : v_(v) {}
  std::uint32_t v_ = 0;
};

}  // namespace vvkit
