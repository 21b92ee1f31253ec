#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "vvkit/groebner.hpp"
#include "vvkit/ideal.hpp"
#include "vvkit/rational.hpp"

namespace vvkit {

/// (h_0 + h_1 t + ... + h_k t^k) / (1 - t)^e with no common factor (1 - t),
/// unless e = 0, in which case the series is a polynomial.
class HilbertSeries {
 public:
  HilbertSeries() = default;
  /// Cancels common (1 - t) factors; trailing zero coefficients are dropped.
  HilbertSeries(std::vector<BigInt> numerator, int pole_order);

  const std::vector<BigInt>& numerator() const { return num_; }
  int pole_order() const { return e_; }
  /// Coefficient of t^d in the expansion.
  BigInt coefficient(int d) const;
  /// Value of the numerator at t = 1 (the multiplicity when e > 0).
  BigInt multiplicity() const;

  std::string to_string() const;

  friend HilbertSeries operator+(const HilbertSeries& a, const HilbertSeries& b);
  friend HilbertSeries operator-(const HilbertSeries& a, const HilbertSeries& b);
  friend bool operator==(const HilbertSeries&, const HilbertSeries&) = default;

 private:
  std::vector<BigInt> num_;
  int e_ = 0;
};

/// Series of R/M by the pivot splitting recursion. Throws std::runtime_error
/// beyond 10^4 recursion nodes.
HilbertSeries hilbert_series(const MonomialIdeal& m);
/// Series of R/I from the degrevlex initial ideal. Throws
/// std::invalid_argument for inhomogeneous input.
HilbertSeries hilbert_series(const Ideal& a);

/// dim_k (R/M)_d.
BigInt hilbert_function(const MonomialIdeal& m, int d);
/// dim_k (R/I)_d, using a degrevlex basis truncated at d.
BigInt hilbert_function(const Ideal& a, int d);

}  // namespace vvkit
