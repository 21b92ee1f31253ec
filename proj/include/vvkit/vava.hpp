#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "vvkit/ideal.hpp"
#include "vvkit/polynomial.hpp"

namespace vvkit {

/// Degree -> dim_k of (J cap I^t) / (J I^{t-1}) in that degree; only nonzero
/// entries are stored.
using GradedDims = std::map<int, long>;

struct VVStep {
  int t = 0;
  bool equal = true;
  GradedDims graded_dims;
  std::optional<Polynomial> witness;
};

struct VVReport {
  Ideal base;
  Ideal jacobian;
  int tmax = 0;
  std::vector<VVStep> per_t;
  bool torsion_free = true;
  std::optional<int> first_failure;
};

/// Least e with m^e inside I, or nullopt when I is not m-primary.
std::optional<int> mprimary_exponent(const Ideal& i);

/// Requires J inside I (std::invalid_argument otherwise) and t >= 2.
/// Finite-length pieces are computed from Hilbert functions up to the
/// degree where J I^{t-1} swallows J; otherwise from full Hilbert series
/// (std::domain_error if the quotient has infinite length).
GradedDims vv_piece(const Ideal& j, const Ideal& i, int t);

/// A homogeneous element of least degree in J cap I^t outside J I^{t-1}:
/// the first row, in reduced echelon form over degrevlex-descending monomial
/// coordinates, of the degree-d part of J cap I^t whose normal form modulo
/// J I^{t-1} is nonzero. nullopt when the piece vanishes.
std::optional<Polynomial> vv_witness(const Ideal& j, const Ideal& i, int t);

struct VVOptions {
  /// Stop after the first t with a nonzero piece.
  bool stop_at_failure = true;
  /// Worker threads for the independent per-t checks.
  unsigned threads = 1;
};

/// Checks t = 2..tmax. Requires J inside I and I m-primary.
VVReport vv_torsion_free(const Ideal& j, const Ideal& i, int tmax, const VVOptions& options = {});

/// Witness check: w in J, w in I^t, w not in J I^{t-1}.
bool is_vv_witness(const Ideal& j, const Ideal& i, int t, const Polynomial& w);

struct ReesPresentation {
  int relation_type = 0;
  /// (degree in the base variables, fiber degree) of each minimal relation,
  /// sorted; relations lying in J are not counted.
  std::vector<std::pair<int, int>> generator_bidegrees;
  /// Number of fiber variables (minimal generators of I modulo J).
  std::size_t fiber_size = 0;
  /// True when a minimal relation has fiber degree above the bound.
  bool exceeded_bound = false;
};

/// Kernel of A[T_1..T_n] -> Rees algebra of I/J over A = R/J by eliminating
/// the parameter from J + (T_i - a_i u). J may be the zero ideal.
ReesPresentation relation_type(const Ideal& j, const Ideal& i, int bound);

/// Every monomial of degree e lies in I.
bool mpower_in_ideal(const Ideal& i, int e);

}  // namespace vvkit
