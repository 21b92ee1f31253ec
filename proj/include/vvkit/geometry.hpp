#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vvkit/ideal.hpp"
#include "vvkit/linalg.hpp"
#include "vvkit/polynomial.hpp"

namespace vvkit {

/// Homogeneous coordinates scaled so the last nonzero entry is 1.
class ProjectivePoint {
 public:
  ProjectivePoint() = default;
  /// Throws std::invalid_argument for the zero vector.
  explicit ProjectivePoint(std::vector<Rational> coords);

  const std::vector<Rational>& coords() const { return coords_; }
  std::size_t size() const { return coords_.size(); }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  std::string to_string() const;

  friend bool operator==(const ProjectivePoint&, const ProjectivePoint&) = default;

 private:
  std::vector<Rational> coords_;
};

/// Distinct points of P^n.
class PointConfiguration {
 public:
  PointConfiguration() = default;
  /// Throws on mixed lengths, n < 1 or repeated points.
  explicit PointConfiguration(std::vector<ProjectivePoint> points);
  /// Convenience: each inner list is one point's coordinates.
  static PointConfiguration from_coordinates(const std::vector<std::vector<Rational>>& coords);
  /// Points given as the columns of a matrix.
  static PointConfiguration from_columns(const RationalMatrix& m);

  const std::vector<ProjectivePoint>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  /// Dimension n of the ambient P^n.
  std::size_t dim() const { return points_.empty() ? 0 : points_.front().size() - 1; }

 private:
  std::vector<ProjectivePoint> points_;
};

/// (x, y, z) for the plane, x0..xn otherwise.
RingPtr ring_for(const PointConfiguration& cfg);

/// n independent linear forms x_i - p_i x_k, k the normalizing coordinate.
Ideal point_ideal(const ProjectivePoint& p, const RingPtr& ring);
/// Intersection of the point ideals, trimmed to minimal generators.
Ideal ideal_of_points(const PointConfiguration& cfg);

struct ConfigClass {
  std::size_t s = 0;
  /// Sizes of the maximal collinear subsets with at least 3 points,
  /// descending.
  std::vector<std::size_t> profile;
  /// Case number in the five-point (1-5), six-point (1-11) or four-point
  /// (1 general, 2 all collinear, 3 three collinear) lists.
  std::optional<int> label;
  /// "general", "<k>-fold" for a single line of k >= 3 points, or "mixed".
  std::string descriptor;
};

/// Plane configurations with at least 3 points.
ConfigClass classify_config(const PointConfiguration& cfg);

/// Nonzero conic through all points, if one exists and is unique up to
/// scalar.
std::optional<Polynomial> conic_through(const PointConfiguration& cfg);
/// Rank 3 symmetric matrix, i.e. no linear factor.
bool is_irreducible_conic(const Polynomial& q);

/// Accepted labels: "4:k", "5:k", "6:k" for the case lists; "6-general",
/// "5-collinear" style aliases ("<s>-general", "<s>-collinear"); "(s,r)-fold"
/// for s points with exactly s-r on one line and the rest in general
/// position off it, with optional "-in"/"-off" suffix for r = 2 (whether
/// the line through the two remaining points meets the long line in a point
/// of the set). Deterministic in the seed; throws std::invalid_argument for
/// unknown labels and std::runtime_error when 10^4 draws are exhausted.
PointConfiguration sample_config(const std::string& label, std::uint64_t seed);
/// True when cfg satisfies the label's definition.
bool matches_label(const PointConfiguration& cfg, const std::string& label);

struct JacobianData {
  Ideal base;
  /// rows = generators of base, columns = variables.
  std::vector<std::vector<Polynomial>> theta;
  Ideal minors;
  /// base + minors, minimally generated.
  Ideal jacobian;
};

/// All codim x codim minors of the matrix.
std::vector<Polynomial> minors(const std::vector<std::vector<Polynomial>>& matrix, std::size_t k);
/// Uses the minimal generators of J as rows of the Jacobian matrix.
JacobianData jacobian(const Ideal& j, std::size_t codim);

/// First four points moved to [1:0:0], [0:1:0], [0:0:1], [1:1:1]. Requires
/// no three of those four collinear.
PointConfiguration normalize_to_frame(const PointConfiguration& cfg);

/// The d+1 degree-d forms x^{d-1-j} y^{j+1} + ..., j = 0..d-2, and
/// x^{d-1} z + ... , each completed by the unique combination of the
/// remaining monomials vanishing on the points. Needs binomial(d+1, 2)
/// points whose first four form the standard frame. Throws
/// std::invalid_argument on wrong counts or a non-normalized frame and
/// std::domain_error on a singular system.
std::vector<Polynomial> glp_binomial_generators(int d, const PointConfiguration& cfg);
/// Same, additionally rejecting configurations with three collinear points.
std::vector<Polynomial> glp_binomial_generators_checked(int d, const PointConfiguration& cfg);
/// The leading monomial list x^{d-1}y, ..., x y^{d-1}, x^{d-1}z, x^{d-2}yz,
/// y^d z of the defining ideal of binomial(d+1, 2) general points.
std::vector<Monomial> glp_initial_monomials(int d);

}  // namespace vvkit
