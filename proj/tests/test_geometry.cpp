#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "oracle.hpp"
#include "support.hpp"
#include "vvkit/geometry.hpp"
#include "vvkit/hilbert.hpp"

using namespace vvkit;
using vvtest::P;

namespace {

Ideal I(std::initializer_list<std::string_view> gens) { return Ideal(plane_ring(), gens); }

std::vector<std::vector<Rational>> coords(const PointConfiguration& cfg) {
  std::vector<std::vector<Rational>> out;
  for (const auto& p : cfg.points()) out.push_back(p.coords());
  return out;
}

PointConfiguration columns(std::initializer_list<std::initializer_list<Rational>> rows) {
  return PointConfiguration::from_columns(RationalMatrix(rows));
}

// a = 2, b = 3 in the normal forms of the three incidence cases.
PointConfiguration m8() { return columns({{1, 0, 1, 1, 2, 3}, {0, 1, 1, 1, 0, 0}, {0, 0, 0, 1, 1, 1}}); }
PointConfiguration m9() { return columns({{1, 0, 1, 0, 2, 0}, {0, 1, 1, 0, 0, 3}, {0, 0, 0, 1, 1, 1}}); }
PointConfiguration m10() { return columns({{1, 0, 1, 2, 3, 2}, {0, 1, 1, 0, 0, -1}, {0, 0, 0, 1, 1, 1}}); }

void expect_ideal_of_points(const PointConfiguration& cfg, const Ideal& j, int top) {
  for (const auto& g : j.generators()) {
    for (const auto& p : cfg.points()) EXPECT_EQ(g.evaluate(p.coords()), 0) << g.to_string();
  }
  for (int d = 0; d <= top; ++d) {
    vvtest::MacaulayPiece piece(j.generators(), 3, d);
    EXPECT_EQ(piece.dimension(), vvtest::oracle_points_ideal_dimension(coords(cfg), d)) << "degree " << d;
  }
}

}  // namespace

TEST(Points, NormalizationAndValidation) {
  ProjectivePoint p({2, 4, 2});
  EXPECT_EQ(p.to_string(), "[1:2:1]");
  EXPECT_EQ(ProjectivePoint({3, 0, 0}).to_string(), "[1:0:0]");
  EXPECT_THROW(ProjectivePoint({0, 0, 0}), std::invalid_argument);
  EXPECT_THROW(PointConfiguration::from_coordinates({{1, 0, 1}, {2, 0, 2}}), std::invalid_argument);
}

TEST(PointIdeal, Examples) {
  EXPECT_TRUE(equals(point_ideal(ProjectivePoint({0, 0, 1}), plane_ring()), I({"x", "y"})));
  EXPECT_TRUE(equals(point_ideal(ProjectivePoint({1, 1, 1}), plane_ring()), I({"x - z", "y - z"})));
  const ProjectivePoint q({Rational(1, 2), -3, 0});
  const auto iq = point_ideal(q, plane_ring());
  EXPECT_EQ(iq.generators().size(), 2u);
  for (const auto& g : iq.generators()) EXPECT_EQ(g.evaluate(q.coords()), 0);
}

TEST(IdealOfPoints, CoordinatePoints) {
  const auto cfg = PointConfiguration::from_coordinates({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  const auto j = ideal_of_points(cfg);
  EXPECT_TRUE(equals(j, I({"x*y", "x*z", "y*z"})));
  expect_ideal_of_points(cfg, j, 4);
}

TEST(IdealOfPoints, CollinearPointsGiveLineAndProduct) {
  const auto cfg = PointConfiguration::from_coordinates({{0, 1, 0}, {1, 0, 0}, {1, 1, 0}, {1, -1, 0}});
  EXPECT_TRUE(equals(ideal_of_points(cfg), I({"z", "x^3*y - x*y^3"})));
}

TEST(IdealOfPoints, FiveFramePointsMatchConicAndCubics) {
  const auto cfg = PointConfiguration::from_coordinates({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}, {2, 3, 1}});
  const auto j = ideal_of_points(cfg);
  EXPECT_TRUE(equals(j, I({"x*y + 3*x*z - 4*y*z", "x^2*y - 3*x*y*z + 2*y*z^2",
                           "x*y^2 - 3*x*y*z - y^2*z + 3*y*z^2"})));
  expect_ideal_of_points(cfg, j, 5);
}

TEST(IdealOfPoints, AgreesWithEvaluationOracleOnSamples) {
  for (const char* label : {"5:4", "6:9", "6:11", "(7,2)-fold-in"}) {
    const auto cfg = sample_config(label, 2);
    expect_ideal_of_points(cfg, ideal_of_points(cfg), 6);
  }
}

TEST(Classify, NormalFormsOfIncidenceCases) {
  EXPECT_EQ(classify_config(m8()).label, 8);
  EXPECT_EQ(classify_config(m9()).label, 9);
  EXPECT_EQ(classify_config(m10()).label, 10);
}

TEST(Classify, FivePointsThreeOnALine) {
  // [1:0:0], [0:1:0], [1:1:0] on z = 0; the line through the other two
  // meets z = 0 at [1:-1:0], which is not in the set.
  const auto cfg = PointConfiguration::from_coordinates({{1, 0, 0}, {0, 1, 0}, {1, 1, 0}, {0, 0, 1}, {1, -1, 1}});
  const auto cls = classify_config(cfg);
  EXPECT_EQ(cls.label, 4);
  EXPECT_EQ(cls.profile, (std::vector<std::size_t>{3}));
  const auto in = PointConfiguration::from_coordinates({{1, 0, 0}, {0, 1, 0}, {1, 1, 0}, {0, 0, 1}, {1, 1, 1}});
  EXPECT_EQ(classify_config(in).label, 5);
}

TEST(Classify, ThreeCoordinatePoints) {
  const auto cls = classify_config(PointConfiguration::from_coordinates({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
  EXPECT_TRUE(cls.profile.empty());
  EXPECT_EQ(cls.descriptor, "general");
  EXPECT_THROW(classify_config(PointConfiguration::from_coordinates({{1, 0, 0}, {0, 1, 0}})),
               std::invalid_argument);
}

TEST(Classify, InvariantUnderReorderingAndCoordinatePermutation) {
  std::mt19937_64 rng(8);
  for (int k = 1; k <= 11; ++k) {
    const auto cfg = sample_config("6:" + std::to_string(k), 5);
    auto pts = coords(cfg);
    std::shuffle(pts.begin(), pts.end(), rng);
    for (auto& p : pts) std::rotate(p.begin(), p.begin() + 1, p.end());
    const auto moved = PointConfiguration::from_coordinates(pts);
    EXPECT_EQ(classify_config(moved).label, k);
    EXPECT_EQ(classify_config(moved).profile, classify_config(cfg).profile);
  }
}

TEST(Sample, EveryCaseIsReachableAndDeterministic) {
  for (int s : {4, 5, 6}) {
    const int cases = s == 4 ? 3 : s == 5 ? 5 : 11;
    for (int k = 1; k <= cases; ++k) {
      const std::string label = std::to_string(s) + ":" + std::to_string(k);
      const auto a = sample_config(label, 11);
      EXPECT_EQ(classify_config(a).label, k) << label;
      EXPECT_EQ(coords(a), coords(sample_config(label, 11))) << label;
    }
  }
}

TEST(Sample, SpecExamples) {
  EXPECT_EQ(classify_config(sample_config("6-general", 1)).label, 1);
  const auto line = sample_config("5-collinear", 3);
  EXPECT_EQ(classify_config(line).profile, (std::vector<std::size_t>{5}));
  const auto fold = sample_config("(7,2)-fold", 7);
  EXPECT_EQ(fold.size(), 7u);
  EXPECT_EQ(classify_config(fold).profile.front(), 5u);
  EXPECT_THROW(sample_config("6:12", 1), std::invalid_argument);
  EXPECT_THROW(sample_config("(5,3)-fold", 1), std::invalid_argument);
  EXPECT_THROW(sample_config("octagon", 1), std::invalid_argument);
}

TEST(Jacobian, CollinearFourPoints) {
  const auto data = jacobian(I({"z", "x^3*y - x*y^3"}), 2);
  EXPECT_TRUE(equals(data.jacobian, I({"z", "3*x^2*y - y^3", "x^3 - 3*x*y^2"})));
  EXPECT_EQ(data.theta.size(), 2u);
  EXPECT_EQ(data.theta[1][0], P("3*x^2*y - y^3"));
}

TEST(Jacobian, MinorsOfGenericMatrix) {
  const auto ring = make_ring({"x", "y", "z", "w"});
  const std::vector<std::vector<Polynomial>> m = {{P("x", ring), P("y", ring)}, {P("z", ring), P("w", ring)}};
  const auto mins = minors(m, 2);
  ASSERT_EQ(mins.size(), 1u);
  EXPECT_EQ(mins[0], P("x*w - y*z", ring));
  EXPECT_THROW(minors(m, 3), std::invalid_argument);
}

TEST(Jacobian, SixGeneralPoints) {
  const auto j = ideal_of_points(sample_config("6-general", 1));
  const auto data = jacobian(j, 2);
  const auto m4 = maximal_ideal_power(plane_ring(), 4);
  EXPECT_TRUE(equals(data.minors, m4));
  EXPECT_TRUE(is_subset(m4, data.jacobian));
  EXPECT_TRUE(is_subset(j, data.jacobian));
}

TEST(Jacobian, ReducedConfigurationsAreMPrimary) {
  for (const char* label : {"5:2", "5:5", "6:7", "6:11"}) {
    const auto data = jacobian(ideal_of_points(sample_config(label, 1)), 2);
    EXPECT_EQ(hilbert_series(data.jacobian).pole_order(), 0) << label;
  }
}

TEST(Glp, FrameExampleFromNormalForm) {
  // (a,b) = (2,3), (c,d) = (4,6): [0:0:1], [2:3:1], [4:6:1] are collinear,
  // yet the coefficient system is regular and the construction still works.
  const auto cfg = PointConfiguration::from_coordinates(
      {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}, {2, 3, 1}, {4, 6, 1}});
  const auto gens = glp_binomial_generators(3, cfg);
  ASSERT_EQ(gens.size(), 4u);
  const Ideal j(plane_ring(), gens);
  EXPECT_TRUE(equals(j, ideal_of_points(cfg)));
  expect_ideal_of_points(cfg, j, 5);
  EXPECT_THROW(glp_binomial_generators_checked(3, cfg), std::domain_error);
}

TEST(Glp, GeneralPointsHaveNonzeroCoefficients) {
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    const auto cfg = normalize_to_frame(sample_config("6-general", seed));
    const auto gens = glp_binomial_generators_checked(3, cfg);
    for (const auto& g : gens) EXPECT_EQ(g.size(), 4u) << g.to_string();
    EXPECT_TRUE(equals(Ideal(plane_ring(), gens), ideal_of_points(cfg)));
  }
}

TEST(Glp, InitialIdealsAndHilbertFunction) {
  for (int d : {3, 4}) {
    const int s = d * (d + 1) / 2;
    const auto cfg = normalize_to_frame(sample_config(std::to_string(s) + "-general", 2));
    const Ideal j(plane_ring(), glp_binomial_generators_checked(d, cfg));
    EXPECT_TRUE(equals(j, ideal_of_points(cfg)));
    auto got = initial_ideal(j).generators();
    auto want = glp_initial_monomials(d);
    EXPECT_EQ(got.size(), want.size());
    for (const auto& m : want) EXPECT_NE(std::find(got.begin(), got.end(), m), got.end());
    for (int t = 0; t <= s; ++t) {
      EXPECT_EQ(hilbert_function(j, t), std::min(s, (t + 2) * (t + 1) / 2));
    }
  }
}

TEST(Glp, RejectsBadInput) {
  EXPECT_THROW(glp_binomial_generators(3, sample_config("5-general", 1)), std::invalid_argument);
  const auto raw = sample_config("6-general", 1);
  if (!(raw.points()[0].coords() == std::vector<Rational>{1, 0, 0})) {
    EXPECT_THROW(glp_binomial_generators(3, raw), std::invalid_argument);
  }
  // Four points on one line cannot be moved to a frame.
  EXPECT_THROW(normalize_to_frame(sample_config("6:4", 1)), std::domain_error);
}
