#include <gtest/gtest.h>

#include <random>

#include "oracle.hpp"
#include "support.hpp"
#include "vvkit/geometry.hpp"
#include "vvkit/hilbert.hpp"

using namespace vvkit;
using vvtest::P;

namespace {

HilbertSeries series(std::vector<long> num, int e) {
  std::vector<BigInt> n;
  for (long v : num) n.emplace_back(v);
  return HilbertSeries(std::move(n), e);
}

Ideal I(std::initializer_list<std::string_view> gens) { return Ideal(plane_ring(), gens); }

}  // namespace

TEST(HilbertSeries, NormalizesCommonFactors) {
  // (1 - t^2)/(1 - t)^2 = (1 + t)/(1 - t)
  EXPECT_EQ(series({1, 0, -1}, 2), series({1, 1}, 1));
  EXPECT_EQ(series({1, -1}, 1), series({1}, 0));
  EXPECT_EQ(series({0}, 3).pole_order(), 0);
  EXPECT_EQ(series({1, 2, 2}, 1).to_string(), "(1 + 2*t + 2*t^2)/(1 - t)");
  EXPECT_EQ(series({1}, 3).to_string(), "1/(1 - t)^3");
}

TEST(HilbertSeries, CoefficientsAndArithmetic) {
  const auto a = series({1, 2, 2}, 1);
  EXPECT_EQ(a.coefficient(0), 1);
  EXPECT_EQ(a.coefficient(1), 3);
  EXPECT_EQ(a.coefficient(7), 5);
  EXPECT_EQ(a.multiplicity(), 5);
  EXPECT_EQ(a - a, series({}, 0));
  const auto b = series({1}, 3);
  EXPECT_EQ((a + b).coefficient(4), a.coefficient(4) + b.coefficient(4));
}

TEST(HilbertFunction, Examples) {
  const Ideal zero(plane_ring(), std::vector<Polynomial>{});
  EXPECT_EQ(hilbert_function(zero, 2), 6);
  const auto m = I({"x", "y", "z"});
  for (int d = 1; d <= 5; ++d) EXPECT_EQ(hilbert_function(m, d), 0);
  EXPECT_EQ(hilbert_function(m, 0), 1);
  EXPECT_THROW(hilbert_function(I({"x + 1"}), 1), std::invalid_argument);
}

TEST(HilbertFunction, SixGeneralPointsHaveMaximalFunction) {
  const auto j = ideal_of_points(sample_config("6-general", 1));
  const std::vector<int> expected = {1, 3, 6, 6, 6};
  for (int d = 0; d <= 4; ++d) EXPECT_EQ(hilbert_function(j, d), expected[d]) << d;
}

TEST(HilbertSeriesOfIdeals, CompleteIntersection) {
  const auto hs = hilbert_series(I({"z", "x^4 - 3*x^2*y^2 + y^4"}));
  EXPECT_EQ(hs, series({1, 1, 1, 1}, 1));
}

TEST(HilbertSeriesOfIdeals, FourFramePoints) {
  const auto cfg = PointConfiguration::from_coordinates({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}});
  EXPECT_EQ(hilbert_series(ideal_of_points(cfg)), series({1, 2, 1}, 1));
}

TEST(HilbertSeriesOfIdeals, FiveGeneralPoints) {
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    EXPECT_EQ(hilbert_series(ideal_of_points(sample_config("5:1", seed))), series({1, 2, 2}, 1));
  }
}

TEST(HilbertSeriesOfIdeals, TwoOffLinePointsSixPoints) {
  const auto j = ideal_of_points(sample_config("(6,2)-fold-off", 4));
  EXPECT_EQ(hilbert_series(j), series({1, 2, 2, 1}, 1));
}

TEST(HilbertSeriesOfIdeals, MacaulayConsistencyAndOracle) {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> deg(1, 3);
  for (int k = 0; k < 20; ++k) {
    std::vector<Polynomial> gens;
    for (int i = 0; i < 3; ++i) {
      auto f = vvtest::random_form(rng, plane_ring(), deg(rng), 4, 3);
      if (!f.is_zero()) gens.push_back(f);
    }
    if (gens.empty()) continue;
    const Ideal a(plane_ring(), gens);
    const auto hs = hilbert_series(a);
    const auto in = initial_ideal(a);
    for (int d = 0; d <= 8; ++d) {
      EXPECT_EQ(hilbert_function(a, d), hilbert_function(in, d));
      EXPECT_EQ(hs.coefficient(d), hilbert_function(a, d));
      EXPECT_EQ(hs.coefficient(d), vvtest::oracle_hilbert_function(gens, 3, d));
    }
  }
}

TEST(HilbertSeriesOfIdeals, PointCountLaw) {
  for (const char* label : {"4:1", "5:3", "5:5", "6:7", "6:10", "6:11", "(7,2)-fold"}) {
    const auto cfg = sample_config(label, 3);
    const auto hs = hilbert_series(ideal_of_points(cfg));
    EXPECT_EQ(hs.pole_order(), 1) << label;
    EXPECT_EQ(hs.multiplicity(), static_cast<long>(cfg.size())) << label;
    for (int d = 0; d <= static_cast<int>(hs.numerator().size()) + 3; ++d) {
      EXPECT_EQ(hs.coefficient(d), hilbert_function(ideal_of_points(cfg), d));
    }
  }
}

TEST(HilbertSeriesOfIdeals, AdditivityOnPointSplits) {
  // HS(R/(A cap B)) = HS(R/A) + HS(R/B) - HS(R/(A + B)).
  for (std::uint64_t seed = 1; seed <= 4; ++seed) {
    const auto cfg = sample_config(seed % 2 ? "6:8" : "(7,2)-fold-off", seed);
    std::vector<ProjectivePoint> left(cfg.points().begin(), cfg.points().begin() + 3);
    std::vector<ProjectivePoint> right(cfg.points().begin() + 3, cfg.points().end());
    const auto a = ideal_of_points(PointConfiguration(left));
    const auto b = ideal_of_points(PointConfiguration(right));
    const auto whole = ideal_of_points(cfg);
    EXPECT_EQ(hilbert_series(whole), hilbert_series(a) + hilbert_series(b) - hilbert_series(sum(a, b)));
  }
}

TEST(HilbertSeriesOfIdeals, RecursionGuard) {
  // Large but cheap: stays far below the node cap.
  std::vector<Monomial> gens;
  for (int i = 0; i <= 12; ++i) gens.push_back(Monomial{12 - i, i, 0});
  gens.push_back(Monomial{0, 0, 5});
  const auto hs = hilbert_series(MonomialIdeal(3, gens));
  EXPECT_EQ(hs.pole_order(), 0);
  EXPECT_EQ(hs.multiplicity(), 5 * 78);
}
