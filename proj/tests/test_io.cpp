#include <gtest/gtest.h>

#include "support.hpp"
#include "vvkit/repro.hpp"

using namespace vvkit;

namespace {

std::vector<BigInt> ints(std::initializer_list<long> v) {
  std::vector<BigInt> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

}  // namespace

TEST(JsonIo, IdealRoundTrip) {
  const Ideal a(make_ring({"a", "b"}), {"a^2 - 1/3*b", "a*b"});
  const auto j = ideal_to_json(a);
  EXPECT_EQ(j.dump(), R"({"ring":{"vars":["a","b"]},"gens":["a^2 - 1/3*b","a*b"]})");
  const auto back = ideal_from_json(j);
  EXPECT_EQ(back.generators(), a.generators());
}

TEST(JsonIo, PointsRoundTrip) {
  const auto cfg = PointConfiguration::from_coordinates({{1, 0, 0}, {Rational(2, 3), 5, 1}});
  const auto j = points_to_json(cfg);
  EXPECT_EQ(j.dump(), R"({"dim":2,"points":[["1","0","0"],["2/3","5","1"]]})");
  EXPECT_EQ(points_from_json(j).points(), cfg.points());
  EXPECT_EQ(points_from_json(Json::parse(R"({"points": [[2, 4, 2], [0, 1, 0]]})")).points()[0].to_string(),
            "[1:2:1]");
}

TEST(JsonIo, RejectsMalformedDocuments) {
  EXPECT_THROW(ideal_from_json(Json::parse(R"({"gens": []})")), FormatError);
  EXPECT_THROW(ideal_from_json(Json::parse(R"({"ring": {"vars": []}, "gens": []})")), FormatError);
  EXPECT_THROW(ideal_from_json(Json::parse(R"({"ring": {"vars": ["x"]}, "gens": ["y"]})")), ParseError);
  EXPECT_THROW(points_from_json(Json::parse(R"({"dim": 2, "points": [["1","0"]]})")), FormatError);
  EXPECT_THROW(points_from_json(Json::parse(R"({"points": [[true, 1, 1]]})")), FormatError);
  EXPECT_THROW(read_json_file("/nonexistent/file.json"), FormatError);
}

TEST(JsonIo, SeriesAndReports) {
  const HilbertSeries hs(ints({1, 2, 2}), 1);
  EXPECT_EQ(series_to_json(hs).dump(), R"j({"numerator":[1,2,2],"pole_order":1,"text":"(1 + 2*t + 2*t^2)/(1 - t)"})j");
  ConfigClass c;
  c.s = 4;
  c.descriptor = "general";
  c.label = 1;
  EXPECT_EQ(class_to_json(c).dump(), R"({"s":4,"profile":[],"label":1,"descriptor":"general"})");
}

TEST(Repro, PredictedPencilSeriesAtSix) {
  EXPECT_EQ(pencil_intersection_numerator(6), ints({1, 1, 1, 1, 1, 1, 1, 1, 1, 1, -3, -2}));
  EXPECT_EQ(pencil_product_numerator(6), ints({1, 1, 1, 1, 1, 1, 1, 1, 1, 1, -3, -1, -1}));
  for (int s = 6; s <= 9; ++s) {
    // Both quotients have multiplicity deg f = s - 1.
    EXPECT_EQ(HilbertSeries(pencil_intersection_numerator(s), 1).multiplicity(), s - 1);
    EXPECT_EQ(HilbertSeries(pencil_product_numerator(s), 1).multiplicity(), s - 1);
  }
}

TEST(Repro, NamedConfigurations) {
  const auto two = two_off_line_config(8);
  EXPECT_EQ(classify_config(two).profile, (std::vector<std::size_t>{6}));
  EXPECT_TRUE(matches_label(two, "(8,2)-fold-off"));
  const auto g = two_off_line_form(8);
  EXPECT_EQ(g.evaluate(std::vector<Rational>{1, 1, 0}), 1);
  for (std::size_t i = 0; i < 6; ++i) EXPECT_EQ(g.evaluate(two.points()[i].coords()), 0);

  const auto three = three_off_line_config(9);
  EXPECT_EQ(classify_config(three).profile, (std::vector<std::size_t>{6}));
  Rational product = 1;
  for (std::size_t i = 0; i < 6; ++i) product *= three.points()[i][0];
  EXPECT_EQ(product, 1);
}

TEST(Repro, RegistryIsSortedAndComplete) {
  const auto& claims = repro_claims();
  for (std::size_t k = 1; k < claims.size(); ++k) EXPECT_LT(claims[k - 1].id, claims[k].id);
  for (const char* id : {"R15b", "T22-claim", "T23", "T24", "P41", "P42", "P43", "P43-d4", "P43-d5", "P44",
                         "ATFN", "CONJ-d6"}) {
    EXPECT_NO_THROW(find_claim(id)) << id;
  }
  EXPECT_TRUE(find_claim("T24").slow);
  EXPECT_THROW(find_claim("nope"), std::invalid_argument);
  EXPECT_THROW(run_repro("nope"), std::invalid_argument);
}

TEST(Repro, CheapClaimsPass) {
  for (const char* id : {"R15b", "T22-claim", "T23", "P43"}) {
    const auto r = run_repro(id);
    EXPECT_EQ(r.status, "pass") << id;
    EXPECT_EQ(r.to_json()["claim"], id);
  }
  const auto conj = conjecture_experiment(3, 1, 2);
  EXPECT_EQ(conj.status, "experimental");
  EXPECT_EQ(conj.details["trials"].size(), 2u);
}
