#include <gtest/gtest.h>

#include <random>

#include "oracle.hpp"
#include "support.hpp"
#include "vvkit/geometry.hpp"
#include "vvkit/hilbert.hpp"
#include "vvkit/vava.hpp"

using namespace vvkit;
using vvtest::P;

namespace {

Ideal I(std::initializer_list<std::string_view> gens) { return Ideal(plane_ring(), gens); }

struct Pair {
  Ideal j;
  Ideal i;
};

Pair pair_for(const Ideal& j) { return {j, jacobian(j, 2).jacobian}; }
Pair pair_for(const std::string& label, std::uint64_t seed = 1) {
  return pair_for(ideal_of_points(sample_config(label, seed)));
}

Pair four_on_a_line() { return pair_for(I({"z", "x^3*y - x*y^3"})); }

void expect_matches_oracle(const Pair& p, int t) {
  const auto dims = vv_piece(p.j, p.i, t);
  const int top = p.j.max_generator_degree() + *mprimary_exponent(p.i) * (t - 1);
  for (int d = 0; d <= top; ++d) {
    const long want = vvtest::oracle_vv_dimension(p.j.generators(), p.i.generators(), t, 3, d);
    const auto it = dims.find(d);
    EXPECT_EQ(it == dims.end() ? 0 : it->second, want) << "degree " << d;
  }
}

}  // namespace

TEST(MPrimary, Exponent) {
  EXPECT_EQ(mprimary_exponent(maximal_ideal_power(plane_ring(), 3)), 3);
  EXPECT_EQ(mprimary_exponent(I({"x^2", "y^2", "z^2"})), 4);
  EXPECT_EQ(mprimary_exponent(I({"x", "y"})), std::nullopt);
}

TEST(MPower, Examples) {
  EXPECT_FALSE(mpower_in_ideal(I({"x"}), 3));
  EXPECT_TRUE(mpower_in_ideal(I({"x^2", "y^2", "z^2"}), 4));
  EXPECT_FALSE(mpower_in_ideal(I({"x^2", "y^2", "z^2"}), 3));
  const auto minors = jacobian(ideal_of_points(sample_config("6-general", 1)), 2).minors;
  EXPECT_TRUE(mpower_in_ideal(minors, 4));
  EXPECT_FALSE(mpower_in_ideal(minors, 3));
}

TEST(VVPiece, FourCollinearPointsFailAtTwo) {
  const auto p = four_on_a_line();
  const auto dims = vv_piece(p.j, p.i, 2);
  ASSERT_FALSE(dims.empty());
  EXPECT_EQ(dims.begin()->first, 8);
  const auto f = P("x^3*y - x*y^3");
  EXPECT_TRUE(is_vv_witness(p.j, p.i, 2, multiply(P("y^4"), f)));
  const auto w = vv_witness(p.j, p.i, 2);
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(w->degree(), 8);
  EXPECT_TRUE(is_vv_witness(p.j, p.i, 2, *w));
  EXPECT_EQ(vv_witness(p.j, p.i, 2), w);
}

TEST(VVPiece, AgreesWithBruteForce) {
  expect_matches_oracle(four_on_a_line(), 2);
  expect_matches_oracle(four_on_a_line(), 3);
  expect_matches_oracle(pair_for("5:1"), 2);
  expect_matches_oracle(pair_for("5:2"), 2);
  expect_matches_oracle(pair_for("6:7"), 2);
}

TEST(VVPiece, FiveGeneralPointsVanish) {
  const auto p = pair_for("5:1");
  EXPECT_TRUE(vv_piece(p.j, p.i, 2).empty());
  EXPECT_EQ(vv_witness(p.j, p.i, 2), std::nullopt);
}

TEST(VVPiece, LinearTypeExample) {
  // (x) cap m^t = x m^{t-1}.
  const auto m = maximal_ideal_power(plane_ring(), 1);
  for (int t = 2; t <= 4; ++t) EXPECT_TRUE(vv_piece(I({"x"}), m, t).empty());
}

TEST(VVPiece, RejectsBadInput) {
  EXPECT_THROW(vv_piece(I({"x"}), I({"y"}), 2), std::invalid_argument);
  EXPECT_THROW(vv_piece(I({"x"}), I({"x", "y"}), 1), std::invalid_argument);
  EXPECT_FALSE(is_vv_witness(I({"x"}), I({"x", "y"}), 2, P("x")));
}

TEST(VVTorsionFree, FivePointVerdicts) {
  for (int k = 1; k <= 5; ++k) {
    const auto p = pair_for("5:" + std::to_string(k));
    const auto report = vv_torsion_free(p.j, p.i, 5);
    EXPECT_EQ(report.torsion_free, k == 1 || k == 4 || k == 5) << k;
    for (const auto& step : report.per_t) {
      EXPECT_EQ(step.equal, step.graded_dims.empty());
      EXPECT_EQ(step.witness.has_value(), !step.equal);
      if (step.witness) EXPECT_TRUE(is_vv_witness(p.j, p.i, step.t, *step.witness));
    }
    if (!report.torsion_free) EXPECT_EQ(report.first_failure, 2) << k;
  }
}

TEST(VVTorsionFree, ThreadedRunMatchesSerial) {
  const auto p = pair_for("5:3");
  VVOptions serial;
  serial.stop_at_failure = false;
  VVOptions threaded = serial;
  threaded.threads = 3;
  const auto a = vv_torsion_free(p.j, p.i, 4, serial);
  const auto b = vv_torsion_free(p.j, p.i, 4, threaded);
  ASSERT_EQ(a.per_t.size(), b.per_t.size());
  for (std::size_t k = 0; k < a.per_t.size(); ++k) {
    EXPECT_EQ(a.per_t[k].graded_dims, b.per_t[k].graded_dims);
    EXPECT_EQ(a.per_t[k].witness, b.per_t[k].witness);
  }
  EXPECT_EQ(a.first_failure, b.first_failure);
}

TEST(VVTorsionFree, VerdictIsProjectivelyInvariant) {
  std::mt19937_64 rng(41);
  for (int k = 1; k <= 5; ++k) {
    const auto cfg = sample_config("5:" + std::to_string(k), 3);
    const auto base = pair_for(ideal_of_points(cfg));
    const bool verdict = vv_torsion_free(base.j, base.i, 3).torsion_free;
    const auto m = vvtest::random_invertible(rng, 3);
    std::vector<Polynomial> moved;
    for (const auto& g : base.j.generators()) moved.push_back(substitute_linear(g, m));
    const auto p = pair_for(Ideal(plane_ring(), moved));
    EXPECT_EQ(vv_torsion_free(p.j, p.i, 3).torsion_free, verdict) << k;
  }
}

TEST(RelationType, CompleteIntersectionIsLinearType) {
  const auto ring = make_ring({"x", "y"});
  const Ideal zero(ring, std::vector<Polynomial>{});
  const Ideal a(ring, {P("3*x^2*y - y^3", ring), P("x^3 - 3*x*y^2", ring)});
  const auto rees = relation_type(zero, a, 4);
  EXPECT_EQ(rees.relation_type, 1);
  EXPECT_EQ(rees.fiber_size, 2u);
  EXPECT_FALSE(rees.exceeded_bound);
}

TEST(RelationType, CollinearPointsReachTheBound) {
  const auto p = four_on_a_line();
  const auto rees = relation_type(p.j, p.i, 4);
  EXPECT_EQ(rees.relation_type, 4);
  EXPECT_EQ(rees.fiber_size, 2u);
}

TEST(RelationType, FiveGeneralPoints) {
  const auto p = pair_for("5:1");
  const auto rees = relation_type(p.j, p.i, 5);
  EXPECT_EQ(rees.relation_type, 2);
  EXPECT_EQ(rees.fiber_size, 4u);
  for (const auto& [base, fiber] : rees.generator_bidegrees) EXPECT_LE(fiber, 2);
}
