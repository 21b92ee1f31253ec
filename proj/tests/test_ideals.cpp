#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "oracle.hpp"
#include "support.hpp"
#include "vvkit/ideal.hpp"

using namespace vvkit;
using vvtest::P;

namespace {

Ideal I(std::initializer_list<std::string_view> gens, RingPtr ring = plane_ring()) {
  return Ideal(std::move(ring), gens);
}

std::vector<int> degrees(const std::vector<Polynomial>& gens) {
  std::vector<int> d;
  for (const auto& g : gens) d.push_back(g.degree());
  std::sort(d.begin(), d.end());
  return d;
}

Ideal random_homogeneous_ideal(std::mt19937_64& rng, int count, int max_degree) {
  std::uniform_int_distribution<int> deg(1, max_degree);
  std::vector<Polynomial> gens;
  while (static_cast<int>(gens.size()) < count) {
    auto f = vvtest::random_form(rng, plane_ring(), deg(rng), 3, 3);
    if (!f.is_zero()) gens.push_back(f);
  }
  return Ideal(plane_ring(), gens);
}

}  // namespace

TEST(IdealAlgebra, SumAndProductExamples) {
  EXPECT_TRUE(equals(sum(I({"x"}), I({"y"})), I({"x", "y"})));
  const auto sq = product(I({"x", "y"}), I({"x", "y"}));
  EXPECT_EQ(sq.generators().size(), 3u);
  EXPECT_TRUE(equals(sq, I({"x^2", "x*y", "y^2"})));
  EXPECT_TRUE(equals(product(I({"x"}), I({"y"})), I({"x*y"})));
}

TEST(IdealAlgebra, PowerExamples) {
  const auto m = I({"x", "y"});
  EXPECT_TRUE(equals(power(m, 2), I({"x^2", "x*y", "y^2"})));
  EXPECT_TRUE(equals(power(m, 1), m));
  EXPECT_TRUE(equals(power(power(m, 2), 2), power(m, 4)));
  EXPECT_THROW(power(m, 0), std::invalid_argument);
}

TEST(IdealAlgebra, IntersectExamples) {
  EXPECT_TRUE(equals(intersect(I({"x"}), I({"y"})), I({"x*y"})));
  EXPECT_TRUE(equals(intersect(I({"z", "x"}), I({"z", "y"})), I({"z", "x*y"})));
}

TEST(IdealAlgebra, QuotientExamples) {
  EXPECT_TRUE(equals(quotient(I({"x*y", "x*z"}), I({"x"})), I({"y", "z"})));
  const auto a = I({"x^2 - y*z", "x*y^2"});
  EXPECT_TRUE(equals(quotient(a, I({"1"})), a));
  EXPECT_THROW(quotient(a, Ideal(plane_ring(), std::vector<Polynomial>{})), std::invalid_argument);
}

TEST(IdealAlgebra, EliminateExamples) {
  const auto ring = make_ring({"t", "x", "y", "z"});
  const auto e = eliminate(I({"t*x - y", "t*y - z"}, ring), {"t"});
  const auto small = e.ring();
  EXPECT_EQ(small->variables(), (std::vector<std::string>{"x", "y", "z"}));
  // Both inclusions by membership.
  EXPECT_TRUE(contains(e, P("y^2 - x*z", small)));
  const auto target = Ideal(small, {"y^2 - x*z"});
  EXPECT_TRUE(is_subset(e, target));
  EXPECT_TRUE(eliminate(I({"t*x"}, ring), {"t"}).is_zero());
  EXPECT_TRUE(equals(eliminate(I({"t - 1", "x"}, ring), {"t"}), Ideal(small, {"x"})));
  EXPECT_THROW(eliminate(I({"x"}, ring), {"t", "x", "y", "z"}), std::invalid_argument);
}

TEST(IdealAlgebra, EliminateKeepsVariableOrderForInnerVariables) {
  const auto ring = make_ring({"x", "s", "y"});
  const auto e = eliminate(I({"x - s^2", "y - s^3"}, ring), {"s"});
  EXPECT_EQ(e.ring()->variables(), (std::vector<std::string>{"x", "y"}));
  EXPECT_TRUE(equals(e, Ideal(e.ring(), {"x^3 - y^2"})));
}

TEST(Membership, Examples) {
  const auto f = P("x^3*y - x*y^3");
  EXPECT_TRUE(contains(Ideal(plane_ring(), {f}), f));
  EXPECT_FALSE(contains(I({"x^2", "y"}), P("x")));
  EXPECT_TRUE(contains(I({"x^2", "y"}), P("x^2 + 3*y*z + 1/2*y")));
  EXPECT_TRUE(contains(I({"x - 1"}), P("x^2 - 1")));
}

TEST(Membership, AgreesWithMacaulayOracle) {
  std::mt19937_64 rng(2024);
  for (int k = 0; k < 20; ++k) {
    const auto a = random_homogeneous_ideal(rng, 3, 3);
    for (int d = 1; d <= 8; ++d) {
      vvtest::MacaulayPiece piece(a.generators(), 3, d);
      // One random form and one random ideal element per degree.
      Polynomial inside = Polynomial::constant(plane_ring(), 0);
      for (const auto& g : a.generators()) {
        if (g.degree() <= d) inside += g * vvtest::random_form(rng, plane_ring(), d - g.degree(), 3, 3);
      }
      const auto outside = vvtest::random_form(rng, plane_ring(), d, 4, 3);
      EXPECT_EQ(contains(a, inside), piece.contains(inside));
      EXPECT_TRUE(contains(a, inside));
      EXPECT_EQ(contains(a, outside), piece.contains(outside)) << outside.to_string();
    }
  }
}

TEST(Equality, Examples) {
  EXPECT_TRUE(equals(I({"x", "y"}), I({"x + y", "y"})));
  EXPECT_FALSE(equals(I({"x"}), I({"x^2"})));
}

TEST(Equality, IsAnEquivalenceInvariantUnderShufflesAndScalings) {
  std::mt19937_64 rng(55);
  std::vector<Ideal> pool;
  for (int k = 0; k < 6; ++k) {
    auto a = random_homogeneous_ideal(rng, 2, 2);
    pool.push_back(a);
    auto gens = a.generators();
    std::shuffle(gens.begin(), gens.end(), rng);
    for (auto& g : gens) g *= Rational(-3, 7);
    gens.push_back(gens.front() * P("x + z"));
    pool.emplace_back(plane_ring(), gens);
  }
  for (std::size_t i = 0; i < pool.size(); ++i) {
    EXPECT_TRUE(equals(pool[i], pool[i]));
    if (i % 2 == 0) EXPECT_TRUE(equals(pool[i], pool[i + 1]));
    for (std::size_t j = 0; j < pool.size(); ++j) {
      EXPECT_EQ(equals(pool[i], pool[j]), equals(pool[j], pool[i]));
      for (std::size_t k = 0; k < pool.size(); ++k) {
        if (equals(pool[i], pool[j]) && equals(pool[j], pool[k])) {
          EXPECT_TRUE(equals(pool[i], pool[k]));
        }
      }
    }
  }
}

TEST(IdealAlgebra, ContainmentChainOnRandomIdeals) {
  std::mt19937_64 rng(77);
  for (int k = 0; k < 10; ++k) {
    const auto a = random_homogeneous_ideal(rng, 2, 2);
    const auto b = random_homogeneous_ideal(rng, 2, 2);
    const auto ab = product(a, b);
    const auto meet = intersect(a, b);
    EXPECT_TRUE(is_subset(ab, meet));
    EXPECT_TRUE(is_subset(meet, a));
    EXPECT_TRUE(is_subset(meet, b));
    const auto q = quotient(a, b);
    EXPECT_TRUE(is_subset(product(q, b), a));
    EXPECT_TRUE(is_subset(a, q));
  }
}

TEST(IdealAlgebra, PowerIsIteratedProduct) {
  std::mt19937_64 rng(91);
  for (int k = 0; k < 3; ++k) {
    const auto a = random_homogeneous_ideal(rng, 2, 2);
    for (int t = 2; t <= 4; ++t) {
      EXPECT_TRUE(equals(power(a, t), product(a, power(a, t - 1)))) << "t = " << t;
    }
  }
}

TEST(MinimalGenerators, Examples) {
  EXPECT_EQ(degrees(minimal_generators(I({"x", "x^2", "y"}))), (std::vector<int>{1, 1}));
  const auto m2 = minimal_generators(maximal_ideal_power(plane_ring(), 2));
  EXPECT_EQ(degrees(m2), (std::vector<int>(6, 2)));
  EXPECT_THROW(minimal_generators(I({"x + 1"})), std::invalid_argument);
}

TEST(MinimalGenerators, CountsAgreeWithOracle) {
  std::mt19937_64 rng(12);
  for (int k = 0; k < 10; ++k) {
    auto a = random_homogeneous_ideal(rng, 4, 3);
    auto gens = a.generators();
    gens.push_back(gens[0] * P("x - 2*y"));
    // A redundant generator of the same degree as gens[1] when possible.
    const int gap = gens[1].degree() - gens[0].degree();
    if (gap >= 0) gens.push_back(gens[1] + gens[0] * vvtest::random_form(rng, plane_ring(), gap, 2, 2));
    const Ideal b(plane_ring(), gens);
    const auto mins = minimal_generators(b);
    for (int d = 1; d <= 4; ++d) {
      const auto count = std::count_if(mins.begin(), mins.end(),
                                       [&](const Polynomial& g) { return g.degree() == d; });
      EXPECT_EQ(static_cast<std::size_t>(count), vvtest::oracle_minimal_generators_in_degree(gens, 3, d));
    }
  }
}

TEST(MinimalGenerators, DegreesInvariantUnderLinearChange) {
  std::mt19937_64 rng(5);
  for (int k = 0; k < 5; ++k) {
    auto a = random_homogeneous_ideal(rng, 4, 3);
    auto gens = a.generators();
    gens.push_back(gens[0] * P("y"));
    const auto base = degrees(minimal_generators(Ideal(plane_ring(), gens)));
    const auto m = vvtest::random_invertible(rng, 3);
    std::vector<Polynomial> moved;
    for (const auto& g : gens) moved.push_back(substitute_linear(g, m));
    EXPECT_EQ(degrees(minimal_generators(Ideal(plane_ring(), moved))), base);
  }
}

TEST(PurePower, Examples) {
  EXPECT_EQ(min_pure_power(maximal_ideal_power(plane_ring(), 4), "z"), 4);
  EXPECT_EQ(min_pure_power(I({"x"}), "z"), std::nullopt);
  EXPECT_EQ(min_pure_power(I({"x^2", "y^2", "z^3 - x*y*z"}), "z"), 5);
}

TEST(InitialIdeal, Examples) {
  EXPECT_EQ(initial_ideal(I({"x"})).generators(), (std::vector<Monomial>{Monomial{1, 0, 0}}));
  EXPECT_EQ(initial_ideal(I({"x + y"}), MonomialOrder::lex()).generators(),
            (std::vector<Monomial>{Monomial{1, 0, 0}}));
}

TEST(DivideExact, Basics) {
  EXPECT_EQ(divide_exact(P("x^2 - y^2"), P("x + y")), P("x - y"));
  EXPECT_EQ(divide_exact(P("x^2 + y"), P("x")), std::nullopt);
}

TEST(IdealCache, TruncatedBasisCoversLowerDegrees) {
  const auto a = I({"x^2 - y*z", "x*y - z^2", "y^3 - x*z^2"});
  EXPECT_TRUE(contains(a, P("x^2*y - y^2*z")));
  EXPECT_EQ(a.groebner_basis_upto(2).truncated_at(), 3);
  EXPECT_TRUE(contains(a, P("y^3*x - x^2*z^2")));
}
