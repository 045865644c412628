#include "reflendo/groups.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <random>

using namespace reflendo;

namespace {

void expect_group_axioms(const FiniteGroup& g) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<std::uint32_t> pick(0, g.size - 1);
  for (int t = 0; t < 2000; ++t) {
    const auto a = pick(rng), b = pick(rng), c = pick(rng);
    ASSERT_EQ(g.mul(g.mul(a, b), c), g.mul(a, g.mul(b, c)));
  }
  for (std::uint32_t a = 0; a < g.size; ++a) {
    ASSERT_EQ(g.mul(a, g.identity), a);
    ASSERT_EQ(g.mul(g.identity, a), a);
    ASSERT_EQ(g.mul(a, g.inverse[a]), g.identity);
  }
}

}  // namespace

TEST(GroupOrder, ClosureMatchesOrderFormula) {
  const std::vector<GroupId> ids{GroupId::A(1), GroupId::A(2), GroupId::A(3), GroupId::A(4), GroupId::C(2),
                                 GroupId::C(3), GroupId::C(4), GroupId::D(4), GroupId::D(5), GroupId::I2(2),
                                 GroupId::I2(7), GroupId::I2(12), GroupId::H3()};
  for (const auto& id : ids) {
    const auto g = build_group(id);
    EXPECT_EQ(CountInt(g.order()), order(id)) << to_spec(id);
  }
}

TEST(GroupOrder, KnownValues) {
  EXPECT_EQ(order(GroupId::H4()), 14400);
  EXPECT_EQ(order(GroupId::F4()), 1152);
  EXPECT_EQ(order(GroupId::E6()), 51840);
  EXPECT_EQ(order(GroupId::E7()), 2903040);
  EXPECT_EQ(order(GroupId::E8()), 696729600);
  EXPECT_EQ(order(GroupId::C(4)), 384);
  EXPECT_EQ(order(GroupId::D(5)), 1920);
}

TEST(CayleyTable, SatisfiesGroupAxioms) {
  for (const auto& id : {GroupId::C(3), GroupId::D(4), GroupId::I2(6), GroupId::H3()}) {
    SCOPED_TRACE(to_spec(id));
    expect_group_axioms(build_group(id));
  }
}

TEST(CayleyTable, CoxeterRelationsHoldExactly) {
  for (const auto& id : {GroupId::A(4), GroupId::C(4), GroupId::D(5), GroupId::I2(9), GroupId::H3()}) {
    const auto g = build_group(id);
    const auto p = presentation(id);
    ASSERT_EQ(g.generators.size(), p.generator_count());
    for (std::size_t i = 0; i < p.generator_count(); ++i)
      for (std::size_t j = 0; j < p.generator_count(); ++j)
        EXPECT_EQ(g.element_order[g.mul(g.generators[i], g.generators[j])], p.order(i, j))
            << to_spec(id) << " " << i << "," << j;
  }
}

TEST(CayleyTable, WordTreeReproducesEveryElement) {
  const auto g = build_group(GroupId::C(3));
  for (std::uint32_t e = 0; e < g.size; ++e) {
    if (e == g.identity) continue;
    EXPECT_EQ(g.mul(g.parent[e], g.generators[g.parent_gen[e]]), e);
  }
  EXPECT_EQ(g.eval_order.front(), g.identity);
}

TEST(CayleyTable, CanonicalIndicesFollowElementOrder) {
  const auto r = build_signed_group(GroupId::C(3));
  EXPECT_TRUE(std::is_sorted(r.elements.begin(), r.elements.end()));
  for (std::uint32_t i = 0; i < r.elements.size(); ++i) EXPECT_EQ(r.index_of(r.elements[i]), i);
  const auto again = build_signed_group(GroupId::C(3));
  EXPECT_EQ(r.group.table, again.group.table);
}

TEST(SignedPerm, ComposeIsAThenB) {
  const auto a = SignedPerm::coordinate_flip(3, 0);
  const auto b = SignedPerm::pair_reflection(3, +1, 0, 1);
  // e_0 -> -e_0 -> -e_1
  const auto ab = compose(a, b);
  EXPECT_EQ(ab.images()[0], 1);
  EXPECT_EQ(ab.flips()[0], 1);
  EXPECT_EQ(compose(ab, ab.inverse()), SignedPerm::identity(3));
  EXPECT_THROW(compose(a, SignedPerm::identity(4)), std::invalid_argument);
}

TEST(SignedPerm, RejectsMalformedInput) {
  EXPECT_THROW(SignedPerm({0, 0}, {0, 0}), std::invalid_argument);
  EXPECT_THROW(SignedPerm::make_even({0, 1}, {1, 0}), std::invalid_argument);
}

TEST(Dihedral, RelationsOfTheCoxeterGenerators) {
  const DihedralElt s(5, 0, true), rs(5, 1, true);
  auto p = compose(s, rs);
  DihedralElt acc = DihedralElt::identity(5);
  for (int i = 0; i < 5; ++i) acc = compose(acc, p);
  EXPECT_TRUE(acc.is_identity());
  EXPECT_TRUE(compose(s, s).is_identity());
}

TEST(Golden, H3HasFifteenReflectionsAmongThirtyOneInvolutions) {
  const auto g = build_group(GroupId::H3());
  EXPECT_EQ(g.order(), 120u);
  EXPECT_EQ(g.involution_count(), 31u);
}

TEST(Spec, ParseAndRender) {
  EXPECT_EQ(parse_group_spec("C:4"), GroupId::C(4));
  EXPECT_EQ(parse_group_spec("I2:6"), GroupId::I2(6));
  EXPECT_EQ(parse_group_spec("E8"), GroupId::E8());
  EXPECT_EQ(to_spec(GroupId::I2(6)), "I2:6");
  EXPECT_EQ(display_name(GroupId::C(4)), "C_4");
  for (const char* bad : {"", "C", "C:", "C:x", "C:1", "D:3", "Q:2", "I2:1", "A:0", "E9", "C:4:5"})
    EXPECT_THROW(parse_group_spec(bad), GroupSpecError) << bad;
}

TEST(Budget, RefusesTablesPastTheLimit) {
  EXPECT_THROW(build_group(GroupId::C(5)), BudgetExceeded);
  Budget tight;
  tight.max_table_entries = 100;
  EXPECT_THROW(build_group(GroupId::C(3), tight), BudgetExceeded);
  Budget few;
  few.max_elements = 10;
  EXPECT_THROW(build_group(GroupId::C(3), few), BudgetExceeded);
}

TEST(Budget, EnvironmentOverride) {
  ::setenv("REFLECT_ENDO_BUDGET", "20000000", 1);
  EXPECT_EQ(Budget::from_environment().max_table_entries, 20000000u);
  ::setenv("REFLECT_ENDO_BUDGET", "junk", 1);
  EXPECT_EQ(Budget::from_environment().max_table_entries, Budget{}.max_table_entries);
  ::unsetenv("REFLECT_ENDO_BUDGET");
}

TEST(Generators, ExceptionalWithoutConcreteModel) {
  EXPECT_THROW(coxeter_generators(GroupId::F4()), NoConcreteRepresentation);
  EXPECT_FALSE(has_concrete_representation(GroupId::E8()));
  EXPECT_TRUE(has_concrete_representation(GroupId::H3()));
}
