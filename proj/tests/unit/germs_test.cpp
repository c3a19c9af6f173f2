#include <gtest/gtest.h>

#include "support.hpp"
#include "testkit.hpp"

namespace vstab {
namespace {

using test::g0;
using test::pair;
using test::pt;

const Space v21{2, 1};

TEST(GermExponent, Examples) {
  std::mt19937_64 rng(1);
  const RationalPoint s = testkit::random_point(Space{3, 2}, rng);
  EXPECT_EQ(germ_exponent(identity(Space{3, 2}), s), 0);
  EXPECT_EQ(germ_exponent(g0(), pt(v21, "1:(1)")), 1);
  EXPECT_EQ(germ_exponent(g0(), pt(v21, "1:(2)")), -1);
  EXPECT_THROW(germ_exponent(g0(), pt(v21, "1:(1.2)")), Error);
}

TEST(GermExponent, MinusOneMatchesInverseAttractor) {
  const RationalPoint two_bar = pt(v21, "1:(2)");
  const Element a = attracting_element(RationalSet(v21, {two_bar}), two_bar);
  EXPECT_TRUE(identity_locus(compose(a, g0())).contains(two_bar));
}

TEST(GermTuple, Examples) {
  const RationalSet set = test::points(v21, "{1:(1), 1:(2)}");
  EXPECT_EQ(germ_tuple(identity(v21), set), (std::vector<GermExponent>{0, 0}));
  EXPECT_EQ(germ_tuple(g0(), set), (std::vector<GermExponent>{1, -1}));
}

TEST(GermTuple, Additive) {
  std::mt19937_64 rng(4);
  for (const Space space : {Space{2, 1}, Space{3, 2}}) {
    for (int trial = 0; trial < 20; ++trial) {
      const RationalSet set = testkit::random_set(space, rng, 2);
      const FixSampler sampler(set);
      for (int k = 0; k < 10; ++k) {
        const Element a = sampler.fix(rng, 3, 2);
        const Element b = sampler.fix(rng, 3, 2);
        const auto ta = germ_tuple(a, set), tb = germ_tuple(b, set), tab = germ_tuple(compose(a, b), set);
        for (std::size_t i = 0; i < set.size(); ++i) EXPECT_EQ(tab[i], ta[i] + tb[i]);
        const auto inv = germ_tuple(invert(a), set);
        for (std::size_t i = 0; i < set.size(); ++i) EXPECT_EQ(inv[i], -ta[i]);
      }
    }
  }
}

TEST(InFix, Examples) {
  const RationalSet set = test::points(v21, "{1:(1), 1:(2)}");
  EXPECT_TRUE(in_fix(identity(v21), set));
  EXPECT_TRUE(in_fix0(identity(v21), set));
  EXPECT_TRUE(in_fix(g0(), set));
  EXPECT_FALSE(in_fix0(g0(), set));
  const Space v31{3, 1};
  const Element swap = make_element(v31, {pair(v31, "1:1", "1:2"), pair(v31, "1:2", "1:1"),
                                          pair(v31, "1:3", "1:3")});
  const RationalSet three = test::points(v31, "{1:(3)}");
  EXPECT_TRUE(in_fix(swap, three));
  EXPECT_TRUE(in_fix0(swap, three));
  EXPECT_FALSE(in_fix(swap, test::points(v31, "{1:(1)}")));
}

TEST(RationalSet, SortedAndDuplicateFree) {
  const RationalSet set = test::points(v21, "{1:(2), 1:(1)}");
  EXPECT_EQ(set.points()[0], pt(v21, "1:(1)"));
  EXPECT_EQ(set.index_of(pt(v21, "1:(2)")), 1u);
  EXPECT_THROW(test::points(v21, "{1:(1), 1:1(1)}"), Error);
  EXPECT_EQ(set.without(pt(v21, "1:(1)")).size(), 1u);
}

TEST(GermByIteration, DualOracle) {
  EXPECT_EQ(testkit::germ_by_iteration(identity(v21), pt(v21, "1:(1)")), 0);
  EXPECT_EQ(testkit::germ_by_iteration(g0(), pt(v21, "1:(1)")), 1);
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 40; ++trial) {
    const Space space = trial % 2 ? Space{3, 2} : Space{2, 1};
    const RationalSet set = testkit::random_set(space, rng, 1 + trial % 3);
    const FixSampler sampler(set);
    const Element g = sampler.fix(rng, 3, 3);
    for (const RationalPoint& s : set.points()) {
      EXPECT_EQ(testkit::germ_by_iteration(g, s), germ_exponent(g, s));
    }
    const RationalPoint& s = set.points()[0];
    const Element a = attracting_element(RationalSet(space, {s}), s);
    EXPECT_EQ(testkit::germ_by_iteration(power(a, 5), s), 5);
  }
}

}  // namespace
}  // namespace vstab
