#include <gtest/gtest.h>

#include "support.hpp"
#include "testkit.hpp"

namespace vstab {
namespace {

using test::addr;
using test::clopen;
using test::pt;

const Space v21{2, 1};
const Space v31{3, 1};

// Checks that g maps E bijectively onto E' by sampling points.
void expect_bijection(const PartialMap& g, const ClopenSet& e, const ClopenSet& e_prime,
                      std::mt19937_64& rng) {
  EXPECT_EQ(g.domain(), e);
  EXPECT_EQ(g.range(), e_prime);
  const PartialMap back = invert(g);
  for (int k = 0; k < 50; ++k) {
    const RationalPoint p = testkit::random_point(e.space(), rng);
    if (!e.contains(p)) continue;
    const RationalPoint q = evaluate(g, p);
    EXPECT_TRUE(e_prime.contains(q));
    EXPECT_EQ(evaluate(back, q), p);
  }
}

TEST(SameTypeHomeo, Examples) {
  std::mt19937_64 rng(1);
  const ClopenSet cone = clopen(v31, "{1:2.1}");
  const PartialMap one = same_type_homeo(cone, cone);
  EXPECT_EQ(one.table().size(), 1u);
  const PartialMap m = same_type_homeo(clopen(v21, "{1:1}"), ClopenSet::whole(v21));
  expect_bijection(m, clopen(v21, "{1:1}"), ClopenSet::whole(v21), rng);
  try {
    same_type_homeo(clopen(v31, "{1:1}"), clopen(v31, "{1:1, 1:2}"));
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::no_homeomorphism);
  }
}

TEST(SameTypeHomeo, AcrossSpaces) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 50; ++trial) {
    const Space a{3, 1 + trial % 3};
    const Space b{3, 1 + (trial / 3) % 3};
    const ClopenSet e = testkit::random_clopen(a, rng);
    ClopenSet f = testkit::random_clopen(b, rng);
    if (type_of(e) != type_of(f)) {
      EXPECT_THROW(same_type_homeo(e, f), Error);
      continue;
    }
    const PartialMap h = same_type_homeo(e, f);
    EXPECT_EQ(h.domain(), e);
    EXPECT_EQ(h.range(), f);
  }
}

TEST(FixClopenIso, HomomorphismAndRoundTrip) {
  std::mt19937_64 rng(3);
  const Space space{3, 2};
  for (int trial = 0; trial < 20; ++trial) {
    const ClopenSet support = testkit::random_proper_clopen(space, rng);
    const FixClopenIso iso(support);
    EXPECT_EQ(iso.q(), type_of(support).value == 0 ? 2 : type_of(support).value);
    EXPECT_EQ(iso.apply(identity(space)), identity(iso.target_space()));
    const Element a = iso.unapply(random_element(iso.target_space(), 4, rng()));
    const Element b = iso.unapply(random_element(iso.target_space(), 4, rng()));
    EXPECT_TRUE(is_subset(complement(support), identity_locus(a)));
    EXPECT_EQ(iso.apply(compose(a, b)), compose(iso.apply(a), iso.apply(b)));
    EXPECT_EQ(iso.unapply(iso.apply(a)), a);
  }
  EXPECT_THROW(FixClopenIso(ClopenSet(space)), Error);
}

TEST(FixClopenIso, RejectsUnsupportedElements) {
  const FixClopenIso iso(clopen(v21, "{1:1}"));
  try {
    iso.apply(test::g0());
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::precondition);
  }
}

TEST(AttractingElement, Examples) {
  const RationalPoint two_bar = pt(v21, "1:(2)");
  const Element f = attracting_element(RationalSet(v21, {two_bar}), two_bar);
  EXPECT_EQ(germ_exponent(f, two_bar), 1);
  EXPECT_EQ(attracting_pair(f, two_bar), (Pair{addr(v21, "1:2"), addr(v21, "1:2.2")}));

  const RationalSet both = test::points(v21, "{1:(1), 1:(2)}");
  const Element g = attracting_element(both, pt(v21, "1:(1)"));
  EXPECT_EQ(germ_tuple(g, both), (std::vector<GermExponent>{1, 0}));
  EXPECT_EQ(germ_tuple(attracting_all(both), both), (std::vector<GermExponent>{1, 1}));
  const RationalSet single(v21, {two_bar});
  EXPECT_EQ(attracting_all(single), f);
}

TEST(AttractingElement, RandomSets) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const Space space{2 + trial % 3, 1 + trial % 2};
    const RationalSet set = testkit::random_set(space, rng, 1 + trial % 4);
    for (const RationalPoint& s : set.points()) {
      const Element f = attracting_element(set, s);
      EXPECT_TRUE(in_fix(f, set));
      EXPECT_TRUE(in_fix0(f, set.without(s)));
      EXPECT_EQ(germ_exponent(f, s), 1);
    }
    for (const GermExponent k : germ_tuple(attracting_all(set), set)) EXPECT_EQ(k, 1);
  }
}

TEST(Abelianize, Examples) {
  const RationalSet set = test::points(v31, "{1:(1), 1:2(3)}");
  EXPECT_EQ(abelianize(set, identity(v31)), (AbelImage{{0, 0}, Parity{0}}));
  EXPECT_EQ(abelianize(set, order_two_element(set)), (AbelImage{{0, 0}, Parity{1}}));
  EXPECT_TRUE(in_commutator(set, identity(v31)));
  EXPECT_FALSE(in_commutator(set, attracting_all(set)));
}

TEST(Abelianize, HomomorphismAndCommutators) {
  std::mt19937_64 rng(8);
  for (const Space space : {Space{2, 1}, Space{3, 1}, Space{3, 2}}) {
    const RationalSet set = testkit::random_set(space, rng, 2);
    const FixSampler sampler(set);
    for (int k = 0; k < 15; ++k) {
      const Element a = sampler.fix(rng, 3, 2);
      const Element b = sampler.fix(rng, 3, 2);
      EXPECT_EQ(abelianize(set, compose(a, b)), abelianize(set, a) + abelianize(set, b));
      const Element c = commutator(a, b);
      EXPECT_EQ(abelianize(set, c), (AbelImage{std::vector<GermExponent>(2, 0), Parity{0}}));
      EXPECT_TRUE(in_commutator(set, c));
    }
  }
}

TEST(OrderTwoElement, Properties) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 30; ++trial) {
    const Space space{2 + trial % 3, 1 + trial % 2};
    const RationalSet set = testkit::random_set(space, rng, 1 + trial % 3);
    const Element g = order_two_element(set);
    EXPECT_NE(g, identity(space));
    EXPECT_EQ(compose(g, g), identity(space));
    EXPECT_TRUE(in_fix0(g, set));
    EXPECT_EQ(parity(g).value, space.n % 2 == 1 ? 1 : 0);
  }
}

TEST(Neighbourhood, SeparatesPoints) {
  std::mt19937_64 rng(10);
  for (int trial = 0; trial < 30; ++trial) {
    const Space space{2, 1 + trial % 2};
    const RationalSet set = testkit::random_set(space, rng, 3);
    const ClopenSet nb = neighbourhood(set);
    EXPECT_FALSE(complement(nb).empty());
    for (const RationalPoint& s : set.points()) {
      EXPECT_TRUE(nb.contains(s));
      const ClopenSet apart = separating_neighbourhood(set, s);
      EXPECT_FALSE(apart.contains(s));
      for (const RationalPoint& t : set.points()) {
        if (t != s) EXPECT_TRUE(apart.contains(t));
      }
    }
  }
}

}  // namespace
}  // namespace vstab
