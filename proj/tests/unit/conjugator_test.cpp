#include <gtest/gtest.h>

#include "support.hpp"
#include "testkit.hpp"

namespace vstab {
namespace {

using test::pt;

const Space v21{2, 1};

std::vector<std::size_t> identity_phi(std::size_t m) {
  std::vector<std::size_t> phi(m);
  for (std::size_t i = 0; i < m; ++i) phi[i] = i;
  return phi;
}

TEST(Conjugator, SameSetKeepsGerms) {
  const RationalSet set = test::points(v21, "{1:(1), 1:(2)}");
  const ConjugatorData data = conjugator(set, set, identity_phi(2));
  EXPECT_EQ(conjugate(data, identity(v21)), identity(v21));
  const Element g = test::g0();
  const Element c = conjugate(data, g);
  EXPECT_TRUE(in_fix(c, set));
  EXPECT_EQ(germ_tuple(c, set), germ_tuple(g, set));
  // Near S the conjugate is f^{k_s}, like g.
  for (const RationalPoint& s : set.points()) {
    const GermExponent k = germ_exponent(g, s);
    EXPECT_TRUE(identity_locus(compose(power(data.f, -k), c)).contains(s));
  }
}

TEST(Conjugator, SizeMismatch) {
  const RationalSet one = test::points(v21, "{1:(1)}");
  const RationalSet two = test::points(v21, "{1:(1), 1:(2)}");
  try {
    conjugator(one, two, {0});
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::not_isomorphic);
  }
}

TEST(Conjugator, RejectsBadPhiAndForeignElements) {
  const RationalSet two = test::points(v21, "{1:(1), 1:(2)}");
  EXPECT_THROW(conjugator(two, two, {0, 0}), Error);
  const ConjugatorData data = conjugator(two, two, {1, 0});
  const Element swap = make_element(v21, {test::pair(v21, "1:1", "1:2"), test::pair(v21, "1:2", "1:1")});
  try {
    conjugate(data, swap);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::precondition);
  }
}

TEST(Conjugate, HomomorphismAcrossSpaces) {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 6; ++trial) {
    const int n = 2 + trial % 2;
    const Space a{n, 1 + trial % 2};
    const Space b{n, 1 + (trial / 2) % 3};
    const std::size_t m = 1 + trial % 3;
    const RationalSet set = testkit::random_set(a, rng, m);
    const RationalSet set_prime = testkit::random_set(b, rng, m);
    std::vector<std::size_t> phi = identity_phi(m);
    std::shuffle(phi.begin(), phi.end(), rng);
    const ConjugatorData data = conjugator(set, set_prime, phi);
    const FixSampler sampler(set);
    for (int k = 0; k < 5; ++k) {
      const Element g = sampler.fix(rng, 3, 2);
      const Element h = sampler.fix(rng, 3, 2);
      const Element cg = conjugate(data, g);
      const Element ch = conjugate(data, h);
      EXPECT_EQ(conjugate(data, compose(g, h)), compose(cg, ch));
      EXPECT_TRUE(in_fix(cg, set_prime));
      const auto germs = germ_tuple(g, set);
      const auto germs_prime = germ_tuple(cg, set_prime);
      for (std::size_t i = 0; i < m; ++i) EXPECT_EQ(germs_prime[phi[i]], germs[i]);
      const Element g0 = sampler.fix0(rng, 3);
      EXPECT_TRUE(in_fix0(conjugate(data, g0), set_prime));
    }
    const Element cf = conjugate(data, data.f);
    const ClopenSet outside = complement(data.e_prime);
    EXPECT_EQ(restrict(cf, outside), restrict(data.f_prime, outside));
  }
}

}  // namespace
}  // namespace vstab
