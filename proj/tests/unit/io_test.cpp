#include <gtest/gtest.h>

#include "support.hpp"
#include "testkit.hpp"

namespace vstab {
namespace {

using test::pt;

const Space v21{2, 1};

TEST(TextFormat, Examples) {
  EXPECT_EQ(format_element(identity(v21)), "V 2 1\n1: -> 1:");
  EXPECT_EQ(format_element(test::g0()), "V 2 1\n1:1 -> 1:1.1\n1:2.1 -> 1:1.2\n1:2.2 -> 1:2");
  EXPECT_EQ(format_point(pt(Space{2, 1}, "1:2.1(1.2)")), "1:2.1(1.2)");
  EXPECT_EQ(format_point(canonical_point(v21, 1, {}, {2})), "1:(2)");
  EXPECT_EQ(format_address(root_address(v21, 1)), "1:");
  EXPECT_EQ(format_clopen(ClopenSet(v21)), "{}");
  EXPECT_EQ(format_clopen(test::clopen(v21, "{1:2.1, 1:1}")), "{1:1, 1:2.1}");
  EXPECT_EQ(format_set(test::points(v21, "{1:(2), 1:(1)}")), "{1:(1), 1:(2)}");
}

TEST(ParseElement, AcceptsRawTables) {
  EXPECT_EQ(parse_element("V 2 1\n1:2 -> 1:2\n1:1 -> 1:1\n"), identity(v21));
  EXPECT_EQ(parse_element("  V 2 1\n  1:   ->   1:  \n"), identity(v21));
}

TEST(ParseElement, Errors) {
  try {
    parse_element("V 2 1\n1:1 -> 1:1");
    ADD_FAILURE();
  } catch (const ParseError&) {
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::validation);
  }
  try {
    parse_element("V 2 1\n1:1 => 1:1");
    ADD_FAILURE();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.code(), ErrorCode::parse);
    EXPECT_EQ(e.line(), 2u);
    EXPECT_EQ(e.column(), 5u);
  }
  try {
    parse_element("V 2 1\n1:3 -> 1:");
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::validation);
  }
  EXPECT_THROW(parse_element(""), ParseError);
  EXPECT_THROW(parse_element("V 2"), ParseError);
  EXPECT_THROW(parse_point(v21, "1:1()"), ParseError);
  EXPECT_THROW(parse_clopen(v21, "{1:1,"), ParseError);
  EXPECT_THROW(parse_space("2;1"), ParseError);
}

TEST(RoundTrip, RandomValues) {
  std::mt19937_64 rng(42);
  const Space spaces[] = {{2, 1}, {2, 3}, {3, 1}, {3, 2}, {4, 2}};
  for (int trial = 0; trial < 200; ++trial) {
    const Space space = testkit::random_space(rng, spaces);
    const Element g = random_element(space, 6, rng());
    EXPECT_EQ(parse_element(format_element(g)), g);
    EXPECT_EQ(element_from_json(element_to_json(g)), g);
    const RationalPoint p = testkit::random_point(space, rng);
    EXPECT_EQ(parse_point(space, format_point(p)), p);
    const ClopenSet e = testkit::random_clopen(space, rng, 5, 4, true);
    EXPECT_EQ(parse_clopen(space, format_clopen(e)), e);
    const Address a = testkit::random_address(space, rng, 5);
    EXPECT_EQ(parse_address(space, format_address(a)), a);
    const RationalSet set = testkit::random_set(space, rng, 1 + trial % 3);
    EXPECT_EQ(parse_set(space, format_set(set)), set);
    if (!e.empty()) {
      const Space target{space.n, 1 + trial % 3};
      ClopenSet f = ClopenSet::whole(target);
      if (type_of(f) == type_of(e)) {
        const PartialMap m = same_type_homeo(e, f);
        EXPECT_EQ(parse_partial_map(format_partial_map(m)), m);
        EXPECT_EQ(partial_map_from_json(partial_map_to_json(m)), m);
      }
    }
  }
}

TEST(Bundles, HnnRoundTrip) {
  const RationalSet set = test::points(v21, "{1:(1), 1:(2)}");
  const HnnData data = hnn_data(set, pt(v21, "1:(2)"), 1);
  const std::string text = hnn_to_json(data);
  EXPECT_NE(text.find("\"schema_version\":1"), std::string::npos);
  const HnnData back = hnn_from_json(text);
  EXPECT_EQ(hnn_to_json(back), text);
  EXPECT_EQ(back.f, data.f);
  EXPECT_EQ(back.trap, data.trap);
}

TEST(Bundles, ConjugatorRoundTrip) {
  const RationalSet set = test::points(v21, "{1:(1), 1:(2)}");
  const RationalSet set_prime = test::points(Space{2, 3}, "{2:(1.2), 3:1(2)}");
  const ConjugatorData data = conjugator(set, set_prime, {1, 0});
  const std::string text = conjugator_to_json(data);
  const ConjugatorData back = conjugator_from_json(text);
  EXPECT_EQ(conjugator_to_json(back), text);
  EXPECT_EQ(back.h1, data.h1);
}

TEST(Bundles, Errors) {
  EXPECT_THROW(hnn_from_json("{\"schema_version\": 1"), ParseError);
  try {
    hnn_from_json("{\"schema_version\": 2, \"kind\": \"hnn\"}");
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::validation);
  }
  try {
    element_from_json("{\"n\": 2}");
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::parse);
  }
}

}  // namespace
}  // namespace vstab
