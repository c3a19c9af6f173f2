#pragma once

// Canonical text and JSON forms of every value type.
//
// Text forms:
//   Address       1:2.1        (empty word: 1:)
//   RationalPoint 1:2.1(1.2)   (empty preperiod: 1:(2))
//   ClopenSet     {1:1, 1:2.1} (empty: {})
//   RationalSet   {1:(1), 1:(2)}
//   Element       "V n r" then one "dom -> ran" line per pair, sorted
//   PartialMap    "M n q r" then pairs, domain in C_{n,q}, range in C_{n,r}
//
// Formatting always emits canonical forms. Parsers accept non-canonical
// input (unsorted tables, unmerged cones, non-minimal points) and
// canonicalize it. Syntax errors throw ParseError; well-formed text that
// violates an invariant throws ErrorCode::validation.

#include <string>
#include <string_view>
#include <vector>

#include "vstab/clopen.hpp"
#include "vstab/constructions.hpp"
#include "vstab/element.hpp"
#include "vstab/germs.hpp"
#include "vstab/words.hpp"

namespace vstab {

std::string format_address(const Address& a);
std::string format_point(const RationalPoint& p);
std::string format_word(const Word& w);
std::string format_clopen(const ClopenSet& e);
std::string format_set(const RationalSet& set);
std::string format_element(const Element& g);
std::string format_partial_map(const PartialMap& g);

Address parse_address(const Space& space, std::string_view text);
RationalPoint parse_point(const Space& space, std::string_view text);
/// Dot-separated letters; the empty string is the empty word.
Word parse_word(std::string_view text);
ClopenSet parse_clopen(const Space& space, std::string_view text);
RationalSet parse_set(const Space& space, std::string_view text);
Element parse_element(std::string_view text);
PartialMap parse_partial_map(std::string_view text);
/// "n,r"
Space parse_space(std::string_view text);

inline constexpr int kSchemaVersion = 1;

/// {"n": .., "r": .., "pairs": [[dom, ran], ...]}
std::string element_to_json(const Element& g);
Element element_from_json(std::string_view text);
/// {"n": .., "q": .., "r": .., "pairs": [...]}
std::string partial_map_to_json(const PartialMap& g);
PartialMap partial_map_from_json(std::string_view text);

/// Bundles carry "schema_version" and are re-validated on load.
std::string hnn_to_json(const HnnData& data);
HnnData hnn_from_json(std::string_view text);
std::string conjugator_to_json(const ConjugatorData& data);
ConjugatorData conjugator_from_json(std::string_view text);

}  // namespace vstab
