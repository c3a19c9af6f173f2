#pragma once

#include <string>

#include "vstab/vstab.hpp"

namespace vstab::test {

inline Address addr(const Space& space, const std::string& text) { return parse_address(space, text); }
inline RationalPoint pt(const Space& space, const std::string& text) { return parse_point(space, text); }
inline ClopenSet clopen(const Space& space, const std::string& text) { return parse_clopen(space, text); }
inline RationalSet points(const Space& space, const std::string& text) { return parse_set(space, text); }

inline Pair pair(const Space& space, const std::string& dom, const std::string& ran) {
  return Pair{addr(space, dom), addr(space, ran)};
}

// g0 = (1:1 -> 1:1.1, 1:2.1 -> 1:1.2, 1:2.2 -> 1:2) in V_{2,1}
inline Element g0() {
  const Space v21{2, 1};
  return make_element(v21, {pair(v21, "1:1", "1:1.1"), pair(v21, "1:2.1", "1:1.2"),
                            pair(v21, "1:2.2", "1:2")});
}

inline Word letters(std::initializer_list<int> w) { return Word(w); }

}  // namespace vstab::test
