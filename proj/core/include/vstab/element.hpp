#pragma once

// Thompson-like maps as prefix-replacement tables: partial homeomorphisms
// between clopen sets (possibly across root counts) and elements of V_{n,r}.
//
// Composition convention everywhere: compose(g, h) applies h first, then g.

#include <cstdint>
#include <span>
#include <vector>

#include "vstab/clopen.hpp"
#include "vstab/words.hpp"

namespace vstab {

/// One prefix replacement dom.psi -> ran.psi.
struct Pair {
  Address dom;
  Address ran;

  friend bool operator==(const Pair&, const Pair&) = default;
  friend auto operator<=>(const Pair&, const Pair&) = default;
};

/// A Thompson-like homeomorphism between clopen subsets of C_{n,q} and
/// C_{n,r}. The table is canonical: sorted by domain cone, and no sibling
/// family u.c -> v.c (c = 1..n) is left unmerged.
class PartialMap {
 public:
  /// Validates both columns (pairwise non-nested, correct spaces, equal n)
  /// and reduces the table to canonical form.
  static PartialMap make(const Space& dom_space, const Space& ran_space, std::vector<Pair> table);
  static PartialMap identity_on(const ClopenSet& e);
  static PartialMap empty(const Space& dom_space, const Space& ran_space);

  const Space& dom_space() const noexcept { return dom_space_; }
  const Space& ran_space() const noexcept { return ran_space_; }
  std::span<const Pair> table() const noexcept { return table_; }
  bool empty() const noexcept { return table_.empty(); }

  ClopenSet domain() const;
  ClopenSet range() const;

  friend bool operator==(const PartialMap&, const PartialMap&) = default;

 private:
  PartialMap(const Space& dom_space, const Space& ran_space)
      : dom_space_(dom_space), ran_space_(ran_space) {}

  Space dom_space_;
  Space ran_space_;
  std::vector<Pair> table_;
};

/// Canonical reduction of a validated, dom-sorted table.
std::vector<Pair> reduce_table(std::vector<Pair> sorted_table, int n);

/// g after h, defined on h^{-1}(domain(g)).
PartialMap compose(const PartialMap& g, const PartialMap& h);
PartialMap invert(const PartialMap& g);
/// Restriction to e intersected with the domain of g.
PartialMap restrict(const PartialMap& g, const ClopenSet& e);
/// Union of maps with pairwise disjoint domains and pairwise disjoint ranges.
PartialMap glue(std::span<const PartialMap> pieces);
/// Image of a point of the domain.
RationalPoint evaluate(const PartialMap& g, const RationalPoint& p);
/// Image of a clopen subset of the domain.
ClopenSet image_clopen(const PartialMap& g, const ClopenSet& e);

/// An element of V_{n,r}: a PartialMap whose domain and range are the whole
/// space. Canonical tables make structural equality group equality.
class Element {
 public:
  /// Checks that the map is a bijection of the whole space onto itself.
  explicit Element(PartialMap map);

  const Space& space() const noexcept { return map_.dom_space(); }
  std::span<const Pair> table() const noexcept { return map_.table(); }
  const PartialMap& map() const noexcept { return map_; }

  friend bool operator==(const Element&, const Element&) = default;

 private:
  PartialMap map_;
};

Element make_element(const Space& space, std::vector<Pair> pairs);
Element identity(const Space& space);

Element compose(const Element& g, const Element& h);
Element invert(const Element& g);
Element power(const Element& g, long long k);
/// a b a^{-1} b^{-1}
Element commutator(const Element& a, const Element& b);

RationalPoint evaluate(const Element& g, const RationalPoint& p);
ClopenSet image_clopen(const Element& g, const ClopenSet& e);
/// The largest clopen set on which g is the identity.
ClopenSet identity_locus(const Element& g);

struct Parity {
  int value = 0;  // residue mod 2

  friend bool operator==(const Parity&, const Parity&) = default;
};

inline Parity operator+(Parity a, Parity b) { return Parity{(a.value + b.value) % 2}; }

/// Sign of the leaf permutation of a complete table (dom cones in lex order
/// against ran cones in lex order). For odd n this is invariant under
/// expanding a pair into its n children; for even n it is reported as 0.
Parity table_parity(const Space& space, std::span<const Pair> table);
/// The abelianization map of V_{n,r}: trivial for even n, Z/2 for odd n.
Parity parity(const Element& g);

PartialMap restrict(const Element& g, const ClopenSet& e);
/// Glues pieces whose domains and ranges both partition the space.
Element assemble(std::span<const PartialMap> pieces);

/// Seed-deterministic random element: two random complete prefix codes with
/// the same number of leaves (between 1 and depth_budget carets each) paired
/// by a random bijection. depth_budget == 0 gives the identity.
Element random_element(const Space& space, int depth_budget, std::uint64_t seed);

}  // namespace vstab
