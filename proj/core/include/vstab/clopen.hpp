#pragma once

// Clopen subsets of C_{n,r}, stored as canonical finite cone unions, and the
// type invariant in Z_{n-1}.

#include <cstddef>
#include <span>
#include <vector>

#include "vstab/words.hpp"

namespace vstab {

/// A finite disjoint union of cones in canonical form: pairwise non-nested,
/// no complete sibling family left unmerged, sorted. Two clopen sets are
/// equal as point sets iff they compare equal.
class ClopenSet {
 public:
  explicit ClopenSet(const Space& space);

  static ClopenSet whole(const Space& space);
  static ClopenSet cone(const Address& a);

  const Space& space() const noexcept { return space_; }
  std::span<const Address> cones() const noexcept { return cones_; }
  std::size_t size() const noexcept { return cones_.size(); }
  bool empty() const noexcept { return cones_.empty(); }

  bool contains(const RationalPoint& p) const;
  /// True iff the cone C_a lies inside this set.
  bool contains(const Address& a) const;

  friend bool operator==(const ClopenSet&, const ClopenSet&) = default;

  friend ClopenSet normalize(const Space& space, std::vector<Address> raw);

 private:
  Space space_;
  std::vector<Address> cones_;
};

/// Canonical form of the union of `raw`; nested cones are absorbed and full
/// sibling families merged until none remain.
ClopenSet normalize(const Space& space, std::vector<Address> raw);

ClopenSet unite(const ClopenSet& e, const ClopenSet& f);
ClopenSet intersect(const ClopenSet& e, const ClopenSet& f);
ClopenSet subtract(const ClopenSet& e, const ClopenSet& f);
ClopenSet complement(const ClopenSet& e);

bool is_subset(const ClopenSet& e, const ClopenSet& f);
bool disjoint(const ClopenSet& e, const ClopenSet& f);

/// Complement of the cones of `cones` inside the cone `within`, as canonical
/// cones. `cones` must be pairwise non-nested.
std::vector<Address> complement_in_cone(const Address& within, std::span<const Address> cones);

struct TypeResidue {
  int modulus = 1;  // max(1, n - 1)
  int value = 0;    // 0 <= value < modulus

  friend bool operator==(const TypeResidue&, const TypeResidue&) = default;
};

TypeResidue type_residue(const Space& space, long long count);
TypeResidue type_of(const ClopenSet& e);

/// Exactly m disjoint cones covering e, obtained by repeatedly splitting the
/// lexicographically last cone. Requires e nonempty, m >= e.size() and
/// m == type(e) mod n-1.
std::vector<Address> split_into(const ClopenSet& e, std::size_t m);

namespace detail {

// Lookups in a sorted, pairwise non-nested address list.
const Address* find_prefix_cone(std::span<const Address> sorted, const Address& a);
std::span<const Address> extensions_of(std::span<const Address> sorted, const Address& a);

}  // namespace detail

}  // namespace vstab
