#pragma once

// Germs at rational fixed points and membership in Fix(S) / Fix_0(S).
//
// The germ group at a rational point s = alpha.beta-bar is infinite cyclic,
// generated by the attracting map alpha.psi -> alpha.beta.psi. Exponents
// are reported in that basis: g agrees with the k-th power of the attracting
// map near s iff germ_exponent(g, s) == k.

#include <cstdint>
#include <span>
#include <vector>

#include "vstab/element.hpp"
#include "vstab/words.hpp"

namespace vstab {

using GermExponent = std::int64_t;

/// A finite set of rational points, kept sorted and duplicate-free.
class RationalSet {
 public:
  /// Sorts the points; throws on duplicates or foreign spaces.
  RationalSet(const Space& space, std::vector<RationalPoint> points);

  const Space& space() const noexcept { return space_; }
  std::span<const RationalPoint> points() const noexcept { return points_; }
  std::size_t size() const noexcept { return points_.size(); }
  bool empty() const noexcept { return points_.empty(); }
  bool contains(const RationalPoint& p) const;
  /// Index of p in canonical order; throws if absent.
  std::size_t index_of(const RationalPoint& p) const;
  RationalSet without(const RationalPoint& p) const;

  friend bool operator==(const RationalSet&, const RationalSet&) = default;

 private:
  Space space_;
  std::vector<RationalPoint> points_;
};

bool fixes(const Element& g, const RationalPoint& s);

/// Requires g(s) == s.
GermExponent germ_exponent(const Element& g, const RationalPoint& s);

/// Exponents at the points of S in canonical order (the map pi).
std::vector<GermExponent> germ_tuple(const Element& g, const RationalSet& set);

bool in_fix(const Element& g, const RationalSet& set);
/// Fixes S and is the identity on a neighbourhood of every point of S.
bool in_fix0(const Element& g, const RationalSet& set);

}  // namespace vstab
