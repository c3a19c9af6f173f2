#include "vstab/germs.hpp"

#include <algorithm>
#include <string>

#include "vstab/error.hpp"
#include "vstab/io.hpp"

namespace vstab {

RationalSet::RationalSet(const Space& space, std::vector<RationalPoint> points)
    : space_(space), points_(std::move(points)) {
  check_space(space);
  for (const RationalPoint& p : points_) {
    if (p.space != space) fail(ErrorCode::domain, "point " + format_point(p) + " in wrong space");
  }
  std::sort(points_.begin(), points_.end());
  auto dup = std::adjacent_find(points_.begin(), points_.end());
  if (dup != points_.end()) {
    fail(ErrorCode::domain, "duplicate point " + format_point(*dup) + " in rational set");
  }
}

bool RationalSet::contains(const RationalPoint& p) const {
  return std::binary_search(points_.begin(), points_.end(), p);
}

std::size_t RationalSet::index_of(const RationalPoint& p) const {
  auto it = std::lower_bound(points_.begin(), points_.end(), p);
  if (it == points_.end() || *it != p) {
    fail(ErrorCode::domain, "point " + format_point(p) + " is not in the set");
  }
  return static_cast<std::size_t>(it - points_.begin());
}

RationalSet RationalSet::without(const RationalPoint& p) const {
  std::vector<RationalPoint> rest;
  for (const RationalPoint& q : points_) {
    if (q != p) rest.push_back(q);
  }
  return RationalSet(space_, std::move(rest));
}

namespace {

const Pair& pair_containing(const Element& g, const RationalPoint& s) {
  for (const Pair& p : g.table()) {
    if (cone_contains_point(p.dom, s)) return p;
  }
  ensure(false, "complete table misses a point");
  return g.table().front();
}

}  // namespace

bool fixes(const Element& g, const RationalPoint& s) { return evaluate(g, s) == s; }

GermExponent germ_exponent(const Element& g, const RationalPoint& s) {
  if (s.space != g.space()) fail(ErrorCode::domain, "point and element in different spaces");
  const Pair& p = pair_containing(g, s);
  if (replace_prefix_point(s, p.dom, p.ran) != s) {
    fail(ErrorCode::precondition, "element does not fix " + format_point(s));
  }
  // Both p.dom and p.ran are prefixes of s; their length gap is a period of
  // the tail, hence a multiple of the primitive period.
  const auto gap = static_cast<std::int64_t>(p.ran.depth()) - static_cast<std::int64_t>(p.dom.depth());
  const auto period = static_cast<std::int64_t>(s.per.size());
  ensure(gap % period == 0, "germ length gap not divisible by the period");
  return gap / period;
}

std::vector<GermExponent> germ_tuple(const Element& g, const RationalSet& set) {
  std::vector<GermExponent> out;
  out.reserve(set.size());
  for (const RationalPoint& s : set.points()) out.push_back(germ_exponent(g, s));
  return out;
}

bool in_fix(const Element& g, const RationalSet& set) {
  if (set.space() != g.space()) fail(ErrorCode::domain, "set and element in different spaces");
  return std::all_of(set.points().begin(), set.points().end(),
                     [&](const RationalPoint& s) { return fixes(g, s); });
}

bool in_fix0(const Element& g, const RationalSet& set) {
  if (!in_fix(g, set)) return false;
  const ClopenSet locus = identity_locus(g);
  bool by_germs = true;
  bool by_locus = true;
  for (const RationalPoint& s : set.points()) {
    by_germs = by_germs && germ_exponent(g, s) == 0;
    by_locus = by_locus && locus.contains(s);
  }
  ensure(by_germs == by_locus, "zero germs disagree with the identity locus");
  return by_germs;
}

}  // namespace vstab
