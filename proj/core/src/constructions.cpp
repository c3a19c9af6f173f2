#include "vstab/constructions.hpp"

#include <algorithm>
#include <string>

#include "vstab/error.hpp"
#include "vstab/io.hpp"

namespace vstab {

PartialMap same_type_homeo(const ClopenSet& e, const ClopenSet& e_prime) {
  if (e.space().n != e_prime.space().n) {
    fail(ErrorCode::domain, "clopen sets in spaces of different arity");
  }
  if (e.empty() || e_prime.empty()) {
    fail(ErrorCode::domain, "same-type homeomorphism needs nonempty clopen sets");
  }
  if (type_of(e) != type_of(e_prime)) {
    fail(ErrorCode::no_homeomorphism,
         "no Thompson-like homeomorphism exists: types " + std::to_string(type_of(e).value) +
             " and " + std::to_string(type_of(e_prime).value) + " differ");
  }
  // Equal types make the larger cone count satisfy both congruences.
  const std::size_t m = std::max(e.size(), e_prime.size());
  const std::vector<Address> from = split_into(e, m);
  const std::vector<Address> to = split_into(e_prime, m);
  std::vector<Pair> pairs;
  pairs.reserve(m);
  for (std::size_t i = 0; i < m; ++i) pairs.push_back({from[i], to[i]});
  return PartialMap::make(e.space(), e_prime.space(), std::move(pairs));
}

namespace {

Space chart_target(const ClopenSet& support) {
  if (support.empty()) fail(ErrorCode::domain, "support of Fix(complement) must be nonempty");
  const int n = support.space().n;
  const int q = type_of(support).value == 0 ? n - 1 : type_of(support).value;
  return Space{n, q};
}

}  // namespace

FixClopenIso::FixClopenIso(const ClopenSet& support)
    : support_(support),
      target_(chart_target(support)),
      chart_(same_type_homeo(support, ClopenSet::whole(target_))) {}

Element FixClopenIso::apply(const Element& g) const {
  if (g.space() != support_.space()) fail(ErrorCode::domain, "element in the wrong space");
  if (!is_subset(complement(support_), identity_locus(g))) {
    fail(ErrorCode::precondition, "element is not supported on the clopen set");
  }
  return Element(compose(chart_, compose(restrict(g, support_), invert(chart_))));
}

Element FixClopenIso::unapply(const Element& g_prime) const {
  if (g_prime.space() != target_) fail(ErrorCode::domain, "element in the wrong space");
  const PartialMap inside = compose(invert(chart_), compose(g_prime.map(), chart_));
  const PartialMap pieces[] = {inside, PartialMap::identity_on(complement(support_))};
  return assemble(pieces);
}

ClopenSet neighbourhood(const RationalSet& set, std::size_t extra_depth) {
  std::size_t depth = 1 + extra_depth;
  const auto points = set.points();
  for (std::size_t a = 0; a < points.size(); ++a) {
    for (std::size_t b = a + 1; b < points.size(); ++b) {
      depth = std::max(depth, *common_prefix_length(points[a], points[b]) + 1 + extra_depth);
    }
  }
  for (;; ++depth) {
    std::vector<Address> cones;
    for (const RationalPoint& p : points) cones.push_back(prefix_address(p, depth));
    ClopenSet out = normalize(set.space(), std::move(cones));
    if (!complement(out).empty()) return out;
  }
}

ClopenSet separating_neighbourhood(const RationalSet& set, const RationalPoint& s) {
  if (!set.contains(s)) fail(ErrorCode::domain, "point " + format_point(s) + " is not in S");
  std::vector<Address> around;
  for (const RationalPoint& t : set.points()) {
    if (t == s) continue;
    const std::size_t depth = t.root == s.root ? *common_prefix_length(t, s) + 1 : 0;
    around.push_back(prefix_address(t, depth));
  }
  return normalize(set.space(), std::move(around));
}

Element attracting_element(const RationalSet& set, const RationalPoint& s) {
  const ClopenSet e = separating_neighbourhood(set, s);
  const Space& space = set.space();
  const RationalSet others = set.without(s);
  const ClopenSet outside_e = complement(e);

  Address alpha{space, s.root, s.pre};
  for (;;) {
    const ClopenSet cone = ClopenSet::cone(alpha);
    if (disjoint(cone, e) && !subtract(outside_e, cone).empty()) break;
    alpha = extend(alpha, s.per);
  }
  const Address alpha_beta = extend(alpha, s.per);

  const ClopenSet from_rest = complement(unite(e, ClopenSet::cone(alpha)));
  const ClopenSet to_rest = complement(unite(e, ClopenSet::cone(alpha_beta)));
  const PartialMap pieces[] = {
      PartialMap::identity_on(e),
      PartialMap::make(space, space, {Pair{alpha, alpha_beta}}),
      same_type_homeo(from_rest, to_rest),
  };
  Element f = assemble(pieces);

  ensure(in_fix0(f, others), "attracting element is not the identity near S \\ {s}");
  ensure(germ_exponent(f, s) == 1, "attracting element has germ != +1 at s");
  return f;
}

Element attracting_all(const RationalSet& set) {
  if (set.empty()) fail(ErrorCode::domain, "attracting_all needs a nonempty set");
  Element f = identity(set.space());
  for (const RationalPoint& s : set.points()) f = compose(f, attracting_element(set, s));
  for (const GermExponent k : germ_tuple(f, set)) {
    ensure(k == 1, "product of attracting elements has a germ != +1");
  }
  return f;
}

const Pair& attracting_pair(const Element& f, const RationalPoint& s) {
  if (germ_exponent(f, s) != 1) {
    fail(ErrorCode::precondition, "element is not attracting at " + format_point(s));
  }
  for (const Pair& p : f.table()) {
    if (cone_contains_point(p.dom, s)) return p;
  }
  ensure(false, "complete table misses a point");
  return f.table().front();
}

FixSampler::FixSampler(RationalSet set, std::size_t extra_depth)
    : set_(std::move(set)), iso_(complement(neighbourhood(set_, extra_depth))) {
  for (const RationalPoint& s : set_.points()) attractors_.push_back(attracting_element(set_, s));
}

Element FixSampler::fix0(std::mt19937_64& rng, int depth_budget) const {
  return iso_.unapply(random_element(iso_.target_space(), depth_budget, rng()));
}

Element FixSampler::fix(std::mt19937_64& rng, int depth_budget, int max_exponent) const {
  std::uniform_int_distribution<int> exponent(-max_exponent, max_exponent);
  Element g = fix0(rng, depth_budget);
  for (const Element& a : attractors_) g = compose(g, power(a, exponent(rng)));
  return compose(g, fix0(rng, depth_budget));
}

AbelImage operator+(const AbelImage& a, const AbelImage& b) {
  if (a.germ_part.size() != b.germ_part.size()) {
    fail(ErrorCode::domain, "abelianization images of different rank");
  }
  AbelImage out{a.germ_part, a.parity_part + b.parity_part};
  for (std::size_t i = 0; i < out.germ_part.size(); ++i) out.germ_part[i] += b.germ_part[i];
  return out;
}

AbelImage abelianize(const RationalSet& set, const Element& g) {
  for (const RationalPoint& s : set.points()) {
    if (!fixes(g, s)) fail(ErrorCode::precondition, "element does not fix " + format_point(s));
  }
  return AbelImage{germ_tuple(g, set), parity(g)};
}

bool in_commutator(const RationalSet& set, const Element& g) {
  return in_fix0(g, set) && parity(g).value == 0;
}

Element order_two_element(const RationalSet& set) {
  const Space& space = set.space();
  // Lex-first cone, at the smallest depth, containing no point of S.
  std::optional<Address> free_cone;
  for (std::size_t depth = 0; !free_cone; ++depth) {
    std::vector<Address> taken;
    for (const RationalPoint& p : set.points()) taken.push_back(prefix_address(p, depth));
    std::sort(taken.begin(), taken.end());
    Address candidate{space, 1, Word(depth, 1)};
    for (std::size_t tries = 0; tries <= taken.size(); ++tries) {
      if (!std::binary_search(taken.begin(), taken.end(), candidate)) {
        free_cone = candidate;
        break;
      }
      // Lexicographic successor among cones of this depth.
      std::size_t i = depth;
      while (i > 0 && candidate.word[i - 1] == space.n) candidate.word[--i] = 1;
      if (i > 0) {
        ++candidate.word[i - 1];
      } else if (candidate.root < space.r) {
        ++candidate.root;
      } else {
        break;
      }
    }
  }
  const Address a = child(*free_cone, 1);
  const Address b = child(*free_cone, 2);
  const PartialMap pieces[] = {
      PartialMap::make(space, space, {Pair{a, b}, Pair{b, a}}),
      PartialMap::identity_on(complement(normalize(space, {a, b}))),
  };
  Element g = assemble(pieces);
  ensure(compose(g, g) == identity(space), "swap is not an involution");
  ensure(in_fix0(g, set), "swap is not the identity near S");
  return g;
}

}  // namespace vstab
