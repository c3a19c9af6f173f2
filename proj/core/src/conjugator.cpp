#include <algorithm>
#include <numeric>
#include <string>

#include "vstab/constructions.hpp"
#include "vstab/error.hpp"
#include "vstab/io.hpp"

namespace vstab {

namespace {

struct AttractingSide {
  Element f;
  std::vector<Address> cones;
  ClopenSet e;
};

// f attracting at every point of S, the cone around each point on which f is
// the attracting prefix replacement, and E = the complement of those cones.
AttractingSide attracting_side(const RationalSet& set) {
  Element f = attracting_all(set);
  std::vector<Address> cones;
  for (const RationalPoint& s : set.points()) cones.push_back(attracting_pair(f, s).dom);
  for (std::size_t a = 0; a < cones.size(); ++a) {
    for (std::size_t b = a + 1; b < cones.size(); ++b) {
      ensure(!nested(cones[a], cones[b]), "attracting cones of distinct points overlap");
    }
  }
  ClopenSet e = complement(normalize(set.space(), cones));
  ensure(!e.empty(), "complement of the attracting cones is empty");
  return AttractingSide{std::move(f), std::move(cones), std::move(e)};
}

std::vector<Address> cones_at_depth(const Space& space, std::size_t depth) {
  std::vector<Address> level;
  for (int root = 1; root <= space.r; ++root) level.push_back(root_address(space, root));
  for (std::size_t d = 0; d < depth; ++d) {
    std::vector<Address> next;
    for (const Address& a : level) {
      auto kids = children(a);
      next.insert(next.end(), kids.begin(), kids.end());
    }
    level = std::move(next);
  }
  return level;
}

// Every cone of the given depth avoiding S lies in some f^k(E), k <= cap.
void check_exhaustion(const Element& f, const ClopenSet& e, const RationalSet& set,
                      int depth, int cap) {
  std::vector<Address> pending;
  for (Address& a : cones_at_depth(set.space(), static_cast<std::size_t>(depth))) {
    const bool avoids = std::none_of(set.points().begin(), set.points().end(),
                                     [&](const RationalPoint& s) { return cone_contains_point(a, s); });
    if (avoids) pending.push_back(std::move(a));
  }
  ClopenSet grown = e;
  for (int k = 0; k <= cap && !pending.empty(); ++k) {
    std::erase_if(pending, [&](const Address& a) { return grown.contains(a); });
    grown = image_clopen(f, grown);
  }
  ensure(pending.empty(), "iterates f^k(E) do not exhaust the complement of S");
}

}  // namespace

ConjugatorData conjugator(const RationalSet& set, const RationalSet& set_prime,
                          std::vector<std::size_t> phi, ConjugatorOptions options) {
  if (set.size() != set_prime.size()) {
    fail(ErrorCode::not_isomorphic, "Fix(S) and Fix(S') are not isomorphic: |S| = " +
                                        std::to_string(set.size()) + " but |S'| = " +
                                        std::to_string(set_prime.size()));
  }
  if (set.empty()) fail(ErrorCode::domain, "conjugator needs nonempty sets");
  if (set.space().n != set_prime.space().n) {
    fail(ErrorCode::domain, "conjugator between spaces of different arity");
  }
  {
    std::vector<std::size_t> sorted = phi;
    std::sort(sorted.begin(), sorted.end());
    std::vector<std::size_t> expected(set.size());
    std::iota(expected.begin(), expected.end(), 0);
    if (sorted != expected) fail(ErrorCode::domain, "phi is not a bijection S -> S'");
  }

  AttractingSide a = attracting_side(set);
  AttractingSide b = attracting_side(set_prime);

  // Enlarge E' inside f'(E') until the types agree.
  const Space& space_prime = set_prime.space();
  const int modulus = std::max(1, space_prime.n - 1);
  const int missing = ((type_of(a.e).value - type_of(b.e).value) % modulus + modulus) % modulus;
  if (missing > 0) {
    const ClopenSet first_layer = subtract(image_clopen(b.f, b.e), b.e);
    ensure(first_layer.size() >= static_cast<std::size_t>(missing), "first layer too small");
    std::vector<Address> extra(first_layer.cones().begin(),
                               first_layer.cones().begin() + missing);
    b.e = unite(b.e, normalize(space_prime, std::move(extra)));
  }
  ensure(type_of(a.e) == type_of(b.e), "type(E) != type(E') after enlarging");

  PartialMap h0 = same_type_homeo(a.e, b.e);

  const ClopenSet layer = subtract(image_clopen(a.f, a.e), a.e);
  const ClopenSet layer_prime = subtract(image_clopen(b.f, b.e), b.e);
  std::vector<PartialMap> pieces;
  ClopenSet covered(set.space());
  ClopenSet covered_prime(space_prime);
  for (std::size_t i = 0; i < set.size(); ++i) {
    const ClopenSet part = intersect(layer, ClopenSet::cone(a.cones[i]));
    const ClopenSet part_prime = intersect(layer_prime, ClopenSet::cone(b.cones[phi[i]]));
    pieces.push_back(same_type_homeo(part, part_prime));
    covered = unite(covered, part);
    covered_prime = unite(covered_prime, part_prime);
  }
  ensure(covered == layer && covered_prime == layer_prime, "first layers not split by points");
  PartialMap h1 = glue(pieces);

  for (const auto* side : {&a, &b}) {
    const ClopenSet grown = image_clopen(side->f, side->e);
    ensure(is_subset(side->e, grown) && grown != side->e, "E is not strictly inside f(E)");
  }
  check_exhaustion(a.f, a.e, set, options.exhaust_depth, options.layer_cap);
  check_exhaustion(b.f, b.e, set_prime, options.exhaust_depth, options.layer_cap);

  return ConjugatorData{set,         set_prime,          std::move(phi),
                        std::move(a.f), std::move(a.cones), std::move(a.e),
                        std::move(b.f), std::move(b.cones), std::move(b.e),
                        std::move(h0),  std::move(h1),      options};
}

Element conjugate(const ConjugatorData& data, const Element& g) {
  if (g.space() != data.set.space()) fail(ErrorCode::domain, "element in the wrong space");
  if (!in_fix(g, data.set)) fail(ErrorCode::precondition, "element does not fix S");
  const std::vector<GermExponent> germs = germ_tuple(g, data.set);
  const int cap = data.options.layer_cap;

  // Near s, g agrees with f^{k_s} on this clopen set.
  std::vector<ClopenSet> agree;
  GermExponent largest = 0;
  for (std::size_t i = 0; i < germs.size(); ++i) {
    agree.push_back(identity_locus(compose(power(data.f, -germs[i]), g)));
    largest = std::max(largest, germs[i] < 0 ? -germs[i] : germs[i]);
  }

  // Layers: grown[k] = f^k(E), and piece k maps E_k onto E'_k.
  const Element f_inv = invert(data.f);
  std::vector<ClopenSet> grown{data.e};
  std::vector<PartialMap> pieces{data.h0};
  const auto extend_layers = [&](std::size_t upto) {
    while (grown.size() <= upto) {
      if (grown.size() > static_cast<std::size_t>(cap)) {
        fail(ErrorCode::internal, "conjugate exceeded the layer cap of " + std::to_string(cap));
      }
      ClopenSet next = image_clopen(data.f, grown.back());
      const ClopenSet layer = subtract(next, grown.back());
      if (pieces.size() == 1) {
        pieces.push_back(data.h1);
      } else {
        pieces.push_back(compose(data.f_prime.map(),
                                 compose(pieces.back(), restrict(f_inv, layer))));
      }
      grown.push_back(std::move(next));
    }
  };

  // M: past the germ shift, and deep enough that g = f^{k_s} outside f^M(E).
  std::size_t m = static_cast<std::size_t>(largest) + 1;
  for (;; ++m) {
    extend_layers(m);
    const ClopenSet outside = complement(grown[m]);
    bool deep_enough = true;
    for (std::size_t i = 0; i < germs.size() && deep_enough; ++i) {
      deep_enough = is_subset(intersect(outside, ClopenSet::cone(data.cones[i])), agree[i]);
    }
    if (deep_enough) break;
  }
  // N: f^N(E) contains g(f^M(E)).
  const ClopenSet moved = image_clopen(g, grown[m]);
  std::size_t n = m;
  for (; (extend_layers(n), !is_subset(moved, grown[n])); ++n) {
  }

  const PartialMap h_n = glue(std::span<const PartialMap>(pieces.data(), n + 1));
  const PartialMap h_m = glue(std::span<const PartialMap>(pieces.data(), m + 1));
  std::vector<PartialMap> result{compose(h_n, compose(g.map(), invert(h_m)))};

  // Near phi(s) the conjugate is f'^{k_s}.
  const ClopenSet near = complement(h_m.range());
  ClopenSet near_covered(data.set_prime.space());
  for (std::size_t i = 0; i < germs.size(); ++i) {
    const ClopenSet part = intersect(near, ClopenSet::cone(data.cones_prime[data.phi[i]]));
    result.push_back(restrict(power(data.f_prime, germs[i]), part));
    near_covered = unite(near_covered, part);
  }
  ensure(near_covered == near, "neighbourhood of S' not split by points");

  Element out = assemble(result);
  for (std::size_t i = 0; i < germs.size(); ++i) {
    const RationalPoint& target = data.set_prime.points()[data.phi[i]];
    ensure(fixes(out, target), "conjugate moves a point of S'");
    ensure(germ_exponent(out, target) == germs[i], "conjugate changed a germ");
  }
  return out;
}

}  // namespace vstab
