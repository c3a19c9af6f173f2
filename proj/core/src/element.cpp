#include "vstab/element.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "vstab/error.hpp"
#include "vstab/io.hpp"

namespace vstab {

namespace {

using detail::extensions_of;
using detail::find_prefix_cone;

// True iff addrs[first..first+n) is u.1, ..., u.n for a common u.
template <class Get>
bool is_family(std::span<const Pair> pairs, std::size_t first, int n, Get get) {
  const Address& last = get(pairs[first + static_cast<std::size_t>(n) - 1]);
  if (last.word.empty()) return false;
  for (int c = 1; c <= n; ++c) {
    const Address& a = get(pairs[first + static_cast<std::size_t>(c - 1)]);
    if (a.root != last.root || a.word.size() != last.word.size() || a.word.back() != c ||
        !std::equal(a.word.begin(), a.word.end() - 1, last.word.begin())) {
      return false;
    }
  }
  return true;
}

std::vector<Address> doms_of(std::span<const Pair> table) {
  std::vector<Address> out;
  out.reserve(table.size());
  for (const Pair& p : table) out.push_back(p.dom);
  return out;
}

void check_non_nested(std::vector<Address> addrs, const char* side) {
  std::sort(addrs.begin(), addrs.end());
  for (std::size_t i = 1; i < addrs.size(); ++i) {
    if (is_prefix(addrs[i - 1], addrs[i])) {
      fail(ErrorCode::validation, std::string(side) + " cones overlap at " +
                                      format_address(addrs[i]) + " (inside " +
                                      format_address(addrs[i - 1]) + ")");
    }
  }
}

}  // namespace

std::vector<Pair> reduce_table(std::vector<Pair> sorted_table, int n) {
  std::vector<Pair> stack;
  stack.reserve(sorted_table.size());
  const std::size_t k = static_cast<std::size_t>(n);
  for (Pair& p : sorted_table) {
    stack.push_back(std::move(p));
    while (stack.size() >= k) {
      const std::size_t first = stack.size() - k;
      std::span<const Pair> view(stack);
      if (!is_family(view, first, n, [](const Pair& q) -> const Address& { return q.dom; }) ||
          !is_family(view, first, n, [](const Pair& q) -> const Address& { return q.ran; })) {
        break;
      }
      Pair parent = stack.back();
      parent.dom.word.pop_back();
      parent.ran.word.pop_back();
      stack.resize(first);
      stack.push_back(std::move(parent));
    }
  }
  return stack;
}

PartialMap PartialMap::make(const Space& dom_space, const Space& ran_space,
                            std::vector<Pair> table) {
  check_space(dom_space);
  check_space(ran_space);
  if (dom_space.n != ran_space.n) {
    fail(ErrorCode::domain, "partial map between spaces of different arity");
  }
  std::vector<Address> rans;
  rans.reserve(table.size());
  for (const Pair& p : table) {
    if (p.dom.space != dom_space || p.ran.space != ran_space) {
      fail(ErrorCode::validation, "pair " + format_address(p.dom) + " -> " +
                                      format_address(p.ran) + " uses the wrong space");
    }
    rans.push_back(p.ran);
  }
  std::sort(table.begin(), table.end());
  check_non_nested(doms_of(table), "domain");
  check_non_nested(std::move(rans), "range");

  PartialMap out(dom_space, ran_space);
  out.table_ = reduce_table(std::move(table), dom_space.n);
  return out;
}

PartialMap PartialMap::identity_on(const ClopenSet& e) {
  PartialMap out(e.space(), e.space());
  for (const Address& a : e.cones()) out.table_.push_back({a, a});
  return out;
}

PartialMap PartialMap::empty(const Space& dom_space, const Space& ran_space) {
  check_space(dom_space);
  check_space(ran_space);
  return PartialMap(dom_space, ran_space);
}

ClopenSet PartialMap::domain() const { return normalize(dom_space_, doms_of(table_)); }

ClopenSet PartialMap::range() const {
  std::vector<Address> rans;
  rans.reserve(table_.size());
  for (const Pair& p : table_) rans.push_back(p.ran);
  return normalize(ran_space_, std::move(rans));
}

PartialMap compose(const PartialMap& g, const PartialMap& h) {
  if (h.ran_space() != g.dom_space()) {
    fail(ErrorCode::domain, "composition of maps whose spaces do not match");
  }
  const std::vector<Address> gdoms = doms_of(g.table());
  std::vector<Pair> out;
  out.reserve(h.table().size());
  for (const Pair& hp : h.table()) {
    if (const Address* a = find_prefix_cone(gdoms, hp.ran)) {
      const Pair& gp = g.table()[static_cast<std::size_t>(a - gdoms.data())];
      out.push_back({hp.dom, rebase(hp.ran, gp.dom, gp.ran)});
      continue;
    }
    for (const Address& a : extensions_of(gdoms, hp.ran)) {
      const Pair& gp = g.table()[static_cast<std::size_t>(&a - gdoms.data())];
      out.push_back({rebase(gp.dom, hp.ran, hp.dom), gp.ran});
    }
  }
  return PartialMap::make(h.dom_space(), g.ran_space(), std::move(out));
}

PartialMap invert(const PartialMap& g) {
  std::vector<Pair> out;
  out.reserve(g.table().size());
  for (const Pair& p : g.table()) out.push_back({p.ran, p.dom});
  return PartialMap::make(g.ran_space(), g.dom_space(), std::move(out));
}

PartialMap restrict(const PartialMap& g, const ClopenSet& e) {
  if (e.space() != g.dom_space()) fail(ErrorCode::domain, "restriction to a foreign clopen set");
  std::vector<Pair> out;
  for (const Pair& p : g.table()) {
    if (find_prefix_cone(e.cones(), p.dom)) {
      out.push_back(p);
      continue;
    }
    for (const Address& c : extensions_of(e.cones(), p.dom)) {
      out.push_back({c, rebase(c, p.dom, p.ran)});
    }
  }
  return PartialMap::make(g.dom_space(), g.ran_space(), std::move(out));
}

PartialMap glue(std::span<const PartialMap> pieces) {
  if (pieces.empty()) fail(ErrorCode::domain, "nothing to glue");
  std::vector<Pair> out;
  for (const PartialMap& piece : pieces) {
    if (piece.dom_space() != pieces.front().dom_space() ||
        piece.ran_space() != pieces.front().ran_space()) {
      fail(ErrorCode::domain, "glued pieces live in different spaces");
    }
    out.insert(out.end(), piece.table().begin(), piece.table().end());
  }
  return PartialMap::make(pieces.front().dom_space(), pieces.front().ran_space(),
                          std::move(out));
}

RationalPoint evaluate(const PartialMap& g, const RationalPoint& p) {
  for (const Pair& pair : g.table()) {
    if (cone_contains_point(pair.dom, p)) return replace_prefix_point(p, pair.dom, pair.ran);
  }
  fail(ErrorCode::domain, "point " + format_point(p) + " outside the domain of the map");
}

ClopenSet image_clopen(const PartialMap& g, const ClopenSet& e) {
  if (e.space() != g.dom_space()) fail(ErrorCode::domain, "image of a foreign clopen set");
  const std::vector<Address> gdoms = doms_of(g.table());
  std::vector<Address> out;
  std::size_t covered = 0;  // cones of e fully handled
  for (const Address& c : e.cones()) {
    if (const Address* a = find_prefix_cone(gdoms, c)) {
      const Pair& gp = g.table()[static_cast<std::size_t>(a - gdoms.data())];
      out.push_back(rebase(c, gp.dom, gp.ran));
      ++covered;
      continue;
    }
    auto inside = extensions_of(gdoms, c);
    std::vector<Address> sub(inside.begin(), inside.end());
    if (!sub.empty() && normalize(e.space(), sub).contains(c)) ++covered;
    for (const Address& a : inside) {
      out.push_back(g.table()[static_cast<std::size_t>(&a - gdoms.data())].ran);
    }
  }
  if (covered != e.size()) fail(ErrorCode::domain, "clopen set not inside the domain of the map");
  return normalize(g.ran_space(), std::move(out));
}

Element::Element(PartialMap map) : map_(std::move(map)) {
  if (map_.dom_space() != map_.ran_space()) {
    fail(ErrorCode::validation, "element must map a space to itself");
  }
  const ClopenSet whole = ClopenSet::whole(map_.dom_space());
  const ClopenSet dom = map_.domain();
  if (dom != whole) {
    fail(ErrorCode::validation,
         "incomplete domain prefix code: missing " + format_address(complement(dom).cones()[0]));
  }
  const ClopenSet ran = map_.range();
  if (ran != whole) {
    fail(ErrorCode::validation,
         "incomplete range prefix code: missing " + format_address(complement(ran).cones()[0]));
  }
}

Element make_element(const Space& space, std::vector<Pair> pairs) {
  return Element(PartialMap::make(space, space, std::move(pairs)));
}

Element identity(const Space& space) {
  return Element(PartialMap::identity_on(ClopenSet::whole(space)));
}

Element compose(const Element& g, const Element& h) {
  if (g.space() != h.space()) fail(ErrorCode::domain, "composition across different spaces");
  return Element(compose(g.map(), h.map()));
}

Element invert(const Element& g) { return Element(invert(g.map())); }

Element power(const Element& g, long long k) {
  Element base = k < 0 ? invert(g) : g;
  unsigned long long e = k < 0 ? 0ULL - static_cast<unsigned long long>(k)
                               : static_cast<unsigned long long>(k);
  Element out = identity(g.space());
  while (e > 0) {
    if (e & 1ULL) out = compose(out, base);
    e >>= 1;
    if (e > 0) base = compose(base, base);
  }
  return out;
}

Element commutator(const Element& a, const Element& b) {
  return compose(compose(a, b), compose(invert(a), invert(b)));
}

RationalPoint evaluate(const Element& g, const RationalPoint& p) {
  if (p.space != g.space()) fail(ErrorCode::domain, "point and element in different spaces");
  return evaluate(g.map(), p);
}

ClopenSet image_clopen(const Element& g, const ClopenSet& e) {
  return image_clopen(g.map(), e);
}

ClopenSet identity_locus(const Element& g) {
  std::vector<Address> fixed;
  for (const Pair& p : g.table()) {
    if (p.dom == p.ran) fixed.push_back(p.dom);
  }
  return normalize(g.space(), std::move(fixed));
}

Parity table_parity(const Space& space, std::span<const Pair> table) {
  if (space.n % 2 == 0) return Parity{0};
  std::vector<std::size_t> by_dom(table.size());
  std::iota(by_dom.begin(), by_dom.end(), 0);
  std::sort(by_dom.begin(), by_dom.end(),
            [&](std::size_t a, std::size_t b) { return table[a].dom < table[b].dom; });
  std::vector<std::size_t> by_ran = by_dom;
  std::sort(by_ran.begin(), by_ran.end(),
            [&](std::size_t a, std::size_t b) { return table[a].ran < table[b].ran; });
  std::vector<std::size_t> ran_rank(table.size());
  for (std::size_t i = 0; i < by_ran.size(); ++i) ran_rank[by_ran[i]] = i;

  // perm[i] = lex rank of the image of the i-th domain cone.
  std::vector<std::size_t> perm(table.size());
  for (std::size_t i = 0; i < by_dom.size(); ++i) perm[i] = ran_rank[by_dom[i]];

  std::vector<bool> seen(perm.size(), false);
  std::size_t cycles = 0;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    ++cycles;
    for (std::size_t j = i; !seen[j]; j = perm[j]) seen[j] = true;
  }
  return Parity{static_cast<int>((perm.size() - cycles) % 2)};
}

Parity parity(const Element& g) { return table_parity(g.space(), g.table()); }

PartialMap restrict(const Element& g, const ClopenSet& e) { return restrict(g.map(), e); }

Element assemble(std::span<const PartialMap> pieces) { return Element(glue(pieces)); }

}  // namespace vstab
