#include "vstab/clopen.hpp"

#include <algorithm>
#include <string>

#include "vstab/error.hpp"
#include "vstab/io.hpp"

namespace vstab {

namespace detail {

// The only candidate prefix of `a` is the greatest element <= a.
const Address* find_prefix_cone(std::span<const Address> sorted, const Address& a) {
  auto it = std::upper_bound(sorted.begin(), sorted.end(), a);
  if (it == sorted.begin()) return nullptr;
  --it;
  return is_prefix(*it, a) ? &*it : nullptr;
}

// Range of elements of a sorted list that extend `a` (including a itself).
std::span<const Address> extensions_of(std::span<const Address> sorted, const Address& a) {
  auto first = std::lower_bound(sorted.begin(), sorted.end(), a);
  auto last = first;
  while (last != sorted.end() && is_prefix(a, *last)) ++last;
  return {first, last};
}

}  // namespace detail

namespace {

using detail::extensions_of;
using detail::find_prefix_cone;

bool is_last_of_family(const std::vector<Address>& stack, int n) {
  const std::size_t k = static_cast<std::size_t>(n);
  if (stack.size() < k) return false;
  const Address& last = stack.back();
  if (last.word.empty() || last.word.back() != n) return false;
  for (std::size_t i = 0; i < k; ++i) {
    const Address& sib = stack[stack.size() - k + i];
    if (sib.root != last.root || sib.word.size() != last.word.size() ||
        sib.word.back() != static_cast<Letter>(i + 1) ||
        !std::equal(sib.word.begin(), sib.word.end() - 1, last.word.begin())) {
      return false;
    }
  }
  return true;
}

}  // namespace

ClopenSet::ClopenSet(const Space& space) : space_(space) { check_space(space); }

ClopenSet ClopenSet::whole(const Space& space) {
  ClopenSet out(space);
  for (int root = 1; root <= space.r; ++root) out.cones_.push_back(root_address(space, root));
  return out;
}

ClopenSet ClopenSet::cone(const Address& a) { return normalize(a.space, {a}); }

bool ClopenSet::contains(const RationalPoint& p) const {
  if (p.space != space_) fail(ErrorCode::domain, "point and clopen set in different spaces");
  return std::any_of(cones_.begin(), cones_.end(),
                     [&](const Address& a) { return cone_contains_point(a, p); });
}

bool ClopenSet::contains(const Address& a) const {
  // Canonical form: a cone inside the set is inside one of its cones.
  return find_prefix_cone(cones_, a) != nullptr;
}

ClopenSet normalize(const Space& space, std::vector<Address> raw) {
  ClopenSet out(space);
  for (const Address& a : raw) {
    if (a.space != space) {
      fail(ErrorCode::domain, "address " + format_address(a) + " belongs to another space");
    }
  }
  std::sort(raw.begin(), raw.end());
  raw.erase(std::unique(raw.begin(), raw.end()), raw.end());

  std::vector<Address>& stack = out.cones_;
  for (Address& a : raw) {
    if (!stack.empty() && is_prefix(stack.back(), a)) continue;
    stack.push_back(std::move(a));
    while (is_last_of_family(stack, space.n)) {
      Address parent = stack.back();
      parent.word.pop_back();
      stack.resize(stack.size() - static_cast<std::size_t>(space.n));
      stack.push_back(std::move(parent));
    }
  }
  return out;
}

std::vector<Address> complement_in_cone(const Address& within, std::span<const Address> cones) {
  std::vector<Address> out;
  // Depth-first walk; `cones` is sorted and non-nested.
  struct Frame {
    Address node;
    std::span<const Address> inside;
  };
  std::vector<Frame> todo;
  if (find_prefix_cone(cones, within)) return out;
  todo.push_back({within, extensions_of(cones, within)});
  while (!todo.empty()) {
    Frame frame = std::move(todo.back());
    todo.pop_back();
    if (frame.inside.empty()) {
      out.push_back(std::move(frame.node));
      continue;
    }
    if (frame.inside.front() == frame.node) continue;
    auto kids = children(frame.node);
    for (auto it = kids.rbegin(); it != kids.rend(); ++it) {
      todo.push_back({*it, extensions_of(frame.inside, *it)});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

ClopenSet unite(const ClopenSet& e, const ClopenSet& f) {
  if (e.space() != f.space()) fail(ErrorCode::domain, "union of clopen sets in different spaces");
  std::vector<Address> raw(e.cones().begin(), e.cones().end());
  raw.insert(raw.end(), f.cones().begin(), f.cones().end());
  return normalize(e.space(), std::move(raw));
}

ClopenSet intersect(const ClopenSet& e, const ClopenSet& f) {
  if (e.space() != f.space()) {
    fail(ErrorCode::domain, "intersection of clopen sets in different spaces");
  }
  std::vector<Address> raw;
  for (const Address& a : e.cones()) {
    if (find_prefix_cone(f.cones(), a)) {
      raw.push_back(a);
      continue;
    }
    for (const Address& b : extensions_of(f.cones(), a)) raw.push_back(b);
  }
  return normalize(e.space(), std::move(raw));
}

ClopenSet complement(const ClopenSet& e) {
  std::vector<Address> raw;
  for (int root = 1; root <= e.space().r; ++root) {
    auto part = complement_in_cone(root_address(e.space(), root), e.cones());
    raw.insert(raw.end(), std::make_move_iterator(part.begin()),
               std::make_move_iterator(part.end()));
  }
  return normalize(e.space(), std::move(raw));
}

ClopenSet subtract(const ClopenSet& e, const ClopenSet& f) {
  if (e.space() != f.space()) {
    fail(ErrorCode::domain, "difference of clopen sets in different spaces");
  }
  return intersect(e, complement(f));
}

bool is_subset(const ClopenSet& e, const ClopenSet& f) {
  if (e.space() != f.space()) fail(ErrorCode::domain, "subset test across different spaces");
  return std::all_of(e.cones().begin(), e.cones().end(),
                     [&](const Address& a) { return f.contains(a); });
}

bool disjoint(const ClopenSet& e, const ClopenSet& f) { return intersect(e, f).empty(); }

TypeResidue type_residue(const Space& space, long long count) {
  const int modulus = std::max(1, space.n - 1);
  const long long value = ((count % modulus) + modulus) % modulus;
  return TypeResidue{modulus, static_cast<int>(value)};
}

TypeResidue type_of(const ClopenSet& e) {
  return type_residue(e.space(), static_cast<long long>(e.size()));
}

std::vector<Address> split_into(const ClopenSet& e, std::size_t m) {
  if (e.empty()) fail(ErrorCode::domain, "cannot split the empty clopen set");
  if (m < e.size()) {
    fail(ErrorCode::domain, "cannot split " + std::to_string(e.size()) + " cones into " +
                                std::to_string(m));
  }
  const std::size_t step = static_cast<std::size_t>(e.space().n - 1);
  if ((m - e.size()) % step != 0) {
    fail(ErrorCode::domain, "cone count " + std::to_string(m) +
                                " is not congruent to the type modulo n-1");
  }
  std::vector<Address> out(e.cones().begin(), e.cones().end());
  while (out.size() < m) {
    Address last = std::move(out.back());
    out.pop_back();
    auto kids = children(last);
    out.insert(out.end(), std::make_move_iterator(kids.begin()),
               std::make_move_iterator(kids.end()));
  }
  return out;
}

}  // namespace vstab
