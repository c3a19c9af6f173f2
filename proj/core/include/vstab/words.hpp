#pragma once

// Alphabet parameters, cone addresses and rational (eventually periodic)
// points of the Cantor space C_{n,r} = {1..r} x {1..n}^omega.

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace vstab {

/// Branching arity n >= 2 and root count r >= 1.
struct Space {
  int n = 2;
  int r = 1;

  friend auto operator<=>(const Space&, const Space&) = default;
};

/// Throws ErrorCode::domain unless n >= 2 and r >= 1.
void check_space(const Space& space);

using Letter = int;
using Word = std::vector<Letter>;

/// A cone C_{root.word}. Letters are 1-based. Ordering is lexicographic by
/// (space, root, word), so a prefix sorts before all of its extensions.
struct Address {
  Space space;
  int root = 1;
  Word word;

  std::size_t depth() const noexcept { return word.size(); }

  friend bool operator==(const Address&, const Address&) = default;
  friend auto operator<=>(const Address&, const Address&) = default;
};

/// Validates root and letters against the space.
Address make_address(const Space& space, int root, Word word);
Address root_address(const Space& space, int root);

/// True iff a is a (not necessarily proper) prefix of b, i.e. C_b is a
/// subset of C_a.
bool is_prefix(const Address& a, const Address& b) noexcept;
inline bool nested(const Address& a, const Address& b) noexcept {
  return is_prefix(a, b) || is_prefix(b, a);
}

Address child(const Address& a, Letter letter);
std::vector<Address> children(const Address& a);
Address extend(const Address& a, std::span<const Letter> suffix);

/// The letters of `longer` after `prefix`; requires is_prefix(prefix, longer).
Word suffix_after(const Address& prefix, const Address& longer);

/// Rebases `a` from under `from` to under `to`: to . (a - from).
Address rebase(const Address& a, const Address& from, const Address& to);

/// An eventually periodic point root.pre.per.per... kept in canonical form:
/// `per` is primitive and `pre` is empty or ends in a letter different from
/// the last letter of `per`.
struct RationalPoint {
  Space space;
  int root = 1;
  Word pre;
  Word per;

  friend bool operator==(const RationalPoint&, const RationalPoint&) = default;
  friend auto operator<=>(const RationalPoint&, const RationalPoint&) = default;
};

RationalPoint canonical_point(const Space& space, int root, Word pre, Word per);

/// The letter at position i (0-based) of the word part of p.
Letter letter_at(const RationalPoint& p, std::size_t i) noexcept;
/// The first `length` letters of the word part of p.
Word expand(const RationalPoint& p, std::size_t length);
/// The cone of word length `depth` containing p.
Address prefix_address(const RationalPoint& p, std::size_t depth);

bool cone_contains_point(const Address& a, const RationalPoint& p);

/// Replaces the prefix `from` of p by `to`. `to` may live in a space with a
/// different root count, but the same n.
RationalPoint replace_prefix_point(const RationalPoint& p, const Address& from,
                                   const Address& to);

/// Number of common leading word letters; nullopt if p == q. Points under
/// different roots share no letters and return 0.
std::optional<std::size_t> common_prefix_length(const RationalPoint& p,
                                                const RationalPoint& q);

}  // namespace vstab
