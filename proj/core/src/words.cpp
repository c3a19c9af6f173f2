#include "vstab/words.hpp"

#include <algorithm>
#include <string>

#include "vstab/error.hpp"

namespace vstab {

std::string_view code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::domain: return "domain_error";
    case ErrorCode::validation: return "validation_error";
    case ErrorCode::precondition: return "precondition_error";
    case ErrorCode::no_homeomorphism: return "no_homeomorphism";
    case ErrorCode::not_isomorphic: return "not_isomorphic";
    case ErrorCode::parse: return "parse_error";
    case ErrorCode::internal: return "internal_error";
  }
  return "internal_error";
}

ParseError::ParseError(const std::string& what, std::size_t line, std::size_t column)
    : Error(ErrorCode::parse,
            "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
      line_(line),
      column_(column) {}

void check_space(const Space& space) {
  if (space.n < 2 || space.r < 1) {
    fail(ErrorCode::domain, "invalid space: need n >= 2 and r >= 1, got n=" +
                                std::to_string(space.n) + " r=" + std::to_string(space.r));
  }
}

namespace {

void check_letters(const Space& space, const Word& word) {
  for (Letter c : word) {
    if (c < 1 || c > space.n) {
      fail(ErrorCode::domain,
           "letter " + std::to_string(c) + " outside 1.." + std::to_string(space.n));
    }
  }
}

void check_root(const Space& space, int root) {
  if (root < 1 || root > space.r) {
    fail(ErrorCode::domain,
         "root " + std::to_string(root) + " outside 1.." + std::to_string(space.r));
  }
}

// Smallest d dividing |w| with w = (w[0..d))^{|w|/d}.
std::size_t primitive_length(const Word& w) {
  const std::size_t len = w.size();
  for (std::size_t d = 1; d < len; ++d) {
    if (len % d != 0) continue;
    bool periodic = true;
    for (std::size_t i = d; i < len && periodic; ++i) periodic = w[i] == w[i - d];
    if (periodic) return d;
  }
  return len;
}

}  // namespace

Address make_address(const Space& space, int root, Word word) {
  check_space(space);
  check_root(space, root);
  check_letters(space, word);
  return Address{space, root, std::move(word)};
}

Address root_address(const Space& space, int root) { return make_address(space, root, {}); }

bool is_prefix(const Address& a, const Address& b) noexcept {
  return a.space == b.space && a.root == b.root && a.word.size() <= b.word.size() &&
         std::equal(a.word.begin(), a.word.end(), b.word.begin());
}

Address child(const Address& a, Letter letter) {
  Address out = a;
  out.word.push_back(letter);
  return out;
}

std::vector<Address> children(const Address& a) {
  std::vector<Address> out;
  out.reserve(static_cast<std::size_t>(a.space.n));
  for (Letter c = 1; c <= a.space.n; ++c) out.push_back(child(a, c));
  return out;
}

Address extend(const Address& a, std::span<const Letter> suffix) {
  Address out = a;
  out.word.insert(out.word.end(), suffix.begin(), suffix.end());
  return out;
}

Word suffix_after(const Address& prefix, const Address& longer) {
  return Word(longer.word.begin() + static_cast<std::ptrdiff_t>(prefix.word.size()),
              longer.word.end());
}

Address rebase(const Address& a, const Address& from, const Address& to) {
  Address out = to;
  out.word.insert(out.word.end(), a.word.begin() + static_cast<std::ptrdiff_t>(from.word.size()),
                  a.word.end());
  return out;
}

RationalPoint canonical_point(const Space& space, int root, Word pre, Word per) {
  check_space(space);
  check_root(space, root);
  if (per.empty()) fail(ErrorCode::domain, "rational point needs a nonempty period");
  check_letters(space, pre);
  check_letters(space, per);

  per.resize(primitive_length(per));
  // Absorb trailing preperiod letters into the period by rotating it.
  while (!pre.empty() && pre.back() == per.back()) {
    std::rotate(per.rbegin(), per.rbegin() + 1, per.rend());
    pre.pop_back();
  }
  return RationalPoint{space, root, std::move(pre), std::move(per)};
}

Letter letter_at(const RationalPoint& p, std::size_t i) noexcept {
  if (i < p.pre.size()) return p.pre[i];
  return p.per[(i - p.pre.size()) % p.per.size()];
}

Word expand(const RationalPoint& p, std::size_t length) {
  Word out(length);
  for (std::size_t i = 0; i < length; ++i) out[i] = letter_at(p, i);
  return out;
}

Address prefix_address(const RationalPoint& p, std::size_t depth) {
  return Address{p.space, p.root, expand(p, depth)};
}

bool cone_contains_point(const Address& a, const RationalPoint& p) {
  if (a.space != p.space) fail(ErrorCode::domain, "cone and point live in different spaces");
  if (a.root != p.root) return false;
  for (std::size_t i = 0; i < a.word.size(); ++i) {
    if (a.word[i] != letter_at(p, i)) return false;
  }
  return true;
}

RationalPoint replace_prefix_point(const RationalPoint& p, const Address& from,
                                   const Address& to) {
  if (!cone_contains_point(from, p)) {
    fail(ErrorCode::domain, "prefix replacement applied to a point outside its cone");
  }
  if (to.space.n != from.space.n) {
    fail(ErrorCode::domain, "prefix replacement between spaces of different arity");
  }
  const std::size_t cut = from.word.size();
  Word pre = to.word;
  Word per;
  if (cut <= p.pre.size()) {
    pre.insert(pre.end(), p.pre.begin() + static_cast<std::ptrdiff_t>(cut), p.pre.end());
    per = p.per;
  } else {
    const std::size_t shift = (cut - p.pre.size()) % p.per.size();
    per = p.per;
    std::rotate(per.begin(), per.begin() + static_cast<std::ptrdiff_t>(shift), per.end());
  }
  return canonical_point(to.space, to.root, std::move(pre), std::move(per));
}

std::optional<std::size_t> common_prefix_length(const RationalPoint& p, const RationalPoint& q) {
  if (p == q) return std::nullopt;
  if (p.root != q.root) return 0;
  // Two distinct eventually periodic sequences differ before this bound.
  const std::size_t bound =
      std::max(p.pre.size(), q.pre.size()) + p.per.size() * q.per.size() + 1;
  for (std::size_t i = 0; i < bound; ++i) {
    if (letter_at(p, i) != letter_at(q, i)) return i;
  }
  ensure(false, "distinct rational points agree past the periodicity bound");
  return std::nullopt;
}

}  // namespace vstab
