#pragma once

// Seed-deterministic generators and brute-force oracles for the test
// suites. The oracles never call evaluate, compose or canonical-form
// equality: they push finite letter sequences through raw tables.

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "vstab/vstab.hpp"

namespace vstab::testkit {

struct Oracle {
  int sample_points = 32;          // random points tried after the directed probes
  std::size_t expansion_depth = 48;  // raised per comparison to 2 x (address + period)
  std::uint64_t seed = 1;
};

/// root followed by letters
using Sequence = std::vector<int>;

Sequence expand_sequence(const RationalPoint& p, std::size_t letters);
/// Applies the unique matching prefix replacement; nullopt when no domain
/// cone matches the known letters.
std::optional<Sequence> apply_table(std::span<const Pair> table, const Sequence& seq);

struct Verdict {
  bool equal = true;
  std::optional<RationalPoint> witness;
};

/// Compares g and h on the probe points a.1-bar and a.2-bar for every domain
/// cone a of either table, then on random rational points.
Verdict pointwise_equal(const Element& g, const Element& h, const Oracle& oracle = {});

/// Compares the products (right factor acts first) of two factor lists on
/// random points and on the domain probes of every factor.
Verdict products_agree(std::span<const Element> lhs, std::span<const Element> rhs,
                       const Oracle& oracle = {});

/// The unique k, |k| <= bound, with a^{-k} g the identity near s, where a is
/// the attracting element of {s}. Throws if none exists within the bound.
GermExponent germ_by_iteration(const Element& g, const RationalPoint& s, int bound = 64);

// Generators.
Space random_space(std::mt19937_64& rng, std::span<const Space> choices);
Address random_address(const Space& space, std::mt19937_64& rng, int max_depth);
RationalPoint random_point(const Space& space, std::mt19937_64& rng, int max_pre = 4,
                           int max_per = 3);
/// Nonempty unless allow_empty.
ClopenSet random_clopen(const Space& space, std::mt19937_64& rng, int max_cones = 5,
                        int max_depth = 4, bool allow_empty = false);
/// A proper nonempty clopen set.
ClopenSet random_proper_clopen(const Space& space, std::mt19937_64& rng);
/// Raw disjoint cone list covering E, obtained by splitting random cones.
std::vector<Address> random_subdivision(const ClopenSet& e, std::mt19937_64& rng, int splits);
RationalSet random_set(const Space& space, std::mt19937_64& rng, std::size_t size);
/// Expands random pairs of the table into their n children pairs.
std::vector<Pair> random_expansion(std::span<const Pair> table, int n, std::mt19937_64& rng,
                                   int expansions);
/// An element of Fix(S) with germ exponents bounded by max_exponent.
Element random_fix(const FixSampler& sampler, std::mt19937_64& rng, int depth = 3,
                   int max_exponent = 2);

}  // namespace vstab::testkit
