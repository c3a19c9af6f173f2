#pragma once

// Executable witnesses for the structure theory of Fix(S) <= V_{n,r}:
// same-type homeomorphisms, attracting elements, the ascending HNN
// decomposition, abelianization, commutator membership and the conjugator
// realizing Fix(S) ~= Fix(S') for |S| = |S'|.
//
// Every existence argument involves free choices; all of them are made
// deterministically (lex-least / lex-last) so outputs are reproducible.
// Constructions check their postconditions and throw ErrorCode::internal
// if one fails.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "vstab/clopen.hpp"
#include "vstab/element.hpp"
#include "vstab/germs.hpp"

namespace vstab {

/// A Thompson-like homeomorphism e -> e_prime (spaces may differ in r).
/// Both sets are split into the same number of cones with split_into and
/// paired in lex order. Throws ErrorCode::no_homeomorphism if the types
/// differ.
PartialMap same_type_homeo(const ClopenSet& e, const ClopenSet& e_prime);

/// Fix(complement of E) ~= V_{n,q}, with q the representative of type(E)
/// in 1..n-1, via conjugation by a chart h: E -> C_{n,q}.
class FixClopenIso {
 public:
  /// E must be nonempty; E = whole space is allowed and gives V_{n,r} ~= V_{n,q}.
  explicit FixClopenIso(const ClopenSet& support);

  const ClopenSet& support() const noexcept { return support_; }
  int q() const noexcept { return target_.r; }
  const Space& target_space() const noexcept { return target_; }
  const PartialMap& chart() const noexcept { return chart_; }

  /// h (g|_E) h^{-1}; g must be the identity off E.
  Element apply(const Element& g) const;
  /// Inverse of apply: the element acting as h^{-1} g' h on E, identity off E.
  Element unapply(const Element& g_prime) const;

 private:
  ClopenSet support_;
  Space target_;
  PartialMap chart_;
};

/// Cones of a fixed depth around the points of S, pairwise disjoint and with
/// nonempty complement. `extra_depth` deepens them beyond the minimum.
ClopenSet neighbourhood(const RationalSet& set, std::size_t extra_depth = 0);

/// A cone around each point of S \ {s}, one letter past where it leaves s
/// (the root cone if the roots differ). Never contains s.
ClopenSet separating_neighbourhood(const RationalSet& set, const RationalPoint& s);

/// An element of Fix_0(S \ {s}) fixing s whose germ at s is the attracting
/// generator (+1).
Element attracting_element(const RationalSet& set, const RationalPoint& s);
/// Product of attracting_element over S; germ tuple (1, ..., 1).
Element attracting_all(const RationalSet& set);
/// The table pair of f whose domain cone contains s; requires germ +1 at s,
/// so the pair is alpha -> alpha.beta with |beta| the period of s.
const Pair& attracting_pair(const Element& f, const RationalPoint& s);

/// Seed-driven generators for elements of Fix_0(S) and Fix(S).
class FixSampler {
 public:
  explicit FixSampler(RationalSet set, std::size_t extra_depth = 1);

  const RationalSet& set() const noexcept { return set_; }
  const std::vector<Element>& attractors() const noexcept { return attractors_; }

  /// Random element supported away from a neighbourhood of S.
  Element fix0(std::mt19937_64& rng, int depth_budget) const;
  /// w1 * prod_s attractor_s^{e_s} * w2 with |e_s| <= max_exponent.
  Element fix(std::mt19937_64& rng, int depth_budget, int max_exponent) const;

 private:
  RationalSet set_;
  std::vector<Element> attractors_;
  FixClopenIso iso_;
};

/// Witness data for Fix(S) as an ascending HNN extension of
/// H = Fix(S u T) ~= Fix(k(S \ {s})) <= V_{n,q}, with stable letter f.
struct HnnData {
  RationalSet set;
  RationalPoint s;
  int q = 1;
  Element f;
  Address alpha;  // f acts as alpha.psi -> alpha.beta.psi on C_alpha
  Word beta;
  ClopenSet trap;  // T: C_{alpha.beta} <= T <= C_alpha, type(T) = r - q
};

HnnData hnn_data(const RationalSet& set, const RationalPoint& s, int q);
/// Throws ErrorCode::internal naming the first violated invariant.
void check_hnn_data(const HnnData& data);

struct HnnDecomposition {
  long long i = 0;
  long long j = 0;
  Element h;  // identity on T, and g = f^{i+j} h f^{-j}
};

/// Writes g in Fix(S) as f^{i+j} h f^{-j} with h in H.
HnnDecomposition hnn_decompose(const HnnData& data, const Element& g);

struct CriterionCheck {
  std::string name;
  bool passed = false;
  bool universal = false;  // backed by an argument covering all of H
  std::string detail;
};

struct HnnReport {
  std::vector<CriterionCheck> checks;  // trivial intersection, conjugation, covering
  bool all_passed() const;
};

/// Checks the three ascending-HNN conditions on samples, together with the
/// universal germ and trap-containment arguments. Never throws on bad data;
/// failures become report entries.
HnnReport verify_hnn_criterion(const HnnData& data, int sample_count, std::uint64_t seed);

/// sigma = pi x rho: germ tuple at S and parity.
struct AbelImage {
  std::vector<GermExponent> germ_part;
  Parity parity_part;

  friend bool operator==(const AbelImage&, const AbelImage&) = default;
};

AbelImage operator+(const AbelImage& a, const AbelImage& b);
AbelImage abelianize(const RationalSet& set, const Element& g);
/// Membership in [Fix(S), Fix(S)] = Fix_0(S) n [V, V].
bool in_commutator(const RationalSet& set, const Element& g);
/// An involution of Fix_0(S) swapping two sibling cones away from S; its
/// parity is 1 when n is odd.
Element order_two_element(const RationalSet& set);

struct ConjugatorOptions {
  int layer_cap = 256;     // bound on the layer index N used by conjugate
  int exhaust_depth = 2;   // cone depth at which exhaustion of C \ S is checked
};

/// Witness data for h Fix(S) h^{-1} = Fix(S'), where h agrees with h0 on E
/// and with f'^{k-1} h1 f^{1-k} on the layer E_k = f^k(E) \ f^{k-1}(E).
struct ConjugatorData {
  RationalSet set;        // S in C_{n,q}
  RationalSet set_prime;  // S' in C_{n,r}
  std::vector<std::size_t> phi;  // S.points()[i] -> S'.points()[phi[i]]
  Element f;
  std::vector<Address> cones;  // cone around each point of S where f attracts
  ClopenSet e;
  Element f_prime;
  std::vector<Address> cones_prime;  // indexed like S'
  ClopenSet e_prime;
  PartialMap h0;  // E -> E'
  PartialMap h1;  // E_1 -> E'_1, respecting phi piece by piece
  ConjugatorOptions options;
};

/// phi[i] is the index in set_prime of the image of set.points()[i]. Throws
/// ErrorCode::not_isomorphic if |S| != |S'|.
ConjugatorData conjugator(const RationalSet& set, const RationalSet& set_prime,
                          std::vector<std::size_t> phi, ConjugatorOptions options = {});

/// h g h^{-1} as an element of V_{n,r}; g must fix S.
Element conjugate(const ConjugatorData& data, const Element& g);

}  // namespace vstab
