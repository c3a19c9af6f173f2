#include <algorithm>
#include <string>

#include "vstab/constructions.hpp"
#include "vstab/error.hpp"
#include "vstab/io.hpp"

namespace vstab {

namespace {

constexpr long long kMaxTrapIterations = 4096;

// The cone of a canonical clopen set that contains s.
std::optional<Address> cone_around(const ClopenSet& set, const RationalPoint& s) {
  for (const Address& a : set.cones()) {
    if (cone_contains_point(a, s)) return a;
  }
  return std::nullopt;
}

}  // namespace

HnnData hnn_data(const RationalSet& set, const RationalPoint& s, int q) {
  if (q < 1) fail(ErrorCode::domain, "target index q must be at least 1");
  const Space& space = set.space();
  Element f = attracting_element(set, s);
  const Pair& pair = attracting_pair(f, s);
  Address alpha = pair.dom;
  Word beta = suffix_after(pair.dom, pair.ran);
  const Address alpha_beta = pair.ran;

  // type(T) = 1 + extra must be r - q mod n-1.
  const int modulus = std::max(1, space.n - 1);
  const int extra = ((space.r - q - 1) % modulus + modulus) % modulus;
  std::vector<Address> cones{alpha_beta};
  const std::vector<Address> siblings = complement_in_cone(alpha, cones);
  ensure(static_cast<int>(siblings.size()) >= extra, "too few cones beside C_{alpha beta}");
  cones.insert(cones.end(), siblings.begin(), siblings.begin() + extra);

  HnnData data{set,   s,          q, std::move(f), std::move(alpha), std::move(beta),
               normalize(space, std::move(cones))};
  check_hnn_data(data);
  return data;
}

void check_hnn_data(const HnnData& data) {
  const Space& space = data.set.space();
  ensure(data.set.contains(data.s), "distinguished point not in S");
  ensure(in_fix(data.f, data.set), "stable letter does not fix S");
  ensure(germ_exponent(data.f, data.s) == 1, "stable letter has germ != +1 at s");
  ensure(in_fix0(data.f, data.set.without(data.s)), "stable letter not in Fix_0(S \\ {s})");

  const Address alpha_beta = extend(data.alpha, data.beta);
  ensure(cone_contains_point(data.alpha, data.s), "C_alpha does not contain s");
  ensure(evaluate(data.f, data.s) == data.s, "stable letter moves s");
  const PartialMap on_alpha = restrict(data.f, ClopenSet::cone(data.alpha));
  ensure(on_alpha == PartialMap::make(space, space, {Pair{data.alpha, alpha_beta}}),
         "stable letter is not alpha.psi -> alpha.beta.psi on C_alpha");

  ensure(data.trap.contains(alpha_beta), "T does not contain C_{alpha beta}");
  ensure(is_subset(data.trap, ClopenSet::cone(data.alpha)), "T is not inside C_alpha");
  ensure(type_of(data.trap) == type_residue(space, space.r - data.q), "type(T) != r - q");
  ensure(type_of(complement(data.trap)) == type_residue(space, data.q), "type(C \\ T) != q");
  for (const RationalPoint& t : data.set.points()) {
    if (t != data.s) ensure(!data.trap.contains(t), "T meets S \\ {s}");
  }
  ensure(is_subset(data.trap, image_clopen(invert(data.f), data.trap)), "f^{-1}(T) misses T");
}

HnnDecomposition hnn_decompose(const HnnData& data, const Element& g) {
  if (!in_fix(g, data.set)) fail(ErrorCode::precondition, "element does not fix S");
  if (!is_subset(data.trap, ClopenSet::cone(data.alpha))) {
    fail(ErrorCode::precondition, "T is not inside C_alpha");
  }
  const Element& f = data.f;
  const long long i = germ_exponent(g, data.s);

  // d = f^{-i} g is the identity on a cone U around s.
  const Element d = compose(power(f, -i), g);
  const std::optional<Address> u = cone_around(identity_locus(d), data.s);
  ensure(u.has_value(), "f^{-i} g is not the identity near s");
  const ClopenSet around = ClopenSet::cone(*u);

  long long j = i < 0 ? -i : i;
  ClopenSet moved = image_clopen(power(f, j), data.trap);
  while (!is_subset(moved, around)) {
    if (j > kMaxTrapIterations) fail(ErrorCode::internal, "f^j(T) never enters U");
    moved = image_clopen(f, moved);
    ++j;
  }
  Element h = compose(power(f, -i - j), compose(g, power(f, j)));

  ensure(is_subset(data.trap, identity_locus(h)), "decomposition factor moves T");
  ensure(compose(power(f, i + j), compose(h, power(f, -j))) == g, "g != f^{i+j} h f^{-j}");
  return HnnDecomposition{i, j, std::move(h)};
}

bool HnnReport::all_passed() const {
  return !checks.empty() &&
         std::all_of(checks.begin(), checks.end(), [](const CriterionCheck& c) { return c.passed; });
}

namespace {

// Elements of H = Fix(S u T): supported off T and off a neighbourhood of
// the rest of S.
std::optional<FixClopenIso> h_support(const HnnData& data) {
  const ClopenSet blocked = unite(data.trap, separating_neighbourhood(data.set, data.s));
  const ClopenSet support = complement(blocked);
  if (support.empty()) return std::nullopt;
  return FixClopenIso(support);
}

template <class Fn>
CriterionCheck run_check(std::string name, Fn&& body) {
  CriterionCheck check{std::move(name), false, false, {}};
  try {
    body(check);
  } catch (const std::exception& e) {
    check.passed = false;
    check.detail += std::string(check.detail.empty() ? "" : "; ") + "exception: " + e.what();
  }
  return check;
}

}  // namespace

HnnReport verify_hnn_criterion(const HnnData& data, int sample_count, std::uint64_t seed) {
  HnnReport report;
  std::mt19937_64 rng(seed);
  constexpr int kDepth = 4;
  constexpr long long kPowerBound = 4;

  std::vector<Element> h_samples;
  try {
    if (auto iso = h_support(data)) {
      for (int k = 0; k < sample_count; ++k) {
        h_samples.push_back(iso->unapply(random_element(iso->target_space(), kDepth, rng())));
      }
    }
  } catch (const std::exception&) {
    h_samples.clear();
  }
  const auto in_h = [&](const Element& h) {
    return in_fix(h, data.set) && is_subset(data.trap, identity_locus(h));
  };

  report.checks.push_back(run_check("trivial intersection <f> n H = 1", [&](CriterionCheck& c) {
    // Every h in H is the identity on T, a neighbourhood of s, so its germ at
    // s vanishes, while f^k has germ k.
    bool ok = data.trap.contains(data.s) && germ_exponent(data.f, data.s) == 1;
    c.universal = ok;
    for (long long k = -kPowerBound; k <= kPowerBound && ok; ++k) {
      if (k == 0) continue;
      const Element fk = power(data.f, k);
      ok = germ_exponent(fk, data.s) == k;
      for (const Element& h : h_samples) ok = ok && fk != h;
    }
    for (const Element& h : h_samples) ok = ok && in_h(h) && germ_exponent(h, data.s) == 0;
    c.passed = ok;
    c.detail = "germ of f^k at s is k for 0 < |k| <= " + std::to_string(kPowerBound) + "; " +
               std::to_string(h_samples.size()) + " sampled h have germ 0";
  }));

  report.checks.push_back(run_check("f^{-1} H f <= H", [&](CriterionCheck& c) {
    const Element f_inv = invert(data.f);
    const bool contains = is_subset(data.trap, image_clopen(f_inv, data.trap));
    c.universal = contains;
    bool ok = contains;
    for (const Element& h : h_samples) ok = ok && in_h(compose(f_inv, compose(h, data.f)));
    c.passed = ok;
    c.detail = std::string(contains ? "f^{-1}(T) contains T" : "f^{-1}(T) does not contain T") +
               "; " + std::to_string(h_samples.size()) + " sampled conjugates checked";
  }));

  report.checks.push_back(run_check("union of f^i H f^{-j} is Fix(S)", [&](CriterionCheck& c) {
    check_hnn_data(data);
    const FixSampler sampler(data.set);
    bool ok = true;
    for (int k = 0; k < sample_count && ok; ++k) {
      const Element g = sampler.fix(rng, kDepth, 3);
      const HnnDecomposition dec = hnn_decompose(data, g);
      ok = in_h(dec.h) && dec.i + dec.j >= 0 && dec.j >= 0 &&
           compose(power(data.f, dec.i + dec.j), compose(dec.h, power(data.f, -dec.j))) == g;
    }
    c.passed = ok;
    c.detail = std::to_string(sample_count) + " sampled g in Fix(S) decomposed";
  }));

  return report;
}

}  // namespace vstab
