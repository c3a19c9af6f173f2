#include <algorithm>
#include <random>

#include "vstab/element.hpp"
#include "vstab/error.hpp"

namespace vstab {

namespace {

std::vector<Address> random_prefix_code(const Space& space, int carets, std::mt19937_64& rng) {
  std::vector<Address> leaves;
  for (int root = 1; root <= space.r; ++root) leaves.push_back(root_address(space, root));
  for (int i = 0; i < carets; ++i) {
    std::uniform_int_distribution<std::size_t> pick(0, leaves.size() - 1);
    const std::size_t at = pick(rng);
    Address leaf = std::move(leaves[at]);
    leaves.erase(leaves.begin() + static_cast<std::ptrdiff_t>(at));
    auto kids = children(leaf);
    leaves.insert(leaves.end(), kids.begin(), kids.end());
  }
  return leaves;
}

}  // namespace

Element random_element(const Space& space, int depth_budget, std::uint64_t seed) {
  check_space(space);
  if (depth_budget < 0) fail(ErrorCode::domain, "depth budget must be nonnegative");
  if (depth_budget == 0) return identity(space);

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> caret_count(1, depth_budget);
  const int carets = caret_count(rng);
  std::vector<Address> doms = random_prefix_code(space, carets, rng);
  std::vector<Address> rans = random_prefix_code(space, carets, rng);
  std::shuffle(rans.begin(), rans.end(), rng);

  std::vector<Pair> pairs;
  pairs.reserve(doms.size());
  for (std::size_t i = 0; i < doms.size(); ++i) pairs.push_back({doms[i], rans[i]});
  return make_element(space, std::move(pairs));
}

}  // namespace vstab
