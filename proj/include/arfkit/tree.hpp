#pragma once

#include <algorithm>
#include <cstdlib>
#include <string>
#include <vector>

#include "arfkit/error.hpp"
#include "arfkit/semigroup.hpp"

namespace arfkit {

inline constexpr int kDefaultGenusCap = 30;

/// Hard cap on tree enumeration; ARFKIT_GENUS_CAP overrides the default.
inline int genus_cap() {
  if (const char* env = std::getenv("ARFKIT_GENUS_CAP")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 0) return static_cast<int>(v);
  }
  return kDefaultGenusCap;
}

inline void check_genus_bound(int max_genus) {
  if (max_genus < 0) throw Error(ErrorKind::BoundTooLarge, "negative genus bound " + std::to_string(max_genus));
  if (max_genus > genus_cap()) {
    throw Error(ErrorKind::BoundTooLarge,
                "genus bound " + std::to_string(max_genus) + " exceeds cap " + std::to_string(genus_cap()));
  }
}

/// Children in the semigroup tree: S \ {g} for each minimal generator g
/// above the Frobenius number, in increasing g.
inline std::vector<NumericalSemigroup> tree_children(const NumericalSemigroup& s) {
  std::vector<NumericalSemigroup> out;
  for (int g : s.minimal_generators()) {
    if (g <= s.frobenius()) continue;
    std::vector<bool> table(static_cast<std::size_t>(g) + 1);
    for (int i = 0; i < g; ++i) table[static_cast<std::size_t>(i)] = s.contains(i);
    table[static_cast<std::size_t>(g)] = false;
    out.push_back(NumericalSemigroup::from_membership(std::move(table)));
  }
  return out;
}

/// Depth-first walk of the subtree at `root`, down to genus max_genus.
template <class Visitor>
void for_each_in_subtree(const NumericalSemigroup& root, int max_genus, Visitor&& visit) {
  std::vector<NumericalSemigroup> stack{root};
  while (!stack.empty()) {
    NumericalSemigroup s = std::move(stack.back());
    stack.pop_back();
    visit(s);
    if (s.genus() < max_genus) {
      auto kids = tree_children(s);
      for (auto it = kids.rbegin(); it != kids.rend(); ++it) stack.push_back(std::move(*it));
    }
  }
}

/// Census row order: genus, then minimal generators lexicographically.
inline bool census_less(const NumericalSemigroup& a, const NumericalSemigroup& b) {
  if (a.genus() != b.genus()) return a.genus() < b.genus();
  return a.minimal_generators() < b.minimal_generators();
}

/// Every numerical semigroup of genus <= max_genus, exactly once, in census
/// order.
inline std::vector<NumericalSemigroup> enumerate_semigroups(int max_genus) {
  check_genus_bound(max_genus);
  std::vector<NumericalSemigroup> out;
  for_each_in_subtree(NumericalSemigroup::naturals(), max_genus, [&](const NumericalSemigroup& s) { out.push_back(s); });
  std::sort(out.begin(), out.end(), census_less);
  return out;
}

inline std::vector<std::size_t> counts_by_genus(int max_genus) {
  check_genus_bound(max_genus);
  std::vector<std::size_t> counts(static_cast<std::size_t>(max_genus) + 1);
  for_each_in_subtree(NumericalSemigroup::naturals(), max_genus,
                      [&](const NumericalSemigroup& s) { ++counts[static_cast<std::size_t>(s.genus())]; });
  return counts;
}

}  // namespace arfkit
