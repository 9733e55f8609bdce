#pragma once

#include <random>
#include <set>
#include <vector>

#include "arfkit/arfkit.hpp"
#include "oracle.hpp"

namespace testing_support {

inline oracle::Set to_oracle(const arfkit::NumericalSemigroup& s) {
  std::set<int> members;
  for (int z = 0; z <= s.conductor(); ++z)
    if (s.contains(z)) members.insert(z);
  return oracle::canonical(members, s.conductor() + 1);
}

inline oracle::Set to_oracle(const arfkit::RelativeIdeal& e) {
  std::set<int> members;
  const int end = e.offset() + e.width() + 1;
  for (int z = e.offset(); z < end; ++z)
    if (e.contains(z)) members.insert(z);
  return oracle::canonical(members, end);
}

/// Relative ideal from a random handful of elements near a random offset.
inline arfkit::RelativeIdeal random_ideal(const arfkit::NumericalSemigroup& s, std::mt19937& rng) {
  std::uniform_int_distribution<int> offset(-12, 12);
  std::uniform_int_distribution<int> count(1, 4);
  std::uniform_int_distribution<int> spread(0, s.conductor() + 3);
  const int base = offset(rng);
  std::vector<int> elems{base};
  for (int k = count(rng); k > 0; --k) elems.push_back(base + spread(rng));
  return arfkit::ideal_from_elements(s, elems);
}

/// `count` semigroups drawn from the census up to `max_genus`, fixed seed.
inline std::vector<arfkit::NumericalSemigroup> sample_semigroups(int max_genus, std::size_t count, unsigned seed) {
  const auto all = arfkit::enumerate_semigroups(max_genus);
  std::mt19937 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
  std::vector<arfkit::NumericalSemigroup> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(all[pick(rng)]);
  return out;
}

inline std::vector<int> members_below(const arfkit::RelativeIdeal& e, int bound) {
  std::vector<int> out;
  for (int z = e.offset(); z < bound; ++z)
    if (e.contains(z)) out.push_back(z);
  return out;
}

}  // namespace testing_support
