#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "arfkit/error.hpp"
#include "arfkit/ideal.hpp"
#include "arfkit/lipman.hpp"
#include "arfkit/semigroup.hpp"

namespace arfkit {

enum class ArfMethod { Definition, Lipman, Pattern };

constexpr std::string_view to_string(ArfMethod m) noexcept {
  switch (m) {
    case ArfMethod::Definition: return "definition";
    case ArfMethod::Lipman: return "lipman";
    case ArfMethod::Pattern: return "pattern";
  }
  return "?";
}

inline std::optional<ArfMethod> parse_arf_method(std::string_view name) noexcept {
  for (ArfMethod m : {ArfMethod::Definition, ArfMethod::Lipman, ArfMethod::Pattern})
    if (to_string(m) == name) return m;
  return std::nullopt;
}

/// Every integrally closed ideal is stable. The integrally closed monomial
/// ideals are the truncations {s >= v}; levels past the conductor only repeat
/// translates of earlier ones.
inline bool is_arf_by_definition(const NumericalSemigroup& s) {
  for (int v = 0; v <= s.conductor(); ++v)
    if (!is_stable(truncation_ideal(s, v)).stable) return false;
  return true;
}

/// Every semigroup infinitely near S has minimal multiplicity.
inline bool is_arf_by_lipman(const NumericalSemigroup& s) {
  const LipmanChain chain = lipman_chain(s);
  return std::all_of(chain.members.begin(), chain.members.end(),
                     [](const NumericalSemigroup& a) { return has_minimal_multiplicity(a); });
}

inline bool is_arf(const NumericalSemigroup& s, ArfMethod method = ArfMethod::Pattern) {
  switch (method) {
    case ArfMethod::Definition: return is_arf_by_definition(s);
    case ArfMethod::Lipman: return is_arf_by_lipman(s);
    case ArfMethod::Pattern: return !arf_pattern_violation(s).has_value();
  }
  return false;
}

/// Smallest Arf semigroup containing S: adjoin x + y - z for the first
/// pattern violation and re-close, until no violation is left. Each round
/// removes at least one gap, so this terminates.
inline NumericalSemigroup arf_closure(const NumericalSemigroup& s) {
  NumericalSemigroup current = s;
  while (auto v = arf_pattern_violation(current)) {
    std::vector<int> gens = current.minimal_generators();
    gens.push_back(v->x + v->y - v->z);
    current = NumericalSemigroup::from_generators(gens);
  }
  return current;
}

}  // namespace arfkit
