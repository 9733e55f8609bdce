#pragma once

#include <string>
#include <vector>

#include "arfkit/error.hpp"
#include "arfkit/ideal.hpp"
#include "arfkit/semigroup.hpp"

namespace arfkit {

/// The maximal ideal S \ {0}. The model is local (a single branch), so this
/// is also the Jacobson radical.
inline RelativeIdeal maximal_ideal(const NumericalSemigroup& s) { return truncation_ideal(s, 1); }

/// A_0 = S, A_{i+1} = blow-up of the maximal ideal of A_i, ending at the
/// naturals. Each member is itself local, so the members are exactly the
/// semigroups infinitely near S.
struct LipmanChain {
  std::vector<NumericalSemigroup> members;
  std::vector<int> multiplicity_sequence;

  std::size_t size() const noexcept { return members.size(); }
};

/// Always uses the general blow-up. When S is Arf (pattern test) each step is
/// also compared against the single colon End(J), and a mismatch throws
/// Inconsistency.
inline LipmanChain lipman_chain(const NumericalSemigroup& s) {
  const bool arf = !arf_pattern_violation(s).has_value();
  LipmanChain chain;
  NumericalSemigroup current = s;
  chain.members.push_back(current);
  chain.multiplicity_sequence.push_back(current.multiplicity());
  while (current.genus() > 0) {
    const RelativeIdeal j = maximal_ideal(current);
    NumericalSemigroup next = blowup_ideal(j);
    if (next.genus() >= current.genus()) {
      throw Error(ErrorKind::Inconsistency, "blow-up of " + current.to_string() + " did not grow");
    }
    if (arf && !(end_semigroup(j) == next)) {
      throw Error(ErrorKind::Inconsistency, "End(J) differs from the blow-up at " + current.to_string());
    }
    current = std::move(next);
    chain.members.push_back(current);
    chain.multiplicity_sequence.push_back(current.multiplicity());
  }
  return chain;
}

}  // namespace arfkit
