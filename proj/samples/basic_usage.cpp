// Walks through the blow-up calculus for the cusp-like branch k[[t^3, t^5]].
#include <iostream>

#include "arfkit/arfkit.hpp"

int main() {
  using namespace arfkit;
  const auto s = NumericalSemigroup::from_generators({3, 5});
  const auto m = maximal_ideal(s);

  std::cout << "S = " << s.to_string() << ", gaps " << join_ints(s.gaps()) << '\n';
  std::cout << "m = " << m.to_string() << '\n';
  std::cout << "dual(m) = " << dual(m).to_string() << '\n';
  std::cout << "m reflexive: " << std::boolalpha << is_reflexive(m) << '\n';
  std::cout << "End(m) = " << end_semigroup(m).to_string() << '\n';
  std::cout << "Arf closure = " << arf_closure(s).to_string() << '\n';

  for (const auto& a : lipman_chain(s).members) std::cout << "  chain: " << a.to_string() << '\n';
  for (const auto& e : enumerate_normalized_ideals(s, IdealFilter::Reflexive))
    std::cout << "  reflexive: " << e.to_string() << " self-dual " << is_self_dual(e) << '\n';
}
