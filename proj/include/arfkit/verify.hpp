#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "arfkit/arf.hpp"
#include "arfkit/error.hpp"
#include "arfkit/ideal.hpp"
#include "arfkit/lipman.hpp"
#include "arfkit/semigroup.hpp"

namespace arfkit {

enum class IdealFilter { All, Reflexive, SelfDual };

inline constexpr int kDefaultIdealGenusBound = 22;

/// All offset-0 relative ideals of S, i.e. S together with a set G of gaps
/// such that G + S stays inside G and S. Sorted lexicographically by window.
///
/// Gaps are decided from the largest down, so when a gap g is considered
/// every g + generator that is a gap has already been decided and the
/// closure test at g is exact.
inline std::vector<RelativeIdeal> enumerate_normalized_ideals(const NumericalSemigroup& s,
                                                              IdealFilter filter = IdealFilter::All,
                                                              int genus_bound = kDefaultIdealGenusBound) {
  if (s.genus() > genus_bound) {
    throw Error(ErrorKind::GenusTooLarge,
                "genus " + std::to_string(s.genus()) + " exceeds bound " + std::to_string(genus_bound));
  }
  const int c = s.conductor();
  const std::vector<int> gaps = s.gaps();
  const std::vector<int>& gens = s.minimal_generators();
  std::vector<bool> window(static_cast<std::size_t>(c));
  for (int i = 0; i < c; ++i) window[static_cast<std::size_t>(i)] = s.contains(i);

  std::vector<std::vector<bool>> windows;
  auto can_include = [&](int g) {
    for (int a : gens) {
      if (g + a >= c) break;
      if (!window[static_cast<std::size_t>(g + a)]) return false;
    }
    return true;
  };
  auto dfs = [&](auto&& self, int k) -> void {
    if (k < 0) {
      windows.push_back(window);
      return;
    }
    const int g = gaps[static_cast<std::size_t>(k)];
    self(self, k - 1);
    if (can_include(g)) {
      window[static_cast<std::size_t>(g)] = true;
      self(self, k - 1);
      window[static_cast<std::size_t>(g)] = false;
    }
  };
  dfs(dfs, static_cast<int>(gaps.size()) - 1);
  std::sort(windows.begin(), windows.end());

  std::vector<RelativeIdeal> out;
  out.reserve(windows.size());
  for (auto& w : windows) {
    RelativeIdeal e = RelativeIdeal::from_predicate(s, 0, c, [&](int z) { return w[static_cast<std::size_t>(z)]; });
    const bool keep = filter == IdealFilter::All || (filter == IdealFilter::Reflexive && is_reflexive(e)) ||
                      (filter == IdealFilter::SelfDual && is_self_dual(e));
    if (keep) out.push_back(std::move(e));
  }
  return out;
}

enum class Status { Pass, Fail, NotApplicable, Empirical };

constexpr std::string_view to_string(Status s) noexcept {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::NotApplicable: return "not-applicable";
    case Status::Empirical: return "empirical";
  }
  return "?";
}

/// A counterexample or distinguished object attached to a report.
struct Witness {
  std::string reason;
  std::optional<RelativeIdeal> ideal;
  std::optional<NumericalSemigroup> semigroup;
};

struct VerificationDetail {
  std::size_t ideals_enumerated = 0;
  std::size_t reflexive_found = 0;
  std::size_t self_dual_found = 0;
  std::size_t checks_skipped = 0;
};

/// Fail always carries a witness; Empirical never claims a theorem.
struct VerificationReport {
  std::string check_name;
  Status status = Status::Pass;
  std::optional<Witness> witness;
  VerificationDetail detail;
  std::string note;

  bool failed() const noexcept { return status == Status::Fail; }
};

namespace detail {

inline VerificationReport fail(VerificationReport r, std::string reason, std::optional<RelativeIdeal> ideal = {},
                               std::optional<NumericalSemigroup> semigroup = {}) {
  r.status = Status::Fail;
  r.witness = Witness{std::move(reason), std::move(ideal), std::move(semigroup)};
  return r;
}

inline bool window_less(const RelativeIdeal& a, const RelativeIdeal& b) { return a.window() < b.window(); }

/// First ideal present in exactly one of two window-sorted lists.
inline std::optional<RelativeIdeal> first_difference(const std::vector<RelativeIdeal>& a,
                                                     const std::vector<RelativeIdeal>& b) {
  std::vector<RelativeIdeal> diff;
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(diff), window_less);
  if (diff.empty()) return std::nullopt;
  return diff.front();
}

}  // namespace detail

/// For Arf S the normalized reflexive ideals are exactly the chain members
/// read as ideals of S, and they split as {S} together with the reflexive
/// ideals of A_1.
inline VerificationReport verify_theorem_A(const NumericalSemigroup& s, int genus_bound = kDefaultIdealGenusBound) {
  VerificationReport r{"theorem-a"};
  if (!is_arf(s)) {
    r.status = Status::NotApplicable;
    r.note = "not Arf";
    return r;
  }
  const std::vector<RelativeIdeal> all = enumerate_normalized_ideals(s, IdealFilter::All, genus_bound);
  std::vector<RelativeIdeal> reflexive;
  for (const auto& e : all)
    if (is_reflexive(e)) reflexive.push_back(e);
  r.detail.ideals_enumerated = all.size();
  r.detail.reflexive_found = reflexive.size();

  const LipmanChain chain = lipman_chain(s);
  std::vector<RelativeIdeal> expected;
  for (const auto& a : chain.members) expected.push_back(as_ideal_of(a, s));
  std::sort(expected.begin(), expected.end(), detail::window_less);

  if (auto d = detail::first_difference(reflexive, expected)) {
    return detail::fail(std::move(r), "reflexive ideals differ from the chain", *d);
  }
  if (chain.size() > 1) {
    std::vector<RelativeIdeal> split{unit_ideal(s)};
    for (const auto& e : enumerate_normalized_ideals(chain.members[1], IdealFilter::Reflexive, genus_bound))
      split.push_back(restrict_scalars(e, s));
    std::sort(split.begin(), split.end(), detail::window_less);
    if (auto d = detail::first_difference(reflexive, split)) {
      return detail::fail(std::move(r), "reflexive ideals are not {S} plus those of A_1", *d, chain.members[1]);
    }
  }
  r.note = "reflexive " + std::to_string(reflexive.size()) + " = chain " + std::to_string(chain.size());
  return r;
}

/// Forward direction for Arf S: every reflexive ideal is self-dual. For
/// non-Arf S only reports whether a reflexive non-self-dual rank-one ideal
/// exists.
inline VerificationReport verify_theorem_B(const NumericalSemigroup& s, int genus_bound = kDefaultIdealGenusBound) {
  VerificationReport r{"theorem-b"};
  const std::vector<RelativeIdeal> all = enumerate_normalized_ideals(s, IdealFilter::All, genus_bound);
  r.detail.ideals_enumerated = all.size();
  std::optional<RelativeIdeal> first_non_self_dual;
  for (const auto& e : all) {
    if (!is_reflexive(e)) continue;
    ++r.detail.reflexive_found;
    if (is_self_dual(e)) {
      ++r.detail.self_dual_found;
    } else if (!first_non_self_dual) {
      first_non_self_dual = e;
    }
  }
  const std::string counts =
      std::to_string(r.detail.self_dual_found) + "/" + std::to_string(r.detail.reflexive_found) + " reflexive self-dual";
  if (is_arf(s)) {
    if (first_non_self_dual) return detail::fail(std::move(r), "reflexive ideal is not self-dual", first_non_self_dual);
    r.note = counts;
    return r;
  }
  r.status = Status::Empirical;
  r.note = "not Arf; " + counts;
  if (first_non_self_dual) r.witness = Witness{"reflexive, not self-dual", first_non_self_dual, std::nullopt};
  return r;
}

/// The five equivalent conditions on J = maximal ideal, End = J - J:
///   J stable; J = x + End for some x in J; J isomorphic to End;
///   J self-dual; End self-dual (as ideals of S).
struct StableCharConditions {
  bool stable = false;
  bool translate_of_end = false;
  bool isomorphic_to_end = false;
  bool j_self_dual = false;
  bool end_self_dual = false;

  bool agree() const noexcept {
    return stable == translate_of_end && stable == isomorphic_to_end && stable == j_self_dual &&
           stable == end_self_dual;
  }
};

inline StableCharConditions stablechar_conditions(const NumericalSemigroup& s) {
  const RelativeIdeal j = maximal_ideal(s);
  const NumericalSemigroup end = end_semigroup(j);
  const RelativeIdeal end_ideal = as_ideal_of(end, s);
  StableCharConditions c;
  c.stable = is_stable(j).stable;
  for (int x : j.small_members()) {
    if (shift(end_ideal, x) == j) {
      c.translate_of_end = true;
      break;
    }
  }
  // J with an empty window (S = naturals) has its least member as only candidate.
  if (j.width() == 0) c.translate_of_end = shift(end_ideal, j.offset()) == j;
  c.isomorphic_to_end = isomorphic(normalize(j).ideal, normalize(end_ideal).ideal);
  c.j_self_dual = is_self_dual(j);
  c.end_self_dual = is_self_dual(end_ideal);
  return c;
}

inline VerificationReport verify_stablechar(const NumericalSemigroup& s) {
  VerificationReport r{"stablechar"};
  const StableCharConditions c = stablechar_conditions(s);
  const RelativeIdeal j = maximal_ideal(s);
  const NumericalSemigroup end = end_semigroup(j);
  const RelativeIdeal end_ideal = as_ideal_of(end, s);
  if (!c.agree()) return detail::fail(std::move(r), "five conditions disagree", j);
  if (!is_reflexive(j)) return detail::fail(std::move(r), "maximal ideal is not reflexive", j);
  if (!isomorphic(normalize(dual(j)).ideal, end_ideal)) {
    return detail::fail(std::move(r), "dual of the maximal ideal is not isomorphic to End", dual(j), end);
  }
  const bool arf = is_arf(s);
  const bool end_arf = is_arf(end);
  if (arf != (c.stable && end_arf)) {
    return detail::fail(std::move(r), "Arf differs from (J stable and End Arf)", j, end);
  }
  if (arf != (c.end_self_dual && end_arf)) {
    return detail::fail(std::move(r), "Arf differs from (End self-dual and End Arf)", end_ideal, end);
  }
  r.note = std::string("all five ") + (c.stable ? "true" : "false");
  return r;
}

/// For consecutive chain members R = A_i, T = A_{i+1} with T self-dual over
/// R: every normalized ideal of T has the same dual class over R and over T,
/// and is reflexive over one iff over the other. Pairs failing the
/// self-duality gate are skipped.
inline VerificationReport verify_dual_descent(const NumericalSemigroup& s, int genus_bound = kDefaultIdealGenusBound) {
  VerificationReport r{"descent"};
  const LipmanChain chain = lipman_chain(s);
  std::size_t checked_pairs = 0;
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    const NumericalSemigroup& base = chain.members[i];
    const NumericalSemigroup& over = chain.members[i + 1];
    if (!is_self_dual(as_ideal_of(over, base))) {
      ++r.detail.checks_skipped;
      continue;
    }
    ++checked_pairs;
    for (const auto& e : enumerate_normalized_ideals(over, IdealFilter::All, genus_bound)) {
      ++r.detail.ideals_enumerated;
      const RelativeIdeal down = restrict_scalars(e, base);
      if (!same_members(normalize(dual(down)).ideal, normalize(dual(e)).ideal)) {
        return detail::fail(std::move(r), "duals over " + base.to_string() + " and " + over.to_string() + " differ",
                            e, base);
      }
      const bool refl = is_reflexive(e);
      if (refl != is_reflexive(down)) {
        return detail::fail(std::move(r), "reflexivity differs over " + base.to_string() + " and " + over.to_string(),
                            e, base);
      }
      if (refl) ++r.detail.reflexive_found;
    }
  }
  if (checked_pairs == 0 && r.detail.checks_skipped > 0) {
    r.status = Status::NotApplicable;
    r.note = "no self-dual consecutive pair";
    return r;
  }
  r.note = std::to_string(checked_pairs) + " pairs checked, " + std::to_string(r.detail.checks_skipped) + " skipped";
  return r;
}

/// For every normalized ideal E of S and every proper chain member T:
/// E a T-module implies trace(E) inside the conductor S - T, and for
/// reflexive E the converse.
inline VerificationReport verify_trace_conductor(const NumericalSemigroup& s,
                                                 int genus_bound = kDefaultIdealGenusBound) {
  VerificationReport r{"trace"};
  const LipmanChain chain = lipman_chain(s);
  const std::vector<RelativeIdeal> all = enumerate_normalized_ideals(s, IdealFilter::All, genus_bound);
  r.detail.ideals_enumerated = all.size();
  std::vector<RelativeIdeal> traces;
  std::vector<bool> reflexive;
  for (const auto& e : all) {
    traces.push_back(trace(e));
    reflexive.push_back(is_reflexive(e));
    if (reflexive.back()) ++r.detail.reflexive_found;
  }
  for (std::size_t i = 1; i < chain.size(); ++i) {
    const NumericalSemigroup& t = chain.members[i];
    const RelativeIdeal cond = conductor_ideal(s, t);
    for (std::size_t k = 0; k < all.size(); ++k) {
      const bool module = is_module_over(all[k], t);
      const bool inside = is_subset(traces[k], cond);
      if (module && !inside) return detail::fail(std::move(r), "T-module whose trace escapes the conductor", all[k], t);
      if (reflexive[k] && inside && !module) {
        return detail::fail(std::move(r), "reflexive ideal with trace in the conductor is not a T-module", all[k], t);
      }
    }
  }
  return r;
}

enum class Check { TheoremA, TheoremB, StableChar, Descent, Trace };

inline VerificationReport run_check(Check check, const NumericalSemigroup& s, int genus_bound = kDefaultIdealGenusBound) {
  switch (check) {
    case Check::TheoremA: return verify_theorem_A(s, genus_bound);
    case Check::TheoremB: return verify_theorem_B(s, genus_bound);
    case Check::StableChar: return verify_stablechar(s);
    case Check::Descent: return verify_dual_descent(s, genus_bound);
    case Check::Trace: return verify_trace_conductor(s, genus_bound);
  }
  return {};
}

}  // namespace arfkit
