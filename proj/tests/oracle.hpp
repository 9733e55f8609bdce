#pragma once

// Brute-force set arithmetic used as an independent reference in tests.
// Nothing here touches the library's window representation.

#include <algorithm>
#include <cstdlib>
#include <set>
#include <vector>

namespace oracle {

/// finite members below `tail`, plus every integer >= tail.
struct Set {
  std::set<int> below;
  int tail = 0;

  bool has(int z) const { return z >= tail || below.count(z) > 0; }
  int min() const { return below.empty() ? tail : *below.begin(); }

  friend bool operator==(const Set& a, const Set& b) { return a.below == b.below && a.tail == b.tail; }
};

/// Trims `below` so that `tail` is exactly one past the last non-member.
inline Set canonical(std::set<int> members, int cutoff) {
  int tail = cutoff;
  while (members.count(tail - 1)) --tail;
  std::set<int> below;
  for (int z : members)
    if (z < tail) below.insert(z);
  return {below, tail};
}

/// Additive closure of gens, by breadth-first sums up to a safe cutoff.
inline Set semigroup(const std::vector<int>& gens) {
  const int mx = *std::max_element(gens.begin(), gens.end());
  const int cutoff = mx * mx + 2 * mx + 2;
  std::vector<bool> in(static_cast<std::size_t>(cutoff), false);
  in[0] = true;
  std::vector<int> frontier{0};
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int x : frontier)
      for (int g : gens)
        if (x + g < cutoff && !in[static_cast<std::size_t>(x + g)]) {
          in[static_cast<std::size_t>(x + g)] = true;
          next.push_back(x + g);
        }
    frontier = std::move(next);
  }
  std::set<int> members;
  for (int i = 0; i < cutoff; ++i)
    if (in[static_cast<std::size_t>(i)]) members.insert(i);
  return canonical(members, cutoff);
}

inline std::vector<int> gaps(const Set& s) {
  std::vector<int> out;
  for (int i = 0; i < s.tail; ++i)
    if (!s.has(i)) out.push_back(i);
  return out;
}

inline std::vector<int> minimal_generators(const Set& s) {
  std::vector<int> out;
  for (int x = 1; x < s.tail + 64; ++x) {
    if (!s.has(x)) continue;
    bool sum = false;
    for (int a = 1; a < x && !sum; ++a) sum = s.has(a) && s.has(x - a);
    if (!sum) out.push_back(x);
  }
  return out;
}

/// Union of a + S over a in elems.
inline Set ideal(const Set& s, const std::vector<int>& elems) {
  const int lo = *std::min_element(elems.begin(), elems.end());
  const int cutoff = *std::max_element(elems.begin(), elems.end()) + s.tail + 1;
  std::set<int> members;
  for (int a : elems)
    for (int z = a; z < cutoff; ++z)
      if (s.has(z - a)) members.insert(z);
  (void)lo;
  return canonical(members, cutoff);
}

inline Set translate(const Set& e, int a) {
  std::set<int> below;
  for (int z : e.below) below.insert(z + a);
  return {below, e.tail + a};
}

/// All pairwise sums.
inline Set sum(const Set& e, const Set& f) {
  const int cutoff = e.tail + f.tail + 1;
  std::vector<int> ev, fv;
  for (int z = e.min(); z < cutoff - f.min(); ++z)
    if (e.has(z)) ev.push_back(z);
  for (int z = f.min(); z < cutoff - e.min(); ++z)
    if (f.has(z)) fv.push_back(z);
  std::set<int> members;
  for (int x : ev)
    for (int y : fv)
      if (x + y < cutoff) members.insert(x + y);
  return canonical(members, cutoff);
}

/// {z : z + F inside E}, checking every member of F up to a generous bound.
inline Set colon(const Set& e, const Set& f) {
  const int lo = e.min() - f.min() - 3;
  const int cutoff = e.tail - f.min() + 1;
  std::set<int> members;
  for (int z = lo; z < cutoff; ++z) {
    bool ok = true;
    for (int y = f.min(); y < f.tail + e.tail + std::abs(z) + 8 && ok; ++y)
      if (f.has(y) && !e.has(z + y)) ok = false;
    if (ok) members.insert(z);
  }
  return canonical(members, cutoff);
}

inline bool subset(const Set& a, const Set& b) {
  for (int z = a.min(); z < std::max(a.tail, b.tail); ++z)
    if (a.has(z) && !b.has(z)) return false;
  return true;
}

/// x + y - z in S for every x >= y >= z in S (no restriction on x).
inline bool is_arf(const Set& s) {
  const int bound = 2 * s.tail + 2;
  for (int x = 0; x < bound; ++x)
    for (int y = 0; y <= x; ++y)
      for (int z = 0; z <= y; ++z)
        if (s.has(x) && s.has(y) && s.has(z) && !s.has(x + y - z)) return false;
  return true;
}

/// Adjoin every missing x + y - z, close additively, repeat.
inline Set arf_closure(Set s) {
  while (true) {
    std::vector<int> gens = minimal_generators(s);
    bool grew = false;
    const int bound = 2 * s.tail + 2;
    for (int x = 0; x < bound && !grew; ++x)
      for (int y = 0; y <= x && !grew; ++y)
        for (int z = 0; z <= y && !grew; ++z)
          if (s.has(x) && s.has(y) && s.has(z) && !s.has(x + y - z)) {
            gens.push_back(x + y - z);
            grew = true;
          }
    if (!grew) return s;
    s = semigroup(gens);
  }
}

/// Every numerical semigroup of genus g, as its gap set. All gaps of such a
/// semigroup lie in [1, 2g - 1].
inline std::vector<std::vector<int>> semigroups_of_genus(int g) {
  std::vector<std::vector<int>> out;
  if (g == 0) return {{}};
  const int n = 2 * g - 1;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) != g) continue;
    auto gap = [&](int z) { return z >= 1 && z <= n && ((mask >> (z - 1)) & 1u); };
    bool closed = true;
    for (int x = 1; x <= n && closed; ++x)
      for (int y = x; x + y <= n && closed; ++y)
        if (!gap(x) && !gap(y) && gap(x + y)) closed = false;
    if (!closed) continue;
    std::vector<int> gs;
    for (int z = 1; z <= n; ++z)
      if (gap(z)) gs.push_back(z);
    out.push_back(gs);
  }
  return out;
}

/// Offset-0 relative ideals: S plus a set of gaps closed under adding S,
/// by trying every subset of gaps.
inline std::vector<Set> normalized_ideals(const Set& s) {
  const std::vector<int> g = gaps(s);
  std::vector<Set> out;
  for (unsigned mask = 0; mask < (1u << g.size()); ++mask) {
    std::set<int> members;
    for (int z = 0; z < s.tail; ++z)
      if (s.has(z)) members.insert(z);
    for (std::size_t i = 0; i < g.size(); ++i)
      if ((mask >> i) & 1u) members.insert(g[i]);
    Set e = canonical(members, s.tail);
    bool closed = true;
    for (int x : e.below)
      for (int y = 1; y < s.tail && closed; ++y)
        if (s.has(y) && !e.has(x + y)) closed = false;
    if (closed) out.push_back(e);
  }
  return out;
}

inline Set dual(const Set& s, const Set& e) { return colon(s, e); }

inline bool reflexive(const Set& s, const Set& e) { return dual(s, dual(s, e)) == e; }

inline bool self_dual(const Set& s, const Set& e) {
  const Set d = dual(s, e);
  return translate(d, -d.min()) == translate(e, -e.min());
}

}  // namespace oracle
