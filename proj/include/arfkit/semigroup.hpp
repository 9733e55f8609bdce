#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <memory>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "arfkit/error.hpp"

namespace arfkit {

/// A cofinite additive submonoid S of the naturals. Models the value
/// semigroup of the curve branch k[[t^S]].
///
/// Membership is stored for the window [0, conductor] only; every integer at
/// or above the conductor is a member. Instances are immutable and share their
/// tables, so copies are cheap.
class NumericalSemigroup {
 public:
  /// The naturals (the regular ring k[[t]]).
  NumericalSemigroup() : data_(naturals_data()) {}

  static NumericalSemigroup naturals() { return NumericalSemigroup(); }

  static NumericalSemigroup from_generators(std::span<const int> gens) {
    if (gens.empty()) throw Error(ErrorKind::EmptyGenerators, "generator list is empty");
    int g = 0;
    for (int x : gens) {
      if (x < 1) throw Error(ErrorKind::InvalidGenerator, "generator " + std::to_string(x) + " is not positive");
      g = std::gcd(g, x);
    }
    if (g != 1) {
      throw Error(ErrorKind::NotCofinite, "gcd of generators is " + std::to_string(g) + ", not 1");
    }
    const int m = *std::min_element(gens.begin(), gens.end());
    if (m == 1) return naturals();

    // Grow the reachability table until m consecutive members appear; from
    // there on every integer is reachable by adding copies of m.
    std::vector<bool> reach{true};
    int run = 1;
    for (int n = 1; run < m; ++n) {
      bool hit = false;
      for (int x : gens) {
        if (x <= n && reach[static_cast<std::size_t>(n - x)]) {
          hit = true;
          break;
        }
      }
      reach.push_back(hit);
      run = hit ? run + 1 : 0;
    }
    reach.resize(reach.size() - static_cast<std::size_t>(m) + 1);
    return from_membership(std::move(reach));
  }

  static NumericalSemigroup from_generators(std::initializer_list<int> gens) {
    return from_generators(std::span<const int>(gens.begin(), gens.size()));
  }

  /// Builds a semigroup from a membership table: table[i] says whether i is a
  /// member, and every i >= table.size() is a member. Throws NotASemigroup if
  /// 0 is missing or the set is not additively closed.
  static NumericalSemigroup from_membership(std::vector<bool> table) {
    if (!table.empty() && !table[0]) throw Error(ErrorKind::NotASemigroup, "0 is not a member");
    int conductor = 0;
    for (int i = static_cast<int>(table.size()) - 1; i >= 0; --i) {
      if (!table[static_cast<std::size_t>(i)]) {
        conductor = i + 1;
        break;
      }
    }
    table.resize(static_cast<std::size_t>(conductor) + 1, true);
    // Sums at or beyond the conductor are members automatically.
    for (int x = 1; x < conductor; ++x) {
      if (!table[static_cast<std::size_t>(x)]) continue;
      for (int y = x; x + y < conductor; ++y) {
        if (table[static_cast<std::size_t>(y)] && !table[static_cast<std::size_t>(x + y)]) {
          throw Error(ErrorKind::NotASemigroup, std::to_string(x) + " + " + std::to_string(y) + " is missing");
        }
      }
    }
    return NumericalSemigroup(build(std::move(table), conductor));
  }

  bool contains(long long n) const noexcept {
    if (n < 0) return false;
    if (n >= data_->conductor) return true;
    return data_->small[static_cast<std::size_t>(n)];
  }

  int multiplicity() const noexcept { return data_->multiplicity; }
  int embedding_dimension() const noexcept { return static_cast<int>(data_->generators.size()); }
  int frobenius() const noexcept { return data_->conductor - 1; }
  int conductor() const noexcept { return data_->conductor; }
  int genus() const noexcept { return data_->genus; }
  const std::vector<int>& minimal_generators() const noexcept { return data_->generators; }

  std::vector<int> gaps() const {
    std::vector<int> out;
    for (int i = 1; i < conductor(); ++i)
      if (!contains(i)) out.push_back(i);
    return out;
  }

  /// Members in [0, conductor].
  std::vector<int> small_elements() const {
    std::vector<int> out;
    for (int i = 0; i <= conductor(); ++i)
      if (contains(i)) out.push_back(i);
    return out;
  }

  /// Least member in each residue class mod n, indexed by residue.
  std::vector<int> apery_set(int n) const {
    if (n <= 0 || !contains(n)) {
      throw Error(ErrorKind::ApexNotMember, std::to_string(n) + " is not a nonzero member");
    }
    std::vector<int> out(static_cast<std::size_t>(n), -1);
    int missing = n;
    for (int w = 0; missing > 0; ++w) {
      auto& slot = out[static_cast<std::size_t>(w % n)];
      if (slot < 0 && contains(w)) {
        slot = w;
        --missing;
      }
    }
    return out;
  }

  /// S is contained in `other`.
  bool is_subset_of(const NumericalSemigroup& other) const noexcept {
    if (other.conductor() > conductor()) return false;
    for (int i = 1; i < conductor(); ++i)
      if (contains(i) && !other.contains(i)) return false;
    return true;
  }

  /// "<3,5>"; the naturals print as "<1>".
  std::string to_string() const {
    std::string out = "<";
    for (std::size_t i = 0; i < data_->generators.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(data_->generators[i]);
    }
    return out + ">";
  }

  friend bool operator==(const NumericalSemigroup& a, const NumericalSemigroup& b) noexcept {
    return a.data_ == b.data_ || a.data_->small == b.data_->small;
  }

 private:
  struct Data {
    std::vector<bool> small;  // [0, conductor]
    std::vector<int> generators;
    int conductor = 0;
    int multiplicity = 1;
    int genus = 0;
  };

  explicit NumericalSemigroup(std::shared_ptr<const Data> data) : data_(std::move(data)) {}

  static std::shared_ptr<const Data> naturals_data() {
    static const std::shared_ptr<const Data> n = build(std::vector<bool>{true}, 0);
    return n;
  }

  static std::shared_ptr<const Data> build(std::vector<bool> table, int conductor) {
    auto d = std::make_shared<Data>();
    d->conductor = conductor;
    d->small = std::move(table);
    auto member = [&](int n) { return n >= conductor || d->small[static_cast<std::size_t>(n)]; };
    int m = 1;
    while (!member(m)) ++m;
    d->multiplicity = m;
    d->genus = 0;
    for (int i = 1; i < conductor; ++i)
      if (!member(i)) ++d->genus;
    // Minimal generators lie in [m, max(conductor, 1) + m).
    for (int s = m; s < std::max(conductor, 1) + m; ++s) {
      if (!member(s)) continue;
      bool decomposable = false;
      for (int a = m; 2 * a <= s && !decomposable; ++a) decomposable = member(a) && member(s - a);
      if (!decomposable) d->generators.push_back(s);
    }
    return d;
  }

  std::shared_ptr<const Data> data_;
};

inline bool has_minimal_multiplicity(const NumericalSemigroup& s) noexcept {
  return s.multiplicity() == s.embedding_dimension();
}

struct ArfPatternViolation {
  int x, y, z;
};

/// First triple x >= y >= z of members with x + y - z outside S, scanning x,
/// then y, then z in increasing order. Only x below the conductor can fail.
inline std::optional<ArfPatternViolation> arf_pattern_violation(const NumericalSemigroup& s) {
  const std::vector<int> small = s.small_elements();
  for (int x : small) {
    if (x >= s.conductor()) break;
    for (int y : small) {
      if (y > x) break;
      for (int z : small) {
        if (z > y) break;
        if (!s.contains(x + y - z)) return ArfPatternViolation{x, y, z};
      }
    }
  }
  return std::nullopt;
}

}  // namespace arfkit
