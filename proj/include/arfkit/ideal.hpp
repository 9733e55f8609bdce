#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "arfkit/error.hpp"
#include "arfkit/semigroup.hpp"

namespace arfkit {

/// A relative ideal E of a numerical semigroup S: a subset of the integers
/// with a least element and E + S contained in E. It is the value set of a
/// rank-one monomial fractional ideal of k[[t^S]].
///
/// Storage is the window [offset, offset + conductor(S)). Everything at or
/// above offset + conductor(S) is a member because offset + S lies in E and
/// S contains every integer from its conductor on.
class RelativeIdeal {
 public:
  /// Validating constructor. `window[i]` is membership of offset + i and must
  /// have exactly conductor(ambient) entries.
  RelativeIdeal(NumericalSemigroup ambient, int offset, std::vector<bool> window)
      : ambient_(std::move(ambient)), offset_(offset), window_(std::move(window)) {
    const int c = ambient_.conductor();
    if (static_cast<int>(window_.size()) != c) {
      throw Error(ErrorKind::InvalidIdeal, "window width " + std::to_string(window_.size()) +
                                               " differs from conductor " + std::to_string(c));
    }
    if (c > 0 && !window_[0]) throw Error(ErrorKind::InvalidIdeal, "offset is not a member");
    if (!translation_closed()) throw Error(ErrorKind::InvalidIdeal, "not closed under adding the ambient");
  }

  /// a + S.
  static RelativeIdeal principal(const NumericalSemigroup& s, int a) {
    std::vector<bool> w(static_cast<std::size_t>(s.conductor()));
    for (int i = 0; i < s.conductor(); ++i) w[static_cast<std::size_t>(i)] = s.contains(i);
    return RelativeIdeal(Trusted{}, s, a, std::move(w));
  }

  /// Builds the ideal whose members are {z in [lo, hi) : member(z)} together
  /// with [hi, infinity). The caller guarantees the result is a relative
  /// ideal of `s`; this is checked in debug builds.
  template <class Pred>
  static RelativeIdeal from_predicate(const NumericalSemigroup& s, int lo, int hi, Pred&& member) {
    int first = lo;
    while (first < hi && !member(first)) ++first;
    const int c = s.conductor();
    std::vector<bool> w(static_cast<std::size_t>(c));
    for (int i = 0; i < c; ++i) {
      const int z = first + i;
      w[static_cast<std::size_t>(i)] = z >= hi || member(z);
    }
    RelativeIdeal out(Trusted{}, s, first, std::move(w));
    ARFKIT_DEBUG_ASSERT(out.translation_closed(), "from_predicate produced a non-ideal");
#ifndef NDEBUG
    // Tail obligation: nothing in [offset + c, hi) may be missing.
    for (int z = first + c; z < hi; ++z) ARFKIT_DEBUG_ASSERT(member(z), "member missing past the window");
#endif
    return out;
  }

  const NumericalSemigroup& ambient() const noexcept { return ambient_; }
  int offset() const noexcept { return offset_; }
  int width() const noexcept { return static_cast<int>(window_.size()); }
  const std::vector<bool>& window() const noexcept { return window_; }

  bool contains(long long z) const noexcept {
    if (z < offset_) return false;
    const long long i = z - offset_;
    if (i >= width()) return true;
    return window_[static_cast<std::size_t>(i)];
  }

  /// Members in [offset, offset + width).
  std::vector<int> small_members() const {
    std::vector<int> out;
    for (int i = 0; i < width(); ++i)
      if (window_[static_cast<std::size_t>(i)]) out.push_back(offset_ + i);
    return out;
  }

  /// The window as a string of '0'/'1', one character per position.
  std::string window_string() const {
    std::string out;
    out.reserve(window_.size());
    for (bool b : window_) out += b ? '1' : '0';
    return out;
  }

  /// "{3,5,6,8,...}": the window members, then the first tail member.
  std::string to_string() const {
    std::string out = "{";
    for (int z : small_members()) out += std::to_string(z) + ",";
    return out + std::to_string(offset_ + width()) + ",...}";
  }

  /// a + E.
  RelativeIdeal translated(int a) const { return RelativeIdeal(Trusted{}, ambient_, offset_ + a, window_); }

  friend bool operator==(const RelativeIdeal& a, const RelativeIdeal& b) noexcept {
    return a.offset_ == b.offset_ && a.window_ == b.window_ && a.ambient_ == b.ambient_;
  }

 private:
  struct Trusted {};
  RelativeIdeal(Trusted, NumericalSemigroup ambient, int offset, std::vector<bool> window)
      : ambient_(std::move(ambient)), offset_(offset), window_(std::move(window)) {}

  bool translation_closed() const noexcept {
    const int c = width();
    for (int i = 0; i < c; ++i) {
      if (!window_[static_cast<std::size_t>(i)]) continue;
      for (int g : ambient_.minimal_generators()) {
        if (i + g >= c) break;
        if (!window_[static_cast<std::size_t>(i + g)]) return false;
      }
    }
    return true;
  }

  NumericalSemigroup ambient_;
  int offset_ = 0;
  std::vector<bool> window_;
};

namespace detail {

inline void require_same_ambient(const RelativeIdeal& e, const RelativeIdeal& f) {
  if (!(e.ambient() == f.ambient())) {
    throw Error(ErrorKind::AmbientMismatch,
                "ideals over " + e.ambient().to_string() + " and " + f.ambient().to_string());
  }
}

}  // namespace detail

/// S viewed as an ideal of itself.
inline RelativeIdeal unit_ideal(const NumericalSemigroup& s) { return RelativeIdeal::principal(s, 0); }

/// Union of the translates a + S over a in elems.
inline RelativeIdeal ideal_from_elements(const NumericalSemigroup& s, std::span<const int> elems) {
  if (elems.empty()) throw Error(ErrorKind::EmptyElements, "element list is empty");
  const int lo = *std::min_element(elems.begin(), elems.end());
  const int hi = lo + s.conductor();
  return RelativeIdeal::from_predicate(s, lo, hi, [&](int z) {
    return std::any_of(elems.begin(), elems.end(), [&](int a) { return s.contains(static_cast<long long>(z) - a); });
  });
}

inline RelativeIdeal ideal_from_elements(const NumericalSemigroup& s, std::initializer_list<int> elems) {
  return ideal_from_elements(s, std::span<const int>(elems.begin(), elems.size()));
}

/// a + E.
inline RelativeIdeal shift(const RelativeIdeal& e, int a) { return e.translated(a); }

struct Normalized {
  RelativeIdeal ideal;  // offset 0
  int shift;            // original = shift + ideal
};

/// Rank-one monomial modules are isomorphic iff their value sets are
/// translates, so the offset-0 translate is a canonical isomorphism class.
inline Normalized normalize(const RelativeIdeal& e) { return {shift(e, -e.offset()), e.offset()}; }

inline bool isomorphic(const RelativeIdeal& e, const RelativeIdeal& f) {
  return e.window() == f.window() && e.ambient() == f.ambient();
}

/// E + F = {e + f}.
inline RelativeIdeal add(const RelativeIdeal& e, const RelativeIdeal& f) {
  detail::require_same_ambient(e, f);
  const int lo = e.offset() + f.offset();
  const int hi = lo + e.width();
  return RelativeIdeal::from_predicate(e.ambient(), lo, hi, [&](int z) {
    for (int x = e.offset(); x <= z - f.offset(); ++x)
      if (e.contains(x) && f.contains(z - x)) return true;
    return false;
  });
}

/// E - F = {z : z + F contained in E}.
inline RelativeIdeal colon(const RelativeIdeal& e, const RelativeIdeal& f) {
  detail::require_same_ambient(e, f);
  const int c = e.width();
  // No z below offset(E) - offset(F) qualifies; the scan starts one conductor
  // lower anyway. Every z >= offset(E) - offset(F) + c qualifies because then
  // z + F lies entirely in the tail of E.
  const int lo = e.offset() - f.offset() - c;
  const int hi = e.offset() - f.offset() + c;
  const int tail = e.offset() + c;
  return RelativeIdeal::from_predicate(e.ambient(), lo, hi, [&](int z) {
    for (int y = f.offset(); z + y < tail; ++y)
      if (f.contains(y) && !e.contains(z + y)) return false;
    return true;
  });
}

/// Value-level Hom(M, R): S - E.
inline RelativeIdeal dual(const RelativeIdeal& e) { return colon(unit_ideal(e.ambient()), e); }

inline RelativeIdeal bidual(const RelativeIdeal& e) { return dual(dual(e)); }

inline bool is_reflexive(const RelativeIdeal& e) { return bidual(e) == e; }

inline bool is_self_dual(const RelativeIdeal& e) { return isomorphic(dual(e), e); }

/// (S - E) + E: the ideal generated by the images of all maps E -> S.
inline RelativeIdeal trace(const RelativeIdeal& e) { return add(dual(e), e); }

/// Set inclusion; the two ideals may live over different ambients.
inline bool is_subset(const RelativeIdeal& e, const RelativeIdeal& f) noexcept {
  if (e.offset() < f.offset()) return false;
  const int end = std::max(e.offset() + e.width(), f.offset() + f.width());
  for (int z = e.offset(); z < end; ++z)
    if (e.contains(z) && !f.contains(z)) return false;
  return true;
}

/// Equality of member sets, ignoring the ambient.
inline bool same_members(const RelativeIdeal& e, const RelativeIdeal& f) noexcept {
  return is_subset(e, f) && is_subset(f, e);
}

struct Stability {
  bool stable = false;
  std::optional<int> witness;
};

/// Value-level form of "xI = I^2": some a in E with a + E = E + E. The search
/// covers E within [offset, offset + conductor].
inline Stability is_stable(const RelativeIdeal& e) {
  const RelativeIdeal square = add(e, e);
  for (int a = e.offset(); a <= e.offset() + e.width(); ++a) {
    if (e.contains(a) && shift(e, a) == square) return {true, a};
  }
  return {};
}

/// Reads an offset-0 relative ideal that is additively closed as a
/// numerical semigroup.
inline NumericalSemigroup to_semigroup(const RelativeIdeal& e) {
  if (e.offset() != 0) throw Error(ErrorKind::NotASemigroup, "offset " + std::to_string(e.offset()) + " is not 0");
  return NumericalSemigroup::from_membership(e.window());
}

/// The over-semigroup T, containing S, viewed as a relative ideal of S.
inline RelativeIdeal as_ideal_of(const NumericalSemigroup& t, const NumericalSemigroup& s) {
  if (!s.is_subset_of(t)) {
    throw Error(ErrorKind::NotAnExtension, t.to_string() + " does not contain " + s.to_string());
  }
  return RelativeIdeal::from_predicate(s, 0, t.conductor(), [&](int z) { return t.contains(z); });
}

/// E - E, which is always a semigroup containing the ambient.
inline NumericalSemigroup end_semigroup(const RelativeIdeal& e) { return to_semigroup(colon(e, e)); }

/// Union over n of nE - nE.
///
/// The colons increase with n and are bounded by the naturals, so there are
/// at most genus(S) strict steps. Iteration stops after two consecutive
/// equal colons once n exceeds genus(S); since the reduction number of E is
/// below multiplicity(S) <= genus(S) + 1, the colon is final from there on.
inline NumericalSemigroup blowup_ideal(const RelativeIdeal& e) {
  const int genus = e.ambient().genus();
  RelativeIdeal power = e;
  RelativeIdeal current = colon(power, power);
  int equal_rounds = 0;
  for (int n = 1;; ++n) {
    power = add(power, e);
    RelativeIdeal next = colon(power, power);
    equal_rounds = next == current ? equal_rounds + 1 : 0;
    current = std::move(next);
    if (equal_rounds >= 2 && n > genus) break;
  }
  ARFKIT_DEBUG_ASSERT(add(power, e) == shift(power, e.offset()), "power of E is not yet stable");
  return to_semigroup(current);
}

/// {s in S : s >= v}.
inline RelativeIdeal truncation_ideal(const NumericalSemigroup& s, int v) {
  if (v < 0) throw Error(ErrorKind::NotAnIdealOfS, "truncation level " + std::to_string(v) + " is negative");
  return RelativeIdeal::from_predicate(s, v, v + s.conductor(), [&](int z) { return s.contains(z); });
}

/// E (an ideal inside S) equals the truncation of S at its least element.
inline bool is_integrally_closed(const RelativeIdeal& e) {
  if (!is_subset(e, unit_ideal(e.ambient()))) {
    throw Error(ErrorKind::NotAnIdealOfS, e.to_string() + " is not contained in " + e.ambient().to_string());
  }
  return e == truncation_ideal(e.ambient(), e.offset());
}

/// S - T for an over-semigroup T of S: the largest set that is an ideal of
/// both.
inline RelativeIdeal conductor_ideal(const NumericalSemigroup& s, const NumericalSemigroup& t) {
  return colon(unit_ideal(s), as_ideal_of(t, s));
}

/// E + T is contained in E.
inline bool is_module_over(const RelativeIdeal& e, const NumericalSemigroup& t) {
  if (!e.ambient().is_subset_of(t)) {
    throw Error(ErrorKind::NotAnExtension, t.to_string() + " does not contain " + e.ambient().to_string());
  }
  const int tail = e.offset() + e.width();
  for (int x : e.small_members()) {
    for (int y = 1; x + y < tail; ++y)
      if (t.contains(y) && !e.contains(x + y)) return false;
  }
  return true;
}

/// Same member set, read as an ideal of the smaller semigroup s.
inline RelativeIdeal restrict_scalars(const RelativeIdeal& e, const NumericalSemigroup& s) {
  if (!s.is_subset_of(e.ambient())) {
    throw Error(ErrorKind::NotAnExtension, e.ambient().to_string() + " does not contain " + s.to_string());
  }
  return RelativeIdeal::from_predicate(s, e.offset(), e.offset() + e.width(), [&](int z) { return e.contains(z); });
}

/// Same member set, read as an ideal of the over-semigroup t. E must be a
/// t-module.
inline RelativeIdeal extend_scalars(const RelativeIdeal& e, const NumericalSemigroup& t) {
  if (!is_module_over(e, t)) throw Error(ErrorKind::InvalidIdeal, e.to_string() + " is not a " + t.to_string() + "-module");
  return RelativeIdeal::from_predicate(t, e.offset(), e.offset() + e.width(), [&](int z) { return e.contains(z); });
}

}  // namespace arfkit
