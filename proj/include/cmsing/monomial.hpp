#pragma once

#include <algorithm>
#include <compare>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "cyclo_matrix.hpp"
#include "group_spec.hpp"

namespace cmsing {

inline constexpr long long kDefaultMaxOrder = 1'000'000;

/// Element of G(m,p,n) acting on C^n by e_i -> zeta^{exps[i]} e_{perm[i]}.
struct MonomialElement {
  std::vector<int> perm;
  std::vector<int> exps;
  int m = 1;

  static MonomialElement identity(int n, int m) {
    MonomialElement e;
    e.perm.resize(n);
    std::iota(e.perm.begin(), e.perm.end(), 0);
    e.exps.assign(n, 0);
    e.m = m;
    return e;
  }

  int rank() const noexcept { return static_cast<int>(perm.size()); }

  // Matrix product this * o.
  MonomialElement operator*(const MonomialElement& o) const {
    MonomialElement r;
    r.m = m;
    const int n = rank();
    r.perm.resize(n);
    r.exps.resize(n);
    for (int i = 0; i < n; ++i) {
      r.perm[i] = perm[o.perm[i]];
      r.exps[i] = (o.exps[i] + exps[o.perm[i]]) % m;
    }
    return r;
  }

  MonomialElement inverse() const {
    MonomialElement r;
    r.m = m;
    const int n = rank();
    r.perm.resize(n);
    r.exps.resize(n);
    for (int i = 0; i < n; ++i) {
      r.perm[perm[i]] = i;
      r.exps[perm[i]] = (m - exps[i]) % m;
    }
    return r;
  }

  CycloMatrix matrix() const {
    const int n = rank();
    CycloMatrix a(n, n, m);
    for (int i = 0; i < n; ++i) a(perm[i], i) = CycloNumber::root(m, exps[i]);
    return a;
  }

  CycloNumber trace() const {
    CycloNumber s = CycloNumber::zero(m);
    for (int i = 0; i < rank(); ++i)
      if (perm[i] == i) s += CycloNumber::root(m, exps[i]);
    return s;
  }

  friend bool operator==(const MonomialElement&, const MonomialElement&) = default;
  friend auto operator<=>(const MonomialElement& a, const MonomialElement& b) {
    if (auto c = a.perm <=> b.perm; c != 0) return c;
    return a.exps <=> b.exps;
  }
};

inline void check_order_bound(const GroupSpec& g, long long max_order) {
  if (g.order() > max_order)
    throw Refusal(g.id() + " has order " + g.order().str() + "; element enumeration needs --max-order >= " +
                  g.order().str() + " (current bound " + std::to_string(max_order) + ")");
}

/// Visits every element once: permutations in lexicographic order, then
/// exponent vectors in lexicographic order with sum divisible by p.
inline void for_each_element(const GroupSpec& g, const std::function<void(const MonomialElement&)>& fn,
                             long long max_order = kDefaultMaxOrder) {
  check_order_bound(g, max_order);
  MonomialElement e = MonomialElement::identity(g.n, g.m);
  do {
    std::fill(e.exps.begin(), e.exps.end(), 0);
    while (true) {
      int sum = std::accumulate(e.exps.begin(), e.exps.end(), 0);
      if (sum % g.p == 0) fn(e);
      int i = g.n - 1;
      while (i >= 0 && e.exps[i] == g.m - 1) e.exps[i--] = 0;
      if (i < 0) break;
      ++e.exps[i];
    }
  } while (std::next_permutation(e.perm.begin(), e.perm.end()));
}

inline std::vector<MonomialElement> elements(const GroupSpec& g, long long max_order = kDefaultMaxOrder) {
  std::vector<MonomialElement> out;
  for_each_element(g, [&](const MonomialElement& e) { out.push_back(e); }, max_order);
  return out;
}

/// A conjugacy class of reflections with its common non-trivial eigenvalue.
struct ReflectionClass {
  std::vector<MonomialElement> members;  // sorted
  CycloNumber zeta;
};

inline bool is_reflection(const CycloMatrix& a) {
  return (CycloMatrix::identity(a.rows(), a.modulus()) - a).rank() == 1;
}

/// Reflections, detected as rank(1 - w) = 1, grouped by brute-force
/// conjugation. Classes are ordered by their least member.
inline std::vector<ReflectionClass> reflections(const GroupSpec& g, long long max_order = kDefaultMaxOrder) {
  const auto all = elements(g, max_order);
  std::vector<MonomialElement> refl;
  for (const auto& w : all)
    if (is_reflection(w.matrix())) refl.push_back(w);

  std::vector<ReflectionClass> classes;
  std::set<MonomialElement> assigned;
  for (const auto& r : refl) {
    if (assigned.count(r)) continue;
    std::set<MonomialElement> cls;
    for (const auto& x : all) cls.insert(x * r * x.inverse());
    ReflectionClass c;
    c.members.assign(cls.begin(), cls.end());
    // trace = (n - 1) + zeta
    c.zeta = r.trace() - CycloNumber::rational(g.m, g.n - 1);
    for (const auto& s : c.members) {
      if (!is_reflection(s.matrix())) throw InvariantViolation("conjugate of a reflection is not a reflection");
      assigned.insert(s);
    }
    classes.push_back(std::move(c));
  }
  return classes;
}

/// (1/|W|) sum_w |chi(w)|^2 for the defining monomial representation.
inline Rational character_norm(const GroupSpec& g, long long max_order = kDefaultMaxOrder) {
  CycloNumber s = CycloNumber::zero(g.m);
  for_each_element(g, [&](const MonomialElement& w) {
    const CycloNumber chi = w.trace();
    s += chi * chi.conj();
  }, max_order);
  return s.rational_value() / Rational(g.order());
}

inline bool reflection_rep_irreducible(const GroupSpec& g, long long max_order = kDefaultMaxOrder) {
  return character_norm(g, max_order) == 1;
}

}  // namespace cmsing
