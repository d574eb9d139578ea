#pragma once

#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "partition.hpp"

namespace cmsing {

/// Ordered tuple (lambda^0, ..., lambda^{m-1}) of partitions.
class Multipartition {
 public:
  Multipartition() = default;
  explicit Multipartition(std::vector<Partition> components) : comps_(std::move(components)) {}
  Multipartition(std::initializer_list<Partition> components) : comps_(components) {}

  const std::vector<Partition>& components() const noexcept { return comps_; }
  const Partition& operator[](std::size_t i) const { return comps_.at(i); }
  int m() const noexcept { return static_cast<int>(comps_.size()); }
  int size() const {
    int s = 0;
    for (const auto& c : comps_) s += c.size();
    return s;
  }

  friend bool operator==(const Multipartition&, const Multipartition&) = default;

 private:
  std::vector<Partition> comps_;
};

/// Component-wise ordering used for enumeration and canonical representatives.
inline bool precedes(const Multipartition& a, const Multipartition& b) {
  for (std::size_t i = 0; i < a.components().size() && i < b.components().size(); ++i) {
    if (a[i] == b[i]) continue;
    return precedes(a[i], b[i]);
  }
  return a.m() < b.m();
}

/// All m-multipartitions of n, in `precedes` order.
inline std::vector<Multipartition> multipartitions(int m, int n) {
  if (m < 1) throw DomainError("multipartitions: m must be positive");
  if (n < 0) throw DomainError("multipartitions: n must be nonnegative");
  std::vector<std::vector<Partition>> by_size(n + 1);
  for (int s = 0; s <= n; ++s) by_size[s] = partitions(s);

  std::vector<Multipartition> out;
  std::vector<Partition> cur;
  auto rec = [&](auto&& self, int remaining) -> void {
    if (static_cast<int>(cur.size()) == m - 1) {
      for (const auto& p : by_size[remaining]) {
        cur.push_back(p);
        out.emplace_back(cur);
        cur.pop_back();
      }
      return;
    }
    for (int s = remaining; s >= 0; --s)
      for (const auto& p : by_size[s]) {
        cur.push_back(p);
        self(self, remaining - s);
        cur.pop_back();
      }
  };
  rec(rec, n);
  return out;
}

/// Rotates components by d positions: component i moves to i + d (mod m).
inline Multipartition shift(const Multipartition& mu, int d) {
  const int m = mu.m();
  if (m == 0) return mu;
  std::vector<Partition> out(m);
  const int s = ((d % m) + m) % m;
  for (int i = 0; i < m; ++i) out[(i + s) % m] = mu[i];
  return Multipartition(std::move(out));
}

/// Orbit of a multipartition under the cyclic group generated by shift(., d),
/// with p * d = m.
struct MultipartitionOrbit {
  std::vector<Multipartition> members;  // in `precedes` order
  Multipartition canonical_rep;
  int p = 1;
  int d = 1;
  int stab_order = 1;

  int size() const noexcept { return static_cast<int>(members.size()); }
};

inline MultipartitionOrbit orbit_of(const Multipartition& mu, int p, int d) {
  if (p < 1 || d < 1 || p * d != mu.m())
    throw DomainError("orbit_of: need p * d = m with p, d positive");
  MultipartitionOrbit o;
  o.p = p;
  o.d = d;
  Multipartition cur = mu;
  for (int i = 0; i < p; ++i) {
    bool seen = false;
    for (const auto& x : o.members) seen = seen || x == cur;
    if (!seen) o.members.push_back(cur);
    cur = shift(cur, d);
  }
  if (!(cur == mu)) throw InvariantViolation("orbit_of: p-fold shift is not the identity");
  std::sort(o.members.begin(), o.members.end(),
            [](const auto& a, const auto& b) { return precedes(a, b); });
  o.canonical_rep = o.members.front();
  o.stab_order = p / o.size();
  if (o.stab_order * o.size() != p) throw InvariantViolation("orbit size does not divide p");
  return o;
}

/// Distinct orbits of all m-multipartitions of n, ordered by representative.
inline std::vector<MultipartitionOrbit> orbits(int m, int p, int n) {
  if (m % p != 0) throw DomainError("orbits: p must divide m");
  const int d = m / p;
  std::vector<MultipartitionOrbit> out;
  for (const auto& mu : multipartitions(m, n)) {
    MultipartitionOrbit o = orbit_of(mu, p, d);
    if (o.canonical_rep == mu) out.push_back(std::move(o));
  }
  return out;
}

/// r(mu) = sum_i i |mu^i|.
inline int r_stat(const Multipartition& mu) {
  int r = 0;
  for (int i = 0; i < mu.m(); ++i) r += i * mu[i].size();
  return r;
}

/// Sum over orbit members of t^{r(member)}, by direct enumeration.
inline LaurentPoly R_poly(const MultipartitionOrbit& orbit) {
  LaurentPoly r;
  for (const auto& mu : orbit.members) r.add_term(r_stat(mu), Integer(1));
  return r;
}

/// (t)_(n) * prod_i t^{n(lambda^i)} / H_{lambda^i}(t), unreduced.
inline GradedProduct I_poly(const Multipartition& lambda) {
  GradedProduct g = t_factorial(lambda.size());
  for (const auto& c : lambda.components()) {
    for (int h : hook_multiset(c)) g.mul_binomial(h, -1);
    g.shift += n_stat(c);
  }
  return g;
}

// ---------------------------------------------------------------------------
// Text format: "2,2|-|1" for ((2,2), empty, (1)).

inline std::string render(const Partition& p) {
  if (p.empty()) return "-";
  std::string s;
  for (std::size_t i = 0; i < p.parts().size(); ++i) {
    if (i) s += ',';
    s += std::to_string(p.parts()[i]);
  }
  return s;
}

inline std::string render(const Multipartition& mu) {
  std::string s;
  for (int i = 0; i < mu.m(); ++i) {
    if (i) s += '|';
    s += render(mu[i]);
  }
  return s;
}

inline Partition parse_partition(std::string_view text) {
  if (text == "-") return {};
  std::vector<int> parts;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    std::string_view tok = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
    if (tok.empty() || tok.find_first_not_of("0123456789") != tok.npos)
      throw ParseError("partition \"" + std::string(text) + "\": bad part \"" + std::string(tok) + "\"");
    parts.push_back(std::stoi(std::string(tok)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  try {
    return Partition(std::move(parts));
  } catch (const DomainError& e) {
    throw ParseError("partition \"" + std::string(text) + "\": " + e.what());
  }
}

inline Multipartition parse_multipartition(std::string_view text) {
  std::vector<Partition> comps;
  std::size_t start = 0;
  while (true) {
    std::size_t bar = text.find('|', start);
    comps.push_back(parse_partition(text.substr(start, bar == text.npos ? text.npos : bar - start)));
    if (bar == text.npos) break;
    start = bar + 1;
  }
  return Multipartition(std::move(comps));
}

}  // namespace cmsing
