#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <string>
#include <vector>

#include "cyclotomic.hpp"

namespace cmsing {

/// Q(zeta_m) presented as Q[z] / Phi_m(z).
struct CycloField {
  int m = 1;
  int phi = 1;
  std::vector<Rational> modulus;               // Phi_m coefficients, ascending, monic
  std::vector<std::vector<Rational>> powers;   // z^e reduced, e in [0, m)
  std::vector<int> units;                      // j in [1, m) coprime to m (j = 1 when m = 1)
};

using CycloFieldPtr = std::shared_ptr<const CycloField>;

namespace detail {

inline void reduce_mod(std::vector<Rational>& c, const CycloField& f) {
  for (int k = static_cast<int>(c.size()) - 1; k >= f.phi; --k) {
    if (c[k] == 0) continue;
    const Rational lead = c[k];
    for (int i = 0; i < f.phi; ++i) c[k - f.phi + i] -= lead * f.modulus[i];
    c[k] = 0;
  }
  c.resize(f.phi);
}

}  // namespace detail

inline CycloFieldPtr cyclo_field(int m) {
  if (m < 1) throw DomainError("cyclo_field: modulus must be positive");
  static std::mutex mu;
  static std::map<int, CycloFieldPtr> cache;
  std::lock_guard lock(mu);
  if (auto it = cache.find(m); it != cache.end()) return it->second;

  auto f = std::make_shared<CycloField>();
  f->m = m;
  const LaurentPoly phi_poly = cyclotomic(m);
  f->phi = phi_poly.degree();
  f->modulus.assign(f->phi + 1, Rational(0));
  for (const auto& [e, c] : phi_poly.terms()) f->modulus[e] = Rational(c);
  for (int e = 0; e < m; ++e) {
    std::vector<Rational> v(static_cast<std::size_t>(std::max(e + 1, f->phi)), Rational(0));
    v[e] = 1;
    detail::reduce_mod(v, *f);
    f->powers.push_back(std::move(v));
  }
  for (int j = 1; j <= std::max(1, m - 1); ++j)
    if (std::gcd(j, m) == 1) f->units.push_back(j);
  return cache.emplace(m, std::move(f)).first->second;
}

/// Element of Q(zeta_m), stored as its reduced residue polynomial.
class CycloNumber {
 public:
  CycloNumber() : CycloNumber(cyclo_field(1), Rational(0)) {}
  CycloNumber(CycloFieldPtr f, const Rational& q) : f_(std::move(f)), c_(f_->phi, Rational(0)) {
    c_[0] = q;
  }

  static CycloNumber zero(int m) { return {cyclo_field(m), Rational(0)}; }
  static CycloNumber one(int m) { return {cyclo_field(m), Rational(1)}; }
  static CycloNumber rational(int m, const Rational& q) { return {cyclo_field(m), q}; }
  // zeta_m^e for any integer e
  static CycloNumber root(int m, long long e) {
    CycloNumber z = zero(m);
    z.c_ = z.f_->powers[static_cast<std::size_t>(((e % m) + m) % m)];
    return z;
  }

  int modulus() const noexcept { return f_->m; }
  const CycloFieldPtr& field() const noexcept { return f_; }
  const std::vector<Rational>& residue() const noexcept { return c_; }

  CycloNumber zero_like() const { return {f_, Rational(0)}; }
  CycloNumber one_like() const { return {f_, Rational(1)}; }

  bool is_zero() const {
    for (const auto& x : c_)
      if (x != 0) return false;
    return true;
  }
  bool is_rational() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
      if (c_[i] != 0) return false;
    return true;
  }
  Rational rational_value() const {
    if (!is_rational()) throw DomainError("cyclotomic number is not rational: " + str());
    return c_[0];
  }

  CycloNumber& operator+=(const CycloNumber& o) {
    same_field(o);
    for (int i = 0; i < f_->phi; ++i) c_[i] += o.c_[i];
    return *this;
  }
  CycloNumber& operator-=(const CycloNumber& o) {
    same_field(o);
    for (int i = 0; i < f_->phi; ++i) c_[i] -= o.c_[i];
    return *this;
  }
  CycloNumber& operator*=(const CycloNumber& o) { return *this = *this * o; }
  CycloNumber& operator*=(const Rational& q) {
    for (auto& x : c_) x *= q;
    return *this;
  }
  CycloNumber& operator/=(const CycloNumber& o) { return *this *= o.inverse(); }

  friend CycloNumber operator+(CycloNumber a, const CycloNumber& b) { return a += b; }
  friend CycloNumber operator-(CycloNumber a, const CycloNumber& b) { return a -= b; }
  friend CycloNumber operator-(CycloNumber a) {
    for (auto& x : a.c_) x = -x;
    return a;
  }
  friend CycloNumber operator*(const CycloNumber& a, const CycloNumber& b) {
    a.same_field(b);
    const int phi = a.f_->phi;
    std::vector<Rational> prod(static_cast<std::size_t>(2 * phi - 1), Rational(0));
    for (int i = 0; i < phi; ++i) {
      if (a.c_[i] == 0) continue;
      for (int j = 0; j < phi; ++j)
        if (b.c_[j] != 0) prod[i + j] += a.c_[i] * b.c_[j];
    }
    detail::reduce_mod(prod, *a.f_);
    CycloNumber r = a.zero_like();
    r.c_ = std::move(prod);
    return r;
  }
  friend CycloNumber operator*(CycloNumber a, const Rational& q) { return a *= q; }
  friend CycloNumber operator*(const Rational& q, CycloNumber a) { return a *= q; }
  friend CycloNumber operator/(const CycloNumber& a, const CycloNumber& b) { return a * b.inverse(); }

  friend bool operator==(const CycloNumber& a, const CycloNumber& b) {
    return a.f_->m == b.f_->m && a.c_ == b.c_;
  }

  // Galois automorphism zeta -> zeta^j, gcd(j, m) = 1.
  CycloNumber galois(int j) const {
    CycloNumber r = zero_like();
    const int m = f_->m;
    for (int i = 0; i < f_->phi; ++i) {
      if (c_[i] == 0) continue;
      const auto& pw = f_->powers[static_cast<std::size_t>((static_cast<long long>(i) * j % m + m) % m)];
      for (int k = 0; k < f_->phi; ++k) r.c_[k] += c_[i] * pw[k];
    }
    return r;
  }
  CycloNumber conj() const { return galois(f_->m - 1); }

  // Norm-based inverse: the product of the non-identity conjugates over N(a).
  CycloNumber inverse() const {
    if (is_zero()) throw DomainError("cyclotomic division by zero");
    CycloNumber others = one_like();
    for (int j : f_->units)
      if (j != 1) others *= galois(j);
    const CycloNumber norm = *this * others;
    if (!norm.is_rational()) throw InvariantViolation("cyclotomic norm is not rational");
    return others * Rational(1 / norm.c_[0]);
  }

  // Image under Q(zeta_m) -> Q(zeta_{m*k}), zeta_m -> zeta_{mk}^k.
  CycloNumber embed(int target) const {
    const int m = f_->m;
    if (target % m != 0) throw DomainError("embed: target modulus must be a multiple");
    const int k = target / m;
    CycloNumber r = zero(target);
    for (int i = 0; i < f_->phi; ++i)
      if (c_[i] != 0) r += root(target, static_cast<long long>(i) * k) * c_[i];
    return r;
  }

  // "a + b*z + c*z^2" with z = zeta_m, ascending powers.
  std::string str() const {
    std::string s;
    for (int i = 0; i < f_->phi; ++i) {
      if (c_[i] == 0) continue;
      Rational v = c_[i];
      const bool neg = v < 0;
      if (neg) v = -v;
      s += s.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
      if (i == 0)
        s += v.str();
      else {
        if (v != 1) s += v.str() + "*";
        s += i == 1 ? std::string("z") : "z^" + std::to_string(i);
      }
    }
    return s.empty() ? "0" : s;
  }

 private:
  void same_field(const CycloNumber& o) const {
    if (f_->m != o.f_->m)
      throw DomainError("cyclotomic moduli differ: " + std::to_string(f_->m) + " vs " +
                        std::to_string(o.f_->m));
  }

  CycloFieldPtr f_;
  std::vector<Rational> c_;
};

inline bool try_exact_div(const CycloNumber& a, const CycloNumber& b, CycloNumber& out) {
  out = a / b;
  return true;
}

}  // namespace cmsing
