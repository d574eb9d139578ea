#pragma once

#include <map>
#include <mutex>
#include <vector>

#include "division.hpp"

namespace cmsing {

namespace detail {

inline std::vector<int> divisors(int a) {
  std::vector<int> ds;
  for (int k = 1; k <= a; ++k)
    if (a % k == 0) ds.push_back(k);
  return ds;
}

}  // namespace detail

/// The k-th cyclotomic polynomial, obtained by dividing t^k - 1 by Phi_d for
/// every proper divisor d of k. Results are cached process-wide.
inline LaurentPoly cyclotomic(int k) {
  if (k < 1) throw DomainError("cyclotomic: index must be positive");
  static std::mutex mu;
  static std::map<int, LaurentPoly> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(k); it != cache.end()) return it->second;
  }
  LaurentPoly p = LaurentPoly::t(k) - LaurentPoly(1);
  for (int d : detail::divisors(k))
    if (d < k) p = exact_quotient(p, cyclotomic(d));
  std::lock_guard lock(mu);
  return cache.emplace(k, std::move(p)).first->second;
}

/// Multiplicities of cyclotomic factors, k -> e for Phi_k^e.
class CycloFactorisation {
 public:
  const std::map<int, int>& multiplicities() const noexcept { return mult_; }

  void add(int k, int e) {
    if (e == 0) return;
    int& slot = mult_[k];
    slot += e;
    if (slot == 0) mult_.erase(k);
  }

  // (t^a - 1)^e = prod_{k | a} Phi_k^e
  void add_binomial(int a, int e) {
    for (int k : detail::divisors(a)) add(k, e);
  }

  int multiplicity(int k) const {
    auto it = mult_.find(k);
    return it == mult_.end() ? 0 : it->second;
  }

  // First index with a negative multiplicity, or 0.
  int first_negative() const {
    for (const auto& [k, e] : mult_)
      if (e < 0) return k;
    return 0;
  }

  LaurentPoly expand() const {
    LaurentPoly r(1);
    for (const auto& [k, e] : mult_) {
      if (e < 0) throw NotAPolynomial(k, e);
      r *= cyclotomic(k).pow(e);
    }
    return r;
  }

 private:
  std::map<int, int> mult_;
};

/// scalar * t^shift * prod_a (1 - t^a)^{e_a} with e_a of either sign.
///
/// Kept factored until a coefficient is actually needed; reduction cancels
/// cyclotomic factors before anything is expanded.
struct GradedProduct {
  Integer scalar = 1;
  std::map<int, int> factors;
  int shift = 0;

  static GradedProduct one() { return {}; }
  static GradedProduct binomial(int a, int e = 1) {
    GradedProduct g;
    g.mul_binomial(a, e);
    return g;
  }

  GradedProduct& mul_binomial(int a, int e = 1) {
    if (a < 1) throw DomainError("GradedProduct: factor (1 - t^a) needs a >= 1");
    if (e == 0) return *this;
    int& slot = factors[a];
    slot += e;
    if (slot == 0) factors.erase(a);
    return *this;
  }

  GradedProduct& operator*=(const GradedProduct& o) {
    scalar *= o.scalar;
    shift += o.shift;
    for (const auto& [a, e] : o.factors) mul_binomial(a, e);
    return *this;
  }
  friend GradedProduct operator*(GradedProduct a, const GradedProduct& b) { return a *= b; }

  // Reciprocal of the t-dependent part; the scalar must be a unit.
  GradedProduct inverse() const {
    if (scalar != 1 && scalar != -1) throw DomainError("GradedProduct: scalar is not a unit");
    GradedProduct g;
    g.scalar = scalar;
    g.shift = -shift;
    for (const auto& [a, e] : factors) g.factors.emplace(a, -e);
    return g;
  }

  // t -> t^m
  GradedProduct substitute_power(int m) const {
    if (m < 1) throw DomainError("substitute_power needs m >= 1");
    GradedProduct g;
    g.scalar = scalar;
    g.shift = shift * m;
    for (const auto& [a, e] : factors) g.mul_binomial(a * m, e);
    return g;
  }

  // (1 - t^a) = -(t^a - 1); returns the factorisation and the accumulated sign.
  CycloFactorisation factorisation(int& sign) const {
    CycloFactorisation cf;
    int parity = 0;
    for (const auto& [a, e] : factors) {
      cf.add_binomial(a, e);
      parity += e;
    }
    sign = (parity % 2 == 0) ? 1 : -1;
    return cf;
  }

  friend bool operator==(const GradedProduct&, const GradedProduct&) = default;
};

/// Cancels, checks for negative cyclotomic multiplicities and expands.
inline LaurentPoly graded_reduce(const GradedProduct& gp) {
  int sign = 1;
  CycloFactorisation cf = gp.factorisation(sign);
  if (int k = cf.first_negative()) throw NotAPolynomial(k, cf.multiplicity(k));
  LaurentPoly r = cf.expand() * Integer(gp.scalar * sign);
  return r.shifted(gp.shift);
}

/// gp * cofactor, where negative cyclotomic multiplicities of gp are first
/// absorbed by exact division of the cofactor.
inline LaurentPoly graded_reduce(const GradedProduct& gp, LaurentPoly cofactor) {
  int sign = 1;
  CycloFactorisation cf = gp.factorisation(sign);
  CycloFactorisation positive;
  for (const auto& [k, e] : cf.multiplicities()) {
    if (e > 0) {
      positive.add(k, e);
      continue;
    }
    const LaurentPoly phi = cyclotomic(k);
    for (int i = 0; i < -e; ++i) {
      auto r = divide_exact(cofactor, phi);
      if (!r.exact()) throw NotAPolynomial(k, e + i);
      cofactor = std::move(r.quotient);
    }
  }
  LaurentPoly r = positive.expand() * cofactor * Integer(gp.scalar * sign);
  return r.shifted(gp.shift);
}

}  // namespace cmsing
