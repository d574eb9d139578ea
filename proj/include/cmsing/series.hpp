#pragma once

#include <vector>

#include "laurent.hpp"

namespace cmsing {

/// First N+1 coefficients of num/den as a power series. Coefficient vectors
/// are dense, index = exponent. `zero` supplies the additive identity for
/// coefficient types that carry context.
template <class C>
std::vector<C> series_quotient(const std::vector<C>& num, const std::vector<C>& den, int N,
                               const C& zero) {
  if (N < 0) throw DomainError("series_quotient: negative truncation order");
  if (den.empty() || den[0] == zero)
    throw DomainError("series_quotient: denominator has zero constant term");
  std::vector<C> out(static_cast<std::size_t>(N) + 1, zero);
  for (int k = 0; k <= N; ++k) {
    C acc = k < static_cast<int>(num.size()) ? num[k] : zero;
    for (int j = 1; j <= k && j < static_cast<int>(den.size()); ++j) acc -= den[j] * out[k - j];
    if (!try_exact_div(acc, den[0], out[k]))
      throw DomainError("series_quotient: coefficient " + std::to_string(k) +
                        " is not exact in the coefficient ring");
  }
  return out;
}

template <class C>
std::vector<C> dense_coefficients(const Laurent<C>& p) {
  if (p.is_zero()) return {};
  if (p.trailing_degree() < 0) throw DomainError("dense_coefficients: negative exponent");
  std::vector<C> v(static_cast<std::size_t>(p.degree()) + 1, C(0));
  for (const auto& [e, c] : p.terms()) v[e] = c;
  return v;
}

template <class C>
Laurent<C> from_dense(const std::vector<C>& v) {
  Laurent<C> p;
  for (std::size_t i = 0; i < v.size(); ++i) p.add_term(static_cast<int>(i), v[i]);
  return p;
}

/// num/den truncated at t^N. Over the integers every coefficient must divide
/// exactly (in practice: den(0) = +-1).
template <class C>
Laurent<C> series_quotient(const Laurent<C>& num, const Laurent<C>& den, int N) {
  if (!num.is_zero() && num.trailing_degree() < 0)
    throw DomainError("series_quotient: numerator has negative exponents");
  if (den.is_zero() || den.trailing_degree() != 0)
    throw DomainError("series_quotient: denominator has zero constant term");
  return from_dense(series_quotient(dense_coefficients(num), dense_coefficients(den), N, C(0)));
}

}  // namespace cmsing
