#pragma once

#include <map>
#include <string>
#include <vector>

#include "fake_degree.hpp"
#include "monomial.hpp"
#include "series.hpp"

namespace cmsing {

namespace detail {

using CycloSeries = std::vector<CycloNumber>;

inline CycloSeries series_mul(const CycloSeries& a, const CycloSeries& b, const CycloNumber& zero) {
  if (a.empty() || b.empty()) return {};
  CycloSeries r(a.size() + b.size() - 1, zero);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      if (!b[j].is_zero()) r[i + j] += a[i] * b[j];
  }
  return r;
}

// det(I - tA) by the Leibniz expansion; entries of I - tA are linear in t.
inline CycloSeries det_one_minus_tA(const CycloMatrix& a) {
  const int n = a.rows();
  const CycloNumber zero = CycloNumber::zero(a.modulus());
  std::vector<std::vector<CycloSeries>> entry(n, std::vector<CycloSeries>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      CycloNumber c0 = i == j ? zero.one_like() : zero;
      CycloNumber c1 = -a(i, j);
      entry[i][j] = {c0, c1};
    }
  std::vector<int> sigma(n);
  std::iota(sigma.begin(), sigma.end(), 0);
  CycloSeries det(n + 1, zero);
  do {
    int inversions = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (sigma[i] > sigma[j]) ++inversions;
    CycloSeries term{zero.one_like()};
    bool vanishes = false;
    for (int i = 0; i < n && !vanishes; ++i) {
      const auto& e = entry[i][sigma[i]];
      vanishes = e[0].is_zero() && e[1].is_zero();
      if (!vanishes) term = series_mul(term, e, zero);
    }
    if (vanishes) continue;
    for (std::size_t k = 0; k < term.size(); ++k) det[k] += inversions % 2 ? -term[k] : term[k];
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return det;
}

inline std::string series_key(const CycloSeries& s) {
  std::string k;
  for (const auto& c : s) k += c.str() + ";";
  return k;
}

}  // namespace detail

struct MolienComparison {
  LaurentPoly molien;    // (1/|W|) sum_w 1/det(1 - t w), truncated
  LaurentPoly degrees;   // prod_i 1/(1 - t^{d_i}), truncated
  int truncation = 0;
  std::size_t distinct_determinants = 0;

  bool matches() const { return molien == degrees; }
};

/// Molien series of the invariants, computed over Q(zeta_m) and required to
/// be integral after averaging, next to the degree-product series.
inline MolienComparison molien_trivial(const GroupSpec& g, int N, long long max_order = kDefaultMaxOrder) {
  if (N < 0) throw DomainError("molien_trivial: negative truncation");
  std::map<std::string, std::pair<detail::CycloSeries, long long>> by_det;
  for_each_element(g, [&](const MonomialElement& w) {
    auto det = detail::det_one_minus_tA(w.matrix());
    auto key = detail::series_key(det);
    auto [it, fresh] = by_det.try_emplace(key, std::move(det), 0);
    ++it->second.second;
  }, max_order);

  const CycloNumber zero = CycloNumber::zero(g.m);
  detail::CycloSeries total(N + 1, zero);
  for (const auto& [key, entry] : by_det) {
    const auto inv = series_quotient(detail::CycloSeries{zero.one_like()}, entry.first, N, zero);
    for (int k = 0; k <= N; ++k) total[k] += inv[k] * Rational(entry.second);
  }

  MolienComparison out;
  out.truncation = N;
  out.distinct_determinants = by_det.size();
  const Rational order(g.order());
  for (int k = 0; k <= N; ++k) {
    const Rational v = total[k].rational_value() / order;
    if (!is_integral(v))
      throw InvariantViolation(g.id() + ": Molien coefficient " + std::to_string(k) + " = " + v.str() +
                               " is not an integer");
    out.molien.add_term(k, boost::multiprecision::numerator(v));
  }
  GradedProduct den;
  for (int d : g.degrees()) den.mul_binomial(d);
  out.degrees = series_quotient(LaurentPoly(1), graded_reduce(den), N);
  return out;
}

}  // namespace cmsing
