#pragma once

#include "laurent.hpp"

namespace cmsing {

// num = den * quotient + remainder. For Laurent inputs both operands are first
// normalised to trailing degree 0; the remainder is shifted back so that the
// identity holds verbatim.
template <class C>
struct DivisionResult {
  Laurent<C> quotient;
  Laurent<C> remainder;

  bool exact() const noexcept { return remainder.is_zero(); }
};

/// Long division in descending exponent order.
///
/// Over the integers a step whose leading coefficient is not divisible by the
/// divisor's leading coefficient ends the division; the partial remainder at
/// that point is returned. Divide over the rationals for field semantics.
template <class C>
DivisionResult<C> divide_exact(const Laurent<C>& num, const Laurent<C>& den) {
  if (den.is_zero()) throw DomainError("divide_exact: zero divisor");
  DivisionResult<C> out;
  if (num.is_zero()) return out;

  const int a = num.trailing_degree();
  const int b = den.trailing_degree();
  Laurent<C> rem = num.shifted(-a);
  const Laurent<C> divisor = den.shifted(-b);
  const int dd = divisor.degree();
  const C& lead = divisor.leading_coeff();

  Laurent<C> q;
  while (!rem.is_zero() && rem.degree() >= dd) {
    C c;
    if (!try_exact_div(rem.leading_coeff(), lead, c)) break;
    const int e = rem.degree() - dd;
    q.add_term(e, c);
    for (const auto& [de, dc] : divisor.terms()) rem.add_term(de + e, -(c * dc));
  }
  out.quotient = q.shifted(a - b);
  out.remainder = rem.shifted(a);
  return out;
}

// Quotient of an exact division; throws when den does not divide num.
template <class C>
Laurent<C> exact_quotient(const Laurent<C>& num, const Laurent<C>& den) {
  auto r = divide_exact(num, den);
  if (!r.exact())
    throw DomainError("exact_quotient: (" + render(den) + ") does not divide (" + render(num) +
                      "), remainder " + render(r.remainder));
  return r.quotient;
}

}  // namespace cmsing
