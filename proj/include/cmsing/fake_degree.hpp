#pragma once

#include <string>
#include <vector>

#include "group_spec.hpp"
#include "multipartition.hpp"

namespace cmsing {

/// Irreducible of G(m,p,n): an orbit of multipartitions together with an
/// abstract index into the orbit's stabiliser.
struct IrrLabel {
  MultipartitionOrbit orbit;
  int eps_index = 0;

  std::string text() const { return render(orbit.canonical_rep) + "#" + std::to_string(eps_index); }
};

inline std::vector<IrrLabel> irr_labels(const GroupSpec& g) {
  std::vector<IrrLabel> out;
  for (auto& o : orbits(g.m, g.p, g.n))
    for (int e = 0; e < o.stab_order; ++e) out.push_back({o, e});
  return out;
}

/// f(t) = (1 - t^{dn}) / (1 - t^{mn}) * R(t) * I(t^m).
///
/// R = t^k R~ is split so that the cyclotomic denominators left over from the
/// graded part are cancelled against R~ by exact division.
inline LaurentPoly fake_degree(const GroupSpec& g, const MultipartitionOrbit& orbit) {
  if (orbit.p != g.p || orbit.d != g.d() || orbit.canonical_rep.m() != g.m ||
      orbit.canonical_rep.size() != g.n)
    throw DomainError("fake_degree: orbit does not belong to " + g.id());
  const LaurentPoly R = R_poly(orbit);
  const int k = R.trailing_degree();
  GradedProduct gp = I_poly(orbit.canonical_rep).substitute_power(g.m);
  gp.mul_binomial(g.d() * g.n, 1);
  gp.mul_binomial(g.m * g.n, -1);
  gp.shift += k;
  LaurentPoly f;
  try {
    f = graded_reduce(gp, R.shifted(-k));
  } catch (const NotAPolynomial& e) {
    throw InvariantViolation("fake_degree " + g.id() + " " + render(orbit.canonical_rep) + ": " +
                             e.what());
  }
  if (f.is_zero() || !f.nonnegative_coefficients())
    throw InvariantViolation("fake_degree " + g.id() + ": result is not a nonzero nonnegative polynomial");
  return f;
}

inline Integer irr_dimension(const GroupSpec& g, const IrrLabel& label) {
  const Multipartition& rep = label.orbit.canonical_rep;
  Integer num = factorial(g.n);
  for (const auto& c : rep.components()) num = num / factorial(c.size()) * syt_count(c);
  Integer q, r;
  boost::multiprecision::divide_qr(num, Integer(label.orbit.stab_order), q, r);
  if (r != 0) throw InvariantViolation("irr_dimension: stabiliser order does not divide " + num.str());
  return q;
}

/// prod_i (1 - t^{d_i}) / (1 - t) over the degrees of the group.
inline LaurentPoly coinvariant_poincare(const std::vector<int>& degrees) {
  GradedProduct gp;
  for (int d : degrees) gp.mul_binomial(d);
  gp.mul_binomial(1, -static_cast<int>(degrees.size()));
  return graded_reduce(gp);
}

inline LaurentPoly coinv_poincare(const GroupSpec& g) { return coinvariant_poincare(g.degrees()); }

/// Sum over standard Young tableaux of t^{maj}. Independent reference for the
/// symmetric-group fake degrees; enumerates, so sizes are capped at 8.
inline LaurentPoly syt_major_index_oracle(const Partition& lambda) {
  const int n = lambda.size();
  if (n > 8) throw Refusal("syt_major_index_oracle: |lambda| > 8");
  const int rows = lambda.rows();
  std::vector<int> filled(rows, 0);
  std::vector<int> row_of(n + 1, 0);
  LaurentPoly out;
  auto rec = [&](auto&& self, int next) -> void {
    if (next > n) {
      int maj = 0;
      for (int i = 1; i < n; ++i)
        if (row_of[i + 1] > row_of[i]) maj += i;
      out.add_term(maj, Integer(1));
      return;
    }
    for (int r = 0; r < rows; ++r) {
      if (filled[r] >= lambda.parts()[r]) continue;
      if (r > 0 && filled[r] >= filled[r - 1]) continue;
      ++filled[r];
      row_of[next] = r;
      self(self, next + 1);
      --filled[r];
    }
  };
  rec(rec, 1);
  return out;
}

}  // namespace cmsing
