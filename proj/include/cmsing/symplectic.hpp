#pragma once

#include <vector>

#include "monomial.hpp"

namespace cmsing {

/// Vector of h + h*, coordinates in the standard basis and its dual.
struct SymplecticVector {
  std::vector<CycloNumber> h_part;
  std::vector<CycloNumber> hstar_part;

  std::vector<CycloNumber> flat() const {
    std::vector<CycloNumber> v = h_part;
    v.insert(v.end(), hstar_part.begin(), hstar_part.end());
    return v;
  }
  static SymplecticVector from_flat(const std::vector<CycloNumber>& v) {
    const std::size_t n = v.size() / 2;
    return {std::vector<CycloNumber>(v.begin(), v.begin() + n), std::vector<CycloNumber>(v.begin() + n, v.end())};
  }
};

/// omega((f1, f2), (g1, g2)) = f2(g1) - g2(f1).
inline CycloNumber omega(const SymplecticVector& x, const SymplecticVector& y) {
  if (x.h_part.size() != y.h_part.size() || x.h_part.size() != x.hstar_part.size())
    throw DomainError("omega: dimension mismatch");
  CycloNumber s = x.h_part.empty() ? CycloNumber() : x.h_part.front().zero_like();
  for (std::size_t i = 0; i < x.h_part.size(); ++i)
    s += x.hstar_part[i] * y.h_part[i] - y.hstar_part[i] * x.h_part[i];
  return s;
}

/// Gram matrix of omega in the basis (e_1..e_n, e_1^*..e_n^*).
inline CycloMatrix omega_gram(int n, int modulus) {
  CycloMatrix J(2 * n, 2 * n, modulus);
  for (int i = 0; i < n; ++i) {
    J(n + i, i) = CycloNumber::one(modulus);
    J(i, n + i) = -CycloNumber::one(modulus);
  }
  return J;
}

/// Action of A on h + h*: A on h, the contragredient (A^{-1})^T on h*.
inline CycloMatrix symplectic_action(const CycloMatrix& a) {
  const int n = a.rows();
  const CycloMatrix dual = a.inverse().transpose();
  CycloMatrix s(2 * n, 2 * n, a.modulus());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      s(i, j) = a(i, j);
      s(n + i, n + j) = dual(i, j);
    }
  return s;
}

/// Projection of h + h* onto Im(1 - s) along Ker(1 - s).
inline CycloMatrix reflection_projector(const CycloMatrix& a) {
  if (!is_reflection(a)) throw DomainError("reflection_projector: element is not a reflection");
  const CycloMatrix s = symplectic_action(a);
  const int dim = s.rows();
  const CycloMatrix one_minus = CycloMatrix::identity(dim, s.modulus()) - s;
  const CycloMatrix image = one_minus.column_space();
  const CycloMatrix kernel = one_minus.nullspace();
  if (image.cols() + kernel.cols() != dim) throw InvariantViolation("Im(1-s) + Ker(1-s) is not a direct sum");
  const CycloMatrix basis = hcat(image, kernel);
  CycloMatrix keep(dim, dim, s.modulus());
  for (int i = 0; i < image.cols(); ++i) keep(i, i) = CycloNumber::one(s.modulus());
  return basis * keep * basis.inverse();
}

/// omega restricted to Im(1 - s) and zero on Ker(1 - s), evaluated at (x, y).
inline CycloNumber omega_restricted(const CycloMatrix& s, const SymplecticVector& x, const SymplecticVector& y) {
  const CycloMatrix pi = reflection_projector(s);
  return omega(SymplecticVector::from_flat(pi.apply(x.flat())), SymplecticVector::from_flat(pi.apply(y.flat())));
}

inline CycloNumber omega_restricted(const MonomialElement& s, const SymplecticVector& x, const SymplecticVector& y) {
  return omega_restricted(s.matrix(), x, y);
}

// Gram matrix of omega_s: pi^T J pi.
inline CycloMatrix restricted_gram(const CycloMatrix& s) {
  const CycloMatrix pi = reflection_projector(s);
  return pi.transpose() * omega_gram(s.rows(), s.modulus()) * pi;
}

/// (k/n) (1 - zeta)^{-1} (1 - zeta^{-1})^{-1} (2 - zeta - zeta^{-1}).
inline CycloNumber omega_sum_closed_form(int k, int n, const CycloNumber& zeta) {
  const CycloNumber one = zeta.one_like();
  const CycloNumber zinv = zeta.inverse();
  return Rational(k, n) * (one - zeta).inverse() * (one - zinv).inverse() *
         (Rational(2) * one - zeta - zinv);
}

/// Sum of the restricted forms over a class of reflections, with the
/// proportionality certificate Omega = lambda * omega.
struct OmegaCertificate {
  int k = 0;
  int n = 0;
  CycloNumber zeta;
  CycloNumber lambda;
  CycloNumber closed_form;
  bool proportional = false;

  bool matches() const { return proportional && lambda == closed_form; }
};

inline OmegaCertificate omega_sum(const std::vector<CycloMatrix>& reflection_class, const CycloNumber& zeta) {
  if (reflection_class.empty()) throw DomainError("omega_sum: empty class");
  const int n = reflection_class.front().rows();
  const int mod = reflection_class.front().modulus();
  CycloMatrix total(2 * n, 2 * n, mod);
  for (const auto& s : reflection_class) total = total + restricted_gram(s);
  const CycloMatrix J = omega_gram(n, mod);
  OmegaCertificate cert;
  cert.k = static_cast<int>(reflection_class.size());
  cert.n = n;
  cert.zeta = zeta;
  cert.lambda = total(n, 0);  // J(n, 0) = 1
  cert.proportional = total == J * cert.lambda;
  cert.closed_form = omega_sum_closed_form(cert.k, n, zeta);
  return cert;
}

/// Omega for one reflection class of G(m,p,n); refuses reducible realizations.
inline OmegaCertificate omega_class_sum(const GroupSpec& g, const ReflectionClass& cls,
                                        long long max_order = kDefaultMaxOrder) {
  if (!reflection_rep_irreducible(g, max_order))
    throw Refusal(g.id() + ": monomial realization is reducible; the class sum need not be proportional");
  std::vector<CycloMatrix> mats;
  for (const auto& s : cls.members) mats.push_back(s.matrix());
  OmegaCertificate cert = omega_sum(mats, cls.zeta);
  if (!cert.proportional) throw InvariantViolation(g.id() + ": class sum is not proportional to omega");
  return cert;
}

}  // namespace cmsing
