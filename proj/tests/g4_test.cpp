#include <set>

#include <gtest/gtest.h>

#include "cmsing/g4.hpp"

using namespace cmsing;
using namespace cmsing::g4;

namespace {

ClassFunction rational_cf(std::array<long long, kClasses> v) {
  ClassFunction c;
  for (int i = 0; i < kClasses; ++i) c[i] = CycloNumber::rational(3, Rational(v[i]));
  return c;
}

void expect_all(const std::vector<Check>& checks) {
  for (const auto& c : checks) EXPECT_TRUE(c.ok) << c.name;
}

}  // namespace

TEST(G4, GroupBasics) {
  const Group& g = group();
  EXPECT_EQ(g.elements.size(), 24u);
  EXPECT_EQ(kS[0] * kS[0] * kS[0], kOne);
  EXPECT_EQ(quat(0, 1, 0, 0) * quat(0, 0, 1, 0), quat(0, 0, 0, 1));
  for (const auto& q : g.elements) {
    EXPECT_EQ(q.norm(), Rational(1));
    for (const Rational* x : {&q.a, &q.b, &q.c, &q.d}) {
      const Rational v = *x < 0 ? Rational(-*x) : *x;
      EXPECT_TRUE(v == 0 || v == 1 || v == Rational(1, 2)) << q.str();
    }
  }
  expect_all(presentation_checks());
}

TEST(G4, Classes) {
  const Group& g = group();
  for (int c = 0; c < kClasses; ++c) EXPECT_EQ(static_cast<int>(g.classes[c].size()), kClassSizes[c]);
  for (int i = 0; i < 4; ++i) {
    EXPECT_EQ(g.cls(kS[i]), 2);
    EXPECT_EQ(g.cls(kT[i]), 3);
  }
  EXPECT_EQ(g.cls(kT[0] * kT[0]), 2);
  EXPECT_EQ(element_order(quat(-1, 0, 0, 0)), 2);
  for (int e : g.classes[4]) EXPECT_EQ(element_order(g.elements[e]), 4);
  expect_all(class_product_checks());
}

TEST(G4, Quaternion) {
  EXPECT_EQ(kS[0].str(), "-1/2 + 1/2i + 1/2j - 1/2k");
  EXPECT_EQ(quat(0, 0, -1, 0).str(), "-j");
  EXPECT_EQ(kS[0] * kS[0].conj(), kOne);
}

TEST(G4, CharacterTable) {
  auto o = orthogonality();
  EXPECT_TRUE(o.rows);
  EXPECT_TRUE(o.columns);
  int sum_sq = 0, sizes = 0;
  for (const auto& row : char_table()) sum_sq += static_cast<int>(numerator(row[0].rational_value()) * numerator(row[0].rational_value()));
  for (int s : kClassSizes) sizes += s;
  EXPECT_EQ(sum_sq, 24);
  EXPECT_EQ(sizes, 24);
}

TEST(G4, MatrixModels) {
  auto r = check_models();
  EXPECT_TRUE(r.w_homomorphism);
  EXPECT_TRUE(r.h_homomorphism);
  EXPECT_TRUE(r.w_traces);
  EXPECT_TRUE(r.h_traces);
  EXPECT_TRUE(r.reflections);
  EXPECT_EQ(reflection_eigenvalue(reflection_matrix(kS[0])), CycloNumber::root(12, 4));
  EXPECT_EQ(reflection_eigenvalue(reflection_matrix(kT[0])), CycloNumber::root(12, 8));
}

TEST(G4, Decompose) {
  EXPECT_EQ(decompose(end_character(character_E())), mults({{T, 12}, {V1, 12}, {V2, 12}, {U, 36}}));
  EXPECT_EQ(decompose(end_character(character_F())), mults({{T, 3}, {V1, 3}, {V2, 3}, {U, 9}}));
  EXPECT_EQ(decompose(rational_cf({24, 0, 0, 0, 0, 0, 0})),
            mults({{T, 1}, {V1, 1}, {V2, 1}, {W, 2}, {H, 2}, {HStar, 2}, {U, 3}}));
  EXPECT_THROW(decompose(rational_cf({1, 0, 0, 0, 0, 0, 0})), DomainError);
  EXPECT_EQ(render(decompose(end_character(character_E()))), "12T + 12V1 + 12V2 + 36U");
}

TEST(G4, TensorProductsOfIrreduciblesDecomposeNonnegatively) {
  const auto& t = char_table();
  for (int i = 0; i < kClasses; ++i)
    for (int j = 0; j < kClasses; ++j) {
      auto m = decompose(t[i] * t[j]);
      Integer dim = 0;
      for (int k = 0; k < kClasses; ++k) {
        EXPECT_GE(m[k], 0);
        dim += m[k] * numerator(t[k][0].rational_value());
      }
      EXPECT_EQ(dim, numerator(t[i][0].rational_value()) * numerator(t[j][0].rational_value()));
    }
}

TEST(G4, SummandAbsence) {
  auto r = summand_absence_check();
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.end_e[HStar], 0);
  EXPECT_EQ(r.end_f[H], 0);
  EXPECT_EQ(r.end_e[U], 36);
}

TEST(G4, Claim1) {
  auto check = [](long long n, long long m, int a, int b) {
    auto r = claim1_solve(n, m);
    ASSERT_TRUE(r.feasible) << n << "," << m;
    EXPECT_EQ(r.a, a);
    EXPECT_EQ(r.b, b);
  };
  check(12, 12, 1, 0);
  check(6, -6, 0, 1);
  check(24, 0, 1, 2);
  check(18, 6, 1, 1);
  EXPECT_FALSE(claim1_solve(1, 2).feasible);
  EXPECT_FALSE(claim1_solve(0, 12).feasible);
}

TEST(G4, Claim1Property) {
  for (long long n = 0; n <= 96; ++n)
    for (long long m = -96; m <= 96; ++m) {
      auto r = claim1_solve(n, m);
      if (!r.feasible) continue;
      EXPECT_EQ(12 * r.a + 6 * r.b, n);
      EXPECT_EQ(12 * r.a - 6 * r.b, m);
    }
}

TEST(G4, ReflectionForms) {
  auto f = g4_reflection_form_check();
  EXPECT_TRUE(f.ok());
  EXPECT_EQ(f.s_class.lambda, CycloNumber::rational(12, 2));
  EXPECT_EQ(f.t_class.lambda, CycloNumber::rational(12, 2));
  EXPECT_EQ(omega_sum_closed_form(4, 2, CycloNumber::root(3, 1)), CycloNumber::rational(3, 2));
}

TEST(G4, TraceArgument) { expect_all(trace_argument_checks()); }

TEST(G4, Claim2Filter) {
  auto shapes = claim2_dimension_filter();
  std::set<std::string> all, kept;
  for (const auto& s : shapes) {
    all.insert(s.name());
    if (!s.eliminated) kept.insert(s.name());
    EXPECT_LE(s.dim, 24);
  }
  EXPECT_EQ(all, (std::set<std::string>{"E", "2E", "F", "2F", "3F", "4F", "E + F", "E + 2F = CG4"}));
  EXPECT_EQ(kept, (std::set<std::string>{"E + F", "E + 2F = CG4"}));
  for (const auto& s : shapes)
    if (s.name() == "E") {
      EXPECT_EQ(s.coefficients[0], CycloNumber::rational(12, 2));
      EXPECT_EQ(s.coefficients[1], CycloNumber::rational(12, 2));
    }
}
