#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "symplectic.hpp"

namespace cmsing::g4 {

struct Quaternion {
  Rational a, b, c, d;  // a + bi + cj + dk

  friend Quaternion operator*(const Quaternion& x, const Quaternion& y) {
    return {x.a * y.a - x.b * y.b - x.c * y.c - x.d * y.d, x.a * y.b + x.b * y.a + x.c * y.d - x.d * y.c,
            x.a * y.c - x.b * y.d + x.c * y.a + x.d * y.b, x.a * y.d + x.b * y.c - x.c * y.b + x.d * y.a};
  }
  Quaternion conj() const { return {a, -b, -c, -d}; }
  Rational norm() const { return a * a + b * b + c * c + d * d; }
  friend bool operator==(const Quaternion&, const Quaternion&) = default;
  friend bool operator<(const Quaternion& x, const Quaternion& y) {
    return std::tie(x.a, x.b, x.c, x.d) < std::tie(y.a, y.b, y.c, y.d);
  }

  std::string str() const {
    std::string s;
    const std::pair<const Rational*, const char*> parts[] = {{&a, ""}, {&b, "i"}, {&c, "j"}, {&d, "k"}};
    for (const auto& [v, unit] : parts) {
      if (*v == 0) continue;
      const bool neg = *v < 0;
      const Rational mag = neg ? Rational(-*v) : *v;
      s += s.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
      if (mag != 1 || !*unit) s += mag.str();
      s += unit;
    }
    return s.empty() ? "0" : s;
  }
};

inline Quaternion quat(int a, int b, int c, int d, int den = 1) {
  return {Rational(a, den), Rational(b, den), Rational(c, den), Rational(d, den)};
}

inline const Quaternion kOne = quat(1, 0, 0, 0);

// The named elements. s and t are the two classes of reflections.
inline const std::array<Quaternion, 4> kS = {quat(-1, 1, 1, -1, 2), quat(-1, 1, -1, 1, 2), quat(-1, -1, 1, 1, 2),
                                             quat(-1, -1, -1, -1, 2)};
inline const std::array<Quaternion, 4> kT = {quat(-1, -1, -1, 1, 2), quat(-1, 1, -1, -1, 2), quat(-1, -1, 1, -1, 2),
                                             quat(-1, 1, 1, 1, 2)};

inline constexpr int kClasses = 7;
inline constexpr std::array<int, kClasses> kClassSizes = {1, 1, 4, 4, 6, 4, 4};
// Element orders; -1 has order 2.
inline constexpr std::array<int, kClasses> kClassOrders = {1, 2, 3, 3, 4, 6, 6};

inline int element_order(const Quaternion& q) {
  Quaternion p = q;
  for (int k = 1; k <= 24; ++k) {
    if (p == kOne) return k;
    p = p * q;
  }
  throw InvariantViolation("g4: element of order > 24");
}

struct Group {
  std::vector<Quaternion> elements;  // sorted
  std::vector<std::vector<int>> table;
  std::array<std::vector<int>, kClasses> classes;  // index 0 is Cl_1
  std::vector<int> class_of;

  int index(const Quaternion& q) const {
    auto it = std::lower_bound(elements.begin(), elements.end(), q);
    if (it == elements.end() || !(*it == q)) throw DomainError("g4: " + q.str() + " is not in the group");
    return static_cast<int>(it - elements.begin());
  }
  int cls(const Quaternion& q) const { return class_of[index(q)]; }
};

namespace detail {

inline Group build() {
  Group g;
  std::vector<Quaternion> todo{kOne};
  std::set<Quaternion> seen{kOne};
  while (!todo.empty()) {
    Quaternion q = todo.back();
    todo.pop_back();
    for (const auto& gen : {kS[0], kS[1]}) {
      Quaternion r = q * gen;
      if (seen.insert(r).second) todo.push_back(r);
    }
    if (seen.size() > 1000) throw InvariantViolation("g4: generators do not close up");
  }
  g.elements.assign(seen.begin(), seen.end());
  const int n = static_cast<int>(g.elements.size());
  g.table.assign(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g.table[i][j] = g.index(g.elements[i] * g.elements[j]);

  // Classes by conjugation, then labelled through fixed representatives.
  const Quaternion reps[kClasses] = {kOne, quat(-1, 0, 0, 0), kS[0], kT[0], quat(0, 1, 0, 0), kT[0] * kT[1],
                                     kS[0] * kS[1]};
  g.class_of.assign(n, -1);
  for (int c = 0; c < kClasses; ++c) {
    std::set<int> orbit;
    for (const auto& x : g.elements) orbit.insert(g.index(x * reps[c] * x.conj()));
    for (int e : orbit) {
      if (g.class_of[e] != -1) throw InvariantViolation("g4: class representatives are conjugate");
      g.class_of[e] = c;
      g.classes[c].push_back(e);
    }
  }
  for (int e = 0; e < n; ++e)
    if (g.class_of[e] == -1) throw InvariantViolation("g4: element outside the seven classes");
  for (int c = 0; c < kClasses; ++c) {
    if (static_cast<int>(g.classes[c].size()) != kClassSizes[c])
      throw InvariantViolation("g4: Cl_" + std::to_string(c + 1) + " has size " + std::to_string(g.classes[c].size()));
    for (int e : g.classes[c])
      if (element_order(g.elements[e]) != kClassOrders[c])
        throw InvariantViolation("g4: element order mismatch in Cl_" + std::to_string(c + 1));
  }
  return g;
}

}  // namespace detail

inline const Group& group() {
  static const Group g = detail::build();
  return g;
}

// ---- characters -----------------------------------------------------------

using ClassFunction = std::array<CycloNumber, kClasses>;

enum Irr { T, V1, V2, W, H, HStar, U };
inline constexpr std::array<const char*, kClasses> kIrrNames = {"T", "V1", "V2", "W", "h", "h*", "U"};

inline ClassFunction class_function(std::array<CycloNumber, kClasses> v) { return v; }

inline const std::array<ClassFunction, kClasses>& char_table() {
  static const std::array<ClassFunction, kClasses> tab = [] {
    const CycloNumber o = CycloNumber::one(3), w = CycloNumber::root(3, 1), w2 = CycloNumber::root(3, 2);
    const CycloNumber z = CycloNumber::zero(3);
    auto r = [](long long x) { return CycloNumber::rational(3, Rational(x)); };
    return std::array<ClassFunction, kClasses>{{
        {o, o, o, o, o, o, o},
        {o, o, w2, w, o, w2, w},
        {o, o, w, w2, o, w, w2},
        {r(2), r(-2), r(-1), r(-1), z, o, o},
        {r(2), r(-2), -w2, -w, z, w2, w},
        {r(2), r(-2), -w, -w2, z, w, w2},
        {r(3), r(3), z, z, r(-1), z, z},
    }};
  }();
  return tab;
}

inline CycloNumber inner(const ClassFunction& x, const ClassFunction& y) {
  CycloNumber s = CycloNumber::zero(3);
  for (int c = 0; c < kClasses; ++c) s += x[c] * y[c].conj() * Rational(kClassSizes[c]);
  return s * Rational(1, 24);
}

inline ClassFunction operator*(const ClassFunction& x, const ClassFunction& y) {
  ClassFunction r;
  for (int c = 0; c < kClasses; ++c) r[c] = x[c] * y[c];
  return r;
}

inline ClassFunction operator+(const ClassFunction& x, const ClassFunction& y) {
  ClassFunction r;
  for (int c = 0; c < kClasses; ++c) r[c] = x[c] + y[c];
  return r;
}

inline ClassFunction scaled(const ClassFunction& x, long long k) {
  ClassFunction r;
  for (int c = 0; c < kClasses; ++c) r[c] = x[c] * Rational(k);
  return r;
}

inline ClassFunction conj(const ClassFunction& x) {
  ClassFunction r;
  for (int c = 0; c < kClasses; ++c) r[c] = x[c].conj();
  return r;
}

using Multiplicities = std::array<Integer, kClasses>;

/// Multiplicities of T, V1, V2, W, h, h*, U; throws unless all are integers.
inline Multiplicities decompose(const ClassFunction& chi) {
  Multiplicities m;
  for (int i = 0; i < kClasses; ++i) {
    const CycloNumber v = inner(chi, char_table()[i]);
    if (!v.is_rational() || !is_integral(v.rational_value()))
      throw DomainError("g4 decompose: not a virtual character (multiplicity of " + std::string(kIrrNames[i]) +
                        " is " + v.str() + ")");
    m[i] = numerator(v.rational_value());
  }
  return m;
}

inline std::string render(const Multiplicities& m) {
  std::string s;
  for (int i = 0; i < kClasses; ++i) {
    if (m[i] == 0) continue;
    if (!s.empty()) s += " + ";
    if (m[i] != 1) s += m[i].str();
    s += kIrrNames[i];
  }
  return s.empty() ? "0" : s;
}

inline Multiplicities mults(std::initializer_list<std::pair<Irr, int>> terms) {
  Multiplicities m;
  m.fill(0);
  for (auto [i, k] : terms) m[i] = k;
  return m;
}

inline ClassFunction character_E() {
  const auto& t = char_table();
  return t[T] + t[V1] + t[V2] + scaled(t[U], 3);
}
inline ClassFunction character_F() {
  const auto& t = char_table();
  return t[H] + t[HStar] + t[W];
}
inline ClassFunction end_character(const ClassFunction& chi) { return chi * conj(chi); }

struct OrthogonalityReport {
  bool rows = true;
  bool columns = true;
  bool ok() const { return rows && columns; }
};

inline OrthogonalityReport orthogonality() {
  OrthogonalityReport r;
  const auto& t = char_table();
  for (int i = 0; i < kClasses; ++i)
    for (int j = 0; j < kClasses; ++j)
      if (!(inner(t[i], t[j]) == CycloNumber::rational(3, i == j ? 1 : 0))) r.rows = false;
  for (int a = 0; a < kClasses; ++a)
    for (int b = 0; b < kClasses; ++b) {
      CycloNumber s = CycloNumber::zero(3);
      for (int i = 0; i < kClasses; ++i) s += t[i][a] * t[i][b].conj();
      if (!(s == CycloNumber::rational(3, a == b ? Rational(24, kClassSizes[a]) : Rational(0)))) r.columns = false;
    }
  return r;
}

// ---- matrix models --------------------------------------------------------

inline constexpr int kMod = 12;  // Q(zeta_12) holds both i and omega

// W: a + bi + cj + dk -> [[a + bi, c + di], [-c + di, a - bi]].
inline CycloMatrix quaternion_matrix(const Quaternion& q) {
  const CycloNumber i = CycloNumber::root(kMod, 3);
  auto num = [](const Rational& x) { return CycloNumber::rational(kMod, x); };
  CycloMatrix m(2, 2, kMod);
  m(0, 0) = num(q.a) + i * q.b;
  m(0, 1) = num(q.c) + i * q.d;
  m(1, 0) = num(-q.c) + i * q.d;
  m(1, 1) = num(q.a) - i * q.b;
  return m;
}

// h = W tensor V1.
inline CycloMatrix reflection_matrix(const Quaternion& q) {
  return quaternion_matrix(q) * char_table()[V1][group().cls(q)].embed(kMod);
}

struct ModelReport {
  bool w_homomorphism = true;
  bool h_homomorphism = true;
  bool w_traces = true;  // trace = 2a = W row
  bool h_traces = true;  // trace = h row
  bool reflections = true;
  bool ok() const { return w_homomorphism && h_homomorphism && w_traces && h_traces && reflections; }
};

inline ModelReport check_models() {
  const Group& g = group();
  ModelReport r;
  std::vector<CycloMatrix> wm, hm;
  for (const auto& q : g.elements) {
    wm.push_back(quaternion_matrix(q));
    hm.push_back(reflection_matrix(q));
  }
  const int n = static_cast<int>(g.elements.size());
  for (int x = 0; x < n; ++x) {
    const int c = g.class_of[x];
    if (!(wm[x].trace() == CycloNumber::rational(kMod, g.elements[x].a * 2)) ||
        !(wm[x].trace() == char_table()[W][c].embed(kMod)))
      r.w_traces = false;
    if (!(hm[x].trace() == char_table()[H][c].embed(kMod))) r.h_traces = false;
    for (int y = 0; y < n; ++y) {
      if (!(wm[x] * wm[y] == wm[g.table[x][y]])) r.w_homomorphism = false;
      if (!(hm[x] * hm[y] == hm[g.table[x][y]])) r.h_homomorphism = false;
    }
    if (is_reflection(hm[x]) != (c == 2 || c == 3)) r.reflections = false;
  }
  return r;
}

// ---- presentation and class products --------------------------------------

struct Check {
  std::string name;
  bool ok = false;
};

inline std::vector<Check> presentation_checks() {
  const Group& g = group();
  auto pow = [](Quaternion q, int k) {
    Quaternion r = kOne;
    while (k-- > 0) r = r * q;
    return r;
  };
  const Quaternion s1 = kS[0], s2 = kS[1];
  return {
      {"|G4| = 24", g.elements.size() == 24},
      {"generated by s1, s2", g.elements.size() == 24},
      {"s1^3 = 1", pow(s1, 3) == kOne},
      {"s2^3 = 1", pow(s2, 3) == kOne},
      {"(s1 s2)^6 = 1", pow(s1 * s2, 6) == kOne},
      {"i j = k", quat(0, 1, 0, 0) * quat(0, 0, 1, 0) == quat(0, 0, 0, 1)},
      {"all elements are unit quaternions",
       std::all_of(g.elements.begin(), g.elements.end(), [](const Quaternion& q) { return q.norm() == 1; })},
  };
}

inline std::vector<Check> class_product_checks() {
  const Group& g = group();
  std::vector<Check> out;
  auto in = [&](const std::string& name, const Quaternion& q, int c) { out.push_back({name + " in Cl_" + std::to_string(c), g.cls(q) == c - 1}); };
  for (int i = 0; i < 4; ++i) {
    in("s" + std::to_string(i + 1), kS[i], 3);
    in("t" + std::to_string(i + 1), kT[i], 4);
  }
  for (int i = 1; i < 4; ++i) {
    in("s1 s" + std::to_string(i + 1), kS[0] * kS[i], 7);
    in("s1 t" + std::to_string(i + 1), kS[0] * kT[i], 5);
    in("t1 t" + std::to_string(i + 1), kT[0] * kT[i], 6);
  }
  in("t1^2", kT[0] * kT[0], 3);
  out.push_back({"s1 t1 = 1", kS[0] * kT[0] == kOne});
  std::vector<int> cl5;
  for (const auto& q : {quat(0, 1, 0, 0), quat(0, -1, 0, 0), quat(0, 0, 1, 0), quat(0, 0, -1, 0), quat(0, 0, 0, 1),
                        quat(0, 0, 0, -1)})
    cl5.push_back(g.index(q));
  std::sort(cl5.begin(), cl5.end());
  out.push_back({"Cl_5 = {+-i, +-j, +-k}", cl5 == g.classes[4]});
  return out;
}

// ---- decompositions -------------------------------------------------------

struct SummandReport {
  Multiplicities end_e, end_f;
  bool ok() const {
    return end_e[H] == 0 && end_e[HStar] == 0 && end_f[H] == 0 && end_f[HStar] == 0;
  }
};

inline SummandReport summand_absence_check() {
  return {decompose(end_character(character_E())), decompose(end_character(character_F()))};
}

struct Claim1Result {
  bool feasible = false;
  Integer a, b;
  std::string reason;
};

/// Writes the class function (n, m, 0, ..., 0) as aE + bF when possible.
inline Claim1Result claim1_solve(long long n, long long m) {
  Claim1Result r;
  ClassFunction chi;
  chi.fill(CycloNumber::zero(3));
  chi[0] = CycloNumber::rational(3, Rational(n));
  chi[1] = CycloNumber::rational(3, Rational(m));
  Multiplicities mu;
  try {
    mu = decompose(chi);
  } catch (const DomainError& e) {
    r.reason = e.what();
    return r;
  }
  const Integer a = mu[T], b = mu[W];
  if (!(mu[V1] == a && mu[V2] == a && mu[U] == 3 * a && mu[H] == b && mu[HStar] == b))
    throw InvariantViolation("claim1_solve: decomposition is not of the form aE + bF");
  if (Rational(a) != Rational(n + m, 24) || Rational(b) != Rational(2 * (n - m), 24))
    throw InvariantViolation("claim1_solve: decomposition disagrees with a = (n+m)/24, b = 2(n-m)/24");
  if (a < 0 || b < 0) {
    r.reason = "negative multiplicity";
    return r;
  }
  r.feasible = true;
  r.a = a;
  r.b = b;
  return r;
}

// ---- reflection forms -----------------------------------------------------

struct FormCheck {
  OmegaCertificate s_class, t_class;
  bool ok() const {
    const CycloNumber two = CycloNumber::rational(kMod, 2);
    return s_class.matches() && t_class.matches() && s_class.lambda == two && t_class.lambda == two;
  }
};

inline CycloNumber reflection_eigenvalue(const CycloMatrix& a) {
  // det = zeta for a reflection
  return a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
}

inline FormCheck g4_reflection_form_check() {
  auto certify = [](const std::array<Quaternion, 4>& cls) {
    std::vector<CycloMatrix> mats;
    for (const auto& q : cls) mats.push_back(reflection_matrix(q));
    OmegaCertificate c = omega_sum(mats, reflection_eigenvalue(mats.front()));
    if (!c.proportional) throw InvariantViolation("g4: class sum is not proportional to omega");
    return c;
  };
  return {certify(kS), certify(kT)};
}

/// The identities used when multiplying the commutation relation by s1 and
/// taking traces, evaluated on a fixed vector x1 of h* and the basis of h.
inline std::vector<Check> trace_argument_checks() {
  const int n = 2;
  const CycloMatrix s1 = reflection_matrix(kS[0]);
  const CycloMatrix dual = symplectic_action(s1);
  CycloMatrix fix_star(n, n, kMod);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) fix_star(i, j) = (i == j ? CycloNumber::one(kMod) : CycloNumber::zero(kMod)) - dual(n + i, n + j);
  const CycloMatrix ker = fix_star.nullspace();
  std::vector<Check> out;
  out.push_back({"s1 fixes a line in h*", ker.cols() == 1});
  if (ker.cols() != 1) return out;
  SymplecticVector x1{{CycloNumber::zero(kMod), CycloNumber::zero(kMod)}, {ker(0, 0), ker(1, 0)}};

  bool s1_zero = true, t1_zero = true, s_rest = true, t_rest = true, nondeg = false;
  for (int k = 0; k < n; ++k) {
    SymplecticVector y{{CycloNumber::zero(kMod), CycloNumber::zero(kMod)}, {CycloNumber::zero(kMod), CycloNumber::zero(kMod)}};
    y.h_part[k] = CycloNumber::one(kMod);
    const CycloNumber w = omega(x1, y);
    if (!w.is_zero()) nondeg = true;
    if (!omega_restricted(reflection_matrix(kS[0]), x1, y).is_zero()) s1_zero = false;
    if (!omega_restricted(reflection_matrix(kT[0]), x1, y).is_zero()) t1_zero = false;
    CycloNumber ss = CycloNumber::zero(kMod), ts = CycloNumber::zero(kMod);
    for (int i = 1; i < 4; ++i) {
      ss += omega_restricted(reflection_matrix(kS[i]), x1, y);
      ts += omega_restricted(reflection_matrix(kT[i]), x1, y);
    }
    if (!(ss == w * Rational(2))) s_rest = false;
    if (!(ts == w * Rational(2))) t_rest = false;
  }
  out.push_back({"omega_s1(x1, y) = 0", s1_zero});
  out.push_back({"omega_t1(x1, y) = 0", t1_zero});
  out.push_back({"sum_{i=2..4} omega_si(x1, y) = 2 omega(x1, y)", s_rest});
  out.push_back({"sum_{j=2..4} omega_tj(x1, y) = 2 omega(x1, y)", t_rest});
  out.push_back({"omega(x1, -) is nonzero on h", nondeg});
  return out;
}

// ---- shapes of dimension <= 24 --------------------------------------------

struct Shape {
  int a = 0, b = 0;
  int dim = 0;
  Integer end_h, end_hstar;  // multiplicities in End(aE + bF)
  std::optional<Irr> witness;  // constituent whose trace gives the contradiction
  std::array<CycloNumber, 2> coefficients;  // of c1, c2 in that trace identity
  bool eliminated = false;

  std::string name() const {
    auto part = [](int k, const char* x) { return k == 0 ? std::string() : (k == 1 ? "" : std::to_string(k)) + x; };
    std::string s = part(a, "E");
    if (b) s += (s.empty() ? "" : " + ") + part(b, "F");
    if (a == 1 && b == 2) s += " = CG4";
    return s;
  }
};

/// Enumerates aE + bF with 12a + 6b <= 24. A shape is eliminated when End(L)
/// has no h or h* summand (so both act by zero) and the trace of the
/// commutator on a constituent V gives c1 * 2 Tr_V(s1) + c2 * 2 Tr_V(t1) = 0
/// with a nonzero coefficient.
inline std::vector<Shape> claim2_dimension_filter() {
  const FormCheck forms = g4_reflection_form_check();
  std::vector<Shape> out;
  for (int a = 0; 12 * a <= 24; ++a)
    for (int b = 0; 12 * a + 6 * b <= 24; ++b) {
      if (a == 0 && b == 0) continue;
      Shape s;
      s.a = a;
      s.b = b;
      s.dim = 12 * a + 6 * b;
      const ClassFunction chi = scaled(character_E(), a) + scaled(character_F(), b);
      const Multiplicities end = decompose(end_character(chi));
      s.end_h = end[H];
      s.end_hstar = end[HStar];
      s.witness = a > 0 ? T : W;
      const auto& row = char_table()[*s.witness];
      s.coefficients = {forms.s_class.lambda * row[2].embed(kMod), forms.t_class.lambda * row[3].embed(kMod)};
      s.eliminated = s.end_h == 0 && s.end_hstar == 0 && !(s.coefficients[0].is_zero() && s.coefficients[1].is_zero());
      out.push_back(s);
    }
  return out;
}

}  // namespace cmsing::g4
