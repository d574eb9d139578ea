#pragma once

#include <cctype>
#include <initializer_list>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>

#include "numeric.hpp"

namespace cmsing {

/// Sparse univariate Laurent polynomial in t over an exact coefficient ring.
///
/// Zero coefficients are never stored, so two values compare equal exactly
/// when their exponent->coefficient maps agree.
template <class C>
class Laurent {
 public:
  using coeff_type = C;
  using term_map = std::map<int, C>;

  Laurent() = default;
  Laurent(int c) : Laurent(C(c)) {}  // NOLINT: integers lift to constants
  Laurent(const C& c) {               // NOLINT
    if (c != 0) terms_.emplace(0, c);
  }
  Laurent(std::initializer_list<std::pair<int, C>> terms) {
    for (const auto& [e, c] : terms) add_term(e, c);
  }

  static Laurent monomial(const C& c, int e) {
    Laurent p;
    p.add_term(e, c);
    return p;
  }
  static Laurent t(int e = 1) { return monomial(C(1), e); }

  const term_map& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t term_count() const noexcept { return terms_.size(); }

  C coeff(int e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? C(0) : it->second;
  }

  int degree() const {
    if (is_zero()) throw DomainError("degree of the zero polynomial");
    return terms_.rbegin()->first;
  }
  int trailing_degree() const {
    if (is_zero()) throw DomainError("trailing degree of the zero polynomial");
    return terms_.begin()->first;
  }
  const C& leading_coeff() const {
    if (is_zero()) throw DomainError("leading coefficient of zero");
    return terms_.rbegin()->second;
  }

  C at_one() const {
    C s = 0;
    for (const auto& [e, c] : terms_) s += c;
    return s;
  }

  bool nonnegative_coefficients() const {
    for (const auto& [e, c] : terms_)
      if (c < 0) return false;
    return true;
  }

  // t^k * p
  Laurent shifted(int k) const {
    Laurent r;
    for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e + k, c);
    return r;
  }

  // p(t^m), m >= 1
  Laurent substitute_power(int m) const {
    if (m < 1) throw DomainError("substitute_power needs m >= 1");
    Laurent r;
    for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e * m, c);
    return r;
  }

  void add_term(int e, const C& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Laurent& operator+=(const Laurent& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  Laurent& operator-=(const Laurent& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  Laurent& operator*=(const C& s) {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
  }

  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  friend Laurent operator-(Laurent a) {
    for (auto& [e, c] : a.terms_) c = -c;
    return a;
  }
  friend Laurent operator*(Laurent a, const C& s) { return a *= s; }
  friend Laurent operator*(const C& s, Laurent a) { return a *= s; }
  friend Laurent operator*(const Laurent& a, const Laurent& b) {
    Laurent r;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
    return r;
  }
  Laurent& operator*=(const Laurent& o) { return *this = *this * o; }

  friend bool operator==(const Laurent& a, const Laurent& b) { return a.terms_ == b.terms_; }

  Laurent pow(int k) const {
    if (k < 0) throw DomainError("negative power of a polynomial");
    Laurent r(C(1));
    for (int i = 0; i < k; ++i) r *= *this;
    return r;
  }

 private:
  term_map terms_;
};

using LaurentPoly = Laurent<Integer>;
using RationalPoly = Laurent<Rational>;

inline LaurentPoly poly_mul(const LaurentPoly& a, const LaurentPoly& b) { return a * b; }

template <class C>
int trailing_degree(const Laurent<C>& p) {
  return p.trailing_degree();
}

inline RationalPoly to_rational(const LaurentPoly& p) {
  RationalPoly r;
  for (const auto& [e, c] : p.terms()) r.add_term(e, Rational(c));
  return r;
}

inline std::optional<LaurentPoly> to_integer(const RationalPoly& p) {
  LaurentPoly r;
  for (const auto& [e, c] : p.terms()) {
    if (!is_integral(c)) return std::nullopt;
    r.add_term(e, boost::multiprecision::numerator(c));
  }
  return r;
}

// ---------------------------------------------------------------------------
// Text format: terms in descending exponent order, e.g. "t^8 + 2*t^5 - t + 3".

template <class C>
std::string render(const Laurent<C>& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const int e = it->first;
    C c = it->second;
    const bool negative = c < 0;
    if (negative) c = -c;
    if (first)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    first = false;
    if (e == 0) {
      os << c.str();
      continue;
    }
    if (c != 1) os << c.str() << '*';
    os << 't';
    if (e != 1) os << '^' << e;
  }
  return os.str();
}

template <class C>
std::ostream& operator<<(std::ostream& os, const Laurent<C>& p) {
  return os << render(p);
}

namespace detail {

class PolyLexer {
 public:
  explicit PolyLexer(std::string_view s) : s_(s) {}

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool done() {
    skip_ws();
    return pos_ >= s_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  bool accept(char ch) {
    if (peek() == ch) {
      ++pos_;
      return true;
    }
    return false;
  }
  std::string digits() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("polynomial \"" + std::string(s_) + "\": " + what + " at offset " +
                     std::to_string(pos_));
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
};

template <class C>
C parse_coefficient(PolyLexer& lex, const std::string& num) {
  if constexpr (std::is_same_v<C, Rational>) {
    if (lex.accept('/')) {
      std::string den = lex.digits();
      if (den.empty()) lex.fail("expected denominator");
      Integer d(den);
      if (d == 0) lex.fail("zero denominator");
      return Rational(Integer(num), d);
    }
  }
  return C(Integer(num));
}

}  // namespace detail

/// Parses the text format produced by render(). Terms may appear in any
/// order and repeated exponents are summed.
template <class C = Integer>
Laurent<C> parse_laurent(std::string_view text) {
  detail::PolyLexer lex(text);
  if (lex.done()) lex.fail("empty input");
  Laurent<C> p;
  bool first = true;
  while (!lex.done()) {
    int sign = 1;
    if (lex.accept('+')) {
    } else if (lex.accept('-')) {
      sign = -1;
    } else if (!first) {
      lex.fail("expected '+' or '-'");
    }
    first = false;
    C coeff(1);
    bool have_coeff = false;
    if (std::string num = lex.digits(); !num.empty()) {
      coeff = detail::parse_coefficient<C>(lex, num);
      have_coeff = true;
    }
    int exponent = 0;
    bool star = have_coeff && lex.accept('*');
    if (lex.accept('t')) {
      exponent = 1;
      if (lex.accept('^')) {
        int esign = lex.accept('-') ? -1 : 1;
        std::string e = lex.digits();
        if (e.empty()) lex.fail("expected exponent");
        exponent = esign * std::stoi(e);
      }
    } else if (star || !have_coeff) {
      lex.fail("expected 't'");
    }
    p.add_term(exponent, sign == 1 ? coeff : C(-coeff));
  }
  return p;
}

}  // namespace cmsing
