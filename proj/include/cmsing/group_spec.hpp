#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "numeric.hpp"

namespace cmsing {

/// The imprimitive reflection group G(m,p,n); d = m/p.
struct GroupSpec {
  int m = 1;
  int p = 1;
  int n = 1;

  GroupSpec() = default;
  GroupSpec(int m_, int p_, int n_) : m(m_), p(p_), n(n_) {
    if (m < 1 || p < 1 || n < 1) throw DomainError("G(m,p,n): parameters must be positive");
    if (m % p != 0) throw DomainError("p must divide m");
  }

  int d() const noexcept { return m / p; }
  Integer order() const { return ipow(Integer(m), n) * factorial(n) / p; }
  std::string id() const {
    return "G(" + std::to_string(m) + "," + std::to_string(p) + "," + std::to_string(n) + ")";
  }
  // m, 2m, ..., (n-1)m, dn
  std::vector<int> degrees() const {
    std::vector<int> ds;
    for (int i = 1; i < n; ++i) ds.push_back(i * m);
    ds.push_back(d() * n);
    return ds;
  }

  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
};

/// Parses "G(m,p,n)"; whitespace around the integers is allowed.
inline GroupSpec parse_group_spec(std::string_view text) {
  auto fail = [&](const std::string& why) -> GroupSpec {
    throw ParseError("group spec \"" + std::string(text) + "\": " + why);
  };
  std::size_t pos = 0;
  auto ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto expect = [&](char c) {
    ws();
    if (pos >= text.size() || text[pos] != c) fail(std::string("expected '") + c + "'");
    ++pos;
  };
  auto integer = [&]() -> long long {
    ws();
    bool neg = false;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) neg = text[pos++] == '-';
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) fail("expected an integer");
    if (pos - start > 9) fail("integer too large");
    long long v = std::stoll(std::string(text.substr(start, pos - start)));
    return neg ? -v : v;
  };
  expect('G');
  expect('(');
  long long m = integer();
  expect(',');
  long long p = integer();
  expect(',');
  long long n = integer();
  expect(')');
  ws();
  if (pos != text.size()) fail("trailing characters");
  if (m < 1 || p < 1 || n < 1) fail("m, p, n must be positive integers");
  if (m % p != 0) fail("p must divide m");
  return GroupSpec(static_cast<int>(m), static_cast<int>(p), static_cast<int>(n));
}

}  // namespace cmsing
