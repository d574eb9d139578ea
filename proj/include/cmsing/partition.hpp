#pragma once

#include <algorithm>
#include <compare>
#include <numeric>
#include <string>
#include <vector>

#include "cyclotomic.hpp"

namespace cmsing {

/// Integer partition as a weakly decreasing list of positive parts.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] <= 0) throw DomainError("Partition: parts must be positive");
      if (i > 0 && parts_[i] > parts_[i - 1])
        throw DomainError("Partition: parts must be weakly decreasing");
    }
  }
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const noexcept { return parts_; }
  int size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
  int rows() const noexcept { return static_cast<int>(parts_.size()); }
  bool empty() const noexcept { return parts_.empty(); }

  // Conjugate (transposed diagram).
  Partition conjugate() const {
    std::vector<int> c;
    if (!parts_.empty()) {
      c.assign(parts_.front(), 0);
      for (int p : parts_)
        for (int j = 0; j < p; ++j) ++c[j];
    }
    return Partition(std::move(c));
  }

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

// Larger partitions first; for equal size, reverse lexicographic on parts.
inline bool precedes(const Partition& a, const Partition& b) {
  if (a.size() != b.size()) return a.size() > b.size();
  return a.parts() > b.parts();
}

/// Hook lengths of every cell, row by row.
inline std::vector<int> hook_multiset(const Partition& lambda) {
  const Partition conj = lambda.conjugate();
  std::vector<int> hooks;
  for (int i = 0; i < lambda.rows(); ++i)
    for (int j = 0; j < lambda.parts()[i]; ++j) {
      const int arm = lambda.parts()[i] - j - 1;
      const int leg = conj.parts()[j] - i - 1;
      hooks.push_back(arm + leg + 1);
    }
  return hooks;
}

/// prod over cells of (1 - t^hook).
inline GradedProduct hook_poly(const Partition& lambda) {
  GradedProduct g;
  for (int h : hook_multiset(lambda)) g.mul_binomial(h);
  return g;
}

/// n(lambda) = sum_i (i-1) lambda_i, rows indexed from 1.
inline int n_stat(const Partition& lambda) {
  int s = 0;
  for (int i = 0; i < lambda.rows(); ++i) s += i * lambda.parts()[i];
  return s;
}

/// (1-t)(1-t^2)...(1-t^n).
inline GradedProduct t_factorial(int n) {
  if (n < 0) throw DomainError("t_factorial: negative n");
  GradedProduct g;
  for (int a = 1; a <= n; ++a) g.mul_binomial(a);
  return g;
}

/// Number of standard Young tableaux, |lambda|! / prod hooks.
inline Integer syt_count(const Partition& lambda) {
  Integer den = 1;
  for (int h : hook_multiset(lambda)) den *= h;
  return factorial(lambda.size()) / den;
}

/// All partitions of n, largest parts first.
inline std::vector<Partition> partitions(int n) {
  std::vector<Partition> out;
  if (n < 0) return out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int remaining, int max_part) -> void {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      cur.push_back(p);
      self(self, remaining - p, p);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

}  // namespace cmsing
