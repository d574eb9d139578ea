#pragma once

#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "scan.hpp"

namespace cmsing {

struct ExceptionalRow {
  std::string id;
  Integer dim;
  LaurentPoly fake;

  bool operator==(const ExceptionalRow&) const = default;
};

struct ExceptionalGroup {
  std::string name;
  Integer order;
  int rank = 0;
  std::vector<int> degrees;
  std::vector<ExceptionalRow> rows;

  bool operator==(const ExceptionalGroup&) const = default;
};

struct ExceptionalDataset {
  std::vector<ExceptionalGroup> groups;

  bool operator==(const ExceptionalDataset&) const = default;
};

// Line format:
//   group <name> order <integer> rank <n> degrees <d1,...,dn>
//   irrep <id> dim <integer> fake <polynomial>
// Blank lines and lines starting with '#' are skipped.
inline ExceptionalDataset parse_dataset(std::string_view text) {
  ExceptionalDataset ds;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  auto fail = [&](const std::string& why) {
    throw ParseError("dataset line " + std::to_string(lineno) + ": " + why);
  };
  auto integer = [&](const std::string& tok) -> Integer {
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos) fail("expected integer, got '" + tok + "'");
    return Integer(tok);
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    std::string kw;
    ls >> kw;
    if (kw == "group") {
      ExceptionalGroup g;
      std::string k1, order, k2, rank, k3, degrees, extra;
      ls >> g.name >> k1 >> order >> k2 >> rank >> k3 >> degrees;
      if (g.name.empty() || k1 != "order" || k2 != "rank" || k3 != "degrees" || (ls >> extra))
        fail("expected 'group <name> order <o> rank <n> degrees <d1,...>'");
      g.order = integer(order);
      g.rank = static_cast<int>(integer(rank));
      std::istringstream dl(degrees);
      for (std::string d; std::getline(dl, d, ',');) g.degrees.push_back(static_cast<int>(integer(d)));
      ds.groups.push_back(std::move(g));
    } else if (kw == "irrep") {
      if (ds.groups.empty()) fail("irrep line before any group line");
      ExceptionalRow row;
      std::string k1, dim, k2;
      ls >> row.id >> k1 >> dim >> k2;
      if (row.id.empty() || k1 != "dim" || k2 != "fake") fail("expected 'irrep <id> dim <d> fake <polynomial>'");
      row.dim = integer(dim);
      std::string poly;
      std::getline(ls, poly);
      try {
        row.fake = parse_laurent(poly);
      } catch (const ParseError& e) {
        fail(e.what());
      }
      ds.groups.back().rows.push_back(std::move(row));
    } else {
      fail("unknown keyword '" + kw + "'");
    }
  }
  return ds;
}

inline std::string render(const ExceptionalDataset& ds) {
  std::string out;
  for (std::size_t i = 0; i < ds.groups.size(); ++i) {
    const auto& g = ds.groups[i];
    if (i > 0) out += "\n";
    out += "group " + g.name + " order " + g.order.str() + " rank " + std::to_string(g.rank) + " degrees ";
    for (std::size_t j = 0; j < g.degrees.size(); ++j) out += (j ? "," : "") + std::to_string(g.degrees[j]);
    out += "\n";
    for (const auto& r : g.rows) out += "irrep " + r.id + " dim " + r.dim.str() + " fake " + render(r.fake) + "\n";
  }
  return out;
}

/// Rejects a group whose rows are inconsistent with its order and degrees.
inline void validate(const ExceptionalGroup& g) {
  auto fail = [&](const std::string& why) { throw DataError("dataset group " + g.name + ": " + why); };
  if (g.rank != static_cast<int>(g.degrees.size()))
    fail("rank " + std::to_string(g.rank) + " but " + std::to_string(g.degrees.size()) + " degrees");
  Integer prod = 1;
  for (int d : g.degrees) {
    if (d <= 0) fail("nonpositive degree");
    prod *= d;
  }
  if (prod != g.order) fail("product of degrees is " + prod.str() + ", order is " + g.order.str());
  std::set<std::string> ids;
  Integer sum_sq = 0;
  LaurentPoly sum_f;
  for (const auto& r : g.rows) {
    const std::string where = "irrep " + r.id + ": ";
    if (!ids.insert(r.id).second) fail(where + "duplicate id");
    if (r.fake.is_zero() || r.fake.trailing_degree() < 0 || !r.fake.nonnegative_coefficients())
      fail(where + "fake degree is not a nonzero polynomial with nonnegative coefficients");
    if (r.fake.at_one() != r.dim) fail(where + "f(1) = " + r.fake.at_one().str() + " but dim = " + r.dim.str());
    sum_sq += r.dim * r.dim;
    sum_f += r.fake * LaurentPoly::monomial(r.dim, 0);
  }
  if (sum_sq != g.order) fail("sum of dim^2 is " + sum_sq.str() + ", order is " + g.order.str());
  if (sum_f != coinvariant_poincare(g.degrees))
    fail("sum of dim * f is not the coinvariant Poincare polynomial");
}

inline void validate(const ExceptionalDataset& ds) {
  std::set<std::string> names;
  for (const auto& g : ds.groups) {
    if (!names.insert(g.name).second) throw DataError("dataset group " + g.name + ": duplicate group");
    validate(g);
  }
}

inline std::vector<ScanReport> scan_exceptional(const ExceptionalDataset& ds, int threads = 1) {
  validate(ds);
  std::vector<ScanReport> out;
  for (const auto& g : ds.groups) {
    const LaurentPoly P = coinvariant_poincare(g.degrees);
    ScanReport rep;
    rep.group = g.name;
    rep.notes = scan_header_notes();
    rep.verdicts = parallel_map(
        g.rows,
        [&](const ExceptionalRow& r) {
          DivisibilityVerdict v = lemma_poly_test(P, r.fake, r.dim);
          v.label = r.id;
          return v;
        },
        threads);
    for (const auto& v : rep.verdicts) rep.failures += v.divisible ? 0 : 1;
    rep.labels = static_cast<int>(rep.verdicts.size());
    out.push_back(std::move(rep));
  }
  return out;
}

/// Published failure counts for G5..G37.
inline const std::map<std::string, int>& table1_expectations() {
  static const std::map<std::string, int> table = [] {
    const int counts[] = {3,  6,  13, 2,  16, 15, 43, 1,  4,  9,  18, 15, 55,  70, 164, 18, 42,
                          12, 4,  8,  3,  10, 26, 5,  24, 24, 40, 33, 30, 148, 9,  30,  75};
    std::map<std::string, int> t;
    for (int i = 0; i < 33; ++i) t["G" + std::to_string(i + 5)] = counts[i];
    return t;
  }();
  return table;
}

struct Table1Row {
  std::string group;
  std::optional<int> expected;
  std::optional<int> observed;

  bool matches() const { return expected && observed && *expected == *observed; }
};

// One row per group that is in the table or in the scanned data, table order first.
inline std::vector<Table1Row> compare_table1(const std::vector<ScanReport>& reports) {
  std::vector<Table1Row> rows;
  std::map<std::string, int> seen;
  for (const auto& r : reports) seen[r.group] = r.failures;
  for (int i = 5; i <= 37; ++i) {
    const std::string name = "G" + std::to_string(i);
    Table1Row row{name, table1_expectations().at(name), std::nullopt};
    if (auto it = seen.find(name); it != seen.end()) row.observed = it->second;
    rows.push_back(row);
  }
  for (const auto& r : reports)
    if (!table1_expectations().count(r.group)) rows.push_back({r.group, std::nullopt, r.failures});
  return rows;
}

/// The series fake degrees of g written out as a dataset group.
inline ExceptionalGroup dataset_from_series(const GroupSpec& g) {
  ExceptionalGroup eg;
  eg.name = g.id();
  eg.order = g.order();
  eg.rank = g.n;
  eg.degrees = g.degrees();
  for (const auto& o : orbits(g.m, g.p, g.n)) {
    const LaurentPoly f = fake_degree(g, o);
    for (int e = 0; e < o.stab_order; ++e) {
      const IrrLabel label{o, e};
      eg.rows.push_back({label.text(), irr_dimension(g, label), f});
    }
  }
  return eg;
}

}  // namespace cmsing
