// Acceptance gate: one line per criterion, nonzero exit if any fails.
// Criterion 7 reads a dataset from CMSING_EXCEPTIONAL_DATA when set.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "cmsing/cli.hpp"

using namespace cmsing;

namespace {

// Limits in seconds; all comparisons are exact.
constexpr double kBatteryLimit = 30, kSymmetricLimit = 5, kMolienLimit = 60, kOmegaLimit = 60, kScanLimit = 10,
                 kG4Limit = 5;
constexpr int kMolienTruncation = 30;

struct Outcome {
  bool pass = true;
  bool skipped = false;
  std::string detail;
  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail = what;
    pass = pass && ok;
  }
};

int failures = 0;

void report(int n, const std::string& title, const std::function<Outcome()>& body, double limit = 0) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.pass = false;
    o.detail = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (limit > 0 && secs >= limit) o.require(false, "over time limit");
  std::ostringstream line;
  line << (!o.pass ? "FAIL" : o.skipped ? "SKIP" : "PASS") << "  criterion " << n << ": " << title;
  if (limit > 0) line << " [" << std::fixed << std::setprecision(2) << secs << " s < " << static_cast<int>(limit) << " s]";
  if (!o.detail.empty()) line << " (" << o.detail << ")";
  std::cout << line.str() << std::endl;
  if (!o.pass) ++failures;
}

std::vector<GroupSpec> configured(long long bound) {
  std::vector<GroupSpec> gs;
  for (int m = 1; m <= 6; ++m)
    for (int p = 1; p <= m; ++p)
      for (int n = 1; n <= 4; ++n)
        if (m % p == 0 && GroupSpec(m, p, n).order() <= bound) gs.emplace_back(m, p, n);
  return gs;
}

// prod_i (1 + t + ... + t^{d_i - 1}) by plain multiplication.
LaurentPoly naive_coinvariants(const std::vector<int>& degrees) {
  LaurentPoly p(1);
  for (int d : degrees) {
    LaurentPoly q;
    for (int e = 0; e < d; ++e) q.add_term(e, Integer(1));
    p = p * q;
  }
  return p;
}

// Coefficients up to t^N of prod_i 1/(1 - t^{d_i}) by counting solutions.
LaurentPoly naive_degree_series(const std::vector<int>& degrees, int N) {
  std::vector<Integer> c(N + 1, 0);
  c[0] = 1;
  for (int d : degrees)
    for (int k = d; k <= N; ++k) c[k] += c[k - d];
  LaurentPoly p;
  for (int k = 0; k <= N; ++k) p.add_term(k, c[k]);
  return p;
}

Outcome battery() {
  Outcome o;
  int groups = 0;
  for (const auto& g : configured(5000)) {
    ++groups;
    const std::string id = g.id();
    Integer sum_sq = 0;
    LaurentPoly sum_f;
    for (const auto& orb : orbits(g.m, g.p, g.n)) {
      const LaurentPoly f = fake_degree(g, orb);
      int nsum = 0;
      for (const auto& c : orb.canonical_rep.components()) nsum += n_stat(c);
      o.require(f.trailing_degree() == R_poly(orb).trailing_degree() + g.m * nsum, id + " trailing degree");
      for (int e = 0; e < orb.stab_order; ++e) {
        const Integer dim = irr_dimension(g, IrrLabel{orb, e});
        o.require(f.at_one() == dim, id + " f(1) != dim");
        sum_sq += dim * dim;
        sum_f += f * LaurentPoly::monomial(dim, 0);
      }
    }
    o.require(sum_sq == ipow(Integer(g.m), g.n) * factorial(g.n) / g.p, id + " sum dim^2");
    o.require(sum_f == naive_coinvariants(g.degrees()), id + " sum dim*f");
  }
  if (o.pass) o.detail = std::to_string(groups) + " groups";
  return o;
}

Outcome symmetric() {
  Outcome o;
  int count = 0;
  for (int n = 1; n <= 6; ++n) {
    const GroupSpec g(1, 1, n);
    for (const auto& orb : orbits(1, 1, n)) {
      ++count;
      o.require(fake_degree(g, orb) == syt_major_index_oracle(orb.canonical_rep.components()[0]),
                "partition " + render(orb.canonical_rep));
    }
  }
  if (o.pass) o.detail = std::to_string(count) + " partitions";
  return o;
}

Outcome molien() {
  Outcome o;
  int groups = 0;
  for (const auto& g : configured(2000)) {
    ++groups;
    const auto cmp = molien_trivial(g, kMolienTruncation);
    o.require(cmp.molien == naive_degree_series(g.degrees(), kMolienTruncation), g.id());
  }
  if (o.pass) o.detail = std::to_string(groups) + " groups, N = " + std::to_string(kMolienTruncation);
  return o;
}

Outcome omega_sums() {
  Outcome o;
  int classes = 0, groups = 0;
  for (const auto& g : configured(2000)) {
    if (!reflection_rep_irreducible(g)) continue;
    ++groups;
    for (const auto& cls : reflections(g)) {
      ++classes;
      const auto cert = omega_class_sum(g, cls);
      // (1 - z)(1 - 1/z) = 2 - z - 1/z, so the closed form is k/n.
      o.require(cert.matches() && cert.lambda == CycloNumber::rational(g.m, Rational(cert.k, g.n)),
                g.id() + " class of " + std::to_string(cert.k));
    }
  }
  const auto forms = g4::g4_reflection_form_check();
  o.require(forms.s_class.lambda == CycloNumber::rational(12, 2) && forms.s_class.matches(), "G4 Cl_3");
  o.require(forms.t_class.lambda == CycloNumber::rational(12, 2) && forms.t_class.matches(), "G4 Cl_4");
  if (o.pass)
    o.detail = std::to_string(classes) + " classes in " + std::to_string(groups) + " groups, G4 sums = 2, 2";
  return o;
}

Outcome scans() {
  Outcome o;
  for (int m = 1; m <= 4; ++m)
    for (int n = 1; n <= 4; ++n) o.require(scan_series(GroupSpec(m, 1, n)).failures == 0, GroupSpec(m, 1, n).id());
  for (const GroupSpec& g : {GroupSpec(2, 2, 3), GroupSpec(3, 3, 2), GroupSpec(4, 4, 2)})
    o.require(scan_series(g).failures == 0, g.id());
  for (const GroupSpec& g : {GroupSpec(5, 5, 2), GroupSpec(6, 6, 2), GroupSpec(2, 2, 4), GroupSpec(2, 2, 5),
                             GroupSpec(3, 3, 3)})
    o.require(scan_series(g).failures >= 1, g.id());

  auto row = [&](const GroupSpec& g, const std::string& orbit) {
    const auto r = scan_series(g);
    const auto* v = find_verdict(r, g, orbit);
    return v ? std::optional<DivisibilityVerdict>(*v) : std::nullopt;
  };
  const auto w552 = row(GroupSpec(5, 5, 2), "1|1|-|-|-");
  o.require(w552 && !w552->divisible && w552->f == parse_laurent("t + t^4"), "G(5,5,2) witness");
  const auto w224 = row(GroupSpec(2, 2, 4), "2,2|-");
  o.require(w224 && !w224->divisible, "G(2,2,4) witness");
  const auto w333 = row(GroupSpec(3, 3, 3), "1|1,1|-");
  o.require(w333 && !w333->divisible && w333->f == parse_laurent("2*t^5 + t^8"), "G(3,3,3) witness");
  return o;
}

Outcome g4_battery() {
  Outcome o;
  const auto& g = g4::group();
  o.require(g.elements.size() == 24, "order");
  for (const auto& c : g4::presentation_checks()) o.require(c.ok, c.name);
  const std::array<int, 7> sizes = {1, 1, 4, 4, 6, 4, 4};
  for (int c = 0; c < 7; ++c) o.require(static_cast<int>(g.classes[c].size()) == sizes[c], "class sizes");
  for (const auto& c : g4::class_product_checks()) o.require(c.ok, c.name);
  const auto sa = g4::summand_absence_check();
  o.require(sa.end_e == g4::mults({{g4::T, 12}, {g4::V1, 12}, {g4::V2, 12}, {g4::U, 36}}), "End(E)");
  o.require(sa.end_f == g4::mults({{g4::T, 3}, {g4::V1, 3}, {g4::V2, 3}, {g4::U, 9}}), "End(F)");
  for (auto [n, m, a, b] : {std::tuple{12, 12, 1, 0}, {6, -6, 0, 1}, {24, 0, 1, 2}, {18, 6, 1, 1}}) {
    const auto r = g4::claim1_solve(n, m);
    o.require(r.feasible && r.a == a && r.b == b, "claim1 (" + std::to_string(n) + "," + std::to_string(m) + ")");
  }
  const auto orth = g4::orthogonality();
  o.require(orth.rows && orth.columns, "orthogonality");
  return o;
}

Outcome table1(bool& ran) {
  Outcome o;
  ExceptionalDataset synthetic;
  synthetic.groups.push_back(dataset_from_series(GroupSpec(3, 3, 2)));
  const std::string text = render(synthetic);
  o.require(parse_dataset(text) == synthetic && render(parse_dataset(text)) == text, "format round-trip");
  const auto sr = scan_exceptional(parse_dataset(text));
  o.require(sr.size() == 1 && sr[0].failures == 0, "synthetic G(3,3,2) dataset");

  const char* path = std::getenv("CMSING_EXCEPTIONAL_DATA");
  ran = path && *path;
  if (!ran) {
    o.skipped = true;
    o.detail = "not run \xe2\x80\x94 data required; round-trip and synthetic G(3,3,2) check passed";
    if (!o.pass) o.detail = "round-trip or synthetic check failed";
    return o;
  }
  std::ifstream in(path, std::ios::binary);
  o.require(static_cast<bool>(in), std::string("cannot read ") + path);
  std::stringstream buf;
  buf << in.rdbuf();
  const auto reports = scan_exceptional(parse_dataset(buf.str()));
  int compared = 0;
  for (const auto& row : compare_table1(reports)) {
    if (!row.expected) continue;
    o.require(row.observed.has_value(), row.group + " missing from data");
    if (row.observed) ++compared;
    o.require(row.matches(), row.group + ": published " + std::to_string(*row.expected) + ", observed " +
                                 (row.observed ? std::to_string(*row.observed) : "-"));
  }
  if (o.pass) o.detail = std::to_string(compared) + " groups match";
  return o;
}

Outcome determinism() {
  Outcome o;
  const std::vector<std::vector<std::string>> runs = {
      {"fake-degrees", "G(4,2,3)"}, {"scan", "G(3,3,3)"},          {"scan", "G(6,2,3)", "--json"},
      {"witness", "G(2,2,5)"},      {"verify-omega", "G(3,1,3)"},  {"molien", "G(4,2,2)", "--truncate", "30"},
      {"g4"},                       {"g4", "--json"},              {"table1"}};
  for (const auto& args : runs) {
    std::ostringstream a, b, e;
    cli::run(args, a, e);
    cli::run(args, b, e);
    std::string joined;
    for (const auto& s : args) joined += s + " ";
    o.require(!a.str().empty() && a.str() == b.str(), "output differs: " + joined);
  }
  std::ostringstream seq, par, e;
  cli::run({"scan", "G(6,3,3)"}, seq, e);
  cli::run({"scan", "G(6,3,3)", "--threads", "4"}, par, e);
  o.require(seq.str() == par.str(), "threaded scan differs");
  if (o.pass) o.detail = std::to_string(runs.size() + 1) + " report pairs identical";
  return o;
}

}  // namespace

int main() {
  report(1, "fake-degree consistency battery", battery, kBatteryLimit);
  report(2, "symmetric-group major-index oracle", symmetric, kSymmetricLimit);
  report(3, "Molien series equals the degree product", molien, kMolienLimit);
  report(4, "reflection-class form sums", omega_sums, kOmegaLimit);
  report(5, "scan verdicts", scans, kScanLimit);
  report(6, "G4 battery", g4_battery, kG4Limit);
  bool ran = false;
  report(7, "published exceptional failure counts", [&] { return table1(ran); });
  report(8, "deterministic reports", determinism);
  std::cout << (failures ? std::to_string(failures) + " criteria failed" : std::string("all criteria passed")) << std::endl;
  return failures ? 1 : 0;
}
