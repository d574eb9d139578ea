#pragma once

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "exceptional.hpp"
#include "g4.hpp"
#include "molien.hpp"
#include "report.hpp"
#include "symplectic.hpp"

namespace cmsing::cli {

enum Exit { kOk = 0, kMismatch = 1, kUsage = 2 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Command {
  std::string name;
  std::optional<GroupSpec> group;
  bool json = false;
  bool dataset = false;  // fake-degrees: emit the dataset file instead
  std::optional<std::string> data;
  int threads = 1;
  long long max_order = kDefaultMaxOrder;
  int truncate = 30;
};

struct Output {
  Json doc;
  std::string text;
  int status = kOk;
};

inline const char* kCommands[] = {"fake-degrees", "scan", "witness", "verify-omega", "molien", "g4", "table1"};

inline Command parse_args(const std::vector<std::string>& args) {
  CLI::App app{"Fake degrees, divisibility scans and G4 checks for complex reflection groups", "cmsing"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  Command cmd;
  std::string group_text;
  std::optional<int> positional_n;
  app.add_flag("--json", cmd.json, "emit JSON");
  app.add_option("--data", cmd.data, "exceptional fake-degree dataset");
  app.add_option("--threads", cmd.threads, "worker threads")->check(CLI::Range(1, 256));
  app.add_option("--max-order", cmd.max_order, "largest group order for element-level work")->check(CLI::PositiveNumber);
  app.add_option("--truncate", cmd.truncate, "Molien truncation degree")->check(CLI::NonNegativeNumber);

  auto grouped = [&](const char* name, const char* help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("group", group_text, "G(m,p,n)")->required();
    return sub;
  };
  auto* fd = grouped("fake-degrees", "list labels with dimension, fake degree and b");
  fd->add_flag("--dataset", cmd.dataset, "write the fake degrees in dataset format");
  grouped("scan", "divisibility test for every label");
  grouped("witness", "evaluate the designated failing label");
  grouped("verify-omega", "class sums of restricted symplectic forms");
  auto* mol = grouped("molien", "Molien series against the degree product");
  mol->add_option("N", positional_n, "truncation degree")->check(CLI::NonNegativeNumber);
  app.add_subcommand("g4", "binary tetrahedral group checks");
  app.add_subcommand("table1", "scan an exceptional dataset and compare with the published counts");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    throw UsageError(app.help());
  } catch (const CLI::CallForAllHelp&) {
    throw UsageError(app.help());
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }
  cmd.name = app.get_subcommands().front()->get_name();
  if (!group_text.empty()) {
    try {
      cmd.group = parse_group_spec(group_text);
    } catch (const ParseError& e) {
      throw UsageError(e.what());
    } catch (const DomainError& e) {
      throw UsageError(e.what());
    }
  }
  if (positional_n) cmd.truncate = *positional_n;
  if (cmd.dataset && cmd.json) throw UsageError("--dataset and --json cannot be combined");
  if (cmd.data && cmd.name != "table1") throw UsageError("--data only applies to table1");
  return cmd;
}

namespace detail {

inline std::string join(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

inline Output fake_degrees(const Command& c) {
  const GroupSpec& g = *c.group;
  Output o;
  if (c.dataset) {
    ExceptionalDataset ds;
    ds.groups.push_back(dataset_from_series(g));
    o.text = render(ds);
    return o;
  }
  const LaurentPoly P = coinv_poincare(g);
  o.doc["group"] = g.id();
  o.doc["order"] = json_integer(g.order());
  o.doc["degrees"] = g.degrees();
  o.doc["coinvariant_poincare"] = render(P);
  o.doc["labels"] = Json::array();
  std::vector<std::vector<std::string>> rows;
  LaurentPoly sum;
  Integer sum_sq = 0;
  for (const auto& orb : orbits(g.m, g.p, g.n)) {
    const LaurentPoly f = fake_degree(g, orb);
    for (int e = 0; e < orb.stab_order; ++e) {
      const IrrLabel label{orb, e};
      const Integer dim = irr_dimension(g, label);
      sum += f * LaurentPoly::monomial(dim, 0);
      sum_sq += dim * dim;
      Json row;
      row["label"] = label.text();
      row["orbit"] = render(orb.canonical_rep);
      row["dim"] = json_integer(dim);
      row["b"] = f.trailing_degree();
      row["f"] = render(f);
      o.doc["labels"].push_back(row);
      rows.push_back({label.text(), dim.str(), std::to_string(f.trailing_degree()), render(f)});
    }
  }
  const bool ok = sum == P && sum_sq == g.order();
  o.doc["sum_checks"] = ok ? "ok" : "MISMATCH";
  o.text = "group " + g.id() + " order " + g.order().str() + " degrees " + join(g.degrees()) + "\n";
  o.text += "coinvariant Poincare polynomial " + render(P) + "\n";
  o.text += std::string("sum dim^2 = order and sum dim*f = P: ") + (ok ? "ok" : "MISMATCH") + "\n\n";
  o.text += render_table({"label", "dim", "b", "f"}, rows);
  o.status = ok ? kOk : kMismatch;
  return o;
}

inline Output scan(const Command& c) {
  const ScanReport r = scan_series(*c.group, c.threads);
  return {to_json(r), render_text(r), kOk};
}

inline Output witness(const Command& c) {
  const WitnessReport w = witness_check(*c.group);
  Output o;
  o.doc["group"] = w.group;
  o.doc["family"] = w.family;
  o.doc["witness"] = w.witness;
  o.doc["orbit"] = w.orbit;
  o.doc["verdict"] = to_json(w.verdict);
  o.doc["closed_form"] = w.closed_form;
  o.doc["closed_form_polynomial"] = w.closed_form_polynomial;
  o.doc["enumerated_fails"] = w.enumerated_fails;
  o.doc["matches_claim"] = w.matches_claim;
  o.doc["discrepancy"] = w.discrepancy;
  o.text = "group " + w.group + ", family " + w.family + "\n";
  o.text += "witness " + w.witness + " (orbit " + w.orbit + ")\n";
  o.text += "f = " + render(w.verdict.f) + ", b = " + std::to_string(w.verdict.b) + ", dim = " + w.verdict.dim.str() + "\n";
  o.text += "enumerated verdict: " + std::string(w.enumerated_fails ? "fails" : "divisible") + "\n";
  if (w.enumerated_fails) o.text += "remainder: " + render(w.verdict.remainder) + "\n";
  o.text += "closed form: " + w.closed_form + " is " + (w.closed_form_polynomial ? "" : "not ") + "a polynomial\n";
  o.text += w.matches_claim ? "witness confirmed\n" : "discrepancy: " + w.discrepancy + "\n";
  return o;
}

inline Output verify_omega(const Command& c) {
  const GroupSpec& g = *c.group;
  Output o;
  o.doc["group"] = g.id();
  o.doc["classes"] = Json::array();
  std::vector<std::vector<std::string>> rows;
  int idx = 0;
  for (const auto& cls : reflections(g, c.max_order)) {
    const OmegaCertificate cert = omega_class_sum(g, cls, c.max_order);
    const std::string status = cert.matches() ? "ok" : "MISMATCH";
    if (!cert.matches()) o.status = kMismatch;
    Json j;
    j["class"] = idx;
    j["size"] = cert.k;
    j["zeta"] = cert.zeta.str();
    j["lambda"] = cert.lambda.str();
    j["closed_form"] = cert.closed_form.str();
    j["status"] = status;
    o.doc["classes"].push_back(j);
    rows.push_back({std::to_string(idx), std::to_string(cert.k), cert.zeta.str(), cert.lambda.str(),
                    cert.closed_form.str(), status});
    ++idx;
  }
  o.text = "group " + g.id() + " (z = exp(2 pi i / " + std::to_string(g.m) + "))\n\n";
  o.text += render_table({"class", "size", "zeta", "lambda", "closed form", "status"}, rows);
  return o;
}

inline Output molien(const Command& c) {
  const GroupSpec& g = *c.group;
  const MolienComparison m = molien_trivial(g, c.truncate, c.max_order);
  Output o;
  o.status = m.matches() ? kOk : kMismatch;
  o.doc["group"] = g.id();
  o.doc["degrees"] = g.degrees();
  o.doc["truncation"] = m.truncation;
  o.doc["molien"] = render(m.molien);
  o.doc["degree_product"] = render(m.degrees);
  o.doc["distinct_determinants"] = m.distinct_determinants;
  o.doc["status"] = m.matches() ? "ok" : "MISMATCH";
  o.text = "group " + g.id() + " degrees " + join(g.degrees()) + ", truncated at t^" + std::to_string(m.truncation) + "\n";
  o.text += "molien          " + render(m.molien) + "\n";
  o.text += "degree product  " + render(m.degrees) + "\n";
  o.text += std::string("status ") + (m.matches() ? "ok" : "MISMATCH") + "\n";
  return o;
}

inline Output g4_battery(const Command&) {
  Output o;
  std::vector<std::pair<std::string, std::vector<g4::Check>>> sections;
  sections.push_back({"presentation", g4::presentation_checks()});
  sections.push_back({"classes", g4::class_product_checks()});
  const auto orth = g4::orthogonality();
  const auto models = g4::check_models();
  sections.push_back({"character table",
                      {{"row orthogonality", orth.rows},
                       {"column orthogonality", orth.columns},
                       {"quaternion model is a homomorphism", models.w_homomorphism},
                       {"quaternion traces match W", models.w_traces},
                       {"h model is a homomorphism", models.h_homomorphism},
                       {"h traces match the h row", models.h_traces},
                       {"reflections in h are exactly Cl_3 and Cl_4", models.reflections}}});
  const auto sa = g4::summand_absence_check();
  const auto expect_e = g4::mults({{g4::T, 12}, {g4::V1, 12}, {g4::V2, 12}, {g4::U, 36}});
  const auto expect_f = g4::mults({{g4::T, 3}, {g4::V1, 3}, {g4::V2, 3}, {g4::U, 9}});
  sections.push_back({"decompositions",
                      {{"End(E) = " + g4::render(sa.end_e), sa.end_e == expect_e},
                       {"End(F) = " + g4::render(sa.end_f), sa.end_f == expect_f},
                       {"h, h* absent from End(E) and End(F)", sa.ok()}}});
  std::vector<g4::Check> claim1;
  for (auto [n, m, a, b] : {std::tuple{12, 12, 1, 0}, {6, -6, 0, 1}, {24, 0, 1, 2}, {18, 6, 1, 1}}) {
    const auto r = g4::claim1_solve(n, m);
    claim1.push_back({"(" + std::to_string(n) + "," + std::to_string(m) + ") -> (" + std::to_string(a) + "," +
                          std::to_string(b) + ")",
                      r.feasible && r.a == a && r.b == b});
  }
  claim1.push_back({"(1,2) infeasible", !g4::claim1_solve(1, 2).feasible});
  sections.push_back({"aE + bF from (n, m, 0, ..., 0)", claim1});
  const auto forms = g4::g4_reflection_form_check();
  std::vector<g4::Check> form_checks = {
      {"Cl_3 form sum = " + forms.s_class.lambda.str() + " omega", forms.s_class.matches()},
      {"Cl_4 form sum = " + forms.t_class.lambda.str() + " omega", forms.t_class.matches()},
      {"both equal 2", forms.ok()}};
  for (auto& c : g4::trace_argument_checks()) form_checks.push_back(c);
  sections.push_back({"reflection forms", form_checks});
  std::vector<g4::Check> shapes;
  std::vector<std::string> kept;
  for (const auto& s : g4::claim2_dimension_filter())
    if (!s.eliminated) kept.push_back(s.name());
  shapes.push_back({"shapes left by the trace argument: E + F, E + 2F = CG4",
                    kept == std::vector<std::string>{"E + F", "E + 2F = CG4"}});
  sections.push_back({"shape filter", shapes});

  o.doc["sections"] = Json::array();
  int failed = 0;
  for (const auto& [title, checks] : sections) {
    Json s;
    s["section"] = title;
    s["checks"] = Json::array();
    o.text += title + "\n";
    for (const auto& ch : checks) {
      s["checks"].push_back({{"check", ch.name}, {"ok", ch.ok}});
      o.text += std::string("  ") + (ch.ok ? "ok    " : "FAIL  ") + ch.name + "\n";
      failed += ch.ok ? 0 : 1;
    }
    o.doc["sections"].push_back(s);
  }
  o.doc["shapes"] = Json::array();
  o.text += "\nshapes aE + bF of dimension <= 24\n";
  std::vector<std::vector<std::string>> rows;
  for (const auto& s : g4::claim2_dimension_filter()) {
    o.doc["shapes"].push_back({{"shape", s.name()},
                               {"dim", s.dim},
                               {"end_h", json_integer(s.end_h)},
                               {"end_hstar", json_integer(s.end_hstar)},
                               {"eliminated", s.eliminated}});
    rows.push_back({s.name(), std::to_string(s.dim), s.end_h.str(), s.end_hstar.str(),
                    s.eliminated ? "eliminated" : "retained"});
  }
  o.text += render_table({"shape", "dim", "h in End", "h* in End", "status"}, rows);
  o.doc["failed"] = failed;
  o.text += "\n" + (failed ? std::to_string(failed) + " checks failed" : std::string("all checks passed")) + "\n";
  o.status = failed ? kMismatch : kOk;
  return o;
}

inline Output table1(const Command& c) {
  Output o;
  std::vector<ScanReport> reports;
  if (c.data) {
    std::ifstream in(*c.data, std::ios::binary);
    if (!in) throw DataError("cannot read " + *c.data);
    std::stringstream buf;
    buf << in.rdbuf();
    reports = scan_exceptional(parse_dataset(buf.str()), c.threads);
  }
  const auto rows = compare_table1(reports);
  o.doc["data"] = c.data ? Json(*c.data) : Json(nullptr);
  o.doc["groups"] = Json::array();
  std::vector<std::vector<std::string>> cells;
  int mismatches = 0;
  for (const auto& r : rows) {
    std::string status;
    if (!r.observed)
      status = c.data ? "not in data" : "not run";
    else if (!r.expected)
      status = "no published count";
    else
      status = r.matches() ? "ok" : "MISMATCH";
    if (r.expected && r.observed && !r.matches()) ++mismatches;
    o.doc["groups"].push_back({{"group", r.group},
                               {"expected", r.expected ? Json(*r.expected) : Json(nullptr)},
                               {"observed", r.observed ? Json(*r.observed) : Json(nullptr)},
                               {"status", status}});
    cells.push_back({r.group, r.expected ? std::to_string(*r.expected) : "-",
                     r.observed ? std::to_string(*r.observed) : "-", status});
  }
  o.doc["mismatches"] = mismatches;
  if (!c.data) o.text = "not run \xe2\x80\x94 data required (pass --data <path>)\n\n";
  o.text += render_table({"group", "published", "observed", "status"}, cells);
  for (const auto& r : reports) o.text += "\n" + render_text(r);
  if (c.data) o.doc["reports"] = Json::array();
  for (const auto& r : reports) o.doc["reports"].push_back(to_json(r));
  o.status = mismatches ? kMismatch : kOk;
  return o;
}

}  // namespace detail

inline Output execute(const Command& c) {
  if (c.name == "fake-degrees") return detail::fake_degrees(c);
  if (c.name == "scan") return detail::scan(c);
  if (c.name == "witness") return detail::witness(c);
  if (c.name == "verify-omega") return detail::verify_omega(c);
  if (c.name == "molien") return detail::molien(c);
  if (c.name == "g4") return detail::g4_battery(c);
  if (c.name == "table1") return detail::table1(c);
  throw UsageError("unknown command " + c.name);
}

/// Parses, runs and prints. Returns the process exit status.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Command cmd;
  try {
    cmd = parse_args(args);
  } catch (const UsageError& e) {
    err << e.what() << "\n";
    return kUsage;
  }
  const std::string where = "cmsing " + cmd.name + ": ";
  try {
    Output o = execute(cmd);
    if (cmd.json && !cmd.dataset)
      out << o.doc.dump(2) << "\n";
    else
      out << o.text;
    return o.status;
  } catch (const ParseError& e) {
    err << where << e.what() << "\n";
    return kUsage;
  } catch (const DataError& e) {
    err << where << e.what() << "\n";
    return kUsage;
  } catch (const Refusal& e) {
    err << where << "refused: " << e.what() << "\n";
    return kUsage;
  } catch (const InvariantViolation& e) {
    err << where << "verification failed: " << e.what() << "\n";
    return kMismatch;
  } catch (const std::exception& e) {
    err << where << e.what() << "\n";
    return kMismatch;
  }
}

}  // namespace cmsing::cli
