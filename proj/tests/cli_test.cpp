#include <cstdio>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "cmsing/cli.hpp"

using namespace cmsing;
using namespace cmsing::cli;

namespace {

struct Result {
  int status;
  std::string out, err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  int status = run(args, out, err);
  return {status, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& content) {
  const std::string path = ::testing::TempDir() + name;
  std::ofstream(path, std::ios::binary) << content;
  return path;
}

}  // namespace

TEST(ParseArgs, GroupSpecs) {
  auto c = parse_args({"scan", "G(5,5,2)"});
  EXPECT_EQ(c.name, "scan");
  EXPECT_EQ(*c.group, GroupSpec(5, 5, 2));
  try {
    parse_args({"scan", "G(4,3,2)"});
    FAIL();
  } catch (const UsageError& e) {
    EXPECT_NE(std::string(e.what()).find("p must divide m"), std::string::npos);
  }
  EXPECT_THROW(parse_args({"scan", "G(0,1,2)"}), UsageError);
  EXPECT_THROW(parse_args({"scan", "G(2,1)"}), UsageError);
  EXPECT_THROW(parse_args({"scan"}), UsageError);
  EXPECT_THROW(parse_args({}), UsageError);
  EXPECT_THROW(parse_args({"frobnicate"}), UsageError);
  EXPECT_THROW(parse_args({"scan", "G(2,1,2)", "--nope"}), UsageError);
  EXPECT_THROW(parse_args({"scan", "G(2,1,2)", "--threads", "0"}), UsageError);
  EXPECT_THROW(parse_args({"scan", "G(2,1,2)", "--data", "x.fd"}), UsageError);
}

TEST(ParseArgs, Flags) {
  auto c = parse_args({"--json", "molien", "G(2,1,2)", "--truncate", "8", "--max-order", "100"});
  EXPECT_TRUE(c.json);
  EXPECT_EQ(c.truncate, 8);
  EXPECT_EQ(c.max_order, 100);
  EXPECT_EQ(parse_args({"molien", "G(2,1,2)", "12"}).truncate, 12);
  auto t = parse_args({"table1", "--data", "exceptional.fd", "--threads", "3"});
  EXPECT_EQ(t.name, "table1");
  EXPECT_EQ(*t.data, "exceptional.fd");
  EXPECT_EQ(t.threads, 3);
}

TEST(Run, FakeDegreesG332) {
  auto r = call({"fake-degrees", "G(3,3,2)"});
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("2|-|-#0    1    0  1\n"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("1,1|-|-#0  1    3  t^3\n"), std::string::npos);
  EXPECT_NE(r.out.find("1|1|-#0    2    1  t^2 + t\n"), std::string::npos);
}

TEST(Run, ScanReportsFailureRowAndExitsZero) {
  auto r = call({"scan", "G(2,2,4)"});
  EXPECT_EQ(r.status, 0);
  std::istringstream lines(r.out);
  bool found = false;
  for (std::string line; std::getline(lines, line);)
    if (line.rfind("2,2|-#", 0) == 0) found = line.find("fails") != std::string::npos;
  EXPECT_TRUE(found) << r.out;
}

TEST(Run, JsonMatchesText) {
  for (const std::string g : {"G(2,2,4)", "G(3,3,3)", "G(4,1,2)"}) {
    auto text = call({"scan", g});
    auto json = call({"scan", g, "--json"});
    ASSERT_EQ(json.status, 0);
    const ScanReport back = scan_report_from_json(Json::parse(json.out));
    EXPECT_EQ(render_text(back), text.out);
    EXPECT_EQ(to_json(back).dump(2) + "\n", json.out);
  }
}

TEST(Run, Deterministic) {
  for (std::vector<std::string> args : {std::vector<std::string>{"scan", "G(4,2,3)"}, {"g4", "--json"},
                                        {"molien", "G(3,3,3)", "--truncate", "10"}, {"verify-omega", "G(4,2,2)"}}) {
    EXPECT_EQ(call(args).out, call(args).out);
  }
  EXPECT_EQ(call({"scan", "G(6,2,3)", "--threads", "4"}).out, call({"scan", "G(6,2,3)"}).out);
}

TEST(Run, G4AllChecksPass) {
  auto r = call({"g4"});
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("all checks passed"), std::string::npos);
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
}

TEST(Run, WitnessAndOmegaAndMolien) {
  auto w = call({"witness", "G(5,5,2)"});
  EXPECT_EQ(w.status, 0);
  EXPECT_NE(w.out.find("witness confirmed"), std::string::npos);
  auto d = call({"witness", "G(3,3,2)"});
  EXPECT_EQ(d.status, 0);
  EXPECT_NE(d.out.find("discrepancy"), std::string::npos);
  EXPECT_EQ(call({"witness", "G(3,1,2)"}).status, 2);

  auto o = call({"verify-omega", "G(4,2,2)"});
  EXPECT_EQ(o.status, 0);
  EXPECT_EQ(o.out.find("MISMATCH"), std::string::npos);
  EXPECT_EQ(call({"verify-omega", "G(2,2,2)"}).status, 2);

  auto m = call({"molien", "G(2,1,2)", "6"});
  EXPECT_EQ(m.status, 0);
  EXPECT_NE(m.out.find("status ok"), std::string::npos);
  auto big = call({"molien", "G(6,1,4)", "--max-order", "100"});
  EXPECT_EQ(big.status, 2);
  EXPECT_NE(big.err.find("--max-order"), std::string::npos);
}

TEST(Run, FakeDegreesDatasetRoundTrip) {
  auto r = call({"fake-degrees", "G(3,3,2)", "--dataset"});
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(render(parse_dataset(r.out)), r.out);
  EXPECT_EQ(call({"fake-degrees", "G(3,3,2)", "--dataset", "--json"}).status, 2);
}

TEST(Run, Table1) {
  auto none = call({"table1"});
  EXPECT_EQ(none.status, 0);
  EXPECT_NE(none.out.find("not run \xe2\x80\x94 data required"), std::string::npos);

  ExceptionalDataset ds;
  ds.groups.push_back(dataset_from_series(GroupSpec(3, 3, 2)));
  auto ok = call({"table1", "--data", temp_file("g332.fd", render(ds))});
  EXPECT_EQ(ok.status, 0);
  EXPECT_NE(ok.out.find("no obstruction found"), std::string::npos);

  // A dataset named G12 whose count differs from the published 1 is a mismatch.
  ExceptionalDataset fake;
  fake.groups.push_back(dataset_from_series(GroupSpec(3, 3, 3)));
  fake.groups[0].name = "G12";
  auto mismatch = call({"table1", "--data", temp_file("g12.fd", render(fake))});
  EXPECT_EQ(mismatch.status, 1);
  EXPECT_NE(mismatch.out.find("MISMATCH"), std::string::npos);

  std::string bad = render(ds);
  bad.replace(bad.find("dim 2"), 5, "dim 3");
  auto rejected = call({"table1", "--data", temp_file("bad.fd", bad)});
  EXPECT_EQ(rejected.status, 2);
  EXPECT_NE(rejected.err.find("irrep 1|1|-#0"), std::string::npos);
  EXPECT_EQ(call({"table1", "--data", "/nonexistent/file.fd"}).status, 2);
  EXPECT_EQ(call({"table1", "--data", temp_file("junk.fd", "hello\n")}).status, 2);
}
