#include <gtest/gtest.h>

#include <filesystem>
#include <nlohmann/json.hpp>

#include "helpers.hpp"
#include "ntx/cli.hpp"

using namespace ntx;
using namespace ntx::cli;

namespace {

std::string spec_path(const std::string& name) { return std::string(NTX_SPECS_DIR) + "/" + name; }

ReportDocument run(const std::string& command, const std::string& spec, Flags flags = {}) {
  return run_command(command, parse_spec(spec_path(spec)), flags);
}

bool has_fact(const ReportDocument& r, const std::string& name, const std::string& fact) {
  for (const auto& c : r.checks)
    if (c.name == name)
      for (const auto& f : c.facts)
        if (f.find(fact) != std::string::npos) return true;
  return false;
}

int run_main(std::vector<std::string> args) {
  args.insert(args.begin(), "ntx");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  testing::internal::CaptureStdout();
  testing::internal::CaptureStderr();
  const int code = main_entry(static_cast<int>(argv.size()), argv.data());
  testing::internal::GetCapturedStdout();
  testing::internal::GetCapturedStderr();
  return code;
}

}  // namespace

TEST(Cli, EveryShippedSpecParses) {
  std::size_t count = 0;
  for (const auto& entry : std::filesystem::directory_iterator(NTX_SPECS_DIR)) {
    if (entry.path().extension() != ".spec") continue;
    EXPECT_NO_THROW(parse_spec(entry.path().string())) << entry.path();
    ++count;
  }
  EXPECT_GE(count, 8u);
}

TEST(Cli, ParsedInstanceMatchesLibraryBuild) {
  const auto doc = parse_spec(spec_path("z4_n2.spec"));
  EXPECT_EQ(doc.extension->order(), 64u);
  EXPECT_EQ(doc.recorded.size(), 2u);
  EXPECT_TRUE(th::same_tables(*doc.extension->flat(), oracle::truncated_zm(4, 2)));
  const auto f4 = parse_spec(spec_path("f2_f4_n2.spec"));
  EXPECT_TRUE(th::same_tables(*f4.extension->flat(), oracle::f2_f4(2)));
  const auto sq = parse_spec(spec_path("f2_f2sq_n2.spec"));
  EXPECT_TRUE(th::same_tables(*sq.extension->flat(), oracle::f2_f2sq()));
}

TEST(Cli, ModuleCountMismatchReportsLine) {
  const std::string text =
      "[ring]\nkind = zm\nm = 4\n\n[module]\nkind = regular\n[module]\nkind = regular\n[maps]\nn = 3\n"
      "kind = ring_multiplication\n";
  try {
    parse_spec_text(text, "bad.spec");
    FAIL() << "accepted a mismatched n";
  } catch (const SpecError& e) {
    EXPECT_EQ(e.line(), 10);
    EXPECT_NE(std::string(e.what()).find("bad.spec:10:"), std::string::npos) << e.what();
  }
}

TEST(Cli, ParseErrorsCarryPositions) {
  auto expect_error_at = [](const std::string& text, int line) {
    try {
      parse_spec_text(text, "t");
      ADD_FAILURE() << "accepted:\n" << text;
    } catch (const SpecError& e) {
      EXPECT_EQ(e.line(), line) << e.what();
    }
  };
  const std::string tail = "[module]\nkind = regular\n[maps]\nkind = ring_multiplication\n";
  expect_error_at("[ring]\nkind = zm\nm = 4\nm = 5\n" + tail, 4);
  expect_error_at("[ring]\nkind = zm\nm = 4\n" + tail + "[bogus]\n", 8);
  expect_error_at("[ring]\nkind = zm\nm = 4\ncolour = red\n" + tail, 4);
  expect_error_at("[ring]\nkind = zm\nm = 4\n[module]\nkind = regular\n[maps]\nkind = nonsense\n", 7);
  expect_error_at("[ring]\nkind = zm\nm = four\n" + tail, 3);
  expect_error_at("[ring]\nkind = zm\nm = 4\n", 1);
}

TEST(Cli, SuiteOnZ4RecordsWorkedSquares) {
  const auto r = run("suite", "z4_n2.spec");
  EXPECT_EQ(r.exit_status, exit_ok) << r.error;
  EXPECT_TRUE(has_fact(r, "recorded_products", "(2,1,2)^2 = (0,0,1)"));
  EXPECT_TRUE(has_fact(r, "recorded_products", "(0,1,0)^2 = (0,0,1)"));
  for (const auto& c : r.checks) {
    EXPECT_NE(c.verdict, Verdict::fail) << c.name;
    EXPECT_FALSE(c.anchor.empty()) << c.name;
  }
}

TEST(Cli, FactorCommand) {
  Flags f;
  f.elements = {"0,1,0"};
  const auto r = run("factor", "z2_n2.spec", f);
  EXPECT_EQ(r.exit_status, exit_ok) << r.error;
  EXPECT_TRUE(has_fact(r, "element:(0,1,0)", "(0,1,0)^2 = (0,0,1)"));
  const auto missing = run("factor", "z2_n2.spec");
  EXPECT_EQ(missing.exit_status, exit_usage);
}

TEST(Cli, ExploratoryClassifyIsRefused) {
  const auto r = run("classify", "example_z5_exploratory.spec");
  EXPECT_EQ(r.exit_status, exit_check_failed);
  ASSERT_EQ(r.checks.size(), 1u);
  EXPECT_EQ(r.checks[0].name, "ring_axioms");
  EXPECT_EQ(r.checks[0].verdict, Verdict::fail);
  EXPECT_FALSE(r.checks[0].witnesses.empty());
}

TEST(Cli, ValidateReportsExampleVerdicts) {
  const auto z11 = run("validate", "example_z11_exploratory.spec");
  const auto* sym = th::find_record(z11.checks, "map_symmetric");
  const auto* assoc = th::find_record(z11.checks, "map_associative");
  ASSERT_TRUE(sym && assoc);
  EXPECT_EQ(sym->verdict, Verdict::pass);
  EXPECT_EQ(assoc->verdict, Verdict::fail);
  EXPECT_FALSE(assoc->witnesses.empty());
  const auto z5 = run("validate", "example_z5_exploratory.spec");
  EXPECT_EQ(th::find_record(z5.checks, "map_symmetric")->verdict, Verdict::fail);
  EXPECT_EQ(th::find_record(z5.checks, "map_associative")->verdict, Verdict::fail);
}

TEST(Cli, JsonIsDeterministicAndFollowsSchema) {
  const auto a = render_json(run("classify", "z4_n2.spec"), false);
  const auto b = render_json(run("classify", "z4_n2.spec"), false);
  EXPECT_EQ(a, b);
  const auto j = nlohmann::json::parse(a);
  for (const char* key : {"command", "instance", "checks", "summary", "error", "exit_status"})
    EXPECT_TRUE(j.contains(key)) << key;
  ASSERT_FALSE(j["checks"].empty());
  for (const auto& c : j["checks"]) {
    for (const char* key : {"name", "anchor", "hypotheses", "verdict", "witnesses", "facts"})
      EXPECT_TRUE(c.contains(key)) << key;
    EXPECT_FALSE(c.contains("runtime_ms"));
  }
  const auto timed = nlohmann::json::parse(render_json(run("classify", "z4_n2.spec"), true));
  EXPECT_TRUE(timed["checks"][0].contains("runtime_ms"));
}

TEST(Cli, TextAndJsonCarryTheSameVerdicts) {
  const auto r = run("ideals", "z12_n2.spec");
  const auto text = render_text(r, false);
  const auto j = nlohmann::json::parse(render_json(r, false));
  for (const auto& c : j["checks"]) EXPECT_NE(text.find(c["name"].get<std::string>()), std::string::npos);
}

TEST(Cli, CapAndUnknownCheck) {
  Flags capped;
  capped.max_order = 10;
  EXPECT_EQ(run("classify", "z4_n2.spec", capped).exit_status, exit_cap);
  Flags bad;
  bad.checks = {"no_such_check"};
  EXPECT_EQ(run("suite", "z4_n2.spec", bad).exit_status, exit_usage);
  Flags one;
  one.checks = {"tilde_lemma"};
  const auto r = run("suite", "z4_n2.spec", one);
  ASSERT_EQ(r.checks.size(), 1u);
  EXPECT_EQ(r.checks[0].verdict, Verdict::pass);
}

TEST(Cli, LocalizeWithNamedSet) {
  Flags f;
  f.mult_set = "powers_of_two";
  const auto r = run("localize", "z12_n2.spec", f);
  EXPECT_EQ(r.exit_status, exit_ok) << r.error;
  EXPECT_FALSE(r.checks.empty());
}

TEST(Cli, MainEntryExitCodes) {
  EXPECT_EQ(run_main({"classify", spec_path("z4_n2.spec")}), 0);
  EXPECT_EQ(run_main({"classify", spec_path("example_z5_exploratory.spec")}), 1);
  EXPECT_EQ(run_main({"classify", spec_path("does_not_exist.spec")}), 2);
  EXPECT_EQ(run_main({"frobnicate", spec_path("z4_n2.spec")}), 2);
  EXPECT_EQ(run_main({"classify", spec_path("z4_n2.spec"), "--max-order", "10"}), 3);
  const auto out = (std::filesystem::temp_directory_path() / "ntx_cli_test.json").string();
  EXPECT_EQ(run_main({"validate", spec_path("z4_n2.spec"), "--out", out}), 0);
  EXPECT_TRUE(std::filesystem::exists(out));
  std::filesystem::remove(out);
}
