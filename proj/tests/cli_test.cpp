#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>

#include "test_support.hpp"

namespace {

struct Result {
  int code = -1;
  std::string out;
  std::string err;
};

std::string quote(const std::string& s) {
  std::string q = "'";
  for (char c : s) q += c == '\'' ? std::string("'\\''") : std::string(1, c);
  return q + "'";
}

/// Runs the CLI with `args`, capturing stdout and stderr separately.
Result hnlg_cli(const std::string& args) {
  hnlg::testing::TempDir tmp;
  const auto err_path = tmp / "stderr";
  const std::string cmd = quote(HNLG_CLI_PATH) + " " + args + " 2>" + quote(err_path.string());
  Result r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.err = hnlg::testing::read_file(err_path);
  return r;
}

std::string data(const std::string& name) { return quote(hnlg::testing::data_path(name)); }

}  // namespace

TEST(Cli, Version) {
  auto r = hnlg_cli("--version");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "hnlg 0.1.0\n");
}

TEST(Cli, NoSubcommandIsUsageError) {
  auto r = hnlg_cli("");
  EXPECT_EQ(r.code, 2);
  EXPECT_TRUE(r.out.empty());
}

TEST(Cli, UnknownOptionOrSubcommand) {
  EXPECT_EQ(hnlg_cli("frobnicate").code, 2);
  EXPECT_EQ(hnlg_cli("generate --bogus").code, 2);
  EXPECT_EQ(hnlg_cli("--jobs 0 report x").code, 2);
}

TEST(Cli, UnknownSystemPrintsUsage) {
  auto r = hnlg_cli("generate --system gpt --events " + data("sample_events.json"));
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("Usage"), std::string::npos) << r.err;
  EXPECT_TRUE(r.out.empty());
}

TEST(Cli, MissingFileExitsTwo) {
  EXPECT_EQ(hnlg_cli("ingest /nonexistent/corpus.jsonl").code, 2);
  EXPECT_EQ(hnlg_cli("evaluate --config " + data("experiment.json") + " --corpus /nonexistent/c.jsonl").code, 2);
  EXPECT_EQ(hnlg_cli("generate --system rule --events /nonexistent/e.json --templates " + data("news.tpl")).code, 2);
}

TEST(Cli, PipelineErrorExitsThree) {
  hnlg::testing::TempDir tmp;
  hnlg::testing::write_file(tmp / "bad.jsonl", "{not json\n");
  auto r = hnlg_cli("ingest " + quote((tmp / "bad.jsonl").string()));
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.err.find("line 1"), std::string::npos) << r.err;

  hnlg::testing::write_file(tmp / "bad.tpl", "template a { pattern: \"{place}\" }");
  r = hnlg_cli("generate --system rule --events " + data("sample_events.json") + " --templates " +
               quote((tmp / "bad.tpl").string()));
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.err.find("1:25"), std::string::npos) << r.err;
}

TEST(Cli, GenerateRuleSample) {
  auto r = hnlg_cli("generate --system rule --events " + data("sample_events.json") + " --templates " +
                    data("news.tpl") + " --seed 0");
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.rfind("Germany is well placed avoid wave of coronavirus.\nMoreover, ", 0), 0u) << r.out;
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 5);
}

TEST(Cli, GenerateHybridIsDeterministic) {
  const std::string args = "generate --system hybrid --events " + data("sample_events.json") + " --templates " +
                           data("news.tpl") + " --lexicon " + data("lexicon.tsv") + " --seed 5";
  auto a = hnlg_cli(args);
  auto b = hnlg_cli(args);
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(std::count(a.out.begin(), a.out.end(), '\n'), 5);
}

TEST(Cli, GenerateTraceGoesToStderr) {
  auto r = hnlg_cli("generate --system hybrid --trace --events " + data("sample_events.json") + " --templates " +
                    data("news.tpl") + " --lexicon " + data("lexicon.tsv"));
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.err.find("[realize]"), std::string::npos);
  EXPECT_NE(r.err.find("[grammar_check]"), std::string::npos);
  EXPECT_EQ(r.out.find("[realize]"), std::string::npos);
}

TEST(Cli, BaselineWithSavedModel) {
  hnlg::testing::TempDir tmp;
  const std::string model = quote((tmp / "model.txt").string());
  auto a = hnlg_cli("generate --system baseline --events " + data("sample_events.json") + " --corpus " +
                    data("demo_corpus.jsonl") + " --save-model " + model + " --seed 3");
  ASSERT_EQ(a.code, 0) << a.err;
  auto b = hnlg_cli("generate --system baseline --events " + data("sample_events.json") + " --model " + model +
                    " --seed 3");
  ASSERT_EQ(b.code, 0) << b.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(std::count(a.out.begin(), a.out.end(), '\n'), 5);
}

TEST(Cli, ParaphraseText) {
  auto r = hnlg_cli("paraphrase --text 'Moreover, we are living with the virus.' --lexicon " + data("lexicon.tsv") +
                    " --seed 1 --grammar-check");
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.find("Moreover"), std::string::npos) << r.out;
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 1);
}

TEST(Cli, IngestSummary) {
  auto r = hnlg_cli("ingest " + data("demo_corpus.jsonl"));
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.at("records"), 900);
}

TEST(Cli, SplitWritesFiles) {
  hnlg::testing::TempDir tmp;
  auto r = hnlg_cli("split " + data("demo_corpus.jsonl") + " --out " + quote((tmp / "s").string()));
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "train 675\ngroup-1 45\ngroup-2 45\ngroup-3 45\ngroup-4 45\ngroup-5 45\n");
  EXPECT_TRUE(std::filesystem::exists(tmp / "s" / "group-5.jsonl"));
}

TEST(Cli, EvaluateThenReportOnlyReproducesCsv) {
  hnlg::testing::TempDir tmp;
  const std::string run = quote((tmp / "run").string());
  auto a = hnlg_cli("--jobs 2 evaluate --config " + data("experiment.json") + " --corpus " +
                    data("demo_corpus.jsonl") + " --out " + run + " --csv-out " +
                    quote((tmp / "a.csv").string()));
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_NE(a.out.find("Contextual logic similarity"), std::string::npos);
  EXPECT_NE(a.out.find("Quadrant: rule=MC"), std::string::npos) << a.out;

  auto b = hnlg_cli("evaluate --report-only " + run + " --csv-out " + quote((tmp / "b.csv").string()));
  ASSERT_EQ(b.code, 0) << b.err;
  const std::string csv = hnlg::testing::read_file(tmp / "a.csv");
  EXPECT_FALSE(csv.empty());
  EXPECT_EQ(hnlg::testing::read_file(tmp / "b.csv"), csv);
  EXPECT_EQ(hnlg::testing::read_file(tmp / "run" / "report.csv"), csv);
  EXPECT_EQ(a.out, b.out);

  auto c = hnlg_cli("report " + run);
  EXPECT_EQ(c.code, 0);
  EXPECT_EQ(c.out, a.out);
  auto d = hnlg_cli("report " + quote((tmp / "a.csv").string()));
  EXPECT_EQ(d.code, 0);
  EXPECT_NE(d.out.find("Machine writing style similarity"), std::string::npos);
}

TEST(Cli, EvaluateFlagsOverrideConfig) {
  auto r = hnlg_cli("evaluate --config " + data("experiment.json") + " --corpus " + data("demo_corpus.jsonl") +
                    " --groups 3 --style-threshold 0.9");
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("\n3 "), std::string::npos);
  EXPECT_EQ(r.out.find("\n4 "), std::string::npos);
  EXPECT_NE(r.out.find("rule=HC"), std::string::npos) << r.out;
}

TEST(Cli, EvaluateArgumentErrors) {
  EXPECT_EQ(hnlg_cli("evaluate").code, 2);
  EXPECT_EQ(hnlg_cli("evaluate --corpus " + data("demo_corpus.jsonl") + " --report-only x").code, 2);
  EXPECT_EQ(hnlg_cli("evaluate --corpus " + data("demo_corpus.jsonl")).code, 2);  // no templates
  EXPECT_EQ(hnlg_cli("evaluate --config " + data("experiment.json") + " --corpus " + data("demo_corpus.jsonl") +
                     " --train-fraction 2")
                .code,
            2);
}
