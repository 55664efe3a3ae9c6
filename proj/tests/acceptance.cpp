// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// nonzero when any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <optional>
#include <sstream>
#include <string>

#include "hnlg/error.hpp"
#include "hnlg/grammar.hpp"
#include "hnlg/metrics.hpp"
#include "hnlg/pipeline.hpp"
#include "hnlg/realizer.hpp"
#include "test_support.hpp"

using namespace hnlg;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

Outcome aggregation_oracles() {
  struct Row {
    std::vector<double> groups;
    double expected;
  };
  const std::vector<Row> rows = {
      {{0.553, 0.709, 0.893, 0.835, 0.728}, 0.744}, {{0.005, 0.111, 0.012, 0.029, 0.138}, 0.059},
      {{0.15, 0.182, 0.167, 0.231, 0.136}, 0.173},  {{0.254, 0.247, 0.226, 0.243, 0.238}, 0.242},
      {{0.037, 0.037, 0.032, 0.082, 0.025}, 0.043}, {{0.108, 0.103, 0.09, 0.087, 0.104}, 0.098},
  };
  Outcome o;
  for (const auto& row : rows) {
    std::vector<GroupReport> groups;
    for (std::size_t g = 0; g < row.groups.size(); ++g) {
      groups.push_back(group_from_means(g + 1, row.groups[g], row.groups[g]));
    }
    const auto r = aggregate(groups);
    const double got = round_half_up(r.avg_context_logic);
    if (std::abs(got - row.expected) > 1e-12 || std::abs(round_half_up(r.avg_machine_style) - row.expected) > 1e-12) {
      o.fail("expected " + fmt(row.expected) + ", got " + fmt(got));
    }
  }
  if (o.ok) o.detail = "6 rows match";
  return o;
}

struct DemoRun {
  ExperimentRun run;
  double seconds = 0.0;
};

DemoRun run_demo() {
  auto cfg = ExperimentConfig::load(testing::data_path("experiment.json"));
  cfg.jobs = 1;
  const auto start = std::chrono::steady_clock::now();
  auto corpus = split_and_group(load_corpus(testing::data_path("demo_corpus.jsonl")), cfg.train_fraction,
                                cfg.group_count, cfg.split_seed);
  DemoRun d{run_experiment(corpus, cfg), 0.0};
  d.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return d;
}

Outcome system_ordering(const DemoRun& d) {
  Outcome o;
  const auto& rule = d.run.system("rule").report;
  const auto& base = d.run.system("baseline").report;
  const auto& hyb = d.run.system("hybrid").report;
  auto check = [&](const char* metric, double r, double h, double b) {
    if (!(r - h >= 0.02 && h - b >= 0.02)) {
      o.fail(std::string(metric) + " rule=" + fmt(r) + " hybrid=" + fmt(h) + " baseline=" + fmt(b));
    }
  };
  check("logic", rule.avg_context_logic, hyb.avg_context_logic, base.avg_context_logic);
  check("style", rule.avg_machine_style, hyb.avg_machine_style, base.avg_machine_style);
  if (d.seconds >= 60.0) o.fail("took " + fmt(d.seconds) + " s");
  if (o.ok) {
    o.detail = "logic " + fmt(rule.avg_context_logic) + " > " + fmt(hyb.avg_context_logic) + " > " +
               fmt(base.avg_context_logic) + ", style " + fmt(rule.avg_machine_style) + " > " +
               fmt(hyb.avg_machine_style) + " > " + fmt(base.avg_machine_style) + " in " + fmt(d.seconds) + " s";
  }
  return o;
}

Outcome quadrant_labels(const DemoRun& d) {
  Outcome o;
  const auto rule = to_string(d.run.system("rule").report.label);
  const auto base = to_string(d.run.system("baseline").report.label);
  if (rule != "MC") o.fail("rule=" + std::string(rule));
  if (base != "HU") o.fail("baseline=" + std::string(base));
  if (o.ok) o.detail = "rule=MC baseline=HU";
  return o;
}

Outcome hybrid_properties() {
  Outcome o;
  const auto cfg = ExperimentConfig::load(testing::data_path("experiment.json"));
  const auto ts = load_template_set(cfg.template_path.string());
  const auto engine = make_paraphraser(cfg);
  SeededRng rng(2024);
  for (int c = 0; c < 100 && o.ok; ++c) {
    const auto seq = testing::random_sequence(rng);
    const std::uint64_t seed = rng.next();
    const auto a = run_hybrid(seq, ts, *engine, seed).document;
    if (a.sentences.size() != seq.size()) o.fail("case " + std::to_string(c) + ": sentence count");
    if (grammar_check(a) != a) o.fail("case " + std::to_string(c) + ": grammar_check not idempotent");
    if (run_hybrid(seq, ts, *engine, seed).document != a) o.fail("case " + std::to_string(c) + ": nondeterministic");
  }
  if (o.ok) o.detail = "100 sequences";
  return o;
}

Outcome metric_properties() {
  Outcome o;
  SeededRng rng(99);
  const int cases = 1000;
  for (int c = 0; c < cases && o.ok; ++c) {
    const auto a = testing::random_document(rng);
    const auto b = testing::random_document(rng);
    std::vector<Document> background = {testing::random_document(rng)};
    const double ab = contextual_logic_similarity(a, b, background);
    const double ba = contextual_logic_similarity(b, a, background);
    if (std::abs(ab - ba) > 1e-12) o.fail("asymmetric at case " + std::to_string(c));
    if (ab < 0.0 || ab > 1.0) o.fail("out of range at case " + std::to_string(c));
    if (std::abs(contextual_logic_similarity(a, a, background) - 1.0) > 1e-12) {
      o.fail("identical != 1 at case " + std::to_string(c));
    }
    // Disjoint: the second document uses words no generated document contains.
    const auto q = make_document({"Zq" + std::to_string(c) + " zzq."}, GeneratorTag::Reference);
    if (contextual_logic_similarity(a, q, background) != 0.0) o.fail("disjoint != 0 at case " + std::to_string(c));
    const std::vector<Document> group = {a, b, background[0]};
    for (double v : machine_style_values(group)) {
      if (v < 0.0 || v > 1.0) o.fail("style out of range at case " + std::to_string(c));
    }

    std::vector<GroupReport> reports;
    std::vector<double> flat;
    const std::size_t per = 1 + rng.index(8);
    for (std::size_t g = 0; g < 1 + rng.index(5); ++g) {
      std::vector<double> vals;
      for (std::size_t i = 0; i < per; ++i) vals.push_back(rng.uniform());
      flat.insert(flat.end(), vals.begin(), vals.end());
      reports.push_back(make_group_report(g + 1, vals, vals));
    }
    if (std::abs(aggregate(reports).avg_context_logic - mean(flat)) > 1e-9) {
      o.fail("aggregate != flattened mean at case " + std::to_string(c));
    }
  }
  if (o.ok) o.detail = std::to_string(cases) + " cases";
  return o;
}

Outcome dsl_round_trip() {
  Outcome o;
  const auto shipped_text = testing::read_file(testing::data_path("news.tpl"));
  const auto shipped = parse_template_set(shipped_text);
  if (parse_template_set(serialize_template_set(shipped)) != shipped) o.fail("shipped file does not round-trip");
  SeededRng rng(31);
  for (int c = 0; c < 50 && o.ok; ++c) {
    const auto ts = testing::random_template_set(rng);
    if (parse_template_set(serialize_template_set(ts)) != ts) o.fail("generated set " + std::to_string(c));
  }
  try {
    parse_template_set("template a {\n  pattern: \"{subject} {weather}\"\n}\n");
    o.fail("unknown slot accepted");
  } catch (const UnknownSlot& e) {
    if (e.name() != "weather" || e.line() != 2 || e.column() != 24) {
      o.fail("unknown slot reported at " + std::to_string(e.line()) + ":" + std::to_string(e.column()));
    }
  }
  if (o.ok) o.detail = "shipped file + 50 generated sets, unknown slot at 2:24";
  return o;
}

Outcome sample_realization() {
  Outcome o;
  const auto ts = load_template_set(testing::data_path("news.tpl"));
  const auto seq = parse_events(testing::read_file(testing::data_path("sample_events.json")));
  const auto doc = realize(seq, ts, 0);
  const auto& connectives = ts.connectives;
  if (doc.sentences.empty() || doc.sentences[0].text != "Germany is well placed avoid wave of coronavirus.") {
    o.fail("first sentence: " + (doc.sentences.empty() ? std::string() : doc.sentences[0].text));
  }
  for (std::size_t i = 1; i < doc.sentences.size(); ++i) {
    bool prefixed = false;
    for (const auto& c : connectives) prefixed = prefixed || doc.sentences[i].text.rfind(c + " ", 0) == 0;
    if (!prefixed) o.fail("sentence " + std::to_string(i + 1) + " lacks a connective: " + doc.sentences[i].text);
  }
  if (doc.sentences.size() != seq.size()) o.fail("sentence count");
  if (o.ok) o.detail = std::to_string(doc.sentences.size()) + " sentences";
  return o;
}

Outcome repetition_collapse() {
  Outcome o;
  const std::string got = collapse_repetitions("to proper to proper to proper to proper");
  if (got != "to proper") o.fail("got '" + got + "'");
  if (o.ok) o.detail = "'to proper'";
  return o;
}

Outcome guarded(const std::function<Outcome()>& f) {
  try {
    return f();
  } catch (const std::exception& e) {
    Outcome o;
    o.fail(std::string("exception: ") + e.what());
    return o;
  }
}

}  // namespace

int main() {
  std::optional<DemoRun> demo;
  auto with_demo = [&](auto check) {
    return guarded([&] {
      if (!demo) demo = run_demo();
      return check(*demo);
    });
  };
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"aggregation oracles", aggregation_oracles},
      {"demo ordering and margins", [&] { return with_demo(system_ordering); }},
      {"quadrant labels", [&] { return with_demo(quadrant_labels); }},
      {"hybrid count, idempotence, determinism", hybrid_properties},
      {"metric properties", metric_properties},
      {"template round-trip and unknown slots", dsl_round_trip},
      {"sample realization", sample_realization},
      {"repetition collapse", repetition_collapse},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const Outcome o = guarded(criteria[i].second);
    std::printf("%s criterion %zu: %s (%s)\n", o.ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                o.detail.c_str());
    if (!o.ok) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
