// hnlg: command-line front end.
//
// Exit codes: 0 success, 2 bad arguments or missing input file, 3 pipeline
// error. Results go to stdout; logs and warnings go to stderr.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hnlg/corpus.hpp"
#include "hnlg/error.hpp"
#include "hnlg/grammar.hpp"
#include "hnlg/ngram.hpp"
#include "hnlg/paraphrase.hpp"
#include "hnlg/pipeline.hpp"
#include "hnlg/realizer.hpp"
#include "hnlg/report.hpp"
#include "hnlg/template_dsl.hpp"

namespace fs = std::filesystem;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitPipeline = 3;

/// Thrown for argument combinations CLI11 cannot express.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  std::optional<std::size_t> jobs;
  bool verbose = false;
};

void log(const std::string& msg) { std::cerr << "hnlg: " << msg << "\n"; }

void report_warnings(const std::vector<std::string>& warnings, const Globals& g) {
  if (warnings.empty()) return;
  if (g.verbose) {
    for (const std::string& w : warnings) log("warning: " + w);
  } else {
    log(std::to_string(warnings.size()) + " warning(s); rerun with --verbose to list them");
  }
}

std::string read_text(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw hnlg::FileNotFound(path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::optional<fs::path>& out, const std::string& content) {
  if (!out) {
    std::cout << content;
    return;
  }
  std::ofstream f(*out, std::ios::binary | std::ios::trunc);
  if (!f) throw hnlg::IoError("cannot write " + out->string());
  f << content;
}

std::string document_lines(const hnlg::Document& d) {
  std::string out;
  for (const hnlg::Sentence& s : d.sentences) out += s.text + "\n";
  return out;
}

// ---- ingest ---------------------------------------------------------------

struct IngestArgs {
  fs::path corpus;
  std::optional<fs::path> out;
  std::size_t ngram_order = 2;
};

int cmd_ingest(const IngestArgs& a) {
  const auto records = hnlg::load_corpus(a.corpus);
  std::size_t events = 0;
  std::vector<std::string> texts;
  for (const auto& r : records) {
    events += r.events.size();
    texts.push_back(r.reference_text);
  }
  nlohmann::ordered_json summary;
  summary["records"] = records.size();
  summary["events"] = events;
  summary["vocabulary"] = texts.empty() ? 0 : hnlg::train_ngram(texts, a.ngram_order).vocabulary().size();
  if (a.out) {
    hnlg::write_corpus(*a.out, records);
    log("wrote canonical corpus to " + a.out->string());
  }
  std::cout << summary.dump(2) << "\n";
  return kExitOk;
}

// ---- split ----------------------------------------------------------------

struct SplitArgs {
  fs::path corpus;
  fs::path out;
  double train_fraction = 0.75;
  std::size_t groups = 5;
  std::uint64_t seed = 7;
};

int cmd_split(const SplitArgs& a) {
  const auto grouped = hnlg::split_and_group(hnlg::load_corpus(a.corpus), a.train_fraction, a.groups, a.seed);
  std::error_code ec;
  fs::create_directories(a.out, ec);
  if (ec) throw hnlg::IoError("cannot create " + a.out.string() + ": " + ec.message());
  hnlg::write_corpus(a.out / "train.jsonl", grouped.train);
  for (std::size_t g = 0; g < grouped.test_groups.size(); ++g) {
    hnlg::write_corpus(a.out / ("group-" + std::to_string(g + 1) + ".jsonl"), grouped.test_groups[g]);
  }
  std::cout << "train " << grouped.train.size() << "\n";
  for (std::size_t g = 0; g < grouped.test_groups.size(); ++g) {
    std::cout << "group-" << g + 1 << " " << grouped.test_groups[g].size() << "\n";
  }
  return kExitOk;
}

// ---- generate / paraphrase ------------------------------------------------

struct ParaphraseOptions {
  std::optional<fs::path> lexicon;
  std::uint64_t seed = 7;
  double probability = hnlg::kDefaultReplacementProbability;
  std::vector<std::string> rules = hnlg::default_transform_rule_names();
  std::optional<std::string> remote;
  std::uint64_t remote_timeout_ms = 5000;
};

std::unique_ptr<hnlg::Paraphraser> build_paraphraser(const ParaphraseOptions& p) {
  hnlg::ExperimentConfig c;
  c.remote_endpoint = p.remote;
  c.remote_timeout_ms = p.remote_timeout_ms;
  c.replacement_probability = p.probability;
  c.transform_rules = p.rules;
  if (!p.remote) {
    if (!p.lexicon) throw UsageError("--lexicon is required unless --remote-endpoint is given");
    c.lexicon_path = *p.lexicon;
  }
  return hnlg::make_paraphraser(c);
}

struct GenerateArgs {
  std::string system;
  std::optional<fs::path> events;
  std::optional<fs::path> templates;
  std::optional<fs::path> corpus;
  std::optional<fs::path> model;
  std::optional<fs::path> save_model;
  std::vector<std::string> keywords;
  std::size_t ngram_order = 2;
  std::size_t max_tokens = 20;
  std::optional<fs::path> out;
  bool trace = false;
  ParaphraseOptions para;
};

int cmd_generate(const GenerateArgs& a, const Globals& g) {
  std::optional<hnlg::EventSequence> seq;
  if (a.events) seq = hnlg::parse_events(read_text(*a.events));

  hnlg::PipelineResult result;
  if (a.system == "baseline") {
    if (!a.corpus && !a.model) throw UsageError("baseline needs --corpus or --model");
    hnlg::NgramModel model;
    if (a.model) {
      model = hnlg::NgramModel::load_file(a.model->string());
    } else {
      std::vector<std::string> texts;
      for (const auto& r : hnlg::load_corpus(*a.corpus)) texts.push_back(r.reference_text);
      model = hnlg::train_ngram(texts, a.ngram_order);
    }
    if (a.save_model) model.save_file(a.save_model->string());
    std::vector<std::string> keywords = a.keywords;
    if (keywords.empty() && seq) keywords = hnlg::default_keywords(*seq);
    if (keywords.empty()) throw UsageError("baseline needs --keywords or --events");
    result = hnlg::run_baseline(model, keywords, a.max_tokens, a.para.seed, seq ? seq->size() : 0);
  } else {
    if (!seq) throw UsageError(a.system + " needs --events");
    if (!a.templates) throw UsageError(a.system + " needs --templates");
    const hnlg::TemplateSet ts = hnlg::load_template_set(a.templates->string());
    if (a.system == "rule") {
      result = hnlg::run_rule(*seq, ts, a.para.seed);
    } else {
      const auto engine = build_paraphraser(a.para);
      result = hnlg::run_hybrid(*seq, ts, *engine, a.para.seed);
    }
  }
  if (a.trace) {
    for (const auto& st : result.trace.stages) std::cerr << "[" << st.stage << "] " << st.text << "\n";
  }
  report_warnings(result.trace.warnings, g);
  write_output(a.out, document_lines(result.document));
  return kExitOk;
}

struct ParaphraseArgs {
  std::optional<std::string> text;
  std::optional<fs::path> in;
  bool grammar = false;
  ParaphraseOptions para;
};

int cmd_paraphrase(const ParaphraseArgs& a, const Globals& g) {
  if (a.text.has_value() == a.in.has_value()) throw UsageError("give exactly one of --text or --in");
  const std::string source = a.text ? *a.text : read_text(*a.in);
  const auto sentences = hnlg::split_sentences(source);
  if (sentences.empty()) throw UsageError("no sentences to paraphrase");
  const auto engine = build_paraphraser(a.para);
  std::vector<std::string> warnings;
  hnlg::Document d =
      hnlg::paraphrase_document(hnlg::make_document(sentences, hnlg::GeneratorTag::Reference), *engine, a.para.seed,
                                &warnings);
  if (a.grammar) d = hnlg::grammar_check(d);
  report_warnings(warnings, g);
  std::cout << document_lines(d);
  return kExitOk;
}

// ---- evaluate / report ----------------------------------------------------

struct EvaluateArgs {
  std::optional<fs::path> config;
  std::optional<fs::path> corpus;
  std::optional<fs::path> report_only;
  std::optional<fs::path> out;
  std::optional<fs::path> csv_out;
  // Overrides mirroring config keys.
  std::optional<fs::path> templates;
  std::optional<fs::path> lexicon;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> split_seed;
  std::optional<double> train_fraction;
  std::optional<std::size_t> groups;
  std::optional<std::size_t> ngram_order;
  std::optional<std::size_t> max_tokens;
  std::optional<double> replacement_probability;
  std::optional<std::vector<std::string>> transform_rules;
  std::optional<std::size_t> benchmark_index;
  std::optional<double> style_threshold;
  std::optional<double> logic_threshold;
  std::optional<std::string> remote_endpoint;
  std::optional<std::uint64_t> remote_timeout_ms;
};

void apply_overrides(hnlg::ExperimentConfig& c, const EvaluateArgs& a, const Globals& g) {
  if (a.templates) c.template_path = *a.templates;
  if (a.lexicon) c.lexicon_path = *a.lexicon;
  if (a.seed) c.seed = *a.seed;
  if (a.split_seed) c.split_seed = *a.split_seed;
  if (a.train_fraction) c.train_fraction = *a.train_fraction;
  if (a.groups) c.group_count = *a.groups;
  if (a.ngram_order) c.ngram_order = *a.ngram_order;
  if (a.max_tokens) c.max_tokens = *a.max_tokens;
  if (a.replacement_probability) c.replacement_probability = *a.replacement_probability;
  if (a.transform_rules) c.transform_rules = *a.transform_rules;
  if (a.benchmark_index) c.benchmark_index = *a.benchmark_index;
  if (a.style_threshold) c.thresholds.style = *a.style_threshold;
  if (a.logic_threshold) c.thresholds.logic = *a.logic_threshold;
  if (a.remote_endpoint) c.remote_endpoint = *a.remote_endpoint;
  if (a.remote_timeout_ms) c.remote_timeout_ms = *a.remote_timeout_ms;
  if (g.jobs) c.jobs = *g.jobs;
}

void emit_reports(const hnlg::ExperimentRun& run, const EvaluateArgs& a, const Globals& g) {
  for (const auto& s : run.systems) {
    if (s.skipped) log(s.system + ": " + std::to_string(s.skipped) + " record(s) skipped");
    report_warnings(s.warnings, g);
  }
  const auto table = hnlg::make_report_table(run.reports());
  if (a.csv_out) write_output(a.csv_out, hnlg::report_csv(table));
  std::cout << hnlg::render_table(table);
}

int cmd_evaluate(const EvaluateArgs& a, const Globals& g) {
  if (a.report_only) {
    hnlg::ExperimentRun run = hnlg::load_run(*a.report_only);
    if (g.jobs) run.config.jobs = *g.jobs;
    hnlg::evaluate_run(run);
    emit_reports(run, a, g);
    return kExitOk;
  }
  if (!a.corpus) throw UsageError("evaluate needs --corpus (or --report-only DIR)");
  hnlg::ExperimentConfig config = a.config ? hnlg::ExperimentConfig::load(*a.config) : hnlg::ExperimentConfig{};
  apply_overrides(config, a, g);
  if (config.template_path.empty()) throw UsageError("no template file: pass --templates or set it in --config");
  if (config.lexicon_path.empty() && !config.remote_endpoint) {
    throw UsageError("no lexicon: pass --lexicon or set it in --config");
  }
  auto records = hnlg::load_corpus(*a.corpus);
  log("loaded " + std::to_string(records.size()) + " records from " + a.corpus->string());
  const auto grouped =
      hnlg::split_and_group(std::move(records), config.train_fraction, config.group_count, config.split_seed);
  const hnlg::ExperimentRun run = hnlg::run_experiment(grouped, config);
  if (a.out) log("run written to " + hnlg::persist_run(run, *a.out).parent_path().string());
  emit_reports(run, a, g);
  return kExitOk;
}

int cmd_report(const fs::path& path, const Globals& g) {
  if (fs::is_directory(path)) {
    hnlg::ExperimentRun run = hnlg::load_run(path);
    if (g.jobs) run.config.jobs = *g.jobs;
    hnlg::evaluate_run(run);
    std::cout << hnlg::render_table(hnlg::make_report_table(run.reports()));
  } else {
    std::cout << hnlg::render_table(hnlg::parse_report_csv(read_text(path)));
  }
  return kExitOk;
}

void add_paraphrase_options(CLI::App* cmd, ParaphraseOptions& p) {
  cmd->add_option("--lexicon", p.lexicon, "synonym lexicon (TSV)");
  cmd->add_option("--seed", p.seed, "random seed");
  cmd->add_option("--replacement-probability", p.probability, "chance of replacing each lexicon match")
      ->check(CLI::Range(0.0, 1.0));
  cmd->add_option("--transform-rules", p.rules, "sentence transform rules to apply")->delimiter(',');
  cmd->add_option("--remote-endpoint", p.remote, "http://host:port/path of a paraphrase service");
  cmd->add_option("--remote-timeout-ms", p.remote_timeout_ms, "remote call timeout");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hybrid news generation toolkit: rule, baseline and hybrid generators with HMCU evaluation"};
  app.set_version_flag("--version", std::string("hnlg ") + HNLG_VERSION);
  app.require_subcommand(1);
  app.failure_message(CLI::FailureMessage::help);

  Globals g;
  app.add_option("--jobs", g.jobs, "cap on records processed concurrently")->check(CLI::PositiveNumber);
  app.add_flag("-v,--verbose", g.verbose, "print every warning");

  IngestArgs ingest;
  auto* c_ingest = app.add_subcommand("ingest", "validate a corpus and print a summary");
  c_ingest->add_option("corpus", ingest.corpus, "JSON Lines corpus")->required();
  c_ingest->add_option("--out", ingest.out, "write the corpus back in canonical form");
  c_ingest->add_option("--ngram-order", ingest.ngram_order, "order used for the vocabulary count")
      ->check(CLI::Range(2, 4));

  SplitArgs split;
  auto* c_split = app.add_subcommand("split", "shuffle, split and group a corpus");
  c_split->add_option("corpus", split.corpus, "JSON Lines corpus")->required();
  c_split->add_option("--out", split.out, "output directory")->required();
  c_split->add_option("--train-fraction", split.train_fraction)->check(CLI::Range(0.0, 1.0));
  c_split->add_option("--groups", split.groups)->check(CLI::PositiveNumber);
  c_split->add_option("--seed", split.seed);

  GenerateArgs gen;
  auto* c_gen = app.add_subcommand("generate", "generate text for one event sequence");
  c_gen->add_option("--system", gen.system, "rule, hybrid or baseline")
      ->required()
      ->check(CLI::IsMember({"rule", "hybrid", "baseline"}));
  c_gen->add_option("--events", gen.events, "JSON array of structured events");
  c_gen->add_option("--templates", gen.templates, "template file");
  c_gen->add_option("--corpus", gen.corpus, "corpus whose references train the baseline");
  c_gen->add_option("--model", gen.model, "saved n-gram model for the baseline");
  c_gen->add_option("--save-model", gen.save_model, "write the trained n-gram model here");
  c_gen->add_option("--keywords", gen.keywords, "baseline keywords (default: one per event)")->delimiter(',');
  c_gen->add_option("--ngram-order", gen.ngram_order)->check(CLI::Range(2, 4));
  c_gen->add_option("--max-tokens", gen.max_tokens)->check(CLI::PositiveNumber);
  c_gen->add_option("--out", gen.out, "write text here instead of stdout");
  c_gen->add_flag("--trace", gen.trace, "print each stage's intermediate text to stderr");
  add_paraphrase_options(c_gen, gen.para);

  ParaphraseArgs para;
  auto* c_para = app.add_subcommand("paraphrase", "paraphrase free text sentence by sentence");
  c_para->add_option("--text", para.text, "text to paraphrase");
  c_para->add_option("--in", para.in, "file to paraphrase");
  c_para->add_flag("--grammar-check", para.grammar, "run the grammar check afterwards");
  add_paraphrase_options(c_para, para.para);

  EvaluateArgs ev;
  auto* c_eval = app.add_subcommand("evaluate", "run all three systems on a corpus and score them");
  c_eval->add_option("--config", ev.config, "experiment config (JSON)");
  auto* o_corpus = c_eval->add_option("--corpus", ev.corpus, "JSON Lines corpus");
  c_eval->add_option("--report-only", ev.report_only, "rescore a persisted run directory")->excludes(o_corpus);
  c_eval->add_option("--out", ev.out, "persist the run in this directory");
  c_eval->add_option("--csv-out", ev.csv_out, "write the report CSV here");
  c_eval->add_option("--templates", ev.templates);
  c_eval->add_option("--lexicon", ev.lexicon);
  c_eval->add_option("--seed", ev.seed);
  c_eval->add_option("--split-seed", ev.split_seed);
  c_eval->add_option("--train-fraction", ev.train_fraction)->check(CLI::Range(0.0, 1.0));
  c_eval->add_option("--groups", ev.groups)->check(CLI::PositiveNumber);
  c_eval->add_option("--ngram-order", ev.ngram_order)->check(CLI::Range(2, 4));
  c_eval->add_option("--max-tokens", ev.max_tokens)->check(CLI::PositiveNumber);
  c_eval->add_option("--replacement-probability", ev.replacement_probability)->check(CLI::Range(0.0, 1.0));
  c_eval->add_option("--transform-rules", ev.transform_rules)->delimiter(',');
  c_eval->add_option("--benchmark-index", ev.benchmark_index);
  c_eval->add_option("--style-threshold", ev.style_threshold);
  c_eval->add_option("--logic-threshold", ev.logic_threshold);
  c_eval->add_option("--remote-endpoint", ev.remote_endpoint);
  c_eval->add_option("--remote-timeout-ms", ev.remote_timeout_ms);

  fs::path report_path;
  auto* c_report = app.add_subcommand("report", "print the comparison table for a run directory or CSV");
  c_report->add_option("path", report_path, "run directory or report CSV")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*c_ingest) return cmd_ingest(ingest);
    if (*c_split) return cmd_split(split);
    if (*c_gen) return cmd_generate(gen, g);
    if (*c_para) return cmd_paraphrase(para, g);
    if (*c_eval) return cmd_evaluate(ev, g);
    if (*c_report) return cmd_report(report_path, g);
  } catch (const UsageError& e) {
    log(std::string("error: ") + e.what());
    std::cerr << app.help();
    return kExitUsage;
  } catch (const hnlg::FileNotFound& e) {
    log(std::string("error: ") + e.what());
    return kExitUsage;
  } catch (const hnlg::Error& e) {
    log(std::string("error: ") + e.what());
    return kExitPipeline;
  } catch (const std::exception& e) {
    log(std::string("error: ") + e.what());
    return kExitPipeline;
  }
  return kExitUsage;
}
