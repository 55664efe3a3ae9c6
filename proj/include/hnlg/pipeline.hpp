#pragma once

#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hnlg/corpus.hpp"
#include "hnlg/domain.hpp"
#include "hnlg/metrics.hpp"
#include "hnlg/ngram.hpp"
#include "hnlg/paraphrase.hpp"
#include "hnlg/report.hpp"
#include "hnlg/template_dsl.hpp"
#include "json.hpp"

namespace hnlg {

inline constexpr std::string_view kStageRealize = "realize";
inline constexpr std::string_view kStageParaphrase = "paraphrase";
inline constexpr std::string_view kStageGrammar = "grammar_check";
inline constexpr std::string_view kStageGenerate = "generate";

struct StageRecord {
  std::string stage;
  std::string text;  // full intermediate text after the stage
};

struct Trace {
  std::vector<StageRecord> stages;
  std::vector<std::string> warnings;
};

struct PipelineResult {
  Document document;
  Trace trace;
};

/// Errors raised inside a stage are rethrown as StageError tagged with it.
PipelineResult run_rule(const EventSequence& seq, const TemplateSet& ts, std::uint64_t seed);

/// realize -> paraphrase_document -> grammar_check.
PipelineResult run_hybrid(const EventSequence& seq, const TemplateSet& ts, const Paraphraser& engine,
                          std::uint64_t seed);

PipelineResult run_baseline(const NgramModel& model, const std::vector<std::string>& keywords, std::size_t max_tokens,
                            std::uint64_t seed, std::size_t sentence_count = 0);

// ---- experiments -----------------------------------------------------------

struct ExperimentConfig {
  std::filesystem::path template_path;
  std::filesystem::path lexicon_path;
  std::uint64_t seed = 7;
  std::uint64_t split_seed = 7;
  double train_fraction = 0.75;
  std::size_t group_count = 5;
  std::size_t ngram_order = 2;
  std::size_t max_tokens = 20;
  double replacement_probability = kDefaultReplacementProbability;
  std::vector<std::string> transform_rules = default_transform_rule_names();
  std::size_t benchmark_index = 0;
  QuadrantThresholds thresholds;
  ScoreScale scale;
  std::optional<std::string> remote_endpoint;
  std::uint64_t remote_timeout_ms = 5000;
  /// Cap on concurrently processed records; 0 leaves it to OpenMP.
  std::size_t jobs = 0;

  /// Relative paths resolve against `base_dir`.
  static ExperimentConfig from_json(const nlohmann::json& j, const std::filesystem::path& base_dir = {});
  static ExperimentConfig load(const std::filesystem::path& path);
  nlohmann::ordered_json to_json() const;
  /// Hex FNV-1a of the canonical JSON form.
  std::string digest() const;
};

struct RunDocument {
  std::string record_id;
  std::size_t group_id = 0;
  Document document;
};

struct SystemRun {
  std::string system;
  std::vector<RunDocument> documents;
  HmcuReport report;
  std::vector<std::string> warnings;
  std::size_t skipped = 0;
};

/// Everything an experiment produced; enough to recompute its reports.
struct ExperimentRun {
  ExperimentConfig config;
  std::vector<RunDocument> references;
  std::vector<SystemRun> systems;  // rule, baseline, hybrid

  const SystemRun& system(std::string_view name) const;
  std::vector<SystemReport> reports() const;
};

/// Builds the paraphraser the config asks for (remote when an endpoint is set).
std::unique_ptr<Paraphraser> make_paraphraser(const ExperimentConfig& config);

/// Trains the baseline on the training split, generates every test record
/// with all three systems, then scores them. Records are processed
/// concurrently; each record i gets seed `config.seed ^ fnv1a(id)`. Records
/// failing in a system are excluded from that system's means and counted.
ExperimentRun run_experiment(const GroupedCorpus& corpus, const ExperimentConfig& config);
ExperimentRun run_experiment(const GroupedCorpus& corpus, const ExperimentConfig& config, const TemplateSet& templates,
                             const Paraphraser& engine);

/// Recomputes every system's HmcuReport from stored documents.
void evaluate_run(ExperimentRun& run);

/// Writes docs/<system>/<id>.txt (one sentence per line), report.csv and
/// manifest.json under `dir`. Returns the manifest path. Throws IoError.
/// The manifest's `created` field honours SOURCE_DATE_EPOCH.
std::filesystem::path persist_run(const ExperimentRun& run, const std::filesystem::path& dir);

/// Reads documents and config back; reports are recomputed by evaluate_run.
ExperimentRun load_run(const std::filesystem::path& dir);

}  // namespace hnlg
