#include "hnlg/pipeline.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "hnlg/error.hpp"
#include "hnlg/grammar.hpp"
#include "hnlg/random.hpp"
#include "hnlg/realizer.hpp"

namespace hnlg {

namespace {

template <typename Fn>
auto in_stage(std::string_view stage, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const StageError&) {
    throw;
  } catch (const std::exception& e) {
    throw StageError(std::string(stage), e.what(), std::current_exception());
  }
}

}  // namespace

PipelineResult run_rule(const EventSequence& seq, const TemplateSet& ts, std::uint64_t seed) {
  PipelineResult r;
  r.document = in_stage(kStageRealize, [&] { return realize(seq, ts, seed); });
  r.trace.stages.push_back({std::string(kStageRealize), r.document.text()});
  return r;
}

PipelineResult run_hybrid(const EventSequence& seq, const TemplateSet& ts, const Paraphraser& engine,
                          std::uint64_t seed) {
  PipelineResult r;
  const Document realized = in_stage(kStageRealize, [&] { return realize(seq, ts, seed); });
  r.trace.stages.push_back({std::string(kStageRealize), realized.text()});
  const Document paraphrased =
      in_stage(kStageParaphrase, [&] { return paraphrase_document(realized, engine, seed, &r.trace.warnings); });
  r.trace.stages.push_back({std::string(kStageParaphrase), paraphrased.text()});
  r.document = in_stage(kStageGrammar, [&] { return grammar_check(paraphrased); });
  r.trace.stages.push_back({std::string(kStageGrammar), r.document.text()});
  return r;
}

PipelineResult run_baseline(const NgramModel& model, const std::vector<std::string>& keywords, std::size_t max_tokens,
                            std::uint64_t seed, std::size_t sentence_count) {
  PipelineResult r;
  r.document = in_stage(kStageGenerate, [&] {
    return generate_from_keywords(model, keywords, max_tokens, seed, sentence_count, &r.trace.warnings);
  });
  r.trace.stages.push_back({std::string(kStageGenerate), r.document.text()});
  return r;
}

// ---- config -----------------------------------------------------------------

ExperimentConfig ExperimentConfig::from_json(const nlohmann::json& j, const std::filesystem::path& base_dir) {
  if (!j.is_object()) throw InvalidInput("experiment config must be a JSON object");
  ExperimentConfig c;
  auto resolve = [&](const std::string& p) {
    std::filesystem::path path(p);
    return path.is_relative() && !base_dir.empty() ? base_dir / path : path;
  };
  try {
    for (const auto& [key, v] : j.items()) {
      if (key == "templates") {
        c.template_path = resolve(v.get<std::string>());
      } else if (key == "lexicon") {
        c.lexicon_path = resolve(v.get<std::string>());
      } else if (key == "seed") {
        c.seed = v.get<std::uint64_t>();
      } else if (key == "split_seed") {
        c.split_seed = v.get<std::uint64_t>();
      } else if (key == "train_fraction") {
        c.train_fraction = v.get<double>();
      } else if (key == "groups") {
        c.group_count = v.get<std::size_t>();
      } else if (key == "ngram_order") {
        c.ngram_order = v.get<std::size_t>();
      } else if (key == "max_tokens") {
        c.max_tokens = v.get<std::size_t>();
      } else if (key == "replacement_probability") {
        c.replacement_probability = v.get<double>();
      } else if (key == "transform_rules") {
        c.transform_rules = v.get<std::vector<std::string>>();
      } else if (key == "benchmark_index") {
        c.benchmark_index = v.get<std::size_t>();
      } else if (key == "thresholds") {
        c.thresholds.style = v.value("style", c.thresholds.style);
        c.thresholds.logic = v.value("logic", c.thresholds.logic);
      } else if (key == "scale") {
        c.scale.style = v.value("style", c.scale.style);
        c.scale.logic = v.value("logic", c.scale.logic);
      } else if (key == "remote_endpoint") {
        if (!v.is_null()) c.remote_endpoint = v.get<std::string>();
      } else if (key == "remote_timeout_ms") {
        c.remote_timeout_ms = v.get<std::uint64_t>();
      } else if (key == "jobs") {
        c.jobs = v.get<std::size_t>();
      } else {
        throw InvalidInput("unknown config key '" + key + "'");
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("experiment config: ") + e.what());
  }
  return c;
}

ExperimentConfig ExperimentConfig::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FileNotFound(path.string());
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidInput(std::string("experiment config: ") + e.what());
  }
  return from_json(j, path.parent_path());
}

nlohmann::ordered_json ExperimentConfig::to_json() const {
  nlohmann::ordered_json j;
  j["templates"] = template_path.string();
  j["lexicon"] = lexicon_path.string();
  j["seed"] = seed;
  j["split_seed"] = split_seed;
  j["train_fraction"] = train_fraction;
  j["groups"] = group_count;
  j["ngram_order"] = ngram_order;
  j["max_tokens"] = max_tokens;
  j["replacement_probability"] = replacement_probability;
  j["transform_rules"] = transform_rules;
  j["benchmark_index"] = benchmark_index;
  j["thresholds"] = {{"style", thresholds.style}, {"logic", thresholds.logic}};
  j["scale"] = {{"style", scale.style}, {"logic", scale.logic}};
  j["remote_endpoint"] = remote_endpoint ? nlohmann::ordered_json(*remote_endpoint) : nlohmann::ordered_json();
  j["remote_timeout_ms"] = remote_timeout_ms;
  j["jobs"] = jobs;
  return j;
}

std::string ExperimentConfig::digest() const {
  auto j = to_json();
  j.erase("jobs");  // does not affect results
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a64(j.dump())));
  return buf;
}

// ---- experiment ---------------------------------------------------------------

const SystemRun& ExperimentRun::system(std::string_view name) const {
  for (const SystemRun& s : systems) {
    if (s.system == name) return s;
  }
  throw InvalidInput("run has no system '" + std::string(name) + "'");
}

std::vector<SystemReport> ExperimentRun::reports() const {
  std::vector<SystemReport> out;
  for (const SystemRun& s : systems) out.push_back({s.system, s.report});
  return out;
}

std::unique_ptr<Paraphraser> make_paraphraser(const ExperimentConfig& config) {
  if (config.remote_endpoint) {
    return std::make_unique<RemoteParaphraser>(*config.remote_endpoint,
                                               std::chrono::milliseconds(config.remote_timeout_ms));
  }
  return std::make_unique<LexicalParaphraser>(SynonymLexicon::load(config.lexicon_path.string()),
                                              transform_rules(config.transform_rules),
                                              config.replacement_probability);
}

ExperimentRun run_experiment(const GroupedCorpus& corpus, const ExperimentConfig& config) {
  const TemplateSet templates = load_template_set(config.template_path.string());
  const auto engine = make_paraphraser(config);
  return run_experiment(corpus, config, templates, *engine);
}

namespace {

struct Attempt {
  std::optional<Document> document;
  std::vector<std::string> warnings;
};

template <typename Fn>
Attempt attempt(const std::string& record_id, Fn&& fn) {
  Attempt a;
  try {
    PipelineResult r = fn();
    a.document = std::move(r.document);
    for (std::string& w : r.trace.warnings) a.warnings.push_back("record " + record_id + ": " + std::move(w));
  } catch (const std::exception& e) {
    a.warnings.push_back("record " + record_id + " skipped: " + e.what());
  }
  return a;
}

}  // namespace

ExperimentRun run_experiment(const GroupedCorpus& corpus, const ExperimentConfig& config, const TemplateSet& templates,
                             const Paraphraser& engine) {
  if (corpus.test_groups.empty()) throw InvalidInput("corpus has no test groups");
  std::vector<std::string> train_texts;
  train_texts.reserve(corpus.train.size());
  for (const CorpusRecord& r : corpus.train) train_texts.push_back(r.reference_text);
  const NgramModel model = train_ngram(train_texts, config.ngram_order);

  struct Item {
    const CorpusRecord* record;
    std::size_t group_id;
  };
  std::vector<Item> items;
  for (std::size_t g = 0; g < corpus.test_groups.size(); ++g) {
    std::vector<const CorpusRecord*> group;
    for (const CorpusRecord& r : corpus.test_groups[g]) group.push_back(&r);
    std::sort(group.begin(), group.end(), [](const auto* a, const auto* b) { return a->id < b->id; });
    for (const CorpusRecord* r : group) items.push_back({r, g + 1});
  }

  constexpr std::size_t kRule = 0, kBaseline = 1, kHybrid = 2;
  std::vector<std::array<Attempt, 3>> results(items.size());
  int threads = 1;
#ifdef _OPENMP
  threads = config.jobs ? static_cast<int>(config.jobs) : omp_get_max_threads();
#endif
  if (!engine.capabilities().concurrent_safe) threads = 1;
  const auto n = static_cast<std::ptrdiff_t>(items.size());

#pragma omp parallel for schedule(dynamic) num_threads(threads)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const CorpusRecord& rec = *items[static_cast<std::size_t>(i)].record;
    const std::uint64_t seed = record_seed(config.seed, rec.id);
    auto& out = results[static_cast<std::size_t>(i)];
    out[kRule] = attempt(rec.id, [&] { return run_rule(rec.events, templates, seed); });
    out[kBaseline] = attempt(
        rec.id, [&] { return run_baseline(model, rec.keywords, config.max_tokens, seed, rec.events.size()); });
    out[kHybrid] = attempt(rec.id, [&] { return run_hybrid(rec.events, templates, engine, seed); });
  }

  ExperimentRun run;
  run.config = config;
  for (const char* name : {"rule", "baseline", "hybrid"}) {
    run.systems.emplace_back();
    run.systems.back().system = name;
  }
  for (std::size_t i = 0; i < items.size(); ++i) {
    const CorpusRecord& rec = *items[i].record;
    run.references.push_back({rec.id, items[i].group_id, rec.reference_document()});
    for (std::size_t s = 0; s < 3; ++s) {
      Attempt& a = results[i][s];
      SystemRun& sys = run.systems[s];
      for (std::string& w : a.warnings) sys.warnings.push_back(std::move(w));
      if (a.document) {
        sys.documents.push_back({rec.id, items[i].group_id, std::move(*a.document)});
      } else {
        ++sys.skipped;
      }
    }
  }
  evaluate_run(run);
  return run;
}

void evaluate_run(ExperimentRun& run) {
  std::map<std::string, const Document*> reference_by_id;
  std::map<std::size_t, std::size_t> group_sizes;
  for (const RunDocument& r : run.references) {
    reference_by_id[r.record_id] = &r.document;
    ++group_sizes[r.group_id];
  }
  if (group_sizes.empty()) throw InvalidInput("run has no reference documents");

  for (SystemRun& sys : run.systems) {
    std::map<std::size_t, std::vector<const RunDocument*>> by_group;
    for (const RunDocument& d : sys.documents) by_group[d.group_id].push_back(&d);
    std::vector<GroupReport> groups;
    for (const auto& [gid, size] : group_sizes) {
      std::vector<Document> generated;
      std::vector<Document> references;
      for (const RunDocument* d : by_group[gid]) {
        auto ref = reference_by_id.find(d->record_id);
        if (ref == reference_by_id.end()) throw InvalidInput("no reference for record " + d->record_id);
        generated.push_back(d->document);
        references.push_back(*ref->second);
      }
      std::vector<double> context;
      std::vector<double> style;
      if (!generated.empty()) context = contextual_logic_batch(generated, references, &sys.warnings);
      if (generated.size() >= 2) {
        const std::size_t bench = std::min(run.config.benchmark_index, generated.size() - 1);
        style = machine_style_values(generated, bench, &sys.warnings);
      } else {
        sys.warnings.push_back("group " + std::to_string(gid) + " too small for machine-style similarity");
      }
      groups.push_back(make_group_report(gid, std::move(context), std::move(style), size - generated.size()));
    }
    sys.report = aggregate(std::move(groups), run.config.scale, run.config.thresholds);
  }
}

}  // namespace hnlg
