// Randomized properties. Every case derives from a fixed seed, so failures replay.

#include <gtest/gtest.h>

#include <cmath>

#include "hnlg/error.hpp"
#include "hnlg/grammar.hpp"
#include "hnlg/metrics.hpp"
#include "hnlg/paraphrase.hpp"
#include "hnlg/pipeline.hpp"
#include "test_support.hpp"

using namespace hnlg;

namespace {

constexpr int kCases = 1000;

/// Document over words prefixed with `prefix`, so documents with different
/// prefixes share no token.
Document prefixed_document(SeededRng& rng, const std::string& prefix) {
  std::vector<std::string> sentences;
  const std::size_t n = 1 + rng.index(3);
  for (std::size_t s = 0; s < n; ++s) {
    std::string text = "X" + prefix;
    const std::size_t len = 1 + rng.index(6);
    for (std::size_t w = 0; w < len; ++w) text += " " + prefix + hnlg::testing::random_word(rng);
    sentences.push_back(text + ".");
  }
  return make_document(sentences, GeneratorTag::Reference);
}

std::vector<Document> random_group(SeededRng& rng, std::size_t min_size) {
  std::vector<Document> out;
  const std::size_t n = min_size + rng.index(6);
  for (std::size_t i = 0; i < n; ++i) out.push_back(hnlg::testing::random_document(rng, 4 + rng.index(20)));
  return out;
}

}  // namespace

TEST(MetricProperties, CosineSymmetricAndBounded) {
  SeededRng rng(1);
  for (int c = 0; c < kCases; ++c) {
    const auto a = hnlg::testing::random_document(rng, 2 + rng.index(22));
    const auto b = hnlg::testing::random_document(rng, 2 + rng.index(22));
    const auto v = tfidf_vectors({tokenize(a.text()), tokenize(b.text())});
    const double ab = cosine(v[0], v[1]);
    const double ba = cosine(v[1], v[0]);
    ASSERT_NEAR(ab, ba, 1e-12) << c;
    ASSERT_GE(ab, 0.0);
    ASSERT_LE(ab, 1.0);
  }
}

TEST(MetricProperties, ContextualLogicSymmetricAndBounded) {
  SeededRng rng(2);
  for (int c = 0; c < kCases; ++c) {
    const auto a = hnlg::testing::random_document(rng);
    const auto b = hnlg::testing::random_document(rng);
    std::vector<Document> background;
    for (std::size_t i = rng.index(4); i > 0; --i) background.push_back(hnlg::testing::random_document(rng));
    const double ab = contextual_logic_similarity(a, b, background);
    const double ba = contextual_logic_similarity(b, a, background);
    ASSERT_NEAR(ab, ba, 1e-12) << c;
    ASSERT_GE(ab, 0.0);
    ASSERT_LE(ab, 1.0);
  }
}

TEST(MetricProperties, IdenticalScoreOneDisjointScoreZero) {
  SeededRng rng(3);
  for (int c = 0; c < kCases; ++c) {
    const auto a = prefixed_document(rng, "p");
    const auto b = prefixed_document(rng, "q");
    std::vector<Document> background = {hnlg::testing::random_document(rng)};
    ASSERT_NEAR(contextual_logic_similarity(a, a, background), 1.0, 1e-12) << a.text();
    ASSERT_EQ(contextual_logic_similarity(a, b, background), 0.0);
    std::vector<Document> same = {a, a};
    ASSERT_NEAR(machine_style_values(same)[0], 1.0, 1e-12);
    std::vector<Document> apart = {a, b};
    ASSERT_EQ(machine_style_values(apart)[0], 0.0);
  }
}

TEST(MetricProperties, BatchAndStyleValuesInUnitInterval) {
  SeededRng rng(4);
  for (int c = 0; c < kCases; ++c) {
    const auto gen = random_group(rng, 2);
    std::vector<Document> ref;
    for (std::size_t i = 0; i < gen.size(); ++i) ref.push_back(hnlg::testing::random_document(rng));
    for (double v : contextual_logic_batch(gen, ref)) {
      ASSERT_GE(v, 0.0);
      ASSERT_LE(v, 1.0);
    }
    const auto style = machine_style_values(gen, rng.index(gen.size()));
    ASSERT_EQ(style.size(), gen.size() - 1);
    for (double v : style) {
      ASSERT_GE(v, 0.0);
      ASSERT_LE(v, 1.0);
    }
  }
}

TEST(MetricProperties, AggregateEqualsFlattenedMeanForEqualGroups) {
  SeededRng rng(5);
  for (int c = 0; c < kCases; ++c) {
    const std::size_t groups = 1 + rng.index(6);
    const std::size_t per_group = 1 + rng.index(10);
    std::vector<GroupReport> reports;
    std::vector<double> all_logic, all_style;
    for (std::size_t g = 0; g < groups; ++g) {
      std::vector<double> logic, style;
      for (std::size_t i = 0; i < per_group; ++i) {
        logic.push_back(rng.uniform());
        style.push_back(rng.uniform());
      }
      all_logic.insert(all_logic.end(), logic.begin(), logic.end());
      all_style.insert(all_style.end(), style.begin(), style.end());
      reports.push_back(make_group_report(g + 1, logic, style));
    }
    const auto r = aggregate(reports);
    ASSERT_NEAR(r.avg_context_logic, mean(all_logic), 1e-9);
    ASSERT_NEAR(r.avg_machine_style, mean(all_style), 1e-9);
  }
}

TEST(MetricProperties, RoundHalfUpWithinHalfUnit) {
  SeededRng rng(6);
  for (int c = 0; c < kCases; ++c) {
    const double x = rng.uniform();
    const double r = round_half_up(x);
    ASSERT_LE(std::abs(r - x), 0.0005 + 1e-9);
    ASSERT_NEAR(r * 1000.0, std::round(r * 1000.0), 1e-6);
  }
}

TEST(PipelineProperties, HybridCountIdempotentDeterministic) {
  const auto cfg = ExperimentConfig::load(hnlg::testing::data_path("experiment.json"));
  const auto ts = load_template_set(cfg.template_path.string());
  const auto engine = make_paraphraser(cfg);
  SeededRng rng(7);
  for (int c = 0; c < 300; ++c) {
    const auto seq = hnlg::testing::random_sequence(rng);
    const std::uint64_t seed = rng.next();
    const auto a = run_hybrid(seq, ts, *engine, seed).document;
    ASSERT_EQ(a.sentences.size(), seq.size());
    ASSERT_EQ(grammar_check(a), a);
    ASSERT_EQ(run_hybrid(seq, ts, *engine, seed).document, a);
    for (const auto& s : a.sentences) ASSERT_TRUE(is_well_formed(s)) << s.text;
  }
}

TEST(PipelineProperties, ParaphraseKeepsProperNames) {
  const auto lex = SynonymLexicon::load(hnlg::testing::data_path("lexicon.tsv"));
  const auto rules = transform_rules(default_transform_rule_names());
  SeededRng rng(8);
  for (int c = 0; c < kCases; ++c) {
    const std::string name = hnlg::testing::kNames[rng.index(hnlg::testing::kNames.size())];
    const Sentence s{"The plan in " + name + " was necessary because " + hnlg::testing::random_phrase(rng) + ".", 0, {}};
    const auto out = paraphrase_sentence(s, lex, rules, rng.next());
    ASSERT_NE(out.text.find(name), std::string::npos) << out.text;
  }
}

TEST(DslProperties, RoundTrip) {
  SeededRng rng(9);
  for (int c = 0; c < kCases; ++c) {
    const auto ts = hnlg::testing::random_template_set(rng);
    ASSERT_EQ(parse_template_set(serialize_template_set(ts)), ts) << serialize_template_set(ts);
  }
}

TEST(DslProperties, UnknownSlotAlwaysPositioned) {
  SeededRng rng(10);
  for (int c = 0; c < kCases; ++c) {
    auto ts = hnlg::testing::random_template_set(rng);
    auto& target = ts.templates[rng.index(ts.templates.size())];
    target.segments.insert(target.segments.begin(), Segment{SlotRef{EventField::Subject}});
    std::string text = serialize_template_set(ts);
    const std::size_t pos = text.find("pattern: \"{subject}", text.find("template " + target.name + " ")) + 10;
    text.replace(pos + 1, 7, "bogus");
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i <= pos; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    try {
      parse_template_set(text);
      FAIL() << text;
    } catch (const UnknownSlot& e) {
      ASSERT_EQ(e.name(), "bogus");
      ASSERT_EQ(e.line(), line) << text;
      ASSERT_EQ(e.column(), col) << text;
    }
  }
}
