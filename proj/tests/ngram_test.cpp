#include <gtest/gtest.h>

#include <cctype>
#include <set>
#include <sstream>

#include "hnlg/corpus.hpp"
#include "hnlg/error.hpp"
#include "hnlg/ngram.hpp"
#include "test_support.hpp"

using namespace hnlg;

TEST(NgramTokenize, WordsAndSentencePunctuation) {
  EXPECT_EQ(ngram_tokenize("Hello, world! It's co-op (really)."),
            (std::vector<std::string>{"Hello", ",", "world", "!", "It's", "co-op", "really", "."}));
  EXPECT_TRUE(ngram_tokenize("  \"()  ").empty());
}

TEST(TrainNgram, OracleBigramCounts) {
  auto m = train_ngram({"a b a b"}, 2);
  std::map<NgramModel::Context, NgramModel::Successors> expected = {
      {{"a"}, {{"b", 2}}},
      {{"b"}, {{"a", 1}}},
  };
  EXPECT_EQ(m.transitions(), expected);
  EXPECT_EQ(m.vocabulary(), (std::set<std::string>{"a", "b"}));
}

TEST(TrainNgram, OracleTrigramCountsWithinDocuments) {
  auto m = train_ngram({"x y z", "x y w"}, 3);
  ASSERT_NE(m.successors({"x", "y"}), nullptr);
  EXPECT_EQ(*m.successors({"x", "y"}), (NgramModel::Successors{{"w", 1}, {"z", 1}}));
  // No n-gram spans the document boundary.
  EXPECT_EQ(m.successors({"y", "z"}), nullptr);
  EXPECT_EQ(m.transitions().size(), 1u);
}

TEST(TrainNgram, Errors) {
  EXPECT_THROW(train_ngram({}, 2), EmptyCorpus);
  EXPECT_THROW(train_ngram({"", " ( ) "}, 2), EmptyCorpus);
  EXPECT_THROW(train_ngram({"a b"}, 1), InvalidInput);
  EXPECT_THROW(train_ngram({"a b"}, 5), InvalidInput);
}

TEST(TrainNgram, ContextIndexes) {
  auto m = train_ngram({"The cat sat . the dog ran ."}, 3);
  // Clean contexts hold no punctuation.
  for (const auto& ctx : m.clean_contexts()) {
    for (const auto& t : ctx) EXPECT_FALSE(t == "." || t == ",");
  }
  EXPECT_EQ(m.contexts_starting_with("the").size(), 2u);
  EXPECT_EQ(m.contexts_containing("cat").size(), 2u);
  EXPECT_TRUE(m.contexts_starting_with("zebra").empty());
}

TEST(Generate, OracleEnumeratesReachableSentences) {
  auto m = train_ngram({"a b . a c ."}, 2);
  std::set<std::string> seen;
  for (std::uint64_t seed = 0; seed < 64; ++seed) {
    auto d = generate_from_keywords(m, {"a"}, 10, seed);
    ASSERT_EQ(d.sentences.size(), 1u);
    seen.insert(d.sentences[0].text);
  }
  EXPECT_EQ(seen, (std::set<std::string>{"A b.", "A c."}));
}

TEST(Generate, StopsAtMaxTokensAndAddsPeriod) {
  auto m = train_ngram({"a a a a a a"}, 2);
  auto d = generate_from_keywords(m, {"a"}, 4, 0);
  EXPECT_EQ(d.sentences[0].text, "A a a a.");
}

TEST(Generate, OneSentencePerKeywordAndProvenance) {
  auto m = train_ngram({"Rain fell . Sun shone . Wind blew ."}, 2);
  auto d = generate_from_keywords(m, {"rain", "sun", "wind"}, 10, 5);
  ASSERT_EQ(d.sentences.size(), 3u);
  EXPECT_EQ(d.sentences[0].text, "Rain fell.");
  EXPECT_EQ(d.sentences[1].text, "Sun shone.");
  EXPECT_EQ(d.sentences[2].text, "Wind blew.");
  EXPECT_EQ(d.generator, GeneratorTag::Baseline);
  for (const auto& s : d.sentences) EXPECT_EQ(s.origin(), Origin::BaselineGenerated);
}

TEST(Generate, UnknownKeywordsSkippedWithWarning) {
  auto m = train_ngram({"Rain fell . Sun shone ."}, 2);
  std::vector<std::string> warnings;
  auto d = generate_from_keywords(m, {"snow", "sun"}, 10, 1, 0, &warnings);
  ASSERT_EQ(d.sentences.size(), 2u);
  EXPECT_EQ(d.sentences[0].text, "Sun shone.");
  ASSERT_EQ(warnings.size(), 1u);
  EXPECT_EQ(warnings[0], "unknown keyword 'snow' skipped");
}

TEST(Generate, ExplicitSentenceCount) {
  auto m = train_ngram({"Rain fell . Sun shone ."}, 2);
  EXPECT_EQ(generate_from_keywords(m, {"rain"}, 10, 1, 4).sentences.size(), 4u);
}

TEST(Generate, InvalidArguments) {
  auto m = train_ngram({"a b c"}, 3);
  EXPECT_THROW(generate_from_keywords(m, {}, 10, 0), InvalidInput);
  EXPECT_THROW(generate_from_keywords(m, {"a"}, 2, 0), InvalidInput);
}

TEST(Generate, DeterministicInSeed) {
  auto records = load_corpus(hnlg::testing::data_path("demo_corpus.jsonl"));
  std::vector<std::string> texts;
  for (std::size_t i = 0; i < 50; ++i) texts.push_back(records[i].reference_text);
  auto m = train_ngram(texts, 2);
  auto a = generate_from_keywords(m, records[60].keywords, 20, 42);
  EXPECT_EQ(a, generate_from_keywords(m, records[60].keywords, 20, 42));
  EXPECT_NE(a, generate_from_keywords(m, records[60].keywords, 20, 43));
  for (const auto& s : a.sentences) EXPECT_TRUE(is_well_formed(s)) << s.text;
}

TEST(NgramModel, SaveLoadRoundTrip) {
  auto m = train_ngram({"The cat sat on the mat .", "A dog , a cat ; done !"}, 3);
  std::stringstream buf;
  m.save(buf);
  auto back = NgramModel::load(buf);
  EXPECT_EQ(back, m);
  EXPECT_EQ(back.clean_contexts(), m.clean_contexts());
  EXPECT_EQ(generate_from_keywords(back, {"cat"}, 10, 3), generate_from_keywords(m, {"cat"}, 10, 3));
}

TEST(NgramModel, FileRoundTripAndMissingFile) {
  hnlg::testing::TempDir dir;
  auto m = train_ngram({"x y z"}, 2);
  m.save_file((dir / "m.txt").string());
  EXPECT_EQ(NgramModel::load_file((dir / "m.txt").string()), m);
  EXPECT_THROW(NgramModel::load_file((dir / "missing.txt").string()), FileNotFound);
}

TEST(NgramModel, LoadRejectsCorruptInput) {
  auto load = [](const std::string& s) {
    std::istringstream in(s);
    return NgramModel::load(in);
  };
  EXPECT_THROW(load(""), InvalidInput);
  EXPECT_THROW(load("hnlg-ngram 2\n"), InvalidInput);
  EXPECT_THROW(load("hnlg-ngram 1\norder\t9\n"), InvalidInput);
  EXPECT_THROW(load("hnlg-ngram 1\norder\tx\n"), InvalidInput);
  EXPECT_THROW(load("hnlg-ngram 1\norder\t2\nvocab\t99999999999999999999999\n"), InvalidInput);
  EXPECT_THROW(load("hnlg-ngram 1\norder\t2\nvocab\t1\na\ntransitions\t1\na\tb\n"), InvalidInput);
  EXPECT_THROW(load("hnlg-ngram 1\norder\t2\nvocab\t1\na\ntransitions\t1\na\tb\t0\n"), InvalidInput);
  EXPECT_THROW(load("hnlg-ngram 1\norder\t2\nvocab\t1\na\ntransitions\t2\na\tb\t1\n"), InvalidInput);
}

TEST(DemoCorpus, TrainingSplitVocabularyIsLarge) {
  auto grouped = split_and_group(load_corpus(hnlg::testing::data_path("demo_corpus.jsonl")), 0.75, 5, 7);
  std::vector<std::string> texts;
  for (const auto& r : grouped.train) texts.push_back(r.reference_text);
  const auto m = train_ngram(texts, 2);
  std::size_t words = 0;
  for (const auto& v : m.vocabulary()) {
    if (!(v.size() == 1 && std::ispunct(static_cast<unsigned char>(v[0])))) ++words;
  }
  EXPECT_GE(words, 1000u);
}
