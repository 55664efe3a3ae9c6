#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hnlg/domain.hpp"

namespace hnlg {

/// Lowercase phrase -> replacement candidates. Keys may span a few words so
/// that function phrases ("in order to") and connectives can be restyled.
class SynonymLexicon {
 public:
  SynonymLexicon() = default;

  /// Tab-separated `key<TAB>alt1<TAB>alt2...`, one entry per line, `#` comments.
  /// Throws InvalidInput (with line number) on uppercase keys or entries whose
  /// only alternative is the key itself.
  static SynonymLexicon parse(std::string_view tsv);
  static SynonymLexicon load(const std::string& path);

  void add(std::string key, std::vector<std::string> alternatives);

  const std::vector<std::string>* find(std::string_view key) const;
  bool empty() const noexcept { return entries_.empty(); }
  std::size_t size() const noexcept { return entries_.size(); }
  std::size_t max_phrase_words() const noexcept { return max_words_; }
  const std::map<std::string, std::vector<std::string>, std::less<>>& entries() const noexcept { return entries_; }

 private:
  std::map<std::string, std::vector<std::string>, std::less<>> entries_;
  std::size_t max_words_ = 0;
};

/// Sentence body without its leading connective or trailing punctuation.
struct SentenceParts {
  std::string connective;  // without the trailing comma, empty when absent
  std::string body;
  std::string terminal;    // trailing . ! ? run, possibly empty
};

SentenceParts split_sentence_parts(std::string_view sentence, const SynonymLexicon& lexicon);

/// A clause-level rewrite. `apply` returns nullopt when the rule does not match.
struct TransformRule {
  std::string name;
  double probability = 1.0;
  std::function<std::optional<SentenceParts>(const SentenceParts&, std::uint64_t draw)> apply;
};

/// Built-in rules: "tag-question", "because-fronting", "purpose-fronting".
/// Throws InvalidInput for unknown names.
TransformRule transform_rule(std::string_view name);
std::vector<TransformRule> transform_rules(const std::vector<std::string>& names);
std::vector<std::string> default_transform_rule_names();

inline constexpr double kDefaultReplacementProbability = 0.5;

/// Restyles one sentence: connective substitution, seeded synonym replacement
/// with per-token probability `p`, then clause transforms. Deterministic in
/// (sentence, lexicon, rules, seed, p).
Sentence paraphrase_sentence(const Sentence& s, const SynonymLexicon& lexicon, const std::vector<TransformRule>& rules,
                             std::uint64_t seed, double p = kDefaultReplacementProbability);

struct ParaphraserCapabilities {
  std::string name;
  bool deterministic = true;
  std::size_t max_sentence_length = std::numeric_limits<std::size_t>::max();
  bool concurrent_safe = true;
};

/// Transforms exactly one sentence per call.
class Paraphraser {
 public:
  virtual ~Paraphraser() = default;
  virtual ParaphraserCapabilities capabilities() const = 0;
  /// Returns the restyled sentence with Paraphrased appended to its provenance.
  /// Non-fatal problems are appended to `warnings`.
  virtual Sentence paraphrase(const Sentence& s, std::uint64_t seed, std::vector<std::string>& warnings) const = 0;
};

class IdentityParaphraser final : public Paraphraser {
 public:
  ParaphraserCapabilities capabilities() const override { return {"identity", true, ParaphraserCapabilities{}.max_sentence_length, true}; }
  Sentence paraphrase(const Sentence& s, std::uint64_t seed, std::vector<std::string>& warnings) const override;
};

class LexicalParaphraser final : public Paraphraser {
 public:
  LexicalParaphraser(SynonymLexicon lexicon, std::vector<TransformRule> rules,
                     double replacement_probability = kDefaultReplacementProbability);

  ParaphraserCapabilities capabilities() const override;
  Sentence paraphrase(const Sentence& s, std::uint64_t seed, std::vector<std::string>& warnings) const override;

  const SynonymLexicon& lexicon() const noexcept { return lexicon_; }

 private:
  SynonymLexicon lexicon_;
  std::vector<TransformRule> rules_;
  double p_;
};

/// Adapter for an external paraphrase service speaking plain-text HTTP POST:
/// one sentence in, one sentence out, status 200.
class RemoteParaphraser final : public Paraphraser {
 public:
  /// `endpoint` is `http://host:port/path`.
  RemoteParaphraser(std::string endpoint, std::chrono::milliseconds timeout,
                    std::size_t max_sentence_length = 2000);

  ParaphraserCapabilities capabilities() const override;
  /// Throws RemoteUnavailable on connection failure, timeout or non-200 status.
  /// Empty or multi-sentence replies fall back to the input with a warning.
  Sentence paraphrase(const Sentence& s, std::uint64_t seed, std::vector<std::string>& warnings) const override;

 private:
  std::string endpoint_;
  std::string base_;
  std::string path_;
  std::chrono::milliseconds timeout_;
  std::size_t max_len_;
};

/// Free-function form of RemoteParaphraser::paraphrase.
Sentence remote_paraphrase(const Sentence& s, const std::string& endpoint, std::chrono::milliseconds timeout,
                           std::vector<std::string>& warnings);

/// Paraphrases sentence i with seed `seed ^ i`. Output has the same sentence
/// count and is tagged Hybrid.
Document paraphrase_document(const Document& d, const Paraphraser& engine, std::uint64_t seed,
                             std::vector<std::string>* warnings = nullptr);

}  // namespace hnlg
