#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "hnlg/domain.hpp"

namespace hnlg {

/// Case-preserving word tokens; . ! ? , ; : are separate tokens, other
/// punctuation is dropped.
std::vector<std::string> ngram_tokenize(std::string_view text);

inline bool is_terminal_token(std::string_view t) noexcept { return t == "." || t == "!" || t == "?"; }

/// Order-k word model: (k-1)-token context -> next-token counts.
class NgramModel {
 public:
  using Context = std::vector<std::string>;
  using Successors = std::map<std::string, std::uint64_t>;

  std::size_t order() const noexcept { return order_; }
  const std::map<Context, Successors>& transitions() const noexcept { return transitions_; }
  const std::set<std::string>& vocabulary() const noexcept { return vocabulary_; }
  const Successors* successors(const Context& ctx) const;

  /// Contexts without punctuation, in table order.
  const std::vector<Context>& clean_contexts() const noexcept { return clean_; }
  /// Indices into clean_contexts() whose first token lowercases to `lower`.
  std::vector<std::size_t> contexts_starting_with(const std::string& lower) const;
  /// Indices into clean_contexts() holding `lower` at any position.
  std::vector<std::size_t> contexts_containing(const std::string& lower) const;

  void save(std::ostream& out) const;
  static NgramModel load(std::istream& in);
  void save_file(const std::string& path) const;
  static NgramModel load_file(const std::string& path);

  bool operator==(const NgramModel& o) const {
    return order_ == o.order_ && transitions_ == o.transitions_ && vocabulary_ == o.vocabulary_;
  }

 private:
  friend NgramModel train_ngram(const std::vector<std::string>& corpus, std::size_t k);
  void build_index();

  std::size_t order_ = 0;
  std::map<Context, Successors> transitions_;
  std::set<std::string> vocabulary_;
  std::vector<Context> clean_;
  std::map<std::string, std::vector<std::size_t>> starts_with_;
  std::map<std::string, std::vector<std::size_t>> contains_;
};

/// Counts every (k-1)-gram -> next token within each document. k in [2, 4].
/// Throws EmptyCorpus.
NgramModel train_ngram(const std::vector<std::string>& corpus, std::size_t k);

/// Keyword-seeded sampling. Sentence i starts at a context holding the next
/// unused known keyword, otherwise at a seeded-random context; tokens are
/// drawn with count-weighted probability until a terminal token or
/// `max_tokens`. `sentence_count` 0 means one sentence per keyword. Unknown
/// keywords are skipped and reported in `warnings`.
Document generate_from_keywords(const NgramModel& model, const std::vector<std::string>& keywords,
                                std::size_t max_tokens, std::uint64_t seed, std::size_t sentence_count = 0,
                                std::vector<std::string>* warnings = nullptr);

}  // namespace hnlg
