#include "hnlg/ngram.hpp"

#include <cctype>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "hnlg/error.hpp"
#include "hnlg/random.hpp"
#include "hnlg/text_util.hpp"

namespace hnlg {

namespace {

constexpr std::string_view kMagic = "hnlg-ngram 1";

bool is_word_char(char c) {
  const auto u = static_cast<unsigned char>(c);
  return u >= 0x80 || std::isalnum(u) || c == '\'' || c == '-';
}

bool is_punct_token(std::string_view t) {
  return t.size() == 1 && (t[0] == '.' || t[0] == '!' || t[0] == '?' || t[0] == ',' || t[0] == ';' || t[0] == ':');
}

std::string render_tokens(const std::vector<std::string>& tokens) {
  std::string out;
  for (const std::string& t : tokens) {
    if (!out.empty() && !is_punct_token(t)) out += ' ';
    out += t;
  }
  while (!out.empty() && (out.back() == ',' || out.back() == ';' || out.back() == ':')) out.pop_back();
  out = text::capitalize_first(std::move(out));
  if (!out.empty() && !text::is_terminal(out.back())) out += '.';
  return out;
}

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t tab = line.find('\t', start);
    out.push_back(line.substr(start, tab == std::string::npos ? std::string::npos : tab - start));
    if (tab == std::string::npos) return out;
    start = tab + 1;
  }
}

}  // namespace

std::vector<std::string> ngram_tokenize(std::string_view text) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (is_word_char(c)) {
      std::size_t j = i;
      while (j < text.size() && is_word_char(text[j])) ++j;
      out.emplace_back(text.substr(i, j - i));
      i = j;
    } else {
      if (is_punct_token(std::string_view(&c, 1))) out.emplace_back(1, c);
      ++i;
    }
  }
  return out;
}

const NgramModel::Successors* NgramModel::successors(const Context& ctx) const {
  auto it = transitions_.find(ctx);
  return it == transitions_.end() ? nullptr : &it->second;
}

void NgramModel::build_index() {
  clean_.clear();
  starts_with_.clear();
  contains_.clear();
  for (const auto& [ctx, succ] : transitions_) {
    bool clean = true;
    for (const std::string& t : ctx) clean = clean && !is_punct_token(t);
    if (!clean) continue;
    const std::size_t idx = clean_.size();
    clean_.push_back(ctx);
    starts_with_[text::to_lower(ctx.front())].push_back(idx);
    std::set<std::string> seen;
    for (const std::string& t : ctx) {
      std::string lower = text::to_lower(t);
      if (seen.insert(lower).second) contains_[lower].push_back(idx);
    }
  }
}

std::vector<std::size_t> NgramModel::contexts_starting_with(const std::string& lower) const {
  auto it = starts_with_.find(lower);
  return it == starts_with_.end() ? std::vector<std::size_t>{} : it->second;
}

std::vector<std::size_t> NgramModel::contexts_containing(const std::string& lower) const {
  auto it = contains_.find(lower);
  return it == contains_.end() ? std::vector<std::size_t>{} : it->second;
}

NgramModel train_ngram(const std::vector<std::string>& corpus, std::size_t k) {
  if (k < 2 || k > 4) throw InvalidInput("n-gram order must be in [2, 4]");
  NgramModel m;
  m.order_ = k;
  for (const std::string& doc : corpus) {
    const auto tokens = ngram_tokenize(doc);
    m.vocabulary_.insert(tokens.begin(), tokens.end());
    for (std::size_t i = 0; i + k <= tokens.size(); ++i) {
      NgramModel::Context ctx(tokens.begin() + static_cast<std::ptrdiff_t>(i),
                              tokens.begin() + static_cast<std::ptrdiff_t>(i + k - 1));
      ++m.transitions_[std::move(ctx)][tokens[i + k - 1]];
    }
  }
  if (m.vocabulary_.empty()) throw EmptyCorpus();
  m.build_index();
  return m;
}

void NgramModel::save(std::ostream& out) const {
  out << kMagic << '\n' << "order\t" << order_ << '\n' << "vocab\t" << vocabulary_.size() << '\n';
  for (const std::string& v : vocabulary_) out << v << '\n';
  std::size_t rows = 0;
  for (const auto& [ctx, succ] : transitions_) rows += succ.size();
  out << "transitions\t" << rows << '\n';
  for (const auto& [ctx, succ] : transitions_) {
    for (const auto& [next, count] : succ) {
      for (const std::string& t : ctx) out << t << '\t';
      out << next << '\t' << count << '\n';
    }
  }
}

namespace {

std::uint64_t parse_count(const std::string& s) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
    throw InvalidInput("n-gram model: bad number '" + s + "'");
  }
  try {
    return std::stoull(s);
  } catch (const std::out_of_range&) {
    throw InvalidInput("n-gram model: number out of range");
  }
}

}  // namespace

NgramModel NgramModel::load(std::istream& in) {
  auto fail = [](const std::string& why) -> NgramModel { throw InvalidInput("n-gram model: " + why); };
  std::string line;
  if (!std::getline(in, line) || line != kMagic) return fail("bad header");
  NgramModel m;
  auto header = [&](std::string_view key) -> std::size_t {
    if (!std::getline(in, line)) fail("truncated");
    auto cols = split_tabs(line);
    if (cols.size() != 2 || cols[0] != key) fail("expected " + std::string(key));
    return parse_count(cols[1]);
  };
  m.order_ = header("order");
  if (m.order_ < 2 || m.order_ > 4) return fail("order out of range");
  const std::size_t vocab = header("vocab");
  for (std::size_t i = 0; i < vocab; ++i) {
    if (!std::getline(in, line)) return fail("truncated vocabulary");
    m.vocabulary_.insert(line);
  }
  const std::size_t rows = header("transitions");
  for (std::size_t i = 0; i < rows; ++i) {
    if (!std::getline(in, line)) return fail("truncated transitions");
    auto cols = split_tabs(line);
    if (cols.size() != m.order_ + 1) return fail("bad transition row");
    NgramModel::Context ctx(cols.begin(), cols.begin() + static_cast<std::ptrdiff_t>(m.order_ - 1));
    const std::uint64_t count = parse_count(cols.back());
    if (count == 0) return fail("zero count");
    m.transitions_[std::move(ctx)][cols[m.order_ - 1]] = count;
  }
  m.build_index();
  return m;
}

void NgramModel::save_file(const std::string& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path);
  save(out);
  if (!out) throw IoError("write failed: " + path);
}

NgramModel NgramModel::load_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FileNotFound(path);
  return load(in);
}

Document generate_from_keywords(const NgramModel& model, const std::vector<std::string>& keywords,
                                std::size_t max_tokens, std::uint64_t seed, std::size_t sentence_count,
                                std::vector<std::string>* warnings) {
  if (keywords.empty()) throw InvalidInput("at least one keyword is required");
  if (max_tokens < model.order()) throw InvalidInput("max_tokens must be at least the model order");
  if (model.transitions().empty()) throw InvalidInput("model has no transitions");

  SeededRng rng(seed);
  const std::size_t n_sentences = sentence_count ? sentence_count : keywords.size();
  const auto& clean = model.clean_contexts();

  // Random starts prefer clean contexts that look sentence-initial.
  std::vector<std::size_t> random_starts;
  for (std::size_t i = 0; i < clean.size(); ++i) {
    if (std::isupper(static_cast<unsigned char>(clean[i].front()[0]))) random_starts.push_back(i);
  }
  if (random_starts.empty()) {
    for (std::size_t i = 0; i < clean.size(); ++i) random_starts.push_back(i);
  }

  std::size_t next_keyword = 0;
  std::vector<std::string> sentences;
  for (std::size_t s = 0; s < n_sentences; ++s) {
    NgramModel::Context start;
    while (next_keyword < keywords.size() && start.empty()) {
      const std::string lower = text::to_lower(keywords[next_keyword++]);
      auto candidates = model.contexts_starting_with(lower);
      if (candidates.empty()) candidates = model.contexts_containing(lower);
      if (candidates.empty()) {
        if (warnings) warnings->push_back("unknown keyword '" + lower + "' skipped");
        continue;
      }
      start = clean[candidates[rng.index(candidates.size())]];
    }
    if (start.empty()) {
      if (!random_starts.empty()) {
        start = clean[random_starts[rng.index(random_starts.size())]];
      } else {
        auto it = model.transitions().begin();
        std::advance(it, static_cast<std::ptrdiff_t>(rng.index(model.transitions().size())));
        start = it->first;
      }
    }

    std::vector<std::string> tokens = start;
    NgramModel::Context window = start;
    while (tokens.size() < max_tokens) {
      const auto* succ = model.successors(window);
      if (!succ) break;
      std::uint64_t total = 0;
      for (const auto& [tok, count] : *succ) total += count;
      std::uint64_t r = rng.index(total);
      const std::string* pick = nullptr;
      for (const auto& [tok, count] : *succ) {
        if (r < count) {
          pick = &tok;
          break;
        }
        r -= count;
      }
      tokens.push_back(*pick);
      if (is_terminal_token(*pick)) break;
      window.erase(window.begin());
      window.push_back(*pick);
    }
    sentences.push_back(render_tokens(tokens));
  }
  return make_document(sentences, GeneratorTag::Baseline, {Origin::BaselineGenerated});
}

}  // namespace hnlg
