#include "hnlg/paraphrase.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <fstream>
#include <sstream>

#include "hnlg/error.hpp"
#include "hnlg/random.hpp"
#include "hnlg/text_util.hpp"

namespace hnlg {

// ---- lexicon --------------------------------------------------------------

void SynonymLexicon::add(std::string key, std::vector<std::string> alternatives) {
  std::erase(alternatives, key);
  if (alternatives.empty()) throw InvalidInput("lexicon entry '" + key + "' has no alternative");
  if (text::to_lower(key) != key) throw InvalidInput("lexicon key '" + key + "' is not lowercase");
  max_words_ = std::max(max_words_, text::split_ws(key).size());
  entries_[std::move(key)] = std::move(alternatives);
}

const std::vector<std::string>* SynonymLexicon::find(std::string_view key) const {
  auto it = entries_.find(key);
  return it == entries_.end() ? nullptr : &it->second;
}

SynonymLexicon SynonymLexicon::parse(std::string_view tsv) {
  SynonymLexicon lex;
  std::size_t line_no = 0;
  std::istringstream in{std::string(tsv)};
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> cols;
    std::size_t start = 0;
    while (true) {
      const std::size_t tab = line.find('\t', start);
      cols.push_back(line.substr(start, tab == std::string::npos ? std::string::npos : tab - start));
      if (tab == std::string::npos) break;
      start = tab + 1;
    }
    std::erase_if(cols, [](const std::string& c) { return c.empty(); });
    if (cols.size() < 2) throw InvalidInput("lexicon line " + std::to_string(line_no) + ": no alternatives");
    std::string key = cols.front();
    cols.erase(cols.begin());
    try {
      lex.add(std::move(key), std::move(cols));
    } catch (const InvalidInput& e) {
      throw InvalidInput("lexicon line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return lex;
}

SynonymLexicon SynonymLexicon::load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FileNotFound(path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

// ---- sentence anatomy -------------------------------------------------------

namespace {

constexpr std::array<std::string_view, 9> kKnownConnectives = {
    "moreover", "besides", "in addition", "furthermore", "also", "additionally", "what is more", "further", "plus"};

bool is_word_char(char c) {
  const auto u = static_cast<unsigned char>(c);
  return u >= 0x80 || std::isalnum(u) || c == '\'' || c == '-';
}

bool starts_upper(std::string_view s) { return !s.empty() && std::isupper(static_cast<unsigned char>(s[0])); }

/// Sentence openers that become lowercase when a clause moves mid-sentence.
bool is_common_opener(std::string_view word) {
  static constexpr std::array<std::string_view, 24> kOpeners = {
      "The", "A", "An", "It", "We", "They", "He", "She", "This", "That", "These", "Those",
      "Our", "Their", "His", "Her", "Its", "Some", "Many", "Most", "There", "Officials", "Local", "Several"};
  return std::find(kOpeners.begin(), kOpeners.end(), word) != kOpeners.end();
}

std::string demote_opener(std::string clause) {
  const std::string_view first = std::string_view(clause).substr(0, clause.find(' '));
  if (is_common_opener(first)) clause = text::lowercase_first(std::move(clause));
  return clause;
}

std::string assemble(const SentenceParts& parts, bool capitalize) {
  std::string out;
  if (!parts.connective.empty()) {
    out = parts.connective + ", " + parts.body;
  } else {
    out = parts.body;
  }
  if (capitalize) out = text::capitalize_first(std::move(out));
  return out + parts.terminal;
}

struct Piece {
  std::string text;
  bool word;
};

std::vector<Piece> split_pieces(std::string_view s) {
  std::vector<Piece> out;
  for (std::size_t i = 0; i < s.size();) {
    const bool w = is_word_char(s[i]);
    std::size_t j = i;
    while (j < s.size() && is_word_char(s[j]) == w) ++j;
    out.push_back({std::string(s.substr(i, j - i)), w});
    i = j;
  }
  return out;
}

std::string replace_synonyms(const std::string& body, bool body_is_sentence_start, const SynonymLexicon& lexicon,
                             SeededRng& rng, double p) {
  if (lexicon.empty() || p <= 0.0) return body;
  std::vector<Piece> pieces = split_pieces(body);
  std::string out;
  std::size_t i = 0;
  bool first_word = true;
  while (i < pieces.size()) {
    if (!pieces[i].word) {
      out += pieces[i++].text;
      continue;
    }
    const bool at_start = first_word && body_is_sentence_start;
    first_word = false;
    // Capitalized words mid-sentence are treated as names.
    if (starts_upper(pieces[i].text) && !at_start) {
      out += pieces[i++].text;
      continue;
    }
    // Longest phrase match; words must be separated by single spaces.
    std::size_t matched_end = 0;
    const std::vector<std::string>* alts = nullptr;
    std::string key;
    std::size_t j = i;
    for (std::size_t n = 1; n <= lexicon.max_phrase_words() && j < pieces.size(); ++n) {
      if (n > 1) {
        if (j + 1 >= pieces.size() || pieces[j].text != " " || !pieces[j + 1].word) break;
        key += ' ';
        ++j;
      }
      key += text::to_lower(pieces[j].text);
      if (const auto* found = lexicon.find(key)) {
        alts = found;
        matched_end = j + 1;
      }
      ++j;
    }
    if (!alts) {
      out += pieces[i++].text;
      continue;
    }
    if (rng.bernoulli(p)) {
      std::string alt = (*alts)[rng.index(alts->size())];
      if (starts_upper(pieces[i].text)) alt = text::capitalize_first(std::move(alt));
      out += alt;
    } else {
      for (std::size_t k = i; k < matched_end; ++k) out += pieces[k].text;
    }
    i = matched_end;
  }
  return out;
}

std::optional<SentenceParts> front_clause(const SentenceParts& parts, std::string_view marker) {
  const std::string needle = " " + std::string(marker) + " ";
  const std::size_t at = parts.body.find(needle);
  if (at == std::string::npos || at == 0) return std::nullopt;
  std::string head = parts.body.substr(0, at);
  std::string tail = parts.body.substr(at + needle.size());
  if (text::split_ws(head).size() < 2 || tail.empty()) return std::nullopt;
  while (!head.empty() && (head.back() == ',' || head.back() == ' ')) head.pop_back();
  SentenceParts out = parts;
  out.body = std::string(marker) + " " + tail + ", " + demote_opener(std::move(head));
  return out;
}

}  // namespace

SentenceParts split_sentence_parts(std::string_view sentence, const SynonymLexicon& lexicon) {
  SentenceParts parts;
  std::string_view s = sentence;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  std::size_t t = s.size();
  while (t > 0 && text::is_terminal(s[t - 1])) --t;
  parts.terminal = std::string(s.substr(t));
  s = s.substr(0, t);
  const std::size_t comma = s.find(',');
  if (comma != std::string_view::npos && comma > 0) {
    const std::string head = text::to_lower(s.substr(0, comma));
    const bool known = lexicon.find(head) ||
                       std::find(kKnownConnectives.begin(), kKnownConnectives.end(), head) != kKnownConnectives.end();
    if (known && text::split_ws(head).size() <= 3) {
      parts.connective = std::string(s.substr(0, comma));
      s = s.substr(comma + 1);
      while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    }
  }
  parts.body = std::string(s);
  return parts;
}

// ---- transform rules ------------------------------------------------------

std::vector<std::string> default_transform_rule_names() { return {"because-fronting", "purpose-fronting"}; }

TransformRule transform_rule(std::string_view name) {
  if (name == "tag-question") {
    return {"tag-question", 1.0, [](const SentenceParts& parts, std::uint64_t draw) -> std::optional<SentenceParts> {
              if (text::to_lower(parts.body) != "how are you") return std::nullopt;
              static constexpr std::array<std::string_view, 2> kVariants = {"are you doing", "do you feel"};
              SentenceParts out = parts;
              out.body = parts.body.substr(0, 3) + " " + std::string(kVariants[draw % kVariants.size()]);
              out.terminal = "?";
              return out;
            }};
  }
  if (name == "because-fronting") {
    return {"because-fronting", 0.5,
            [](const SentenceParts& parts, std::uint64_t) { return front_clause(parts, "because"); }};
  }
  if (name == "purpose-fronting") {
    return {"purpose-fronting", 0.5, [](const SentenceParts& parts, std::uint64_t) -> std::optional<SentenceParts> {
              auto out = front_clause(parts, "in order to");
              if (out) out->body = out->body.substr(std::string_view("in order ").size());
              return out;
            }};
  }
  throw InvalidInput("unknown transform rule '" + std::string(name) + "'");
}

std::vector<TransformRule> transform_rules(const std::vector<std::string>& names) {
  std::vector<TransformRule> out;
  out.reserve(names.size());
  for (const std::string& n : names) out.push_back(transform_rule(n));
  return out;
}

// ---- paraphrasing ---------------------------------------------------------

Sentence paraphrase_sentence(const Sentence& s, const SynonymLexicon& lexicon, const std::vector<TransformRule>& rules,
                             std::uint64_t seed, double p) {
  Sentence out = s;
  out.provenance.push_back(Origin::Paraphrased);
  SentenceParts parts = split_sentence_parts(s.text, lexicon);
  const bool capitalize = starts_upper(s.text);
  SeededRng rng(seed);

  bool changed = false;
  if (!parts.connective.empty()) {
    if (const auto* alts = lexicon.find(text::to_lower(parts.connective))) {
      std::string alt = (*alts)[rng.index(alts->size())];
      if (!alt.empty() && alt.back() == ',') alt.pop_back();
      parts.connective = starts_upper(parts.connective) ? text::capitalize_first(std::move(alt)) : alt;
      changed = true;
    }
  }

  const std::string replaced = replace_synonyms(parts.body, parts.connective.empty(), lexicon, rng, p);
  changed = changed || replaced != parts.body;
  parts.body = replaced;

  for (const TransformRule& rule : rules) {
    const bool fire = rng.bernoulli(rule.probability);
    const std::uint64_t draw = rng.next();
    if (!fire) continue;
    if (auto next = rule.apply(parts, draw)) {
      parts = std::move(*next);
      changed = true;
    }
  }

  if (changed) out.text = assemble(parts, capitalize);
  return out;
}

Sentence IdentityParaphraser::paraphrase(const Sentence& s, std::uint64_t, std::vector<std::string>&) const {
  Sentence out = s;
  out.provenance.push_back(Origin::Paraphrased);
  return out;
}

LexicalParaphraser::LexicalParaphraser(SynonymLexicon lexicon, std::vector<TransformRule> rules,
                                       double replacement_probability)
    : lexicon_(std::move(lexicon)), rules_(std::move(rules)), p_(replacement_probability) {
  if (!(p_ >= 0.0 && p_ <= 1.0)) throw InvalidInput("replacement probability must lie in [0, 1]");
}

ParaphraserCapabilities LexicalParaphraser::capabilities() const { return {"lexical", true, ParaphraserCapabilities{}.max_sentence_length, true}; }

Sentence LexicalParaphraser::paraphrase(const Sentence& s, std::uint64_t seed, std::vector<std::string>&) const {
  return paraphrase_sentence(s, lexicon_, rules_, seed, p_);
}

Document paraphrase_document(const Document& d, const Paraphraser& engine, std::uint64_t seed,
                             std::vector<std::string>* warnings) {
  if (d.sentences.empty()) throw InvalidInput("cannot paraphrase an empty document");
  std::vector<std::string> local;
  std::vector<std::string>& sink = warnings ? *warnings : local;
  const std::size_t max_len = engine.capabilities().max_sentence_length;
  Document out;
  out.generator = GeneratorTag::Hybrid;
  out.sentences.reserve(d.sentences.size());
  for (std::size_t i = 0; i < d.sentences.size(); ++i) {
    const Sentence& in = d.sentences[i];
    Sentence s;
    if (in.text.size() > max_len) {
      sink.push_back("sentence " + std::to_string(i) + " exceeds paraphraser limit; kept as is");
      s = in;
      s.provenance.push_back(Origin::Paraphrased);
    } else {
      s = engine.paraphrase(in, seed ^ static_cast<std::uint64_t>(i), sink);
    }
    s.index = i;
    out.sentences.push_back(std::move(s));
  }
  return out;
}

}  // namespace hnlg
