#include "hnlg/grammar.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <optional>
#include <span>

#include "hnlg/text_util.hpp"

namespace hnlg {

namespace {

bool same_word(const std::string& a, const std::string& b) { return text::to_lower(a) == text::to_lower(b); }

bool collapse_repeats(std::vector<std::string>& tokens) {
  bool changed = false;
  std::size_t i = 0;
  while (i < tokens.size()) {
    if (i + 1 < tokens.size() && same_word(tokens[i], tokens[i + 1])) {
      tokens.erase(tokens.begin() + static_cast<std::ptrdiff_t>(i + 1));
      changed = true;
      continue;
    }
    if (i + 3 < tokens.size() && same_word(tokens[i], tokens[i + 2]) && same_word(tokens[i + 1], tokens[i + 3])) {
      tokens.erase(tokens.begin() + static_cast<std::ptrdiff_t>(i + 2), tokens.begin() + static_cast<std::ptrdiff_t>(i + 4));
      changed = true;
      continue;
    }
    ++i;
  }
  return changed;
}

bool starts_with_any(std::string_view word, std::span<const std::string_view> prefixes) {
  return std::any_of(prefixes.begin(), prefixes.end(), [&](std::string_view p) { return word.rfind(p, 0) == 0; });
}

/// nullopt when the word gives no usable signal (digits, symbols).
std::optional<bool> takes_an(std::string_view next) {
  const std::string word = text::to_lower(text::strip_punct(next));
  if (word.empty() || !std::isalpha(static_cast<unsigned char>(word[0]))) return std::nullopt;
  static constexpr std::array<std::string_view, 11> kVowelButA = {"uni", "use", "usu", "uti", "eu", "one",
                                                                 "once", "ubi", "ufo", "ura", "uro"};
  static constexpr std::array<std::string_view, 5> kConsonantButAn = {"hour", "honest", "honor", "honour", "heir"};
  if (starts_with_any(word, kConsonantButAn)) return true;
  if (starts_with_any(word, kVowelButA)) return false;
  return std::string_view("aeiou").find(word[0]) != std::string_view::npos;
}

void fix_articles(std::vector<std::string>& tokens) {
  for (std::size_t i = 0; i + 1 < tokens.size(); ++i) {
    std::string& t = tokens[i];
    const std::string lower = text::to_lower(t);
    if (lower != "a" && lower != "an") continue;
    const auto an = takes_an(tokens[i + 1]);
    if (!an) continue;
    const bool upper = std::isupper(static_cast<unsigned char>(t[0]));
    t = *an ? "an" : "a";
    if (upper) t[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(t[0])));
  }
}

std::string check_once(std::string_view sentence) {
  std::string s = text::normalize_spacing(sentence);
  std::size_t end = s.size();
  while (end > 0 && (text::is_terminal(s[end - 1]) || s[end - 1] == ' ')) --end;
  char terminal = '.';
  for (std::size_t i = end; i < s.size(); ++i) {
    if (text::is_terminal(s[i])) {
      terminal = s[i];
      break;
    }
  }
  std::vector<std::string> tokens = text::split_ws(std::string_view(s).substr(0, end));
  if (tokens.empty()) return s;

  while (collapse_repeats(tokens)) {
  }
  fix_articles(tokens);
  std::string body = text::normalize_spacing(text::join(tokens, " "));
  while (!body.empty() && (body.back() == ',' || body.back() == ';' || body.back() == ':')) body.pop_back();
  body = text::capitalize_first(std::move(body));
  body += terminal;
  return body;
}

}  // namespace

std::string collapse_repetitions(std::string_view input) {
  std::vector<std::string> tokens = text::split_ws(input);
  while (collapse_repeats(tokens)) {
  }
  return text::join(tokens, " ");
}

std::string grammar_check_sentence(std::string_view sentence) {
  std::string current(sentence);
  for (int i = 0; i < 8; ++i) {
    std::string next = check_once(current);
    if (next == current) break;
    current = std::move(next);
  }
  return current;
}

Document grammar_check(const Document& d) {
  Document out = d;
  for (Sentence& s : out.sentences) {
    s.text = grammar_check_sentence(s.text);
    if (s.origin() != Origin::GrammarCorrected) s.provenance.push_back(Origin::GrammarCorrected);
  }
  return out;
}

}  // namespace hnlg
