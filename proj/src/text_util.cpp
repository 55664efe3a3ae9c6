#include "hnlg/text_util.hpp"

#include <cctype>

namespace hnlg::text {

namespace {
bool is_word_byte(char c) noexcept {
  const auto u = static_cast<unsigned char>(c);
  return u >= 0x80 || std::isalnum(u);
}
}  // namespace

std::string normalize_spacing(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  bool pending_space = false;
  for (char c : s) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      pending_space = !out.empty();
      continue;
    }
    const bool tight = c == ',' || c == ';' || c == ':' || is_terminal(c);
    if (pending_space && !tight) out += ' ';
    pending_space = false;
    out += c;
  }
  return out;
}

std::string capitalize_first(std::string s) {
  if (!s.empty() && std::islower(static_cast<unsigned char>(s[0]))) {
    s[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
  }
  return s;
}

std::string lowercase_first(std::string s) {
  if (!s.empty() && std::isupper(static_cast<unsigned char>(s[0]))) {
    s[0] = static_cast<char>(std::tolower(static_cast<unsigned char>(s[0])));
  }
  return s;
}

std::string to_lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      if (!cur.empty()) out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

std::string_view strip_punct(std::string_view s) noexcept {
  while (!s.empty() && !is_word_byte(s.front())) s.remove_prefix(1);
  while (!s.empty() && !is_word_byte(s.back())) s.remove_suffix(1);
  return s;
}

}  // namespace hnlg::text
