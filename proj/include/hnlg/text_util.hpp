#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace hnlg::text {

inline bool is_terminal(char c) noexcept { return c == '.' || c == '!' || c == '?'; }

/// Collapses whitespace runs to one space, trims, and removes spaces before , ; : . ! ?
std::string normalize_spacing(std::string_view s);

/// Uppercases the first character if it is an ASCII letter.
std::string capitalize_first(std::string s);

/// Lowercases the first character if it is an ASCII letter.
std::string lowercase_first(std::string s);

std::string to_lower(std::string_view s);

/// Splits on ASCII whitespace.
std::vector<std::string> split_ws(std::string_view s);

std::string join(const std::vector<std::string>& parts, std::string_view sep);

/// Strips leading and trailing characters that are not letters, digits or
/// non-ASCII bytes.
std::string_view strip_punct(std::string_view s) noexcept;

}  // namespace hnlg::text
