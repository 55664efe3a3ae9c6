#pragma once

#include <string>
#include <string_view>

#include "hnlg/domain.hpp"

namespace hnlg {

/// Step 1 on its own: maximal runs of an immediately repeated word or word
/// pair collapse to one occurrence ("to proper to proper" -> "to proper").
/// Whitespace is normalized; nothing else changes.
std::string collapse_repetitions(std::string_view text);

/// Mechanical clean-up of one sentence, applied until the text stops changing:
///   1. collapse immediately repeated words and word pairs
///   2. capitalize the first letter
///   3. exactly one terminal mark (the first of any trailing run; '.' if none)
///   4. single spaces, no space before punctuation
///   5. a/an agreement
std::string grammar_check_sentence(std::string_view sentence);

/// Applies grammar_check_sentence to every sentence and records
/// GrammarCorrected in each sentence's provenance. Idempotent.
Document grammar_check(const Document& d);

}  // namespace hnlg
