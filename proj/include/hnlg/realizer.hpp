#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "hnlg/domain.hpp"
#include "hnlg/template_dsl.hpp"

namespace hnlg {

/// Output of content determination for one event.
struct ContentSelection {
  std::size_t template_index = 0;
  const Template* selected = nullptr;
  /// Non-empty fields referenced by the template.
  std::map<EventField, std::string> bindings;
};

/// First template whose required slots are all filled. Throws NoApplicableTemplate.
ContentSelection determine_content(const StructuredEvent& e, const TemplateSet& ts, std::size_t event_index = 0);

/// Renders a selection into one sentence: optional groups whose guard is empty
/// are dropped, spacing is normalized, the first letter is capitalized and a
/// period is appended when no terminal mark is present.
std::string lexicalize(const ContentSelection& selection);

/// Tokens that should keep their capital letter after a connective is
/// prepended: tokens written capitalized in the event's own field values.
std::set<std::string> proper_noun_tokens(const StructuredEvent& e);

/// Prefixes every sentence after the first with a connective, round-robin from
/// `connectives[(offset + i - 1) % size]`. The original first word is
/// lowercased unless it looks like a proper noun (two leading capitals, or
/// listed in the matching `proper_nouns` entry).
std::vector<std::string> plan_discourse(std::span<const std::string> sentences,
                                        std::span<const std::string> connectives, std::uint64_t offset,
                                        std::span<const std::set<std::string>> proper_nouns = {});

/// Realizes every event into one sentence. Pure in (seq, ts, seed).
Document realize(const EventSequence& seq, const TemplateSet& ts, std::uint64_t seed);

}  // namespace hnlg
