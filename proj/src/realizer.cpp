#include "hnlg/realizer.hpp"

#include <cctype>

#include "hnlg/error.hpp"
#include "hnlg/text_util.hpp"

namespace hnlg {

namespace {

void render(const std::vector<Segment>& segments, const std::map<EventField, std::string>& bindings,
            std::string& out) {
  for (const Segment& s : segments) {
    if (const auto* lit = std::get_if<LiteralText>(&s.kind)) {
      out += lit->text;
    } else if (const auto* slot = std::get_if<SlotRef>(&s.kind)) {
      if (auto it = bindings.find(slot->field); it != bindings.end()) out += it->second;
    } else {
      const auto& group = std::get<OptionalGroup>(s.kind);
      if (bindings.count(group.guard)) render(group.body, bindings, out);
    }
  }
}

bool keeps_capital(std::string_view word, const std::set<std::string>* proper) {
  const std::string_view bare = text::strip_punct(word);
  if (bare.empty()) return true;
  if (bare.size() >= 2 && std::isupper(static_cast<unsigned char>(bare[0])) &&
      std::isupper(static_cast<unsigned char>(bare[1]))) {
    return true;
  }
  if (bare == "I" || word.rfind("I'", 0) == 0) return true;
  return proper && proper->count(std::string(bare));
}

}  // namespace

ContentSelection determine_content(const StructuredEvent& e, const TemplateSet& ts, std::size_t event_index) {
  for (std::size_t i = 0; i < ts.templates.size(); ++i) {
    const Template& t = ts.templates[i];
    bool applicable = true;
    for (EventField f : t.required_slots) {
      if (e.get(f).empty()) {
        applicable = false;
        break;
      }
    }
    if (!applicable) continue;
    ContentSelection sel;
    sel.template_index = i;
    sel.selected = &t;
    for (EventField f : t.referenced_slots()) {
      if (!e.get(f).empty()) sel.bindings.emplace(f, e.get(f));
    }
    return sel;
  }
  throw NoApplicableTemplate(event_index);
}

std::string lexicalize(const ContentSelection& selection) {
  std::string raw;
  render(selection.selected->segments, selection.bindings, raw);
  std::string s = text::normalize_spacing(raw);
  while (!s.empty() && (s.back() == ',' || s.back() == ';' || s.back() == ':')) s.pop_back();
  s = text::capitalize_first(std::move(s));
  if (!s.empty() && !text::is_terminal(s.back())) s += '.';
  return s;
}

std::set<std::string> proper_noun_tokens(const StructuredEvent& e) {
  std::set<std::string> out;
  for (EventField f : kEventFields) {
    for (const std::string& w : text::split_ws(e.get(f))) {
      const std::string_view bare = text::strip_punct(w);
      if (!bare.empty() && std::isupper(static_cast<unsigned char>(bare[0]))) out.emplace(bare);
    }
  }
  return out;
}

std::vector<std::string> plan_discourse(std::span<const std::string> sentences,
                                        std::span<const std::string> connectives, std::uint64_t offset,
                                        std::span<const std::set<std::string>> proper_nouns) {
  std::vector<std::string> out(sentences.begin(), sentences.end());
  if (connectives.empty()) return out;
  for (std::size_t i = 1; i < out.size(); ++i) {
    const std::string& connective = connectives[(offset % connectives.size() + (i - 1)) % connectives.size()];
    const std::set<std::string>* proper = i < proper_nouns.size() ? &proper_nouns[i] : nullptr;
    std::string body = out[i];
    const std::size_t first_space = body.find(' ');
    const std::string_view first_word = std::string_view(body).substr(0, first_space);
    if (!keeps_capital(first_word, proper)) body = text::lowercase_first(std::move(body));
    out[i] = connective.empty() ? text::capitalize_first(std::move(body)) : connective + " " + body;
  }
  return out;
}

Document realize(const EventSequence& seq, const TemplateSet& ts, std::uint64_t seed) {
  std::vector<std::string> raw;
  std::vector<std::set<std::string>> proper;
  raw.reserve(seq.size());
  proper.reserve(seq.size());
  for (std::size_t i = 0; i < seq.size(); ++i) {
    const StructuredEvent& e = seq[i];
    if (auto v = validate_event(e); !v.ok()) {
      throw InvalidInput("event " + std::to_string(i) + ": " + v.violations.front().message);
    }
    raw.push_back(lexicalize(determine_content(e, ts, i)));
    proper.push_back(proper_noun_tokens(e));
  }
  const std::uint64_t offset = ts.seed_policy == SeedPolicy::SeededRandom ? seed : 0;
  return make_document(plan_discourse(raw, ts.connectives, offset, proper), GeneratorTag::Rule,
                       {Origin::RuleRealized});
}

}  // namespace hnlg
