#include "hnlg/domain.hpp"

#include <cctype>
#include <cmath>

#include "hnlg/error.hpp"

namespace hnlg {

std::string_view field_name(EventField f) noexcept { return kEventFieldNames[static_cast<std::size_t>(f)]; }

std::optional<EventField> parse_field_name(std::string_view name) noexcept {
  for (std::size_t i = 0; i < kEventFieldCount; ++i) {
    if (kEventFieldNames[i] == name) return kEventFields[i];
  }
  return std::nullopt;
}

const std::string& StructuredEvent::get(EventField f) const noexcept {
  switch (f) {
    case EventField::Subject: return subject;
    case EventField::Verb: return verb;
    case EventField::Object: return object;
    case EventField::Reason: return reason;
    case EventField::Purpose: return purpose;
    case EventField::Area: return area;
    case EventField::Date: return date;
    case EventField::Week: return week;
    case EventField::Year: return year;
    case EventField::Month: return month;
  }
  return subject;
}

std::string& StructuredEvent::get(EventField f) noexcept {
  return const_cast<std::string&>(static_cast<const StructuredEvent&>(*this).get(f));
}

ValidationResult validate_event(const StructuredEvent& e) {
  ValidationResult result;
  if (e.subject.empty() && e.verb.empty() && e.object.empty()) {
    result.violations.push_back({std::nullopt, "subject, verb and object are all empty"});
  }
  for (EventField f : kEventFields) {
    const std::string& v = e.get(f);
    if (v.find('\n') != std::string::npos || v.find('\r') != std::string::npos) {
      result.violations.push_back({f, "newline in " + std::string(field_name(f))});
    }
  }
  return result;
}

EventSequence::EventSequence(std::vector<StructuredEvent> events) : events_(std::move(events)) {
  if (events_.empty()) throw InvalidInput("event sequence must not be empty");
}

std::string_view to_string(Origin o) noexcept {
  switch (o) {
    case Origin::RuleRealized: return "rule_realized";
    case Origin::Paraphrased: return "paraphrased";
    case Origin::BaselineGenerated: return "baseline_generated";
    case Origin::GrammarCorrected: return "grammar_corrected";
  }
  return "";
}

std::optional<Origin> parse_origin(std::string_view s) noexcept {
  for (Origin o : {Origin::RuleRealized, Origin::Paraphrased, Origin::BaselineGenerated, Origin::GrammarCorrected}) {
    if (to_string(o) == s) return o;
  }
  return std::nullopt;
}

bool is_well_formed(const Sentence& s) noexcept {
  if (s.text.empty()) return false;
  const char last = s.text.back();
  if (last != '.' && last != '!' && last != '?') return false;
  const auto first = static_cast<unsigned char>(s.text.front());
  return !std::islower(first);
}

std::string_view to_string(GeneratorTag t) noexcept {
  switch (t) {
    case GeneratorTag::Rule: return "rule";
    case GeneratorTag::Baseline: return "baseline";
    case GeneratorTag::Hybrid: return "hybrid";
    case GeneratorTag::Reference: return "reference";
  }
  return "";
}

std::optional<GeneratorTag> parse_generator_tag(std::string_view s) noexcept {
  for (GeneratorTag t : {GeneratorTag::Rule, GeneratorTag::Baseline, GeneratorTag::Hybrid, GeneratorTag::Reference}) {
    if (to_string(t) == s) return t;
  }
  return std::nullopt;
}

std::string Document::text() const {
  std::string out;
  for (const Sentence& s : sentences) {
    if (!out.empty()) out += ' ';
    out += s.text;
  }
  return out;
}

Document make_document(const std::vector<std::string>& sentences, GeneratorTag tag, std::vector<Origin> provenance) {
  Document d;
  d.generator = tag;
  d.sentences.reserve(sentences.size());
  for (std::size_t i = 0; i < sentences.size(); ++i) {
    d.sentences.push_back(Sentence{sentences[i], i, provenance});
  }
  return d;
}

std::vector<std::string> split_sentences(std::string_view text) {
  std::vector<std::string> out;
  std::string current;
  auto flush = [&] {
    std::size_t b = current.find_first_not_of(" \t\r\n");
    std::size_t e = current.find_last_not_of(" \t\r\n");
    if (b != std::string::npos) out.push_back(current.substr(b, e - b + 1));
    current.clear();
  };
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    current += c;
    if (c == '.' || c == '!' || c == '?') {
      std::size_t j = i + 1;
      while (j < text.size() && (text[j] == '.' || text[j] == '!' || text[j] == '?')) current += text[j++];
      i = j - 1;
      if (j == text.size() || std::isspace(static_cast<unsigned char>(text[j]))) flush();
    } else if (c == '\n') {
      flush();
    }
  }
  flush();
  return out;
}

bool has_contiguous_indices(const Document& d) noexcept {
  for (std::size_t i = 0; i < d.sentences.size(); ++i) {
    if (d.sentences[i].index != i) return false;
  }
  return true;
}

QuadrantScores QuadrantScores::from_measured(double machine_style, double controllable_logic) {
  auto in_unit = [](double x) { return std::isfinite(x) && x >= 0.0 && x <= 1.0; };
  if (!in_unit(machine_style) || !in_unit(controllable_logic)) {
    throw InvalidInput("quadrant scores must lie in [0, 1]");
  }
  return QuadrantScores(1.0 - machine_style, machine_style, controllable_logic, 1.0 - controllable_logic);
}

std::string_view to_string(QuadrantLabel l) noexcept {
  switch (l) {
    case QuadrantLabel::HC: return "HC";
    case QuadrantLabel::HU: return "HU";
    case QuadrantLabel::MC: return "MC";
    case QuadrantLabel::MU: return "MU";
  }
  return "";
}

nlohmann::ordered_json to_json(const StructuredEvent& e) {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (EventField f : kEventFields) j[std::string(field_name(f))] = e.get(f);
  return j;
}

StructuredEvent event_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw InvalidInput("event must be a JSON object");
  StructuredEvent e;
  for (const auto& [key, value] : j.items()) {
    auto f = parse_field_name(key);
    if (!f) throw InvalidInput("unknown event key '" + key + "'");
    if (!value.is_string()) throw InvalidInput("event key '" + key + "' must be a string");
    e.get(*f) = value.get<std::string>();
  }
  return e;
}

nlohmann::ordered_json to_json(const EventSequence& seq) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const StructuredEvent& e : seq.events()) arr.push_back(to_json(e));
  return arr;
}

EventSequence event_sequence_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw InvalidInput("events must be a JSON array");
  std::vector<StructuredEvent> events;
  events.reserve(j.size());
  for (const auto& item : j) events.push_back(event_from_json(item));
  return EventSequence(std::move(events));
}

std::string serialize_events(const EventSequence& seq) { return to_json(seq).dump(); }

EventSequence parse_events(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidInput(std::string("malformed events JSON: ") + e.what());
  }
  return event_sequence_from_json(j);
}

nlohmann::ordered_json to_json(const Document& d) {
  nlohmann::ordered_json j;
  j["generator"] = std::string(to_string(d.generator));
  nlohmann::ordered_json sentences = nlohmann::ordered_json::array();
  for (const Sentence& s : d.sentences) {
    nlohmann::ordered_json sj;
    sj["index"] = s.index;
    sj["text"] = s.text;
    nlohmann::ordered_json prov = nlohmann::ordered_json::array();
    for (Origin o : s.provenance) prov.push_back(std::string(to_string(o)));
    sj["provenance"] = std::move(prov);
    sentences.push_back(std::move(sj));
  }
  j["sentences"] = std::move(sentences);
  return j;
}

Document document_from_json(const nlohmann::json& j) {
  Document d;
  auto tag = parse_generator_tag(j.at("generator").get<std::string>());
  if (!tag) throw InvalidInput("unknown generator tag");
  d.generator = *tag;
  for (const auto& sj : j.at("sentences")) {
    Sentence s;
    s.index = sj.at("index").get<std::size_t>();
    s.text = sj.at("text").get<std::string>();
    for (const auto& p : sj.at("provenance")) {
      auto o = parse_origin(p.get<std::string>());
      if (!o) throw InvalidInput("unknown provenance tag");
      s.provenance.push_back(*o);
    }
    d.sentences.push_back(std::move(s));
  }
  return d;
}

}  // namespace hnlg
