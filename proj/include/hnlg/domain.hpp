#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace hnlg {

/// The ten slots of one news sentence's worth of facts, in canonical order.
enum class EventField { Subject, Verb, Object, Reason, Purpose, Area, Date, Week, Year, Month };

inline constexpr std::size_t kEventFieldCount = 10;

inline constexpr std::array<EventField, kEventFieldCount> kEventFields = {
    EventField::Subject, EventField::Verb, EventField::Object, EventField::Reason, EventField::Purpose,
    EventField::Area,    EventField::Date, EventField::Week,   EventField::Year,   EventField::Month};

inline constexpr std::array<std::string_view, kEventFieldCount> kEventFieldNames = {
    "subject", "verb", "object", "reason", "purpose", "area", "date", "week", "year", "month"};

std::string_view field_name(EventField f) noexcept;
std::optional<EventField> parse_field_name(std::string_view name) noexcept;

struct StructuredEvent {
  std::string subject;
  std::string verb;
  std::string object;
  std::string reason;
  std::string purpose;
  std::string area;
  std::string date;
  std::string week;
  std::string year;
  std::string month;

  const std::string& get(EventField f) const noexcept;
  std::string& get(EventField f) noexcept;

  bool operator==(const StructuredEvent&) const = default;
};

struct FieldViolation {
  std::optional<EventField> field;  // nullopt for cross-field violations
  std::string message;
};

struct ValidationResult {
  std::vector<FieldViolation> violations;
  bool ok() const noexcept { return violations.empty(); }
};

ValidationResult validate_event(const StructuredEvent& e);

/// Non-empty ordered list of events; order is sentence order.
class EventSequence {
 public:
  explicit EventSequence(std::vector<StructuredEvent> events);

  const std::vector<StructuredEvent>& events() const noexcept { return events_; }
  std::size_t size() const noexcept { return events_.size(); }
  const StructuredEvent& operator[](std::size_t i) const { return events_[i]; }

  bool operator==(const EventSequence&) const = default;

 private:
  std::vector<StructuredEvent> events_;
};

enum class Origin { RuleRealized, Paraphrased, BaselineGenerated, GrammarCorrected };

std::string_view to_string(Origin o) noexcept;
std::optional<Origin> parse_origin(std::string_view s) noexcept;

struct Sentence {
  std::string text;
  std::size_t index = 0;
  /// Stage lineage, oldest first. Empty for sentences read from source text.
  std::vector<Origin> provenance;

  std::optional<Origin> origin() const noexcept {
    if (provenance.empty()) return std::nullopt;
    return provenance.back();
  }

  bool operator==(const Sentence&) const = default;
};

/// Non-empty, begins uppercase, ends in . ! or ?
bool is_well_formed(const Sentence& s) noexcept;

enum class GeneratorTag { Rule, Baseline, Hybrid, Reference };

std::string_view to_string(GeneratorTag t) noexcept;
std::optional<GeneratorTag> parse_generator_tag(std::string_view s) noexcept;

struct Document {
  std::vector<Sentence> sentences;
  GeneratorTag generator = GeneratorTag::Reference;

  /// Sentences joined by single spaces.
  std::string text() const;

  bool operator==(const Document&) const = default;
};

/// Builds a document from sentence strings, assigning contiguous indices.
Document make_document(const std::vector<std::string>& sentences, GeneratorTag tag,
                       std::vector<Origin> provenance = {});

/// Splits running text on terminal punctuation followed by whitespace.
std::vector<std::string> split_sentences(std::string_view text);

/// True iff indices are 0..n-1 in order.
bool has_contiguous_indices(const Document& d) noexcept;

// ---- HMCU plane ---------------------------------------------------------

class QuadrantScores {
 public:
  /// h = 1 - m and u = 1 - c. Both inputs must lie in [0, 1].
  static QuadrantScores from_measured(double machine_style, double controllable_logic);

  double h() const noexcept { return h_; }
  double m() const noexcept { return m_; }
  double c() const noexcept { return c_; }
  double u() const noexcept { return u_; }

 private:
  QuadrantScores(double h, double m, double c, double u) : h_(h), m_(m), c_(c), u_(u) {}
  double h_, m_, c_, u_;
};

enum class QuadrantLabel { HC, HU, MC, MU };

std::string_view to_string(QuadrantLabel l) noexcept;

// ---- canonical JSON -----------------------------------------------------

/// Emits all ten keys in canonical order.
nlohmann::ordered_json to_json(const StructuredEvent& e);
/// Missing keys read as empty; unknown keys and non-string values are rejected.
StructuredEvent event_from_json(const nlohmann::json& j);

nlohmann::ordered_json to_json(const EventSequence& seq);
EventSequence event_sequence_from_json(const nlohmann::json& j);

std::string serialize_events(const EventSequence& seq);
EventSequence parse_events(std::string_view text);

nlohmann::ordered_json to_json(const Document& d);
Document document_from_json(const nlohmann::json& j);

}  // namespace hnlg
