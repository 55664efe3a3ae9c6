#pragma once

// Template language for sentence patterns.
//
//   file        := (template | connectives | policy)+
//   template    := "template" IDENT "{" "pattern:" STRING ";"? ("requires:" IDENT ("," IDENT)*)? "}"
//   connectives := "connectives:" "[" STRING ("," STRING)* "]" ";"?
//   policy      := "policy:" ("seeded" | "deterministic") ";"?
//
// Inside a pattern, `{field}` is a slot bound to one of the ten event fields
// and `[ ... ]` is an optional group, emitted only when its guard (the first
// slot inside the group) is non-empty. Groups nest at most three deep.
// A backslash makes the next character literal. `#` starts a line comment.

#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "hnlg/domain.hpp"

namespace hnlg {

struct Segment;

struct LiteralText {
  std::string text;
  bool operator==(const LiteralText&) const = default;
};

struct SlotRef {
  EventField field;
  bool operator==(const SlotRef&) const = default;
};

struct OptionalGroup {
  EventField guard;
  std::vector<Segment> body;
  bool operator==(const OptionalGroup&) const;
};

struct Segment {
  std::variant<LiteralText, SlotRef, OptionalGroup> kind;
  bool operator==(const Segment&) const;
};

inline constexpr std::size_t kMaxOptionalDepth = 3;

struct Template {
  std::string name;
  std::vector<Segment> segments;
  std::set<EventField> required_slots;

  /// Every slot mentioned anywhere in the pattern.
  std::set<EventField> referenced_slots() const;

  bool operator==(const Template&) const = default;
};

enum class SeedPolicy { Deterministic, SeededRandom };

/// Connective pool used when a file declares none.
std::vector<std::string> default_connectives();

struct TemplateSet {
  std::vector<Template> templates;
  std::vector<std::string> connectives = default_connectives();
  SeedPolicy seed_policy = SeedPolicy::SeededRandom;

  const Template* find(std::string_view name) const noexcept;

  bool operator==(const TemplateSet&) const = default;
};

/// Throws SyntaxError, UnknownSlot or DuplicateTemplate, all carrying line/column.
TemplateSet parse_template_set(std::string_view source);

std::string serialize_template_set(const TemplateSet& ts);

/// Pattern body only, as it would appear between the quotes.
std::string serialize_pattern(const std::vector<Segment>& segments);

/// Reads and parses a template file. Throws FileNotFound.
TemplateSet load_template_set(const std::string& path);

}  // namespace hnlg
