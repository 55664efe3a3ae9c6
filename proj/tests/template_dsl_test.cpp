#include <gtest/gtest.h>

#include "hnlg/error.hpp"
#include "hnlg/template_dsl.hpp"
#include "test_support.hpp"

using namespace hnlg;

namespace {

Segment lit(std::string s) { return Segment{LiteralText{std::move(s)}}; }
Segment slot(EventField f) { return Segment{SlotRef{f}}; }
Segment group(EventField guard, std::vector<Segment> body) { return Segment{OptionalGroup{guard, std::move(body)}}; }

TemplateSet parse_one(const std::string& pattern, const std::string& requires_clause = "") {
  return parse_template_set("template t { pattern: \"" + pattern + "\"; " + requires_clause + " }");
}

}  // namespace

TEST(TemplateDsl, ParsesSegmentsSlotsAndGroups) {
  auto ts = parse_one("{subject} {verb}[ in {area}[ on {date}]].", "requires: subject, verb");
  ASSERT_EQ(ts.templates.size(), 1u);
  const Template& t = ts.templates[0];
  EXPECT_EQ(t.name, "t");
  std::vector<Segment> expected = {
      slot(EventField::Subject), lit(" "), slot(EventField::Verb),
      group(EventField::Area, {lit(" in "), slot(EventField::Area),
                               group(EventField::Date, {lit(" on "), slot(EventField::Date)})}),
      lit(".")};
  EXPECT_EQ(t.segments, expected);
  EXPECT_EQ(t.required_slots, (std::set<EventField>{EventField::Subject, EventField::Verb}));
  EXPECT_EQ(t.referenced_slots(),
            (std::set<EventField>{EventField::Subject, EventField::Verb, EventField::Area, EventField::Date}));
}

TEST(TemplateDsl, GuardIsFirstSlotEvenWhenNested) {
  auto ts = parse_one("[x [{month}] {year}]");
  const auto& g = std::get<OptionalGroup>(ts.templates[0].segments[0].kind);
  EXPECT_EQ(g.guard, EventField::Month);
}

TEST(TemplateDsl, DefaultsWhenNoPolicyOrConnectives) {
  auto ts = parse_one("{subject}.");
  EXPECT_EQ(ts.connectives, default_connectives());
  EXPECT_EQ(ts.seed_policy, SeedPolicy::SeededRandom);
}

TEST(TemplateDsl, PolicyAndConnectives) {
  auto ts = parse_template_set(R"(
    policy: deterministic
    connectives: ["Also,", "Then \"quoted\","]
    template a { pattern: "{verb}" }
  )");
  EXPECT_EQ(ts.seed_policy, SeedPolicy::Deterministic);
  EXPECT_EQ(ts.connectives, (std::vector<std::string>{"Also,", "Then \"quoted\","}));
}

TEST(TemplateDsl, EscapesInsidePattern) {
  auto ts = parse_one(R"(a \{b\} \[c\] \\ \"d\")");
  ASSERT_EQ(ts.templates[0].segments.size(), 1u);
  EXPECT_EQ(std::get<LiteralText>(ts.templates[0].segments[0].kind).text, R"(a {b} [c] \ "d")");
}

TEST(TemplateDsl, CommentsAreIgnored) {
  auto ts = parse_template_set("# header\ntemplate a { # trailing\n pattern: \"{verb} #not a comment\" }\n");
  EXPECT_EQ(std::get<LiteralText>(ts.templates[0].segments[1].kind).text, " #not a comment");
}

TEST(TemplateDsl, UnknownSlotInPatternCarriesPosition) {
  // Line 2: the pattern opens in column 13, so the slot name starts in column 24.
  const std::string src = "template a {\n  pattern: \"{subject} {location}.\"\n}";
  try {
    parse_template_set(src);
    FAIL() << "expected UnknownSlot";
  } catch (const UnknownSlot& e) {
    EXPECT_EQ(e.name(), "location");
    EXPECT_EQ(e.line(), 2u);
    EXPECT_EQ(e.column(), 24u);
    EXPECT_NE(std::string(e.what()).find("2:24"), std::string::npos);
  }
}

TEST(TemplateDsl, UnknownSlotInRequiresCarriesPosition) {
  const std::string src = "template a {\n  pattern: \"{subject}\"\n  requires: subject, place\n}";
  try {
    parse_template_set(src);
    FAIL() << "expected UnknownSlot";
  } catch (const UnknownSlot& e) {
    EXPECT_EQ(e.name(), "place");
    EXPECT_EQ(e.line(), 3u);
    EXPECT_EQ(e.column(), 22u);
  }
}

TEST(TemplateDsl, RequiredSlotMustAppearInPattern) {
  EXPECT_THROW(parse_one("{subject}", "requires: verb"), SyntaxError);
}

TEST(TemplateDsl, DuplicateTemplateName) {
  try {
    parse_template_set("template a { pattern: \"{verb}\" }\ntemplate a { pattern: \"{subject}\" }");
    FAIL();
  } catch (const DuplicateTemplate& e) {
    EXPECT_EQ(e.name(), "a");
    EXPECT_EQ(e.line(), 2u);
    EXPECT_EQ(e.column(), 10u);
  }
}

TEST(TemplateDsl, StructuralErrors) {
  EXPECT_NO_THROW(parse_one("[[[{verb}]]]"));
  EXPECT_THROW(parse_one("[[[[{verb}]]]]"), SyntaxError);
  EXPECT_THROW(parse_one("[{verb}"), SyntaxError);
  EXPECT_THROW(parse_one("{verb}]"), SyntaxError);
  EXPECT_THROW(parse_one("{verb"), SyntaxError);
  EXPECT_THROW(parse_one("verb}"), SyntaxError);
  EXPECT_THROW(parse_one("[no slot]"), SyntaxError);
  EXPECT_THROW(parse_one("{ve[rb}"), SyntaxError);
  EXPECT_THROW(parse_template_set("template a { pattern: \"{verb}\"\n"), SyntaxError);
  EXPECT_THROW(parse_template_set("template a { pattern: \"open\n\" }"), SyntaxError);
  EXPECT_THROW(parse_template_set("template { pattern: \"{verb}\" }"), SyntaxError);
  EXPECT_THROW(parse_template_set("policy: random; template a { pattern: \"{verb}\" }"), SyntaxError);
  EXPECT_THROW(parse_template_set("policy: seeded; policy: seeded; template a { pattern: \"{verb}\" }"), SyntaxError);
  EXPECT_THROW(parse_template_set("connectives: []; template a { pattern: \"{verb}\" }"), SyntaxError);
  EXPECT_THROW(parse_template_set("template a { pattern: \"{verb}\" } @"), SyntaxError);
}

TEST(TemplateDsl, EmptyFileHasNoTemplates) {
  EXPECT_THROW(parse_template_set(""), SyntaxError);
  EXPECT_THROW(parse_template_set("# only a comment\npolicy: seeded;"), SyntaxError);
}

TEST(TemplateDsl, ErrorColumnPointsAtOffendingBracket) {
  try {
    parse_one("ab]");
    FAIL();
  } catch (const SyntaxError& e) {
    // `template t { pattern: "` is 23 characters; the ']' is the third of the pattern.
    EXPECT_EQ(e.line(), 1u);
    EXPECT_EQ(e.column(), 26u);
  }
}

TEST(TemplateDsl, ShippedFileRoundTrips) {
  auto ts = load_template_set(hnlg::testing::data_path("news.tpl"));
  EXPECT_EQ(ts.templates.size(), 4u);
  EXPECT_EQ(parse_template_set(serialize_template_set(ts)), ts);
}

TEST(TemplateDsl, RandomSetsRoundTrip) {
  SeededRng rng(2024);
  for (int i = 0; i < 300; ++i) {
    const TemplateSet ts = hnlg::testing::random_template_set(rng);
    const std::string text = serialize_template_set(ts);
    TemplateSet back;
    ASSERT_NO_THROW(back = parse_template_set(text)) << text;
    ASSERT_EQ(back, ts) << text;
    EXPECT_EQ(serialize_template_set(back), text);
  }
}

TEST(TemplateDsl, MissingFile) { EXPECT_THROW(load_template_set("/nonexistent/x.tpl"), FileNotFound); }

TEST(TemplateDsl, FindByName) {
  auto ts = load_template_set(hnlg::testing::data_path("news.tpl"));
  ASSERT_NE(ts.find("no_object"), nullptr);
  EXPECT_EQ(ts.find("no_object")->name, "no_object");
  EXPECT_EQ(ts.find("nope"), nullptr);
}
