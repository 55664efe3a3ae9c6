#include "hnlg/template_dsl.hpp"

#include <cctype>
#include <fstream>
#include <optional>
#include <sstream>

#include "hnlg/error.hpp"

namespace hnlg {

bool OptionalGroup::operator==(const OptionalGroup&) const = default;
bool Segment::operator==(const Segment&) const = default;

std::vector<std::string> default_connectives() { return {"Moreover,", "Besides,", "In addition,"}; }

namespace {

void collect_slots(const std::vector<Segment>& segments, std::set<EventField>& out) {
  for (const Segment& s : segments) {
    if (const auto* slot = std::get_if<SlotRef>(&s.kind)) {
      out.insert(slot->field);
    } else if (const auto* group = std::get_if<OptionalGroup>(&s.kind)) {
      collect_slots(group->body, out);
    }
  }
}

enum class TokKind { Ident, String, Punct, End };

struct Token {
  TokKind kind = TokKind::End;
  std::string text;  // raw text; strings keep escapes, without the quotes
  std::size_t line = 1;
  std::size_t col = 1;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  Token next() {
    skip_space_and_comments();
    Token t;
    t.line = line_;
    t.col = col_;
    if (pos_ >= src_.size()) return t;
    const char c = src_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      t.kind = TokKind::Ident;
      while (pos_ < src_.size()) {
        const char d = src_[pos_];
        if (!std::isalnum(static_cast<unsigned char>(d)) && d != '_' && d != '-') break;
        t.text += d;
        advance();
      }
      return t;
    }
    if (c == '"') {
      t.kind = TokKind::String;
      advance();
      while (true) {
        if (pos_ >= src_.size() || src_[pos_] == '\n') throw SyntaxError(t.line, t.col, "unterminated string");
        const char d = src_[pos_];
        if (d == '"') {
          advance();
          break;
        }
        if (d == '\\') {
          t.text += d;
          advance();
          if (pos_ >= src_.size() || src_[pos_] == '\n') throw SyntaxError(t.line, t.col, "unterminated string");
        }
        t.text += src_[pos_];
        advance();
      }
      // String content starts one column after the opening quote.
      t.col += 1;
      return t;
    }
    if (c == '{' || c == '}' || c == '[' || c == ']' || c == ':' || c == ';' || c == ',') {
      t.kind = TokKind::Punct;
      t.text = std::string(1, c);
      advance();
      return t;
    }
    throw SyntaxError(line_, col_, std::string("unexpected character '") + c + "'");
  }

 private:
  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip_space_and_comments() {
    while (pos_ < src_.size()) {
      const char c = src_[pos_];
      if (c == '#') {
        while (pos_ < src_.size() && src_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

/// Decodes backslash escapes in a connective string.
std::string unescape(std::string_view raw) {
  std::string out;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (raw[i] == '\\' && i + 1 < raw.size()) ++i;
    out += raw[i];
  }
  return out;
}

class PatternParser {
 public:
  PatternParser(std::string_view raw, std::size_t line, std::size_t col) : raw_(raw), line_(line), col_(col) {}

  std::vector<Segment> parse() {
    auto segs = parse_sequence(0);
    if (pos_ < raw_.size()) fail("unmatched ']'");
    return segs;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw SyntaxError(line_, col_ + pos_, msg); }

  std::vector<Segment> parse_sequence(std::size_t depth) {
    std::vector<Segment> out;
    std::string literal;
    auto flush_literal = [&] {
      if (!literal.empty()) {
        out.push_back(Segment{LiteralText{literal}});
        literal.clear();
      }
    };
    while (pos_ < raw_.size()) {
      const char c = raw_[pos_];
      if (c == '\\') {
        if (pos_ + 1 >= raw_.size()) fail("dangling escape");
        literal += raw_[pos_ + 1];
        pos_ += 2;
      } else if (c == '{') {
        flush_literal();
        out.push_back(Segment{parse_slot()});
      } else if (c == '}') {
        fail("unmatched '}'");
      } else if (c == '[') {
        flush_literal();
        if (depth + 1 > kMaxOptionalDepth) fail("optional groups nest deeper than 3");
        const std::size_t open = pos_;
        ++pos_;
        auto body = parse_sequence(depth + 1);
        if (pos_ >= raw_.size() || raw_[pos_] != ']') {
          pos_ = open;
          fail("unterminated optional group");
        }
        ++pos_;
        auto guard = first_slot(body);
        if (!guard) {
          pos_ = open;
          fail("optional group contains no slot");
        }
        out.push_back(Segment{OptionalGroup{*guard, std::move(body)}});
      } else if (c == ']') {
        if (depth == 0) fail("unmatched ']'");
        break;
      } else {
        literal += c;
        ++pos_;
      }
    }
    flush_literal();
    return out;
  }

  SlotRef parse_slot() {
    const std::size_t open = pos_;
    ++pos_;
    std::string name;
    while (pos_ < raw_.size() && raw_[pos_] != '}') {
      if (raw_[pos_] == '{' || raw_[pos_] == '[' || raw_[pos_] == ']') fail("malformed slot");
      name += raw_[pos_++];
    }
    if (pos_ >= raw_.size()) {
      pos_ = open;
      fail("unterminated slot");
    }
    ++pos_;
    auto field = parse_field_name(name);
    if (!field) throw UnknownSlot(name, line_, col_ + open + 1);
    return SlotRef{*field};
  }

  static std::optional<EventField> first_slot(const std::vector<Segment>& segs) {
    for (const Segment& s : segs) {
      if (const auto* slot = std::get_if<SlotRef>(&s.kind)) return slot->field;
      if (const auto* group = std::get_if<OptionalGroup>(&s.kind)) {
        if (auto f = first_slot(group->body)) return f;
      }
    }
    return std::nullopt;
  }

  std::string_view raw_;
  std::size_t line_;
  std::size_t col_;
  std::size_t pos_ = 0;
};

class FileParser {
 public:
  explicit FileParser(std::string_view src) : lexer_(src) { shift(); }

  TemplateSet parse() {
    TemplateSet ts;
    bool saw_connectives = false;
    bool saw_policy = false;
    while (cur_.kind != TokKind::End) {
      if (is_ident("template")) {
        parse_template(ts);
      } else if (is_ident("connectives")) {
        if (saw_connectives) fail("connectives declared twice");
        saw_connectives = true;
        ts.connectives = parse_connectives();
      } else if (is_ident("policy")) {
        if (saw_policy) fail("policy declared twice");
        saw_policy = true;
        ts.seed_policy = parse_policy();
      } else {
        fail("expected 'template', 'connectives' or 'policy'");
      }
    }
    if (ts.templates.empty()) throw SyntaxError(cur_.line, cur_.col, "no templates defined");
    return ts;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw SyntaxError(cur_.line, cur_.col, msg); }

  void shift() { cur_ = lexer_.next(); }
  bool is_ident(std::string_view s) const { return cur_.kind == TokKind::Ident && cur_.text == s; }
  bool is_punct(char c) const { return cur_.kind == TokKind::Punct && cur_.text[0] == c; }

  void expect_punct(char c) {
    if (!is_punct(c)) fail(std::string("expected '") + c + "'");
    shift();
  }

  void expect_key(std::string_view key) {
    if (!is_ident(key)) fail("expected '" + std::string(key) + ":'");
    shift();
    expect_punct(':');
  }

  void parse_template(TemplateSet& ts) {
    shift();
    if (cur_.kind != TokKind::Ident) fail("expected template name");
    Template t;
    t.name = cur_.text;
    const Token name_tok = cur_;
    if (ts.find(t.name)) throw DuplicateTemplate(t.name, name_tok.line, name_tok.col);
    shift();
    expect_punct('{');
    expect_key("pattern");
    if (cur_.kind != TokKind::String) fail("expected pattern string");
    t.segments = PatternParser(cur_.text, cur_.line, cur_.col).parse();
    shift();
    if (is_punct(';')) shift();
    const auto referenced = t.referenced_slots();
    if (is_ident("requires")) {
      shift();
      expect_punct(':');
      while (true) {
        if (cur_.kind != TokKind::Ident) fail("expected slot name");
        auto field = parse_field_name(cur_.text);
        if (!field) throw UnknownSlot(cur_.text, cur_.line, cur_.col);
        if (!referenced.count(*field)) fail("required slot '" + cur_.text + "' does not appear in the pattern");
        t.required_slots.insert(*field);
        shift();
        if (!is_punct(',')) break;
        shift();
      }
      if (is_punct(';')) shift();
    }
    expect_punct('}');
    ts.templates.push_back(std::move(t));
  }

  std::vector<std::string> parse_connectives() {
    shift();
    expect_punct(':');
    expect_punct('[');
    std::vector<std::string> out;
    while (true) {
      if (cur_.kind != TokKind::String) fail("expected connective string");
      out.push_back(unescape(cur_.text));
      shift();
      if (!is_punct(',')) break;
      shift();
    }
    expect_punct(']');
    if (is_punct(';')) shift();
    return out;
  }

  SeedPolicy parse_policy() {
    shift();
    expect_punct(':');
    SeedPolicy p;
    if (is_ident("seeded")) {
      p = SeedPolicy::SeededRandom;
    } else if (is_ident("deterministic")) {
      p = SeedPolicy::Deterministic;
    } else {
      fail("expected 'seeded' or 'deterministic'");
    }
    shift();
    if (is_punct(';')) shift();
    return p;
  }

  Lexer lexer_;
  Token cur_;
};

void escape_into(std::string& out, std::string_view text, bool pattern) {
  for (char c : text) {
    if (c == '\\' || c == '"' || (pattern && (c == '{' || c == '}' || c == '[' || c == ']'))) out += '\\';
    out += c;
  }
}

void serialize_segments(std::string& out, const std::vector<Segment>& segments) {
  for (const Segment& s : segments) {
    std::visit(
        [&](const auto& k) {
          using K = std::decay_t<decltype(k)>;
          if constexpr (std::is_same_v<K, LiteralText>) {
            escape_into(out, k.text, true);
          } else if constexpr (std::is_same_v<K, SlotRef>) {
            out += '{';
            out += field_name(k.field);
            out += '}';
          } else {
            out += '[';
            serialize_segments(out, k.body);
            out += ']';
          }
        },
        s.kind);
  }
}

}  // namespace

std::set<EventField> Template::referenced_slots() const {
  std::set<EventField> out;
  collect_slots(segments, out);
  return out;
}

const Template* TemplateSet::find(std::string_view name) const noexcept {
  for (const Template& t : templates) {
    if (t.name == name) return &t;
  }
  return nullptr;
}

TemplateSet parse_template_set(std::string_view source) { return FileParser(source).parse(); }

std::string serialize_pattern(const std::vector<Segment>& segments) {
  std::string out;
  serialize_segments(out, segments);
  return out;
}

std::string serialize_template_set(const TemplateSet& ts) {
  std::string out;
  out += "policy: ";
  out += ts.seed_policy == SeedPolicy::SeededRandom ? "seeded" : "deterministic";
  out += ";\n";
  out += "connectives: [";
  for (std::size_t i = 0; i < ts.connectives.size(); ++i) {
    if (i) out += ", ";
    out += '"';
    escape_into(out, ts.connectives[i], false);
    out += '"';
  }
  out += "];\n";
  for (const Template& t : ts.templates) {
    out += "\ntemplate " + t.name + " {\n  pattern: \"";
    serialize_segments(out, t.segments);
    out += "\";\n";
    if (!t.required_slots.empty()) {
      out += "  requires: ";
      bool first = true;
      for (EventField f : t.required_slots) {
        if (!first) out += ", ";
        out += field_name(f);
        first = false;
      }
      out += '\n';
    }
    out += "}\n";
  }
  return out;
}

TemplateSet load_template_set(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FileNotFound(path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_template_set(buf.str());
}

}  // namespace hnlg
