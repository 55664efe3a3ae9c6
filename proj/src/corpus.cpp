#include "hnlg/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>

#include "hnlg/error.hpp"
#include "hnlg/random.hpp"
#include "hnlg/text_util.hpp"

namespace hnlg {

Document CorpusRecord::reference_document() const {
  return make_document(split_sentences(reference_text), GeneratorTag::Reference);
}

std::vector<std::string> default_keywords(const EventSequence& seq) {
  std::vector<std::string> out;
  for (const StructuredEvent& e : seq.events()) {
    const auto words = text::split_ws(e.subject.empty() ? e.object : e.subject);
    auto cap = std::find_if(words.begin(), words.end(),
                            [](const std::string& w) { return std::isupper(static_cast<unsigned char>(w.front())); });
    if (cap != words.end()) {
      out.push_back(*cap);
    } else if (!words.empty()) {
      out.push_back(words.back());
    }
  }
  return out;
}

bool is_valid_record_id(std::string_view id) noexcept {
  if (id.empty() || id == "." || id == "..") return false;
  return std::all_of(id.begin(), id.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '.' || c == '_' || c == '-';
  });
}

nlohmann::ordered_json to_json(const CorpusRecord& r) {
  nlohmann::ordered_json j;
  j["id"] = r.id;
  j["reference_text"] = r.reference_text;
  j["events"] = to_json(r.events);
  j["keywords"] = r.keywords;
  return j;
}

CorpusRecord record_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw InvalidInput("record must be a JSON object");
  auto string_field = [&](const char* key) {
    if (!j.contains(key)) throw InvalidInput(std::string("missing ") + key);
    if (!j[key].is_string()) throw InvalidInput(std::string(key) + " must be a string");
    return j[key].get<std::string>();
  };
  std::string id = string_field("id");
  if (!is_valid_record_id(id)) throw InvalidInput("id '" + id + "' may only use letters, digits, '.', '_' and '-'");
  std::string reference = string_field("reference_text");
  if (reference.find_first_not_of(" \t\r\n") == std::string::npos) throw InvalidInput("reference_text is empty");
  if (!j.contains("events")) throw InvalidInput("missing events");
  EventSequence events = event_sequence_from_json(j["events"]);
  for (std::size_t i = 0; i < events.size(); ++i) {
    if (auto v = validate_event(events[i]); !v.ok()) {
      throw InvalidInput("event " + std::to_string(i) + ": " + v.violations.front().message);
    }
  }
  if (!j.contains("keywords") || !j["keywords"].is_array() || j["keywords"].empty()) {
    throw InvalidInput("keywords must be a non-empty array");
  }
  std::vector<std::string> keywords;
  for (const auto& k : j["keywords"]) {
    if (!k.is_string() || k.get<std::string>().empty()) throw InvalidInput("keywords must be non-empty strings");
    keywords.push_back(k.get<std::string>());
  }
  return CorpusRecord{std::move(id), std::move(reference), std::move(events), std::move(keywords)};
}

std::vector<CorpusRecord> parse_corpus(std::string_view jsonl) {
  std::vector<CorpusRecord> out;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < jsonl.size()) {
    std::size_t end = jsonl.find('\n', pos);
    if (end == std::string_view::npos) end = jsonl.size();
    const std::string_view line = jsonl.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string_view::npos) continue;
    try {
      out.push_back(record_from_json(nlohmann::json::parse(line)));
    } catch (const nlohmann::json::exception& e) {
      throw MalformedRecord(line_no, e.what());
    } catch (const InvalidInput& e) {
      throw MalformedRecord(line_no, e.what());
    }
  }
  return out;
}

std::vector<CorpusRecord> load_corpus(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FileNotFound(path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_corpus(buf.str());
}

void write_corpus(const std::filesystem::path& path, const std::vector<CorpusRecord>& records) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  for (const CorpusRecord& r : records) out << to_json(r).dump() << '\n';
  if (!out) throw IoError("write failed: " + path.string());
}

std::size_t GroupedCorpus::test_size() const noexcept {
  std::size_t n = 0;
  for (const auto& g : test_groups) n += g.size();
  return n;
}

GroupedCorpus split_and_group(std::vector<CorpusRecord> records, double train_fraction, std::size_t group_count,
                              std::uint64_t seed) {
  if (!(train_fraction > 0.0 && train_fraction < 1.0)) throw InvalidInput("train fraction must lie in (0, 1)");
  if (group_count == 0) throw InvalidInput("group count must be at least 1");
  const std::size_t n = records.size();
  const auto n_train = static_cast<std::size_t>(std::floor(static_cast<double>(n) * train_fraction + 1e-9));
  if (n_train == 0 || n - n_train < group_count) {
    throw InsufficientRecords(std::to_string(n) + " records cannot give a training split and " +
                              std::to_string(group_count) + " non-empty test groups");
  }

  SeededRng rng(seed);
  for (std::size_t i = n; i > 1; --i) std::swap(records[i - 1], records[rng.index(i)]);

  GroupedCorpus out;
  auto it = std::make_move_iterator(records.begin());
  out.train.assign(it, it + static_cast<std::ptrdiff_t>(n_train));
  const std::size_t n_test = n - n_train;

  std::vector<std::size_t> sizes(group_count, (n_test + group_count - 1) / group_count);
  const std::size_t full = sizes.front() * (group_count - 1);
  if (full < n_test) {
    sizes.back() = n_test - full;
  } else {
    // Ceil-sized chunks would leave a group empty; spread the remainder instead.
    for (std::size_t g = 0; g < group_count; ++g) sizes[g] = n_test / group_count + (g < n_test % group_count ? 1 : 0);
  }

  std::size_t cursor = n_train;
  for (std::size_t g = 0; g < group_count; ++g) {
    auto first = std::make_move_iterator(records.begin() + static_cast<std::ptrdiff_t>(cursor));
    out.test_groups.emplace_back(first, first + static_cast<std::ptrdiff_t>(sizes[g]));
    cursor += sizes[g];
  }
  return out;
}

}  // namespace hnlg
