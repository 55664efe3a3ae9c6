#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "hnlg/domain.hpp"
#include "json.hpp"

namespace hnlg {

/// One reference article paired with its structured events.
struct CorpusRecord {
  std::string id;
  std::string reference_text;
  EventSequence events;
  std::vector<std::string> keywords;

  Document reference_document() const;
  bool operator==(const CorpusRecord&) const = default;
};

/// One keyword per event: the first capitalized word of the subject (or the
/// object when there is no subject), else its last word.
std::vector<std::string> default_keywords(const EventSequence& seq);

/// Ids may only use [A-Za-z0-9._-] because they name files in persisted runs.
bool is_valid_record_id(std::string_view id) noexcept;

nlohmann::ordered_json to_json(const CorpusRecord& r);
/// Throws InvalidInput describing the first problem.
CorpusRecord record_from_json(const nlohmann::json& j);

/// JSON Lines; blank lines are ignored. Throws MalformedRecord(line, reason).
std::vector<CorpusRecord> parse_corpus(std::string_view jsonl);
/// Throws FileNotFound or MalformedRecord.
std::vector<CorpusRecord> load_corpus(const std::filesystem::path& path);
void write_corpus(const std::filesystem::path& path, const std::vector<CorpusRecord>& records);

struct GroupedCorpus {
  std::vector<CorpusRecord> train;
  std::vector<std::vector<CorpusRecord>> test_groups;

  std::size_t test_size() const noexcept;
};

/// Seeded shuffle, then the first floor(N * train_fraction) records train and
/// the rest are cut into `group_count` contiguous groups of ceil(test / G)
/// (the last may be short). Throws InsufficientRecords.
GroupedCorpus split_and_group(std::vector<CorpusRecord> records, double train_fraction, std::size_t group_count,
                              std::uint64_t seed);

}  // namespace hnlg
