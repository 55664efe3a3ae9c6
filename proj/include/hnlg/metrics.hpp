#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hnlg/domain.hpp"

namespace hnlg {

/// Lowercase, split on runs of non-alphanumeric ASCII. Bytes >= 0x80 count
/// as alphanumeric so UTF-8 words stay whole.
std::vector<std::string> tokenize(std::string_view text);

/// TF-IDF weights sorted by token.
struct TermVector {
  std::vector<std::pair<std::string, double>> weights;

  double weight(std::string_view token) const noexcept;
  double norm() const noexcept;
  bool operator==(const TermVector&) const = default;
};

/// tf = count / length, idf = ln(N / df) + 1. Throws EmptyDocumentSet.
std::vector<TermVector> tfidf_vectors(const std::vector<std::vector<std::string>>& docs);

/// Cosine in [0, 1]. Throws ZeroVector.
double cosine(const TermVector& a, const TermVector& b);

/// Cosine between generated and reference with IDF taken over
/// {generated, reference} plus `background`. A zero vector yields 0 and a
/// warning.
double contextual_logic_similarity(const Document& generated, const Document& reference,
                                   std::span<const Document> background, std::vector<std::string>* warnings = nullptr);

/// Same metric for many records at once: record i is compared with
/// references[i], the background being every other reference.
std::vector<double> contextual_logic_batch(std::span<const Document> generated, std::span<const Document> references,
                                           std::vector<std::string>* warnings = nullptr);

/// Cosine of every non-benchmark document to the benchmark, IDF over the
/// group. Throws GroupTooSmall, InvalidInput for a bad index.
std::vector<double> machine_style_values(std::span<const Document> generated, std::size_t benchmark_index = 0,
                                         std::vector<std::string>* warnings = nullptr);

/// Mean of machine_style_values.
double machine_style_similarity(std::span<const Document> generated, std::size_t benchmark_index = 0);

// ---- aggregation ----------------------------------------------------------

double mean(std::span<const double> values);

/// Rounds half away from zero at `decimals` places, tolerating binary
/// representation error (0.0425 -> 0.043).
double round_half_up(double value, int decimals = 3);

struct GroupReport {
  std::size_t group_id = 0;
  double context_logic = 0.0;
  double machine_style = 0.0;
  std::vector<double> context_values;
  std::vector<double> style_values;
  std::size_t skipped = 0;
};

/// Fills the means from the per-document lists.
GroupReport make_group_report(std::size_t group_id, std::vector<double> context_values,
                              std::vector<double> style_values, std::size_t skipped = 0);

/// Group report carrying only published means (no per-document values).
GroupReport group_from_means(std::size_t group_id, double context_logic, double machine_style);

/// Maps measured averages onto the unit interval: m = style / style_scale, c = logic / logic_scale.
struct ScoreScale {
  double style = 1.0;
  double logic = 1.0;
};

struct QuadrantThresholds {
  double style = 0.15;
  double logic = 0.40;
};

struct HmcuReport {
  std::vector<GroupReport> groups;
  double avg_context_logic = 0.0;
  double avg_machine_style = 0.0;
  QuadrantScores scores = QuadrantScores::from_measured(0.0, 0.0);
  QuadrantLabel label = QuadrantLabel::HU;
};

/// M iff m >= style threshold, C iff c >= logic threshold.
QuadrantLabel classify_quadrant(const QuadrantScores& s, const QuadrantThresholds& t = {});

HmcuReport aggregate(std::vector<GroupReport> groups, const ScoreScale& scale = {},
                     const QuadrantThresholds& thresholds = {});

}  // namespace hnlg
