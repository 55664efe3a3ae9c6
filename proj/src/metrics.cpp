#include "hnlg/metrics.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

#include "hnlg/error.hpp"
#include "hnlg/metrics_kernels.hpp"

namespace hnlg {

std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    const auto u = static_cast<unsigned char>(c);
    if (u >= 0x80 || std::isalnum(u)) {
      cur += static_cast<char>(std::tolower(u));
    } else if (!cur.empty()) {
      out.push_back(std::move(cur));
      cur.clear();
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

double TermVector::weight(std::string_view token) const noexcept {
  auto it = std::lower_bound(weights.begin(), weights.end(), token,
                             [](const auto& entry, std::string_view t) { return entry.first < t; });
  return it != weights.end() && it->first == token ? it->second : 0.0;
}

double TermVector::norm() const noexcept {
  double sq = 0.0;
  for (const auto& [tok, w] : weights) sq += w * w;
  return std::sqrt(sq);
}

std::vector<TermVector> tfidf_vectors(const std::vector<std::vector<std::string>>& docs) {
  if (docs.empty()) throw EmptyDocumentSet();
  const auto corpus = kernels::intern(docs);
  const auto sparse = kernels::omp::tfidf(corpus);
  std::vector<TermVector> out(sparse.size());
  for (std::size_t d = 0; d < sparse.size(); ++d) {
    out[d].weights.reserve(sparse[d].ids.size());
    for (std::size_t k = 0; k < sparse[d].ids.size(); ++k) {
      out[d].weights.emplace_back(corpus.vocabulary[sparse[d].ids[k]], sparse[d].weights[k]);
    }
  }
  return out;
}

double cosine(const TermVector& a, const TermVector& b) {
  const double na = a.norm();
  const double nb = b.norm();
  if (na == 0.0 || nb == 0.0) throw ZeroVector();
  double dot = 0.0;
  auto i = a.weights.begin();
  auto j = b.weights.begin();
  while (i != a.weights.end() && j != b.weights.end()) {
    if (i->first < j->first) {
      ++i;
    } else if (j->first < i->first) {
      ++j;
    } else {
      dot += (i++)->second * (j++)->second;
    }
  }
  return std::clamp(dot / (na * nb), 0.0, 1.0);
}

double contextual_logic_similarity(const Document& generated, const Document& reference,
                                   std::span<const Document> background, std::vector<std::string>* warnings) {
  if (generated.sentences.empty() || reference.sentences.empty()) {
    throw InvalidInput("contextual logic similarity needs non-empty documents");
  }
  std::vector<std::vector<std::string>> docs;
  docs.reserve(background.size() + 2);
  docs.push_back(tokenize(generated.text()));
  docs.push_back(tokenize(reference.text()));
  for (const Document& d : background) docs.push_back(tokenize(d.text()));
  const auto vectors = tfidf_vectors(docs);
  try {
    return cosine(vectors[0], vectors[1]);
  } catch (const ZeroVector&) {
    if (warnings) warnings->push_back("zero term vector in contextual logic similarity; scored 0");
    return 0.0;
  }
}

std::vector<double> contextual_logic_batch(std::span<const Document> generated, std::span<const Document> references,
                                           std::vector<std::string>* warnings) {
  if (generated.size() != references.size()) throw InvalidInput("generated and reference counts differ");
  if (generated.empty()) throw EmptyDocumentSet();
  std::vector<std::vector<std::string>> docs;
  docs.reserve(2 * generated.size());
  for (const Document& d : generated) docs.push_back(tokenize(d.text()));
  for (const Document& d : references) docs.push_back(tokenize(d.text()));
  auto values = kernels::omp::contextual_logic(kernels::intern(docs));
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] < 0.0) {
      values[i] = 0.0;
      if (warnings) warnings->push_back("zero term vector for record " + std::to_string(i) + "; scored 0");
    }
  }
  return values;
}

std::vector<double> machine_style_values(std::span<const Document> generated, std::size_t benchmark_index,
                                         std::vector<std::string>* warnings) {
  if (generated.size() < 2) throw GroupTooSmall(generated.size());
  if (benchmark_index >= generated.size()) throw InvalidInput("benchmark index out of range");
  std::vector<std::vector<std::string>> docs;
  docs.reserve(generated.size());
  for (const Document& d : generated) docs.push_back(tokenize(d.text()));
  const auto vectors = kernels::omp::tfidf(kernels::intern(docs));
  const auto all = kernels::omp::cosines_to(vectors, benchmark_index);
  std::vector<double> out;
  out.reserve(all.size() - 1);
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (i == benchmark_index) continue;
    if (all[i] < 0.0) {
      if (warnings) warnings->push_back("zero term vector for document " + std::to_string(i) + "; scored 0");
      out.push_back(0.0);
    } else {
      out.push_back(all[i]);
    }
  }
  return out;
}

double machine_style_similarity(std::span<const Document> generated, std::size_t benchmark_index) {
  const auto values = machine_style_values(generated, benchmark_index);
  return mean(values);
}

double mean(std::span<const double> values) {
  if (values.empty()) return 0.0;
  double sum = 0.0;
  for (double v : values) sum += v;
  return sum / static_cast<double>(values.size());
}

double round_half_up(double value, int decimals) {
  const double scale = std::pow(10.0, decimals);
  const double magnitude = std::floor(std::abs(value) * scale + 0.5 + 1e-9) / scale;
  return std::copysign(magnitude, value);
}

GroupReport make_group_report(std::size_t group_id, std::vector<double> context_values,
                              std::vector<double> style_values, std::size_t skipped) {
  GroupReport g;
  g.group_id = group_id;
  g.context_logic = mean(context_values);
  g.machine_style = mean(style_values);
  g.context_values = std::move(context_values);
  g.style_values = std::move(style_values);
  g.skipped = skipped;
  return g;
}

GroupReport group_from_means(std::size_t group_id, double context_logic, double machine_style) {
  GroupReport g;
  g.group_id = group_id;
  g.context_logic = context_logic;
  g.machine_style = machine_style;
  return g;
}

QuadrantLabel classify_quadrant(const QuadrantScores& s, const QuadrantThresholds& t) {
  if (!(t.style > 0.0 && t.style < 1.0 && t.logic > 0.0 && t.logic < 1.0)) {
    throw InvalidInput("quadrant thresholds must lie in (0, 1)");
  }
  const bool machine = s.m() >= t.style;
  const bool controllable = s.c() >= t.logic;
  if (machine) return controllable ? QuadrantLabel::MC : QuadrantLabel::MU;
  return controllable ? QuadrantLabel::HC : QuadrantLabel::HU;
}

HmcuReport aggregate(std::vector<GroupReport> groups, const ScoreScale& scale, const QuadrantThresholds& thresholds) {
  if (groups.empty()) throw InvalidInput("aggregate needs at least one group");
  if (!(scale.style > 0.0 && scale.logic > 0.0)) throw InvalidInput("score scales must be positive");
  std::vector<double> logic;
  std::vector<double> style;
  for (const GroupReport& g : groups) {
    logic.push_back(g.context_logic);
    style.push_back(g.machine_style);
  }
  HmcuReport r;
  r.groups = std::move(groups);
  r.avg_context_logic = mean(logic);
  r.avg_machine_style = mean(style);
  r.scores = QuadrantScores::from_measured(std::clamp(r.avg_machine_style / scale.style, 0.0, 1.0),
                                           std::clamp(r.avg_context_logic / scale.logic, 0.0, 1.0));
  r.label = classify_quadrant(r.scores, thresholds);
  return r;
}

}  // namespace hnlg
