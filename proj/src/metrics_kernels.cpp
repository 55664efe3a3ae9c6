#include "hnlg/metrics_kernels.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <utility>

namespace hnlg::kernels {

namespace {

struct Counts {
  std::vector<TokenId> ids;
  std::vector<std::uint32_t> counts;
  std::size_t length = 0;
};

Counts count_tokens(const std::vector<TokenId>& doc) {
  std::vector<TokenId> sorted = doc;
  std::sort(sorted.begin(), sorted.end());
  Counts c;
  c.length = doc.size();
  for (std::size_t i = 0; i < sorted.size();) {
    std::size_t j = i;
    while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
    c.ids.push_back(sorted[i]);
    c.counts.push_back(static_cast<std::uint32_t>(j - i));
    i = j;
  }
  return c;
}

template <typename DfFn>
SparseVector weigh(const Counts& c, std::size_t n_docs, DfFn df) {
  SparseVector v;
  v.ids = c.ids;
  v.weights.resize(c.ids.size());
  double sq = 0.0;
  for (std::size_t k = 0; k < c.ids.size(); ++k) {
    const double tf = static_cast<double>(c.counts[k]) / static_cast<double>(c.length);
    const double idf = std::log(static_cast<double>(n_docs) / static_cast<double>(df(c.ids[k]))) + 1.0;
    v.weights[k] = tf * idf;
    sq += v.weights[k] * v.weights[k];
  }
  v.norm = std::sqrt(sq);
  return v;
}

std::vector<std::uint32_t> document_frequency(const std::vector<Counts>& counts, std::size_t begin, std::size_t end,
                                              std::size_t vocab_size) {
  std::vector<std::uint32_t> df(vocab_size, 0);
  for (std::size_t d = begin; d < end; ++d) {
    for (TokenId id : counts[d].ids) ++df[id];
  }
  return df;
}

bool contains(const Counts& c, TokenId id) { return std::binary_search(c.ids.begin(), c.ids.end(), id); }

double contextual_pair(const Counts& gen, const Counts& ref, const std::vector<std::uint32_t>& df_ref,
                       std::size_t n_docs) {
  auto df = [&](TokenId id) { return df_ref[id] + (contains(gen, id) ? 1u : 0u); };
  const SparseVector g = weigh(gen, n_docs, df);
  const SparseVector r = weigh(ref, n_docs, df);
  return cosine_or_negative(g, r);
}

}  // namespace

InternedCorpus intern(const std::vector<std::vector<std::string>>& token_docs) {
  std::map<std::string, TokenId> ids;
  for (const auto& doc : token_docs) {
    for (const auto& t : doc) ids.emplace(t, 0);
  }
  InternedCorpus out;
  out.vocabulary.reserve(ids.size());
  TokenId next = 0;
  for (auto& [tok, id] : ids) {
    id = next++;
    out.vocabulary.push_back(tok);
  }
  out.docs.reserve(token_docs.size());
  for (const auto& doc : token_docs) {
    std::vector<TokenId> d;
    d.reserve(doc.size());
    for (const auto& t : doc) d.push_back(ids.at(t));
    out.docs.push_back(std::move(d));
  }
  return out;
}

double cosine_or_negative(const SparseVector& a, const SparseVector& b) noexcept {
  if (a.norm == 0.0 || b.norm == 0.0) return -1.0;
  double dot = 0.0;
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.ids.size() && j < b.ids.size()) {
    if (a.ids[i] < b.ids[j]) {
      ++i;
    } else if (b.ids[j] < a.ids[i]) {
      ++j;
    } else {
      dot += a.weights[i++] * b.weights[j++];
    }
  }
  return std::clamp(dot / (a.norm * b.norm), 0.0, 1.0);
}

namespace serial {

std::vector<SparseVector> tfidf(const InternedCorpus& corpus) {
  std::vector<Counts> counts;
  counts.reserve(corpus.docs.size());
  for (const auto& d : corpus.docs) counts.push_back(count_tokens(d));
  const auto df = document_frequency(counts, 0, counts.size(), corpus.vocabulary.size());
  std::vector<SparseVector> out;
  out.reserve(counts.size());
  for (const Counts& c : counts) out.push_back(weigh(c, counts.size(), [&](TokenId id) { return df[id]; }));
  return out;
}

std::vector<double> cosines_to(const std::vector<SparseVector>& vectors, std::size_t benchmark) {
  std::vector<double> out(vectors.size());
  for (std::size_t i = 0; i < vectors.size(); ++i) out[i] = cosine_or_negative(vectors[i], vectors[benchmark]);
  return out;
}

std::vector<double> contextual_logic(const InternedCorpus& corpus) {
  const std::size_t n = corpus.docs.size() / 2;
  std::vector<Counts> counts;
  counts.reserve(corpus.docs.size());
  for (const auto& d : corpus.docs) counts.push_back(count_tokens(d));
  const auto df_ref = document_frequency(counts, n, 2 * n, corpus.vocabulary.size());
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = contextual_pair(counts[i], counts[n + i], df_ref, n + 1);
  return out;
}

}  // namespace serial

namespace omp {

namespace {
std::vector<Counts> count_all(const InternedCorpus& corpus) {
  std::vector<Counts> counts(corpus.docs.size());
  const auto n = static_cast<std::ptrdiff_t>(corpus.docs.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t d = 0; d < n; ++d) counts[static_cast<std::size_t>(d)] = count_tokens(corpus.docs[static_cast<std::size_t>(d)]);
  return counts;
}
}  // namespace

std::vector<SparseVector> tfidf(const InternedCorpus& corpus) {
  const auto counts = count_all(corpus);
  const auto df = document_frequency(counts, 0, counts.size(), corpus.vocabulary.size());
  std::vector<SparseVector> out(counts.size());
  const auto n = static_cast<std::ptrdiff_t>(counts.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t d = 0; d < n; ++d) {
    out[static_cast<std::size_t>(d)] =
        weigh(counts[static_cast<std::size_t>(d)], counts.size(), [&](TokenId id) { return df[id]; });
  }
  return out;
}

std::vector<double> cosines_to(const std::vector<SparseVector>& vectors, std::size_t benchmark) {
  std::vector<double> out(vectors.size());
  const auto n = static_cast<std::ptrdiff_t>(vectors.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    out[static_cast<std::size_t>(i)] = cosine_or_negative(vectors[static_cast<std::size_t>(i)], vectors[benchmark]);
  }
  return out;
}

std::vector<double> contextual_logic(const InternedCorpus& corpus) {
  const std::size_t n = corpus.docs.size() / 2;
  const auto counts = count_all(corpus);
  const auto df_ref = document_frequency(counts, n, 2 * n, corpus.vocabulary.size());
  std::vector<double> out(n);
  const auto sn = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(dynamic, 4)
  for (std::ptrdiff_t i = 0; i < sn; ++i) {
    const auto u = static_cast<std::size_t>(i);
    out[u] = contextual_pair(counts[u], counts[n + u], df_ref, n + 1);
  }
  return out;
}

}  // namespace omp

}  // namespace hnlg::kernels
