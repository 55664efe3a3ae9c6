#pragma once

// Data-parallel kernels behind the similarity metrics. Every kernel exists
// twice: `serial` is the reference implementation kept for testing and
// benchmarking, `omp` is the OpenMP version used by the public API. Both
// evaluate the same expression per element and reduce in a fixed order, so
// their results are bitwise identical.

#include <cstdint>
#include <string>
#include <vector>

namespace hnlg::kernels {

using TokenId = std::uint32_t;

/// Sparse non-negative vector, ids strictly increasing.
struct SparseVector {
  std::vector<TokenId> ids;
  std::vector<double> weights;
  double norm = 0.0;
};

/// Documents as token-id sequences over a shared, lexically sorted vocabulary.
struct InternedCorpus {
  std::vector<std::string> vocabulary;  // sorted; id = position
  std::vector<std::vector<TokenId>> docs;
};

InternedCorpus intern(const std::vector<std::vector<std::string>>& token_docs);

/// Merge-join cosine; returns -1 when either vector has zero norm.
double cosine_or_negative(const SparseVector& a, const SparseVector& b) noexcept;

namespace serial {

/// tf = count / length, idf = ln(N / df) + 1, weight = tf * idf.
std::vector<SparseVector> tfidf(const InternedCorpus& corpus);

/// Cosine of each vector against `vectors[benchmark]` (entry for the benchmark
/// itself included); -1 marks a zero vector.
std::vector<double> cosines_to(const std::vector<SparseVector>& vectors, std::size_t benchmark);

/// For each record i: cosine of generated[i] vs reference[i] with IDF over
/// {generated[i]} plus every reference. Uses corpus docs [0, n) as generated
/// and [n, 2n) as references. -1 marks a zero vector.
std::vector<double> contextual_logic(const InternedCorpus& corpus);

}  // namespace serial

namespace omp {

std::vector<SparseVector> tfidf(const InternedCorpus& corpus);
std::vector<double> cosines_to(const std::vector<SparseVector>& vectors, std::size_t benchmark);
std::vector<double> contextual_logic(const InternedCorpus& corpus);

}  // namespace omp

}  // namespace hnlg::kernels
