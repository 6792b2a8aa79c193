#include "seednmf/corpus.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace seednmf {

Vocabulary Vocabulary::from_terms(std::vector<std::string> sorted_terms) {
  Vocabulary vocab;
  vocab.terms = std::move(sorted_terms);
  vocab.index.reserve(vocab.terms.size());
  for (std::size_t j = 0; j < vocab.terms.size(); ++j) {
    auto [it, inserted] = vocab.index.emplace(vocab.terms[j], static_cast<Eigen::Index>(j));
    if (!inserted) throw std::invalid_argument("duplicate term in vocabulary: " + vocab.terms[j]);
  }
  return vocab;
}

namespace {

// term -> number of documents containing it
std::unordered_map<std::string, std::size_t> document_frequencies(const TokenizedCorpus& corpus) {
  std::unordered_map<std::string, std::size_t> df;
  std::unordered_set<std::string_view> seen;
  for (const auto& doc : corpus.docs) {
    seen.clear();
    for (const auto& tok : doc) {
      if (seen.insert(tok).second) ++df[tok];
    }
  }
  return df;
}

// per-document counts restricted to the vocabulary, columns sorted
std::vector<std::pair<Eigen::Index, double>> doc_counts(const std::vector<std::string>& doc,
                                                        const Vocabulary& vocab) {
  std::unordered_map<Eigen::Index, double> counts;
  for (const auto& tok : doc) {
    const Eigen::Index j = vocab.column(tok);
    if (j >= 0) counts[j] += 1.0;
  }
  std::vector<std::pair<Eigen::Index, double>> sorted(counts.begin(), counts.end());
  std::sort(sorted.begin(), sorted.end());
  return sorted;
}

}  // namespace

Vocabulary build_vocabulary(const TokenizedCorpus& corpus, double min_df, double max_df) {
  if (min_df > max_df) throw std::invalid_argument("min_df must not exceed max_df");
  if (min_df < 0.0 || max_df > 1.0) throw std::invalid_argument("df bounds must lie in [0, 1]");

  const double n_docs = static_cast<double>(corpus.size());
  std::vector<std::string> kept;
  if (n_docs > 0) {
    const auto df = document_frequencies(corpus);
    kept.reserve(df.size());
    for (const auto& [term, count] : df) {
      const double frac = static_cast<double>(count) / n_docs;
      if (frac >= min_df && frac <= max_df) kept.push_back(term);
    }
  }
  if (kept.empty()) throw std::runtime_error("vocabulary empty after document-frequency filtering");
  std::sort(kept.begin(), kept.end());
  return Vocabulary::from_terms(std::move(kept));
}

DocTermMatrix build_tfidf(const TokenizedCorpus& corpus, const Vocabulary& vocab,
                          std::vector<Eigen::Index>* empty_docs) {
  if (vocab.size() == 0) throw std::invalid_argument("vocabulary is empty");
  const Eigen::Index n_docs = static_cast<Eigen::Index>(corpus.size());
  const Eigen::Index n_terms = vocab.size();

  // document frequencies of vocabulary terms only
  std::vector<std::size_t> df(static_cast<std::size_t>(n_terms), 0);
  for (const auto& doc : corpus.docs) {
    std::vector<Eigen::Index> seen;
    for (const auto& tok : doc) {
      const Eigen::Index j = vocab.column(tok);
      if (j >= 0 && std::find(seen.begin(), seen.end(), j) == seen.end()) {
        seen.push_back(j);
        ++df[static_cast<std::size_t>(j)];
      }
    }
  }
  std::vector<double> idf(static_cast<std::size_t>(n_terms));
  for (std::size_t j = 0; j < idf.size(); ++j) {
    idf[j] = std::log((1.0 + static_cast<double>(n_docs)) / (1.0 + static_cast<double>(df[j]))) + 1.0;
  }

  std::vector<Eigen::Triplet<double>> triplets;
  for (Eigen::Index i = 0; i < n_docs; ++i) {
    auto counts = doc_counts(corpus.docs[static_cast<std::size_t>(i)], vocab);
    if (counts.empty()) {
      if (empty_docs) empty_docs->push_back(i);
      continue;
    }
    double norm_sq = 0.0;
    for (auto& [j, tf] : counts) {
      tf *= idf[static_cast<std::size_t>(j)];
      norm_sq += tf * tf;
    }
    const double norm = std::sqrt(norm_sq);
    for (const auto& [j, v] : counts) triplets.emplace_back(i, j, v / norm);
  }

  DocTermMatrix out;
  out.values.resize(n_docs, n_terms);
  out.values.setFromTriplets(triplets.begin(), triplets.end());
  return out;
}

DocTermMatrix build_count_matrix(const TokenizedCorpus& corpus, const Vocabulary& vocab) {
  if (vocab.size() == 0) throw std::invalid_argument("vocabulary is empty");
  const Eigen::Index n_docs = static_cast<Eigen::Index>(corpus.size());

  std::vector<Eigen::Triplet<double>> triplets;
  for (Eigen::Index i = 0; i < n_docs; ++i) {
    for (const auto& [j, count] : doc_counts(corpus.docs[static_cast<std::size_t>(i)], vocab)) {
      triplets.emplace_back(i, j, count);
    }
  }

  DocTermMatrix out;
  out.values.resize(n_docs, vocab.size());
  out.values.setFromTriplets(triplets.begin(), triplets.end());
  return out;
}

SeedSet resolve_seeds(const std::vector<std::string>& seed_words, const Vocabulary& vocab) {
  if (seed_words.empty()) throw std::invalid_argument("seed word list is empty");

  SeedSet out;
  for (const auto& w : seed_words) {
    if (std::find(out.words.begin(), out.words.end(), w) != out.words.end()) continue;
    out.words.push_back(w);
    const Eigen::Index j = vocab.column(w);
    if (j >= 0) {
      out.indices.push_back(j);
    } else {
      out.missing.push_back(w);
    }
  }
  std::sort(out.indices.begin(), out.indices.end());
  if (out.indices.empty()) {
    throw std::runtime_error("none of the seed words appear in the vocabulary");
  }
  return out;
}

SeedlessDocs find_seedless_docs(const DocTermMatrix& matrix, const SeedSet& seeds) {
  for (const Eigen::Index j : seeds.indices) {
    if (j < 0 || j >= matrix.n_terms()) throw std::invalid_argument("seed index out of range");
  }
  std::vector<bool> is_seed(static_cast<std::size_t>(matrix.n_terms()), false);
  for (const Eigen::Index j : seeds.indices) is_seed[static_cast<std::size_t>(j)] = true;

  SeedlessDocs out;
  for (Eigen::Index i = 0; i < matrix.n_docs(); ++i) {
    double seed_mass = 0.0;
    for (SparseMatrixD::InnerIterator it(matrix.values, i); it; ++it) {
      if (is_seed[static_cast<std::size_t>(it.col())]) seed_mass += it.value();
    }
    if (seed_mass == 0.0) out.indices.push_back(i);
  }
  return out;
}

}  // namespace seednmf
