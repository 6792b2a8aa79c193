#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include <Eigen/SparseCore>

namespace seednmf {

using SparseMatrixD = Eigen::SparseMatrix<double, Eigen::RowMajor>;

/// Pre-tokenized documents. Tokenization (stemming, stopwords, ...) happens
/// upstream; a document here is just a sequence of token strings.
struct TokenizedCorpus {
  std::vector<std::vector<std::string>> docs;
  std::vector<std::string> source_ids;  // empty, or one id per document

  std::size_t size() const { return docs.size(); }
};

/// Ordered term list with a term -> column lookup. Terms are unique and
/// lexicographically sorted, so column indices are stable across runs.
struct Vocabulary {
  std::vector<std::string> terms;
  std::unordered_map<std::string, Eigen::Index> index;

  Eigen::Index size() const { return static_cast<Eigen::Index>(terms.size()); }

  /// Column of a term, or -1 when absent.
  Eigen::Index column(const std::string& term) const {
    auto it = index.find(term);
    return it == index.end() ? Eigen::Index(-1) : it->second;
  }

  static Vocabulary from_terms(std::vector<std::string> sorted_terms);
};

/// Sparse document-term matrix. Row i is a document, column j a vocabulary
/// term; every stored value is >= 0.
struct DocTermMatrix {
  SparseMatrixD values;

  Eigen::Index n_docs() const { return values.rows(); }
  Eigen::Index n_terms() const { return values.cols(); }
};

/// Seed words resolved against a vocabulary: `indices` holds the columns of
/// the seeds that exist, `missing` the ones that do not.
struct SeedSet {
  std::vector<std::string> words;          // deduplicated input list
  std::vector<Eigen::Index> indices;       // sorted, unique, valid columns
  std::vector<std::string> missing;
};

/// Documents whose seed columns are all zero.
struct SeedlessDocs {
  std::vector<Eigen::Index> indices;  // sorted
};

/// Keeps terms whose document-frequency fraction lies in [min_df, max_df];
/// term order is lexicographic. Throws std::invalid_argument on a bad range
/// and std::runtime_error when nothing survives the filter.
Vocabulary build_vocabulary(const TokenizedCorpus& corpus, double min_df, double max_df);

/// V_ij = tf(i,j) * (ln((1+M)/(1+df_j)) + 1), rows L2-normalized.
/// Documents with no in-vocabulary tokens stay in the matrix as zero rows;
/// their indices are appended to `empty_docs` when given.
DocTermMatrix build_tfidf(const TokenizedCorpus& corpus, const Vocabulary& vocab,
                          std::vector<Eigen::Index>* empty_docs = nullptr);

/// Raw occurrence counts.
DocTermMatrix build_count_matrix(const TokenizedCorpus& corpus, const Vocabulary& vocab);

/// Duplicates are collapsed; throws when the seed list is empty or no seed
/// appears in the vocabulary.
SeedSet resolve_seeds(const std::vector<std::string>& seed_words, const Vocabulary& vocab);

/// The documents i with sum_{j in SI} V_ij == 0 (exact).
SeedlessDocs find_seedless_docs(const DocTermMatrix& matrix, const SeedSet& seeds);

}  // namespace seednmf
