#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "ambipun/corpus_index.hpp"
#include "ambipun/textnorm.hpp"
#include "ambipun/types.hpp"

namespace ambipun {

// Dense word vectors stored row-major with precomputed norms.
class EmbeddingTable {
 public:
  EmbeddingTable() = default;

  // Later duplicates replace earlier rows; each replacement is counted.
  static EmbeddingTable from_rows(std::size_t dim,
                                  std::vector<std::pair<std::string, std::vector<double>>> rows);

  // word2vec text format: "vocab_size dim" header, then "word v1 ... v_dim".
  // Throws IoError, FormatError(line), DimensionMismatch(line).
  static EmbeddingTable load(const std::filesystem::path& path);
  static EmbeddingTable parse(std::string_view text);

  std::size_t dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return words_.size(); }
  std::size_t duplicate_count() const noexcept { return duplicates_; }

  bool contains(std::string_view word) const;
  std::span<const double> vector(std::string_view word) const;  // throws UnknownWord
  std::span<const double> row(std::size_t i) const { return {data_.data() + i * dim_, dim_}; }
  double norm(std::size_t i) const { return norms_[i]; }
  const std::string& word(std::size_t i) const { return words_[i]; }
  const std::vector<std::string>& words() const noexcept { return words_; }

  // Multiplies every coordinate by `factor`.
  EmbeddingTable scaled(double factor) const;

 private:
  std::size_t dim_ = 0;
  std::vector<std::string> words_;
  std::vector<double> data_;
  std::vector<double> norms_;
  std::unordered_map<std::string, std::size_t> lookup_;
  std::size_t duplicates_ = 0;
};

// dot(a, b) / (|a| |b|). Throws ZeroVector or PreconditionError on a size mismatch.
double cosine(std::span<const double> a, std::span<const double> b);

struct Neighbor {
  std::string word;
  double cosine = 0.0;

  bool operator==(const Neighbor&) const = default;
};

// Exhaustive top-k by cosine, ties broken by word. The query word and
// `exclude` are never returned; zero rows are skipped.
std::vector<Neighbor> nearest_neighbors(const EmbeddingTable& table, std::string_view word,
                                        std::size_t k,
                                        const std::unordered_set<std::string>& exclude = {});

// Same ranking for an arbitrary query vector, keeping only rows accepted
// by `keep`.
template <typename Pred>
std::vector<Neighbor> rank_by_cosine(const EmbeddingTable& table, std::span<const double> query,
                                     std::size_t k, Pred keep);

// IDF-weighted mean of the vectors of the definition's non-stopword,
// in-vocabulary tokens. Throws NoContentWords.
std::vector<double> embed_definition(const EmbeddingTable& table, std::string_view definition,
                                     const textnorm::StopwordList& stopwords, const IdfTable& idf);

struct ReverseDictionaryOptions {
  std::size_t k = 5;
  int sense_index = 1;
  int sense_count_threshold = 1;
  // Typically the pun word.
  std::unordered_set<std::string> exclude;
};

// Local reverse dictionary: vocabulary ranked by cosine to the definition
// embedding, filtered by refine and the stopword list.
RelatedWordSet reverse_dictionary(const EmbeddingTable& table, std::string_view definition,
                                  const textnorm::SenseCountLexicon& lexicon,
                                  const textnorm::StopwordList& stopwords, const IdfTable& idf,
                                  const ReverseDictionaryOptions& options);

}  // namespace ambipun

#include "ambipun/embeddings_inl.hpp"
