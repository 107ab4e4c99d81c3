#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "ambipun/corpus_index.hpp"
#include "ambipun/embeddings.hpp"
#include "ambipun/errors.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

namespace ambipun {
namespace {

using Rows = std::vector<std::pair<std::string, std::vector<double>>>;

std::vector<std::string> words_of(const std::vector<Neighbor>& ns) {
  std::vector<std::string> out;
  for (const auto& n : ns) out.push_back(n.word);
  return out;
}

TEST(LoadEmbeddings, ValidFile) {
  const auto t = EmbeddingTable::parse("3 2\na 1 0\nb 0 1\nc 0.5 -2.25\n");
  EXPECT_EQ(t.size(), 3u);
  EXPECT_EQ(t.dim(), 2u);
  EXPECT_EQ(t.vector("c")[1], -2.25);
}

TEST(LoadEmbeddings, ShortRowIsDimensionMismatch) {
  try {
    EmbeddingTable::parse("2 2\na 1 0\nb 1\n");
    FAIL();
  } catch (const DimensionMismatch& e) {
    EXPECT_EQ(e.position(), 3u);
  }
  EXPECT_THROW(EmbeddingTable::parse("1 2\na 1 2 3\n"), DimensionMismatch);
}

TEST(LoadEmbeddings, RowCountMismatch) {
  EXPECT_THROW(EmbeddingTable::parse("2 2\na 1 0\nb 0 1\nc 1 1\n"), FormatError);
  EXPECT_THROW(EmbeddingTable::parse("3 2\na 1 0\nb 0 1\n"), FormatError);
  EXPECT_THROW(EmbeddingTable::parse(""), FormatError);
  EXPECT_THROW(EmbeddingTable::parse("x 2\n"), FormatError);
  EXPECT_THROW(EmbeddingTable::parse("1 2\na 1 zz\n"), FormatError);
}

TEST(LoadEmbeddings, DuplicatesLastWins) {
  const auto t = EmbeddingTable::parse("3 1\na 1\nb 2\na 3\n");
  EXPECT_EQ(t.size(), 2u);
  EXPECT_EQ(t.duplicate_count(), 1u);
  EXPECT_EQ(t.vector("a")[0], 3.0);
}

TEST(LoadEmbeddings, BundledVectors) {
  const auto t = EmbeddingTable::load(data_path("toy_vectors.txt"));
  EXPECT_GT(t.size(), 100u);
  EXPECT_EQ(t.dim(), 16u);
  TempDir dir;
  EXPECT_THROW(EmbeddingTable::load(dir.path() / "none.txt"), IoError);
}

TEST(Cosine, Examples) {
  const std::vector<double> v{0.3, -1.7, 2.0};
  EXPECT_NEAR(cosine(v, v), 1.0, 1e-15);
  EXPECT_EQ(cosine(std::vector<double>{1, 0}, std::vector<double>{0, 1}), 0.0);
  EXPECT_NEAR(cosine(std::vector<double>{1, 1}, std::vector<double>{1, 0}), 1.0 / std::sqrt(2.0), 1e-9);
  EXPECT_NEAR(cosine(std::vector<double>{1, 1}, std::vector<double>{1, 0}), 0.70710678, 1e-8);
  EXPECT_THROW(cosine(std::vector<double>{0, 0}, std::vector<double>{1, 0}), ZeroVector);
  EXPECT_THROW(cosine(std::vector<double>{1}, std::vector<double>{1, 0}), PreconditionError);
}

TEST(NearestNeighbors, Examples) {
  const auto t = EmbeddingTable::from_rows(2, Rows{{"w1", {1, 0}}, {"w2", {2, 0}}, {"w3", {0, 1}}});
  EXPECT_TRUE(nearest_neighbors(t, "w1", 0).empty());
  EXPECT_EQ(words_of(nearest_neighbors(t, "w1", 2)), (std::vector<std::string>{"w2", "w3"}));
  EXPECT_EQ(words_of(nearest_neighbors(t, "w1", 5, {"w2"})), (std::vector<std::string>{"w3"}));
  EXPECT_THROW(nearest_neighbors(t, "nope", 1), UnknownWord);
}

TEST(NearestNeighbors, MatchesBruteForce) {
  std::mt19937_64 rng(101);
  for (int iter = 0; iter < 40; ++iter) {
    const auto vocab = 2 + rng() % 200;
    const auto dim = 1 + rng() % 16;
    const auto rows = oracle::random_table(rng, vocab, dim, 1 + static_cast<int>(rng() % 3));
    const auto table = EmbeddingTable::from_rows(dim, rows);
    for (int q = 0; q < 5; ++q) {
      const auto& [word, vec] = rows[rng() % rows.size()];
      if (oracle::dot(vec, vec) == 0.0) continue;
      const std::size_t k = rng() % (vocab + 2);
      const auto got = nearest_neighbors(table, word, k);
      const auto want = oracle::cosine_rank(rows, vec, k, [&](const std::string& w) { return w != word; });
      ASSERT_EQ(got.size(), want.size());
      for (std::size_t i = 0; i < got.size(); ++i) {
        EXPECT_EQ(got[i].word, want[i].first);
        EXPECT_EQ(got[i].cosine, want[i].second);
        if (i > 0) EXPECT_GE(got[i - 1].cosine, got[i].cosine);
        EXPECT_NE(got[i].word, word);
      }
    }
  }
}

TEST(NearestNeighbors, PositiveScalingKeepsRanking) {
  std::mt19937_64 rng(102);
  const auto rows = oracle::random_table(rng, 300, 8, 2);
  const auto table = EmbeddingTable::from_rows(8, rows);
  for (double factor : {2.0, 0.25, 1024.0}) {
    const auto scaled = table.scaled(factor);
    for (int q = 0; q < 20; ++q) {
      const auto& word = rows[rng() % rows.size()].first;
      try {
        EXPECT_EQ(words_of(nearest_neighbors(scaled, word, 25)), words_of(nearest_neighbors(table, word, 25)));
      } catch (const ZeroVector&) {
      }
    }
  }
}

TEST(EmbedDefinition, Examples) {
  const auto t = EmbeddingTable::from_rows(
      3, Rows{{"syntax", {0.1, 0.7, -0.3}}, {"noun", {1, 2, 3}}, {"verb", {3, 2, 1}}, {"the", {9, 9, 9}}});
  const textnorm::StopwordList stop(std::vector<std::string>{"the", "of"});
  const IdfTable uniform;
  const auto one = embed_definition(t, "Syntax", stop, uniform);
  const auto want = t.vector("syntax");
  EXPECT_EQ(one, std::vector<double>(want.begin(), want.end()));

  EXPECT_THROW(embed_definition(t, "the of the", stop, uniform), NoContentWords);
  EXPECT_THROW(embed_definition(t, "unknown words only", stop, uniform), NoContentWords);

  const auto mean = embed_definition(t, "the noun of the verb", stop, uniform);
  ASSERT_EQ(mean.size(), 3u);
  for (std::size_t d = 0; d < 3; ++d) EXPECT_NEAR(mean[d], 2.0, 1e-12);
}

TEST(EmbedDefinition, IdfWeights) {
  const auto idx = CorpusIndex::from_sentences({"common rare", "common", "common"});
  const IdfTable idf(idx);
  const auto t = EmbeddingTable::from_rows(2, Rows{{"common", {1, 0}}, {"rare", {0, 1}}});
  const auto v = embed_definition(t, "common rare", {}, idf);
  const double wc = std::log(4.0 / 4.0) + 1.0;
  const double wr = std::log(4.0 / 2.0) + 1.0;
  EXPECT_NEAR(v[0], wc / (wc + wr), 1e-12);
  EXPECT_NEAR(v[1], wr / (wc + wr), 1e-12);
}

TEST(ReverseDictionary, ColinearMonosemousWordRanksFirst) {
  const auto t = EmbeddingTable::from_rows(
      3, Rows{{"grammar", {1, 1, 0}},
              {"rules", {1, -1, 0}},
              {"syntax", {2, 0, 0}},
              {"bank", {1, 0, 0}},
              {"river", {0, 0, 1}},
              {"noise", {1, 1, 1}}});
  const textnorm::SenseCountLexicon lex({{"syntax", 1}, {"bank", 10}});
  const auto r = reverse_dictionary(t, "grammar rules", lex, {}, {}, {});
  ASSERT_FALSE(r.words.empty());
  EXPECT_EQ(r.words[0], "syntax");
  EXPECT_EQ(std::count(r.words.begin(), r.words.end(), "bank"), 0);
  EXPECT_EQ(r.words.size(), 5u);
}

TEST(ReverseDictionary, SmallVocabularyNotPadded) {
  const auto t = EmbeddingTable::from_rows(2, Rows{{"a", {1, 0}}, {"b", {0, 1}}, {"c", {1, 1}}});
  const auto r = reverse_dictionary(t, "a", {}, {}, {}, {});
  EXPECT_EQ(r.words.size(), 3u);
  ReverseDictionaryOptions opt;
  opt.exclude = {"a"};
  opt.sense_index = 2;
  const auto r2 = reverse_dictionary(t, "a", {}, {}, {}, opt);
  EXPECT_EQ(r2.sense_index, 2);
  EXPECT_EQ(r2.words, (std::vector<std::string>{"c", "b"}));
}

std::vector<double> oracle_embed(const Rows& rows, const std::vector<std::string>& tokens,
                                 const IdfTable& idf) {
  std::vector<std::pair<std::vector<double>, double>> parts;
  double total = 0;
  for (const auto& t : tokens) {
    for (const auto& [w, v] : rows) {
      if (w == t) {
        parts.emplace_back(v, idf(t));
        total += idf(t);
      }
    }
  }
  std::vector<double> out(rows.front().second.size(), 0.0);
  for (const auto& [v, w] : parts) {
    for (std::size_t d = 0; d < out.size(); ++d) out[d] += (w / total) * v[d];
  }
  return out;
}

TEST(ReverseDictionary, MatchesBruteForce) {
  std::mt19937_64 rng(103);
  for (int iter = 0; iter < 30; ++iter) {
    const auto vocab = 3 + rng() % 150;
    const auto dim = 1 + rng() % 16;
    const auto rows = oracle::random_table(rng, vocab, dim);
    const auto table = EmbeddingTable::from_rows(dim, rows);
    std::unordered_map<std::string, int> senses;
    for (const auto& [w, v] : rows) senses[w] = 1 + static_cast<int>(rng() % 3);
    const textnorm::SenseCountLexicon lex(senses);
    std::vector<std::string> def_words;
    std::string definition;
    for (int i = 0; i < 1 + static_cast<int>(rng() % 4); ++i) {
      def_words.push_back(rows[rng() % rows.size()].first);
      definition += def_words.back() + " ";
    }
    const auto idx = CorpusIndex::from_sentences(oracle::random_sentences(rng, 20, 10));
    const IdfTable idf(idx);
    const auto query = oracle_embed(rows, def_words, idf);
    if (oracle::dot(query, query) == 0.0) continue;
    ReverseDictionaryOptions opt;
    opt.k = 1 + rng() % 8;
    opt.sense_count_threshold = 1 + static_cast<int>(rng() % 2);
    opt.exclude = {def_words.front()};
    const auto got = reverse_dictionary(table, definition, lex, {}, idf, opt);
    const auto want = oracle::cosine_rank(rows, query, opt.k, [&](const std::string& w) {
      return w != def_words.front() && senses.at(w) <= opt.sense_count_threshold;
    });
    ASSERT_EQ(got.words.size(), want.size());
    for (std::size_t i = 0; i < want.size(); ++i) EXPECT_EQ(got.words[i], want[i].first);
    EXPECT_EQ(textnorm::refine(got.words, lex, opt.sense_count_threshold), got.words);
  }
}

}  // namespace
}  // namespace ambipun
