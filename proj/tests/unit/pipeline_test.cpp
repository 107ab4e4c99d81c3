#include <gtest/gtest.h>

#include "ambipun/corpus_index.hpp"
#include "ambipun/embeddings.hpp"
#include "ambipun/errors.hpp"
#include "ambipun/generation.hpp"
#include "ambipun/mock_server.hpp"
#include "ambipun/pipeline.hpp"
#include "fixtures.hpp"

namespace ambipun {
namespace {

const PunTask kTask{"sentence", "a string of words satisfying the grammatical rules of a language",
                    "the penalty meted out to one who is found guilty of a crime", "sentence"};

class PipelineTest : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    stopwords_ = new textnorm::StopwordList(textnorm::StopwordList::load(data_path("stopwords.txt")));
    lexicon_ = new textnorm::SenseCountLexicon(textnorm::SenseCountLexicon::load(data_path("sense_counts.tsv")));
    index_ = new CorpusIndex(CorpusIndex::build(data_path("toy_corpus.txt")));
    table_ = new EmbeddingTable(EmbeddingTable::load(data_path("toy_vectors.txt")));
    idf_ = new IdfTable(*index_);
  }
  static void TearDownTestSuite() {
    delete stopwords_;
    delete lexicon_;
    delete index_;
    delete table_;
    delete idf_;
  }

  PipelineResources resources() const { return {stopwords_, lexicon_, index_, table_, idf_}; }

  PipelineConfig config() const {
    PipelineConfig cfg;
    cfg.completion_url = cfg.generation_url = cfg.classifier_url = server_.url();
    cfg.seed = 42;
    return cfg;
  }

  std::string run_dump(ContextMethod m, const PipelineConfig& cfg) const {
    std::string out;
    for (const auto& r : pun_records(run_task(kTask, m, resources(), cfg))) out += r.dump() + "\n";
    return out;
  }

  mock::MockServer server_{0, 0};
  static inline textnorm::StopwordList* stopwords_ = nullptr;
  static inline textnorm::SenseCountLexicon* lexicon_ = nullptr;
  static inline CorpusIndex* index_ = nullptr;
  static inline EmbeddingTable* table_ = nullptr;
  static inline IdfTable* idf_ = nullptr;
};

TEST_F(PipelineTest, LocalRelatedWordsAreRefined) {
  const auto cfg = config();
  for (int sense : {1, 2}) {
    const auto r = related_words(kTask, sense, resources(), cfg);
    EXPECT_EQ(r.sense_index, sense);
    EXPECT_EQ(r.words.size(), 5u);
    EXPECT_EQ(textnorm::refine(r.words, *lexicon_, 1), r.words);
    for (const auto& w : r.words) {
      EXPECT_NE(w, "sentence");
      EXPECT_FALSE(stopwords_->contains(w));
    }
  }
}

TEST_F(PipelineTest, RemoteRelatedWordsUseEndpoint) {
  auto cfg = config();
  cfg.reverse_dictionary_url = server_.url();
  const auto r = related_words(kTask, 2, resources(), cfg);
  EXPECT_EQ(r.sense_index, 2);
  EXPECT_LE(r.words.size(), 5u);
  EXPECT_EQ(r.words, textnorm::refine(mock::reverse_dictionary(kTask.sense2, 5, 0), *lexicon_, 1));
}

TEST_F(PipelineTest, MissingResourcesReported) {
  PipelineResources none;
  EXPECT_THROW(related_words(kTask, 1, none, config()), ConfigError);
}

TEST_F(PipelineTest, EveryMethodRunsAndTracesProvenance) {
  const auto cfg = config();
  for (auto m : {ContextMethod::kTfIdf, ContextMethod::kWord2Vec, ContextMethod::kLlm}) {
    const auto o = run_task(kTask, m, resources(), cfg);
    EXPECT_EQ(o.kept_after_pruning, cfg.keep_fraction.ceil_times(o.generated));
    EXPECT_EQ(o.final_puns.size(), std::min<std::size_t>(o.kept_after_pruning, 30));
    const auto c1 = o.context1.tokens();
    const auto c2 = o.context2.tokens();
    for (const auto& rec : pun_records(o)) {
      const auto& prov = rec.at("provenance");
      EXPECT_EQ(prov.at("method"), std::string(to_string(m)));
      const std::string prompt = prov.at("prompt");
      ASSERT_EQ(prompt.rfind("generate sentence: ", 0), 0u);
      std::vector<std::string> kws;
      std::string rest = prompt.substr(19);
      for (std::size_t pos = 0;;) {
        const auto comma = rest.find(", ", pos);
        kws.push_back(rest.substr(pos, comma - pos));
        if (comma == std::string::npos) break;
        pos = comma + 2;
      }
      ASSERT_EQ(kws.size(), 5u);
      EXPECT_EQ(kws[4], "sentence");
      for (int i = 0; i < 2; ++i) EXPECT_NE(std::find(c1.begin(), c1.end(), kws[i]), c1.end()) << kws[i];
      for (int i = 2; i < 4; ++i) EXPECT_NE(std::find(c2.begin(), c2.end(), kws[i]), c2.end()) << kws[i];
      EXPECT_EQ(prov.at("context_words").at("sense1").size(), c1.size());
      const std::string sentence = rec.at("sentence");
      const auto toks = textnorm::tokenize(sentence);
      EXPECT_NE(std::find(toks.begin(), toks.end(), "sentence"), toks.end());
    }
  }
}

TEST_F(PipelineTest, DeterministicAcrossRunsAndConcurrency) {
  auto cfg = config();
  for (auto m : {ContextMethod::kTfIdf, ContextMethod::kWord2Vec, ContextMethod::kLlm}) {
    const auto a = run_dump(m, cfg);
    EXPECT_FALSE(a.empty());
    EXPECT_EQ(run_dump(m, cfg), a);
    auto serial = cfg;
    serial.max_in_flight = 1;
    EXPECT_EQ(run_dump(m, serial), a);
  }
  auto other = cfg;
  other.seed = 43;
  EXPECT_NE(run_dump(ContextMethod::kTfIdf, other), run_dump(ContextMethod::kTfIdf, cfg));
}

TEST_F(PipelineTest, InvalidTaskRejected) {
  EXPECT_THROW(run_task({"Two words", "a", "b", ""}, ContextMethod::kTfIdf, resources(), config()), InvalidTask);
}

}  // namespace
}  // namespace ambipun
