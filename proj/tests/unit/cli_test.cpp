#include <sstream>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "ambipun/corpus_index.hpp"
#include "ambipun/mock_server.hpp"
#include "cli.hpp"
#include "fixtures.hpp"

namespace ambipun::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

const std::string kGrammar = "a string of words satisfying the grammatical rules of a language";
const std::string kLaw = "the penalty meted out to one who is found guilty of a crime";

std::vector<std::string> pipeline_args(const std::string& method) {
  return {"pipeline", "--pun-word", "sentence", "--sense1", kGrammar, "--sense2", kLaw,
          "--method", method, "--seed", "42", "--with-mock",
          "--corpus", data_path("toy_corpus.txt").string(),
          "--embeddings", data_path("toy_vectors.txt").string()};
}

TEST(Cli, UsageErrorsExitOne) {
  EXPECT_EQ(invoke({}).code, 1);
  EXPECT_EQ(invoke({"pipeline", "--no-such-flag"}).code, 1);
  EXPECT_EQ(invoke({"frobnicate"}).code, 1);
  EXPECT_EQ(invoke({"analyze-position", "--dataset", "/nonexistent/file.tsv"}).code, 1);
  const auto r = invoke({"pipeline", "--pun-word", "sentence", "--sense1", "a", "--sense2", "b", "--set", "bogus=1"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("bogus"), std::string::npos);
}

TEST(Cli, HelpExitsZero) {
  const auto r = invoke({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("pipeline"), std::string::npos);
}

TEST(Cli, RuntimeErrorsExitTwo) {
  TempDir dir;
  const auto bad = dir.write("bad.tsv", "p1\tonly\tthree\n");
  EXPECT_EQ(invoke({"analyze-position", "--dataset", bad.string()}).code, 2);
  const auto r = invoke({"pipeline", "--pun-word", "Bad Word", "--sense1", "a", "--sense2", "b", "--with-mock"});
  EXPECT_EQ(r.code, 2);
}

TEST(Cli, AnalyzePositionWritesCsv) {
  const auto r = invoke({"analyze-position", "--dataset", data_path("sample_puns.tsv").string(), "--bins", "10"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto lines = lines_of(r.out);
  ASSERT_EQ(lines.size(), 12u);
  EXPECT_EQ(lines[0], "bin_lo,bin_hi,count");
  EXPECT_EQ(lines[1].rfind("0.0000,0.1000,", 0), 0u);
  EXPECT_EQ(lines[11].rfind("# summary records=20", 0), 0u);
}

TEST(Cli, EvalDiversity) {
  TempDir dir;
  const auto p = dir.write("s.txt", "a b\na b\n");
  const auto r = invoke({"eval-diversity", "--input", p.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.at("corpus_dist1"), 0.5);
  EXPECT_EQ(j.at("sent_dist1"), 1.0);
  EXPECT_EQ(j.at("avg_seq_len"), 2.0);

  const auto jl = dir.write("s.jsonl", "{\"sentence\":\"a b c\"}\n");
  const auto r2 = invoke({"eval-diversity", "--input", jl.string(), "--json-field", "sentence"});
  ASSERT_EQ(r2.code, 0) << r2.err;
  EXPECT_EQ(nlohmann::json::parse(r2.out).at("avg_seq_len"), 3.0);
}

TEST(Cli, IndexRelatedAndContext) {
  TempDir dir;
  const auto idx = dir.path() / "toy.idx";
  auto r = invoke({"index", "--corpus", data_path("toy_corpus.txt").string(), "--out", idx.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(CorpusIndex::load(idx), CorpusIndex::build(data_path("toy_corpus.txt")));

  r = invoke({"related", "--definition", kGrammar, "--pun-word", "sentence", "--embeddings",
              data_path("toy_vectors.txt").string(), "--index", idx.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto related = nlohmann::json::parse(r.out);
  EXPECT_EQ(related.at("words").size(), 5u);

  std::string list;
  for (const auto& w : related.at("words")) list += (list.empty() ? "" : ",") + w.get<std::string>();
  r = invoke({"context", "--method", "tfidf", "--related", list, "--pun-word", "sentence", "--index", idx.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(nlohmann::json::parse(r.out).at("method"), "tfidf");

  r = invoke({"context", "--method", "tfidf", "--related", list});
  EXPECT_EQ(r.code, 1) << "tfidf without a corpus is a usage error";
}

TEST(Cli, GenerateAndRankAgainstMock) {
  mock::MockServer server(0, 0);
  TempDir dir;
  auto r = invoke({"generate", "--pun-word", "sentence", "--context1", "noun,verb,comma", "--context2",
                   "judge,trial,jury", "--endpoint", server.url(), "--set", "candidates_per_task=6", "--seed", "3"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto cand = lines_of(r.out);
  EXPECT_FALSE(cand.empty());
  const auto path = dir.write("c.jsonl", r.out);
  r = invoke({"rank", "--candidates", path.string(), "--endpoint", server.url()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(lines_of(r.out).size(), (2 * cand.size() + 2) / 3);
  r = invoke({"rank", "--candidates", path.string(), "--endpoint", server.url(), "--sample", "1"});
  EXPECT_EQ(lines_of(r.out).size(), 1u);
}

TEST(Cli, PipelineIsByteIdentical) {
  for (const auto* method : {"tfidf", "w2v", "llm"}) {
    const auto a = invoke(pipeline_args(method));
    ASSERT_EQ(a.code, 0) << a.err;
    const auto b = invoke(pipeline_args(method));
    EXPECT_EQ(a.out, b.out);
    for (const auto& line : lines_of(a.out)) {
      const auto j = nlohmann::json::parse(line);
      EXPECT_EQ(j.at("pun_word"), "sentence");
      EXPECT_EQ(j.at("provenance").at("method"), method);
      EXPECT_TRUE(j.at("provenance").contains("related_words"));
      EXPECT_TRUE(j.at("provenance").contains("context_words"));
    }
  }
}

TEST(Cli, PipelineTasksFileWithJobs) {
  auto args = pipeline_args("w2v");
  args.erase(args.begin() + 1, args.begin() + 7);
  args.insert(args.begin() + 1, {"--tasks", data_path("tasks.tsv").string()});
  auto serial = args;
  args.insert(args.end(), {"--jobs", "3"});
  const auto a = invoke(args);
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(invoke(serial).out, a.out);
}

TEST(Cli, ConfigFileAndOverridePrecedence) {
  TempDir dir;
  const auto conf = dir.write("c.conf", "final_sample_size = 2\ncandidates_per_task = 9\n");
  auto args = pipeline_args("tfidf");
  args.insert(args.end(), {"--config", conf.string()});
  EXPECT_EQ(lines_of(invoke(args).out).size(), 2u);
  args.insert(args.end(), {"--set", "final_sample_size=3"});
  EXPECT_EQ(lines_of(invoke(args).out).size(), 3u);
}

}  // namespace
}  // namespace ambipun::cli
