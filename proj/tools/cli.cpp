#include "cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "ambipun/config.hpp"
#include "ambipun/context_words.hpp"
#include "ambipun/corpus_index.hpp"
#include "ambipun/embeddings.hpp"
#include "ambipun/errors.hpp"
#include "ambipun/eval_metrics.hpp"
#include "ambipun/generation.hpp"
#include "ambipun/llm_client.hpp"
#include "ambipun/mock_server.hpp"
#include "ambipun/parallel.hpp"
#include "ambipun/pipeline.hpp"
#include "ambipun/ranking.hpp"
#include "ambipun/serialization.hpp"

#ifndef AMBIPUN_DEFAULT_DATA_DIR
#define AMBIPUN_DEFAULT_DATA_DIR "data"
#endif

namespace ambipun::cli {

namespace fs = std::filesystem;

namespace {

fs::path data_dir() {
  if (const char* env = std::getenv("AMBIPUN_DATA_DIR"); env != nullptr && *env != '\0') return env;
  return AMBIPUN_DEFAULT_DATA_DIR;
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(' ');
    if (b == std::string::npos) continue;
    out.push_back(item.substr(b, item.find_last_not_of(' ') - b + 1));
  }
  return out;
}

std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream file;
  std::istream* in = &std::cin;
  if (path != "-") {
    file.open(path);
    if (!file) throw IoError("cannot open " + path);
    in = &file;
  }
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(*in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") != std::string::npos) lines.push_back(line);
  }
  return lines;
}

// Options every stage command shares.
struct Common {
  std::string config_path;
  std::vector<std::string> overrides;
  std::optional<std::uint64_t> seed;
  std::string endpoint;
  std::string mode;
  std::string stopwords_path;
  std::string lexicon_path;

  void attach(CLI::App& app) {
    app.add_option("--config", config_path, "Flat key = value config file")->check(CLI::ExistingFile);
    app.add_option("--set", overrides, "Config override key=value (repeatable)");
    app.add_option("--seed", seed, "Random seed");
    app.add_option("--endpoint", endpoint,
                   "Base URL used for completion, generation and classification");
    app.add_option("--mode", mode, "Pun word position: begin, middle or end");
    app.add_option("--stopwords", stopwords_path, "Stopword file (one word per line)");
    app.add_option("--lexicon", lexicon_path, "Sense-count lexicon (word<TAB>count)");
  }

  PipelineConfig config() const {
    PipelineConfig cfg = config_path.empty() ? PipelineConfig{} : load_config(config_path);
    for (const auto& kv : overrides) {
      const auto eq = kv.find('=');
      if (eq == std::string::npos) throw ConfigError("--set expects key=value, got " + kv);
      apply_config_value(cfg, kv.substr(0, eq), kv.substr(eq + 1));
    }
    if (seed) cfg.seed = *seed;
    if (!endpoint.empty()) cfg.completion_url = cfg.generation_url = cfg.classifier_url = endpoint;
    if (!mode.empty()) cfg.pun_position_mode = parse_position_mode(mode);
    validate_config(cfg);
    return cfg;
  }

  textnorm::StopwordList stopwords() const {
    return textnorm::StopwordList::load(stopwords_path.empty() ? data_dir() / "stopwords.txt"
                                                               : fs::path(stopwords_path));
  }

  textnorm::SenseCountLexicon lexicon() const {
    return textnorm::SenseCountLexicon::load(lexicon_path.empty() ? data_dir() / "sense_counts.tsv"
                                                                  : fs::path(lexicon_path));
  }
};

// Loaded corpus / embedding resources for the stage commands.
struct Sources {
  std::string corpus_path;
  std::string index_path;
  std::string embeddings_path;

  void attach(CLI::App& app) {
    app.add_option("--corpus", corpus_path, "One-sentence-per-line corpus")->check(CLI::ExistingFile);
    app.add_option("--index", index_path, "Saved corpus index")->check(CLI::ExistingFile);
    app.add_option("--embeddings", embeddings_path, "word2vec text-format vectors")
        ->check(CLI::ExistingFile);
  }

  std::optional<CorpusIndex> load_index() const {
    if (!index_path.empty()) return CorpusIndex::load(index_path);
    if (!corpus_path.empty()) return CorpusIndex::build(corpus_path);
    return std::nullopt;
  }

  std::optional<EmbeddingTable> load_embeddings() const {
    if (embeddings_path.empty()) return std::nullopt;
    return EmbeddingTable::load(embeddings_path);
  }
};

struct Loaded {
  textnorm::StopwordList stopwords;
  textnorm::SenseCountLexicon lexicon;
  std::optional<CorpusIndex> index;
  std::optional<EmbeddingTable> embeddings;
  std::optional<IdfTable> idf;

  PipelineResources resources() const {
    PipelineResources r;
    r.stopwords = &stopwords;
    r.lexicon = &lexicon;
    r.index = index ? &*index : nullptr;
    r.embeddings = embeddings ? &*embeddings : nullptr;
    r.idf = idf ? &*idf : nullptr;
    return r;
  }
};

Loaded load_all(const Common& common, const Sources& sources) {
  Loaded l{common.stopwords(), common.lexicon(), sources.load_index(), sources.load_embeddings(), {}};
  if (l.index) l.idf.emplace(*l.index);
  return l;
}

PunTask make_task(const std::string& pun_word, const std::string& s1, const std::string& s2,
                  const std::string& id) {
  return validate_task(PunTask{pun_word, s1, s2, id.empty() ? pun_word : id});
}

std::vector<PunTask> load_tasks(const std::string& path) {
  std::vector<PunTask> tasks;
  for (const auto& line : read_lines(path)) {
    std::vector<std::string> f;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, '\t')) f.push_back(field);
    if (f.size() != 4) throw FormatError("task lines need 4 tab-separated fields", tasks.size() + 1, FormatError::Unit::kLine);
    if (tasks.empty() && f[0] == "task_id") continue;
    tasks.push_back(make_task(f[1], f[2], f[3], f[0]));
  }
  if (tasks.empty()) throw EmptyInput("no tasks in " + path);
  return tasks;
}

void emit(std::ostream& out, const std::string& line) {
  out << line << '\n';
  out.flush();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"ambipun: homographic pun generation from sense definitions", "ambipun"};
  app.require_subcommand(1);
  Common common;
  Sources sources;

  // index
  auto* index_cmd = app.add_subcommand("index", "Build and save a corpus index");
  std::string index_out;
  IndexLimits limits;
  index_cmd->add_option("--corpus", sources.corpus_path, "Corpus file")->required()->check(CLI::ExistingFile);
  index_cmd->add_option("--out", index_out, "Index output path")->required();
  index_cmd->add_option("--max-lines", limits.max_lines, "Stop after this many sentences");
  index_cmd->add_option("--workers", limits.workers, "Tokenization threads (0 = auto)");

  // related
  auto* related_cmd = app.add_subcommand("related", "Reverse dictionary for one definition");
  std::string definition;
  std::string pun_word;
  int sense_index = 1;
  common.attach(*related_cmd);
  sources.attach(*related_cmd);
  related_cmd->add_option("--definition", definition, "Sense definition")->required();
  related_cmd->add_option("--pun-word", pun_word, "Word to exclude from the output");
  related_cmd->add_option("--sense-index", sense_index)->check(CLI::Range(1, 2));

  // context
  auto* context_cmd = app.add_subcommand("context", "Context words for a list of related words");
  std::string method_name = "tfidf";
  std::string related_list;
  common.attach(*context_cmd);
  sources.attach(*context_cmd);
  context_cmd->add_option("--method", method_name, "tfidf, w2v or llm")
      ->check(CLI::IsMember({"tfidf", "w2v", "llm"}));
  context_cmd->add_option("--related", related_list, "Comma-separated related words")->required();
  context_cmd->add_option("--pun-word", pun_word, "Pun word to exclude");
  context_cmd->add_option("--sense-index", sense_index)->check(CLI::Range(1, 2));

  // generate
  auto* generate_cmd = app.add_subcommand("generate", "Build keyword prompts and generate candidates");
  std::string context1;
  std::string context2;
  std::string sense1 = "first sense";
  std::string sense2 = "second sense";
  common.attach(*generate_cmd);
  generate_cmd->add_option("--pun-word", pun_word)->required();
  generate_cmd->add_option("--sense1", sense1);
  generate_cmd->add_option("--sense2", sense2);
  generate_cmd->add_option("--context1", context1, "Comma-separated sense-1 context words")->required();
  generate_cmd->add_option("--context2", context2, "Comma-separated sense-2 context words")->required();

  // rank
  auto* rank_cmd = app.add_subcommand("rank", "Score candidates, drop the bottom share, sample");
  std::string candidates_path = "-";
  std::optional<std::size_t> sample_n;
  common.attach(*rank_cmd);
  rank_cmd->add_option("--candidates", candidates_path, "Candidate JSON lines ('-' = stdin)");
  rank_cmd->add_option("--sample", sample_n, "Randomly sample this many survivors");

  // pipeline
  auto* pipeline_cmd = app.add_subcommand("pipeline", "Run every stage and emit final puns as JSON lines");
  std::string tasks_path;
  int jobs = 1;
  bool with_mock = false;
  std::uint64_t mock_seed = 0;
  common.attach(*pipeline_cmd);
  sources.attach(*pipeline_cmd);
  pipeline_cmd->add_option("--pun-word", pun_word);
  pipeline_cmd->add_option("--sense1", sense1);
  pipeline_cmd->add_option("--sense2", sense2);
  pipeline_cmd->add_option("--tasks", tasks_path, "TSV of task_id, pun_word, sense1, sense2")
      ->check(CLI::ExistingFile);
  pipeline_cmd->add_option("--method", method_name, "tfidf, w2v or llm")
      ->check(CLI::IsMember({"tfidf", "w2v", "llm"}));
  pipeline_cmd->add_option("--jobs", jobs, "Tasks processed concurrently")->check(CLI::PositiveNumber);
  pipeline_cmd->add_flag("--with-mock", with_mock, "Serve all endpoints from an in-process mock");
  pipeline_cmd->add_option("--mock-seed", mock_seed, "Seed of the in-process mock");

  // eval-diversity
  auto* diversity_cmd = app.add_subcommand("eval-diversity", "Dist-1/Dist-2 and average length");
  std::string input_path;
  std::string json_field;
  diversity_cmd->add_option("--input", input_path, "Sentences, one per line, or JSON lines")->required();
  diversity_cmd->add_option("--json-field", json_field, "Read this field from JSON lines input");

  // analyze-position
  auto* position_cmd = app.add_subcommand("analyze-position", "Histogram of normalized pun positions");
  std::string dataset_path;
  std::size_t bins = 10;
  position_cmd->add_option("--dataset", dataset_path, "Pun TSV")->required()->check(CLI::ExistingFile);
  position_cmd->add_option("--bins", bins)->check(CLI::Range(2, 1000));

  // mock-serve
  auto* mock_cmd = app.add_subcommand("mock-serve", "Serve deterministic mock model endpoints");
  int port = 8765;
  std::string host = "127.0.0.1";
  std::uint64_t serve_seed = 0;
  mock_cmd->add_option("--port", port)->check(CLI::Range(0, 65535));
  mock_cmd->add_option("--host", host);
  mock_cmd->add_option("--seed", serve_seed);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (index_cmd->parsed()) {
      const auto index = CorpusIndex::build(sources.corpus_path, limits);
      index.save(index_out);
      err << "indexed " << index.total_sentences() << " sentences, " << index.vocabulary_size()
          << " distinct tokens\n";
    } else if (related_cmd->parsed()) {
      const auto cfg = common.config();
      const auto loaded = load_all(common, sources);
      const PunTask task{pun_word, definition, definition, ""};
      auto set = related_words(task, sense_index, loaded.resources(), cfg);
      emit(out, nlohmann::json(set).dump());
    } else if (context_cmd->parsed()) {
      const auto cfg = common.config();
      const auto loaded = load_all(common, sources);
      const PunTask task{pun_word, "", "", ""};
      const RelatedWordSet related{sense_index, split_list(related_list)};
      const auto set = context_words(task, related, parse_context_method(method_name),
                                     loaded.resources(), cfg);
      emit(out, nlohmann::json(set).dump());
    } else if (generate_cmd->parsed()) {
      const auto cfg = common.config();
      const auto task = make_task(pun_word, sense1, sense2, "");
      auto as_set = [](const std::string& list, int idx) {
        ContextWordSet s{idx, ContextMethod::kTfIdf, {}};
        for (auto& w : split_list(list)) s.words.push_back({w, 0.0});
        return s;
      };
      const ModelClient client(endpoint_config(cfg, cfg.generation_url));
      const auto result = generate_candidates(client, task, as_set(context1, 1), as_set(context2, 2), cfg);
      for (const auto& c : result.candidates) emit(out, nlohmann::json(c).dump());
      err << result.candidates.size() << " candidates, " << result.dropped_without_pun
          << " dropped without the pun word, " << result.duplicates << " duplicates\n";
    } else if (rank_cmd->parsed()) {
      const auto cfg = common.config();
      std::vector<Candidate> candidates;
      for (const auto& line : read_lines(candidates_path)) {
        try {
          candidates.push_back(nlohmann::json::parse(line).get<Candidate>());
        } catch (const nlohmann::json::exception& e) {
          throw ParseError(std::string("bad candidate line: ") + e.what());
        }
      }
      const ModelClient client(endpoint_config(cfg, cfg.classifier_url));
      auto kept = prune_bottom(score_candidates(client, candidates), cfg.keep_fraction);
      if (sample_n) kept = sample_final(kept, *sample_n, cfg.seed);
      for (const auto& s : kept) emit(out, nlohmann::json(s).dump());
    } else if (pipeline_cmd->parsed()) {
      auto cfg = common.config();
      std::unique_ptr<mock::MockServer> mock_server;
      if (with_mock) {
        mock_server = std::make_unique<mock::MockServer>(0, mock_seed);
        cfg.completion_url = cfg.generation_url = cfg.classifier_url = mock_server->url();
      }
      std::vector<PunTask> tasks;
      if (!tasks_path.empty()) {
        tasks = load_tasks(tasks_path);
      } else {
        if (pun_word.empty()) throw ConfigError("pipeline needs --pun-word/--sense1/--sense2 or --tasks");
        tasks.push_back(make_task(pun_word, sense1, sense2, ""));
      }
      const auto loaded = load_all(common, sources);
      const auto method = parse_context_method(method_name);
      const auto resources = loaded.resources();
      const auto outcomes = ordered_parallel_map<TaskOutcome>(
          tasks.size(), jobs, [&](std::size_t i) { return run_task(tasks[i], method, resources, cfg); });
      for (const auto& o : outcomes) {
        for (const auto& rec : pun_records(o)) emit(out, rec.dump());
      }
    } else if (diversity_cmd->parsed()) {
      std::vector<std::string> sentences;
      for (auto& line : read_lines(input_path)) {
        if (json_field.empty()) {
          sentences.push_back(std::move(line));
        } else {
          sentences.push_back(nlohmann::json::parse(line).at(json_field).get<std::string>());
        }
      }
      const auto r = eval::diversity_report(sentences);
      nlohmann::ordered_json j{{"sentences", sentences.size()},
                               {"avg_seq_len", r.avg_seq_len},
                               {"corpus_dist1", r.corpus_dist1},
                               {"corpus_dist2", r.corpus_dist2},
                               {"sent_dist1", r.sent_dist1},
                               {"sent_dist2", r.sent_dist2}};
      emit(out, j.dump());
    } else if (position_cmd->parsed()) {
      const auto ds = eval::load_pun_dataset(dataset_path);
      if (ds.skipped > 0) err << "warning: skipped " << ds.skipped << " lines without their pun word\n";
      eval::write_histogram_csv(out, eval::position_histogram(ds.records, bins));
    } else if (mock_cmd->parsed()) {
      mock::MockServer server(port, serve_seed, host);
      err << "mock endpoints listening on " << server.url() << "\n";
      server.wait();
    }
  } catch (const ConfigError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitRuntime;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitRuntime;
  }
  return kExitOk;
}

}  // namespace ambipun::cli
