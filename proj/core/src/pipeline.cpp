#include "ambipun/pipeline.hpp"

#include <algorithm>

#include "ambipun/context_words.hpp"
#include "ambipun/errors.hpp"
#include "ambipun/generation.hpp"
#include "ambipun/llm_client.hpp"
#include "ambipun/ranking.hpp"
#include "ambipun/rng.hpp"

namespace ambipun {

namespace {

template <typename T>
const T& require(const T* p, const char* what) {
  if (p == nullptr) throw ConfigError(std::string("this step needs ") + what);
  return *p;
}

nlohmann::ordered_json context_json(const ContextWordSet& set) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& w : set.words) arr.push_back({{"word", w.word}, {"score", w.score}});
  return arr;
}

}  // namespace

RelatedWordSet related_words(const PunTask& task, int sense_index, const PipelineResources& res,
                             const PipelineConfig& cfg) {
  const auto& definition = sense_index == 1 ? task.sense1 : task.sense2;
  const auto& lexicon = require(res.lexicon, "a sense-count lexicon");
  const auto& stopwords = require(res.stopwords, "a stopword list");
  const auto k = static_cast<std::size_t>(cfg.related_word_count);

  if (!cfg.reverse_dictionary_url.empty()) {
    const ModelClient client(endpoint_config(cfg, cfg.reverse_dictionary_url));
    std::vector<std::string> lowered;
    for (const auto& w : client.reverse_dictionary(definition, cfg.related_word_count)) {
      auto toks = textnorm::tokenize(w);
      if (toks.size() == 1 && toks.front() != task.pun_word && !stopwords.contains(toks.front())) {
        lowered.push_back(std::move(toks.front()));
      }
    }
    auto words = textnorm::refine(lowered, lexicon, cfg.sense_count_threshold);
    if (words.size() > k) words.resize(k);
    return RelatedWordSet{sense_index, std::move(words)};
  }

  const IdfTable uniform;
  ReverseDictionaryOptions opts;
  opts.k = k;
  opts.sense_index = sense_index;
  opts.sense_count_threshold = cfg.sense_count_threshold;
  opts.exclude = {task.pun_word};
  return reverse_dictionary(require(res.embeddings, "word embeddings"), definition, lexicon,
                            stopwords, res.idf != nullptr ? *res.idf : uniform, opts);
}

ContextWordSet context_words(const PunTask& task, const RelatedWordSet& related,
                             ContextMethod method, const PipelineResources& res,
                             const PipelineConfig& cfg) {
  const auto opts = context_options(cfg, task.pun_word);
  const auto& lexicon = require(res.lexicon, "a sense-count lexicon");
  switch (method) {
    case ContextMethod::kTfIdf:
      return tfidf_context(require(res.index, "a corpus index"), related,
                           require(res.stopwords, "a stopword list"), lexicon, opts);
    case ContextMethod::kWord2Vec:
      return w2v_context(require(res.embeddings, "word embeddings"), related, lexicon, opts);
    case ContextMethod::kLlm:
      return llm_context(ModelClient(endpoint_config(cfg, cfg.completion_url)), related, lexicon,
                         opts);
  }
  throw ConfigError("unknown context method");
}

TaskOutcome run_task(const PunTask& task, ContextMethod method, const PipelineResources& res,
                     const PipelineConfig& cfg) {
  validate_task(task);
  validate_config(cfg);
  TaskOutcome out;
  out.task = task;
  out.method = method;
  out.related1 = related_words(task, 1, res, cfg);
  out.related2 = related_words(task, 2, res, cfg);
  out.context1 = context_words(task, out.related1, method, res, cfg);
  out.context2 = context_words(task, out.related2, method, res, cfg);

  const ModelClient generator(endpoint_config(cfg, cfg.generation_url));
  auto gen = generate_candidates(generator, task, out.context1, out.context2, cfg);
  out.generated = gen.candidates.size();
  out.dropped_without_pun = gen.dropped_without_pun;
  out.duplicates = gen.duplicates;

  const ModelClient classifier(endpoint_config(cfg, cfg.classifier_url));
  const auto kept = prune_bottom(score_candidates(classifier, gen.candidates), cfg.keep_fraction);
  out.kept_after_pruning = kept.size();
  out.final_puns = sample_final(kept, static_cast<std::size_t>(cfg.final_sample_size),
                                derive_seed(cfg.seed ^ fnv1a64("sample_final"), 0));
  return out;
}

std::vector<nlohmann::ordered_json> pun_records(const TaskOutcome& o) {
  std::vector<nlohmann::ordered_json> out;
  for (const auto& p : o.final_puns) {
    nlohmann::ordered_json j;
    j["task_id"] = o.task.task_id;
    j["pun_word"] = o.task.pun_word;
    j["sentence"] = p.candidate.text;
    j["humor_score"] = p.humor_score;
    j["provenance"] = {
        {"method", std::string(to_string(o.method))},
        {"sense1", o.task.sense1},
        {"sense2", o.task.sense2},
        {"related_words", {{"sense1", o.related1.words}, {"sense2", o.related2.words}}},
        {"context_words", {{"sense1", context_json(o.context1)}, {"sense2", context_json(o.context2)}}},
        {"prompt", p.candidate.prompt},
        {"seed", p.candidate.seed},
        {"pun_position_mode", std::string(to_string(p.candidate.pun_position_mode))},
    };
    out.push_back(std::move(j));
  }
  return out;
}

}  // namespace ambipun
