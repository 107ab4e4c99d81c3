#include "ambipun/ranking.hpp"

#include <algorithm>
#include <numeric>

#include "ambipun/errors.hpp"
#include "ambipun/rng.hpp"

namespace ambipun {

std::vector<ScoredCandidate> score_candidates(const ModelClient& client,
                                              const std::vector<Candidate>& candidates) {
  if (candidates.empty()) throw PreconditionError("no candidates to score");
  std::vector<std::string> texts;
  texts.reserve(candidates.size());
  for (const auto& c : candidates) texts.push_back(c.text);
  const auto scores = client.classify(texts);
  std::vector<ScoredCandidate> out;
  out.reserve(candidates.size());
  for (std::size_t i = 0; i < candidates.size(); ++i) out.push_back({candidates[i], scores[i]});
  return out;
}

std::vector<ScoredCandidate> prune_bottom(const std::vector<ScoredCandidate>& scored,
                                          const Rational& keep_fraction) {
  if (keep_fraction.num <= 0 || keep_fraction.den <= 0 || keep_fraction.num > keep_fraction.den) {
    throw PreconditionError("keep_fraction must lie in (0, 1]");
  }
  std::vector<std::size_t> order(scored.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return scored[a].humor_score > scored[b].humor_score;
  });
  order.resize(keep_fraction.ceil_times(scored.size()));
  std::vector<ScoredCandidate> kept;
  kept.reserve(order.size());
  for (auto i : order) kept.push_back(scored[i]);
  return kept;
}

std::vector<ScoredCandidate> sample_final(const std::vector<ScoredCandidate>& kept, std::size_t n,
                                          std::uint64_t seed) {
  SeededRng rng(seed);
  std::vector<ScoredCandidate> out;
  for (auto i : rng.sample_indices(kept.size(), n)) out.push_back(kept[i]);
  return out;
}

}  // namespace ambipun
