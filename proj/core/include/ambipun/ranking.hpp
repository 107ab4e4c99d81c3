#pragma once

#include <cstdint>
#include <vector>

#include "ambipun/llm_client.hpp"
#include "ambipun/types.hpp"

namespace ambipun {

// One /classify request for the whole batch; order preserved.
std::vector<ScoredCandidate> score_candidates(const ModelClient& client,
                                              const std::vector<Candidate>& candidates);

// Keeps the ceil(n * keep_fraction) best-scored candidates, earlier index
// winning ties, sorted by score descending. The classifier is only trusted
// to discard the worst candidates, never to pick a winner.
std::vector<ScoredCandidate> prune_bottom(const std::vector<ScoredCandidate>& scored,
                                          const Rational& keep_fraction);

// Uniform sample without replacement of min(n, |kept|) items, in draw order.
std::vector<ScoredCandidate> sample_final(const std::vector<ScoredCandidate>& kept, std::size_t n,
                                          std::uint64_t seed);

}  // namespace ambipun
