#pragma once

#include <algorithm>
#include <cmath>

#include "ambipun/errors.hpp"

namespace ambipun {

namespace detail {

inline double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline double l2_norm(std::span<const double> a) { return std::sqrt(dot(a, a)); }

inline bool neighbor_before(const Neighbor& a, const Neighbor& b) {
  if (a.cosine != b.cosine) return a.cosine > b.cosine;
  return a.word < b.word;
}

}  // namespace detail

template <typename Pred>
std::vector<Neighbor> rank_by_cosine(const EmbeddingTable& table, std::span<const double> query,
                                     std::size_t k, Pred keep) {
  if (query.size() != table.dim()) throw PreconditionError("query dimension mismatch");
  const double qn = detail::l2_norm(query);
  if (qn == 0.0) throw ZeroVector();
  std::vector<Neighbor> scored;
  if (k == 0) return scored;
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (table.norm(i) == 0.0 || !keep(table.word(i))) continue;
    scored.push_back({table.word(i), detail::dot(query, table.row(i)) / (qn * table.norm(i))});
  }
  const auto top = std::min(k, scored.size());
  std::partial_sort(scored.begin(), scored.begin() + static_cast<std::ptrdiff_t>(top),
                    scored.end(), detail::neighbor_before);
  scored.resize(top);
  return scored;
}

}  // namespace ambipun
