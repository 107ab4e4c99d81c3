#include "ambipun/eval_metrics.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <unordered_set>

#include "ambipun/errors.hpp"
#include "ambipun/textnorm.hpp"

namespace ambipun::eval {

double distinct_k(std::span<const std::string> tokens, std::size_t k) {
  if (k == 0) throw PreconditionError("distinct_k needs k >= 1");
  if (tokens.size() < k) return 0.0;
  const auto total = tokens.size() - k + 1;
  std::unordered_set<std::string> grams;
  for (std::size_t i = 0; i < total; ++i) {
    std::string gram;
    for (std::size_t j = 0; j < k; ++j) {
      if (j > 0) gram.push_back('\x1f');
      gram += tokens[i + j];
    }
    grams.insert(std::move(gram));
  }
  return static_cast<double>(grams.size()) / static_cast<double>(total);
}

DiversityReport diversity_report(std::span<const std::string> sentences) {
  if (sentences.empty()) throw EmptyInput("diversity_report needs at least one sentence");
  DiversityReport r;
  std::vector<std::string> all;
  double len_sum = 0.0;
  for (const auto& s : sentences) {
    const auto tokens = textnorm::tokenize(s);
    len_sum += static_cast<double>(tokens.size());
    r.sent_dist1 += distinct_k(tokens, 1);
    r.sent_dist2 += distinct_k(tokens, 2);
    all.insert(all.end(), tokens.begin(), tokens.end());
  }
  const auto n = static_cast<double>(sentences.size());
  r.avg_seq_len = len_sum / n;
  r.sent_dist1 /= n;
  r.sent_dist2 /= n;
  r.corpus_dist1 = distinct_k(all, 1);
  r.corpus_dist2 = distinct_k(all, 2);
  return r;
}

double pun_position(std::string_view sentence, std::string_view pun_word) {
  const auto tokens = textnorm::tokenize(sentence);
  const auto pun = textnorm::tokenize(pun_word);
  if (pun.size() != 1) throw PunWordAbsent(std::string(pun_word), std::string(sentence));
  const auto it = std::find(tokens.begin(), tokens.end(), pun.front());
  if (it == tokens.end()) throw PunWordAbsent(std::string(pun_word), std::string(sentence));
  if (tokens.size() == 1) return 0.5;
  return static_cast<double>(it - tokens.begin()) / static_cast<double>(tokens.size() - 1);
}

PunDataset parse_pun_dataset(std::string_view text) {
  PunDataset ds;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    auto line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.find_first_not_of(" \t") == std::string_view::npos) continue;

    std::vector<std::string> fields;
    std::size_t f = 0;
    while (true) {
      const auto tab = line.find('\t', f);
      fields.emplace_back(line.substr(f, tab == std::string_view::npos ? line.size() - f : tab - f));
      if (tab == std::string_view::npos) break;
      f = tab + 1;
    }
    if (fields.size() != 5) {
      throw FormatError("expected 5 tab-separated fields, got " + std::to_string(fields.size()),
                        line_no, FormatError::Unit::kLine);
    }
    if (ds.records.empty() && ds.skipped == 0 && fields[0] == "id") continue;
    PunRecord rec{fields[0], fields[1], fields[2], fields[3], fields[4], 0.0};
    try {
      rec.normalized_position = pun_position(rec.sentence, rec.pun_word);
    } catch (const PunWordAbsent&) {
      ++ds.skipped;
      continue;
    }
    ds.records.push_back(std::move(rec));
  }
  return ds;
}

PunDataset load_pun_dataset(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open pun dataset: " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_pun_dataset(ss.str());
}

double PositionHistogram::bin_lo(std::size_t i) const {
  return static_cast<double>(i) / static_cast<double>(counts.size());
}

double PositionHistogram::bin_hi(std::size_t i) const {
  return static_cast<double>(i + 1) / static_cast<double>(counts.size());
}

PositionHistogram position_histogram(std::span<const double> positions, std::size_t bins) {
  if (bins < 2) throw PreconditionError("histogram needs at least 2 bins");
  if (positions.empty()) throw EmptyDataset();
  PositionHistogram h;
  h.counts.assign(bins, 0);
  h.records = positions.size();
  std::size_t above = 0;
  double sum = 0.0;
  for (double p : positions) {
    const auto raw = static_cast<std::size_t>(std::floor(p * static_cast<double>(bins)));
    ++h.counts[std::min(raw, bins - 1)];
    sum += p;
    if (p > 0.5) ++above;
  }
  std::vector<double> sorted(positions.begin(), positions.end());
  std::sort(sorted.begin(), sorted.end());
  const auto n = sorted.size();
  h.median = n % 2 == 1 ? sorted[n / 2] : (sorted[n / 2 - 1] + sorted[n / 2]) / 2.0;
  h.mean = sum / static_cast<double>(n);
  h.fraction_above_half = static_cast<double>(above) / static_cast<double>(n);
  return h;
}

PositionHistogram position_histogram(std::span<const PunRecord> records, std::size_t bins) {
  std::vector<double> positions;
  positions.reserve(records.size());
  for (const auto& r : records) positions.push_back(r.normalized_position);
  return position_histogram(positions, bins);
}

void write_histogram_csv(std::ostream& out, const PositionHistogram& h) {
  out << "bin_lo,bin_hi,count\n";
  out << std::fixed << std::setprecision(4);
  for (std::size_t i = 0; i < h.counts.size(); ++i) {
    out << h.bin_lo(i) << ',' << h.bin_hi(i) << ',' << h.counts[i] << '\n';
  }
  out << "# summary records=" << h.records << " mean=" << h.mean << " median=" << h.median
      << " fraction_above_half=" << h.fraction_above_half << '\n';
  out << std::defaultfloat;
}

}  // namespace ambipun::eval
