#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ambipun::eval {

// unique k-grams / total k-grams; 0 when there are fewer than k tokens.
double distinct_k(std::span<const std::string> tokens, std::size_t k);

struct DiversityReport {
  double avg_seq_len = 0.0;
  double corpus_dist1 = 0.0;
  double corpus_dist2 = 0.0;
  double sent_dist1 = 0.0;
  double sent_dist2 = 0.0;
};

// Sentence-level values average per-sentence distinct_k; corpus-level values
// apply distinct_k to all token lists concatenated. Throws EmptyInput.
DiversityReport diversity_report(std::span<const std::string> sentences);

// Index of the first occurrence of the pun word over (token count - 1);
// one-token sentences map to 0.5. Throws PunWordAbsent. Case-insensitive.
double pun_position(std::string_view sentence, std::string_view pun_word);

struct PunRecord {
  std::string id;
  std::string sentence;
  std::string pun_word;
  std::string sense_key1;
  std::string sense_key2;
  double normalized_position = 0.0;
};

struct PunDataset {
  std::vector<PunRecord> records;
  // Lines whose pun word does not occur in the tokenized sentence.
  std::size_t skipped = 0;
};

// TSV `id<TAB>sentence<TAB>pun_word<TAB>sense_key1<TAB>sense_key2`. A first
// line whose id field is literally "id" is treated as a header.
// Throws IoError, FormatError(line).
PunDataset load_pun_dataset(const std::filesystem::path& path);
PunDataset parse_pun_dataset(std::string_view text);

struct PositionHistogram {
  std::vector<std::size_t> counts;
  std::size_t records = 0;
  double mean = 0.0;
  double median = 0.0;
  double fraction_above_half = 0.0;

  double bin_lo(std::size_t i) const;
  double bin_hi(std::size_t i) const;
};

// Equal-width bins over [0, 1]; the last bin includes 1.0.
// Throws PreconditionError for bins < 2 and EmptyDataset for no positions.
PositionHistogram position_histogram(std::span<const double> positions, std::size_t bins);
PositionHistogram position_histogram(std::span<const PunRecord> records, std::size_t bins);

// `bin_lo,bin_hi,count` rows under a header, then one `# summary` line.
void write_histogram_csv(std::ostream& out, const PositionHistogram& histogram);

}  // namespace ambipun::eval
