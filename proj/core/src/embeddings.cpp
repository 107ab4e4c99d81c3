#include "ambipun/embeddings.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace ambipun {

namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (pos < line.size()) {
    const auto start = line.find_first_not_of(" \t\r", pos);
    if (start == std::string_view::npos) break;
    auto end = line.find_first_of(" \t\r", start);
    if (end == std::string_view::npos) end = line.size();
    out.push_back(line.substr(start, end - start));
    pos = end;
  }
  return out;
}

template <typename T>
bool parse_value(std::string_view s, T& out) {
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

}  // namespace

EmbeddingTable EmbeddingTable::from_rows(
    std::size_t dim, std::vector<std::pair<std::string, std::vector<double>>> rows) {
  if (dim == 0) throw PreconditionError("embedding dimension must be positive");
  EmbeddingTable t;
  t.dim_ = dim;
  for (auto& [word, vec] : rows) {
    if (vec.size() != dim) throw PreconditionError("row for \"" + word + "\" has wrong dimension");
    if (auto it = t.lookup_.find(word); it != t.lookup_.end()) {
      std::copy(vec.begin(), vec.end(), t.data_.begin() + static_cast<std::ptrdiff_t>(it->second * dim));
      ++t.duplicates_;
      continue;
    }
    t.lookup_.emplace(word, t.words_.size());
    t.words_.push_back(std::move(word));
    t.data_.insert(t.data_.end(), vec.begin(), vec.end());
  }
  if (t.words_.empty()) throw PreconditionError("embedding vocabulary is empty");
  t.norms_.reserve(t.words_.size());
  for (std::size_t i = 0; i < t.words_.size(); ++i) t.norms_.push_back(detail::l2_norm(t.row(i)));
  return t;
}

EmbeddingTable EmbeddingTable::parse(std::string_view text) {
  std::size_t line_no = 0;
  std::size_t pos = 0;
  auto next_line = [&](std::string_view& line) {
    if (pos >= text.size()) return false;
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    return true;
  };

  std::string_view line;
  if (!next_line(line)) throw FormatError("missing header", 1, FormatError::Unit::kLine);
  const auto header = split_fields(line);
  std::size_t vocab_size = 0;
  std::size_t dim = 0;
  if (header.size() != 2 || !parse_value(header[0], vocab_size) || !parse_value(header[1], dim) ||
      vocab_size == 0 || dim == 0) {
    throw FormatError("header must be \"vocab_size dim\"", 1, FormatError::Unit::kLine);
  }

  std::vector<std::pair<std::string, std::vector<double>>> rows;
  rows.reserve(vocab_size);
  while (next_line(line)) {
    const auto fields = split_fields(line);
    if (fields.empty()) continue;
    if (rows.size() == vocab_size) {
      throw FormatError("more rows than the header declares", line_no, FormatError::Unit::kLine);
    }
    if (fields.size() - 1 != dim) throw DimensionMismatch(line_no, dim, fields.size() - 1);
    std::vector<double> vec(dim);
    for (std::size_t i = 0; i < dim; ++i) {
      if (!parse_value(fields[i + 1], vec[i])) {
        throw FormatError("bad coordinate \"" + std::string(fields[i + 1]) + "\"", line_no,
                          FormatError::Unit::kLine);
      }
    }
    rows.emplace_back(std::string(fields[0]), std::move(vec));
  }
  if (rows.size() != vocab_size) {
    throw FormatError("header declares " + std::to_string(vocab_size) + " rows, found " +
                          std::to_string(rows.size()),
                      line_no, FormatError::Unit::kLine);
  }
  return from_rows(dim, std::move(rows));
}

EmbeddingTable EmbeddingTable::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open embeddings: " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

bool EmbeddingTable::contains(std::string_view word) const {
  return lookup_.find(std::string(word)) != lookup_.end();
}

std::span<const double> EmbeddingTable::vector(std::string_view word) const {
  auto it = lookup_.find(std::string(word));
  if (it == lookup_.end()) throw UnknownWord(std::string(word));
  return row(it->second);
}

EmbeddingTable EmbeddingTable::scaled(double factor) const {
  EmbeddingTable t = *this;
  for (auto& v : t.data_) v *= factor;
  for (std::size_t i = 0; i < t.words_.size(); ++i) t.norms_[i] = detail::l2_norm(t.row(i));
  return t;
}

double cosine(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw PreconditionError("cosine of vectors with different dimensions");
  const double na = detail::l2_norm(a);
  const double nb = detail::l2_norm(b);
  if (na == 0.0 || nb == 0.0) throw ZeroVector();
  return detail::dot(a, b) / (na * nb);
}

std::vector<Neighbor> nearest_neighbors(const EmbeddingTable& table, std::string_view word,
                                        std::size_t k,
                                        const std::unordered_set<std::string>& exclude) {
  const auto query = table.vector(word);
  return rank_by_cosine(table, query, k, [&](const std::string& w) {
    return w != word && !exclude.contains(w);
  });
}

std::vector<double> embed_definition(const EmbeddingTable& table, std::string_view definition,
                                     const textnorm::StopwordList& stopwords, const IdfTable& idf) {
  std::vector<std::string> content;
  std::vector<double> weights;
  double total = 0.0;
  for (auto& tok : textnorm::tokenize(definition)) {
    if (stopwords.contains(tok) || !table.contains(tok)) continue;
    const double w = idf(tok);
    weights.push_back(w);
    total += w;
    content.push_back(std::move(tok));
  }
  if (content.empty() || total <= 0.0) throw NoContentWords(std::string(definition));
  std::vector<double> out(table.dim(), 0.0);
  for (std::size_t i = 0; i < content.size(); ++i) {
    // Normalizing the weight first keeps a single word's vector bit-exact.
    const double w = weights[i] / total;
    const auto v = table.vector(content[i]);
    for (std::size_t d = 0; d < out.size(); ++d) out[d] += w * v[d];
  }
  return out;
}

RelatedWordSet reverse_dictionary(const EmbeddingTable& table, std::string_view definition,
                                  const textnorm::SenseCountLexicon& lexicon,
                                  const textnorm::StopwordList& stopwords, const IdfTable& idf,
                                  const ReverseDictionaryOptions& options) {
  const auto query = embed_definition(table, definition, stopwords, idf);
  const auto ranked = rank_by_cosine(table, query, options.k, [&](const std::string& w) {
    return !options.exclude.contains(w) && !stopwords.contains(w) &&
           textnorm::passes_refine(w, lexicon, options.sense_count_threshold);
  });
  RelatedWordSet out{options.sense_index, {}};
  for (const auto& n : ranked) out.words.push_back(n.word);
  return out;
}

}  // namespace ambipun
