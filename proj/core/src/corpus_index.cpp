#include "ambipun/corpus_index.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <fstream>
#include <sstream>
#include <thread>

#include "ambipun/errors.hpp"
#include "ambipun/textnorm.hpp"

namespace ambipun {

namespace {

constexpr std::string_view kMagic = "AMBIPIDX";
constexpr std::uint32_t kVersion = 1;

using PostingMap = std::unordered_map<std::string, std::vector<SentenceId>>;

void index_range(const std::vector<std::string>& sentences, std::size_t begin,
                 std::size_t end, PostingMap& out) {
  for (std::size_t id = begin; id < end; ++id) {
    for (auto& tok : textnorm::tokenize(sentences[id])) {
      auto& list = out[std::move(tok)];
      if (list.empty() || list.back() != id) list.push_back(static_cast<SentenceId>(id));
    }
  }
}

void put_u32(std::string& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

void put_u64(std::string& out, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

void put_str(std::string& out, std::string_view s) {
  put_u32(out, static_cast<std::uint32_t>(s.size()));
  out.append(s);
}

class Reader {
 public:
  explicit Reader(std::string_view bytes) : bytes_(bytes) {}

  std::size_t offset() const { return pos_; }
  bool at_end() const { return pos_ == bytes_.size(); }

  std::string_view take(std::size_t n, const char* what) {
    if (bytes_.size() - pos_ < n) {
      throw FormatError(std::string("truncated index while reading ") + what, pos_,
                        FormatError::Unit::kByte);
    }
    auto s = bytes_.substr(pos_, n);
    pos_ += n;
    return s;
  }

  std::uint64_t uint(std::size_t width, const char* what) {
    const auto s = take(width, what);
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < width; ++i) {
      v |= static_cast<std::uint64_t>(static_cast<unsigned char>(s[i])) << (8 * i);
    }
    return v;
  }

  std::string str(const char* what) {
    const auto n = uint(4, what);
    return std::string(take(n, what));
  }

 private:
  std::string_view bytes_;
  std::size_t pos_ = 0;
};

}  // namespace

CorpusIndex CorpusIndex::from_sentences(std::vector<std::string> sentences, unsigned workers) {
  if (sentences.empty()) throw EmptyCorpus();
  CorpusIndex index;
  index.sentences_ = std::move(sentences);
  const auto n = index.sentences_.size();
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, (n + 1023) / 1024));
  workers = std::max(1u, workers);

  std::vector<PostingMap> parts(workers);
  {
    std::vector<std::jthread> threads;
    for (unsigned w = 0; w < workers; ++w) {
      const auto begin = n * w / workers;
      const auto end = n * (w + 1) / workers;
      threads.emplace_back([&, begin, end, w] { index_range(index.sentences_, begin, end, parts[w]); });
    }
  }
  // Parts cover ascending id ranges, so appending in part order keeps
  // every postings list strictly increasing.
  index.postings_ = std::move(parts[0]);
  for (unsigned w = 1; w < workers; ++w) {
    for (auto& [tok, ids] : parts[w]) {
      auto& dst = index.postings_[tok];
      dst.insert(dst.end(), ids.begin(), ids.end());
    }
  }
  return index;
}

CorpusIndex CorpusIndex::build(const std::filesystem::path& corpus, const IndexLimits& limits) {
  std::ifstream in(corpus, std::ios::binary);
  if (!in) throw IoError("cannot open corpus: " + corpus.string());
  std::vector<std::string> sentences;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    sentences.push_back(line);
    if (limits.max_lines != 0 && sentences.size() >= limits.max_lines) break;
  }
  if (in.bad()) throw IoError("read failure on corpus: " + corpus.string());
  return from_sentences(std::move(sentences), limits.workers);
}

std::span<const SentenceId> CorpusIndex::postings(std::string_view token) const {
  if (auto it = postings_.find(std::string(token)); it != postings_.end()) return it->second;
  return {};
}

std::vector<std::string> CorpusIndex::vocabulary() const {
  std::vector<std::string> out;
  out.reserve(postings_.size());
  for (const auto& [tok, _] : postings_) out.push_back(tok);
  std::sort(out.begin(), out.end());
  return out;
}

std::string CorpusIndex::serialize() const {
  std::string out(kMagic);
  put_u32(out, kVersion);
  put_u64(out, sentences_.size());
  for (const auto& s : sentences_) put_str(out, s);
  const auto vocab = vocabulary();
  put_u64(out, vocab.size());
  for (const auto& tok : vocab) {
    put_str(out, tok);
    const auto& ids = postings_.at(tok);
    put_u32(out, static_cast<std::uint32_t>(ids.size()));
    for (auto id : ids) put_u32(out, id);
  }
  return out;
}

CorpusIndex CorpusIndex::deserialize(std::string_view bytes) {
  Reader r(bytes);
  if (r.take(kMagic.size(), "magic") != kMagic) {
    throw FormatError("not a corpus index file", 0, FormatError::Unit::kByte);
  }
  const auto version_at = r.offset();
  if (r.uint(4, "version") != kVersion) {
    throw FormatError("unsupported index version", version_at, FormatError::Unit::kByte);
  }
  CorpusIndex index;
  const auto n = r.uint(8, "sentence count");
  if (n > bytes.size()) throw FormatError("sentence count exceeds file size", r.offset(), FormatError::Unit::kByte);
  index.sentences_.reserve(n);
  for (std::uint64_t i = 0; i < n; ++i) index.sentences_.push_back(r.str("sentence"));
  const auto t = r.uint(8, "token count");
  if (t > bytes.size()) throw FormatError("token count exceeds file size", r.offset(), FormatError::Unit::kByte);
  for (std::uint64_t i = 0; i < t; ++i) {
    const auto tok_at = r.offset();
    auto tok = r.str("token");
    const auto count = r.uint(4, "postings length");
    std::vector<SentenceId> ids;
    ids.reserve(std::min<std::uint64_t>(count, bytes.size() / 4));
    for (std::uint64_t k = 0; k < count; ++k) {
      const auto id_at = r.offset();
      const auto id = static_cast<SentenceId>(r.uint(4, "sentence id"));
      if (id >= n || (!ids.empty() && id <= ids.back())) {
        throw FormatError("invalid postings entry", id_at, FormatError::Unit::kByte);
      }
      ids.push_back(id);
    }
    if (ids.empty() || !index.postings_.emplace(std::move(tok), std::move(ids)).second) {
      throw FormatError("empty or duplicate postings list", tok_at, FormatError::Unit::kByte);
    }
  }
  if (!r.at_end()) throw FormatError("trailing bytes after index", r.offset(), FormatError::Unit::kByte);
  if (index.sentences_.empty()) throw FormatError("index holds no sentences", r.offset(), FormatError::Unit::kByte);
  return index;
}

void CorpusIndex::save(const std::filesystem::path& path) const {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write index: " + path.string());
  const auto bytes = serialize();
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw IoError("write failure on index: " + path.string());
}

CorpusIndex CorpusIndex::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open index: " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return deserialize(ss.str());
}

std::vector<std::string> retrieve(const CorpusIndex& index, std::string_view word,
                                  std::size_t max_sentences) {
  const auto ids = index.postings(word);
  const auto n = std::min(ids.size(), max_sentences);
  std::vector<std::string> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(index.sentence(ids[i]));
  return out;
}

IdfTable::IdfTable(const CorpusIndex& index) {
  const double n = static_cast<double>(index.total_sentences());
  double max_idf = 1.0;
  for (const auto& tok : index.vocabulary()) {
    const double df = static_cast<double>(index.doc_freq(tok));
    const double idf = std::log((n + 1.0) / (df + 1.0)) + 1.0;
    max_idf = std::max(max_idf, idf);
    values_.emplace(tok, idf);
  }
  fallback_ = max_idf;
}

double IdfTable::operator()(std::string_view token) const {
  if (auto it = values_.find(std::string(token)); it != values_.end()) return it->second;
  return fallback_;
}

}  // namespace ambipun
