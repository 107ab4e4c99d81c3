#include "ambipun/textnorm.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>

#include "ambipun/errors.hpp"

namespace ambipun::textnorm {

namespace {

bool is_word_byte(unsigned char c) { return c >= 0x80 || std::isalnum(c) != 0; }

std::string_view strip(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  return s.substr(first, s.find_last_not_of(" \t\r\n") - first + 1);
}

}  // namespace

std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> tokens;
  std::string current;
  for (char ch : text) {
    const auto c = static_cast<unsigned char>(ch);
    if (is_word_byte(c)) {
      current.push_back(static_cast<char>(c < 0x80 ? std::tolower(c) : c));
    } else if (!current.empty()) {
      tokens.push_back(std::move(current));
      current.clear();
    }
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  return tokens;
}

bool is_alphabetic(std::string_view token) {
  return !token.empty() && std::all_of(token.begin(), token.end(), [](unsigned char c) {
    return c < 0x80 && std::isalpha(c) != 0;
  });
}

StopwordList::StopwordList(std::vector<std::string> words) {
  for (auto& w : words) {
    std::transform(w.begin(), w.end(), w.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (!w.empty()) words_.insert(std::move(w));
  }
  if (words_.empty()) throw PreconditionError("stopword list is empty");
}

StopwordList StopwordList::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open stopword file: " + path.string());
  std::vector<std::string> words;
  std::string line;
  while (std::getline(in, line)) {
    const auto w = strip(line);
    if (w.empty() || w.front() == '#') continue;
    words.emplace_back(w);
  }
  return StopwordList(std::move(words));
}

SenseCountLexicon::SenseCountLexicon(std::unordered_map<std::string, int> entries)
    : entries_(std::move(entries)) {
  for (const auto& [word, count] : entries_) {
    if (count < 1) throw PreconditionError("sense count must be >= 1 for \"" + word + "\"");
  }
}

SenseCountLexicon SenseCountLexicon::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open lexicon file: " + path.string());
  std::unordered_map<std::string, int> entries;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto body = strip(line);
    if (body.empty() || body.front() == '#') continue;
    const auto tab = body.find('\t');
    if (tab == std::string_view::npos) {
      throw FormatError("expected word<TAB>sense_count", line_no, FormatError::Unit::kLine);
    }
    const auto word = strip(body.substr(0, tab));
    const auto count_text = strip(body.substr(tab + 1));
    int count = 0;
    auto [ptr, ec] = std::from_chars(count_text.data(), count_text.data() + count_text.size(), count);
    if (word.empty() || ec != std::errc() || ptr != count_text.data() + count_text.size() ||
        count < 1) {
      throw FormatError("bad lexicon entry", line_no, FormatError::Unit::kLine);
    }
    entries[std::string(word)] = count;
  }
  return SenseCountLexicon(std::move(entries));
}

std::optional<int> SenseCountLexicon::sense_count(std::string_view word) const {
  if (auto it = entries_.find(std::string(word)); it != entries_.end()) return it->second;
  return std::nullopt;
}

bool passes_refine(std::string_view word, const SenseCountLexicon& lexicon, int threshold) {
  if (!is_alphabetic(word)) return false;
  const auto senses = lexicon.sense_count(word);
  return !senses || *senses <= threshold;
}

std::vector<std::string> refine(std::span<const std::string> words,
                                const SenseCountLexicon& lexicon, int threshold) {
  if (threshold < 1) throw PreconditionError("refine threshold must be >= 1");
  std::vector<std::string> out;
  std::unordered_set<std::string_view> seen;
  for (const auto& w : words) {
    if (!passes_refine(w, lexicon, threshold)) continue;
    if (seen.insert(w).second) out.push_back(w);
  }
  return out;
}

}  // namespace ambipun::textnorm
