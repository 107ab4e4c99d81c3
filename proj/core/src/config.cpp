#include "ambipun/config.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <functional>
#include <sstream>

#include "ambipun/errors.hpp"

namespace ambipun {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

template <typename T>
T parse_number(std::string_view key, std::string_view value) {
  T v{};
  auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
  if (ec != std::errc() || ptr != value.data() + value.size()) {
    throw ConfigError("bad value for " + std::string(key) + ": \"" + std::string(value) + "\"");
  }
  return v;
}

std::string format_double(double v) {
  std::array<char, 64> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), ptr);
}

struct Field {
  std::string_view key;
  std::function<void(PipelineConfig&, std::string_view)> set;
  std::function<std::string(const PipelineConfig&)> get;
};

#define AMBIPUN_INT_FIELD(name)                                                       \
  Field{#name,                                                                        \
        [](PipelineConfig& c, std::string_view v) { c.name = parse_number<int>(#name, v); }, \
        [](const PipelineConfig& c) { return std::to_string(c.name); }}
#define AMBIPUN_DOUBLE_FIELD(name)                                                       \
  Field{#name,                                                                           \
        [](PipelineConfig& c, std::string_view v) { c.name = parse_number<double>(#name, v); }, \
        [](const PipelineConfig& c) { return format_double(c.name); }}
#define AMBIPUN_STRING_FIELD(name)                                                       \
  Field{#name, [](PipelineConfig& c, std::string_view v) { c.name = std::string(v); }, \
        [](const PipelineConfig& c) { return c.name; }}

const std::vector<Field>& fields() {
  static const std::vector<Field> kFields = {
      AMBIPUN_INT_FIELD(related_word_count),
      AMBIPUN_INT_FIELD(context_word_count),
      AMBIPUN_INT_FIELD(llm_keywords_per_word),
      AMBIPUN_INT_FIELD(context_words_per_sense_in_prompt),
      Field{"keep_fraction",
            [](PipelineConfig& c, std::string_view v) { c.keep_fraction = parse_rational(v); },
            [](const PipelineConfig& c) { return to_string(c.keep_fraction); }},
      AMBIPUN_INT_FIELD(candidates_per_task),
      AMBIPUN_INT_FIELD(final_sample_size),
      Field{"pun_position_mode",
            [](PipelineConfig& c, std::string_view v) { c.pun_position_mode = parse_position_mode(v); },
            [](const PipelineConfig& c) { return std::string(to_string(c.pun_position_mode)); }},
      AMBIPUN_INT_FIELD(sense_count_threshold),
      AMBIPUN_INT_FIELD(max_sentences_per_word),
      AMBIPUN_STRING_FIELD(completion_url),
      AMBIPUN_STRING_FIELD(generation_url),
      AMBIPUN_STRING_FIELD(classifier_url),
      AMBIPUN_STRING_FIELD(reverse_dictionary_url),
      AMBIPUN_STRING_FIELD(api_key_env),
      AMBIPUN_DOUBLE_FIELD(timeout_seconds),
      AMBIPUN_INT_FIELD(max_retries),
      AMBIPUN_INT_FIELD(max_in_flight),
      AMBIPUN_DOUBLE_FIELD(temperature),
      AMBIPUN_INT_FIELD(max_tokens),
      Field{"seed",
            [](PipelineConfig& c, std::string_view v) { c.seed = parse_number<std::uint64_t>("seed", v); },
            [](const PipelineConfig& c) { return std::to_string(c.seed); }},
  };
  return kFields;
}

#undef AMBIPUN_INT_FIELD
#undef AMBIPUN_DOUBLE_FIELD
#undef AMBIPUN_STRING_FIELD

}  // namespace

void apply_config_value(PipelineConfig& cfg, std::string_view key, std::string_view value) {
  for (const auto& f : fields()) {
    if (f.key == key) {
      f.set(cfg, trim(value));
      return;
    }
  }
  throw ConfigError("unknown config key: " + std::string(key));
}

PipelineConfig parse_config(std::string_view text, PipelineConfig base) {
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    const auto line = trim(text.substr(pos, end - pos));
    ++line_no;
    pos = end + 1;
    if (line.empty() || line.front() == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("line " + std::to_string(line_no) + ": expected key = value");
    }
    try {
      apply_config_value(base, trim(line.substr(0, eq)), line.substr(eq + 1));
    } catch (const ConfigError& e) {
      throw ConfigError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  validate_config(base);
  return base;
}

PipelineConfig load_config(const std::filesystem::path& path, PipelineConfig base) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open config file: " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str(), std::move(base));
}

std::string render_config(const PipelineConfig& cfg) {
  std::string out;
  for (const auto& [key, value] : config_entries(cfg)) {
    out.append(key).append(" = ").append(value).push_back('\n');
  }
  return out;
}

std::vector<std::pair<std::string, std::string>> config_entries(const PipelineConfig& cfg) {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& f : fields()) out.emplace_back(std::string(f.key), f.get(cfg));
  return out;
}

const std::vector<std::string>& config_keys() {
  static const std::vector<std::string> kKeys = [] {
    std::vector<std::string> keys;
    for (const auto& f : fields()) keys.emplace_back(f.key);
    return keys;
  }();
  return kKeys;
}

}  // namespace ambipun
