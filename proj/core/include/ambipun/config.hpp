#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ambipun/types.hpp"

namespace ambipun {

// Config files are flat `key = value` lines. Blank lines and lines starting
// with '#' are ignored. Keys are the PipelineConfig field names; unknown keys
// and malformed values raise ConfigError naming the line.

void apply_config_value(PipelineConfig& cfg, std::string_view key, std::string_view value);

PipelineConfig parse_config(std::string_view text, PipelineConfig base = {});
PipelineConfig load_config(const std::filesystem::path& path, PipelineConfig base = {});

// Renders every field in file syntax; parse_config(render_config(c)) == c.
std::string render_config(const PipelineConfig& cfg);

const std::vector<std::string>& config_keys();

// (key, rendered value) for every field, in declaration order.
std::vector<std::pair<std::string, std::string>> config_entries(const PipelineConfig& cfg);

}  // namespace ambipun
