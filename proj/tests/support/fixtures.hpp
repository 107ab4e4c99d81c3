#pragma once

#include <atomic>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include <unistd.h>

inline const std::vector<std::string>& four_line_corpus() {
  static const std::vector<std::string> kLines = {
      "the judge ruled the trial unfair",
      "the trial began today",
      "cats sleep all day",
      "the judge likes cats",
  };
  return kLines;
}

inline std::filesystem::path data_path(const std::string& name) {
  return std::filesystem::path(AMBIPUN_TEST_DATA_DIR) / name;
}

// Directory removed with everything in it when the object goes away.
class TempDir {
 public:
  TempDir() {
    static std::atomic<int> counter{0};
    path_ = std::filesystem::temp_directory_path() /
            ("ambipun_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }

  std::filesystem::path write(const std::string& name, const std::string& content) const {
    const auto p = path_ / name;
    std::ofstream(p, std::ios::binary) << content;
    return p;
  }

  std::filesystem::path write_lines(const std::string& name,
                                    const std::vector<std::string>& lines) const {
    std::string content;
    for (const auto& l : lines) content += l + "\n";
    return write(name, content);
  }

 private:
  std::filesystem::path path_;
};
