// Copyright 2026 The LSFF Diet Cost Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef LSFF_TESTS_SUPPORT_FIXTURE_HPP
#define LSFF_TESTS_SUPPORT_FIXTURE_HPP

// Paths to the bundled fixture and scratch directories for tests that
// rewrite one of its files.

#include <atomic>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <unistd.h>

namespace lsff::testing {

inline std::filesystem::path source_dir() { return LSFF_SOURCE_DIR; }
inline std::filesystem::path fixture_dir() { return source_dir() / "data" / "fixture"; }
inline std::filesystem::path golden_dir() { return source_dir() / "tests" / "golden"; }

inline std::string slurp(const std::filesystem::path& p) {
  std::ifstream is(p, std::ios::binary);
  std::ostringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

inline void spit(const std::filesystem::path& p, const std::string& text) {
  std::ofstream os(p, std::ios::binary);
  os << text;
}

// A fresh directory under the system temp dir, removed on destruction.
class ScratchDir {
 public:
  explicit ScratchDir(const std::string& tag) {
    static std::atomic<int> counter{0};
    path_ = std::filesystem::temp_directory_path() /
            ("lsff_" + tag + "_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
    std::filesystem::remove_all(path_);
    std::filesystem::create_directories(path_);
  }
  ~ScratchDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  ScratchDir(const ScratchDir&) = delete;
  ScratchDir& operator=(const ScratchDir&) = delete;

  const std::filesystem::path& path() const { return path_; }
  std::filesystem::path operator/(const std::string& name) const { return path_ / name; }

 private:
  std::filesystem::path path_;
};

// Copy of the fixture that a test may edit.
class FixtureCopy : public ScratchDir {
 public:
  explicit FixtureCopy(const std::string& tag) : ScratchDir(tag) {
    for (const auto& e : std::filesystem::directory_iterator(fixture_dir())) {
      std::filesystem::copy_file(e.path(), path() / e.path().filename());
    }
  }

  std::string read(const std::string& name) const { return slurp(path() / name); }
  void write(const std::string& name, const std::string& text) const { spit(path() / name, text); }

  // Replaces the first occurrence of `from` in a file; returns false if absent.
  bool replace(const std::string& name, const std::string& from, const std::string& to) const {
    auto text = read(name);
    const auto at = text.find(from);
    if (at == std::string::npos) return false;
    text.replace(at, from.size(), to);
    write(name, text);
    return true;
  }
};

}  // namespace lsff::testing

#endif  // LSFF_TESTS_SUPPORT_FIXTURE_HPP
