#pragma once

#include "lics/cli.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

namespace fixture {

inline const char* kSu2 = R"({
  "dim": 4,
  "basis": ["T", "S", "A", "B"],
  "brackets": [
    {"i": 2, "j": 3, "c": {"4": "2"}},
    {"i": 2, "j": 4, "c": {"3": "-2"}},
    {"i": 3, "j": 4, "c": {"2": "2"}}
  ]
})";

inline const char* kAbelian4 = R"({"dim": 4, "brackets": []})";

inline const char* kBroken = R"({"dim": 3, "brackets": [
  {"i": 1, "j": 2, "c": {"3": "1"}},
  {"i": 1, "j": 3, "c": {"1": "1"}}
]})";

/// Scratch directory removed on destruction.
class TempDir {
 public:
  TempDir() {
    static int counter = 0;
    path_ = std::filesystem::temp_directory_path() /
            ("lics_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  std::string write(const std::string& name, const std::string& text) const {
    const auto p = path_ / name;
    std::ofstream(p, std::ios::binary) << text;
    return p.string();
  }
  std::string path(const std::string& name) const { return (path_ / name).string(); }

 private:
  std::filesystem::path path_;
};

struct Result {
  int code;
  std::string out;
  std::string err;
};

inline Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "lics");
  std::ostringstream out, err;
  const int code = lics::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace fixture
