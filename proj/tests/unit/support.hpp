#pragma once

#include <cmath>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include <unistd.h>

#include "gtfa/group.hpp"

namespace testing {

inline std::string data_path(const std::string& name) { return std::string(GTFA_TEST_DATA) + "/" + name; }

inline std::mt19937_64 rng(unsigned long long seed = 12345) { return std::mt19937_64(seed); }

/// Fresh scratch directory under the system temp dir, removed on destruction.
class TempDir {
 public:
  explicit TempDir(const std::string& tag) {
    static int counter = 0;
    path_ = std::filesystem::temp_directory_path() /
            ("gtfa_" + tag + "_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  std::string file(const std::string& name) const { return (path_ / name).string(); }

 private:
  std::filesystem::path path_;
};

inline std::vector<gtfa::GroupPtr> corpus() {
  using namespace gtfa;
  std::vector<GroupPtr> out;
  for (int n : {2, 3, 4, 8, 16}) out.push_back(build_cyclic(n));
  out.push_back(build_dihedral(3));
  out.push_back(build_dihedral(4));
  out.push_back(build_product(build_cyclic(2), build_dihedral(3)));
  return out;
}

}  // namespace testing
