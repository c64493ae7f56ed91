#include "gtfa/errors.hpp"

namespace gtfa {

namespace {

std::string describe_pairs(const std::vector<std::pair<int, int>>& pairs) {
  std::string s = "kernel not invertible at " + std::to_string(pairs.size()) + " block(s):";
  const std::size_t shown = std::min<std::size_t>(pairs.size(), 16);
  for (std::size_t i = 0; i < shown; ++i)
    s += " (" + std::to_string(pairs[i].first) + "," + std::to_string(pairs[i].second) + ")";
  if (shown < pairs.size()) s += " ...";
  return s;
}

}  // namespace

SingularKernel::SingularKernel(std::vector<std::pair<int, int>> pairs)
    : NumericError(describe_pairs(pairs)), pairs_(std::move(pairs)) {}

MarginNegative::MarginNegative(int index, double value)
    : NumericError("time margin at " + std::to_string(index) + " is negative (" + std::to_string(value) + ")"),
      index_(index),
      value_(value) {}

}  // namespace gtfa
