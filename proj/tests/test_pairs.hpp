#pragma once

#include <utility>
#include <vector>

#include "qcyclo/group.hpp"

namespace qcyclo::testing {

inline const std::vector<std::pair<i64, i64>>& test_pairs() {
  static const std::vector<std::pair<i64, i64>> pairs = {
      {-1, 2}, {-1, 3}, {-1, 5}, {-1, 13}, {2, 3}, {2, 5}, {2, 7},
      {3, 5},  {3, 7},  {5, 7},  {5, 11},  {5, 13}, {13, 17}};
  return pairs;
}

}  // namespace qcyclo::testing
