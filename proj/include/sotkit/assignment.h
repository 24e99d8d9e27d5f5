// include/sotkit/assignment.h

// Copyright 2026  The sotkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#ifndef SOTKIT_ASSIGNMENT_H_
#define SOTKIT_ASSIGNMENT_H_

#include <cstdint>
#include <vector>

namespace sotkit {

/// Dense row-major cost matrix with rows <= cols.
class CostMatrix {
 public:
  CostMatrix(std::size_t rows, std::size_t cols, std::int64_t fill = 0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::int64_t &operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::int64_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

 private:
  std::size_t rows_, cols_;
  std::vector<std::int64_t> data_;
};

struct Assignment {
  std::vector<std::size_t> col_of_row;  // injective
  std::int64_t total_cost = 0;
};

/// Minimum-cost assignment of every row to a distinct column (Hungarian
/// method with potentials, O(rows^2 * cols)). Throws std::invalid_argument
/// if rows > cols.
Assignment SolveAssignment(const CostMatrix &cost);

}  // namespace sotkit

#endif  // SOTKIT_ASSIGNMENT_H_
