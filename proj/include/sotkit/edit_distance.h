// include/sotkit/edit_distance.h

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

#ifndef SOTKIT_EDIT_DISTANCE_H_
#define SOTKIT_EDIT_DISTANCE_H_

#include <span>
#include <string>

#include "sotkit/types.h"

namespace sotkit {

/// Word-level Levenshtein alignment with unit costs. When several alignments
/// reach the minimum, the backtrace prefers a substitution (or match) over an
/// insertion, and an insertion over a deletion, so the sub/ins/del split is
/// deterministic. ref_words is set to ref.size().
ErrorCounts WordErrors(std::span<const std::string> ref,
                       std::span<const std::string> hyp);

/// Total edit distance only; O(min) memory.
std::int64_t EditDistance(std::span<const std::string> ref,
                          std::span<const std::string> hyp);

}  // namespace sotkit

#endif  // SOTKIT_EDIT_DISTANCE_H_
