// include/sotkit/grouping.h

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

#ifndef SOTKIT_GROUPING_H_
#define SOTKIT_GROUPING_H_

#include <algorithm>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "sotkit/types.h"

namespace sotkit {

// A maximal set of utterances connected by chains of temporal overlap. This
// is the evaluation segment for multi-talker recognition.
struct UtteranceGroup {
  std::string group_id;
  std::string session_id;
  std::vector<Utterance> utterances;  // in UtteranceLess order
  int num_speakers = 0;
  Millis span_start{0};
  Millis span_end{0};

  double span_start_s() const { return MillisToSeconds(span_start); }
  double span_end_s() const { return MillisToSeconds(span_end); }
  std::int64_t NumWords() const;
};

/// Strict overlap: touching intervals do not overlap.
inline bool Overlaps(const Utterance &a, const Utterance &b) {
  return std::max(a.start, b.start) < std::min(a.end, b.end);
}

/// Builds a group from an arbitrary utterance set, sorting the utterances and
/// filling in span and speaker count. No connectivity check is made.
UtteranceGroup MakeGroup(std::string group_id, std::string session_id,
                         std::vector<Utterance> utterances);

/// Group id for the index-th group (by start time) of a session with
/// num_groups groups. The index is zero-padded to a width that keeps
/// lexicographic and numeric order equal within the session.
std::string GroupId(const std::string &session_id, std::size_t index,
                    std::size_t num_groups);

/// Partitions a session into utterance groups with a sweep over start times.
/// Throws ValidationError if the session is invalid. Same-speaker overlaps
/// are grouped normally and reported as warnings.
std::vector<UtteranceGroup> BuildUtteranceGroups(const Session &session,
                                                 Diagnostics *diag = nullptr);

struct StatsBucket {
  std::int64_t num_segments = 0;
  Millis total_duration{0};
  std::int64_t num_words = 0;

  double average_duration_s() const;
  double total_duration_hr() const;
  StatsBucket &operator+=(const StatsBucket &other);
};

struct GroupStats {
  std::map<int, StatsBucket> buckets;  // keyed by number of speakers
  StatsBucket total;
};

GroupStats ComputeGroupStats(std::span<const UtteranceGroup> groups);

/// Per-utterance statistics over all sessions (single-speaker segments).
StatsBucket ComputeUtteranceStats(std::span<const Session> sessions);

}  // namespace sotkit

#endif  // SOTKIT_GROUPING_H_
