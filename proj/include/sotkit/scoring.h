// include/sotkit/scoring.h

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

#ifndef SOTKIT_SCORING_H_
#define SOTKIT_SCORING_H_

#include <array>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sotkit/grouping.h"
#include "sotkit/types.h"

namespace sotkit {

// Concatenated minimum-permutation WER over utterance groups, speaker
// counting, and the utterance-based baseline.

struct GroupHypothesis {
  std::string group_id;
  std::vector<Tokens> channels;  // order carries no meaning; may be empty
};

using SpeakerRefs = std::map<std::string, Tokens>;

/// Per speaker, the speaker's utterances concatenated in FIFO order.
SpeakerRefs ConcatRefs(const UtteranceGroup &group);

struct ChannelMatch {
  std::string speaker;             // empty for an unmatched hypothesis
  std::optional<std::size_t> hyp;  // nullopt for an unmatched reference
  ErrorCounts counts;
};

struct GroupScore {
  std::string group_id;
  ErrorCounts counts;
  std::vector<ChannelMatch> matches;  // references by speaker, then unmatched hyps
  int ref_speakers = 0;
  int hyp_speakers = 0;
};

/// Scores one group. Both sides are padded with empty channels to the same
/// size, so surplus hypotheses count as insertions and surplus references as
/// deletions. The assignment minimizes total errors; among minimal
/// assignments it takes the fewest deletions, then the fewest insertions,
/// which makes the sub/ins/del split independent of channel order.
/// Throws ValidationError if refs is empty.
GroupScore ScoreGroup(const SpeakerRefs &refs, const GroupHypothesis &hyp);

inline constexpr int kMaxActualBucket = 4;     // 4 means "4 or more"
inline constexpr int kMaxEstimatedBucket = 5;  // 5 means "5 or more"

struct CountConfusion {
  // counts[actual - 1][estimated], actual in 1..4+, estimated in 0..5+.
  std::array<std::array<std::int64_t, kMaxEstimatedBucket + 1>, kMaxActualBucket> counts{};

  std::int64_t RowTotal(int actual) const;
  /// Row-normalized percentage; 0 for an empty row.
  double Percent(int actual, int estimated) const;
  /// Fraction of all groups whose estimated count equals the actual count.
  double Accuracy() const;
};

struct SpeakerCountRow {
  int num_speakers = 0;  // kMaxActualBucket means "or more"
  std::int64_t groups = 0;
  ErrorCounts counts;
};

struct WerReport {
  ErrorCounts counts;
  std::int64_t segments = 0;
  std::vector<SpeakerCountRow> by_num_speakers;
  std::optional<CountConfusion> confusion;  // group-based reports only
  std::vector<std::string> warnings;

  /// Percentage rounded half-up to 0.1.
  double WerPercent() const;
};

/// WER as a percentage rounded half-up to one decimal place, using integer
/// arithmetic.
double RoundedWerPercent(std::int64_t errors, std::int64_t ref_words);

/// Sums group scores. Throws ValidationError if the total reference word
/// count is zero. The result does not depend on the order of scores.
WerReport Aggregate(std::span<const GroupScore> scores);

/// Utterance-based evaluation: every utterance scored against the hypothesis
/// with its id. Throws ValidationError for a missing hypothesis, an utterance
/// without transcript, or zero reference words.
WerReport ScoreUtteranceEval(std::span<const Session> sessions,
                             const std::map<std::string, Tokens> &hyps);

}  // namespace sotkit

#endif  // SOTKIT_SCORING_H_
