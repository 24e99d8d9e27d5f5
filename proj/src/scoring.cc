// src/scoring.cc

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

#include "sotkit/scoring.h"

#include <algorithm>
#include <numeric>
#include <set>

#include "sotkit/assignment.h"
#include "sotkit/edit_distance.h"

namespace sotkit {

SpeakerRefs ConcatRefs(const UtteranceGroup &group) {
  std::vector<const Utterance *> order;
  for (const Utterance &u : group.utterances) order.push_back(&u);
  std::sort(order.begin(), order.end(),
            [](const Utterance *a, const Utterance *b) { return UtteranceLess(*a, *b); });
  SpeakerRefs refs;
  for (const Utterance *u : order) {
    Tokens &t = refs[u->speaker];
    t.insert(t.end(), u->text.begin(), u->text.end());
  }
  return refs;
}

namespace {

std::int64_t TotalWords(const std::vector<Tokens> &channels) {
  std::int64_t n = 0;
  for (const Tokens &c : channels) n += static_cast<std::int64_t>(c.size());
  return n;
}

}  // namespace

GroupScore ScoreGroup(const SpeakerRefs &refs, const GroupHypothesis &hyp) {
  if (refs.empty())
    throw ValidationError("group " + hyp.group_id + " has no reference speakers");

  std::vector<std::string> speakers;
  std::vector<Tokens> ref_channels;
  for (const auto &[speaker, tokens] : refs) {
    speakers.push_back(speaker);
    ref_channels.push_back(tokens);
  }
  const std::size_t num_refs = ref_channels.size();
  const std::size_t num_hyps = hyp.channels.size();
  const std::size_t size = std::max(num_refs, num_hyps);
  std::vector<Tokens> hyp_channels = hyp.channels;
  ref_channels.resize(size);
  hyp_channels.resize(size);

  // Lexicographic objective (errors, deletions, insertions) packed into one
  // integer. Insertions summed over any assignment never exceed the hypothesis
  // word count, and deletions never exceed the reference word count.
  const std::int64_t ins_weight = 1;
  const std::int64_t del_weight = (TotalWords(hyp_channels) + 1) * ins_weight;
  const std::int64_t err_weight = (TotalWords(ref_channels) + 1) * del_weight;

  std::vector<ErrorCounts> pair(size * size);
  CostMatrix cost(size, size);
  for (std::size_t r = 0; r < size; ++r) {
    for (std::size_t h = 0; h < size; ++h) {
      const ErrorCounts c = WordErrors(ref_channels[r], hyp_channels[h]);
      pair[r * size + h] = c;
      cost(r, h) = c.Errors() * err_weight + c.deletions * del_weight +
                   c.insertions * ins_weight;
    }
  }
  const Assignment best = SolveAssignment(cost);

  GroupScore score;
  score.group_id = hyp.group_id;
  score.ref_speakers = static_cast<int>(num_refs);
  score.hyp_speakers = static_cast<int>(num_hyps);
  std::vector<ChannelMatch> unmatched_hyps;
  for (std::size_t r = 0; r < size; ++r) {
    const std::size_t h = best.col_of_row[r];
    const ErrorCounts &c = pair[r * size + h];
    score.counts += c;
    ChannelMatch m;
    m.counts = c;
    if (h < num_hyps) m.hyp = h;
    if (r < num_refs) {
      m.speaker = speakers[r];
      score.matches.push_back(std::move(m));
    } else if (m.hyp) {
      unmatched_hyps.push_back(std::move(m));
    }
  }
  std::sort(unmatched_hyps.begin(), unmatched_hyps.end(),
            [](const ChannelMatch &a, const ChannelMatch &b) { return *a.hyp < *b.hyp; });
  score.matches.insert(score.matches.end(), unmatched_hyps.begin(), unmatched_hyps.end());
  return score;
}

std::int64_t CountConfusion::RowTotal(int actual) const {
  const auto &row = counts.at(static_cast<std::size_t>(actual - 1));
  return std::accumulate(row.begin(), row.end(), std::int64_t{0});
}

double CountConfusion::Percent(int actual, int estimated) const {
  const std::int64_t total = RowTotal(actual);
  if (total == 0) return 0.0;
  return 100.0 *
         static_cast<double>(counts.at(static_cast<std::size_t>(actual - 1))
                                 .at(static_cast<std::size_t>(estimated))) /
         static_cast<double>(total);
}

double CountConfusion::Accuracy() const {
  std::int64_t correct = 0, total = 0;
  for (int a = 1; a <= kMaxActualBucket; ++a) {
    total += RowTotal(a);
    correct += counts[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(a)];
  }
  return total == 0 ? 0.0 : static_cast<double>(correct) / static_cast<double>(total);
}

double RoundedWerPercent(std::int64_t errors, std::int64_t ref_words) {
  if (ref_words <= 0) return 0.0;
  // Tenths of a percent, rounded half-up.
  const std::int64_t tenths = (errors * 2000 + ref_words) / (2 * ref_words);
  return static_cast<double>(tenths) / 10.0;
}

double WerReport::WerPercent() const {
  return RoundedWerPercent(counts.Errors(), counts.ref_words);
}

WerReport Aggregate(std::span<const GroupScore> scores) {
  WerReport report;
  CountConfusion confusion;
  std::map<int, SpeakerCountRow> rows;
  std::set<std::string> folded;
  for (const GroupScore &s : scores) {
    report.counts += s.counts;
    report.segments += 1;
    if (s.ref_speakers < 1) {
      throw ValidationError("group " + s.group_id + " has no reference speakers");
    }
    const int actual = std::min(s.ref_speakers, kMaxActualBucket);
    if (s.ref_speakers > kMaxActualBucket) folded.insert(s.group_id);
    const int estimated = std::clamp(s.hyp_speakers, 0, kMaxEstimatedBucket);
    SpeakerCountRow &row = rows[actual];
    row.num_speakers = actual;
    row.groups += 1;
    row.counts += s.counts;
    confusion.counts[static_cast<std::size_t>(actual - 1)]
                    [static_cast<std::size_t>(estimated)] += 1;
  }
  if (report.counts.ref_words == 0)
    throw ValidationError("no reference words to score");
  for (auto &kv : rows) report.by_num_speakers.push_back(kv.second);
  report.confusion = confusion;
  if (!folded.empty()) {
    report.warnings.push_back(std::to_string(folded.size()) +
                              " group(s) with more than 4 speakers folded into the 4+ row (first: " +
                              *folded.begin() + ")");
  }
  return report;
}

WerReport ScoreUtteranceEval(std::span<const Session> sessions,
                             const std::map<std::string, Tokens> &hyps) {
  WerReport report;
  std::set<std::string> used;
  for (const Session &session : sessions) {
    RequireValidSession(session);
    for (const Utterance &u : session.utterances) {
      if (u.no_transcript)
        throw ValidationError("utterance " + u.utterance_id +
                              " has no transcript and cannot be scored");
      auto it = hyps.find(u.utterance_id);
      if (it == hyps.end())
        throw ValidationError("missing hypothesis for utterance " + u.utterance_id);
      used.insert(u.utterance_id);
      report.counts += WordErrors(u.text, it->second);
      report.segments += 1;
    }
  }
  for (const auto &kv : hyps) {
    if (!used.count(kv.first))
      throw ValidationError("hypothesis for unknown utterance " + kv.first);
  }
  if (report.counts.ref_words == 0)
    throw ValidationError("no reference words to score");
  return report;
}

}  // namespace sotkit
