// src/grouping.cc

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

#include "sotkit/grouping.h"

#include <algorithm>
#include <cstdio>
#include <set>

namespace sotkit {

std::int64_t UtteranceGroup::NumWords() const {
  std::int64_t n = 0;
  for (const Utterance &u : utterances) n += static_cast<std::int64_t>(u.text.size());
  return n;
}

UtteranceGroup MakeGroup(std::string group_id, std::string session_id,
                         std::vector<Utterance> utterances) {
  UtteranceGroup g;
  g.group_id = std::move(group_id);
  g.session_id = std::move(session_id);
  std::sort(utterances.begin(), utterances.end(), UtteranceLess);
  std::set<std::string> speakers;
  if (!utterances.empty()) {
    g.span_start = utterances.front().start;
    g.span_end = utterances.front().end;
  }
  for (const Utterance &u : utterances) {
    speakers.insert(u.speaker);
    g.span_start = std::min(g.span_start, u.start);
    g.span_end = std::max(g.span_end, u.end);
  }
  g.num_speakers = static_cast<int>(speakers.size());
  g.utterances = std::move(utterances);
  return g;
}

std::string GroupId(const std::string &session_id, std::size_t index,
                    std::size_t num_groups) {
  int width = 4;
  for (std::size_t n = num_groups; n >= 10000; n /= 10) ++width;
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%0*zu", width, index);
  return session_id + "_" + buf;
}

std::vector<UtteranceGroup> BuildUtteranceGroups(const Session &session,
                                                 Diagnostics *diag) {
  RequireValidSession(session);
  std::vector<Utterance> sorted = session.utterances;
  std::sort(sorted.begin(), sorted.end(), UtteranceLess);

  // Sweep: a new component starts whenever the next start is at or after the
  // furthest end seen so far.
  std::vector<std::vector<Utterance>> components;
  Millis reach{0};
  for (Utterance &u : sorted) {
    if (components.empty() || u.start >= reach) {
      components.emplace_back();
      reach = u.end;
    } else {
      reach = std::max(reach, u.end);
    }
    components.back().push_back(std::move(u));
  }

  std::vector<UtteranceGroup> groups;
  groups.reserve(components.size());
  for (std::size_t i = 0; i < components.size(); ++i) {
    const auto &members = components[i];
    for (std::size_t a = 0; a < members.size(); ++a) {
      for (std::size_t b = a + 1; b < members.size(); ++b) {
        if (members[b].start >= members[a].end) break;
        if (members[a].speaker == members[b].speaker)
          Warn(diag, "session " + session.session_id + ": speaker " +
                         members[a].speaker + " overlaps itself in utterances " +
                         members[a].utterance_id + " and " + members[b].utterance_id);
      }
    }
    groups.push_back(MakeGroup(GroupId(session.session_id, i, components.size()),
                               session.session_id, components[i]));
  }
  return groups;
}

double StatsBucket::average_duration_s() const {
  if (num_segments == 0) return 0.0;
  return MillisToSeconds(total_duration) / static_cast<double>(num_segments);
}

double StatsBucket::total_duration_hr() const {
  return MillisToSeconds(total_duration) / 3600.0;
}

StatsBucket &StatsBucket::operator+=(const StatsBucket &other) {
  num_segments += other.num_segments;
  total_duration += other.total_duration;
  num_words += other.num_words;
  return *this;
}

GroupStats ComputeGroupStats(std::span<const UtteranceGroup> groups) {
  GroupStats stats;
  for (const UtteranceGroup &g : groups) {
    StatsBucket one;
    one.num_segments = 1;
    one.total_duration = g.span_end - g.span_start;
    one.num_words = g.NumWords();
    stats.buckets[g.num_speakers] += one;
    stats.total += one;
  }
  return stats;
}

StatsBucket ComputeUtteranceStats(std::span<const Session> sessions) {
  StatsBucket b;
  for (const Session &s : sessions) {
    for (const Utterance &u : s.utterances) {
      b.num_segments += 1;
      b.total_duration += u.duration();
      b.num_words += static_cast<std::int64_t>(u.text.size());
    }
  }
  return b;
}

}  // namespace sotkit
