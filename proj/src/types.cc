// src/types.cc

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

#include "sotkit/types.h"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <tuple>

namespace sotkit {

Millis SecondsToMillis(double seconds) {
  // The small bias keeps decimal literals such as 1.0005 (stored as
  // 1.000499999...) rounding up as written.
  return Millis(static_cast<std::int64_t>(std::floor(seconds * 1000.0 + 0.5 + 1e-7)));
}

double MillisToSeconds(Millis t) { return static_cast<double>(t.count()) / 1000.0; }

bool IsReservedToken(std::string_view token) {
  return token == kSpeakerChange || token == kEndOfSequence;
}

bool UtteranceLess(const Utterance &a, const Utterance &b) {
  return std::tie(a.start, a.end, a.speaker, a.utterance_id) <
         std::tie(b.start, b.end, b.speaker, b.utterance_id);
}

ErrorCounts &ErrorCounts::operator+=(const ErrorCounts &other) {
  substitutions += other.substitutions;
  insertions += other.insertions;
  deletions += other.deletions;
  ref_words += other.ref_words;
  return *this;
}

namespace {

bool HasWhitespace(std::string_view s) {
  return std::any_of(s.begin(), s.end(), [](unsigned char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f';
  });
}

}  // namespace

std::vector<Violation> ValidateSession(const Session &session) {
  std::vector<Violation> out;
  std::set<std::string> seen, duplicated;
  for (const Utterance &u : session.utterances) {
    const std::string &id = u.utterance_id;
    if (id.empty()) out.push_back({id, "empty-id", "utterance_id is empty"});
    if (u.session_id != session.session_id)
      out.push_back({id, "session-mismatch",
                     "session_id '" + u.session_id + "' differs from '" +
                         session.session_id + "'"});
    if (u.speaker.empty()) out.push_back({id, "empty-speaker", "speaker is empty"});
    if (u.start.count() < 0)
      out.push_back({id, "negative-start", "start_s must be non-negative"});
    if (u.end <= u.start)
      out.push_back({id, "non-positive-duration", "end_s must exceed start_s"});
    if (u.text.empty() && !u.no_transcript)
      out.push_back({id, "empty-text", "text is empty but no_transcript is not set"});
    for (const std::string &w : u.text) {
      if (w.empty() || HasWhitespace(w)) {
        out.push_back({id, "bad-token", "token '" + w + "' is empty or contains whitespace"});
        break;
      }
      if (IsReservedToken(w)) {
        out.push_back({id, "reserved-token", "token '" + w + "' is reserved"});
        break;
      }
    }
    if (!seen.insert(id).second && duplicated.insert(id).second)
      out.push_back({id, "duplicate-id", "utterance_id appears more than once"});
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string FormatViolation(const Violation &v) {
  std::ostringstream os;
  if (!v.utterance_id.empty()) os << "utterance " << v.utterance_id << ": ";
  os << v.rule << " (" << v.detail << ")";
  return os.str();
}

void RequireValidSession(const Session &session) {
  std::vector<Violation> violations = ValidateSession(session);
  if (violations.empty()) return;
  std::ostringstream os;
  os << "session " << session.session_id << " has " << violations.size()
     << " violation(s)";
  const std::size_t shown = std::min<std::size_t>(violations.size(), 5);
  for (std::size_t i = 0; i < shown; ++i) os << "; " << FormatViolation(violations[i]);
  if (shown < violations.size()) os << "; ...";
  throw ValidationError(os.str());
}

Tokens SplitWords(std::string_view text) {
  Tokens out;
  std::size_t i = 0;
  auto is_space = [](char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f';
  };
  while (i < text.size()) {
    while (i < text.size() && is_space(text[i])) ++i;
    std::size_t j = i;
    while (j < text.size() && !is_space(text[j])) ++j;
    if (j > i) out.emplace_back(text.substr(i, j - i));
    i = j;
  }
  return out;
}

std::string JoinWords(const Tokens &tokens) {
  std::string out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i) out += ' ';
    out += tokens[i];
  }
  return out;
}

}  // namespace sotkit
