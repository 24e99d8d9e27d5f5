// include/sotkit/types.h

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

#ifndef SOTKIT_TYPES_H_
#define SOTKIT_TYPES_H_

#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sotkit {

// Annotation times are held at millisecond resolution so that overlap tests
// are exact integer comparisons.
using Millis = std::chrono::milliseconds;

/// Converts seconds to milliseconds, rounding half-up to the nearest 1 ms.
Millis SecondsToMillis(double seconds);
double MillisToSeconds(Millis t);

/// Reserved serialization tokens. They may not appear as corpus words.
inline constexpr std::string_view kSpeakerChange = "⟨sc⟩";
inline constexpr std::string_view kEndOfSequence = "⟨eos⟩";

bool IsReservedToken(std::string_view token);

/// Base for all toolkit errors. ValidationError covers malformed input data
/// and arguments, IoError covers filesystem and format-level failures.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ValidationError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

using Tokens = std::vector<std::string>;

struct Utterance {
  std::string session_id;
  std::string utterance_id;
  std::string speaker;
  Millis start{0};
  Millis end{0};
  Tokens text;
  // Segments without a transcript are accepted by grouping but rejected by
  // scoring and label serialization.
  bool no_transcript = false;

  double start_s() const { return MillisToSeconds(start); }
  double end_s() const { return MillisToSeconds(end); }
  Millis duration() const { return end - start; }
};

/// Canonical utterance order used everywhere a deterministic order is needed:
/// (start, end, speaker, utterance_id).
bool UtteranceLess(const Utterance &a, const Utterance &b);

struct Session {
  std::string session_id;
  std::vector<Utterance> utterances;
  // utterance_id -> audio path, when the session carries audio.
  std::map<std::string, std::string> sources;
};

struct AudioBuffer {
  std::vector<float> samples;
  int sample_rate_hz = 16000;

  std::size_t size() const { return samples.size(); }
  double duration_s() const {
    return static_cast<double>(samples.size()) / sample_rate_hz;
  }
};

struct ErrorCounts {
  std::int64_t substitutions = 0;
  std::int64_t insertions = 0;
  std::int64_t deletions = 0;
  std::int64_t ref_words = 0;

  std::int64_t Errors() const { return substitutions + insertions + deletions; }
  ErrorCounts &operator+=(const ErrorCounts &other);
  friend ErrorCounts operator+(ErrorCounts a, const ErrorCounts &b) {
    return a += b;
  }
  friend bool operator==(const ErrorCounts &, const ErrorCounts &) = default;
};

/// Collects non-fatal warnings raised while processing. Operations take an
/// optional pointer; passing nullptr discards warnings.
struct Diagnostics {
  std::vector<std::string> warnings;
  void Warn(std::string message) { warnings.push_back(std::move(message)); }
};

inline void Warn(Diagnostics *diag, std::string message) {
  if (diag != nullptr) diag->Warn(std::move(message));
}

struct Violation {
  std::string utterance_id;  // empty for session-level rules
  std::string rule;
  std::string detail;

  friend bool operator==(const Violation &, const Violation &) = default;
  friend auto operator<=>(const Violation &, const Violation &) = default;
};

/// Checks every type invariant of the session and its utterances. Never
/// throws; the returned list is sorted so the result does not depend on the
/// order of the utterance list.
std::vector<Violation> ValidateSession(const Session &session);

/// Throws ValidationError describing the first few violations, if any.
void RequireValidSession(const Session &session);

std::string FormatViolation(const Violation &v);

/// Splits on ASCII whitespace; no other normalization is applied.
Tokens SplitWords(std::string_view text);
std::string JoinWords(const Tokens &tokens);

}  // namespace sotkit

#endif  // SOTKIT_TYPES_H_
