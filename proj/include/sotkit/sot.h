// include/sotkit/sot.h

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

#ifndef SOTKIT_SOT_H_
#define SOTKIT_SOT_H_

#include <string>
#include <string_view>
#include <vector>

#include "sotkit/grouping.h"
#include "sotkit/types.h"

namespace sotkit {

// Serialized output training labels: all speakers of a group as one token
// sequence, channels separated by the speaker-change token and terminated by
// a single end-of-sequence token.

enum class FifoMode {
  kUtterance,  // one channel per utterance, ordered by start time
  kSpeaker,    // one channel per speaker, ordered by the speaker's first start
};

FifoMode ParseFifoMode(std::string_view name);  // "utterance" | "speaker"
std::string_view FifoModeName(FifoMode mode);

struct SotSequence {
  Tokens tokens;
  FifoMode mode = FifoMode::kUtterance;

  std::string Text() const { return JoinWords(tokens); }
};

/// The channels a group serializes to under the given mode, in FIFO order.
std::vector<Tokens> FifoChannels(const UtteranceGroup &group, FifoMode mode);

/// Throws ValidationError for an empty group or an utterance without text.
SotSequence SerializeFifo(const UtteranceGroup &group, FifoMode mode);

/// Joins channels with speaker-change tokens and appends end-of-sequence.
Tokens SerializeChannels(const std::vector<Tokens> &channels);

/// Checks the SotSequence invariants; returns a description of the first
/// violation or an empty string.
std::string CheckSotInvariants(const Tokens &tokens);

struct DecodedChannels {
  std::vector<Tokens> channels;
  int speaker_count = 0;
  std::vector<std::string> warnings;

  std::vector<std::string> Texts() const;
};

/// Total inverse of serialization, suitable for raw model output. Splits at
/// speaker-change tokens, ignores everything after the first end-of-sequence,
/// and drops empty channels. A missing end-of-sequence, tokens after it, and
/// each dropped channel produce one warning.
DecodedChannels Deserialize(const Tokens &tokens);
DecodedChannels DeserializeText(std::string_view sot_text);

}  // namespace sotkit

#endif  // SOTKIT_SOT_H_
