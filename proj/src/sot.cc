// src/sot.cc

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

#include "sotkit/sot.h"

#include <algorithm>

namespace sotkit {

FifoMode ParseFifoMode(std::string_view name) {
  if (name == "utterance") return FifoMode::kUtterance;
  if (name == "speaker") return FifoMode::kSpeaker;
  throw ValidationError("unknown FIFO mode '" + std::string(name) +
                        "' (expected 'utterance' or 'speaker')");
}

std::string_view FifoModeName(FifoMode mode) {
  return mode == FifoMode::kSpeaker ? "speaker" : "utterance";
}

std::vector<Tokens> FifoChannels(const UtteranceGroup &group, FifoMode mode) {
  std::vector<const Utterance *> order;
  order.reserve(group.utterances.size());
  for (const Utterance &u : group.utterances) order.push_back(&u);
  std::sort(order.begin(), order.end(),
            [](const Utterance *a, const Utterance *b) { return UtteranceLess(*a, *b); });

  std::vector<Tokens> channels;
  if (mode == FifoMode::kUtterance) {
    for (const Utterance *u : order) channels.push_back(u->text);
    return channels;
  }
  // Speakers take the position of their first utterance in FIFO order.
  std::vector<std::string> speakers;
  for (const Utterance *u : order) {
    auto it = std::find(speakers.begin(), speakers.end(), u->speaker);
    if (it == speakers.end()) {
      speakers.push_back(u->speaker);
      channels.push_back(u->text);
    } else {
      Tokens &ch = channels[static_cast<std::size_t>(it - speakers.begin())];
      ch.insert(ch.end(), u->text.begin(), u->text.end());
    }
  }
  return channels;
}

Tokens SerializeChannels(const std::vector<Tokens> &channels) {
  Tokens out;
  for (std::size_t i = 0; i < channels.size(); ++i) {
    if (i) out.emplace_back(kSpeakerChange);
    out.insert(out.end(), channels[i].begin(), channels[i].end());
  }
  out.emplace_back(kEndOfSequence);
  return out;
}

SotSequence SerializeFifo(const UtteranceGroup &group, FifoMode mode) {
  if (group.utterances.empty())
    throw ValidationError("group " + group.group_id + " is empty");
  for (const Utterance &u : group.utterances) {
    if (u.text.empty())
      throw ValidationError("group " + group.group_id + ": utterance " +
                            u.utterance_id + " has no transcript");
    for (const std::string &w : u.text) {
      if (IsReservedToken(w))
        throw ValidationError("group " + group.group_id + ": utterance " +
                              u.utterance_id + " contains reserved token " + w);
    }
  }
  return SotSequence{SerializeChannels(FifoChannels(group, mode)), mode};
}

std::string CheckSotInvariants(const Tokens &tokens) {
  if (tokens.empty() || tokens.back() != kEndOfSequence)
    return "sequence does not end with end-of-sequence";
  for (std::size_t i = 0; i + 1 < tokens.size(); ++i) {
    if (tokens[i] == kEndOfSequence) return "end-of-sequence before the final position";
    if (tokens[i] != kSpeakerChange) continue;
    if (i == 0) return "speaker change at the start";
    if (tokens[i + 1] == kSpeakerChange) return "consecutive speaker changes";
    if (tokens[i + 1] == kEndOfSequence) return "speaker change before end-of-sequence";
  }
  return "";
}

std::vector<std::string> DecodedChannels::Texts() const {
  std::vector<std::string> out;
  out.reserve(channels.size());
  for (const Tokens &c : channels) out.push_back(JoinWords(c));
  return out;
}

DecodedChannels Deserialize(const Tokens &tokens) {
  DecodedChannels out;
  auto eos = std::find(tokens.begin(), tokens.end(), kEndOfSequence);
  if (eos == tokens.end()) {
    out.warnings.push_back("missing end-of-sequence token");
  } else if (eos + 1 != tokens.end()) {
    out.warnings.push_back(std::to_string(tokens.end() - eos - 1) +
                           " token(s) after end-of-sequence discarded");
  }

  std::vector<Tokens> raw(1);
  bool any_change = false;
  for (auto it = tokens.begin(); it != eos; ++it) {
    if (*it == kSpeakerChange) {
      raw.emplace_back();
      any_change = true;
    } else {
      raw.back().push_back(*it);
    }
  }
  // A bare end-of-sequence is a legitimate zero-speaker output, not an empty
  // channel.
  if (!any_change && raw.front().empty()) return out;

  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (raw[i].empty()) {
      out.warnings.push_back("empty channel " + std::to_string(i) + " dropped");
    } else {
      out.channels.push_back(std::move(raw[i]));
    }
  }
  out.speaker_count = static_cast<int>(out.channels.size());
  return out;
}

DecodedChannels DeserializeText(std::string_view sot_text) {
  return Deserialize(SplitWords(sot_text));
}

}  // namespace sotkit
