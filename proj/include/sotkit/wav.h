// include/sotkit/wav.h

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

#ifndef SOTKIT_WAV_H_
#define SOTKIT_WAV_H_

#include <cstdint>
#include <string>
#include <string_view>

#include "sotkit/types.h"

namespace sotkit {

// RIFF/WAVE, mono, 16-bit little-endian PCM only.

/// Amplitude to PCM: round half away from zero of x * 32767, after clamping
/// x to [-1, 1].
std::int16_t QuantizeSample(float x);

std::string EncodeWav(const AudioBuffer &audio);
/// Throws IoError on malformed or unsupported data. Samples are scaled by
/// 1/32767 (so -32768 clamps to -1).
AudioBuffer DecodeWav(std::string_view bytes, const std::string &name = "<memory>");

void WriteWav(const std::string &path, const AudioBuffer &audio);
AudioBuffer ReadWav(const std::string &path);

}  // namespace sotkit

#endif  // SOTKIT_WAV_H_
