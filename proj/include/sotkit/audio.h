// include/sotkit/audio.h

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

#ifndef SOTKIT_AUDIO_H_
#define SOTKIT_AUDIO_H_

#include <cstddef>

#include "sotkit/types.h"

namespace sotkit {

/// Output length of a speed change: round(n / factor), at least 1 for
/// non-empty input.
std::size_t SpeedPerturbedLength(std::size_t n, double factor);

/// Resamples by linear interpolation of the input at positions i * factor,
/// holding the last sample past the end. factor > 1 shortens the audio.
/// factor == 1 returns an identical copy. Throws ValidationError for
/// factor <= 0.
AudioBuffer SpeedPerturb(const AudioBuffer &audio, double factor);

/// Largest absolute sample value.
float PeakAmplitude(const AudioBuffer &audio);

}  // namespace sotkit

#endif  // SOTKIT_AUDIO_H_
