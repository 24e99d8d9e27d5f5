// src/audio.cc

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

#include "sotkit/audio.h"

#include <algorithm>
#include <cmath>
#include <string>

namespace sotkit {

std::size_t SpeedPerturbedLength(std::size_t n, double factor) {
  if (n == 0) return 0;
  const auto len = static_cast<std::size_t>(std::llround(static_cast<double>(n) / factor));
  return std::max<std::size_t>(len, 1);
}

AudioBuffer SpeedPerturb(const AudioBuffer &audio, double factor) {
  if (!(factor > 0.0) || !std::isfinite(factor))
    throw ValidationError("speed factor must be positive, got " + std::to_string(factor));
  if (factor == 1.0) return audio;

  const std::vector<float> &x = audio.samples;
  AudioBuffer out;
  out.sample_rate_hz = audio.sample_rate_hz;
  out.samples.resize(SpeedPerturbedLength(x.size(), factor));
  const std::size_t last = x.empty() ? 0 : x.size() - 1;
  for (std::size_t i = 0; i < out.samples.size(); ++i) {
    const double pos = static_cast<double>(i) * factor;
    const auto j = static_cast<std::size_t>(pos);
    if (j >= last) {
      out.samples[i] = x[last];
      continue;
    }
    const double frac = pos - static_cast<double>(j);
    out.samples[i] = frac == 0.0
                         ? x[j]
                         : static_cast<float>(x[j] + frac * (static_cast<double>(x[j + 1]) - x[j]));
  }
  return out;
}

float PeakAmplitude(const AudioBuffer &audio) {
  float peak = 0.0f;
  for (float s : audio.samples) peak = std::max(peak, std::abs(s));
  return peak;
}

}  // namespace sotkit
