// include/sotkit/mixsim.h

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

#ifndef SOTKIT_MIXSIM_H_
#define SOTKIT_MIXSIM_H_

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "sotkit/rng.h"
#include "sotkit/types.h"

namespace sotkit {

// On-the-fly multi-talker mixture simulation. N single-speaker sources with
// distinct speakers are delayed so that consecutive start times differ by at
// least min_start_gap_s and every source overlaps its predecessor, then
// summed and speed-perturbed.

struct SimConfig {
  int max_speakers = 5;
  double min_start_gap_s = 0.5;
  double speed_low = 0.9;
  double speed_high = 1.1;
  // Draw the speed factor from {low, (low + high) / 2, high} instead of the
  // continuous range.
  bool speed_discrete = false;
  int sample_rate_hz = 16000;
  int max_retries = 100;
  std::uint64_t seed = 0;

  /// Throws ValidationError on an invalid configuration.
  void Validate() const;
  /// Minimum start gap in samples (rounded up).
  std::int64_t MinGapSamples() const;
};

struct PoolSource {
  std::string source_id;
  std::string speaker;
  Tokens transcript;
  std::int64_t num_samples = 0;
  std::string audio_path;  // may be empty for in-memory pools
};

struct MixtureEntry {
  std::string source_id;
  std::string speaker;
  Tokens transcript;
  std::int64_t offset_samples = 0;
  std::int64_t num_samples = 0;
};

struct MixtureSpec {
  std::string mixture_id;
  int sample_rate_hz = 16000;
  std::vector<MixtureEntry> entries;  // strictly increasing offsets
  double speed_factor = 1.0;
  std::vector<Draw> seed_trace;

  double OffsetSeconds(const MixtureEntry &e) const;
  double DurationSeconds(const MixtureEntry &e) const;
  /// Samples spanned before speed perturbation.
  std::int64_t MixedLength() const;
};

/// Draws one mixture plan. Throws ValidationError("infeasible pool ...") when
/// no feasible draw is found within max_retries source resamples, or when the
/// pool cannot supply the drawn number of distinct speakers.
MixtureSpec SampleSpec(std::span<const PoolSource> pool, const SimConfig &config,
                       Rng &rng, std::string mixture_id = "mix");

struct MixtureResult {
  AudioBuffer audio;
  MixtureSpec spec;
  std::string sot_text;  // utterance-FIFO serialization of the entries
  int num_speakers = 0;
};

/// Returns the source audio or nullptr when it is unavailable.
using AudioLookup = std::function<const AudioBuffer *(const std::string &source_id)>;

/// Sums the delayed sources at unit gain, divides by the peak if it exceeds
/// 1, then applies the speed factor. Throws ValidationError for missing audio,
/// a sample-rate mismatch, or a length that disagrees with the plan.
MixtureResult Render(const MixtureSpec &spec, const AudioLookup &lookup);

/// Mixture id for the index-th mixture of a batch.
std::string MixtureId(std::size_t index);

/// Samples and renders count mixtures. Mixture i uses stream i of
/// config.seed, so the output is independent of jobs.
std::vector<MixtureResult> SimulateBatch(std::span<const PoolSource> pool,
                                         const SimConfig &config, std::size_t count,
                                         const AudioLookup &lookup, int jobs = 1);

}  // namespace sotkit

#endif  // SOTKIT_MIXSIM_H_
