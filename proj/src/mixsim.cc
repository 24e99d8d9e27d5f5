// src/mixsim.cc

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

#include "sotkit/mixsim.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>

#include "sotkit/audio.h"
#include "sotkit/parallel.h"
#include "sotkit/sot.h"

namespace sotkit {

void SimConfig::Validate() const {
  if (max_speakers < 1) throw ValidationError("max_speakers must be at least 1");
  if (!(min_start_gap_s > 0.0)) throw ValidationError("min_start_gap_s must be positive");
  if (!(speed_low > 0.0) || !(speed_low <= speed_high) || !std::isfinite(speed_high))
    throw ValidationError("speed range must satisfy 0 < low <= high");
  if (sample_rate_hz <= 0) throw ValidationError("sample_rate_hz must be positive");
  if (max_retries < 1) throw ValidationError("max_retries must be at least 1");
}

std::int64_t SimConfig::MinGapSamples() const {
  return static_cast<std::int64_t>(std::ceil(min_start_gap_s * sample_rate_hz - 1e-9));
}

double MixtureSpec::OffsetSeconds(const MixtureEntry &e) const {
  return static_cast<double>(e.offset_samples) / sample_rate_hz;
}

double MixtureSpec::DurationSeconds(const MixtureEntry &e) const {
  return static_cast<double>(e.num_samples) / sample_rate_hz;
}

std::int64_t MixtureSpec::MixedLength() const {
  std::int64_t len = 0;
  for (const MixtureEntry &e : entries) len = std::max(len, e.offset_samples + e.num_samples);
  return len;
}

namespace {

void CheckPool(std::span<const PoolSource> pool, const SimConfig &config) {
  std::set<std::string> speakers;
  for (const PoolSource &s : pool) {
    if (s.num_samples < 1)
      throw ValidationError("pool source " + s.source_id + " has no audio samples");
    speakers.insert(s.speaker);
  }
  if (pool.size() < static_cast<std::size_t>(config.max_speakers))
    throw ValidationError("pool has " + std::to_string(pool.size()) +
                          " sources, need at least max_speakers = " +
                          std::to_string(config.max_speakers));
  if (config.max_speakers >= 2 && speakers.size() < 2)
    throw ValidationError("pool must span at least 2 distinct speakers");
}

std::size_t DistinctSpeakers(std::span<const PoolSource> pool) {
  std::set<std::string> speakers;
  for (const PoolSource &s : pool) speakers.insert(s.speaker);
  return speakers.size();
}

}  // namespace

MixtureSpec SampleSpec(std::span<const PoolSource> pool, const SimConfig &config,
                       Rng &rng, std::string mixture_id) {
  config.Validate();
  CheckPool(pool, config);

  TracedRng traced(rng);
  MixtureSpec spec;
  spec.mixture_id = std::move(mixture_id);
  spec.sample_rate_hz = config.sample_rate_hz;

  const auto num_speakers =
      static_cast<std::size_t>(traced.UniformInt("num_speakers", 1, config.max_speakers));
  if (DistinctSpeakers(pool) < num_speakers)
    throw ValidationError("infeasible pool: " + std::to_string(num_speakers) +
                          " distinct speakers drawn but the pool has only " +
                          std::to_string(DistinctSpeakers(pool)));

  const std::int64_t gap = config.MinGapSamples();
  bool feasible = false;
  for (int attempt = 0; attempt < config.max_retries && !feasible; ++attempt) {
    spec.entries.clear();
    std::set<std::string> used;
    std::vector<std::size_t> candidates;
    for (std::size_t k = 0; k < num_speakers; ++k) {
      candidates.clear();
      for (std::size_t i = 0; i < pool.size(); ++i) {
        if (!used.count(pool[i].speaker)) candidates.push_back(i);
      }
      const auto pick = static_cast<std::size_t>(traced.UniformInt(
          "source", 0, static_cast<std::int64_t>(candidates.size()) - 1));
      const PoolSource &src = pool[candidates[pick]];
      used.insert(src.speaker);
      spec.entries.push_back({src.source_id, src.speaker, src.transcript, 0, src.num_samples});
    }

    // Each start lies at least one gap after the previous start and at least
    // one sample before the previous end, so every entry overlaps its
    // predecessor.
    feasible = true;
    for (std::size_t k = 1; k < spec.entries.size(); ++k) {
      const MixtureEntry &prev = spec.entries[k - 1];
      const std::int64_t lo = prev.offset_samples + gap;
      const std::int64_t hi = prev.offset_samples + prev.num_samples - 1;
      if (lo > hi) {
        feasible = false;
        break;
      }
      spec.entries[k].offset_samples = traced.UniformInt("offset", lo, hi);
    }
  }
  if (!feasible)
    throw ValidationError("infeasible pool: no draw of " + std::to_string(num_speakers) +
                          " sources satisfied the start-gap and overlap constraints after " +
                          std::to_string(config.max_retries) + " attempts");

  if (config.speed_discrete) {
    const double choices[3] = {config.speed_low, 0.5 * (config.speed_low + config.speed_high),
                               config.speed_high};
    spec.speed_factor = choices[traced.UniformInt("speed_index", 0, 2)];
  } else {
    spec.speed_factor = traced.UniformReal("speed", config.speed_low, config.speed_high);
  }
  spec.seed_trace = traced.TakeTrace();
  return spec;
}

MixtureResult Render(const MixtureSpec &spec, const AudioLookup &lookup) {
  const std::int64_t length = spec.MixedLength();
  std::vector<double> sum(static_cast<std::size_t>(length), 0.0);
  for (const MixtureEntry &e : spec.entries) {
    const AudioBuffer *src = lookup(e.source_id);
    if (src == nullptr) throw ValidationError("missing audio for source " + e.source_id);
    if (src->sample_rate_hz != spec.sample_rate_hz)
      throw ValidationError("source " + e.source_id + " has sample rate " +
                            std::to_string(src->sample_rate_hz) + ", expected " +
                            std::to_string(spec.sample_rate_hz));
    if (static_cast<std::int64_t>(src->size()) != e.num_samples)
      throw ValidationError("source " + e.source_id + " has " + std::to_string(src->size()) +
                            " samples, plan expects " + std::to_string(e.num_samples));
    for (std::size_t i = 0; i < src->size(); ++i)
      sum[static_cast<std::size_t>(e.offset_samples) + i] += src->samples[i];
  }

  double peak = 0.0;
  for (double s : sum) peak = std::max(peak, std::abs(s));
  AudioBuffer mixed;
  mixed.sample_rate_hz = spec.sample_rate_hz;
  mixed.samples.resize(sum.size());
  for (std::size_t i = 0; i < sum.size(); ++i)
    mixed.samples[i] = static_cast<float>(peak > 1.0 ? sum[i] / peak : sum[i]);

  MixtureResult result;
  result.audio = SpeedPerturb(mixed, spec.speed_factor);
  result.spec = spec;
  std::vector<Tokens> channels;
  for (const MixtureEntry &e : spec.entries) channels.push_back(e.transcript);
  result.sot_text = JoinWords(SerializeChannels(channels));
  result.num_speakers = static_cast<int>(spec.entries.size());
  return result;
}

std::string MixtureId(std::size_t index) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "mix_%06zu", index);
  return buf;
}

std::vector<MixtureResult> SimulateBatch(std::span<const PoolSource> pool,
                                         const SimConfig &config, std::size_t count,
                                         const AudioLookup &lookup, int jobs) {
  config.Validate();
  CheckPool(pool, config);
  std::vector<MixtureResult> out(count);
  ParallelFor(count, jobs, [&](std::size_t i) {
    Rng rng = Rng::ForStream(config.seed, i);
    out[i] = Render(SampleSpec(pool, config, rng, MixtureId(i)), lookup);
  });
  return out;
}

}  // namespace sotkit
