// tests/mixsim_test.cc

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

#include <cmath>
#include <map>

#include "doctest.h"
#include "oracles.h"
#include "sotkit/audio.h"
#include "sotkit/mixsim.h"
#include "sotkit/rng.h"
#include "sotkit/sot.h"
#include "sotkit/wav.h"

using namespace sotkit;

namespace {

AudioBuffer Constant(std::size_t n, float value, int rate = 16000) {
  AudioBuffer a;
  a.sample_rate_hz = rate;
  a.samples.assign(n, value);
  return a;
}

std::vector<oracle::MixEntry> Public(const MixtureSpec &spec) {
  std::vector<oracle::MixEntry> out;
  for (const auto &e : spec.entries)
    out.push_back({e.speaker, spec.OffsetSeconds(e), spec.DurationSeconds(e)});
  return out;
}

std::vector<PoolSource> TwoSecondPool() {
  std::vector<PoolSource> pool;
  for (int i = 0; i < 6; ++i)
    pool.push_back({"s" + std::to_string(i), "spk" + std::to_string(i), {"w" + std::to_string(i)},
                    32000, ""});
  return pool;
}

}  // namespace

TEST_CASE("rng is deterministic and streams differ") {
  Rng a(42), b(42);
  for (int i = 0; i < 100; ++i) CHECK(a.NextU64() == b.NextU64());
  Rng s0 = Rng::ForStream(42, 0), s1 = Rng::ForStream(42, 1);
  CHECK(s0.NextU64() != s1.NextU64());
  Rng r(1);
  for (int i = 0; i < 1000; ++i) {
    const auto v = r.UniformInt(-2, 3);
    CHECK(v >= -2);
    CHECK(v <= 3);
    const double x = r.UniformReal(0.9, 1.1);
    CHECK(x >= 0.9);
    CHECK(x < 1.1);
  }
  CHECK(r.UniformInt(5, 5) == 5);
}

TEST_CASE("speed perturbation") {
  SUBCASE("identity") {
    AudioBuffer a;
    a.samples = {0.1f, -0.2f, 0.3f};
    CHECK(SpeedPerturb(a, 1.0).samples == a.samples);
  }
  SUBCASE("constant stays constant") {
    for (double f : {0.9, 0.95, 1.07, 1.1, 2.5}) {
      AudioBuffer out = SpeedPerturb(Constant(1000, 0.25f), f);
      for (float s : out.samples) CHECK(s == 0.25f);
    }
  }
  SUBCASE("ramp at factor 2") {
    AudioBuffer a;
    a.samples = {0, 1, 2, 3};
    // y[i] = x(i * 2): positions 0 and 2, length round(4 / 2).
    CHECK(SpeedPerturb(a, 2.0).samples == std::vector<float>{0, 2});
  }
  SUBCASE("ramp at factor 0.5 interpolates") {
    AudioBuffer a;
    a.samples = {0, 1, 2, 3};
    CHECK(SpeedPerturb(a, 0.5).samples == std::vector<float>{0, 0.5f, 1, 1.5f, 2, 2.5f, 3, 3});
  }
  SUBCASE("lengths") {
    CHECK(SpeedPerturb(Constant(16000, 0.f), 1.1).size() == 14545);
    CHECK(SpeedPerturb(Constant(16000, 0.f), 0.9).size() == 17778);
    for (std::size_t n : {1u, 7u, 1000u, 16001u})
      for (double f : {0.9, 1.0, 1.05, 1.1})
        CHECK(std::abs(static_cast<double>(SpeedPerturb(Constant(n, 0.f), f).size()) -
                       static_cast<double>(n) / f) <= 1.0);
  }
  SUBCASE("bad factor") {
    CHECK_THROWS_AS(SpeedPerturb(Constant(4, 0.f), 0.0), ValidationError);
    CHECK_THROWS_AS(SpeedPerturb(Constant(4, 0.f), -1.0), ValidationError);
  }
}

TEST_CASE("wav encode/decode") {
  CHECK(QuantizeSample(1.0f) == 32767);
  CHECK(QuantizeSample(-1.0f) == -32767);
  CHECK(QuantizeSample(2.0f) == 32767);
  CHECK(QuantizeSample(0.25f) == 8192);  // 8191.75
  CHECK(QuantizeSample(-0.25f) == -8192);
  AudioBuffer a;
  a.samples = {0.0f, 0.5f, -0.25f, 1.0f, -1.0f};
  const std::string bytes = EncodeWav(a);
  CHECK(bytes.size() == 44 + 10);
  AudioBuffer b = DecodeWav(bytes);
  CHECK(b.sample_rate_hz == 16000);
  REQUIRE(b.size() == a.size());
  // Decoding then re-encoding reproduces the bytes exactly.
  CHECK(EncodeWav(b) == bytes);
  CHECK_THROWS_AS(DecodeWav("not a wav"), IoError);
  std::string stereo = bytes;
  stereo[22] = 2;
  CHECK_THROWS_AS(DecodeWav(stereo), IoError);
}

TEST_CASE("mixture sampling") {
  SimConfig config;
  SUBCASE("single speaker") {
    config.max_speakers = 1;
    Rng rng(3);
    MixtureSpec spec = SampleSpec(TwoSecondPool(), config, rng);
    REQUIRE(spec.entries.size() == 1);
    CHECK(spec.entries[0].offset_samples == 0);
    CHECK(spec.speed_factor >= 0.9);
    CHECK(spec.speed_factor <= 1.1);
  }
  SUBCASE("two 2 s sources: second start in [0.5, 2.0)") {
    config.max_speakers = 2;
    const auto pool = TwoSecondPool();
    int twos = 0;
    for (std::uint64_t seed = 0; seed < 2000; ++seed) {
      Rng rng(seed);
      MixtureSpec spec = SampleSpec(pool, config, rng);
      REQUIRE(oracle::CheckMixture(Public(spec), 2, 0.5) == "");
      if (spec.entries.size() == 2) {
        ++twos;
        const double off = spec.OffsetSeconds(spec.entries[1]);
        CHECK(off >= 0.5);
        CHECK(off < 2.0);
      }
    }
    CHECK(twos > 800);
  }
  SUBCASE("pool of short clips is infeasible") {
    config.max_speakers = 2;
    std::vector<PoolSource> pool;
    for (int i = 0; i < 4; ++i)
      pool.push_back({"s" + std::to_string(i), "spk" + std::to_string(i), {"w"}, 6400, ""});
    int failures = 0;
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
      Rng rng(seed);
      try {
        MixtureSpec spec = SampleSpec(pool, config, rng);
        CHECK(spec.entries.size() == 1);
      } catch (const ValidationError &e) {
        CHECK(std::string(e.what()).find("infeasible pool") != std::string::npos);
        ++failures;
      }
    }
    CHECK(failures > 0);
  }
  SUBCASE("trace records every draw") {
    Rng rng(8);
    MixtureSpec spec = SampleSpec(TwoSecondPool(), config, rng);
    REQUIRE(!spec.seed_trace.empty());
    CHECK(spec.seed_trace.front().what == "num_speakers");
    CHECK(spec.seed_trace.back().what == "speed");
    CHECK(spec.seed_trace.back().value == spec.speed_factor);
  }
  SUBCASE("discrete speed") {
    config.speed_discrete = true;
    std::set<double> seen;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      Rng rng(seed);
      seen.insert(SampleSpec(TwoSecondPool(), config, rng).speed_factor);
    }
    CHECK(seen == std::set<double>{0.9, 1.0, 1.1});
  }
  SUBCASE("bad configuration") {
    config.min_start_gap_s = 0.0;
    Rng rng(1);
    CHECK_THROWS_AS(SampleSpec(TwoSecondPool(), config, rng), ValidationError);
  }
  SUBCASE("pool smaller than max speakers") {
    Rng rng(1);
    auto pool = TwoSecondPool();
    pool.resize(3);
    CHECK_THROWS_AS(SampleSpec(pool, config, rng), ValidationError);
  }
}

TEST_CASE("render") {
  std::map<std::string, AudioBuffer> audio;
  AudioLookup lookup = [&audio](const std::string &id) -> const AudioBuffer * {
    auto it = audio.find(id);
    return it == audio.end() ? nullptr : &it->second;
  };
  MixtureSpec spec;
  spec.mixture_id = "m";

  SUBCASE("single entry at speed 1 is the source") {
    AudioBuffer src;
    for (int i = 0; i < 100; ++i) src.samples.push_back(0.01f * static_cast<float>(i % 17) - 0.08f);
    audio["a"] = src;
    spec.entries = {{"a", "A", {"hi"}, 0, 100}};
    MixtureResult r = Render(spec, lookup);
    CHECK(r.audio.samples == src.samples);
    CHECK(r.sot_text == "hi " + std::string(kEndOfSequence));
    CHECK(r.num_speakers == 1);
  }
  SUBCASE("single entry matches speed perturbation of the source") {
    audio["a"] = Constant(1000, 0.3f);
    audio["a"].samples[10] = -0.7f;
    spec.entries = {{"a", "A", {"hi"}, 0, 1000}};
    spec.speed_factor = 1.07;
    CHECK(Render(spec, lookup).audio.samples == SpeedPerturb(audio["a"], 1.07).samples);
  }
  SUBCASE("overlap peak is renormalized") {
    audio["a"] = Constant(16000, 0.8f);
    audio["b"] = Constant(16000, 0.8f);
    spec.entries = {{"a", "A", {"x"}, 0, 16000}, {"b", "B", {"y", "z"}, 8000, 16000}};
    MixtureResult r = Render(spec, lookup);
    CHECK(r.audio.size() == 24000);
    CHECK(PeakAmplitude(r.audio) == 1.0f);
    CHECK(r.audio.samples[12000] == 1.0f);
    CHECK(r.audio.samples[0] == 0.5f);
    CHECK(r.sot_text == "x " + std::string(kSpeakerChange) + " y z " + std::string(kEndOfSequence));
  }
  SUBCASE("speed changes length, not labels") {
    audio["a"] = Constant(16000, 0.1f);
    spec.entries = {{"a", "A", {"x"}, 0, 16000}};
    spec.speed_factor = 1.1;
    MixtureResult r = Render(spec, lookup);
    CHECK(r.audio.size() == 14545);
    CHECK(r.sot_text == "x " + std::string(kEndOfSequence));
  }
  SUBCASE("errors") {
    spec.entries = {{"missing", "A", {"x"}, 0, 10}};
    try {
      Render(spec, lookup);
      FAIL("expected an error");
    } catch (const ValidationError &e) {
      CHECK(std::string(e.what()).find("missing") != std::string::npos);
    }
    audio["r8"] = Constant(10, 0.1f, 8000);
    spec.entries = {{"r8", "A", {"x"}, 0, 10}};
    CHECK_THROWS_AS(Render(spec, lookup), ValidationError);
  }
}

TEST_CASE("batch simulation is deterministic across job counts") {
  std::vector<PoolSource> pool;
  std::map<std::string, AudioBuffer> audio;
  for (int i = 0; i < 8; ++i) {
    const std::size_t n = 16000 + 4000 * static_cast<std::size_t>(i);
    AudioBuffer a;
    for (std::size_t k = 0; k < n; ++k)
      a.samples.push_back(0.3f * static_cast<float>(std::sin(0.01 * static_cast<double>(k * (i + 1)))));
    audio["s" + std::to_string(i)] = a;
    pool.push_back({"s" + std::to_string(i), "spk" + std::to_string(i % 6),
                    {"t" + std::to_string(i)}, static_cast<std::int64_t>(n), ""});
  }
  AudioLookup lookup = [&audio](const std::string &id) -> const AudioBuffer * {
    return &audio.at(id);
  };
  SimConfig config;
  config.seed = 77;
  auto one = SimulateBatch(pool, config, 12, lookup, 1);
  auto four = SimulateBatch(pool, config, 12, lookup, 4);
  REQUIRE(one.size() == 12);
  for (std::size_t i = 0; i < one.size(); ++i) {
    CHECK(one[i].spec.mixture_id == MixtureId(i));
    CHECK(EncodeWav(one[i].audio) == EncodeWav(four[i].audio));
    CHECK(one[i].sot_text == four[i].sot_text);
    CHECK(PeakAmplitude(one[i].audio) <= 1.0f);
    const double expected =
        std::round(static_cast<double>(one[i].spec.MixedLength()) / one[i].spec.speed_factor);
    CHECK(std::abs(static_cast<double>(one[i].audio.size()) - expected) <= 1.0);
    // Label tokens are the entry transcripts in offset order.
    DecodedChannels d = DeserializeText(one[i].sot_text);
    REQUIRE(d.channels.size() == one[i].spec.entries.size());
    for (std::size_t k = 0; k < d.channels.size(); ++k)
      CHECK(d.channels[k] == one[i].spec.entries[k].transcript);
  }
}
