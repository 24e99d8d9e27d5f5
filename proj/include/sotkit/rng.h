// include/sotkit/rng.h

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

#ifndef SOTKIT_RNG_H_
#define SOTKIT_RNG_H_

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace sotkit {

// Versioned, splittable generator. The engine is std::mt19937_64 (whose
// output sequence is fixed by the standard); all conversions to integers and
// reals are done here rather than through <random> distributions, whose
// algorithms vary between standard libraries.
class Rng {
 public:
  static constexpr std::string_view kName = "sotkit-mt19937_64-v1";

  explicit Rng(std::uint64_t seed);

  /// Independent stream for a sub-task, a pure function of (seed, stream).
  static Rng ForStream(std::uint64_t seed, std::uint64_t stream);

  std::uint64_t NextU64() { return engine_(); }
  /// Uniform integer in [lo, hi] (inclusive), unbiased.
  std::int64_t UniformInt(std::int64_t lo, std::int64_t hi);
  /// Uniform real in [lo, hi) with 53 random bits.
  double UniformReal(double lo, double hi);

 private:
  std::mt19937_64 engine_;
};

std::uint64_t SplitMix64(std::uint64_t x);

/// One logged random draw: what it was for, its range, and its value.
struct Draw {
  std::string what;
  double lo = 0, hi = 0;
  double value = 0;
};

/// Rng wrapper that records every draw.
class TracedRng {
 public:
  explicit TracedRng(Rng &rng) : rng_(rng) {}

  std::int64_t UniformInt(std::string what, std::int64_t lo, std::int64_t hi);
  double UniformReal(std::string what, double lo, double hi);
  const std::vector<Draw> &trace() const { return trace_; }
  std::vector<Draw> TakeTrace() { return std::move(trace_); }

 private:
  Rng &rng_;
  std::vector<Draw> trace_;
};

}  // namespace sotkit

#endif  // SOTKIT_RNG_H_
