// src/rng.cc

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

#include "sotkit/rng.h"

#include <limits>
#include <stdexcept>

namespace sotkit {

std::uint64_t SplitMix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

Rng::Rng(std::uint64_t seed) : engine_(SplitMix64(seed)) {}

Rng Rng::ForStream(std::uint64_t seed, std::uint64_t stream) {
  return Rng(SplitMix64(seed) ^ SplitMix64(~stream));
}

std::int64_t Rng::UniformInt(std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw std::invalid_argument("UniformInt: empty range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(NextU64());  // full 64-bit range
  // Rejection sampling on the largest multiple of span.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t x;
  do {
    x = NextU64();
  } while (x >= limit);
  return lo + static_cast<std::int64_t>(x % span);
}

double Rng::UniformReal(double lo, double hi) {
  const double unit = static_cast<double>(NextU64() >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * unit;
}

std::int64_t TracedRng::UniformInt(std::string what, std::int64_t lo, std::int64_t hi) {
  const std::int64_t v = rng_.UniformInt(lo, hi);
  trace_.push_back({std::move(what), static_cast<double>(lo), static_cast<double>(hi),
                    static_cast<double>(v)});
  return v;
}

double TracedRng::UniformReal(std::string what, double lo, double hi) {
  const double v = rng_.UniformReal(lo, hi);
  trace_.push_back({std::move(what), lo, hi, v});
  return v;
}

}  // namespace sotkit
