// src/wav.cc

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

#include "sotkit/wav.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iterator>

namespace sotkit {

namespace {

void PutU16(std::string &out, std::uint16_t v) {
  out.push_back(static_cast<char>(v & 0xff));
  out.push_back(static_cast<char>((v >> 8) & 0xff));
}

void PutU32(std::string &out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

std::uint32_t GetU32(std::string_view b, std::size_t pos) {
  std::uint32_t v = 0;
  for (int i = 3; i >= 0; --i) v = (v << 8) | static_cast<unsigned char>(b[pos + i]);
  return v;
}

std::uint16_t GetU16(std::string_view b, std::size_t pos) {
  return static_cast<std::uint16_t>(static_cast<unsigned char>(b[pos]) |
                                    (static_cast<unsigned char>(b[pos + 1]) << 8));
}

}  // namespace

std::int16_t QuantizeSample(float x) {
  const double clamped = std::clamp(static_cast<double>(x), -1.0, 1.0);
  return static_cast<std::int16_t>(std::round(clamped * 32767.0));
}

std::string EncodeWav(const AudioBuffer &audio) {
  const std::uint32_t data_bytes = static_cast<std::uint32_t>(audio.samples.size() * 2);
  const std::uint32_t rate = static_cast<std::uint32_t>(audio.sample_rate_hz);
  std::string out;
  out.reserve(44 + data_bytes);
  out += "RIFF";
  PutU32(out, 36 + data_bytes);
  out += "WAVE";
  out += "fmt ";
  PutU32(out, 16);
  PutU16(out, 1);  // PCM
  PutU16(out, 1);  // mono
  PutU32(out, rate);
  PutU32(out, rate * 2);
  PutU16(out, 2);
  PutU16(out, 16);
  out += "data";
  PutU32(out, data_bytes);
  for (float s : audio.samples) PutU16(out, static_cast<std::uint16_t>(QuantizeSample(s)));
  return out;
}

AudioBuffer DecodeWav(std::string_view b, const std::string &name) {
  if (b.size() < 12 || b.substr(0, 4) != "RIFF" || b.substr(8, 4) != "WAVE")
    throw IoError(name + ": not a RIFF/WAVE file");
  AudioBuffer audio;
  bool have_fmt = false;
  std::size_t pos = 12;
  while (pos + 8 <= b.size()) {
    const std::string_view id = b.substr(pos, 4);
    const std::uint32_t size = GetU32(b, pos + 4);
    const std::size_t body = pos + 8;
    if (body + size > b.size()) throw IoError(name + ": truncated chunk '" + std::string(id) + "'");
    if (id == "fmt ") {
      if (size < 16) throw IoError(name + ": short fmt chunk");
      const std::uint16_t format = GetU16(b, body);
      const std::uint16_t channels = GetU16(b, body + 2);
      const std::uint16_t bits = GetU16(b, body + 14);
      if (format != 1 || channels != 1 || bits != 16)
        throw IoError(name + ": only mono 16-bit PCM is supported");
      audio.sample_rate_hz = static_cast<int>(GetU32(b, body + 4));
      have_fmt = true;
    } else if (id == "data") {
      if (!have_fmt) throw IoError(name + ": data chunk before fmt chunk");
      const std::size_t n = size / 2;
      audio.samples.resize(n);
      for (std::size_t i = 0; i < n; ++i) {
        const auto v = static_cast<std::int16_t>(GetU16(b, body + 2 * i));
        audio.samples[i] = std::max(-1.0f, static_cast<float>(v / 32767.0));
      }
      return audio;
    }
    pos = body + size + (size & 1);
  }
  throw IoError(name + ": no data chunk");
}

void WriteWav(const std::string &path, const AudioBuffer &audio) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw IoError("cannot open " + path + " for writing");
  const std::string bytes = EncodeWav(audio);
  os.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!os) throw IoError("write failed: " + path);
}

AudioBuffer ReadWav(const std::string &path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw IoError("cannot open " + path);
  const std::string bytes((std::istreambuf_iterator<char>(is)), std::istreambuf_iterator<char>());
  return DecodeWav(bytes, path);
}

}  // namespace sotkit
