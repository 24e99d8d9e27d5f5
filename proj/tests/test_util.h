// tests/test_util.h

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

#ifndef SOTKIT_TESTS_TEST_UTIL_H_
#define SOTKIT_TESTS_TEST_UTIL_H_

#include <string>

#include "sotkit/types.h"

namespace sotkit::testing {

inline Utterance Utt(std::string id, std::string speaker, double start, double end,
                     std::string text, std::string session = "S") {
  Utterance u;
  u.session_id = std::move(session);
  u.utterance_id = std::move(id);
  u.speaker = std::move(speaker);
  u.start = SecondsToMillis(start);
  u.end = SecondsToMillis(end);
  u.text = SplitWords(text);
  return u;
}

inline Session MakeSession(std::vector<Utterance> utts, std::string id = "S") {
  Session s;
  s.session_id = std::move(id);
  s.utterances = std::move(utts);
  return s;
}

}  // namespace sotkit::testing

#endif  // SOTKIT_TESTS_TEST_UTIL_H_
