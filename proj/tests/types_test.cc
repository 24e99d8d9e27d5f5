// tests/types_test.cc

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

#include <algorithm>
#include <random>

#include "doctest.h"
#include "sotkit/types.h"
#include "test_util.h"

using namespace sotkit;
using sotkit::testing::MakeSession;
using sotkit::testing::Utt;

TEST_CASE("valid single-utterance session") {
  CHECK(ValidateSession(MakeSession({Utt("u1", "A", 0.0, 1.0, "hello")})).empty());
}

TEST_CASE("zero-length utterance is one violation naming it") {
  auto v = ValidateSession(MakeSession({Utt("u1", "A", 1.0, 1.0, "hello")}));
  REQUIRE(v.size() == 1);
  CHECK(v[0].utterance_id == "u1");
  CHECK(v[0].rule == "non-positive-duration");
}

TEST_CASE("duplicate utterance id is one uniqueness violation") {
  auto v = ValidateSession(
      MakeSession({Utt("u1", "A", 0.0, 1.0, "a"), Utt("u1", "B", 2.0, 3.0, "b")}));
  REQUIRE(v.size() == 1);
  CHECK(v[0].rule == "duplicate-id");
  CHECK(v[0].utterance_id == "u1");
}

TEST_CASE("other invariant violations") {
  Utterance empty = Utt("u2", "A", 0.0, 1.0, "");
  Utterance flagged = empty;
  flagged.utterance_id = "u3";
  flagged.no_transcript = true;
  Utterance reserved = Utt("u4", "A", 0.0, 1.0, "a ⟨sc⟩ b");
  Utterance other_session = Utt("u5", "A", 0.0, 1.0, "x", "T");
  Utterance negative = Utt("u6", "A", -1.0, 1.0, "x");
  auto v = ValidateSession(MakeSession({empty, flagged, reserved, other_session, negative}));
  std::vector<std::string> rules;
  for (const auto &x : v) rules.push_back(x.utterance_id + ":" + x.rule);
  CHECK(rules == std::vector<std::string>{"u2:empty-text", "u4:reserved-token",
                                          "u5:session-mismatch", "u6:negative-start"});
  CHECK_THROWS_AS(RequireValidSession(MakeSession({empty})), ValidationError);
}

TEST_CASE("validation is idempotent and order independent") {
  std::mt19937 gen(3);
  std::vector<Utterance> utts = {Utt("a", "A", 0, 1, "x"), Utt("a", "B", 0, 1, "y"),
                                 Utt("b", "A", 2, 2, "z"), Utt("c", "C", 1, 3, ""),
                                 Utt("d", "D", 4, 5, "w")};
  const auto base = ValidateSession(MakeSession(utts));
  CHECK(base == ValidateSession(MakeSession(utts)));
  for (int i = 0; i < 20; ++i) {
    std::shuffle(utts.begin(), utts.end(), gen);
    CHECK(ValidateSession(MakeSession(utts)) == base);
  }
}

TEST_CASE("times round half-up to milliseconds") {
  CHECK(SecondsToMillis(1.0005).count() == 1001);
  CHECK(SecondsToMillis(1.0004).count() == 1000);
  CHECK(SecondsToMillis(0.0).count() == 0);
  CHECK(SecondsToMillis(12.3456).count() == 12346);
  CHECK(MillisToSeconds(Millis(2500)) == 2.5);
}

TEST_CASE("whitespace tokenization") {
  CHECK(SplitWords("  a\tb  c\n") == Tokens{"a", "b", "c"});
  CHECK(SplitWords("").empty());
  CHECK(JoinWords({"a", "b"}) == "a b");
}
