// tests/jsonl_test.cc

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

#include <sstream>

#include "doctest.h"
#include "sotkit/jsonl.h"
#include "test_util.h"

using namespace sotkit;
using sotkit::testing::Utt;

namespace {

std::vector<JsonRecord> Parse(const std::string &text) {
  std::istringstream is(text);
  return ParseJsonl(is, "f.jsonl");
}

}  // namespace

TEST_CASE("jsonl parsing") {
  auto recs = Parse("{\"_format\":\"sotkit/1\"}\n\n{\"a\":1}\r\n{\"b\":2}\n");
  REQUIRE(recs.size() == 2);
  CHECK(recs[0].where == "f.jsonl:3");
  CHECK(recs[1].value["b"] == 2);
  CHECK(Parse("{\"a\":1}\n").size() == 1);

  CHECK_THROWS_WITH_AS(Parse("{\"_format\":\"other/2\"}\n"), doctest::Contains("unsupported format"),
                       ValidationError);
  CHECK_THROWS_WITH_AS(Parse("{\"a\":1}\n{bad\n"), doctest::Contains("f.jsonl:2"), ValidationError);
  CHECK_THROWS_AS(Parse("[1,2]\n"), ValidationError);
  CHECK_THROWS_AS(Parse("{\"a\":1}\n{\"_format\":\"sotkit/1\"}\n"), ValidationError);
  CHECK_THROWS_AS(ReadJsonl("/nonexistent/x.jsonl"), IoError);
}

TEST_CASE("written jsonl has a header and sorted keys") {
  std::ostringstream os;
  std::vector<Json> recs{Json{{"z", 1}, {"a", "x"}}};
  WriteJsonl(os, recs);
  CHECK(os.str() == "{\"_format\":\"sotkit/1\"}\n{\"a\":\"x\",\"z\":1}\n");
}

TEST_CASE("utterance records") {
  auto recs = Parse(
      R"({"session_id":"S","utterance_id":"u1","speaker":"A","start_s":0.1234,"end_s":1.5,"text":"hello  world"})"
      "\n"
      R"({"session_id":"S","utterance_id":"u2","speaker":"B","start_s":1,"end_s":2,"text":"","no_transcript":true})"
      "\n");
  Utterance u = UtteranceFromJson(recs[0]);
  CHECK(u.start.count() == 123);
  CHECK(u.end.count() == 1500);
  CHECK(u.text == Tokens{"hello", "world"});
  CHECK(UtteranceToJson(u)["text"] == "hello world");
  CHECK(UtteranceFromJson(recs[1]).no_transcript);
  auto sessions = SessionsFromRecords(recs);
  REQUIRE(sessions.size() == 1);
  CHECK(ValidateSession(sessions[0]).empty());

  auto bad = Parse(R"({"session_id":"S","utterance_id":"u1","speaker":"A","end_s":1,"text":"x"})");
  CHECK_THROWS_WITH_AS(UtteranceFromJson(bad[0]), doctest::Contains("start_s"), ValidationError);
}

TEST_CASE("group records resolve against sessions") {
  Session s;
  s.session_id = "S";
  s.utterances = {Utt("u1", "A", 0, 2, "a"), Utt("u2", "B", 1, 3, "b"), Utt("u3", "A", 5, 6, "c")};
  std::vector<Session> sessions{s};
  auto g = MakeGroup("S_0000", "S", {s.utterances[0], s.utterances[1]});
  Json j = GroupToJson(g);
  CHECK(j["num_speakers"] == 2);
  CHECK(j["span_end_s"] == 3.0);
  CHECK(j["utterance_ids"] == Json::array({"u1", "u2"}));

  GroupRecord rec = GroupRecordFromJson({j, "g:1"});
  auto groups = AssembleGroups(std::vector<GroupRecord>{rec}, sessions);
  REQUIRE(groups.size() == 1);
  CHECK(groups[0].span_end == g.span_end);

  GroupRecord unknown{"x", "S", {"u9"}, "g:2"};
  CHECK_THROWS_WITH_AS(AssembleGroups(std::vector<GroupRecord>{unknown}, sessions),
                       doctest::Contains("u9"), ValidationError);
  GroupRecord again{"y", "S", {"u1"}, "g:3"};
  CHECK_THROWS_AS(AssembleGroups(std::vector<GroupRecord>{rec, again}, sessions), ValidationError);
}

TEST_CASE("hypothesis records") {
  auto recs = Parse(R"({"group_id":"g","texts":["a b",""],"num_speakers":2})");
  auto hyps = GroupHypothesesFromRecords(recs);
  REQUIRE(hyps.size() == 1);
  CHECK(hyps[0].channels == std::vector<Tokens>{{"a", "b"}, {}});
  auto raw = Parse(R"({"group_id":"g","texts":["a ⟨sc⟩ b"]})");
  CHECK_THROWS_AS(GroupHypothesesFromRecords(raw), ValidationError);
  auto dup = Parse("{\"utterance_id\":\"u\",\"text\":\"a\"}\n{\"utterance_id\":\"u\",\"text\":\"b\"}\n");
  CHECK_THROWS_AS(UtteranceHypothesesFromRecords(dup), ValidationError);
}

TEST_CASE("report json shape") {
  WerReport r;
  r.counts = {1, 0, 0, 4};
  r.segments = 1;
  r.by_num_speakers.push_back({2, 1, r.counts});
  r.confusion = CountConfusion{};
  r.confusion->counts[1][2] = 1;
  Json j = ReportToJson(r);
  CHECK(j["wer_pct"] == 25.0);
  CHECK(j["sub"] == 1);
  CHECK(j["ref_words"] == 4);
  CHECK(j["by_num_speakers"][0]["num_speakers"] == 2);
  CHECK(j["count_confusion"].size() == 4);
  CHECK(j["count_confusion"][1]["percent"][2] == 100.0);
}
