// src/jsonl.cc

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

#include "sotkit/jsonl.h"

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "sotkit/wav.h"

namespace sotkit {

std::vector<JsonRecord> ParseJsonl(std::istream &is, const std::string &name) {
  std::vector<JsonRecord> out;
  std::string line;
  std::size_t lineno = 0;
  bool first = true;
  while (std::getline(is, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    const std::string where = name + ":" + std::to_string(lineno);
    Json value;
    try {
      value = Json::parse(line);
    } catch (const Json::parse_error &e) {
      throw ValidationError(where + ": invalid JSON (" + e.what() + ")");
    }
    if (!value.is_object()) throw ValidationError(where + ": expected a JSON object");
    if (value.contains("_format")) {
      if (!first || value.size() != 1)
        throw ValidationError(where + ": format header must be the first line on its own");
      if (value["_format"] != kFormatVersion)
        throw ValidationError(where + ": unsupported format " + value["_format"].dump() +
                              ", expected \"" + std::string(kFormatVersion) + "\"");
      first = false;
      continue;
    }
    first = false;
    out.push_back({std::move(value), where});
  }
  return out;
}

std::vector<JsonRecord> ReadJsonl(const std::string &path) {
  std::ifstream is(path);
  if (!is) throw IoError("cannot open " + path);
  return ParseJsonl(is, path);
}

Json FormatHeader() { return Json{{"_format", kFormatVersion}}; }

void WriteJsonl(std::ostream &os, std::span<const Json> records) {
  os << FormatHeader().dump() << '\n';
  for (const Json &r : records) os << r.dump() << '\n';
}

void WriteJsonlFile(const std::string &path, std::span<const Json> records) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw IoError("cannot open " + path + " for writing");
  WriteJsonl(os, records);
  if (!os) throw IoError("write failed: " + path);
}

std::string GetString(const JsonRecord &r, const char *key) {
  auto it = r.value.find(key);
  if (it == r.value.end() || !it->is_string())
    throw ValidationError(r.where + ": missing or non-string field \"" + key + "\"");
  return it->get<std::string>();
}

double GetNumber(const JsonRecord &r, const char *key) {
  auto it = r.value.find(key);
  if (it == r.value.end() || !it->is_number())
    throw ValidationError(r.where + ": missing or non-numeric field \"" + key + "\"");
  return it->get<double>();
}

namespace {

std::vector<std::string> GetStringArray(const JsonRecord &r, const char *key) {
  auto it = r.value.find(key);
  if (it == r.value.end() || !it->is_array())
    throw ValidationError(r.where + ": missing or non-array field \"" + key + "\"");
  std::vector<std::string> out;
  for (const Json &v : *it) {
    if (!v.is_string())
      throw ValidationError(r.where + ": field \"" + key + "\" must hold strings");
    out.push_back(v.get<std::string>());
  }
  return out;
}

Json BucketToJson(const StatsBucket &b) {
  return Json{{"num_segments", b.num_segments},
              {"average_duration_s", b.average_duration_s()},
              {"total_duration_hr", b.total_duration_hr()},
              {"num_words", b.num_words}};
}

Json CountsToJson(const ErrorCounts &c) {
  return Json{{"sub", c.substitutions},
              {"ins", c.insertions},
              {"del", c.deletions},
              {"ref_words", c.ref_words},
              {"wer_pct", RoundedWerPercent(c.Errors(), c.ref_words)}};
}

}  // namespace

Utterance UtteranceFromJson(const JsonRecord &r) {
  Utterance u;
  u.session_id = GetString(r, "session_id");
  u.utterance_id = GetString(r, "utterance_id");
  u.speaker = GetString(r, "speaker");
  u.start = SecondsToMillis(GetNumber(r, "start_s"));
  u.end = SecondsToMillis(GetNumber(r, "end_s"));
  u.text = SplitWords(GetString(r, "text"));
  if (auto it = r.value.find("no_transcript"); it != r.value.end()) {
    if (!it->is_boolean())
      throw ValidationError(r.where + ": field \"no_transcript\" must be a boolean");
    u.no_transcript = it->get<bool>();
  }
  return u;
}

Json UtteranceToJson(const Utterance &u) {
  Json j{{"session_id", u.session_id}, {"utterance_id", u.utterance_id},
         {"speaker", u.speaker},       {"start_s", u.start_s()},
         {"end_s", u.end_s()},         {"text", JoinWords(u.text)}};
  if (u.no_transcript) j["no_transcript"] = true;
  return j;
}

std::vector<Session> SessionsFromRecords(std::span<const JsonRecord> records) {
  std::map<std::string, Session> by_id;
  for (const JsonRecord &r : records) {
    Utterance u = UtteranceFromJson(r);
    Session &s = by_id[u.session_id];
    s.session_id = u.session_id;
    s.utterances.push_back(std::move(u));
  }
  std::vector<Session> out;
  for (auto &kv : by_id) out.push_back(std::move(kv.second));
  return out;
}

Json GroupToJson(const UtteranceGroup &g) {
  Json ids = Json::array();
  for (const Utterance &u : g.utterances) ids.push_back(u.utterance_id);
  return Json{{"group_id", g.group_id},         {"session_id", g.session_id},
              {"span_start_s", g.span_start_s()}, {"span_end_s", g.span_end_s()},
              {"num_speakers", g.num_speakers}, {"utterance_ids", ids}};
}

GroupRecord GroupRecordFromJson(const JsonRecord &r) {
  GroupRecord g;
  g.group_id = GetString(r, "group_id");
  g.session_id = GetString(r, "session_id");
  g.utterance_ids = GetStringArray(r, "utterance_ids");
  g.where = r.where;
  if (g.utterance_ids.empty()) throw ValidationError(r.where + ": group has no utterances");
  return g;
}

std::vector<UtteranceGroup> AssembleGroups(std::span<const GroupRecord> records,
                                           std::span<const Session> sessions) {
  std::map<std::string, const Session *> session_index;
  for (const Session &s : sessions) session_index[s.session_id] = &s;
  std::set<std::string> group_ids;
  std::set<std::pair<std::string, std::string>> used;
  std::vector<UtteranceGroup> out;
  for (const GroupRecord &rec : records) {
    if (!group_ids.insert(rec.group_id).second)
      throw ValidationError(rec.where + ": duplicate group_id " + rec.group_id);
    auto sit = session_index.find(rec.session_id);
    if (sit == session_index.end())
      throw ValidationError(rec.where + ": unknown session " + rec.session_id);
    std::map<std::string, const Utterance *> utts;
    for (const Utterance &u : sit->second->utterances) utts[u.utterance_id] = &u;
    std::vector<Utterance> members;
    for (const std::string &id : rec.utterance_ids) {
      auto uit = utts.find(id);
      if (uit == utts.end())
        throw ValidationError(rec.where + ": unknown utterance " + id + " in group " +
                              rec.group_id);
      if (!used.insert({rec.session_id, id}).second)
        throw ValidationError(rec.where + ": utterance " + id +
                              " belongs to more than one group");
      members.push_back(*uit->second);
    }
    out.push_back(MakeGroup(rec.group_id, rec.session_id, std::move(members)));
  }
  return out;
}

std::vector<GroupHypothesis> GroupHypothesesFromRecords(std::span<const JsonRecord> records) {
  std::vector<GroupHypothesis> out;
  for (const JsonRecord &r : records) {
    GroupHypothesis h;
    h.group_id = GetString(r, "group_id");
    for (const std::string &text : GetStringArray(r, "texts")) {
      Tokens t = SplitWords(text);
      for (const std::string &w : t) {
        if (IsReservedToken(w))
          throw ValidationError(r.where + ": hypothesis text contains reserved token " + w +
                                " (decode SOT output first)");
      }
      h.channels.push_back(std::move(t));
    }
    out.push_back(std::move(h));
  }
  return out;
}

std::map<std::string, Tokens> UtteranceHypothesesFromRecords(std::span<const JsonRecord> records) {
  std::map<std::string, Tokens> out;
  for (const JsonRecord &r : records) {
    const std::string id = GetString(r, "utterance_id");
    if (!out.emplace(id, SplitWords(GetString(r, "text"))).second)
      throw ValidationError(r.where + ": duplicate hypothesis for utterance " + id);
  }
  return out;
}

std::vector<PoolSource> ReadPool(const std::string &path) {
  const std::filesystem::path base = std::filesystem::path(path).parent_path();
  std::vector<PoolSource> out;
  std::set<std::string> ids;
  for (const JsonRecord &r : ReadJsonl(path)) {
    PoolSource s;
    s.source_id = GetString(r, "source_id");
    s.speaker = GetString(r, "speaker");
    s.transcript = SplitWords(GetString(r, "transcript"));
    if (!ids.insert(s.source_id).second)
      throw ValidationError(r.where + ": duplicate source_id " + s.source_id);
    for (const std::string &w : s.transcript) {
      if (IsReservedToken(w))
        throw ValidationError(r.where + ": transcript contains reserved token " + w);
    }
    std::filesystem::path wav = GetString(r, "wav");
    if (wav.is_relative()) wav = base / wav;
    s.audio_path = wav.string();
    s.num_samples = static_cast<std::int64_t>(ReadWav(s.audio_path).size());
    out.push_back(std::move(s));
  }
  return out;
}

Json MixtureToJson(const MixtureResult &m, const std::string &wav_name) {
  Json entries = Json::array();
  for (const MixtureEntry &e : m.spec.entries) {
    entries.push_back(Json{{"source_id", e.source_id},
                           {"speaker", e.speaker},
                           {"offset_s", m.spec.OffsetSeconds(e)},
                           {"duration_s", m.spec.DurationSeconds(e)},
                           {"transcript", JoinWords(e.transcript)}});
  }
  return Json{{"mixture_id", m.spec.mixture_id}, {"wav", wav_name},
              {"speed_factor", m.spec.speed_factor}, {"num_speakers", m.num_speakers},
              {"entries", entries},                {"sot_text", m.sot_text}};
}

Json StatsToJson(const GroupStats &stats, const StatsBucket &utterances) {
  Json buckets = Json::array();
  for (const auto &[speakers, bucket] : stats.buckets) {
    Json b = BucketToJson(bucket);
    b["num_speakers"] = speakers;
    buckets.push_back(b);
  }
  return Json{{"utterance", BucketToJson(utterances)},
              {"utterance_group", Json{{"buckets", buckets}, {"total", BucketToJson(stats.total)}}}};
}

Json ReportToJson(const WerReport &report) {
  Json j = CountsToJson(report.counts);
  j["segments"] = report.segments;
  Json rows = Json::array();
  for (const SpeakerCountRow &row : report.by_num_speakers) {
    Json r = CountsToJson(row.counts);
    r["num_speakers"] = row.num_speakers;
    r["groups"] = row.groups;
    rows.push_back(r);
  }
  j["by_num_speakers"] = rows;
  Json confusion = Json::array();
  if (report.confusion) {
    for (int actual = 1; actual <= kMaxActualBucket; ++actual) {
      Json counts = Json::array(), percent = Json::array();
      for (int est = 0; est <= kMaxEstimatedBucket; ++est) {
        counts.push_back(report.confusion->counts[actual - 1][est]);
        percent.push_back(report.confusion->Percent(actual, est));
      }
      confusion.push_back(Json{{"actual", actual}, {"counts", counts}, {"percent", percent}});
    }
  }
  j["count_confusion"] = confusion;
  if (report.confusion) j["count_accuracy_pct"] = 100.0 * report.confusion->Accuracy();
  return j;
}

}  // namespace sotkit
