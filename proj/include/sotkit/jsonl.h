// include/sotkit/jsonl.h

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

#ifndef SOTKIT_JSONL_H_
#define SOTKIT_JSONL_H_

#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "sotkit/grouping.h"
#include "sotkit/mixsim.h"
#include "sotkit/scoring.h"
#include "sotkit/types.h"

namespace sotkit {

using Json = nlohmann::json;

inline constexpr std::string_view kFormatVersion = "sotkit/1";

// JSONL files written by the toolkit start with {"_format":"sotkit/1"}.
// Readers accept files with or without that header; a header naming another
// format is rejected. Objects are written with sorted keys.

struct JsonRecord {
  Json value;
  std::string where;  // "path:line"
};

/// Throws IoError if the file cannot be read, ValidationError for malformed
/// lines or a foreign format header.
std::vector<JsonRecord> ReadJsonl(const std::string &path);
std::vector<JsonRecord> ParseJsonl(std::istream &is, const std::string &name);

Json FormatHeader();
void WriteJsonl(std::ostream &os, std::span<const Json> records);
void WriteJsonlFile(const std::string &path, std::span<const Json> records);

// Typed field access; errors name the record location.
std::string GetString(const JsonRecord &r, const char *key);
double GetNumber(const JsonRecord &r, const char *key);

// Utterances ------------------------------------------------------------

Utterance UtteranceFromJson(const JsonRecord &r);
Json UtteranceToJson(const Utterance &u);
/// Splits records into sessions ordered by session_id; utterances keep file
/// order. Does not validate the sessions.
std::vector<Session> SessionsFromRecords(std::span<const JsonRecord> records);

// Groups ------------------------------------------------------------------

struct GroupRecord {
  std::string group_id;
  std::string session_id;
  std::vector<std::string> utterance_ids;
  std::string where;
};

Json GroupToJson(const UtteranceGroup &g);
GroupRecord GroupRecordFromJson(const JsonRecord &r);
/// Resolves group records against sessions. Throws ValidationError for
/// unknown or repeated utterance ids and duplicate group ids.
std::vector<UtteranceGroup> AssembleGroups(std::span<const GroupRecord> records,
                                           std::span<const Session> sessions);

// Hypotheses ----------------------------------------------------------------

/// {"group_id","texts":[...]}; extra keys (such as num_speakers) are ignored.
std::vector<GroupHypothesis> GroupHypothesesFromRecords(std::span<const JsonRecord> records);
/// {"utterance_id","text"}
std::map<std::string, Tokens> UtteranceHypothesesFromRecords(std::span<const JsonRecord> records);

// Simulation ------------------------------------------------------------------

/// {"source_id","speaker","wav","transcript"}; wav is resolved relative to the
/// pool file's directory and read to obtain the source length.
std::vector<PoolSource> ReadPool(const std::string &path);
Json MixtureToJson(const MixtureResult &m, const std::string &wav_name);

// Reports ---------------------------------------------------------------------

Json StatsToJson(const GroupStats &stats, const StatsBucket &utterances);
Json ReportToJson(const WerReport &report);

}  // namespace sotkit

#endif  // SOTKIT_JSONL_H_
