// src/cli.cc

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

#include "sotkit/cli.h"

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "sotkit/grouping.h"
#include "sotkit/jsonl.h"
#include "sotkit/mixsim.h"
#include "sotkit/parallel.h"
#include "sotkit/scoring.h"
#include "sotkit/sot.h"
#include "sotkit/wav.h"

namespace sotkit {

namespace {

namespace fs = std::filesystem;

enum class OutputFormat { kJson, kTable, kBoth };

const std::map<std::string, OutputFormat> kFormats = {
    {"json", OutputFormat::kJson}, {"table", OutputFormat::kTable}, {"both", OutputFormat::kBoth}};

void RequireInputFile(const std::string &path, const char *what) {
  if (path.empty()) throw ValidationError(std::string("missing --") + what);
  std::error_code ec;
  if (!fs::is_regular_file(path, ec)) throw IoError(std::string(what) + " file not found: " + path);
}

void RequireOutputPath(const std::string &path) {
  if (path.empty() || path == "-") return;
  const fs::path parent = fs::path(path).parent_path();
  std::error_code ec;
  if (!parent.empty() && !fs::is_directory(parent, ec))
    throw IoError("output directory does not exist: " + parent.string());
}

// Writes JSONL to a file, or to out for "-" or an empty path.
void EmitJsonl(const std::string &path, std::span<const Json> records, std::ostream &out) {
  if (path.empty() || path == "-") {
    WriteJsonl(out, records);
  } else {
    WriteJsonlFile(path, records);
  }
}

void PrintWarnings(std::ostream &err, const std::vector<std::string> &warnings,
                   const std::string &prefix = "") {
  for (const std::string &w : warnings) err << "warning: " << prefix << w << '\n';
}

std::vector<Session> LoadValidSessions(const std::string &path) {
  std::vector<JsonRecord> records = ReadJsonl(path);
  if (records.empty()) throw ValidationError(path + ": no utterances");
  std::vector<Session> sessions = SessionsFromRecords(records);
  for (const Session &s : sessions) RequireValidSession(s);
  return sessions;
}

std::vector<UtteranceGroup> LoadGroups(const std::string &groups_path,
                                       std::span<const Session> sessions) {
  std::vector<GroupRecord> records;
  for (const JsonRecord &r : ReadJsonl(groups_path)) records.push_back(GroupRecordFromJson(r));
  std::vector<UtteranceGroup> groups = AssembleGroups(records, sessions);
  std::sort(groups.begin(), groups.end(),
            [](const UtteranceGroup &a, const UtteranceGroup &b) { return a.group_id < b.group_id; });
  return groups;
}

std::string Fixed(double v, int digits) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(digits) << v;
  return os.str();
}

void PrintStatsRow(std::ostream &os, const std::string &label, const std::string &speakers,
                   const StatsBucket &b) {
  os << std::left << std::setw(17) << label << std::right << std::setw(10) << speakers
     << std::setw(12) << b.num_segments << std::setw(12) << Fixed(b.average_duration_s(), 1)
     << std::setw(12) << Fixed(b.total_duration_hr(), 3) << std::setw(12) << b.num_words << '\n';
}

void PrintStatsTable(std::ostream &os, const GroupStats &stats, const StatsBucket &utterances) {
  os << std::left << std::setw(17) << "segment" << std::right << std::setw(10) << "speakers"
     << std::setw(12) << "segments" << std::setw(12) << "avg dur(s)" << std::setw(12)
     << "total(hr)" << std::setw(12) << "words" << '\n';
  PrintStatsRow(os, "utterance", "1", utterances);
  bool first = true;
  for (const auto &[speakers, bucket] : stats.buckets) {
    PrintStatsRow(os, first ? "utterance group" : "", std::to_string(speakers), bucket);
    first = false;
  }
  PrintStatsRow(os, first ? "utterance group" : "", "total", stats.total);
}

void PrintReportTable(std::ostream &os, const WerReport &report) {
  const ErrorCounts &c = report.counts;
  os << "WER " << Fixed(report.WerPercent(), 1) << "% [ " << c.Errors() << " / " << c.ref_words
     << ", " << c.substitutions << " sub, " << c.insertions << " ins, " << c.deletions
     << " del ] over " << report.segments << " segments\n";
  if (!report.by_num_speakers.empty()) {
    os << '\n'
       << std::setw(9) << "speakers" << std::setw(9) << "groups" << std::setw(11) << "ref words"
       << std::setw(8) << "sub" << std::setw(8) << "ins" << std::setw(8) << "del"
       << std::setw(9) << "WER(%)" << '\n';
    for (const SpeakerCountRow &row : report.by_num_speakers) {
      const std::string label = row.num_speakers == kMaxActualBucket
                                    ? std::to_string(row.num_speakers) + "+"
                                    : std::to_string(row.num_speakers);
      os << std::setw(9) << label << std::setw(9) << row.groups << std::setw(11)
         << row.counts.ref_words << std::setw(8) << row.counts.substitutions << std::setw(8)
         << row.counts.insertions << std::setw(8) << row.counts.deletions << std::setw(9)
         << Fixed(RoundedWerPercent(row.counts.Errors(), row.counts.ref_words), 1) << '\n';
    }
  }
  if (report.confusion) {
    os << "\nspeaker counting (% of groups; rows actual, columns estimated)\n" << std::setw(9)
       << "actual";
    for (int e = 0; e <= kMaxEstimatedBucket; ++e)
      os << std::setw(8) << (e == kMaxEstimatedBucket ? ">=5" : std::to_string(e));
    os << '\n';
    for (int a = 1; a <= kMaxActualBucket; ++a) {
      if (report.confusion->RowTotal(a) == 0) continue;
      os << std::setw(9) << (a == kMaxActualBucket ? "4+" : std::to_string(a));
      for (int e = 0; e <= kMaxEstimatedBucket; ++e)
        os << std::setw(8) << Fixed(report.confusion->Percent(a, e), 1);
      os << '\n';
    }
    os << "accuracy " << Fixed(100.0 * report.confusion->Accuracy(), 1) << "%\n";
  }
}

void EmitReport(std::ostream &out, OutputFormat format, const Json &json,
                const std::function<void(std::ostream &)> &table) {
  if (format != OutputFormat::kJson) table(out);
  if (format == OutputFormat::kBoth) out << '\n';
  if (format != OutputFormat::kTable) out << json.dump(2) << '\n';
}

struct GroupArgs {
  std::string in, out = "-";
  int jobs = 1;
};

void RunGroup(const GroupArgs &a, std::ostream &out, std::ostream &err) {
  RequireInputFile(a.in, "in");
  RequireOutputPath(a.out);
  const std::vector<Session> sessions = LoadValidSessions(a.in);
  std::vector<std::vector<UtteranceGroup>> per_session(sessions.size());
  std::vector<Diagnostics> diags(sessions.size());
  ParallelFor(sessions.size(), a.jobs, [&](std::size_t i) {
    per_session[i] = BuildUtteranceGroups(sessions[i], &diags[i]);
  });
  std::vector<Json> records;
  for (std::size_t i = 0; i < sessions.size(); ++i) {
    PrintWarnings(err, diags[i].warnings);
    for (const UtteranceGroup &g : per_session[i]) records.push_back(GroupToJson(g));
  }
  std::sort(records.begin(), records.end(), [](const Json &x, const Json &y) {
    return x["group_id"].get<std::string>() < y["group_id"].get<std::string>();
  });
  EmitJsonl(a.out, records, out);
}

struct StatsArgs {
  std::string groups, utterances, format = "table";
};

void RunStats(const StatsArgs &a, std::ostream &out) {
  RequireInputFile(a.groups, "groups");
  RequireInputFile(a.utterances, "utterances");
  const std::vector<Session> sessions = LoadValidSessions(a.utterances);
  const std::vector<UtteranceGroup> groups = LoadGroups(a.groups, sessions);
  const GroupStats stats = ComputeGroupStats(groups);
  const StatsBucket utt = ComputeUtteranceStats(sessions);
  EmitReport(out, kFormats.at(a.format), StatsToJson(stats, utt),
             [&](std::ostream &os) { PrintStatsTable(os, stats, utt); });
}

struct SotEncodeArgs {
  std::string groups, utterances, mode = "speaker", out = "-";
};

void RunSotEncode(const SotEncodeArgs &a, std::ostream &out) {
  RequireInputFile(a.groups, "groups");
  RequireInputFile(a.utterances, "utterances");
  RequireOutputPath(a.out);
  const FifoMode mode = ParseFifoMode(a.mode);
  const std::vector<Session> sessions = LoadValidSessions(a.utterances);
  std::vector<Json> records;
  for (const UtteranceGroup &g : LoadGroups(a.groups, sessions)) {
    records.push_back(Json{{"group_id", g.group_id}, {"sot_text", SerializeFifo(g, mode).Text()}});
  }
  EmitJsonl(a.out, records, out);
}

struct SotDecodeArgs {
  std::string in, out = "-";
};

void RunSotDecode(const SotDecodeArgs &a, std::ostream &out, std::ostream &err) {
  RequireInputFile(a.in, "in");
  RequireOutputPath(a.out);
  std::vector<Json> records;
  std::set<std::string> seen;
  for (const JsonRecord &r : ReadJsonl(a.in)) {
    const std::string id = GetString(r, "group_id");
    if (!seen.insert(id).second) throw ValidationError(r.where + ": duplicate group_id " + id);
    const DecodedChannels d = DeserializeText(GetString(r, "sot_text"));
    PrintWarnings(err, d.warnings, r.where + ": group " + id + ": ");
    records.push_back(Json{{"group_id", id}, {"texts", d.Texts()}, {"num_speakers", d.speaker_count}});
  }
  std::sort(records.begin(), records.end(), [](const Json &x, const Json &y) {
    return x["group_id"].get<std::string>() < y["group_id"].get<std::string>();
  });
  EmitJsonl(a.out, records, out);
}

struct SimulateArgs {
  std::string pool, out_dir;
  std::size_t count = 0;
  std::uint64_t seed = 0;
  SimConfig config;
  int jobs = 1;
};

void RunSimulate(const SimulateArgs &a, std::ostream &err) {
  RequireInputFile(a.pool, "pool");
  if (a.out_dir.empty()) throw ValidationError("missing --out-dir");
  SimConfig config = a.config;
  config.seed = a.seed;
  config.Validate();

  const std::vector<PoolSource> pool = ReadPool(a.pool);
  std::map<std::string, AudioBuffer> audio;
  for (const PoolSource &s : pool) {
    AudioBuffer buf = ReadWav(s.audio_path);
    if (buf.sample_rate_hz != config.sample_rate_hz)
      throw ValidationError(s.audio_path + ": sample rate " + std::to_string(buf.sample_rate_hz) +
                            " does not match " + std::to_string(config.sample_rate_hz));
    audio.emplace(s.source_id, std::move(buf));
  }
  const AudioLookup lookup = [&audio](const std::string &id) -> const AudioBuffer * {
    auto it = audio.find(id);
    return it == audio.end() ? nullptr : &it->second;
  };

  std::error_code ec;
  fs::create_directories(a.out_dir, ec);
  if (ec) throw IoError("cannot create " + a.out_dir + ": " + ec.message());

  const std::vector<MixtureResult> mixtures = SimulateBatch(pool, config, a.count, lookup, a.jobs);
  std::vector<Json> records;
  for (const MixtureResult &m : mixtures) {
    const std::string wav = m.spec.mixture_id + ".wav";
    WriteWav((fs::path(a.out_dir) / wav).string(), m.audio);
    records.push_back(MixtureToJson(m, wav));
  }
  WriteJsonlFile((fs::path(a.out_dir) / "manifest.jsonl").string(), records);
  err << "wrote " << mixtures.size() << " mixtures to " << a.out_dir << '\n';
}

struct ScoreArgs {
  std::string mode = "group", refs, groups, hyps, format = "json", out;
  int jobs = 1;
};

void RunScore(const ScoreArgs &a, std::ostream &out, std::ostream &err) {
  RequireInputFile(a.refs, "refs");
  RequireInputFile(a.hyps, "hyps");
  if (a.mode == "group") RequireInputFile(a.groups, "groups");
  RequireOutputPath(a.out);
  const std::vector<Session> sessions = LoadValidSessions(a.refs);

  WerReport report;
  if (a.mode == "utterance") {
    report = ScoreUtteranceEval(sessions, UtteranceHypothesesFromRecords(ReadJsonl(a.hyps)));
  } else {
    const std::vector<UtteranceGroup> groups = LoadGroups(a.groups, sessions);
    std::map<std::string, GroupHypothesis> hyps;
    for (GroupHypothesis &h : GroupHypothesesFromRecords(ReadJsonl(a.hyps))) {
      const std::string id = h.group_id;
      if (!hyps.emplace(id, std::move(h)).second)
        throw ValidationError(a.hyps + ": duplicate hypothesis for group " + id);
    }
    std::set<std::string> known;
    for (const UtteranceGroup &g : groups) {
      known.insert(g.group_id);
      if (!hyps.count(g.group_id))
        throw ValidationError(a.hyps + ": missing hypothesis for group " + g.group_id);
      for (const Utterance &u : g.utterances) {
        if (u.no_transcript)
          throw ValidationError("group " + g.group_id + ": utterance " + u.utterance_id +
                                " has no transcript and cannot be scored");
      }
    }
    for (const auto &kv : hyps) {
      if (!known.count(kv.first))
        throw ValidationError(a.hyps + ": hypothesis for unknown group " + kv.first);
    }
    std::vector<GroupScore> scores(groups.size());
    ParallelFor(groups.size(), a.jobs, [&](std::size_t i) {
      scores[i] = ScoreGroup(ConcatRefs(groups[i]), hyps.at(groups[i].group_id));
    });
    report = Aggregate(scores);
  }
  PrintWarnings(err, report.warnings);

  const Json json = ReportToJson(report);
  if (!a.out.empty() && a.out != "-") {
    std::ofstream os(a.out);
    if (!os) throw IoError("cannot open " + a.out + " for writing");
    os << json.dump(2) << '\n';
  }
  EmitReport(out, kFormats.at(a.format), json,
             [&](std::ostream &os) { PrintReportTable(os, report); });
}

}  // namespace

int Run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  CLI::App app{"sotkit: utterance-group segmentation, SOT labels, mixture simulation and "
               "multi-talker WER scoring"};
  app.set_version_flag("--version", std::string("sotkit ") + kToolkitVersion + " (format " +
                                        std::string(kFormatVersion) + ")");
  app.set_config("--config", "", "Read options from a TOML/INI file");
  app.allow_config_extras(CLI::config_extras_mode::error);
  app.require_subcommand(1);
  const auto format_check = CLI::IsMember({"json", "table", "both"});

  GroupArgs group_args;
  CLI::App *group = app.add_subcommand("group", "Partition sessions into utterance groups");
  group->add_option("--in", group_args.in, "Utterance JSONL")->required();
  group->add_option("--out", group_args.out, "Group JSONL ('-' for stdout)");
  group->add_option("--jobs", group_args.jobs, "Worker threads")->check(CLI::PositiveNumber);

  StatsArgs stats_args;
  CLI::App *stats = app.add_subcommand("stats", "Segment statistics by speaker count");
  stats->add_option("--groups", stats_args.groups, "Group JSONL")->required();
  stats->add_option("--utterances", stats_args.utterances, "Utterance JSONL")->required();
  stats->add_option("--format", stats_args.format, "json | table | both")->check(format_check);

  CLI::App *sot = app.add_subcommand("sot", "Serialized output training labels");
  sot->require_subcommand(1);
  SotEncodeArgs enc_args;
  CLI::App *encode = sot->add_subcommand("encode", "Serialize groups into SOT text");
  encode->add_option("--groups", enc_args.groups, "Group JSONL")->required();
  encode->add_option("--utterances", enc_args.utterances, "Utterance JSONL")->required();
  encode->add_option("--mode", enc_args.mode, "speaker | utterance")
      ->check(CLI::IsMember({"speaker", "utterance"}));
  encode->add_option("--out", enc_args.out, "Output JSONL ('-' for stdout)");
  SotDecodeArgs dec_args;
  CLI::App *decode = sot->add_subcommand("decode", "Split SOT text into speaker channels");
  decode->add_option("--in", dec_args.in, "JSONL of {group_id, sot_text}")->required();
  decode->add_option("--out", dec_args.out, "Output JSONL ('-' for stdout)");

  SimulateArgs sim_args;
  CLI::App *simulate = app.add_subcommand("simulate", "Render overlapped multi-talker mixtures");
  simulate->add_option("--pool", sim_args.pool, "Source pool JSONL")->required();
  simulate->add_option("--out-dir", sim_args.out_dir, "Output directory")->required();
  simulate->add_option("--count", sim_args.count, "Number of mixtures")->required();
  simulate->add_option("--seed", sim_args.seed, "Random seed")->required();
  simulate->add_flag("--speed-discrete", sim_args.config.speed_discrete,
                     "Draw speed from {low, mid, high}");
  simulate->add_option("--max-speakers", sim_args.config.max_speakers)->check(CLI::PositiveNumber);
  simulate->add_option("--min-start-gap", sim_args.config.min_start_gap_s, "Seconds");
  simulate->add_option("--speed-low", sim_args.config.speed_low);
  simulate->add_option("--speed-high", sim_args.config.speed_high);
  simulate->add_option("--sample-rate", sim_args.config.sample_rate_hz)->check(CLI::PositiveNumber);
  simulate->add_option("--max-retries", sim_args.config.max_retries)->check(CLI::PositiveNumber);
  simulate->add_option("--jobs", sim_args.jobs, "Worker threads")->check(CLI::PositiveNumber);

  ScoreArgs score_args;
  CLI::App *score = app.add_subcommand("score", "Utterance or utterance-group WER");
  score->add_option("--mode", score_args.mode, "group | utterance")
      ->check(CLI::IsMember({"group", "utterance"}));
  score->add_option("--refs", score_args.refs, "Reference utterance JSONL")->required();
  score->add_option("--groups", score_args.groups, "Group JSONL (group mode)");
  score->add_option("--hyps", score_args.hyps, "Hypothesis JSONL")->required();
  score->add_option("--format", score_args.format, "json | table | both")->check(format_check);
  score->add_option("--out", score_args.out, "Also write the JSON report here");
  score->add_option("--jobs", score_args.jobs, "Worker threads")->check(CLI::PositiveNumber);

  std::vector<const char *> argv;
  for (const std::string &s : args) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitValidation;
  }

  try {
    if (group->parsed()) RunGroup(group_args, out, err);
    else if (stats->parsed()) RunStats(stats_args, out);
    else if (encode->parsed()) RunSotEncode(enc_args, out);
    else if (decode->parsed()) RunSotDecode(dec_args, out, err);
    else if (simulate->parsed()) RunSimulate(sim_args, err);
    else if (score->parsed()) RunScore(score_args, out, err);
  } catch (const IoError &e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const ValidationError &e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::exception &e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  }
  return kExitOk;
}

}  // namespace sotkit
