// Copyright 2026 The charnoise Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CHARNOISE_TOOLS_CHARNOISE_CLI_HPP_
#define CHARNOISE_TOOLS_CHARNOISE_CLI_HPP_

// Command-line front end. RunCli is the whole program minus main(), so
// tests can drive it in-process.
//
// Exit codes: 0 success, 1 data error, 2 usage or configuration error.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "CLI11.hpp"
#include "charnoise/composer.hpp"
#include "charnoise/dataset_io.hpp"
#include "charnoise/edit_engine.hpp"
#include "charnoise/error.hpp"
#include "charnoise/importers.hpp"
#include "charnoise/manifest.hpp"
#include "charnoise/metrics.hpp"
#include "charnoise/noiser.hpp"
#include "charnoise/parallel.hpp"
#include "charnoise/rational.hpp"
#include "charnoise/tokenizer.hpp"
#include "charnoise/word_model.hpp"

namespace charnoise::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDataError = 1;
inline constexpr int kExitUsage = 2;

namespace internal {

namespace fs = std::filesystem;

struct NoiseOptions {
  std::string in, out, audit, format;
  std::string level;
  std::string types = "insert,delete,replace,swap";
  std::string mix;
  std::string alphabet = "auto";
  std::string seed = "0";
  bool match_case = false;
  bool skip_bad = false;
  std::optional<int> jobs;
};

struct ComposeOptions {
  std::string in, out, audit, format;
  std::string mode;
  std::string level;
  std::string alphabet = "auto";
  std::string seed = "0";
  bool match_case = false;
  bool skip_bad = false;
  std::optional<int> jobs;
};

struct OverlapOptions {
  std::string source, target, vocab, format, out;
  bool lowercase = true;
  bool strip_accents = false;
  bool json = false;
  bool list_oov = false;
  bool skip_bad = false;
};

struct EpochOptions {
  std::int64_t copies = 0;
  std::int64_t reference_copies = 0;
  std::int64_t reference_epochs = 0;
};

struct StatsOptions {
  std::string audit, corpus, format, copies;
  bool json = false;
  bool skip_bad = false;
};

struct AlphabetOptions {
  std::string in, out, format;
  bool skip_bad = false;
};

struct ImportXsidOptions {
  std::string in, out;
};

struct ImportMorocoOptions {
  std::string samples, labels, dialects, out;
  std::string sep = "\t";
};

struct ImportTassOptions {
  std::string in, out;
  std::size_t text_col = 1;
  std::size_t label_col = 2;
  int id_col = 0;
  bool header = false;
  std::string sep = "\t";
};

struct ReplayOptions {
  std::string manifest;
  std::string keep;
};

inline Format ResolveFormat(const std::string& flag, const std::string& path) {
  return flag.empty() ? FormatFromPath(path) : ParseFormat(flag);
}

inline Alphabet ResolveAlphabet(const std::string& spec, const std::string& in, Format format,
                                bool skip_bad) {
  if (spec != "auto") return LoadAlphabet(spec);
  auto reader = RecordReader::Open(in, format, skip_bad);
  AlphabetDeriver deriver;
  while (auto row = reader.Next()) deriver.Add(row->record.text);
  return deriver.Finish();
}

inline nlohmann::ordered_json AlphabetJson(const std::string& spec, const Alphabet& alphabet) {
  return {{"source", spec}, {"letters", unicode::ToUtf8(alphabet.letters())}};
}

inline std::string LevelString(const Rational& level) {
  return FormatExact(level);
}

class AuditFile {
 public:
  explicit AuditFile(const std::string& path) {
    if (path.empty()) return;
    out_.open(path, std::ios::binary | std::ios::trunc);
    if (!out_) throw DataError("cannot create audit log " + path);
  }
  AuditSink sink() {
    if (!out_.is_open()) return {};
    return [this](const AuditEntry& e) { out_ << ToJson(e).dump() << '\n'; };
  }
  void Close() {
    if (!out_.is_open()) return;
    out_.close();
    if (!out_) throw DataError("writing audit log failed");
  }

 private:
  std::ofstream out_;
};

inline void SaveManifest(RunManifest& manifest, const std::string& primary_output,
                         std::ostream& err) {
  const auto path = ManifestPathFor(primary_output);
  manifest.Save(path);
  err << "manifest: " << path.string() << '\n';
}

inline void AddAlphabetInput(RunManifest& manifest, const std::string& spec) {
  if (spec != "auto" && !BuiltinAlphabet(spec)) manifest.AddInput("--alphabet", spec);
}

inline int RunNoise(const NoiseOptions& o, const std::vector<std::string>& args,
                    std::ostream& err) {
  const Format format = ResolveFormat(o.format, o.in);
  auto types = ParseEditTypes(o.types);
  const MixMode mix = o.mix.empty()
                          ? (types.size() == 1 ? MixMode::kSingleType : MixMode::kUniformMix)
                          : ParseMixMode(o.mix);
  const Rational level = ParseLevel(o.level);
  const std::uint64_t seed = ParseSeed(o.seed);
  const unsigned jobs = ResolveJobs(o.jobs);
  if (!fs::is_regular_file(o.in)) throw DataError("cannot open " + o.in);
  NoiseConfig config{level, types, mix, ResolveAlphabet(o.alphabet, o.in, format, o.skip_bad),
                     seed, o.match_case};
  config.Validate();

  auto reader = RecordReader::Open(o.in, format, o.skip_bad);
  auto writer = RecordWriter::Create(o.out, format);
  AuditFile audit(o.audit);
  const auto stats = StreamCopy(reader, writer, {0, config}, audit.sink(), jobs);
  writer.Flush();
  audit.Close();

  RunManifest manifest;
  manifest.command = "noise";
  manifest.args = args;
  manifest.seed = seed;
  nlohmann::ordered_json type_names = nlohmann::ordered_json::array();
  for (EditType t : config.types) type_names.push_back(ToString(t));
  manifest.config = {{"level", LevelString(level)},
                     {"level_pct", ToDouble(level * 100)},
                     {"types", type_names},
                     {"mix", ToString(mix)},
                     {"alphabet", AlphabetJson(o.alphabet, config.alphabet)},
                     {"match_case", o.match_case},
                     {"format", ToString(format)},
                     {"skip_bad", o.skip_bad},
                     {"stream_key", "copy=0,line=<0-based input line>"}};
  manifest.AddInput("--in", o.in);
  AddAlphabetInput(manifest, o.alphabet);
  manifest.AddOutput("--out", o.out);
  if (!o.audit.empty()) manifest.AddOutput("--audit", o.audit);
  SaveManifest(manifest, o.out, err);

  err << "noise: " << stats.rows << " rows, " << stats.noised_words << " words noised";
  if (stats.skipped > 0) err << ", " << stats.skipped << " malformed rows skipped";
  err << '\n';
  return kExitOk;
}

inline int RunCompose(const ComposeOptions& o, const std::vector<std::string>& args,
                      std::ostream& err) {
  const Format format = ResolveFormat(o.format, o.in);
  const CompositionMode mode = ParseCompositionMode(o.mode);
  const Rational level = ParseLevel(o.level);
  const std::uint64_t seed = ParseSeed(o.seed);
  const unsigned jobs = ResolveJobs(o.jobs);
  if (!fs::is_regular_file(o.in)) throw DataError("cannot open " + o.in);
  const Alphabet alphabet = ResolveAlphabet(o.alphabet, o.in, format, o.skip_bad);
  const auto plan = CompositionPlan::Make(mode, level, alphabet, seed, o.match_case);

  auto writer = RecordWriter::Create(o.out, format);
  AuditFile audit(o.audit);
  std::size_t rows = 0;
  std::size_t skipped = 0;
  std::size_t noised = 0;
  for (const auto& copy : plan.copies()) {
    auto reader = RecordReader::Open(o.in, format, o.skip_bad);
    const auto stats = StreamCopy(reader, writer, copy, audit.sink(), jobs);
    rows += stats.rows;
    skipped = stats.skipped;
    noised += stats.noised_words;
  }
  writer.Flush();
  audit.Close();

  RunManifest manifest;
  manifest.command = "compose";
  manifest.args = args;
  manifest.seed = seed;
  nlohmann::ordered_json copies = nlohmann::ordered_json::array();
  for (const auto& copy : plan.copies()) {
    nlohmann::ordered_json c = {{"copy", copy.copy_index}};
    if (!copy.noise) {
      c["noise"] = "verbatim";
    } else {
      nlohmann::ordered_json types = nlohmann::ordered_json::array();
      for (EditType t : copy.noise->types) types.push_back(ToString(t));
      c["types"] = types;
      c["mix"] = ToString(copy.noise->mix);
    }
    copies.push_back(c);
  }
  manifest.config = {{"mode", ToString(mode)},
                     {"level", LevelString(level)},
                     {"level_pct", ToDouble(level * 100)},
                     {"alphabet", AlphabetJson(o.alphabet, alphabet)},
                     {"match_case", o.match_case},
                     {"format", ToString(format)},
                     {"skip_bad", o.skip_bad},
                     {"copies", copies}};
  manifest.AddInput("--in", o.in);
  AddAlphabetInput(manifest, o.alphabet);
  manifest.AddOutput("--out", o.out);
  if (!o.audit.empty()) manifest.AddOutput("--audit", o.audit);
  SaveManifest(manifest, o.out, err);

  err << "compose (" << ToString(mode) << "): " << plan.copies().size() << " copies, " << rows
      << " rows, " << noised << " words noised";
  if (skipped > 0) err << ", " << skipped << " malformed rows skipped per copy";
  err << '\n';
  return kExitOk;
}

inline VocabSet VocabSetFromFile(const std::string& path, Format format, const Vocab& vocab,
                                 NormalizationFlags flags, bool skip_bad) {
  auto reader = RecordReader::Open(path, format, skip_bad);
  VocabSet set{{}, path};
  while (auto row = reader.Next()) {
    TokenizeText(row->record.text, vocab, flags, [&](std::string token) {
      if (token != kUnknownToken) set.tokens.insert(std::move(token));
    });
  }
  return set;
}

inline int RunOverlap(const OverlapOptions& o, const std::vector<std::string>& args,
                      std::ostream& out, std::ostream& err) {
  const Vocab vocab = Vocab::Load(o.vocab);
  const NormalizationFlags flags{o.lowercase, o.strip_accents};
  const VocabSet source =
      VocabSetFromFile(o.source, ResolveFormat(o.format, o.source), vocab, flags, o.skip_bad);
  const VocabSet target =
      VocabSetFromFile(o.target, ResolveFormat(o.format, o.target), vocab, flags, o.skip_bad);
  if (source.empty()) err << "warning: source vocabulary set is empty\n";
  if (target.empty()) err << "warning: target vocabulary set is empty\n";
  const OverlapReport report = LexicalOverlap(source, target);
  const auto json = ToJson(report, o.list_oov);

  if (o.json) {
    out << json.dump() << '\n';
  } else {
    out << "source            " << o.source << '\n'
        << "target            " << o.target << '\n'
        << "|S|               " << report.source_size << '\n'
        << "|T|               " << report.target_size << '\n'
        << "|S & T|           " << report.intersection << '\n'
        << "lexical overlap   " << report.OverlapPercent() << "%\n"
        << "avg OOV length    "
        << (report.avg_oov_len ? FormatOneDecimal(*report.avg_oov_len) : std::string("N/A"))
        << '\n';
    if (o.list_oov) {
      out << "OOV tokens       ";
      for (const auto& t : report.oov_tokens) out << ' ' << t;
      out << '\n';
    }
  }

  if (!o.out.empty()) {
    {
      std::ofstream file(o.out, std::ios::binary | std::ios::trunc);
      if (!file) throw DataError("cannot create " + o.out);
      file << json.dump(2) << '\n';
    }
    RunManifest manifest;
    manifest.command = "overlap";
    manifest.args = args;
    manifest.config = {{"lowercase", o.lowercase},
                       {"strip_accents", o.strip_accents},
                       {"unknown_token_excluded", true},
                       {"oov_length_strips_continuation_marker", true}};
    manifest.AddInput("--source", o.source);
    manifest.AddInput("--target", o.target);
    manifest.AddInput("--vocab", o.vocab);
    manifest.AddOutput("--out", o.out);
    SaveManifest(manifest, o.out, err);
  }
  return kExitOk;
}

inline int RunEpochs(const EpochOptions& o, std::ostream& out, std::ostream& err) {
  const Rational epochs = EqualPassEpochs(o.copies, o.reference_copies, o.reference_epochs);
  const std::int64_t rounded = std::max<std::int64_t>(1, RoundHalfUp(epochs));
  if (epochs.denominator() != 1 || rounded != epochs.numerator()) {
    err << "warning: " << FormatExact(epochs) << " epochs is not a whole number; using "
        << rounded << " (total passes " << rounded * o.copies << " instead of "
        << o.reference_copies * o.reference_epochs << ")\n";
  }
  out << "exact   " << FormatExact(epochs) << '\n' << "epochs  " << rounded << '\n';
  return kExitOk;
}

inline std::vector<std::uint64_t> ParseIndexList(const std::string& list) {
  std::vector<std::uint64_t> values;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) values.push_back(ParseSeed(item));
  }
  return values;
}

inline int RunStats(const StatsOptions& o, std::ostream& out) {
  std::vector<AuditEntry> audit;
  {
    std::ifstream in(o.audit, std::ios::binary);
    if (!in) throw DataError("cannot open audit log " + o.audit);
    std::string line;
    for (std::size_t index = 0; std::getline(in, line); ++index) {
      if (line.empty()) continue;
      try {
        audit.push_back(AuditEntryFromJson(nlohmann::json::parse(line)));
      } catch (const nlohmann::json::parse_error& e) {
        throw DataError(std::string("malformed audit JSON: ") + e.what(), index);
      }
    }
  }
  // Texts indexed by input line; skipped lines stay empty.
  std::vector<std::string> corpus;
  auto reader = RecordReader::Open(o.corpus, ResolveFormat(o.format, o.corpus), o.skip_bad);
  while (auto row = reader.Next()) {
    corpus.resize(row->line_index + 1);
    corpus[row->line_index] = std::move(row->record.text);
  }
  corpus.resize(reader.lines_read());
  std::optional<std::vector<std::uint64_t>> copies;
  if (!o.copies.empty()) copies = ParseIndexList(o.copies);
  const NoiseStats stats = ComputeNoiseStats(audit, corpus, copies);

  if (o.json) {
    out << ToJson(stats).dump(2) << '\n';
    return kExitOk;
  }
  auto row = [&](const std::string& name, const CopyNoiseStats& s) {
    out << std::left << std::setw(8) << name << std::right << std::setw(10) << s.eligible_words
        << std::setw(10) << s.noised_words << std::setw(9) << std::fixed << std::setprecision(4)
        << ToDouble(s.rate());
    for (EditType t : kAllEditTypes) out << std::setw(9) << ToDouble(s.share(t));
    out << '\n';
  };
  out << std::left << std::setw(8) << "copy" << std::right << std::setw(10) << "eligible"
      << std::setw(10) << "noised" << std::setw(9) << "rate";
  for (EditType t : kAllEditTypes) out << std::setw(9) << ToString(t);
  out << '\n';
  for (const auto& c : stats.copies) row(std::to_string(c.copy_index), c);
  row("total", stats.total);
  return kExitOk;
}

inline int RunAlphabet(const AlphabetOptions& o, std::ostream& out) {
  const Alphabet alphabet = ResolveAlphabet("auto", o.in, ResolveFormat(o.format, o.in), o.skip_bad);
  std::ostringstream text;
  text << "# derived from " << o.in << '\n';
  for (char32_t c : alphabet.letters()) text << unicode::ToUtf8(c) << '\n';
  if (o.out.empty()) {
    out << text.str();
  } else {
    std::ofstream file(o.out, std::ios::binary | std::ios::trunc);
    if (!file) throw DataError("cannot create " + o.out);
    file << text.str();
  }
  return kExitOk;
}

inline std::ifstream OpenInput(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open " + path);
  return in;
}

inline char SeparatorChar(const std::string& sep) {
  if (sep == "\\t" || sep == "tab") return '\t';
  if (sep.size() != 1) throw ConfigError("separator must be a single character");
  return sep.front();
}

inline int FinishImport(const std::string& command, const std::vector<std::string>& args,
                        const std::vector<std::pair<std::string, std::string>>& inputs,
                        const std::string& output, std::size_t records, std::ostream& err) {
  RunManifest manifest;
  manifest.command = command;
  manifest.args = args;
  for (const auto& [flag, path] : inputs) manifest.AddInput(flag, path);
  manifest.AddOutput("--out", output);
  SaveManifest(manifest, output, err);
  err << command << ": " << records << " records\n";
  return kExitOk;
}

int RunCliImpl(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

inline int RunReplay(const ReplayOptions& o, std::ostream& out, std::ostream& err) {
  const RunManifest manifest = RunManifest::Load(o.manifest);
  bool ok = true;
  for (const auto& input : manifest.inputs) {
    const std::string actual = Sha256File(input.path);
    if (actual != input.sha256) {
      out << "input changed  " << input.path << '\n';
      ok = false;
    }
  }
  if (!ok) return kExitDataError;

  const fs::path dir = o.keep.empty()
                           ? fs::temp_directory_path() /
                                 ("charnoise-replay-" + std::to_string(std::hash<std::string>{}(
                                                            o.manifest + manifest.command)))
                           : fs::path(o.keep);
  fs::create_directories(dir);
  std::vector<std::string> args{manifest.command};
  args.insert(args.end(), manifest.args.begin(), manifest.args.end());
  std::vector<std::pair<FileDigest, fs::path>> redirected;
  for (const auto& output : manifest.outputs) {
    const fs::path target = dir / (output.flag.substr(2) + "_" + fs::path(output.path).filename().string());
    bool replaced = false;
    for (std::size_t i = 1; i < args.size(); ++i) {
      if (args[i] == output.flag && i + 1 < args.size()) {
        args[i + 1] = target.string();
        replaced = true;
      } else if (args[i].rfind(output.flag + "=", 0) == 0) {
        args[i] = output.flag + "=" + target.string();
        replaced = true;
      }
    }
    if (!replaced) throw DataError("manifest args do not contain " + output.flag);
    redirected.emplace_back(output, target);
  }
  std::ostringstream sink;
  const int code = RunCliImpl(args, sink, err);
  if (code != kExitOk) return code;
  for (const auto& [output, path] : redirected) {
    const bool match = Sha256File(path) == output.sha256;
    out << (match ? "match     " : "MISMATCH  ") << output.path << '\n';
    ok = ok && match;
  }
  if (o.keep.empty()) fs::remove_all(dir);
  return ok ? kExitOk : kExitDataError;
}

inline int RunCliImpl(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"charnoise: character-level noise and lexical overlap diagnostics", "charnoise"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kToolVersion));

  auto add_jobs = [](CLI::App* cmd, std::optional<int>& jobs) {
    cmd->add_option("--jobs,-j", jobs, "worker threads (default: NOISE_JOBS or logical cores)");
  };

  NoiseOptions noise;
  auto* noise_cmd = app.add_subcommand("noise", "noise the text field of every record");
  noise_cmd->add_option("--in", noise.in, "input dataset")->required();
  noise_cmd->add_option("--out", noise.out, "output dataset")->required();
  noise_cmd->add_option("--level", noise.level, "probability per word: 0-1 or percent, e.g. 50%")
      ->required();
  noise_cmd->add_option("--types", noise.types, "comma-separated edit types")
      ->capture_default_str();
  noise_cmd->add_option("--mix", noise.mix,
                        "single or uniform (default: single for one type, else uniform)");
  noise_cmd->add_option("--alphabet", noise.alphabet,
                        "language (de en it es ro nl da), alphabet file, or auto")
      ->capture_default_str();
  noise_cmd->add_option("--seed", noise.seed, "64-bit seed")->capture_default_str();
  noise_cmd->add_option("--audit", noise.audit, "write the audit log (JSON lines)");
  noise_cmd->add_option("--format", noise.format, "tsv or jsonl (default: from extension)");
  noise_cmd->add_flag("--match-case", noise.match_case,
                      "upper-case inserted letters next to upper-case letters");
  noise_cmd->add_flag("--skip-bad", noise.skip_bad, "skip malformed rows instead of failing");
  add_jobs(noise_cmd, noise.jobs);

  ComposeOptions compose;
  auto* compose_cmd = app.add_subcommand("compose", "build a joint or stacked composition");
  compose_cmd->add_option("--mode", compose.mode, "joint or stacked")->required();
  compose_cmd->add_option("--level", compose.level, "noise level: 0-1 or percent")->required();
  compose_cmd->add_option("--in", compose.in, "input dataset")->required();
  compose_cmd->add_option("--out", compose.out, "output dataset")->required();
  compose_cmd->add_option("--alphabet", compose.alphabet, "language, alphabet file, or auto")
      ->capture_default_str();
  compose_cmd->add_option("--seed", compose.seed, "64-bit seed")->capture_default_str();
  compose_cmd->add_option("--audit", compose.audit, "write the merged audit log");
  compose_cmd->add_option("--format", compose.format, "tsv or jsonl");
  compose_cmd->add_flag("--match-case", compose.match_case, "case-match inserted letters");
  compose_cmd->add_flag("--skip-bad", compose.skip_bad, "skip malformed rows");
  add_jobs(compose_cmd, compose.jobs);

  OverlapOptions overlap;
  auto* overlap_cmd = app.add_subcommand("overlap", "lexical overlap and average OOV length");
  overlap_cmd->add_option("--source", overlap.source, "source fine-tuning data")->required();
  overlap_cmd->add_option("--target", overlap.target, "target test data")->required();
  overlap_cmd->add_option("--vocab", overlap.vocab, "vocabulary file, one piece per line")
      ->required();
  overlap_cmd->add_flag("--lowercase,!--no-lowercase", overlap.lowercase,
                        "case-fold before tokenizing (default on)");
  overlap_cmd->add_flag("--strip-accents", overlap.strip_accents, "remove combining marks");
  overlap_cmd->add_flag("--json", overlap.json, "print JSON instead of a table");
  overlap_cmd->add_flag("--list-oov", overlap.list_oov, "include the OOV token list");
  overlap_cmd->add_option("--out", overlap.out, "also write the JSON report (and manifest)");
  overlap_cmd->add_option("--format", overlap.format, "tsv or jsonl");
  overlap_cmd->add_flag("--skip-bad", overlap.skip_bad, "skip malformed rows");

  EpochOptions epochs;
  auto* epochs_cmd = app.add_subcommand("epochs", "epochs that keep total dataset passes equal");
  epochs_cmd->add_option("--copies", epochs.copies, "copies in the new dataset")->required();
  epochs_cmd->add_option("--reference-copies", epochs.reference_copies)->required();
  epochs_cmd->add_option("--reference-epochs", epochs.reference_epochs)->required();

  StatsOptions stats;
  auto* stats_cmd = app.add_subcommand("stats", "noise statistics from an audit log");
  stats_cmd->add_option("--audit", stats.audit, "audit log")->required();
  stats_cmd->add_option("--corpus", stats.corpus, "the original (un-noised) input")->required();
  stats_cmd->add_option("--copies", stats.copies, "copy indices to report, e.g. 1,2,3,4");
  stats_cmd->add_option("--format", stats.format, "tsv or jsonl");
  stats_cmd->add_flag("--json", stats.json, "print JSON");
  stats_cmd->add_flag("--skip-bad", stats.skip_bad, "skip malformed rows");

  AlphabetOptions alphabet;
  auto* alphabet_cmd = app.add_subcommand("alphabet", "derive an alphabet file from a corpus");
  alphabet_cmd->add_option("--in", alphabet.in, "input dataset")->required();
  alphabet_cmd->add_option("--out", alphabet.out, "alphabet file (default: stdout)");
  alphabet_cmd->add_option("--format", alphabet.format, "tsv or jsonl");
  alphabet_cmd->add_flag("--skip-bad", alphabet.skip_bad, "skip malformed rows");

  ImportXsidOptions xsid;
  auto* xsid_cmd = app.add_subcommand("import-xsid", "convert an xSID file to JSONL");
  xsid_cmd->add_option("--in", xsid.in)->required();
  xsid_cmd->add_option("--out", xsid.out)->required();

  ImportMorocoOptions moroco;
  auto* moroco_cmd = app.add_subcommand("import-moroco", "convert MOROCO dumps to JSONL");
  moroco_cmd->add_option("--samples", moroco.samples, "id<sep>text lines")->required();
  moroco_cmd->add_option("--labels", moroco.labels, "id<sep>label lines")->required();
  moroco_cmd->add_option("--dialects", moroco.dialects, "id<sep>dialect lines");
  moroco_cmd->add_option("--sep", moroco.sep, "field separator (tab, or one character)")
      ->capture_default_str();
  moroco_cmd->add_option("--out", moroco.out)->required();

  ImportTassOptions tass;
  auto* tass_cmd = app.add_subcommand("import-tass", "convert a TASS file to JSONL");
  tass_cmd->add_option("--in", tass.in)->required();
  tass_cmd->add_option("--out", tass.out)->required();
  tass_cmd->add_option("--text-col", tass.text_col, "0-based text column")->capture_default_str();
  tass_cmd->add_option("--label-col", tass.label_col, "0-based label column")
      ->capture_default_str();
  tass_cmd->add_option("--id-col", tass.id_col, "0-based id column, -1 for none")
      ->capture_default_str();
  tass_cmd->add_flag("--header", tass.header, "skip the first line");
  tass_cmd->add_option("--sep", tass.sep, "field separator")->capture_default_str();

  ReplayOptions replay;
  auto* replay_cmd = app.add_subcommand("replay", "re-run a manifest and compare output digests");
  replay_cmd->add_option("--manifest", replay.manifest)->required();
  replay_cmd->add_option("--keep", replay.keep, "keep replayed outputs in this directory");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*noise_cmd) return RunNoise(noise, {args.begin() + 1, args.end()}, err);
    if (*compose_cmd) return RunCompose(compose, {args.begin() + 1, args.end()}, err);
    if (*overlap_cmd) return RunOverlap(overlap, {args.begin() + 1, args.end()}, out, err);
    if (*epochs_cmd) return RunEpochs(epochs, out, err);
    if (*stats_cmd) return RunStats(stats, out);
    if (*alphabet_cmd) return RunAlphabet(alphabet, out);
    if (*xsid_cmd) {
      auto in = OpenInput(xsid.in);
      auto writer = RecordWriter::Create(xsid.out, Format::kJsonl);
      const auto summary = ImportXsid(in, writer);
      writer.Flush();
      return FinishImport("import-xsid", {args.begin() + 1, args.end()}, {{"--in", xsid.in}},
                          xsid.out, summary.records, err);
    }
    if (*moroco_cmd) {
      auto samples = OpenInput(moroco.samples);
      auto labels = OpenInput(moroco.labels);
      std::optional<std::ifstream> dialects;
      if (!moroco.dialects.empty()) dialects.emplace(OpenInput(moroco.dialects));
      auto writer = RecordWriter::Create(moroco.out, Format::kJsonl);
      const auto summary = ImportMoroco(samples, labels, dialects ? &*dialects : nullptr, writer,
                                        SeparatorChar(moroco.sep));
      writer.Flush();
      std::vector<std::pair<std::string, std::string>> inputs{{"--samples", moroco.samples},
                                                              {"--labels", moroco.labels}};
      if (dialects) inputs.emplace_back("--dialects", moroco.dialects);
      return FinishImport("import-moroco", {args.begin() + 1, args.end()}, inputs, moroco.out,
                          summary.records, err);
    }
    if (*tass_cmd) {
      auto in = OpenInput(tass.in);
      auto writer = RecordWriter::Create(tass.out, Format::kJsonl);
      TassColumns columns{tass.text_col, tass.label_col, std::nullopt, tass.header,
                          SeparatorChar(tass.sep)};
      if (tass.id_col >= 0) columns.id = static_cast<std::size_t>(tass.id_col);
      const auto summary = ImportTass(in, writer, columns);
      writer.Flush();
      return FinishImport("import-tass", {args.begin() + 1, args.end()}, {{"--in", tass.in}},
                          tass.out, summary.records, err);
    }
    if (*replay_cmd) return RunReplay(replay, out, err);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DataError& e) {
    err << "error: " << e.what() << '\n';
    return kExitDataError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitDataError;
  }
  return kExitUsage;
}

}  // namespace internal

// `args` excludes the program name.
inline int RunCli(const std::vector<std::string>& args, std::ostream& out = std::cout,
                  std::ostream& err = std::cerr) {
  return internal::RunCliImpl(args, out, err);
}

}  // namespace charnoise::cli

#endif  // CHARNOISE_TOOLS_CHARNOISE_CLI_HPP_
