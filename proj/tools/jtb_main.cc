// Copyright 2026 The jtypebench Authors.
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

// jtb: command-line entry point for the jtypebench toolkit.

#include <algorithm>
#include <atomic>
#include <fstream>
#include <iostream>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "jtb/config.h"
#include "jtb/generate.h"
#include "jtb/inference.h"
#include "jtb/java/parser.h"
#include "jtb/java/render.h"
#include "jtb/kb.h"
#include "jtb/leak.h"
#include "jtb/llm.h"
#include "jtb/random.h"
#include "jtb/scoring.h"
#include "jtb/snippet.h"
#include "jtb/transforms.h"

namespace jtb {
namespace {

using json = nlohmann::json;
namespace fs = std::filesystem;

constexpr int kOk = 0;
constexpr int kOperational = 1;
constexpr int kUsage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string ReadText(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

json ReadJson(const fs::path& path) {
  try {
    return json::parse(ReadText(path));
  } catch (const json::exception& e) {
    throw std::runtime_error("malformed JSON in " + path.string() + ": " +
                             e.what());
  }
}

void WriteJson(const fs::path& path, const json& j) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  out << j.dump(2) << "\n";
  if (!out) throw std::runtime_error("cannot write " + path.string());
}

// Runs fn(i) for i in [0, n) on up to `jobs` threads.
template <typename Fn>
void ParallelFor(size_t n, int jobs, Fn fn) {
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t i = next++; i < n; i = next++) fn(i);
  };
  size_t threads = std::min<size_t>(std::max(1, jobs), std::max<size_t>(1, n));
  std::vector<std::thread> pool;
  for (size_t t = 0; t + 1 < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
}

kb::KnowledgeBase RequireKb(const GlobalConfig& cfg) {
  if (cfg.kb.empty()) throw UsageError("a knowledge base is required (--kb)");
  return kb::LoadKb(cfg.kb);
}

// ---------------------------------------------------------------- options

struct Options {
  // global
  std::string config_path;
  GlobalConfig flags;
  std::vector<std::pair<CLI::Option*, void (*)(GlobalConfig&, const GlobalConfig&)>>
      global_opts;

  // parse
  std::vector<std::string> parse_files;
  bool parse_check = false;
  // transform
  std::string in_dir, out_dir, kind = "all";
  // generate
  std::vector<std::string> libraries;
  int per_library = 50, min_chain = 2, max_chain = 5;
  std::string corpus_name = "generated";
  // infer / llm-eval / constraints
  std::string out_file, in_file;
  bool dump = false;
  bool no_cache = false;
  // score
  std::string results, corpus, freq, buckets = "default";
  // stats
  std::string report_a, report_b, metric = "f1";
  // leak-scan
  std::string meta, names;
  uint64_t min_matches = 5;
  bool normalized = false;
  // freq
  std::string root, universe;
};

#define JTB_GLOBAL(flag, field, desc)                                      \
  o.global_opts.emplace_back(                                              \
      app.add_option(flag, o.flags.field, desc),                           \
      [](GlobalConfig& dst, const GlobalConfig& src) { dst.field = src.field; })

GlobalConfig ResolveConfig(const Options& o) {
  GlobalConfig cfg;
  if (!o.config_path.empty()) cfg.ApplyJson(ReadConfigFile(o.config_path));
  for (const auto& [opt, copy] : o.global_opts) {
    if (opt->count() > 0) copy(cfg, o.flags);
  }
  if (cfg.jobs <= 0) throw UsageError("jobs must be positive");
  return cfg;
}

// ---------------------------------------------------------------- commands

int CmdParse(const Options& o) {
  int status = kOk;
  for (const auto& file : o.parse_files) {
    try {
      java::CompilationUnit unit = java::Parse(ReadText(file));
      if (o.parse_check) {
        std::cout << file << ": ok\n";
      } else {
        std::cout << java::Render(unit);
      }
    } catch (const java::SyntaxError& e) {
      std::cerr << file << ": " << e.what() << "\n";
      status = kOperational;
    }
  }
  return status;
}

int CmdTransform(const Options& o, const GlobalConfig& cfg) {
  auto kind = transforms::ParseTransformKind(o.kind);
  if (!kind) throw UsageError("unknown transform kind '" + o.kind + "'");
  Corpus in = LoadCorpus(o.in_dir);
  Corpus out;
  out.name = in.name + "-" + std::string(transforms::TransformKindName(*kind));
  out.snippets.resize(in.snippets.size());
  std::vector<std::optional<transforms::RenameMap>> maps(in.snippets.size());
  std::vector<std::string> errors(in.snippets.size());
  ParallelFor(in.snippets.size(), cfg.jobs, [&](size_t i) {
    const Snippet& s = in.snippets[i];
    try {
      auto r = transforms::ApplyTransform(s, *kind,
                                          DeriveSeed(cfg.seed, "transform", s.id));
      out.snippets[i] = std::move(r.snippet);
      maps[i] = std::move(r.rename_map);
    } catch (const std::exception& e) {
      errors[i] = e.what();
    }
  });
  json failed = json::array();
  json rename_maps = json::object();
  std::vector<Snippet> kept;
  for (size_t i = 0; i < in.snippets.size(); ++i) {
    if (!errors[i].empty()) {
      failed.push_back({{"id", in.snippets[i].id}, {"error", errors[i]}});
      continue;
    }
    if (maps[i]) rename_maps[in.snippets[i].id] = maps[i]->ToJson();
    kept.push_back(std::move(out.snippets[i]));
  }
  out.snippets = std::move(kept);
  SaveCorpus(out, o.out_dir);
  if (!rename_maps.empty()) WriteJson(fs::path(o.out_dir) / "rename_maps.json", rename_maps);
  json report = {{"metadata", ReportMetadata("transform", cfg, {{"corpus", o.in_dir}})},
                 {"transform", transforms::TransformKindName(*kind)},
                 {"snippets", out.snippets.size()},
                 {"failed", failed}};
  WriteJson(fs::path(o.out_dir) / "transform_report.json", report);
  std::cerr << "transformed " << out.snippets.size() << " snippet(s) ("
            << o.kind << ")";
  if (!failed.empty()) std::cerr << ", " << failed.size() << " failed";
  std::cerr << "\n";
  return failed.empty() ? kOk : kOperational;
}

int CmdGenerate(const Options& o, const GlobalConfig& cfg) {
  kb::KnowledgeBase base = RequireKb(cfg);
  gen::GenConfig gc;
  gc.libraries = o.libraries;
  if (gc.libraries.empty()) {
    for (const auto& lib : base.Libraries()) gc.libraries.push_back(lib);
  }
  gc.snippets_per_library = o.per_library;
  gc.min_chain = o.min_chain;
  gc.max_chain = o.max_chain;
  gc.seed = cfg.seed;
  gc.corpus_name = o.corpus_name;
  try {
    gc.Validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  auto generated = gen::GenerateCorpus(base, gc);
  Corpus corpus = gen::ToCorpus(generated, gc.corpus_name);
  SaveCorpus(corpus, o.out_dir);
  json provenance = json::object();
  for (const auto& g : generated) {
    json uses = json::array();
    for (const auto& u : g.provenance) uses.push_back(u.ToString());
    provenance[g.snippet.id] = uses;
  }
  WriteJson(fs::path(o.out_dir) / "provenance.json", provenance);
  json counts = json::object();
  for (const auto& [lib, n] : corpus.LibraryCounts()) counts[lib] = n;
  WriteJson(fs::path(o.out_dir) / "generate_report.json",
            {{"metadata", ReportMetadata("generate", cfg, {{"kb", cfg.kb}})},
             {"libraries", counts},
             {"snippets", corpus.snippets.size()}});
  std::cerr << "generated " << corpus.snippets.size() << " snippet(s) in "
            << o.out_dir << "\n";
  return kOk;
}

std::string ImportLines(const ImportSet& set) {
  std::string out;
  for (const auto& f : set) out += "import " + f.str() + ";\n";
  return out;
}

int CmdInfer(const Options& o, const GlobalConfig& cfg) {
  kb::KnowledgeBase base = RequireKb(cfg);
  Corpus corpus = LoadCorpus(o.in_dir);
  std::vector<llm::InferenceResult> results(corpus.snippets.size());
  std::vector<json> details(corpus.snippets.size());
  ParallelFor(corpus.snippets.size(), cfg.jobs, [&](size_t i) {
    const Snippet& s = corpus.snippets[i];
    llm::InferenceResult& r = results[i];
    r.id = s.id;
    auto start = std::chrono::steady_clock::now();
    try {
      infer::Inference inf = infer::Infer(s, base);
      r.parsed = inf.imports;
      r.raw = ImportLines(inf.imports);
      details[i] = {{"id", s.id},
                    {"unresolved", inf.unresolved},
                    {"unsatisfied", inf.unsatisfied},
                    {"solved", inf.assignment.solved}};
    } catch (const std::exception& e) {
      r.error_kind = llm::ErrorKind::kInference;
      r.error = e.what();
    }
    r.latency_ms = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  });
  std::sort(results.begin(), results.end(),
            [](const auto& a, const auto& b) { return a.id < b.id; });
  llm::SaveResults(results, o.out_file);
  size_t failures = std::count_if(results.begin(), results.end(),
                                  [](const auto& r) { return !r.ok(); });
  json detail_arr = json::array();
  for (auto& d : details) {
    if (!d.is_null()) detail_arr.push_back(std::move(d));
  }
  WriteJson(o.out_file + ".meta.json",
            {{"metadata", ReportMetadata("infer", cfg,
                                         {{"corpus", o.in_dir}, {"kb", cfg.kb}})},
             {"model", "constraint-solver"},
             {"snippets", results.size()},
             {"failures", failures},
             {"details", detail_arr}});
  std::cerr << "inferred " << results.size() << " snippet(s), " << failures
            << " failure(s)\n";
  return kOk;
}

int CmdConstraints(const Options& o, const GlobalConfig& cfg) {
  std::string text = ReadText(o.in_file);
  java::CompilationUnit unit = java::Parse(StripImports(text).source);
  infer::ConstraintSystem sys = infer::ExtractConstraints(unit);
  if (o.dump) {
    std::cout << sys.Dump();
  } else {
    std::cout << sys.tvs.size() << " type variable(s), "
              << sys.constraints.size() << " constraint(s)\n";
  }
  if (!cfg.kb.empty()) {
    kb::KnowledgeBase base = kb::LoadKb(cfg.kb);
    infer::Assignment a = infer::Solve(sys, base);
    std::cout << "solution:\n";
    for (size_t i = 0; i < sys.tvs.size(); ++i) {
      std::cout << "t" << i << " = " << a.values[i].value_or("?") << "\n";
    }
  }
  return kOk;
}

int CmdLlmEval(const Options& o, const GlobalConfig& cfg) {
  if (cfg.model.empty()) throw UsageError("--model is required");
  llm::RunConfig rc;
  rc.endpoint = cfg.endpoint;
  rc.model = cfg.model;
  rc.temperature = cfg.temperature;
  rc.seed = static_cast<int64_t>(cfg.seed);
  rc.max_retries = cfg.max_retries;
  rc.timeout_ms = cfg.timeout_ms;
  rc.parallelism = cfg.jobs;
  rc.api_key_env = cfg.api_key_env;
  if (!o.no_cache) rc.cache_dir = cfg.cache_dir;
  try {
    rc.Validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  Corpus corpus = LoadCorpus(o.in_dir);
  llm::EvalStats stats;
  auto results = llm::RunEval(corpus, rc, &stats);
  llm::SaveResults(results, o.out_file);
  WriteJson(o.out_file + ".meta.json",
            {{"metadata", ReportMetadata("llm-eval", cfg, {{"corpus", o.in_dir}})},
             {"model", cfg.model},
             {"snippets", results.size()},
             {"failures", stats.failures},
             {"network_calls", stats.network_calls},
             {"cache_hits", stats.cache_hits}});
  std::cerr << "queried " << results.size() << " snippet(s): "
            << stats.cache_hits << " cached, " << stats.network_calls
            << " request(s), " << stats.failures << " failure(s)\n";
  return kOk;
}

int CmdScore(const Options& o, const GlobalConfig& cfg) {
  Corpus corpus = LoadCorpus(o.corpus);
  auto results = llm::LoadResults(o.results);
  std::map<std::string, ImportSet> inferred;
  size_t errors = 0;
  for (const auto& r : results) {
    if (!r.ok()) ++errors;
    inferred[r.id] = r.ok() ? r.parsed : ImportSet{};
  }
  std::vector<std::string> unknown;
  score::EvalReport report = score::ScoreRun(corpus, inferred, &unknown);
  std::map<std::string, fs::path> inputs = {{"results", o.results},
                                            {"corpus", o.corpus}};
  if (!o.freq.empty()) inputs["freq"] = o.freq;

  json meta_side;
  if (fs::exists(o.results + ".meta.json")) meta_side = ReadJson(o.results + ".meta.json");
  json transform_side;
  if (fs::exists(fs::path(o.corpus) / "transform_report.json")) {
    transform_side = ReadJson(fs::path(o.corpus) / "transform_report.json");
  }
  report.metadata = ReportMetadata("score", cfg, inputs);
  report.metadata["model"] = meta_side.is_object() ? meta_side.value("model", "unknown") : "unknown";
  report.metadata["corpus"] = corpus.name;
  report.metadata["transform"] =
      transform_side.is_object() ? transform_side.value("transform", "none") : "none";
  report.metadata["seed"] = cfg.seed;
  report.metadata["result_errors"] = errors;
  report.metadata["unknown_result_ids"] = unknown;

  json out = report.ToJson();
  if (!o.freq.empty()) {
    score::DocFreqTable table = score::DocFreqTable::FromJson(ReadJson(o.freq));
    score::BucketEdges edges;
    try {
      edges = score::ParseBucketEdges(o.buckets);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    score::BucketTable buckets = score::BucketRecall(report, table, edges);
    for (const auto& d : buckets.diagnostics) std::cerr << "note: " << d << "\n";
    out["buckets"] = buckets.ToJson();
  }
  WriteJson(o.out_file, out);
  auto fmt = [](const score::Ratio& r) {
    if (!r) return std::string("undefined");
    std::ostringstream s;
    s.precision(4);
    s << std::fixed << *r * 100 << "%";
    return s.str();
  };
  const auto& m = report.aggregate.micro;
  std::cout << "micro  P=" << fmt(m.precision) << " R=" << fmt(m.recall)
            << " F1=" << fmt(m.f1) << "  (" << report.scores.size()
            << " snippets)\n";
  return kOk;
}

int CmdWilcoxon(const Options& o, const GlobalConfig& cfg) {
  if (o.metric != "precision" && o.metric != "recall" && o.metric != "f1") {
    throw UsageError("--metric must be precision, recall or f1");
  }
  auto a = score::EvalReport::FromJson(ReadJson(o.report_a));
  auto b = score::EvalReport::FromJson(ReadJson(o.report_b));
  score::PairedSamples pairs = score::PairMetric(a, b, o.metric);
  score::WilcoxonResult w = score::WilcoxonSignedRank(pairs.before, pairs.after);
  score::Significance sig = score::Classify(w);
  json out = {{"metadata", ReportMetadata("stats wilcoxon", cfg,
                                          {{"a", o.report_a}, {"b", o.report_b}})},
              {"metric", o.metric},
              {"pairs", pairs.ids.size()},
              {"skipped_undefined", pairs.skipped_undefined},
              {"unmatched", pairs.unmatched},
              {"wilcoxon", w.ToJson()},
              {"significance", sig.Label()}};
  if (!o.out_file.empty()) WriteJson(o.out_file, out);
  std::cout << out.dump(2) << "\n";
  return kOk;
}

int CmdLeakScan(const Options& o, const GlobalConfig& cfg) {
  std::set<std::string> names = leak::LoadNames(o.names);
  leak::LeakReport report =
      leak::ScanFile(o.meta, names, leak::ScanOptions{.normalized = o.normalized});
  leak::Shortlist shortlist = leak::MakeShortlist(report, o.min_matches);
  json out = {{"metadata", ReportMetadata("leak-scan", cfg,
                                          {{"meta", o.meta}, {"names", o.names}})},
              {"normalized", o.normalized},
              {"report", report.ToJson()},
              {"shortlist", shortlist.ToJson()}};
  WriteJson(o.out_file, out);
  std::cout << report.total_matches << " match(es); " << shortlist.repos.size()
            << " repo(s) and " << shortlist.authors.size()
            << " author(s) with >= " << o.min_matches << "\n";
  for (const auto& r : shortlist.repos) {
    std::cout << "  " << r.name << " " << r.count << "\n";
  }
  if (report.malformed) {
    std::cerr << "skipped " << report.malformed << " malformed record(s)\n";
  }
  return kOk;
}

int CmdFreq(const Options& o, const GlobalConfig& cfg) {
  std::set<std::string> names;
  std::map<std::string, fs::path> inputs = {{"root", o.root}};
  if (!o.corpus.empty()) {
    Corpus corpus = LoadCorpus(o.corpus);
    for (const auto& s : corpus.snippets) {
      for (const auto& f : s.ground_truth) names.insert(f.str());
    }
    inputs["corpus"] = o.corpus;
  }
  if (!o.universe.empty()) {
    std::istringstream in(ReadText(o.universe));
    std::string line;
    while (std::getline(in, line)) {
      line.erase(line.find_last_not_of(" \t\r") + 1);
      line.erase(0, line.find_first_not_of(" \t"));
      if (line.empty() || line[0] == '#') continue;
      if (!Fqn::Parse(line)) throw std::runtime_error("bad fqn '" + line + "' in " + o.universe);
      names.insert(line);
    }
    inputs["universe"] = o.universe;
  }
  if (o.corpus.empty() && o.universe.empty()) {
    throw UsageError("freq needs --corpus or --universe");
  }
  std::vector<Fqn> universe;
  for (const auto& n : names) universe.emplace_back(n);
  score::DocFreqTable table = score::DocFreq(o.root, universe);
  json out = table.ToJson();
  out["metadata"] = ReportMetadata("freq", cfg, inputs);
  WriteJson(o.out_file, out);
  std::cerr << "scanned " << table.files_scanned << " file(s) for "
            << universe.size() << " type(s)";
  if (table.unreadable) std::cerr << "; " << table.unreadable << " unreadable";
  std::cerr << "\n";
  return kOk;
}

int Main(int argc, char** argv) {
  CLI::App app{"jtypebench: Java type-inference benchmarking toolkit", "jtb"};
  app.set_version_flag("--version", std::string(JTB_VERSION));
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--config", o.config_path, "Flat JSON config file")
      ->check(CLI::ExistingFile);
  JTB_GLOBAL("--seed", seed, "Root seed (also the model sampling seed)");
  JTB_GLOBAL("--jobs", jobs, "Parallelism bound");
  JTB_GLOBAL("--cache-dir", cache_dir, "LLM response cache directory");
  JTB_GLOBAL("--kb", kb, "Knowledge base (JSON Lines)");
  JTB_GLOBAL("--endpoint", endpoint, "Chat-completion endpoint URL");
  JTB_GLOBAL("--model", model, "Model id");
  JTB_GLOBAL("--temperature", temperature, "Sampling temperature");
  JTB_GLOBAL("--retries", max_retries, "Retries on transport errors");
  JTB_GLOBAL("--timeout-ms", timeout_ms, "Per-request timeout");
  JTB_GLOBAL("--api-key-env", api_key_env, "Environment variable with the API key");

  auto* parse = app.add_subcommand("parse", "Parse Java files and print them canonically");
  parse->add_option("files", o.parse_files, "Java source files")->required()
      ->check(CLI::ExistingFile);
  parse->add_flag("--check", o.parse_check, "Only report whether each file parses");

  auto* transform = app.add_subcommand("transform", "Apply a semantic-preserving transformation to a corpus");
  transform->add_option("--in", o.in_dir, "Input corpus directory")->required();
  transform->add_option("--out", o.out_dir, "Output corpus directory")->required();
  transform->add_option("--kind", o.kind, "rename | lower | comment | all")
      ->check(CLI::IsMember({"rename", "lower", "comment", "all"}));

  auto* generate = app.add_subcommand("generate", "Generate snippets from a knowledge base");
  generate->add_option("--out", o.out_dir, "Output corpus directory")->required();
  generate->add_option("--libraries", o.libraries, "Libraries (default: all in the KB)")
      ->delimiter(',');
  generate->add_option("--per-library", o.per_library, "Snippets per library");
  generate->add_option("--min-chain", o.min_chain, "Minimum API chain length");
  generate->add_option("--max-chain", o.max_chain, "Maximum API chain length");
  generate->add_option("--name", o.corpus_name, "Corpus name");

  auto* infer_cmd = app.add_subcommand("infer", "Infer imports with the constraint solver");
  infer_cmd->add_option("--in", o.in_dir, "Corpus directory")->required();
  infer_cmd->add_option("--out", o.out_file, "Results JSON")->required();

  auto* constraints = app.add_subcommand("constraints", "Show the constraint system of a snippet");
  constraints->add_option("--in", o.in_file, "Java source file")->required()
      ->check(CLI::ExistingFile);
  constraints->add_flag("--dump", o.dump, "Print every type variable and constraint");

  auto* llm_eval = app.add_subcommand("llm-eval", "Query a chat-completion model for every snippet");
  llm_eval->add_option("--in", o.in_dir, "Corpus directory")->required();
  llm_eval->add_option("--out", o.out_file, "Results JSON")->required();
  llm_eval->add_flag("--no-cache", o.no_cache, "Bypass the response cache");

  auto* score_cmd = app.add_subcommand("score", "Score results against corpus ground truth");
  score_cmd->add_option("--results", o.results, "Results JSON")->required()
      ->check(CLI::ExistingFile);
  score_cmd->add_option("--corpus", o.corpus, "Corpus directory")->required();
  score_cmd->add_option("--out", o.out_file, "Report JSON")->required();
  score_cmd->add_option("--freq", o.freq, "Document-frequency table (from `jtb freq`)")
      ->check(CLI::ExistingFile);
  score_cmd->add_option("--buckets", o.buckets, "'default' or comma-separated lower edges");

  auto* stats = app.add_subcommand("stats", "Statistical comparisons of reports");
  stats->require_subcommand(1);
  auto* wilcoxon = stats->add_subcommand("wilcoxon", "Wilcoxon signed-rank test between two reports");
  wilcoxon->add_option("--a", o.report_a, "Baseline report")->required()
      ->check(CLI::ExistingFile);
  wilcoxon->add_option("--b", o.report_b, "Comparison report")->required()
      ->check(CLI::ExistingFile);
  wilcoxon->add_option("--metric", o.metric, "precision | recall | f1");
  wilcoxon->add_option("--out", o.out_file, "Also write the result here");

  auto* leak_cmd = app.add_subcommand("leak-scan", "Match benchmark file names against corpus metadata");
  leak_cmd->add_option("--meta", o.meta, "Metadata (.jsonl or .csv)")->required()
      ->check(CLI::ExistingFile);
  leak_cmd->add_option("--names", o.names, "Basename list or corpus directory")->required()
      ->check(CLI::ExistingPath);
  leak_cmd->add_option("--min", o.min_matches, "Shortlist threshold");
  leak_cmd->add_option("--out", o.out_file, "Report JSON")->required();
  leak_cmd->add_flag("--normalized", o.normalized, "Case-fold and ignore numeric suffixes");

  auto* freq = app.add_subcommand("freq", "Document frequency of types over a source tree");
  freq->add_option("--root", o.root, "Source tree")->required()->check(CLI::ExistingDirectory);
  freq->add_option("--corpus", o.corpus, "Corpus whose ground truth is the type universe");
  freq->add_option("--universe", o.universe, "File with one FQN per line")
      ->check(CLI::ExistingFile);
  freq->add_option("--out", o.out_file, "Table JSON")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    GlobalConfig cfg = ResolveConfig(o);
    if (*parse) return CmdParse(o);
    if (*transform) return CmdTransform(o, cfg);
    if (*generate) return CmdGenerate(o, cfg);
    if (*infer_cmd) return CmdInfer(o, cfg);
    if (*constraints) return CmdConstraints(o, cfg);
    if (*llm_eval) return CmdLlmEval(o, cfg);
    if (*score_cmd) return CmdScore(o, cfg);
    if (*wilcoxon) return CmdWilcoxon(o, cfg);
    if (*leak_cmd) return CmdLeakScan(o, cfg);
    if (*freq) return CmdFreq(o, cfg);
  } catch (const UsageError& e) {
    std::cerr << "jtb: usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const ConfigError& e) {
    std::cerr << "jtb: config error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "jtb: error: " << e.what() << "\n";
    return kOperational;
  }
  return kUsage;
}

}  // namespace
}  // namespace jtb

int main(int argc, char** argv) { return jtb::Main(argc, argv); }
