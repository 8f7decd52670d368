// simstring: dataset generation, feature extraction and evaluation runs.
#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "simstring/evaluation.hpp"
#include "simstring/features.hpp"
#include "simstring/pair_io.hpp"
#include "simstring/parallel.hpp"
#include "simstring/synth.hpp"
#include "simstring/table_io.hpp"
#include "simstring/text.hpp"
#include "simstring/timing.hpp"

#ifndef SIMSTRING_VERSION
#define SIMSTRING_VERSION "0.0.0"
#endif

namespace {

using namespace simstring;
using json = nlohmann::ordered_json;

enum ExitCode { kOk = 0, kRuntime = 1, kUsage = 2 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::uint64_t fnv1a(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::string readFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error(path + ": cannot open for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void writeFile(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error(path + ": cannot open for writing");
  out << content;
  out.flush();
  if (!out) throw std::runtime_error(path + ": write failed");
}

json fileEntry(const std::string& path) {
  const std::string bytes = readFile(path);
  char hex[17];
  std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(fnv1a(bytes)));
  return {{"path", path}, {"bytes", bytes.size()}, {"fnv1a64", hex}};
}

// One manifest per run, written next to the primary output.
class Manifest {
 public:
  Manifest(std::string command, const std::vector<std::string>& argv)
      : start_(std::chrono::steady_clock::now()) {
    doc_["tool"] = "simstring";
    doc_["version"] = SIMSTRING_VERSION;
    doc_["command"] = std::move(command);
    doc_["argv"] = argv;
    doc_["config"] = json::object();
    doc_["inputs"] = json::array();
    doc_["outputs"] = json::array();
  }

  json& config() { return doc_["config"]; }
  void seed(std::uint64_t s) { doc_["seed"] = s; }
  void input(const std::string& path) { doc_["inputs"].push_back(fileEntry(path)); }
  void output(const std::string& path) { doc_["outputs"].push_back(fileEntry(path)); }

  void write(const std::string& path) {
    doc_["wall_time_seconds"] =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    writeFile(path, doc_.dump(2) + "\n");
  }

 private:
  json doc_;
  std::chrono::steady_clock::time_point start_;
};

std::string manifestPath(const std::string& out) { return out + ".manifest.json"; }

std::string joinNames(std::span<const std::string_view> names) {
  std::string s;
  for (auto n : names) s += (s.empty() ? "" : ", ") + std::string(n);
  return s;
}

void requireGroup(const std::string& group) {
  const auto names = groupNames();
  if (std::find(names.begin(), names.end(), group) == names.end()) {
    throw UsageError("unknown group \"" + group + "\" (valid: " + joinNames(names) + ")");
  }
}

std::vector<std::string> splitList(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, ',');) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::size_t threadCount(std::size_t flag) { return flag == 0 ? defaultThreadCount() : flag; }

// Literal text, or the contents of a file when prefixed with '@'.
SymbolString stringFlag(const std::string& value, const char* flag) {
  std::string text = value;
  if (!value.empty() && value[0] == '@') {
    text = readFile(value.substr(1));
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.pop_back();
  }
  if (text.empty()) throw UsageError(std::string(flag) + " must be a non-empty string");
  try {
    return SymbolString::fromUtf8(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string(flag) + ": " + e.what());
  }
}

// ---- classifier flags shared by eval / rank / plagiarism

struct ClassifierFlags {
  std::string classifier = "knn";
  std::size_t k = 5;
  bool noStandardize = false;
  std::string weighting = "uniform";
  std::size_t maxDepth = 10;
  std::size_t minLeaf = 2;
  std::string children = "knn,tree";
  std::size_t folds = 10;
  std::uint64_t seed = 0;

  void add(CLI::App* app) {
    app->add_option("--classifier", classifier, "zeror, knn, tree or vote")
        ->check(CLI::IsMember({"zeror", "knn", "tree", "vote"}))
        ->capture_default_str();
    app->add_option("--k", k, "knn neighbour count")->capture_default_str();
    app->add_flag("--no-standardize", noStandardize, "knn on raw feature values");
    app->add_option("--weighting", weighting, "knn vote weighting: uniform or inverse")
        ->check(CLI::IsMember({"uniform", "inverse"}))
        ->capture_default_str();
    app->add_option("--max-depth", maxDepth, "tree depth limit")->capture_default_str();
    app->add_option("--min-leaf", minLeaf, "tree minimum leaf size")->capture_default_str();
    app->add_option("--children", children, "vote members, comma separated")->capture_default_str();
    app->add_option("--k-folds", folds, "cross-validation folds")->capture_default_str();
    app->add_option("--seed", seed, "fold assignment seed")->required();
  }

  ClassifierSpec leaf(const std::string& kind) const {
    ClassifierSpec spec;
    if (kind == "zeror") {
      spec.kind = ClassifierKind::ZeroR;
    } else if (kind == "knn") {
      spec.kind = ClassifierKind::Knn;
    } else if (kind == "tree") {
      spec.kind = ClassifierKind::Tree;
    } else {
      throw UsageError("unknown classifier \"" + kind + "\" (valid: zeror, knn, tree, vote)");
    }
    spec.knn.k = k;
    spec.knn.standardize = !noStandardize;
    spec.knn.weighting = weighting == "inverse" ? KnnWeighting::InverseDistance : KnnWeighting::Uniform;
    spec.tree.maxDepth = maxDepth;
    spec.tree.minLeaf = minLeaf;
    return spec;
  }

  ClassifierSpec spec() const {
    ClassifierSpec s;
    if (classifier == "vote") {
      s.kind = ClassifierKind::Vote;
      for (const auto& child : splitList(children)) s.children.push_back(leaf(child));
    } else {
      s = leaf(classifier);
    }
    if (folds < 2) throw UsageError("--k-folds must be at least 2");
    try {
      s.validate();
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    return s;
  }

  void record(json& cfg) const {
    cfg["classifier"] = spec().describe();
    cfg["k_folds"] = folds;
  }
};

// Names the Table-style group whose column list matches exactly, else "custom".
std::string inferGroup(const std::vector<std::string>& columns) {
  for (auto name : groupNames()) {
    if (featureGroup(name).featureNames() == columns) return std::string(name);
  }
  return "custom";
}

LabeledData loadLabeled(const std::string& path, const std::vector<std::string>& features) {
  LabeledData data = LabeledData::fromTable(readCsvFile(path));
  if (!features.empty()) {
    try {
      data = data.selectFeatures(features);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  return data;
}

// ---- subcommands

int cmdGen(const GenConfig& cfg, const std::string& out, const std::vector<std::string>& argv) {
  if (cfg.maxLength < 1) throw UsageError("--m must be at least 1");
  if (!(cfg.randomness >= 0.0 && cfg.randomness <= 1.0)) throw UsageError("--r must lie in [0, 1]");
  if (cfg.count < 1) throw UsageError("--count must be at least 1");
  Manifest manifest("gen", argv);
  writePairsFile(out, generateDataset(cfg));
  manifest.config() = {{"m", cfg.maxLength},
                       {"r", cfg.randomness},
                       {"count", cfg.count},
                       {"alphabet", {cfg.alphabetLo, cfg.alphabetHi}}};
  manifest.seed(cfg.seed);
  manifest.output(out);
  manifest.write(manifestPath(out));
  return kOk;
}

FeatureParams featureParams(double logBase, double weight, bool equalPairs) {
  FeatureParams params;
  params.mi.logBase = logBase;
  params.mi.weight = weight;
  params.mi.cooccurrence = equalPairs ? CoOccurrence::EqualPairsOnly : CoOccurrence::AllAlignedPairs;
  try {
    params.mi.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  return params;
}

struct ExtractFlags {
  std::string in, out, group = "all", arff;
  double logBase = 2.0, weight = 2.0;
  bool equalPairs = false;
  std::size_t threads = 0;
};

int cmdExtract(const ExtractFlags& f, const std::vector<std::string>& argv) {
  requireGroup(f.group);
  const FeatureParams params = featureParams(f.logBase, f.weight, f.equalPairs);
  Manifest manifest("extract", argv);
  const auto records = readPairsFile(f.in);
  std::vector<ComparisonPair> pairs;
  std::vector<std::size_t> lines;
  pairs.reserve(records.size());
  for (const auto& r : records) {
    pairs.push_back(r.pair);
    lines.push_back(r.line);
  }
  const auto result = extractDataset(pairs, featureGroup(f.group), lines, params, threadCount(f.threads));
  for (const auto& s : result.skipped) std::cerr << f.in << ":" << s.line << ": skipped: " << s.reason << '\n';
  if (!result.skipped.empty()) std::cerr << "skipped " << result.skipped.size() << " instance(s)\n";
  writeCsvFile(f.out, result.table);
  manifest.config() = {{"group", f.group},
                       {"log_base", f.logBase},
                       {"pwmi_weight", f.weight},
                       {"cooccurrence", f.equalPairs ? "equal-pairs" : "all-aligned-pairs"},
                       {"instances", result.table.size()},
                       {"skipped", result.skipped.size()}};
  manifest.input(f.in);
  manifest.output(f.out);
  if (!f.arff.empty()) {
    std::ostringstream arff;
    writeArff(arff, result.table, "simstring-" + f.group);
    writeFile(f.arff, arff.str());
    manifest.output(f.arff);
  }
  manifest.write(manifestPath(f.out));
  return kOk;
}

int cmdEval(const std::string& in, const std::string& out, std::string csvOut, const std::string& features,
            const ClassifierFlags& cf, std::size_t threads, const std::vector<std::string>& argv) {
  const ClassifierSpec spec = cf.spec();
  Manifest manifest("eval", argv);
  const LabeledData data = loadLabeled(in, splitList(features));
  const CvResult result = evaluate(data, spec, cf.folds, cf.seed, threadCount(threads));
  const ReportContext ctx{spec.describe(), inferGroup(data.featureNames), cf.folds, cf.seed, data.size()};
  std::ostringstream text, csv;
  writeReportText(text, result, ctx);
  writeReportCsv(csv, result, ctx);
  std::cout << text.str();
  if (csvOut.empty()) csvOut = out + ".csv";
  writeFile(out, text.str());
  writeFile(csvOut, csv.str());
  cf.record(manifest.config());
  manifest.config()["group"] = ctx.group;
  manifest.config()["features"] = data.featureNames;
  manifest.seed(cf.seed);
  manifest.input(in);
  manifest.output(out);
  manifest.output(csvOut);
  manifest.write(manifestPath(out));
  return kOk;
}

int cmdRank(const std::string& in, const std::string& out, const ClassifierFlags& cf, std::size_t threads,
            const std::vector<std::string>& argv) {
  const ClassifierSpec spec = cf.spec();
  Manifest manifest("rank", argv);
  const LabeledData data = loadLabeled(in, {});
  const auto ranking = rankFeatures(data, spec, cf.folds, cf.seed, threadCount(threads));
  std::ostringstream text, csv;
  writeRankingText(text, ranking);
  writeRankingCsv(csv, ranking);
  std::cout << text.str();
  writeFile(out, text.str());
  writeFile(out + ".csv", csv.str());
  cf.record(manifest.config());
  manifest.seed(cf.seed);
  manifest.input(in);
  manifest.output(out);
  manifest.output(out + ".csv");
  manifest.write(manifestPath(out));
  return kOk;
}

int cmdCompare(const std::string& w1, const std::string& w2, const std::string& group,
               const std::string& manifestOut, const std::vector<std::string>& argv) {
  requireGroup(group);
  Manifest manifest("compare", argv);
  ComparisonPair pair{stringFlag(w1, "--w1"), stringFlag(w2, "--w2"), ""};
  const FeatureVector fv = extractGroup(pair, featureGroup(group));
  for (std::size_t i = 0; i < fv.names.size(); ++i) {
    std::cout << fv.names[i] << " = " << formatValue(fv.values[i]) << '\n';
  }
  if (!manifestOut.empty()) {
    manifest.config() = {{"group", group}, {"w1", w1}, {"w2", w2}};
    manifest.write(manifestOut);
  }
  return kOk;
}

int cmdBench(const std::string& in, const std::string& out, const std::string& groups, std::size_t reps,
             const std::vector<std::string>& argv) {
  std::vector<std::string> names = splitList(groups);
  if (names.empty()) {
    for (auto g : groupNames()) names.emplace_back(g);
  }
  for (const auto& g : names) requireGroup(g);
  if (reps < 1) throw UsageError("--reps must be at least 1");
  Manifest manifest("bench", argv);
  std::vector<ComparisonPair> pairs;
  for (auto& r : readPairsFile(in)) pairs.push_back(std::move(r.pair));
  if (pairs.size() < 100) throw UsageError("bench needs at least 100 pairs, " + in + " has " + std::to_string(pairs.size()));
  const TimingReport report = timeFeatures(pairs, names, reps);
  std::ostringstream text, csv;
  writeTimingText(text, report);
  writeTimingCsv(csv, report);
  std::cout << text.str();
  writeFile(out, text.str());
  writeFile(out + ".csv", csv.str());
  manifest.config() = {{"groups", names}, {"repetitions", reps}, {"pairs", pairs.size()}};
  manifest.input(in);
  manifest.output(out);
  manifest.output(out + ".csv");
  manifest.write(manifestPath(out));
  return kOk;
}

struct PlagiarismFlags {
  std::string corpus, index, features = "rlmMclcs,morl,dice", out;
  bool keepCase = false;
  std::size_t threads = 0;
};

int cmdPlagiarism(const PlagiarismFlags& f, const ClassifierFlags& cf, const std::vector<std::string>& argv) {
  const ClassifierSpec spec = cf.spec();
  const auto featureNames = splitList(f.features);
  if (featureNames.empty()) throw UsageError("--features must name at least one feature");
  FeatureGroup group;
  try {
    group = customGroup("plagiarism", featureNames);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const std::string index = f.index.empty() ? (std::filesystem::path(f.corpus) / "index.tsv").string() : f.index;
  if (!std::filesystem::is_directory(f.corpus) || !std::filesystem::is_regular_file(index)) {
    throw std::runtime_error(
        "plagiarism corpus not found: expected directory " + f.corpus + " holding the answer and source "
        "text files, and index " + index + " with one tab-separated line per answer: "
        "answerPath<TAB>taskId<TAB>sourcePath<TAB>label (label: near, light, heavy or non; paths relative to the corpus)");
  }
  Manifest manifest("plagiarism", argv);
  const PlagiarismCorpus corpus = loadPlagiarismCorpus(f.corpus, index, TextOptions{f.keepCase});
  for (const auto& e : corpus.errors) std::cerr << index << ":" << e.line << ": skipped: " << e.message << '\n';
  const auto pairs = toComparisonPairs(corpus.instances);
  const auto extracted = extractDataset(pairs, group, {}, {}, threadCount(f.threads));
  for (const auto& s : extracted.skipped) std::cerr << "instance " << s.line << ": skipped: " << s.reason << '\n';
  const LabeledData data = LabeledData::fromTable(extracted.table);

  ClassifierSpec zeroR;
  zeroR.kind = ClassifierKind::ZeroR;
  const CvResult result = evaluate(data, spec, cf.folds, cf.seed, threadCount(f.threads));
  const CvResult baseline = evaluate(data, zeroR, cf.folds, cf.seed, 1);
  const ReportContext ctx{spec.describe(), "plagiarism:" + f.features, cf.folds, cf.seed, data.size()};
  std::ostringstream text, csv;
  writeReportText(text, result, ctx);
  char buf[96];
  std::snprintf(buf, sizeof buf, "\nzeror baseline:  %.4f\n", baseline.accuracy);
  text << buf;
  writeReportCsv(csv, result, ctx);
  csv << "baseline,zeror_accuracy," << formatValue(baseline.accuracy) << '\n';
  std::cout << text.str();
  writeFile(f.out, text.str());
  writeFile(f.out + ".csv", csv.str());
  cf.record(manifest.config());
  manifest.config()["features"] = featureNames;
  manifest.config()["keep_case"] = f.keepCase;
  manifest.config()["records_failed"] = corpus.errors.size();
  manifest.config()["vocabulary"] = corpus.vocabulary.size();
  manifest.seed(cf.seed);
  manifest.input(index);
  manifest.output(f.out);
  manifest.output(f.out + ".csv");
  manifest.write(manifestPath(f.out));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv, argv + argc);
  CLI::App app{"String similarity features: generation, extraction, evaluation"};
  app.require_subcommand(1);
  app.set_version_flag("--version", SIMSTRING_VERSION);

  std::function<int()> run;

  // gen
  GenConfig gen;
  std::string genOut;
  auto* genCmd = app.add_subcommand("gen", "generate a labelled pair dataset");
  genCmd->add_option("--m", gen.maxLength, "maximum w1 length")->capture_default_str();
  genCmd->add_option("--r", gen.randomness, "mutation intensity in [0, 1]")->capture_default_str();
  genCmd->add_option("--count", gen.count, "number of pairs")->capture_default_str();
  genCmd->add_option("--seed", gen.seed, "generator seed")->required();
  genCmd->add_option("--out", genOut, "output dataset")->required();
  genCmd->callback([&] { run = [&] { return cmdGen(gen, genOut, args); }; });

  // extract
  ExtractFlags ex;
  auto* exCmd = app.add_subcommand("extract", "compute a feature group for every pair");
  exCmd->add_option("--in", ex.in, "input dataset")->required();
  exCmd->add_option("--group", ex.group, "feature group")->capture_default_str();
  exCmd->add_option("--out", ex.out, "output CSV")->required();
  exCmd->add_option("--arff", ex.arff, "also write an ARFF file");
  exCmd->add_option("--log-base", ex.logBase, "MI logarithm base")->capture_default_str();
  exCmd->add_option("--weight", ex.weight, "PWMI weight of equal-symbol pairs")->capture_default_str();
  exCmd->add_flag("--mi-equal-pairs", ex.equalPairs, "MI joint counts only equal-symbol alignments");
  exCmd->add_option("--threads", ex.threads, "worker threads (0 = SIMSTRING_THREADS or all cores)");
  exCmd->callback([&] { run = [&] { return cmdExtract(ex, args); }; });

  // eval
  ClassifierFlags evalFlags;
  std::string evalIn, evalOut, evalCsv, evalFeatures;
  std::size_t evalThreads = 0;
  auto* evalCmd = app.add_subcommand("eval", "cross-validate a classifier on a feature CSV");
  evalCmd->add_option("--in", evalIn, "feature CSV")->required();
  evalCmd->add_option("--out", evalOut, "text report")->required();
  evalCmd->add_option("--csv", evalCsv, "CSV report (default <out>.csv)");
  evalCmd->add_option("--features", evalFeatures, "use only these columns, comma separated");
  evalFlags.add(evalCmd);
  evalCmd->add_option("--threads", evalThreads, "worker threads");
  evalCmd->callback([&] {
    run = [&] { return cmdEval(evalIn, evalOut, evalCsv, evalFeatures, evalFlags, evalThreads, args); };
  });

  // compare
  std::string cw1, cw2, cGroup = "all", cManifest;
  auto* cmpCmd = app.add_subcommand("compare", "print the features of one pair");
  cmpCmd->add_option("--w1", cw1, "first string, or @file")->required();
  cmpCmd->add_option("--w2", cw2, "second string, or @file")->required();
  cmpCmd->add_option("--group", cGroup, "feature group")->capture_default_str();
  cmpCmd->add_option("--manifest", cManifest, "write a run manifest here");
  cmpCmd->callback([&] { run = [&] { return cmdCompare(cw1, cw2, cGroup, cManifest, args); }; });

  // rank
  ClassifierFlags rankFlags;
  std::string rankIn, rankOut;
  std::size_t rankThreads = 0;
  auto* rankCmd = app.add_subcommand("rank", "score each feature on its own by cross-validation");
  rankCmd->add_option("--in", rankIn, "feature CSV")->required();
  rankCmd->add_option("--out", rankOut, "text ranking (CSV beside it)")->required();
  rankFlags.add(rankCmd);
  rankCmd->add_option("--threads", rankThreads, "worker threads");
  rankCmd->callback([&] { run = [&] { return cmdRank(rankIn, rankOut, rankFlags, rankThreads, args); }; });

  // bench
  std::string benchIn, benchOut, benchGroups;
  std::size_t benchReps = 3;
  auto* benchCmd = app.add_subcommand("bench", "time every feature");
  benchCmd->add_option("--in", benchIn, "input dataset (at least 100 pairs)")->required();
  benchCmd->add_option("--out", benchOut, "text report (CSV beside it)")->required();
  benchCmd->add_option("--groups", benchGroups, "groups to total, comma separated (default all)");
  benchCmd->add_option("--reps", benchReps, "timing passes, best kept")->capture_default_str();
  benchCmd->callback([&] { run = [&] { return cmdBench(benchIn, benchOut, benchGroups, benchReps, args); }; });

  // plagiarism
  ClassifierFlags plagFlags;
  plagFlags.classifier = "vote";
  PlagiarismFlags pf;
  auto* plagCmd = app.add_subcommand("plagiarism", "classify a short-answer plagiarism corpus");
  plagCmd->add_option("--corpus", pf.corpus, "corpus root directory")->required();
  plagCmd->add_option("--index", pf.index, "index file (default <corpus>/index.tsv)");
  plagCmd->add_option("--features", pf.features, "features, comma separated")->capture_default_str();
  plagCmd->add_option("--out", pf.out, "text report (CSV beside it)")->required();
  plagCmd->add_flag("--keep-case", pf.keepCase, "do not lowercase words");
  plagFlags.add(plagCmd);
  plagCmd->add_option("--threads", pf.threads, "worker threads");
  plagCmd->callback([&] { run = [&] { return cmdPlagiarism(pf, plagFlags, args); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    return run();
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kRuntime;
  }
}
