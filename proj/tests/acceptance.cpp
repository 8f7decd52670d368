// Acceptance suite: one PASS/FAIL/SKIP line per criterion, measured values below it.
// Exit status is 1 when any criterion fails.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "simstring/baseline.hpp"
#include "simstring/com.hpp"
#include "simstring/evaluation.hpp"
#include "simstring/features.hpp"
#include "simstring/mutual_info.hpp"
#include "simstring/rlm.hpp"
#include "simstring/synth.hpp"
#include "simstring/text.hpp"

using namespace simstring;
using oracle::S;
using oracle::W;

namespace {
ClassifierSpec specOf(ClassifierKind kind) {
  ClassifierSpec s;
  s.kind = kind;
  return s;
}

enum class Outcome { Pass, Fail, Skip };

struct Check {
  std::vector<std::string> notes;
  std::size_t failures = 0;
  bool skipped = false;

  void expect(bool ok, const std::string& what) {
    if (!ok) {
      ++failures;
      if (failures <= 20) notes.push_back("violation: " + what);
    }
  }
  void note(const std::string& text) { notes.push_back(text); }
  void skip(const std::string& why) {
    skipped = true;
    notes.push_back(why);
  }
};

std::string fmt(const char* pattern, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, pattern, v);
  return buf;
}

std::string str(const SymbolString& w) { return w.toUtf8(); }

bool near(double a, double b) { return std::fabs(a - b) <= 1e-9 * std::max(1.0, std::fabs(b)); }

// ---- 1

void workedExamples(Check& c) {
  const auto w1 = W("olvahirah"), w2 = W("oliveira");
  c.expect(lcsLength(w1, w2) == 6, "lcs length of olvahirah/oliveira");
  c.expect(mclcs(w1, w2, 0, 0) == W("ol"), "mclcs(0,0) = ol, got " + str(mclcs(w1, w2, 0, 0)));
  c.expect(mclcsGlobal(w1, w2) == W("ira"), "mclcs global = ira, got " + str(mclcsGlobal(w1, w2)));
  const ComTable com(W("aaabb"), W("aaabc"));
  c.expect(com.count('a', 0) == 3, "COM a at d=0");
  c.expect(com.count('b', 0) == 1, "COM b at d=0");
  const auto rlm = buildRlm(W("aaabb"), W("aaabc"));
  c.expect(rlm.count(1) == 4, "RLM l=1");
  c.expect(rlm.count(2) == 3, "RLM l=2");
  c.expect(rlm.count(4) == 1, "RLM l=4");
  c.note("RLM l=3 measured " + std::to_string(rlm.count(3)) + " (excluded)");
  const SymbolString m1{1, 2, 2, 3}, m2{1, 2, 2, 4};
  const auto joint = alignedJoint(m1, m2);
  c.expect(joint.jointAt(2, 2) == 0.5, "rho(c1,c1) = 2/4");
  c.expect(joint.jointAt(3, 3) == 0.0, "rho(c3,c3) = 0");
  const double low = pwmis(W("213"), W("321")), high = pwmis(W("321"), W("321"));
  c.expect(low < high, "pwmis(213,321) < pwmis(321,321)");
  c.note("pwmis(213,321) = " + fmt("%.6f", low) + ", pwmis(321,321) = " + fmt("%.6f", high));
}

// ---- 2

struct OracleRun {
  oracle::EditGraph lev{4, 3, false};
  std::size_t pairs = 0;

  void compare(Check& c, const SymbolString& a, const SymbolString& b, bool edit) {
    ++pairs;
    const auto sa = S(a), sb = S(b);
    const std::string tag = " on (" + str(a) + ", " + str(b) + ")";
    if (a.size() <= 7 && b.size() <= 7) c.expect(lcsLength(a, b) == oracle::lcsLength(sa, sb), "lcs" + tag);
    if (edit) {
      c.expect(levenshtein(a, b) == lev.distance(sa, sb), "levenshtein" + tag);
      c.expect(damerau(a, b) == oracle::restrictedEdit(sa, sb), "damerau" + tag);
    }
    if (a.empty() || b.empty()) return;
    const MiConfig mi;
    c.expect(near(simstring::mi(a, b, mi), oracle::mi(sa, sb)), "mi" + tag);
    c.expect(near(miShiftSum(a, b, mi), oracle::miShiftSum(sa, sb)), "miShiftSum" + tag);
    for (std::size_t d = 0; d < 5; ++d) {
      c.expect(near(miShifted(a, b, d, mi), oracle::miShifted(sa, sb, d)), "miShifted" + tag);
      c.expect(near(simstring::pwmi(a, b, d, mi), oracle::pwmi(sa, sb, d)), "pwmi" + tag);
    }
    c.expect(near(simstring::pwmis(a, b, mi), oracle::pwmis(sa, sb)), "pwmis" + tag);

    const ComTable t(a, b);
    for (std::size_t p = 0; p < a.size(); ++p) {
      for (std::size_t d = 0; d < a.size(); ++d) {
        c.expect(comCount(t, a, p, d) == oracle::comCount(sa, sb, p, d), "com" + tag);
        c.expect(near(simstring::cop(t, a, p, d), oracle::cop(sa, sb, p, d)), "cop" + tag);
      }
      c.expect(near(simstring::acop(t, a, p), oracle::acop(sa, sb, p)), "acop" + tag);
    }
    for (std::size_t d = 0; d < b.size(); ++d) c.expect(near(simstring::ps(t, b, d), oracle::ps(sa, sb, d)), "ps" + tag);
    c.expect(near(simstring::tps(t, b), oracle::tps(sa, sb)), "tps" + tag);
    c.expect(near(simstring::cod(t), oracle::cod(sa, sb)), "cod" + tag);

    const auto counts = oracle::rlm(sa, sb);
    const auto r = buildRlm(a, b);
    for (std::size_t l = 1; l <= a.size(); ++l) c.expect(r.count(l) == counts[l], "rlm count" + tag);
    const auto f = oracle::rlmFeatures(counts);
    c.expect(so(r) == f.so && mo(r) == f.mo && morl(r) == f.morl && moml(r) == f.moml && mlmo(r) == f.mlmo &&
                 rlmMclcs(r) == f.rlmMclcs && near(wso(r), f.wso),
             "rlm features" + tag);
  }
};

void oracleEquivalence(Check& c) {
  OracleRun run;
  const auto all = oracle::allStrings(4, 3);
  for (const auto& a : all) {
    for (const auto& b : all) run.compare(c, a, b, true);
  }
  RandomSource rng(2);
  for (int i = 0; i < 10000; ++i) {
    run.compare(c, oracle::randomString(rng, 1, 8, 3), oracle::randomString(rng, 1, 8, 3), false);
  }
  c.note(std::to_string(run.pairs) + " pairs compared, " + std::to_string(c.failures) + " mismatches");
}

// ---- 3

void invariants(Check& c) {
  const auto all = oracle::allStrings(4, 3);
  const std::size_t n = all.size();
  std::vector<std::size_t> lev(n * n), dam(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      lev[i * n + j] = levenshtein(all[i], all[j]);
      dam[i * n + j] = damerau(all[i], all[j]);
    }
  }
  std::size_t triangleLev = 0, triangleDam = 0;
  std::string firstDam;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (const auto* m : {&lev, &dam}) {
        const auto& d = *m;
        const char* name = m == &lev ? "levenshtein" : "damerau";
        c.expect((d[i * n + j] == 0) == (i == j), std::string(name) + " identity");
        c.expect(d[i * n + j] == d[j * n + i], std::string(name) + " symmetry");
      }
      for (std::size_t k = 0; k < n; ++k) {
        if (lev[i * n + k] > lev[i * n + j] + lev[j * n + k]) ++triangleLev;
        if (dam[i * n + k] > dam[i * n + j] + dam[j * n + k]) {
          if (triangleDam++ == 0) {
            firstDam = "d(" + str(all[i]) + "," + str(all[k]) + ")=" + std::to_string(dam[i * n + k]) + " > d(" +
                       str(all[i]) + "," + str(all[j]) + ") + d(" + str(all[j]) + "," + str(all[k]) +
                       ")=" + std::to_string(dam[i * n + j] + dam[j * n + k]);
          }
        }
      }
    }
  }
  // offset variants skip leading symbols, so they stay below 1 even on identical strings
  const auto abcd = W("abcd");
  c.note("nmclcs on (abcd, abcd): (0,1) = " + fmt("%.4f", nmclcs(abcd, abcd, MclcsVariant::SkipFirstOfW2)) +
         ", mid = " + fmt("%.4f", nmclcs(abcd, abcd, MclcsVariant::Middle)));
  c.expect(triangleLev == 0, "levenshtein triangle inequality (" + std::to_string(triangleLev) + " triples)");
  c.expect(triangleDam == 0, "damerau triangle inequality (" + std::to_string(triangleDam) + " of " +
                                 std::to_string(n * n * n) + " triples), e.g. " + firstDam);
  for (const auto& a : all) {
    if (a.empty()) continue;
    c.expect(nlcs(a, a) == 1.0, "nlcs identity on " + str(a));
    c.expect(dice(a, a) == 1.0, "dice identity on " + str(a));
    c.expect(nmclcs(a, a, MclcsVariant::Start) == 1.0, "nmclcs(0,0) identity on " + str(a));
    c.expect(nmclcs(a, a, MclcsVariant::Global) == 1.0, "nmclcs global identity on " + str(a));
    for (const auto& b : all) {
      if (!b.empty()) c.expect(rlmMclcs(buildRlm(a, b)) == mclcsGlobal(a, b).size(), "rlmMclcs = |mclcsGlobal|");
    }
  }
}

// ---- 4

struct TrendConfig {
  std::size_t m;
  double r;
};

void trends(Check& c) {
  const std::vector<TrendConfig> configs = {{14, 0.5}, {14, 0.9}, {200, 0}, {200, 0.15}};
  const std::vector<std::string> groups = {"length", "lcs", "mclcs", "mi", "distance", "wmi", "com", "rlm", "all"};
  const std::uint64_t genSeed = 7, foldSeed = 3;
  ClassifierSpec knn;
  knn.kind = ClassifierKind::Knn;
  knn.knn = {5, true, KnnWeighting::Uniform};
  c.note("generator seed " + std::to_string(genSeed) + ", fold seed " + std::to_string(foldSeed) +
         ", knn(k=5, standardized), 10 folds, 10000 pairs per configuration");
  for (const auto& tc : configs) {
    GenConfig cfg;
    cfg.maxLength = tc.m;
    cfg.randomness = tc.r;
    cfg.count = 10000;
    cfg.seed = genSeed;
    const auto data = LabeledData::fromTable(extractDataset(generateDataset(cfg), featureGroup("all")).table);
    std::map<std::string, double> acc;
    std::string line = "M=" + std::to_string(tc.m) + " R=" + fmt("%.2f", tc.r) + ":";
    for (const auto& g : groups) {
      acc[g] = evaluate(data.selectFeatures(featureGroup(g).featureNames()), knn, 10, foldSeed).meanAccuracy;
      line += " " + g + "=" + fmt("%.4f", acc[g]);
    }
    c.note(line);
    const std::string tag = " at M=" + std::to_string(tc.m) + " R=" + fmt("%.2f", tc.r);
    for (const char* g : {"length", "mi"}) {
      c.expect(acc[g] >= 0.47 && acc[g] <= 0.56, std::string("(a) ") + g + " in [0.47, 0.56]" + tag + ": " + fmt("%.4f", acc[g]));
    }
    if (!(tc.m == 200 && tc.r > 0)) {
      for (const char* g : {"lcs", "mclcs", "distance", "com", "rlm"}) {
        c.expect(acc[g] >= 0.60, std::string("(b) ") + g + " >= 0.60" + tag + ": " + fmt("%.4f", acc[g]));
      }
    } else {
      c.expect(acc["rlm"] - acc["mi"] >= 0.08, "(c) rlm - mi >= 0.08" + tag + ": " + fmt("%.4f", acc["rlm"] - acc["mi"]));
      c.expect(acc["rlm"] >= acc["com"] - 0.02, "(c) rlm >= com - 0.02" + tag);
    }
    double best = 0.0;
    for (const auto& g : groups) {
      if (g != "all") best = std::max(best, acc[g]);
    }
    c.expect(acc["all"] >= best - 0.02, "(d) all >= max group - 0.02" + tag + ": " + fmt("%.4f", acc["all"]) +
                                            " vs " + fmt("%.4f", best));
  }
}

// ---- 5

void generatorStatistics(Check& c) {
  GenConfig cfg;
  cfg.count = 100000;
  cfg.seed = 11;
  std::size_t same = 0;
  for (const auto& p : generateDataset(cfg)) same += p.label == kLabelSame;
  const double balance = same / 1e5;
  c.note("SAME fraction " + fmt("%.4f", balance));
  c.expect(std::fabs(balance - 0.5) <= 0.01, "label balance");

  GenConfig r0;
  r0.randomness = 0.0;
  RandomSource rng(12);
  MutationStats stats;
  for (int i = 0; i < 100000; ++i) c1(w1Gen(r0, rng), r0, rng, &stats);
  const double rate = stats.truncations / 1e5;
  c.note("c1 truncation rate at R=0: " + fmt("%.4f", rate));
  c.expect(std::fabs(rate - 0.10) <= 0.01, "c1 truncation rate");

  double last = -1.0;
  std::string line = "mean levenshtein(w1, cf(w1)):";
  for (double r : {0.0, 0.15, 0.5, 0.9}) {
    GenConfig g;
    g.randomness = r;
    double total = 0.0;
    for (std::uint64_t i = 0; i < 10000; ++i) {
      RandomSource s = RandomSource::forStream(13, i);
      const auto w = w1Gen(g, s);
      total += static_cast<double>(levenshtein(w, cf(w, g, s)));
    }
    const double mean = total / 1e4;
    line += " R=" + fmt("%.2f", r) + "->" + fmt("%.4f", mean);
    c.expect(mean >= last, "monotonic edit distance at R=" + fmt("%.2f", r));
    last = mean;
  }
  c.note(line);
}

// ---- 6

void plagiarism(Check& c) {
  const char* root = std::getenv("SIMSTRING_CORPUS");
  if (!root || !*root) {
    c.skip("SIMSTRING_CORPUS is not set; point it at the corpus root (index in SIMSTRING_CORPUS_INDEX or <root>/index.tsv)");
    return;
  }
  const char* indexEnv = std::getenv("SIMSTRING_CORPUS_INDEX");
  const std::string index = indexEnv && *indexEnv ? indexEnv : std::string(root) + "/index.tsv";
  if (!std::filesystem::exists(index)) {
    c.skip("corpus index " + index + " not found");
    return;
  }
  const auto corpus = loadPlagiarismCorpus(root, index);
  const auto pairs = toComparisonPairs(corpus.instances);
  const auto data = LabeledData::fromTable(
      extractDataset(pairs, customGroup("plagiarism", {"rlmMclcs", "morl", "dice"})).table);
  ClassifierSpec vote;
  vote.kind = ClassifierKind::Vote;
  vote.children = {specOf(ClassifierKind::Knn), specOf(ClassifierKind::Tree)};
  const auto r = evaluate(data, vote, 10, 1);
  const auto z = evaluate(data, specOf(ClassifierKind::ZeroR), 10, 1);
  c.note(std::to_string(data.size()) + " instances, " + std::to_string(corpus.errors.size()) + " skipped records");
  c.note("vote accuracy " + fmt("%.4f", r.accuracy) + ", zeror " + fmt("%.4f", z.accuracy));
  c.expect(r.accuracy > 0.55, "accuracy > 0.55");
  c.expect(r.accuracy > z.accuracy, "accuracy above zeror");
}

// ---- 7

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void determinism(Check& c) {
  namespace fs = std::filesystem;
  const fs::path base = fs::temp_directory_path() / "simstring_acceptance_determinism";
  fs::remove_all(base);
  const std::vector<std::string> files = {"d.tsv", "f.csv", "f.arff", "r.txt", "r.txt.csv"};
  std::vector<std::map<std::string, std::string>> runs;
  for (const char* name : {"a", "b"}) {
    const fs::path dir = base / name;
    fs::create_directories(dir);
    auto p = [&](const char* f) { return "\"" + (dir / f).string() + "\""; };
    const std::string cli = std::string("\"") + SIMSTRING_CLI + "\" ";
    const std::vector<std::string> cmds = {
        cli + "gen --m 14 --r 0.5 --count 2000 --seed 42 --out " + p("d.tsv"),
        cli + "extract --in " + p("d.tsv") + " --group all --out " + p("f.csv") + " --arff " + p("f.arff"),
        cli + "eval --in " + p("f.csv") + " --out " + p("r.txt") + " --seed 5 --classifier vote --children knn,tree",
    };
    for (const auto& cmd : cmds) {
      const int status = std::system((cmd + " > /dev/null 2>&1").c_str());
      c.expect(status == 0, "command failed: " + cmd);
    }
    std::map<std::string, std::string> contents;
    for (const auto& f : files) contents[f] = slurp(dir / f);
    runs.push_back(std::move(contents));
  }
  for (const auto& f : files) {
    c.expect(!runs[0][f].empty(), f + " is empty");
    c.expect(runs[0][f] == runs[1][f], f + " differs between runs");
  }
  c.note(std::to_string(files.size()) + " files compared byte for byte");
  fs::remove_all(base);
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria = {
      {"1 worked examples", workedExamples},     {"2 oracle equivalence", oracleEquivalence},
      {"3 metric and identity invariants", invariants}, {"4 trend reproduction", trends},
      {"5 generator statistics", generatorStatistics},  {"6 plagiarism pipeline", plagiarism},
      {"7 determinism", determinism},
  };
  int failed = 0;
  for (const auto& [name, body] : criteria) {
    Check check;
    const auto start = std::chrono::steady_clock::now();
    try {
      body(check);
    } catch (const std::exception& e) {
      check.expect(false, std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const char* verdict = check.failures ? "FAIL" : check.skipped ? "SKIP" : "PASS";
    failed += check.failures != 0;
    std::printf("%s criterion %s (%.2f s)\n", verdict, name.c_str(), seconds);
    for (const auto& n : check.notes) std::printf("    %s\n", n.c_str());
    if (check.failures > 20) std::printf("    ... %zu violations in total\n", check.failures);
    std::fflush(stdout);
  }
  return failed ? 1 : 0;
}
