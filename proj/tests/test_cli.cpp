#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace fs = std::filesystem;

namespace {
const fs::path kWork = fs::temp_directory_path() / "simstring_cli_test";

int run(const std::string& args, std::string* out = nullptr) {
  fs::create_directories(kWork);
  const fs::path captured = kWork / "stdout.txt";
  const std::string cmd = std::string("\"") + SIMSTRING_CLI + "\" " + args + " > \"" + captured.string() +
                          "\" 2> \"" + (kWork / "stderr.txt").string() + "\"";
  const int status = std::system(cmd.c_str());
  if (out) {
    std::ifstream in(captured);
    std::ostringstream s;
    s << in.rdbuf();
    *out = s.str();
  }
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string path(const char* name) { return "\"" + (kWork / name).string() + "\""; }

std::string slurp(const char* name) {
  std::ifstream in(kWork / name, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}
}  // namespace

TEST_CASE("usage errors exit with 2") {
  CHECK(run("gen --out " + path("x.tsv")) == 2);
  CHECK(run("gen --seed 1 --m 0 --out " + path("x.tsv")) == 2);
  CHECK(run("compare --w1 '' --w2 abc") == 2);
  CHECK(run("compare --w1 abc --w2 abc --group nope") == 2);
  CHECK(run("frobnicate") == 2);
  CHECK(run("extract --in /nonexistent/in.tsv --out " + path("y.csv")) == 1);
}

TEST_CASE("compare prints the group features") {
  std::string out;
  REQUIRE(run("compare --w1 olvahirah --w2 oliveira --group lcs", &out) == 0);
  CHECK(out.find("nlcs = 0.5\n") != std::string::npos);
  REQUIRE(run("compare --w1 abcd --w2 abcd --group rlm --manifest " + path("cmp.json"), &out) == 0);
  CHECK(out.find("rlmMclcs = 4\n") != std::string::npos);
  CHECK(fs::exists(kWork / "cmp.json"));
}

TEST_CASE("gen, extract, eval, rank pipeline") {
  REQUIRE(run("gen --m 14 --r 0.5 --count 300 --seed 7 --out " + path("d.tsv")) == 0);
  CHECK(fs::exists(kWork / "d.tsv.manifest.json"));
  CHECK(slurp("d.tsv.manifest.json").find("\"fnv1a64\"") != std::string::npos);
  REQUIRE(run("extract --in " + path("d.tsv") + " --group rlm --out " + path("rlm.csv") + " --arff " + path("rlm.arff")) == 0);
  const std::string csv = slurp("rlm.csv");
  const std::string header = csv.substr(0, csv.find('\n'));
  CHECK(header == "so,wso,mo,moml,morl,mlmo,rlmMclcs,len1,len2,lenDiff,lenAbsDiff,label");
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 301);
  CHECK(fs::exists(kWork / "rlm.arff"));
  REQUIRE(run("eval --in " + path("rlm.csv") + " --out " + path("rep.txt") + " --seed 1 --k-folds 5") == 0);
  CHECK(slurp("rep.txt").find("rlm") != std::string::npos);
  CHECK(slurp("rep.txt.csv").find("meta,group,rlm\n") != std::string::npos);
  CHECK(run("eval --in " + path("rlm.csv") + " --out " + path("rep.txt")) == 2);  // --seed is required
  CHECK(run("eval --in " + path("rlm.csv") + " --out " + path("rep.txt") + " --seed 1 --features nope") == 2);
  REQUIRE(run("rank --in " + path("rlm.csv") + " --out " + path("rank.txt") + " --seed 1 --classifier tree") == 0);
  CHECK(slurp("rank.txt.csv").rfind("rank,feature,mean_accuracy\n", 0) == 0);
  REQUIRE(run("bench --in " + path("d.tsv") + " --out " + path("bench.txt") + " --groups length,rlm --reps 1") == 0);
  CHECK(fs::exists(kWork / "bench.txt.csv"));
}

TEST_CASE("plagiarism without a corpus explains the layout") {
  CHECK(run("plagiarism --corpus /nonexistent/corpus --out " + path("p.txt") + " --seed 1") != 0);
  CHECK(slurp("stderr.txt").find("index.tsv") != std::string::npos);
}
