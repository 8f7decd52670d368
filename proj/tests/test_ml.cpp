#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "simstring/ml.hpp"
#include "simstring/random.hpp"

using namespace simstring;

namespace {
ClassifierSpec specOf(ClassifierKind kind) {
  ClassifierSpec s;
  s.kind = kind;
  return s;
}
LabeledData makeData(std::vector<std::vector<double>> rows, std::vector<std::size_t> labels,
                     std::vector<std::string> classes = {"A", "B"}) {
  LabeledData d;
  for (std::size_t f = 0; f < (rows.empty() ? 0 : rows[0].size()); ++f) d.featureNames.push_back("f" + std::to_string(f));
  d.rows = std::move(rows);
  d.labels = std::move(labels);
  d.classNames = std::move(classes);
  return d;
}
ClassifierSpec knn(std::size_t k, bool standardize = true, KnnWeighting w = KnnWeighting::Uniform) {
  ClassifierSpec s;
  s.kind = ClassifierKind::Knn;
  s.knn = {k, standardize, w};
  return s;
}
Prediction predictOne(const LabeledData& train, const ClassifierSpec& spec, std::vector<double> x) {
  auto c = makeClassifier(spec);
  c->fit(train);
  return c->predict(x);
}
}  // namespace

TEST_CASE("LabeledData from table") {
  FeatureTable t;
  t.columns = {"x", "y"};
  t.rows = {{1, 2}, {3, 4}, {5, 6}};
  t.labels = {"SAME", "DIFFERENT", "SAME"};
  const auto d = LabeledData::fromTable(t);
  CHECK(d.classNames == std::vector<std::string>{"DIFFERENT", "SAME"});
  CHECK(d.labels == std::vector<std::size_t>{1, 0, 1});
  const auto y = d.selectFeatures({"y"});
  CHECK(y.rows[2] == std::vector<double>{6});
  CHECK_THROWS_AS(d.selectFeatures({"z"}), std::invalid_argument);
  const std::vector<std::size_t> idx = {2, 0};
  CHECK(d.subset(idx).rows[0] == std::vector<double>{5, 6});
  t.labels[1] = "";
  CHECK_THROWS_AS(LabeledData::fromTable(t), std::invalid_argument);
}

TEST_CASE("ZeroR") {
  std::vector<std::vector<double>> rows(100, {0.0});
  std::vector<std::size_t> labels(100, 0);
  for (int i = 0; i < 49; ++i) labels[i] = 1;
  const auto d = makeData(rows, labels);
  CHECK(zeroRFit(d) == 0);
  const auto p = predictOne(d, specOf(ClassifierKind::ZeroR), {7.0});
  CHECK(p.label == 0);
  CHECK(p.probabilities[0] == doctest::Approx(0.51));
  std::fill(labels.begin(), labels.begin() + 50, 1);
  CHECK(zeroRFit(makeData(rows, labels)) == 0);  // tie goes to the first class
}

TEST_CASE("kNN basics") {
  const auto d = makeData({{0, 0}, {0, 0.1}, {5, 5}, {5, 5.1}, {0.1, 0}}, {0, 0, 1, 1, 0});
  CHECK(predictOne(d, knn(1), {5, 5}).label == 1);
  CHECK(predictOne(d, knn(1), {0, 0}).label == 0);
  const auto three = makeData({{0}, {1}, {2}, {10}}, {0, 0, 1, 1});
  const auto p = predictOne(three, knn(3, false), {0});
  CHECK(p.label == 0);
  CHECK(p.probabilities[0] == doctest::Approx(2.0 / 3.0));
  CHECK_THROWS_AS(predictOne(three, knn(5), {0}), std::invalid_argument);
  // k = |train| votes like ZeroR on class frequencies
  const auto all = predictOne(three, knn(4, false), {100});
  CHECK(all.probabilities[0] == doctest::Approx(0.5));
  CHECK(all.label == zeroRFit(three));
  // inverse-distance weighting prefers the nearer neighbor
  const auto w = predictOne(makeData({{0}, {3}, {4}}, {0, 1, 1}), knn(3, false, KnnWeighting::InverseDistance), {0.5});
  CHECK(w.label == 0);
}

TEST_CASE("kNN matches a brute-force oracle") {
  RandomSource rng(71);
  std::vector<std::vector<double>> rows;
  std::vector<std::size_t> labels;
  for (int i = 0; i < 1000; ++i) {
    rows.push_back({rng.real() * 10, rng.real(), std::floor(rng.real() * 4)});
    labels.push_back(rng.integer(0, 2));
  }
  const auto d = makeData(rows, labels, {"A", "B", "C"});
  auto clf = makeClassifier(knn(7, false));
  clf->fit(d);
  for (int q = 0; q < 200; ++q) {
    const std::vector<double> x = {rng.real() * 10, rng.real(), std::floor(rng.real() * 4)};
    std::vector<std::pair<double, std::size_t>> dist;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      double s = 0;
      for (int f = 0; f < 3; ++f) s += (rows[i][f] - x[f]) * (rows[i][f] - x[f]);
      dist.push_back({s, i});
    }
    std::stable_sort(dist.begin(), dist.end(), [](auto& a, auto& b) { return a.first < b.first; });
    std::vector<double> votes(3, 0);
    for (int j = 0; j < 7; ++j) votes[labels[dist[j].second]] += 1;
    const auto best = static_cast<std::size_t>(std::max_element(votes.begin(), votes.end()) - votes.begin());
    const auto p = clf->predict(x);
    REQUIRE(p.label == best);
    for (int c = 0; c < 3; ++c) REQUIRE(p.probabilities[c] == doctest::Approx(votes[c] / 7));
  }
}

TEST_CASE("standardized kNN ignores feature scale") {
  RandomSource rng(72);
  std::vector<std::vector<double>> a, b;
  std::vector<std::size_t> labels;
  for (int i = 0; i < 200; ++i) {
    const double x = rng.real(), y = rng.real();
    a.push_back({x, y, 1.0});
    b.push_back({x * 1000 + 7, y * 0.001, 5.0});
    labels.push_back(x + y > 1 ? 1 : 0);
  }
  auto ca = makeClassifier(knn(5));
  auto cb = makeClassifier(knn(5));
  ca->fit(makeData(a, labels));
  cb->fit(makeData(b, labels));
  for (int q = 0; q < 100; ++q) {
    const double x = rng.real(), y = rng.real();
    const std::vector<double> qa = {x, y, 1.0}, qb = {x * 1000 + 7, y * 0.001, 5.0};
    REQUIRE(ca->predict(qa).label == cb->predict(qb).label);
  }
}

TEST_CASE("decision tree") {
  const auto sep = makeData({{1}, {2}, {3}, {10}, {11}, {12}}, {0, 0, 0, 1, 1, 1});
  const auto shape = fitTreeShape(sep, {});
  CHECK(shape.depth == 1);
  CHECK(shape.nodes == 3);
  ClassifierSpec tree = specOf(ClassifierKind::Tree);
  CHECK(predictOne(sep, tree, {6.4}).label == 0);
  CHECK(predictOne(sep, tree, {6.6}).label == 1);  // threshold at the midpoint 6.5
  const auto pure = makeData({{1}, {5}, {9}}, {1, 1, 1});
  CHECK(fitTreeShape(pure, {}).nodes == 1);
  CHECK(fitTreeShape(pure, {}).depth == 0);
  TreeParams shallow;
  shallow.maxDepth = 1;
  const auto xorData = makeData({{0, 0}, {0, 1}, {1, 0}, {1, 1}, {0, 0}, {0, 1}, {1, 0}, {1, 1}}, {0, 1, 1, 0, 0, 1, 1, 0});
  CHECK(fitTreeShape(xorData, shallow).depth <= 1);

  // 8 rows, 5/3 split: parent H = 0.954434; (4A,0B | 1A,3B) gain = 0.954434 - 0.5 * 0.811278
  const std::vector<std::size_t> parent = {5, 3}, left = {4, 0}, right = {1, 3};
  CHECK(entropy(parent) == doctest::Approx(0.954434).epsilon(1e-5));
  CHECK(informationGain(left, right) == doctest::Approx(0.954434 - 0.5 * 0.811278).epsilon(1e-5));
  const std::vector<std::size_t> none = {0, 0};
  CHECK(entropy(none) == 0.0);
}

TEST_CASE("vote uses the product rule") {
  // Two fixed children: knn(k=3) over a single feature gives exact probabilities.
  const auto d = makeData({{0}, {0}, {0}, {0}, {0}, {0}, {0}, {0}, {0}, {0}}, {0, 0, 0, 0, 0, 0, 1, 1, 1, 1});
  ClassifierSpec vote = specOf(ClassifierKind::Vote);
  vote.children = {specOf(ClassifierKind::ZeroR), specOf(ClassifierKind::ZeroR)};
  const auto p = predictOne(d, vote, {0});
  // (0.6, 0.4) x (0.6, 0.4) normalized
  CHECK(p.probabilities[0] == doctest::Approx(0.36 / 0.52));
  CHECK(p.label == 0);

  // ZeroR gives (0.6, 0.4); kNN(k=10) at x = 9 sees 3 A and 7 B: 0.18 vs 0.28 favors B
  std::vector<std::vector<double>> rows;
  std::vector<std::size_t> labels;
  for (int i = 0; i < 10; ++i) {
    rows.push_back({0});
    labels.push_back(i < 9 ? 0 : 1);
  }
  for (int i = 0; i < 10; ++i) {
    rows.push_back({9});
    labels.push_back(i < 3 ? 0 : 1);
  }
  const auto knnData = makeData(rows, labels);
  ClassifierSpec pair = specOf(ClassifierKind::Vote);
  pair.children = {specOf(ClassifierKind::ZeroR), knn(10, false)};
  const auto r = predictOne(knnData, pair, {9});
  CHECK(r.label == 1);
  CHECK(r.probabilities[1] == doctest::Approx(0.28 / 0.46));
  ClassifierSpec mixed = specOf(ClassifierKind::Vote);
  mixed.children = {knn(3), specOf(ClassifierKind::Tree)};
  CHECK(mixed.describe() == "vote(knn(k=3,standardize=1,weighting=uniform),tree(maxDepth=10,minLeaf=2))");

  // the floor keeps every product strictly positive
  const auto pureA = makeData({{0}, {1}, {2}}, {0, 0, 0});
  ClassifierSpec twoZero = specOf(ClassifierKind::Vote);
  twoZero.children = {specOf(ClassifierKind::ZeroR), specOf(ClassifierKind::ZeroR)};
  const auto q = predictOne(pureA, twoZero, {0});
  CHECK(q.probabilities[1] > 0.0);
  CHECK(q.probabilities[1] < 1e-12);
  CHECK(std::accumulate(q.probabilities.begin(), q.probabilities.end(), 0.0) == doctest::Approx(1.0));
}

TEST_CASE("classifier validation and schema checks") {
  CHECK_THROWS_AS(knn(0).validate(), std::invalid_argument);
  ClassifierSpec v = specOf(ClassifierKind::Vote);
  v.children = {knn(1)};
  CHECK_THROWS_AS(v.validate(), std::invalid_argument);
  ClassifierSpec t = specOf(ClassifierKind::Tree);
  t.tree.minLeaf = 0;
  CHECK_THROWS_AS(t.validate(), std::invalid_argument);
  const auto a = makeData({{0, 1}, {1, 0}}, {0, 1});
  auto b = a;
  b.featureNames[1] = "other";
  CHECK_THROWS_AS(fitPredict(a, b, knn(1)), std::invalid_argument);
  CHECK_THROWS_AS(makeClassifier(knn(1))->fit(makeData({}, {})), std::invalid_argument);
}
