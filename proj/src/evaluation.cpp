#include "simstring/evaluation.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <ostream>
#include <stdexcept>

#include "simstring/parallel.hpp"
#include "simstring/random.hpp"
#include "simstring/table_io.hpp"

namespace simstring {

std::vector<std::size_t> stratifiedKFold(const LabeledData& data, std::size_t k, std::uint64_t seed) {
  if (k < 2) throw std::invalid_argument("k-fold: k must be at least 2");
  std::vector<std::vector<std::size_t>> byClass(data.numClasses());
  for (std::size_t i = 0; i < data.size(); ++i) byClass.at(data.labels[i]).push_back(i);
  for (std::size_t c = 0; c < byClass.size(); ++c) {
    if (!byClass[c].empty() && byClass[c].size() < k) {
      throw std::invalid_argument("cannot stratify: class \"" + data.classNames[c] + "\" has " +
                                  std::to_string(byClass[c].size()) + " instances, fewer than " +
                                  std::to_string(k) + " folds");
    }
  }
  RandomSource rng(seed);
  std::vector<std::size_t> fold(data.size(), 0);
  std::size_t offset = 0;
  for (auto& members : byClass) {
    for (std::size_t i = members.size(); i > 1; --i) {
      std::swap(members[i - 1], members[rng.integer(0, i - 1)]);
    }
    for (std::size_t j = 0; j < members.size(); ++j) fold[members[j]] = (offset + j) % k;
    offset = (offset + members.size()) % k;
  }
  return fold;
}

void finalizeResult(CvResult& result) {
  const std::size_t n = result.confusion.size();
  std::size_t total = 0, correct = 0;
  result.perClass.assign(n, {});
  for (std::size_t a = 0; a < n; ++a) {
    std::size_t rowSum = 0, colSum = 0;
    for (std::size_t p = 0; p < n; ++p) {
      rowSum += result.confusion[a][p];
      colSum += result.confusion[p][a];
    }
    total += rowSum;
    correct += result.confusion[a][a];
    auto& m = result.perClass[a];
    const double tp = static_cast<double>(result.confusion[a][a]);
    m.recall = rowSum ? tp / static_cast<double>(rowSum) : 0.0;
    m.truePositiveRate = m.recall;
    m.precision = colSum ? tp / static_cast<double>(colSum) : 0.0;
  }
  result.accuracy = total ? static_cast<double>(correct) / static_cast<double>(total) : 0.0;
  result.meanAccuracy =
      result.foldAccuracies.empty()
          ? 0.0
          : std::accumulate(result.foldAccuracies.begin(), result.foldAccuracies.end(), 0.0) /
                static_cast<double>(result.foldAccuracies.size());
}

CvResult evaluate(const LabeledData& data, const ClassifierSpec& spec, std::size_t k,
                  std::uint64_t seed, std::size_t threads) {
  spec.validate();
  const auto folds = stratifiedKFold(data, k, seed);
  const std::size_t nc = data.numClasses();
  using Matrix = std::vector<std::vector<std::size_t>>;
  std::vector<Matrix> foldConfusion(k, Matrix(nc, std::vector<std::size_t>(nc, 0)));
  std::vector<double> foldAccuracy(k, 0.0);

  parallelFor(
      k,
      [&](std::size_t f) {
        std::vector<std::size_t> trainIdx, testIdx;
        for (std::size_t i = 0; i < data.size(); ++i) (folds[i] == f ? testIdx : trainIdx).push_back(i);
        const LabeledData train = data.subset(trainIdx);
        const LabeledData test = data.subset(testIdx);
        const auto predictions = fitPredict(train, test, spec);
        std::size_t correct = 0;
        for (std::size_t i = 0; i < predictions.size(); ++i) {
          ++foldConfusion[f][test.labels[i]][predictions[i].label];
          if (predictions[i].label == test.labels[i]) ++correct;
        }
        foldAccuracy[f] = testIdx.empty() ? 0.0 : static_cast<double>(correct) / static_cast<double>(testIdx.size());
      },
      threads);

  CvResult result;
  result.classNames = data.classNames;
  result.foldAccuracies = foldAccuracy;
  result.confusion.assign(nc, std::vector<std::size_t>(nc, 0));
  for (const auto& m : foldConfusion) {
    for (std::size_t a = 0; a < nc; ++a) {
      for (std::size_t p = 0; p < nc; ++p) result.confusion[a][p] += m[a][p];
    }
  }
  finalizeResult(result);
  return result;
}

std::vector<FeatureScore> rankFeatures(const LabeledData& data, const ClassifierSpec& spec,
                                       std::size_t k, std::uint64_t seed, std::size_t threads) {
  if (data.numFeatures() == 0) throw std::invalid_argument("rank: no features");
  std::vector<FeatureScore> scores(data.numFeatures());
  parallelFor(
      data.numFeatures(),
      [&](std::size_t f) {
        const auto single = data.selectFeatures({data.featureNames[f]});
        scores[f] = {data.featureNames[f], evaluate(single, spec, k, seed, 1).meanAccuracy};
      },
      threads);
  std::sort(scores.begin(), scores.end(), [](const FeatureScore& a, const FeatureScore& b) {
    if (a.meanAccuracy != b.meanAccuracy) return a.meanAccuracy > b.meanAccuracy;
    return a.name < b.name;
  });
  return scores;
}

namespace {

std::string fixed(double v, int digits = 4) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

}  // namespace

void writeReportText(std::ostream& out, const CvResult& r, const ReportContext& ctx) {
  out << "classifier: " << ctx.spec << '\n'
      << "group:      " << ctx.group << '\n'
      << "instances:  " << ctx.instances << '\n'
      << "folds:      " << ctx.folds << " (stratified, seed " << ctx.seed << ")\n\n";
  out << "fold accuracies:";
  for (double a : r.foldAccuracies) out << ' ' << fixed(a);
  out << "\nmean accuracy:   " << fixed(r.meanAccuracy) << '\n'
      << "pooled accuracy: " << fixed(r.accuracy) << "\n\n";

  std::size_t w = 9;
  for (const auto& c : r.classNames) w = std::max(w, c.size() + 1);
  auto pad = [&](const std::string& s) { return s + std::string(w > s.size() ? w - s.size() : 1, ' '); };
  out << "confusion (rows actual, columns predicted)\n" << pad("");
  for (const auto& c : r.classNames) out << pad(c);
  out << '\n';
  for (std::size_t a = 0; a < r.confusion.size(); ++a) {
    out << pad(r.classNames[a]);
    for (std::size_t count : r.confusion[a]) out << pad(std::to_string(count));
    out << '\n';
  }
  out << '\n' << pad("class") << pad("tp-rate") << pad("precision") << "recall\n";
  for (std::size_t c = 0; c < r.perClass.size(); ++c) {
    out << pad(r.classNames[c]) << pad(fixed(r.perClass[c].truePositiveRate))
        << pad(fixed(r.perClass[c].precision)) << fixed(r.perClass[c].recall) << '\n';
  }
}

void writeReportCsv(std::ostream& out, const CvResult& r, const ReportContext& ctx) {
  out << "record,key,value\n"
      << "meta,spec,\"" << ctx.spec << "\"\n"
      << "meta,group," << ctx.group << '\n'
      << "meta,folds," << ctx.folds << '\n'
      << "meta,seed," << ctx.seed << '\n'
      << "meta,instances," << ctx.instances << '\n';
  for (std::size_t f = 0; f < r.foldAccuracies.size(); ++f) {
    out << "fold," << f + 1 << ',' << formatValue(r.foldAccuracies[f]) << '\n';
  }
  out << "summary,mean_accuracy," << formatValue(r.meanAccuracy) << '\n'
      << "summary,accuracy," << formatValue(r.accuracy) << '\n';
  for (std::size_t a = 0; a < r.confusion.size(); ++a) {
    for (std::size_t p = 0; p < r.confusion[a].size(); ++p) {
      out << "confusion," << r.classNames[a] << '>' << r.classNames[p] << ',' << r.confusion[a][p] << '\n';
    }
  }
  for (std::size_t c = 0; c < r.perClass.size(); ++c) {
    out << "class," << r.classNames[c] << ":tp_rate," << formatValue(r.perClass[c].truePositiveRate) << '\n'
        << "class," << r.classNames[c] << ":precision," << formatValue(r.perClass[c].precision) << '\n'
        << "class," << r.classNames[c] << ":recall," << formatValue(r.perClass[c].recall) << '\n';
  }
}

void writeRankingText(std::ostream& out, const std::vector<FeatureScore>& ranking) {
  out << "rank  accuracy  feature\n";
  for (std::size_t i = 0; i < ranking.size(); ++i) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%4zu  ", i + 1);
    out << buf << fixed(ranking[i].meanAccuracy) << "    " << ranking[i].name << '\n';
  }
}

void writeRankingCsv(std::ostream& out, const std::vector<FeatureScore>& ranking) {
  out << "rank,feature,mean_accuracy\n";
  for (std::size_t i = 0; i < ranking.size(); ++i) {
    out << i + 1 << ',' << ranking[i].name << ',' << formatValue(ranking[i].meanAccuracy) << '\n';
  }
}

}  // namespace simstring
