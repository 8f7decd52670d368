#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "simstring/ml.hpp"

namespace simstring {

// Fold index per instance. Each class is shuffled, then dealt round-robin; the
// dealing position carries over from one class to the next so fold sizes stay
// balanced as well. Throws std::invalid_argument for k < 2 or a class with fewer
// than k instances.
std::vector<std::size_t> stratifiedKFold(const LabeledData& data, std::size_t k, std::uint64_t seed);

struct ClassMetrics {
  double truePositiveRate = 0.0;  // identical to recall
  double precision = 0.0;         // 0 when the class is never predicted
  double recall = 0.0;
};

struct CvResult {
  std::vector<std::string> classNames;
  std::vector<double> foldAccuracies;
  double meanAccuracy = 0.0;                         // mean of foldAccuracies
  double accuracy = 0.0;                             // trace(confusion) / total
  std::vector<std::vector<std::size_t>> confusion;   // [actual][predicted]
  std::vector<ClassMetrics> perClass;
};

CvResult evaluate(const LabeledData& data, const ClassifierSpec& spec, std::size_t k,
                  std::uint64_t seed, std::size_t threads = 0);

// Recomputes accuracy, meanAccuracy and perClass from confusion/foldAccuracies.
void finalizeResult(CvResult& result);

struct FeatureScore {
  std::string name;
  double meanAccuracy = 0.0;
};

// Cross-validated accuracy of each feature on its own, best first (ties by name).
std::vector<FeatureScore> rankFeatures(const LabeledData& data, const ClassifierSpec& spec,
                                       std::size_t k, std::uint64_t seed, std::size_t threads = 0);

struct ReportContext {
  std::string spec;
  std::string group;
  std::size_t folds = 0;
  std::uint64_t seed = 0;
  std::size_t instances = 0;
};

void writeReportText(std::ostream& out, const CvResult& result, const ReportContext& ctx);
// Rows of record,key,value.
void writeReportCsv(std::ostream& out, const CvResult& result, const ReportContext& ctx);

void writeRankingText(std::ostream& out, const std::vector<FeatureScore>& ranking);
void writeRankingCsv(std::ostream& out, const std::vector<FeatureScore>& ranking);

}  // namespace simstring
