#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "simstring/features.hpp"

namespace simstring {

struct FeatureTiming {
  std::string name;
  std::string family;
  double meanNs = 0.0;  // per pair, excluding matrix construction
};

struct GroupTiming {
  std::string name;
  double featureNs = 0.0;  // sum of member means
  double matrixNs = 0.0;   // COM/RLM construction needed by the members, counted once
  double totalNs = 0.0;
};

struct TimingReport {
  std::size_t pairs = 0;
  std::size_t repetitions = 0;
  std::vector<FeatureTiming> features;  // registry order
  double comBuildNs = 0.0;
  double rlmBuildNs = 0.0;
  std::vector<GroupTiming> groups;
};

// Mean wall time per pair for every registered feature, plus per-group totals.
// Throws std::invalid_argument for fewer than 100 pairs or an empty string.
TimingReport timeFeatures(const std::vector<ComparisonPair>& pairs, const std::vector<std::string>& groups,
                          std::size_t repetitions = 3, const FeatureParams& params = {});

void writeTimingText(std::ostream& out, const TimingReport& report);
void writeTimingCsv(std::ostream& out, const TimingReport& report);

}  // namespace simstring
