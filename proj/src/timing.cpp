#include "simstring/timing.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <ostream>
#include <stdexcept>

#include "simstring/table_io.hpp"

namespace simstring {

namespace {

using Clock = std::chrono::steady_clock;

// Best of `reps` passes over all pairs, in ns per pair.
template <typename Body>
double timePerPair(std::size_t n, std::size_t reps, Body&& body) {
  double best = 0.0;
  for (std::size_t r = 0; r < reps; ++r) {
    const auto start = Clock::now();
    for (std::size_t i = 0; i < n; ++i) body(i);
    const double ns = std::chrono::duration<double, std::nano>(Clock::now() - start).count();
    if (r == 0 || ns < best) best = ns;
  }
  return best / static_cast<double>(n);
}

volatile double gSink = 0.0;

}  // namespace

TimingReport timeFeatures(const std::vector<ComparisonPair>& pairs, const std::vector<std::string>& groups,
                          std::size_t repetitions, const FeatureParams& params) {
  if (pairs.size() < 100) throw std::invalid_argument("timing needs at least 100 pairs");
  for (const auto& p : pairs) {
    if (p.w1.empty() || p.w2.empty()) throw std::invalid_argument("timing: empty string in input");
  }
  repetitions = std::max<std::size_t>(repetitions, 1);
  const std::size_t n = pairs.size();
  TimingReport report;
  report.pairs = n;
  report.repetitions = repetitions;

  // Contexts with both matrices already built, so feature timings exclude them.
  std::vector<PairContext> contexts;
  contexts.reserve(n);
  for (const auto& p : pairs) {
    contexts.emplace_back(p.w1, p.w2, params);
    contexts.back().com();
    contexts.back().rlm();
  }

  report.comBuildNs = timePerPair(n, repetitions, [&](std::size_t i) {
    ComTable t(pairs[i].w1, pairs[i].w2);
    gSink = gSink + static_cast<double>(t.len1());
  });
  report.rlmBuildNs = timePerPair(n, repetitions, [&](std::size_t i) {
    gSink = gSink + static_cast<double>(buildRlm(pairs[i].w1, pairs[i].w2).count(1));
  });

  for (const auto& def : featureRegistry()) {
    FeatureTiming t{std::string(def.name), std::string(def.family), 0.0};
    t.meanNs = timePerPair(n, repetitions, [&](std::size_t i) { gSink = gSink + def.compute(contexts[i]); });
    report.features.push_back(std::move(t));
  }

  for (const auto& name : groups) {
    const FeatureGroup group = featureGroup(name);
    GroupTiming g{name, 0.0, 0.0, 0.0};
    bool com = false, rlm = false;
    for (const auto* def : group.features) {
      for (const auto& t : report.features) {
        if (t.name == def->name) g.featureNs += t.meanNs;
      }
      com = com || def->matrix == MatrixKind::Com;
      rlm = rlm || def->matrix == MatrixKind::Rlm;
    }
    if (com) g.matrixNs += report.comBuildNs;
    if (rlm) g.matrixNs += report.rlmBuildNs;
    g.totalNs = g.featureNs + g.matrixNs;
    report.groups.push_back(std::move(g));
  }
  return report;
}

void writeTimingText(std::ostream& out, const TimingReport& r) {
  char buf[128];
  out << "pairs: " << r.pairs << ", best of " << r.repetitions << " passes\n\n";
  std::snprintf(buf, sizeof buf, "%-16s %-9s %12s\n", "feature", "family", "mean ns");
  out << buf;
  for (const auto& f : r.features) {
    std::snprintf(buf, sizeof buf, "%-16s %-9s %12.1f\n", f.name.c_str(), f.family.c_str(), f.meanNs);
    out << buf;
  }
  std::snprintf(buf, sizeof buf, "\nCOM build: %.1f ns\nRLM build: %.1f ns\n\n", r.comBuildNs, r.rlmBuildNs);
  out << buf;
  std::snprintf(buf, sizeof buf, "%-10s %12s %12s %12s\n", "group", "features", "matrix", "total");
  out << buf;
  for (const auto& g : r.groups) {
    std::snprintf(buf, sizeof buf, "%-10s %12.1f %12.1f %12.1f\n", g.name.c_str(), g.featureNs, g.matrixNs,
                  g.totalNs);
    out << buf;
  }
}

void writeTimingCsv(std::ostream& out, const TimingReport& r) {
  out << "record,name,family,mean_ns\n";
  for (const auto& f : r.features) out << "feature," << f.name << ',' << f.family << ',' << formatValue(f.meanNs) << '\n';
  out << "matrix,com,com," << formatValue(r.comBuildNs) << '\n'
      << "matrix,rlm,rlm," << formatValue(r.rlmBuildNs) << '\n';
  for (const auto& g : r.groups) out << "group," << g.name << ",," << formatValue(g.totalNs) << '\n';
}

}  // namespace simstring
