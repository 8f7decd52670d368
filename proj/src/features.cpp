#include "simstring/features.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

#include "simstring/baseline.hpp"
#include "simstring/parallel.hpp"

namespace simstring {

PairContext::PairContext(const SymbolString& w1, const SymbolString& w2, const FeatureParams& params)
    : w1_(&w1), w2_(&w2), params_(&params) {}

const ComTable& PairContext::com() {
  if (!com_) com_.emplace(*w1_, *w2_);
  return *com_;
}

const RlmVector& PairContext::rlm() {
  if (!rlm_) rlm_.emplace(buildRlm(*w1_, *w2_));
  return *rlm_;
}

namespace {

double len(std::size_t n) { return static_cast<double>(n); }

// Shorter strings leave some fixed positions undefined; those features read as 0.
double acopOrZero(PairContext& ctx, std::size_t p) {
  return p < ctx.w1().size() ? acop(ctx.com(), ctx.w1(), p) : 0.0;
}

constexpr std::array<FeatureDef, 35> kRegistry = {{
    // length
    {"len1", "length", MatrixKind::None, [](PairContext& c) { return len(c.w1().size()); }},
    {"len2", "length", MatrixKind::None, [](PairContext& c) { return len(c.w2().size()); }},
    {"lenDiff", "length", MatrixKind::None,
     [](PairContext& c) { return static_cast<double>(lengthFeatures(c.w1(), c.w2()).diff); }},
    {"lenAbsDiff", "length", MatrixKind::None,
     [](PairContext& c) { return len(lengthFeatures(c.w1(), c.w2()).absDiff); }},
    // lcs
    {"nlcs", "lcs", MatrixKind::None, [](PairContext& c) { return nlcs(c.w1(), c.w2()); }},
    // mclcs
    {"nmclcs_0_0", "mclcs", MatrixKind::None,
     [](PairContext& c) { return nmclcs(c.w1(), c.w2(), MclcsVariant::Start); }},
    {"nmclcs_0_1", "mclcs", MatrixKind::None,
     [](PairContext& c) { return nmclcs(c.w1(), c.w2(), MclcsVariant::SkipFirstOfW2); }},
    {"nmclcs_mid", "mclcs", MatrixKind::None,
     [](PairContext& c) { return nmclcs(c.w1(), c.w2(), MclcsVariant::Middle); }},
    {"nmclcs_global", "mclcs", MatrixKind::None,
     [](PairContext& c) { return nmclcs(c.w1(), c.w2(), MclcsVariant::Global); }},
    // mi
    {"mi_0", "mi", MatrixKind::None,
     [](PairContext& c) { return miShifted(c.w1(), c.w2(), 0, c.params().mi); }},
    {"mi_1", "mi", MatrixKind::None,
     [](PairContext& c) { return miShifted(c.w1(), c.w2(), 1, c.params().mi); }},
    {"mi_4", "mi", MatrixKind::None,
     [](PairContext& c) { return miShifted(c.w1(), c.w2(), 4, c.params().mi); }},
    {"mi_sum", "mi", MatrixKind::None,
     [](PairContext& c) { return miShiftSum(c.w1(), c.w2(), c.params().mi); }},
    // distance
    {"modHamming", "distance", MatrixKind::None,
     [](PairContext& c) { return len(modHamming(c.w1(), c.w2())); }},
    {"levenshtein", "distance", MatrixKind::None,
     [](PairContext& c) { return len(levenshtein(c.w1(), c.w2())); }},
    {"damerau", "distance", MatrixKind::None,
     [](PairContext& c) { return len(damerau(c.w1(), c.w2())); }},
    {"dice", "distance", MatrixKind::None, [](PairContext& c) { return dice(c.w1(), c.w2()); }},
    // wmi
    {"pwmi_0", "wmi", MatrixKind::None,
     [](PairContext& c) { return pwmi(c.w1(), c.w2(), 0, c.params().mi); }},
    {"pwmi_1", "wmi", MatrixKind::None,
     [](PairContext& c) { return pwmi(c.w1(), c.w2(), 1, c.params().mi); }},
    {"pwmi_4", "wmi", MatrixKind::None,
     [](PairContext& c) { return pwmi(c.w1(), c.w2(), 4, c.params().mi); }},
    {"pwmis", "wmi", MatrixKind::None,
     [](PairContext& c) { return pwmis(c.w1(), c.w2(), c.params().mi); }},
    // com
    {"com_0_half", "com", MatrixKind::Com,
     [](PairContext& c) { return len(comCount(c.com(), c.w1(), 0, c.w1().size() / 2)); }},
    {"acop_0", "com", MatrixKind::Com, [](PairContext& c) { return acopOrZero(c, 0); }},
    {"acop_1", "com", MatrixKind::Com, [](PairContext& c) { return acopOrZero(c, 1); }},
    {"tps", "com", MatrixKind::Com, [](PairContext& c) { return tps(c.com(), c.w2()); }},
    {"cod", "com", MatrixKind::Com,
     [](PairContext& c) { return cod(c.com(), c.params().codExponent); }},
    // rlm
    {"so", "rlm", MatrixKind::Rlm, [](PairContext& c) { return len(so(c.rlm())); }},
    {"wso", "rlm", MatrixKind::Rlm, [](PairContext& c) { return wso(c.rlm(), c.params().wsoExponent); }},
    {"mo", "rlm", MatrixKind::Rlm, [](PairContext& c) { return len(mo(c.rlm())); }},
    {"moml", "rlm", MatrixKind::Rlm,
     [](PairContext& c) { return len(moml(c.rlm(), c.params().momlExponent)); }},
    {"morl", "rlm", MatrixKind::Rlm, [](PairContext& c) { return len(morl(c.rlm())); }},
    {"mlmo", "rlm", MatrixKind::Rlm, [](PairContext& c) { return len(mlmo(c.rlm())); }},
    {"rlmMclcs", "rlm", MatrixKind::Rlm, [](PairContext& c) { return len(rlmMclcs(c.rlm())); }},
    // normalized variants (ranking studies; only in "all")
    {"tps_norm", "com", MatrixKind::Com,
     [](PairContext& c) { return tps(c.com(), c.w2()) / len(c.w2().size()); }},
    {"so_norm", "rlm", MatrixKind::Rlm,
     [](PairContext& c) { return len(so(c.rlm())) / len(c.w2().size()); }},
}};

constexpr std::array<std::string_view, 9> kGroupNames = {
    "length", "lcs", "mclcs", "mi", "distance", "wmi", "com", "rlm", "all"};

constexpr std::array<std::string_view, 2> kNormalized = {"tps_norm", "so_norm"};

bool isNormalized(std::string_view name) {
  return std::find(kNormalized.begin(), kNormalized.end(), name) != kNormalized.end();
}

}  // namespace

std::span<const FeatureDef> featureRegistry() { return kRegistry; }

const FeatureDef& featureByName(std::string_view name) {
  for (const auto& def : kRegistry) {
    if (def.name == name) return def;
  }
  throw std::invalid_argument("unknown feature \"" + std::string(name) + "\"");
}

std::span<const std::string_view> groupNames() { return kGroupNames; }

std::vector<std::string> FeatureGroup::featureNames() const {
  std::vector<std::string> names;
  names.reserve(features.size());
  for (const auto* def : features) names.emplace_back(def->name);
  return names;
}

FeatureGroup featureGroup(std::string_view name) {
  if (std::find(kGroupNames.begin(), kGroupNames.end(), name) == kGroupNames.end()) {
    std::string valid;
    for (auto g : kGroupNames) {
      if (!valid.empty()) valid += ", ";
      valid += g;
    }
    throw std::invalid_argument("unknown feature group \"" + std::string(name) + "\" (valid: " +
                                valid + ")");
  }
  // Group-specific features first, then the length features.
  FeatureGroup group{std::string(name), {}};
  for (const auto& def : kRegistry) {
    if (def.family == "length") continue;
    if (name == "all" || (def.family == name && !isNormalized(def.name))) {
      group.features.push_back(&def);
    }
  }
  for (const auto& def : kRegistry) {
    if (def.family == "length") group.features.push_back(&def);
  }
  return group;
}

FeatureGroup customGroup(std::string_view name, const std::vector<std::string>& featureNames) {
  FeatureGroup group{std::string(name), {}};
  for (const auto& feature : featureNames) {
    const FeatureDef* def = &featureByName(feature);
    if (std::find(group.features.begin(), group.features.end(), def) != group.features.end()) {
      throw std::invalid_argument("duplicate feature \"" + feature + "\"");
    }
    group.features.push_back(def);
  }
  return group;
}

double FeatureVector::at(std::string_view name) const {
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i] == name) return values[i];
  }
  throw std::out_of_range("feature \"" + std::string(name) + "\" not in vector");
}

namespace {

std::vector<double> computeValues(const ComparisonPair& pair, const FeatureGroup& group,
                                  const FeatureParams& params) {
  if (pair.w1.empty() || pair.w2.empty()) {
    throw std::invalid_argument(pair.w1.empty() ? "w1 is empty" : "w2 is empty");
  }
  PairContext ctx(pair.w1, pair.w2, params);
  std::vector<double> values;
  values.reserve(group.features.size());
  for (const auto* def : group.features) {
    const double value = def->compute(ctx);
    if (!std::isfinite(value)) {
      throw std::domain_error("feature " + std::string(def->name) + " is not finite");
    }
    values.push_back(value);
  }
  return values;
}

}  // namespace

FeatureVector extractGroup(const ComparisonPair& pair, const FeatureGroup& group,
                           const FeatureParams& params) {
  FeatureVector fv;
  fv.values = computeValues(pair, group, params);
  fv.names = group.featureNames();
  if (!pair.label.empty()) fv.label = pair.label;
  return fv;
}

FeatureVector normalizedVariants(const ComparisonPair& pair, const FeatureParams& params) {
  return extractGroup(pair, customGroup("normalized", {std::string(kNormalized[0]),
                                                       std::string(kNormalized[1])}),
                      params);
}

ExtractionResult extractDataset(const std::vector<ComparisonPair>& pairs, const FeatureGroup& group,
                                std::span<const std::size_t> lines, const FeatureParams& params,
                                std::size_t threads) {
  if (!lines.empty() && lines.size() != pairs.size()) {
    throw std::invalid_argument("extractDataset: line numbers do not match pair count");
  }
  std::vector<std::vector<double>> rows(pairs.size());
  std::vector<std::string> errors(pairs.size());
  parallelFor(
      pairs.size(),
      [&](std::size_t i) {
        try {
          rows[i] = computeValues(pairs[i], group, params);
        } catch (const std::exception& e) {
          errors[i] = e.what();
          if (errors[i].empty()) errors[i] = "extraction failed";
        }
      },
      threads);

  ExtractionResult result;
  result.table.columns = group.featureNames();
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (!errors[i].empty()) {
      result.skipped.push_back({lines.empty() ? i + 1 : lines[i], errors[i]});
      continue;
    }
    result.table.rows.push_back(std::move(rows[i]));
    result.table.labels.push_back(pairs[i].label);
  }
  return result;
}

}  // namespace simstring
