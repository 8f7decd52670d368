#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "simstring/com.hpp"
#include "simstring/mutual_info.hpp"
#include "simstring/rlm.hpp"
#include "simstring/synth.hpp"

namespace simstring {

struct FeatureParams {
  MiConfig mi;            // g = 2, m = 2
  double codExponent = 1.0;
  double wsoExponent = 1.0;
  double momlExponent = 1.0;
};

// Per-pair evaluation state. The COM table and RLM vector are built on first use
// and shared by every feature derived from them.
class PairContext {
 public:
  PairContext(const SymbolString& w1, const SymbolString& w2, const FeatureParams& params = {});

  const SymbolString& w1() const { return *w1_; }
  const SymbolString& w2() const { return *w2_; }
  const FeatureParams& params() const { return *params_; }

  const ComTable& com();
  const RlmVector& rlm();

 private:
  const SymbolString* w1_;
  const SymbolString* w2_;
  const FeatureParams* params_;
  std::optional<ComTable> com_;
  std::optional<RlmVector> rlm_;
};

enum class MatrixKind { None, Com, Rlm };

struct FeatureDef {
  std::string_view name;
  std::string_view family;  // the feature group whose computation it belongs to
  MatrixKind matrix;
  double (*compute)(PairContext&);
};

// Every registered feature, in canonical order (the order of the "all" group).
std::span<const FeatureDef> featureRegistry();
// Throws std::invalid_argument for unknown names.
const FeatureDef& featureByName(std::string_view name);

// Valid group names: length, lcs, mclcs, mi, distance, wmi, com, rlm, all.
std::span<const std::string_view> groupNames();

struct FeatureGroup {
  std::string name;
  std::vector<const FeatureDef*> features;

  std::vector<std::string> featureNames() const;
};

// Table-4 groups, each including the four length features; "all" is the
// deduplicated union plus the normalized variants. Throws std::invalid_argument
// listing the valid names for an unknown group.
FeatureGroup featureGroup(std::string_view name);
// Exactly the named features, in the given order.
FeatureGroup customGroup(std::string_view name, const std::vector<std::string>& featureNames);

struct FeatureVector {
  std::vector<std::string> names;
  std::vector<double> values;
  std::optional<std::string> label;

  // Throws std::out_of_range for a missing name.
  double at(std::string_view name) const;
};

// Throws std::invalid_argument for empty strings and std::domain_error when a
// feature evaluates to a non-finite value.
FeatureVector extractGroup(const ComparisonPair& pair, const FeatureGroup& group,
                           const FeatureParams& params = {});
// {tps/|w2|, so/|w2|}
FeatureVector normalizedVariants(const ComparisonPair& pair, const FeatureParams& params = {});

// Row-oriented feature table with a shared column schema.
struct FeatureTable {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
  std::vector<std::string> labels;  // one per row; may be empty strings

  std::size_t size() const { return rows.size(); }
};

struct SkippedInstance {
  std::size_t line;  // input line number (or index when not read from a file)
  std::string reason;
};

struct ExtractionResult {
  FeatureTable table;
  std::vector<SkippedInstance> skipped;
};

// Extracts `group` for every pair in input order. Invalid instances are skipped
// and reported; `lines` (optional) supplies input line numbers for the report.
ExtractionResult extractDataset(const std::vector<ComparisonPair>& pairs, const FeatureGroup& group,
                                std::span<const std::size_t> lines = {},
                                const FeatureParams& params = {}, std::size_t threads = 0);

}  // namespace simstring
