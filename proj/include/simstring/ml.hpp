#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "simstring/features.hpp"

namespace simstring {

// Numeric instances with class indices. classNames is sorted, so index order is
// lexicographic name order.
struct LabeledData {
  std::vector<std::string> featureNames;
  std::vector<std::vector<double>> rows;
  std::vector<std::size_t> labels;
  std::vector<std::string> classNames;

  // Throws std::invalid_argument when a row has no label or the wrong width.
  static LabeledData fromTable(const FeatureTable& table);

  std::size_t size() const { return rows.size(); }
  std::size_t numFeatures() const { return featureNames.size(); }
  std::size_t numClasses() const { return classNames.size(); }

  // Same schema and classes, only the given rows.
  LabeledData subset(std::span<const std::size_t> indices) const;
  // Only the named columns, in the given order. Throws std::invalid_argument for
  // unknown names.
  LabeledData selectFeatures(const std::vector<std::string>& names) const;
};

struct Prediction {
  std::size_t label = 0;
  std::vector<double> probabilities;  // one per class, sums to 1
};

enum class KnnWeighting { Uniform, InverseDistance };

struct KnnParams {
  std::size_t k = 5;
  bool standardize = true;
  KnnWeighting weighting = KnnWeighting::Uniform;
};

struct TreeParams {
  std::size_t maxDepth = 10;
  std::size_t minLeaf = 2;
};

enum class ClassifierKind { ZeroR, Knn, Tree, Vote };

struct ClassifierSpec {
  ClassifierKind kind = ClassifierKind::Knn;
  KnnParams knn;
  TreeParams tree;
  std::vector<ClassifierSpec> children;  // vote only

  // Throws std::invalid_argument: knn k < 1, tree limits of 0, vote with < 2 children.
  void validate() const;
  // e.g. "knn(k=5,standardize=1,weighting=uniform)", "vote(knn(...),tree(...))"
  std::string describe() const;
};

class Classifier {
 public:
  virtual ~Classifier() = default;
  // Throws std::invalid_argument for an empty training set.
  virtual void fit(const LabeledData& train) = 0;
  virtual Prediction predict(std::span<const double> x) const = 0;
};

std::unique_ptr<Classifier> makeClassifier(const ClassifierSpec& spec);

// Fits on train and predicts every test row. Throws std::invalid_argument when
// the two schemas differ.
std::vector<Prediction> fitPredict(const LabeledData& train, const LabeledData& test,
                                   const ClassifierSpec& spec);

// Most frequent training class; ties go to the smallest class name.
std::size_t zeroRFit(const LabeledData& train);

struct TreeShape {
  std::size_t nodes = 0;
  std::size_t depth = 0;  // 0 for a single leaf
};
// Fits a tree and reports its size.
TreeShape fitTreeShape(const LabeledData& train, const TreeParams& params);

double entropy(std::span<const std::size_t> counts);
// H(parent) - weighted child entropies, base 2.
double informationGain(std::span<const std::size_t> left, std::span<const std::size_t> right);

// Product of child probabilities, each floored at this value.
inline constexpr double kVoteFloor = 1e-9;

}  // namespace simstring
