#include "simstring/ml.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>

namespace simstring {

LabeledData LabeledData::fromTable(const FeatureTable& table) {
  if (table.labels.size() != table.rows.size()) {
    throw std::invalid_argument("feature table has " + std::to_string(table.rows.size()) +
                                " rows but " + std::to_string(table.labels.size()) + " labels");
  }
  LabeledData data;
  data.featureNames = table.columns;
  data.classNames = table.labels;
  std::sort(data.classNames.begin(), data.classNames.end());
  data.classNames.erase(std::unique(data.classNames.begin(), data.classNames.end()),
                        data.classNames.end());
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    if (table.labels[r].empty()) {
      throw std::invalid_argument("row " + std::to_string(r + 1) + " has no label");
    }
    if (table.rows[r].size() != table.columns.size()) {
      throw std::invalid_argument("row " + std::to_string(r + 1) + " has " +
                                  std::to_string(table.rows[r].size()) + " values, expected " +
                                  std::to_string(table.columns.size()));
    }
  }
  data.rows = table.rows;
  data.labels.reserve(table.labels.size());
  for (const auto& label : table.labels) {
    data.labels.push_back(static_cast<std::size_t>(
        std::lower_bound(data.classNames.begin(), data.classNames.end(), label) -
        data.classNames.begin()));
  }
  return data;
}

LabeledData LabeledData::subset(std::span<const std::size_t> indices) const {
  LabeledData out;
  out.featureNames = featureNames;
  out.classNames = classNames;
  out.rows.reserve(indices.size());
  out.labels.reserve(indices.size());
  for (std::size_t i : indices) {
    out.rows.push_back(rows.at(i));
    out.labels.push_back(labels.at(i));
  }
  return out;
}

LabeledData LabeledData::selectFeatures(const std::vector<std::string>& names) const {
  std::vector<std::size_t> cols;
  for (const auto& name : names) {
    auto it = std::find(featureNames.begin(), featureNames.end(), name);
    if (it == featureNames.end()) throw std::invalid_argument("no feature column \"" + name + "\"");
    cols.push_back(static_cast<std::size_t>(it - featureNames.begin()));
  }
  LabeledData out;
  out.featureNames = names;
  out.classNames = classNames;
  out.labels = labels;
  out.rows.reserve(rows.size());
  for (const auto& row : rows) {
    std::vector<double> r;
    r.reserve(cols.size());
    for (std::size_t c : cols) r.push_back(row[c]);
    out.rows.push_back(std::move(r));
  }
  return out;
}

void ClassifierSpec::validate() const {
  switch (kind) {
    case ClassifierKind::ZeroR:
      break;
    case ClassifierKind::Knn:
      if (knn.k < 1) throw std::invalid_argument("knn: k must be at least 1");
      break;
    case ClassifierKind::Tree:
      if (tree.maxDepth < 1) throw std::invalid_argument("tree: max depth must be at least 1");
      if (tree.minLeaf < 1) throw std::invalid_argument("tree: min leaf must be at least 1");
      break;
    case ClassifierKind::Vote:
      if (children.size() < 2) throw std::invalid_argument("vote: needs at least 2 children");
      for (const auto& child : children) child.validate();
      break;
  }
}

std::string ClassifierSpec::describe() const {
  switch (kind) {
    case ClassifierKind::ZeroR:
      return "zeror";
    case ClassifierKind::Knn:
      return "knn(k=" + std::to_string(knn.k) + ",standardize=" + (knn.standardize ? "1" : "0") +
             ",weighting=" + (knn.weighting == KnnWeighting::Uniform ? "uniform" : "inverse") + ")";
    case ClassifierKind::Tree:
      return "tree(maxDepth=" + std::to_string(tree.maxDepth) +
             ",minLeaf=" + std::to_string(tree.minLeaf) + ")";
    case ClassifierKind::Vote: {
      std::string out = "vote(";
      for (std::size_t i = 0; i < children.size(); ++i) out += (i ? "," : "") + children[i].describe();
      return out + ")";
    }
  }
  return "?";
}

namespace {

void requireTrain(const LabeledData& train) {
  if (train.size() == 0) throw std::invalid_argument("empty training set");
  if (train.numClasses() == 0) throw std::invalid_argument("training set has no classes");
}

std::size_t argmax(const std::vector<double>& p) {
  std::size_t best = 0;
  for (std::size_t c = 1; c < p.size(); ++c) {
    if (p[c] > p[best]) best = c;
  }
  return best;
}

std::vector<std::size_t> classCounts(const LabeledData& data) {
  std::vector<std::size_t> counts(data.numClasses(), 0);
  for (std::size_t y : data.labels) ++counts[y];
  return counts;
}

class ZeroRClassifier final : public Classifier {
 public:
  void fit(const LabeledData& train) override {
    requireTrain(train);
    const auto counts = classCounts(train);
    prediction_.probabilities.assign(counts.size(), 0.0);
    for (std::size_t c = 0; c < counts.size(); ++c) {
      prediction_.probabilities[c] = static_cast<double>(counts[c]) / static_cast<double>(train.size());
    }
    prediction_.label = argmax(prediction_.probabilities);
  }
  Prediction predict(std::span<const double>) const override { return prediction_; }

 private:
  Prediction prediction_;
};

class KnnClassifier final : public Classifier {
 public:
  explicit KnnClassifier(KnnParams params) : params_(params) {}

  void fit(const LabeledData& train) override {
    requireTrain(train);
    if (params_.k > train.size()) {
      throw std::invalid_argument("knn: k=" + std::to_string(params_.k) + " exceeds " +
                                  std::to_string(train.size()) + " training instances");
    }
    numClasses_ = train.numClasses();
    width_ = train.numFeatures();
    active_.clear();
    mean_.assign(width_, 0.0);
    scale_.assign(width_, 1.0);
    const double n = static_cast<double>(train.size());
    for (std::size_t f = 0; f < width_; ++f) {
      double sum = 0.0;
      for (const auto& row : train.rows) sum += row[f];
      const double mean = sum / n;
      double var = 0.0;
      for (const auto& row : train.rows) var += (row[f] - mean) * (row[f] - mean);
      var /= n;
      if (!(var > 0.0)) continue;
      active_.push_back(f);
      if (params_.standardize) {
        mean_[f] = mean;
        scale_[f] = 1.0 / std::sqrt(var);
      } else {
        mean_[f] = 0.0;
      }
    }
    const std::size_t d = active_.size();
    points_.assign(train.size() * d, 0.0);
    for (std::size_t i = 0; i < train.size(); ++i) transform(train.rows[i], &points_[i * d]);
    labels_ = train.labels;
  }

  Prediction predict(std::span<const double> x) const override {
    if (x.size() != width_) throw std::invalid_argument("knn: query has the wrong feature count");
    const std::size_t d = active_.size();
    std::vector<double> q(d);
    transform(x, q.data());
    const std::size_t k = params_.k;
    // (distance², index) of the k best so far, kept sorted; ties favour earlier rows.
    std::vector<std::pair<double, std::size_t>> best;
    best.reserve(k + 1);
    const std::size_t n = labels_.size();
    for (std::size_t i = 0; i < n; ++i) {
      const double* p = &points_[i * d];
      double dist = 0.0;
      for (std::size_t j = 0; j < d; ++j) {
        const double diff = p[j] - q[j];
        dist += diff * diff;
      }
      if (best.size() == k && dist >= best.back().first) continue;
      auto pos = std::upper_bound(best.begin(), best.end(), dist,
                                  [](double v, const auto& e) { return v < e.first; });
      best.insert(pos, {dist, i});
      if (best.size() > k) best.pop_back();
    }
    Prediction pred;
    pred.probabilities.assign(numClasses_, 0.0);
    double total = 0.0;
    for (const auto& [dist2, i] : best) {
      double w = 1.0;
      if (params_.weighting == KnnWeighting::InverseDistance) w = 1.0 / std::max(std::sqrt(dist2), 1e-12);
      pred.probabilities[labels_[i]] += w;
      total += w;
    }
    for (auto& p : pred.probabilities) p /= total;
    pred.label = argmax(pred.probabilities);
    return pred;
  }

 private:
  void transform(std::span<const double> x, double* out) const {
    for (std::size_t j = 0; j < active_.size(); ++j) {
      const std::size_t f = active_[j];
      out[j] = (x[f] - mean_[f]) * scale_[f];
    }
  }

  KnnParams params_;
  std::size_t numClasses_ = 0;
  std::size_t width_ = 0;
  std::vector<std::size_t> active_;
  std::vector<double> mean_, scale_;
  std::vector<double> points_;
  std::vector<std::size_t> labels_;
};

class TreeClassifier final : public Classifier {
 public:
  explicit TreeClassifier(TreeParams params) : params_(params) {}

  void fit(const LabeledData& train) override {
    requireTrain(train);
    nodes_.clear();
    width_ = train.numFeatures();
    numClasses_ = train.numClasses();
    std::vector<std::size_t> idx(train.size());
    std::iota(idx.begin(), idx.end(), 0);
    build(train, idx, 0);
  }

  Prediction predict(std::span<const double> x) const override {
    if (x.size() != width_) throw std::invalid_argument("tree: query has the wrong feature count");
    std::size_t node = 0;
    while (nodes_[node].left != kLeaf) {
      node = x[nodes_[node].feature] <= nodes_[node].threshold ? nodes_[node].left : nodes_[node].right;
    }
    Prediction pred;
    pred.probabilities = nodes_[node].probabilities;
    pred.label = argmax(pred.probabilities);
    return pred;
  }

  TreeShape shape() const {
    TreeShape out;
    out.nodes = nodes_.size();
    out.depth = depthOf(0);
    return out;
  }

 private:
  static constexpr std::size_t kLeaf = static_cast<std::size_t>(-1);

  struct Node {
    std::size_t feature = 0;
    double threshold = 0.0;
    std::size_t left = kLeaf, right = kLeaf;
    std::vector<double> probabilities;
  };

  std::size_t build(const LabeledData& data, std::vector<std::size_t>& idx, std::size_t depth) {
    const std::size_t self = nodes_.size();
    nodes_.emplace_back();
    std::vector<std::size_t> counts(numClasses_, 0);
    for (std::size_t i : idx) ++counts[data.labels[i]];
    auto& leaf = nodes_[self];
    leaf.probabilities.resize(numClasses_);
    for (std::size_t c = 0; c < numClasses_; ++c) {
      leaf.probabilities[c] = static_cast<double>(counts[c]) / static_cast<double>(idx.size());
    }
    const bool pure = std::count(counts.begin(), counts.end(), 0) >=
                      static_cast<std::ptrdiff_t>(numClasses_ - 1);
    if (pure || depth >= params_.maxDepth || idx.size() < 2 * params_.minLeaf) return self;

    double bestGain = 1e-12;
    std::size_t bestFeature = 0;
    double bestThreshold = 0.0;
    bool found = false;
    std::vector<std::size_t> order = idx;
    std::vector<std::size_t> left(numClasses_), right(numClasses_);
    for (std::size_t f = 0; f < width_; ++f) {
      std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return data.rows[a][f] < data.rows[b][f];
      });
      std::fill(left.begin(), left.end(), 0);
      right = counts;
      for (std::size_t pos = 0; pos + 1 < order.size(); ++pos) {
        const std::size_t y = data.labels[order[pos]];
        ++left[y];
        --right[y];
        const double a = data.rows[order[pos]][f];
        const double b = data.rows[order[pos + 1]][f];
        if (!(a < b)) continue;
        if (pos + 1 < params_.minLeaf || order.size() - pos - 1 < params_.minLeaf) continue;
        const double gain = informationGain(left, right);
        if (gain > bestGain) {
          bestGain = gain;
          bestFeature = f;
          bestThreshold = a + (b - a) / 2.0;
          if (!(bestThreshold < b)) bestThreshold = a;
          found = true;
        }
      }
    }
    if (!found) return self;

    std::vector<std::size_t> li, ri;
    for (std::size_t i : idx) (data.rows[i][bestFeature] <= bestThreshold ? li : ri).push_back(i);
    idx.clear();
    idx.shrink_to_fit();
    nodes_[self].feature = bestFeature;
    nodes_[self].threshold = bestThreshold;
    const std::size_t l = build(data, li, depth + 1);
    const std::size_t r = build(data, ri, depth + 1);
    nodes_[self].left = l;
    nodes_[self].right = r;
    return self;
  }

  std::size_t depthOf(std::size_t node) const {
    if (nodes_[node].left == kLeaf) return 0;
    return 1 + std::max(depthOf(nodes_[node].left), depthOf(nodes_[node].right));
  }

  TreeParams params_;
  std::size_t width_ = 0;
  std::size_t numClasses_ = 0;
  std::vector<Node> nodes_;
};

class VoteClassifier final : public Classifier {
 public:
  explicit VoteClassifier(const std::vector<ClassifierSpec>& children) {
    for (const auto& spec : children) children_.push_back(makeClassifier(spec));
  }

  void fit(const LabeledData& train) override {
    requireTrain(train);
    for (auto& child : children_) child->fit(train);
  }

  Prediction predict(std::span<const double> x) const override {
    Prediction pred;
    for (const auto& child : children_) {
      const Prediction p = child->predict(x);
      if (pred.probabilities.empty()) pred.probabilities.assign(p.probabilities.size(), 1.0);
      for (std::size_t c = 0; c < p.probabilities.size(); ++c) {
        pred.probabilities[c] *= std::max(p.probabilities[c], kVoteFloor);
      }
    }
    pred.label = argmax(pred.probabilities);
    const double total = std::accumulate(pred.probabilities.begin(), pred.probabilities.end(), 0.0);
    for (auto& p : pred.probabilities) p /= total;
    return pred;
  }

 private:
  std::vector<std::unique_ptr<Classifier>> children_;
};

}  // namespace

std::unique_ptr<Classifier> makeClassifier(const ClassifierSpec& spec) {
  spec.validate();
  switch (spec.kind) {
    case ClassifierKind::ZeroR:
      return std::make_unique<ZeroRClassifier>();
    case ClassifierKind::Knn:
      return std::make_unique<KnnClassifier>(spec.knn);
    case ClassifierKind::Tree:
      return std::make_unique<TreeClassifier>(spec.tree);
    case ClassifierKind::Vote:
      return std::make_unique<VoteClassifier>(spec.children);
  }
  throw std::invalid_argument("unknown classifier kind");
}

std::vector<Prediction> fitPredict(const LabeledData& train, const LabeledData& test,
                                   const ClassifierSpec& spec) {
  if (train.featureNames != test.featureNames) {
    throw std::invalid_argument("train and test feature schemas differ");
  }
  if (train.classNames != test.classNames) {
    throw std::invalid_argument("train and test class lists differ");
  }
  auto model = makeClassifier(spec);
  model->fit(train);
  std::vector<Prediction> out;
  out.reserve(test.size());
  for (const auto& row : test.rows) out.push_back(model->predict(row));
  return out;
}

TreeShape fitTreeShape(const LabeledData& train, const TreeParams& params) {
  TreeClassifier tree(params);
  tree.fit(train);
  return tree.shape();
}

std::size_t zeroRFit(const LabeledData& train) {
  requireTrain(train);
  const auto counts = classCounts(train);
  return static_cast<std::size_t>(std::max_element(counts.begin(), counts.end()) - counts.begin());
}

double entropy(std::span<const std::size_t> counts) {
  const double total = static_cast<double>(std::accumulate(counts.begin(), counts.end(), std::size_t{0}));
  if (total == 0.0) return 0.0;
  double h = 0.0;
  for (std::size_t c : counts) {
    if (c == 0) continue;
    const double p = static_cast<double>(c) / total;
    h -= p * std::log2(p);
  }
  return h;
}

double informationGain(std::span<const std::size_t> left, std::span<const std::size_t> right) {
  if (left.size() != right.size()) throw std::invalid_argument("informationGain: class count mismatch");
  std::vector<std::size_t> parent(left.size());
  for (std::size_t c = 0; c < left.size(); ++c) parent[c] = left[c] + right[c];
  const double nl = static_cast<double>(std::accumulate(left.begin(), left.end(), std::size_t{0}));
  const double nr = static_cast<double>(std::accumulate(right.begin(), right.end(), std::size_t{0}));
  const double n = nl + nr;
  if (n == 0.0) return 0.0;
  return entropy(parent) - (nl / n) * entropy(left) - (nr / n) * entropy(right);
}

}  // namespace simstring
