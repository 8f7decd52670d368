#include "simstring/mutual_info.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace simstring {

namespace {

constexpr std::size_t kDenseAlphabetLimit = 2048;

// Evaluates Σ ρ(c1,c2) log_g(ρ(c1,c2) / (ρ(c1) ρ(c2))) for rotated alignments of
// one string pair. Symbols are remapped once to dense ids shared by both strings,
// so equal symbols share an id.
class AlignedMi {
 public:
  AlignedMi(const SymbolString& w1, const SymbolString& w2, const MiConfig& cfg)
      : mode_(cfg.cooccurrence), invLogBase_(1.0 / std::log(cfg.logBase)) {
    if (w1.empty() || w2.empty()) {
      throw std::invalid_argument("mutual information: empty alignment");
    }
    std::vector<Symbol> alphabet(w1.begin(), w1.end());
    alphabet.insert(alphabet.end(), w2.begin(), w2.end());
    std::sort(alphabet.begin(), alphabet.end());
    alphabet.erase(std::unique(alphabet.begin(), alphabet.end()), alphabet.end());
    alphabetSize_ = alphabet.size();
    auto dense = [&alphabet](const SymbolString& w) {
      std::vector<std::uint32_t> ids(w.size());
      for (std::size_t i = 0; i < w.size(); ++i) {
        ids[i] = static_cast<std::uint32_t>(
            std::lower_bound(alphabet.begin(), alphabet.end(), w[i]) - alphabet.begin());
      }
      return ids;
    };
    ids1_ = dense(w1);
    ids2_ = dense(w2);
    positions_ = std::min(w1.size(), w2.size());
    logs_.resize(positions_ + 1, 0.0);
    for (std::size_t k = 1; k <= positions_; ++k) logs_[k] = std::log(static_cast<double>(k));
    marginal1_.assign(alphabetSize_, 0);
    marginal2_.assign(alphabetSize_, 0);
    if (alphabetSize_ <= kDenseAlphabetLimit) joint_.assign(alphabetSize_ * alphabetSize_, 0);
  }

  // rot1 / rot2 are left rotations applied to w1 / w2 before alignment.
  double evaluate(std::size_t rot1, std::size_t rot2, double equalWeight) {
    const std::size_t n1 = ids1_.size();
    const std::size_t n2 = ids2_.size();
    rot1 %= n1;
    rot2 %= n2;
    const double logN = logs_[positions_];
    const double invN = 1.0 / static_cast<double>(positions_);
    const bool equalOnly = mode_ == CoOccurrence::EqualPairsOnly;

    for (std::size_t p = 0, i = rot1, j = rot2; p < positions_; ++p) {
      ++marginal1_[ids1_[i]];
      ++marginal2_[ids2_[j]];
      if (++i == n1) i = 0;
      if (++j == n2) j = 0;
    }

    auto term = [&](std::uint32_t a, std::uint32_t b, std::uint32_t count) {
      const double value = static_cast<double>(count) * invN *
                           (logs_[count] + logN - logs_[marginal1_[a]] - logs_[marginal2_[b]]) *
                           invLogBase_;
      return a == b ? equalWeight * value : value;
    };

    double total = 0.0;
    if (!joint_.empty()) {
      touched_.clear();
      for (std::size_t p = 0, i = rot1, j = rot2; p < positions_; ++p) {
        const std::uint32_t a = ids1_[i];
        const std::uint32_t b = ids2_[j];
        if (++i == n1) i = 0;
        if (++j == n2) j = 0;
        if (equalOnly && a != b) continue;
        const std::size_t cell = static_cast<std::size_t>(a) * alphabetSize_ + b;
        if (joint_[cell]++ == 0) touched_.push_back(cell);
      }
      // Sorted cell order keeps the floating-point summation order canonical.
      std::sort(touched_.begin(), touched_.end());
      for (std::size_t cell : touched_) {
        const auto a = static_cast<std::uint32_t>(cell / alphabetSize_);
        const auto b = static_cast<std::uint32_t>(cell % alphabetSize_);
        total += term(a, b, joint_[cell]);
        joint_[cell] = 0;
      }
    } else {
      pairs_.clear();
      for (std::size_t p = 0, i = rot1, j = rot2; p < positions_; ++p) {
        const std::uint32_t a = ids1_[i];
        const std::uint32_t b = ids2_[j];
        if (++i == n1) i = 0;
        if (++j == n2) j = 0;
        if (equalOnly && a != b) continue;
        pairs_.push_back((static_cast<std::uint64_t>(a) << 32) | b);
      }
      std::sort(pairs_.begin(), pairs_.end());
      for (std::size_t s = 0; s < pairs_.size();) {
        std::size_t e = s;
        while (e < pairs_.size() && pairs_[e] == pairs_[s]) ++e;
        total += term(static_cast<std::uint32_t>(pairs_[s] >> 32),
                      static_cast<std::uint32_t>(pairs_[s] & 0xffffffffU),
                      static_cast<std::uint32_t>(e - s));
        s = e;
      }
    }

    for (std::size_t p = 0, i = rot1, j = rot2; p < positions_; ++p) {
      marginal1_[ids1_[i]] = 0;
      marginal2_[ids2_[j]] = 0;
      if (++i == n1) i = 0;
      if (++j == n2) j = 0;
    }
    return total;
  }

  std::size_t length1() const { return ids1_.size(); }
  std::size_t length2() const { return ids2_.size(); }

 private:
  CoOccurrence mode_;
  double invLogBase_;
  std::size_t alphabetSize_ = 0;
  std::size_t positions_ = 0;
  std::vector<std::uint32_t> ids1_;
  std::vector<std::uint32_t> ids2_;
  std::vector<double> logs_;
  std::vector<std::uint32_t> marginal1_;
  std::vector<std::uint32_t> marginal2_;
  std::vector<std::uint32_t> joint_;
  std::vector<std::size_t> touched_;
  std::vector<std::uint64_t> pairs_;
};

double pwmiWith(AlignedMi& kernel, std::size_t d, double weight) {
  if (kernel.length1() > kernel.length2()) return kernel.evaluate(d, 0, weight);
  return kernel.evaluate(0, d, weight);
}

}  // namespace

void MiConfig::validate() const {
  if (!(logBase > 1.0) || !std::isfinite(logBase)) {
    throw std::invalid_argument("MiConfig: log base must be a finite value > 1");
  }
  if (!(weight > 0.0) || !std::isfinite(weight)) {
    throw std::invalid_argument("MiConfig: weight must be a finite value > 0");
  }
}

double AlignedJointDistribution::jointAt(Symbol c1, Symbol c2) const {
  const auto it = joint.find({c1, c2});
  return it == joint.end() ? 0.0 : it->second;
}

AlignedJointDistribution alignedJoint(const SymbolString& w1, const SymbolString& w2,
                                      CoOccurrence mode) {
  if (w1.empty() || w2.empty()) throw std::invalid_argument("alignedJoint: empty alignment");
  AlignedJointDistribution dist;
  dist.positions = std::min(w1.size(), w2.size());
  const double unit = 1.0 / static_cast<double>(dist.positions);
  for (std::size_t p = 0; p < dist.positions; ++p) {
    dist.marginal1[w1[p]] += unit;
    dist.marginal2[w2[p]] += unit;
    if (mode == CoOccurrence::AllAlignedPairs || w1[p] == w2[p]) dist.joint[{w1[p], w2[p]}] += unit;
  }
  return dist;
}

double mi(const SymbolString& w1, const SymbolString& w2, const MiConfig& cfg) {
  cfg.validate();
  AlignedMi kernel(w1, w2, cfg);
  return kernel.evaluate(0, 0, 1.0);
}

double miShifted(const SymbolString& w1, const SymbolString& w2, std::size_t d,
                 const MiConfig& cfg) {
  cfg.validate();
  AlignedMi kernel(w1, w2, cfg);
  return kernel.evaluate(0, d, 1.0);
}

double miShiftSum(const SymbolString& w1, const SymbolString& w2, const MiConfig& cfg) {
  cfg.validate();
  AlignedMi kernel(w1, w2, cfg);
  double total = 0.0;
  for (std::size_t d = 0; d < w2.size(); ++d) total += kernel.evaluate(0, d, 1.0);
  return total;
}

double pwmi(const SymbolString& w1, const SymbolString& w2, std::size_t d, const MiConfig& cfg) {
  cfg.validate();
  AlignedMi kernel(w1, w2, cfg);
  return pwmiWith(kernel, d, cfg.weight);
}

double pwmis(const SymbolString& w1, const SymbolString& w2, const MiConfig& cfg) {
  cfg.validate();
  AlignedMi kernel(w1, w2, cfg);
  const std::size_t shifts = std::max(w1.size(), w2.size());
  double total = 0.0;
  for (std::size_t d = 0; d < shifts; ++d) total += pwmiWith(kernel, d, cfg.weight);
  return total;
}

}  // namespace simstring
