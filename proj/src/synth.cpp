#include "simstring/synth.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace simstring {

namespace {

std::size_t stageRepeats(const SymbolString& w) { return std::max<std::size_t>(1, w.size() / 2); }

std::size_t randomIndex(RandomSource& rng, std::size_t size) {
  return static_cast<std::size_t>(rng.integer(0, size - 1));
}

}  // namespace

void GenConfig::validate() const {
  if (maxLength < 1) throw std::invalid_argument("GenConfig: M must be >= 1");
  if (!(randomness >= 0.0 && randomness <= 1.0)) {
    throw std::invalid_argument("GenConfig: R must lie in [0, 1]");
  }
  if (alphabetLo > alphabetHi) throw std::invalid_argument("GenConfig: alphabetLo > alphabetHi");
}

Symbol ranChar(RandomSource& rng, const GenConfig& cfg) {
  return static_cast<Symbol>(rng.integer(cfg.alphabetLo, cfg.alphabetHi));
}

SymbolString c1(const SymbolString& w, const GenConfig& cfg, RandomSource& rng, MutationStats* stats) {
  if (w.empty()) return w;
  if (rng.real() >= 0.9 - cfg.randomness) {
    if (stats) ++stats->truncations;
    const auto keep = static_cast<std::size_t>(rng.integer(0, w.size()));
    return substring(w, 0, std::max<std::size_t>(1, keep));
  }
  return w;
}

SymbolString c2(const SymbolString& w, const GenConfig& cfg, RandomSource& rng, MutationStats* stats) {
  if (w.empty()) return w;
  if (rng.real() >= 1.0 - cfg.randomness) {
    if (stats) ++stats->replacements;
    const std::size_t p = randomIndex(rng, w.size());
    return rep(w, p, ranChar(rng, cfg));
  }
  return w;
}

SymbolString c3(const SymbolString& w, const GenConfig& cfg, RandomSource& rng, MutationStats* stats) {
  if (rng.real() < 0.6 - std::sqrt(cfg.randomness)) return w;
  if (stats) ++stats->shuffles;
  SymbolString rest = w;
  SymbolString out;
  while (!rest.empty()) {
    std::size_t p = 0;
    if (rng.real() <= 0.6) p = randomIndex(rng, rest.size());
    Removal taken = atr(rest, p);
    out = add(out, taken.symbol);
    rest = std::move(taken.rest);
  }
  return out;
}

SymbolString c4(const SymbolString& w, const GenConfig& cfg, RandomSource& rng, MutationStats* stats) {
  if (rng.real() < 0.4 - cfg.randomness) return w;
  if (rng.real() < 0.9 - cfg.randomness) return w;
  if (stats) ++stats->insertions;
  const Symbol c = ranChar(rng, cfg);
  return addr(w, c, rng);
}

SymbolString c5(const SymbolString& w, const GenConfig& cfg, RandomSource& rng, MutationStats* stats) {
  if (w.empty()) return w;
  if (rng.real() >= 0.4 - cfg.randomness) {
    if (stats) ++stats->moves;
    Removal taken = atr(w, randomIndex(rng, w.size()));
    return concat(taken.rest, SymbolString{taken.symbol});
  }
  return w;
}

SymbolString cf(const SymbolString& w, const GenConfig& cfg, RandomSource& rng, MutationStats* stats) {
  SymbolString out = c1(w, cfg, rng, stats);
  for (std::size_t n = stageRepeats(out); n > 0; --n) out = c2(out, cfg, rng, stats);
  out = c3(out, cfg, rng, stats);
  for (std::size_t n = stageRepeats(out); n > 0; --n) out = c4(out, cfg, rng, stats);
  for (std::size_t n = stageRepeats(out); n > 0; --n) out = c5(out, cfg, rng, stats);
  return out;
}

SymbolString w1Gen(const GenConfig& cfg, RandomSource& rng) {
  const auto length = static_cast<std::size_t>(rng.integer(1, cfg.maxLength));
  std::vector<Symbol> symbols(length);
  for (auto& s : symbols) s = ranChar(rng, cfg);
  return SymbolString(std::move(symbols));
}

GeneratedSecond w2Gen(const SymbolString& w1, const GenConfig& cfg, RandomSource& rng,
                      MutationStats* stats) {
  if (rng.real() > 0.5) return {w1Gen(cfg, rng), kLabelDifferent};
  return {cf(w1, cfg, rng, stats), kLabelSame};
}

ComparisonPair generatePair(const GenConfig& cfg, std::uint64_t index) {
  RandomSource rng = RandomSource::forStream(cfg.seed, index);
  ComparisonPair pair;
  pair.w1 = w1Gen(cfg, rng);
  auto second = w2Gen(pair.w1, cfg, rng);
  pair.w2 = std::move(second.w2);
  pair.label = std::string(second.label);
  return pair;
}

std::vector<ComparisonPair> generateDataset(const GenConfig& cfg) {
  cfg.validate();
  std::vector<ComparisonPair> pairs;
  pairs.reserve(cfg.count);
  for (std::size_t i = 0; i < cfg.count; ++i) pairs.push_back(generatePair(cfg, i));
  return pairs;
}

}  // namespace simstring
