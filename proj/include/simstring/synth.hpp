#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "simstring/random.hpp"
#include "simstring/symbol_string.hpp"

namespace simstring {

inline constexpr std::string_view kLabelSame = "SAME";
inline constexpr std::string_view kLabelDifferent = "DIFFERENT";

struct GenConfig {
  std::size_t maxLength = 14;  // M
  double randomness = 0.5;     // R
  std::size_t count = 1;
  std::uint64_t seed = 0;
  Symbol alphabetLo = 65;   // 'A'
  Symbol alphabetHi = 122;  // 'z'

  // Throws std::invalid_argument on M < 1, R outside [0, 1] or an inverted alphabet.
  // count is not checked here; zero yields an empty dataset.
  void validate() const;
};

// One dataset instance. label is "SAME"/"DIFFERENT" for generated pairs, a
// plagiarism class for corpus pairs, or empty when unlabeled.
struct ComparisonPair {
  SymbolString w1;
  SymbolString w2;
  std::string label;
};

// Counts of mutation branches taken; optional out-parameter of the mutators.
struct MutationStats {
  std::size_t truncations = 0;   // c1 branch
  std::size_t replacements = 0;  // c2 branch
  std::size_t shuffles = 0;      // c3 branch
  std::size_t insertions = 0;    // c4 inner branch
  std::size_t moves = 0;         // c5 branch
};

Symbol ranChar(RandomSource& rng, const GenConfig& cfg);

// Truncate to a random prefix (length floored at 1) when ran(0,1) >= 0.9 - R.
SymbolString c1(const SymbolString& w, const GenConfig& cfg, RandomSource& rng,
                MutationStats* stats = nullptr);
// Replace a random position with ranChar when ran(0,1) >= 1 - R.
SymbolString c2(const SymbolString& w, const GenConfig& cfg, RandomSource& rng,
                MutationStats* stats = nullptr);
// Shuffle when ran(0,1) >= 0.6 - sqrt(R): repeatedly remove a symbol (a random
// position when ran(0,1) <= 0.6, else position 0) and prepend it to the output.
SymbolString c3(const SymbolString& w, const GenConfig& cfg, RandomSource& rng,
                MutationStats* stats = nullptr);
// When ran(0,1) >= 0.4 - R and then ran(0,1) >= 0.9 - R: addr(w, ranChar).
SymbolString c4(const SymbolString& w, const GenConfig& cfg, RandomSource& rng,
                MutationStats* stats = nullptr);
// Move a random symbol to the end when ran(0,1) >= 0.4 - R.
SymbolString c5(const SymbolString& w, const GenConfig& cfg, RandomSource& rng,
                MutationStats* stats = nullptr);
// c1, N x c2, c3, N x c4, N x c5 with N = max(1, floor(|w|/2)) taken from the
// current length at the start of each repeated stage.
SymbolString cf(const SymbolString& w, const GenConfig& cfg, RandomSource& rng,
                MutationStats* stats = nullptr);

// ran(1, M) symbols from ranChar.
SymbolString w1Gen(const GenConfig& cfg, RandomSource& rng);

struct GeneratedSecond {
  SymbolString w2;
  std::string_view label;
};

// DIFFERENT with a fresh w1Gen when ran(0,1) > 0.5, otherwise SAME with cf(w1).
GeneratedSecond w2Gen(const SymbolString& w1, const GenConfig& cfg, RandomSource& rng,
                      MutationStats* stats = nullptr);

// Pair `index` of the dataset; drawn from RandomSource::forStream(cfg.seed, index),
// so any index range can be produced independently.
ComparisonPair generatePair(const GenConfig& cfg, std::uint64_t index);

std::vector<ComparisonPair> generateDataset(const GenConfig& cfg);

}  // namespace simstring
