#include <doctest.h>

#include "oracles.hpp"
#include "simstring/baseline.hpp"
#include "simstring/rlm.hpp"

using namespace simstring;
using oracle::W;

TEST_CASE("RLM vector of the worked example") {
  const auto r = buildRlm(W("aaabb"), W("aaabc"));
  CHECK(r.count(1) == 4);
  CHECK(r.count(2) == 3);
  CHECK(r.count(3) == 2);  // the worked figure prints 1 here
  CHECK(r.count(4) == 1);
  CHECK(r.count(5) == 0);
  CHECK(r.count(9) == 0);
  const auto d = buildRlm(W("ab"), W("xy"));
  CHECK(d.count(1) == 0);
  CHECK(d.count(2) == 0);
  CHECK_THROWS_AS(buildRlm(SymbolString{}, W("a")), std::invalid_argument);
}

TEST_CASE("RLM aggregates") {
  const auto ex = buildRlm(W("aaabb"), W("aaabc"));
  const auto none = buildRlm(W("ab"), W("xy"));
  CHECK(so(ex) == 10);
  CHECK(so(buildRlm(W("ab"), W("ab"))) == 3);
  CHECK(so(none) == 0);
  CHECK(wso(ex) == doctest::Approx(20.0));
  CHECK(wso(ex, 0.0) == doctest::Approx(10.0));
  CHECK(wso(none) == 0.0);
  CHECK(mo(ex) == 4);
  CHECK(mo(none) == 0);
  CHECK(mo(buildRlm(W("a"), W("aaa"))) == 3);
  CHECK(morl(ex) == 1);
  CHECK(morl(none) == 0);
  CHECK(morl(buildRlm(W("ab"), W("abab"))) == 1);
  CHECK(moml(ex) == 4);
  CHECK(moml(none) == 0);
  CHECK(moml(buildRlm(W("ab"), W("ababab"))) == 6);
  CHECK(mlmo(ex) == 1);
  CHECK(mlmo(buildRlm(W("abc"), W("aabbcc"))) == 1);
  CHECK(mlmo(none) == 0);
  CHECK(rlmMclcs(ex) == 4);
  CHECK(rlmMclcs(buildRlm(W("abc"), W("abc"))) == 3);
  CHECK(rlmMclcs(none) == 0);
}

namespace {
void checkAgainstOracle(const SymbolString& a, const SymbolString& b) {
  const auto counts = oracle::rlm(a.symbols(), b.symbols());
  const auto r = buildRlm(a, b);
  for (std::size_t l = 1; l <= a.size(); ++l) REQUIRE(r.count(l) == counts[l]);
  for (double g : {1.0, 2.0}) {
    const auto f = oracle::rlmFeatures(counts, g);
    REQUIRE(wso(r, g) == doctest::Approx(f.wso));
    REQUIRE(moml(r, g) == f.moml);
  }
  const auto f = oracle::rlmFeatures(counts);
  REQUIRE(so(r) == f.so);
  REQUIRE(mo(r) == f.mo);
  REQUIRE(morl(r) == f.morl);
  REQUIRE(mlmo(r) == f.mlmo);
  REQUIRE(rlmMclcs(r) == f.rlmMclcs);
}
}  // namespace

TEST_CASE("RLM matches the distinct-substring scan") {
  const auto all = oracle::allStrings(4, 3);
  for (const auto& a : all) {
    for (const auto& b : all) {
      if (!a.empty()) checkAgainstOracle(a, b);
    }
  }
  RandomSource rng(41);
  for (int i = 0; i < 10000; ++i) {
    checkAgainstOracle(oracle::randomString(rng, 1, 12, 3), oracle::randomString(rng, 0, 12, 3));
  }
  for (int i = 0; i < 200; ++i) {
    checkAgainstOracle(oracle::randomString(rng, 1, 40, 2), oracle::randomString(rng, 1, 40, 2));
  }
}

TEST_CASE("RLM invariants") {
  const auto all = oracle::allStrings(5, 3);
  for (const auto& a : all) {
    if (a.empty()) continue;
    for (std::size_t j = 0; j < all.size(); j += 7) {
      const auto& b = all[j];
      const auto r = buildRlm(a, b);
      REQUIRE(rlmMclcs(r) == mclcsGlobal(a, b).size());
      REQUIRE(morl(r) == mlmo(r));
      REQUIRE(wso(r, 0.0) == doctest::Approx(static_cast<double>(so(r))));
      for (std::size_t l = 1; l <= a.size(); ++l) {
        if (r.count(l) >= 1) {
          for (std::size_t s = 1; s < l; ++s) REQUIRE(r.count(s) >= 1);
        }
        if (l > b.size()) REQUIRE(r.count(l) == 0);
      }
    }
  }
}
