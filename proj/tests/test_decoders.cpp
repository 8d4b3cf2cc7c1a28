#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>
#include <set>

#include "losslab/decoder.hpp"
#include "oracles.hpp"

using namespace losslab;

namespace {

int metric_dh(const Word& a, const Word& b) { return hamming_distance(a, b); }
int metric_dt(const Word& a, const Word& b) { return total_order_distance(a, b); }

void check_rules_equal(const Decoder& a, const Decoder& b) {
  const int n = a.code().block_length();
  for (std::uint64_t y = 0; y < (std::uint64_t{1} << n); ++y) {
    const Word wy(n, y);
    CHECK(a.decide(wy).support == b.decide(wy).support);
  }
}

}  // namespace

TEST_CASE("ML decoding on H(3)") {
  const LinearCode h3 = hamming_code(3);
  const Decoder ml = ml_decoder(h3, Bmsc(7, 0.2));

  SUBCASE("codewords decode to themselves") {
    for (const Word& c : h3.codewords()) {
      const Decision d = ml.decide(c);
      CHECK(d.is_point_mass());
      CHECK(h3.codewords()[static_cast<std::size_t>(d.support[0])] == c);
    }
  }
  SUBCASE("every word decodes to the unique codeword within distance 1") {
    for (std::uint64_t y = 0; y < 128; ++y) {
      const Word wy(7, y);
      const Decision d = ml.decide(wy);
      CHECK(d.is_point_mass());
      CHECK(hamming_distance(wy, h3.codewords()[static_cast<std::size_t>(d.support[0])]) <= 1);
    }
  }
  SUBCASE("rule does not depend on p below 1/2") {
    check_rules_equal(ml, ml_decoder(h3, Bmsc(7, 0.35)));
  }
}

TEST_CASE("ML equals NN under the Hamming metric, ties included") {
  for (const LinearCode& code : {hamming_code(3), code_c3(), hamming_code(2)})
    for (double p : {0.05, 0.25, 0.45}) {
      const Decoder ml = ml_decoder(code, Bmsc(code.block_length(), p));
      const Decoder nn = nn_decoder(code, metric_dh, "nn-dh");
      check_rules_equal(ml, nn);
    }
}

TEST_CASE("ML via brute-force likelihood for p > 1/2 prefers distant codewords") {
  const LinearCode rep = hamming_code(2);
  const Decoder ml = ml_decoder(rep, Bmsc(3, 0.8));
  const Decision d = ml.decide(Word::parse("100"));
  // argmax likelihood at p = 0.8 is the farthest codeword
  CHECK(d.support == std::vector<int>{1});
}

TEST_CASE("NN decoder basics") {
  const LinearCode rep = hamming_code(2);
  const Decoder nn = nn_decoder(rep, metric_dh, "nn-dh");
  const Decision d = nn.decide(Word::parse("110"));
  CHECK(d.is_point_mass());
  CHECK(rep.codewords()[static_cast<std::size_t>(d.support[0])] == Word::parse("111"));
}

TEST_CASE("accelerated total-order decoder equals brute force") {
  SUBCASE("exhaustive on the [7;4] codes") {
    for (const LinearCode& code : {hamming_code(3), code_c3()}) {
      const Decoder fast = total_order_decoder(code);
      for (std::uint64_t y = 0; y < 128; ++y) {
        const Word wy(7, y);
        CHECK(fast.decide(wy).support == oracles::brute_nn_support(code, wy, metric_dt));
      }
    }
  }
  SUBCASE("sampled on the [15;11] codes") {
    for (const LinearCode& code : {hamming_code(4), code_c4()}) {
      const Decoder fast = total_order_decoder(code);
      SplitMix64 rng(42);
      for (int t = 0; t < 2000; ++t) {
        const Word y(15, rng.next() & 0x7fff);
        CHECK(fast.decide(y).support == oracles::brute_nn_support(code, y, metric_dt));
      }
    }
  }
}

TEST_CASE("total-order tie sets are cosets, hence powers of two") {
  for (const LinearCode& code : {hamming_code(3), code_c3()}) {
    const Decoder dec = total_order_decoder(code);
    for (std::uint64_t y = 0; y < 128; ++y) {
      const Decision d = dec.decide(Word(7, y));
      CHECK(std::has_single_bit(d.support.size()));
    }
    for (const Word& c : code.codewords()) {
      const Decision d = dec.decide(c);
      CHECK(d.is_point_mass());
      CHECK(code.codewords()[static_cast<std::size_t>(d.support[0])] == c);
    }
  }
}

TEST_CASE("precomputed decision tables reproduce the rule") {
  for (const LinearCode& code : {hamming_code(3), code_c3()}) {
    const Decoder lazy = total_order_decoder(code);
    const Decoder table = precompute_decisions(lazy);
    check_rules_equal(lazy, table);
  }
}

TEST_CASE("trivial decoder") {
  const Decoder t = trivial_decoder(4);
  for (std::uint64_t y = 0; y < 16; ++y) {
    const Decision d = t.decide(Word(4, y));
    CHECK(d.is_point_mass());
    CHECK(t.code().codewords()[static_cast<std::size_t>(d.support[0])].value() == y);
  }
  const auto regions = decision_regions(t);
  for (std::size_t ci = 0; ci < regions.size(); ++ci) {
    REQUIRE(regions[ci].size() == 1);
    CHECK(regions[ci][0].first.value() == ci);
  }
}

TEST_CASE("swap decoder") {
  const LinearCode h3 = hamming_code(3);
  const Decoder a = ml_decoder(h3, Bmsc(7, 0.2));
  const Word c1 = h3.codewords()[2];
  const Word c2 = h3.codewords()[9];
  const Decoder b = swap_decoder(a, c1, c2);

  CHECK(h3.codewords()[static_cast<std::size_t>(b.decide(c1).support[0])] == c2);
  CHECK(h3.codewords()[static_cast<std::size_t>(b.decide(c2).support[0])] == c1);
  for (std::uint64_t y = 0; y < 128; ++y) {
    if (y == c1.value() || y == c2.value()) continue;
    CHECK(b.decide(Word(7, y)).support == a.decide(Word(7, y)).support);
  }
  check_rules_equal(swap_decoder(b, c1, c2), a);  // involution

  CHECK_THROWS_AS(swap_decoder(a, c1, c1), std::invalid_argument);
  CHECK_THROWS_AS(swap_decoder(a, c1, Word::parse("1000000")), std::invalid_argument);
}

TEST_CASE("decision regions are a fractional partition") {
  const LinearCode c3 = code_c3();
  for (const Decoder& dec :
       {ml_decoder(c3, Bmsc(7, 0.2)), total_order_decoder(c3)}) {
    const auto regions = decision_regions(dec);
    // every received word carries total mass one
    std::vector<double> per_word(128, 0.0);
    double total = 0.0;
    for (const auto& region : regions)
      for (const auto& [word, mass] : region) {
        per_word[static_cast<std::size_t>(word.value())] += mass;
        total += mass;
      }
    for (double w : per_word) CHECK(w == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(total == doctest::Approx(128.0).epsilon(1e-12));
  }

  // perfect code: spheres of radius one
  const auto ml_regions = decision_regions(ml_decoder(hamming_code(3), Bmsc(7, 0.1)));
  for (const auto& region : ml_regions) CHECK(region.size() == 8);
}

TEST_CASE("disagreement sets") {
  const LinearCode h3 = hamming_code(3);
  const Decoder a = ml_decoder(h3, Bmsc(7, 0.2));
  const Decoder b = total_order_decoder(h3);

  SUBCASE("equal decoders give empty sets") {
    const auto sets = disagreement_sets(a, a, h3.codewords()[0], h3.codewords()[1]);
    CHECK(sets.v1.empty());
    CHECK(sets.v2.empty());
  }
  SUBCASE("disjoint and antisymmetric") {
    const Word c1 = h3.codewords()[0];
    const Word c2 = h3.codewords()[1];
    const auto fwd = disagreement_sets(a, b, c1, c2);
    const auto rev = disagreement_sets(a, b, c2, c1);
    std::set<std::uint64_t> v1, v2;
    for (const Word& y : fwd.v1) v1.insert(y.value());
    for (const Word& y : fwd.v2) v2.insert(y.value());
    for (std::uint64_t y : v1) CHECK(v2.count(y) == 0);
    // swapping (c1, c2) swaps (V1, V2)
    std::set<std::uint64_t> rv1, rv2;
    for (const Word& y : rev.v1) rv1.insert(y.value());
    for (const Word& y : rev.v2) rv2.insert(y.value());
    CHECK(rv1 == v2);
    CHECK(rv2 == v1);
  }
}
