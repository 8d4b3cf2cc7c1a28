#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "losslab/channel.hpp"

using namespace losslab;

TEST_CASE("bmsc likelihood") {
  const Bmsc ch(4, 0.2);
  const Word x = Word::parse("1010");
  CHECK(ch.likelihood(x, x) == doctest::Approx(0.4096).epsilon(1e-12));
  CHECK(Bmsc(7, 0.2).likelihood(zero_word(7), basis_word(3, 7)) ==
        doctest::Approx(0.2 * std::pow(0.8, 6)).epsilon(1e-12));

  const Bmsc noiseless(5, 0.0);
  CHECK(noiseless.likelihood(Word(5, 9), Word(5, 9)) == 1.0);
  CHECK(noiseless.likelihood(Word(5, 9), Word(5, 8)) == 0.0);

  // depends only on the Hamming distance
  CHECK(ch.likelihood(Word::parse("0011"), Word::parse("0111")) ==
        ch.likelihood(Word::parse("1111"), Word::parse("0111")));
  CHECK_THROWS_AS(ch.likelihood(Word(3, 0), Word(3, 0)), std::invalid_argument);
  CHECK_THROWS_AS(Bmsc(4, 1.5), std::out_of_range);
}

TEST_CASE("row stochasticity, exhaustive") {
  for (int n : {4, 7, 10})
    for (double p : {0.0, 0.1, 0.35, 0.5, 1.0}) {
      const Bmsc ch(n, p);
      const Word x(n, 5 % (1 << n));
      double sum = 0.0;
      for (std::uint64_t y = 0; y < (std::uint64_t{1} << n); ++y)
        sum += ch.likelihood(x, Word(n, y));
      CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("bmsc sampling") {
  SUBCASE("degenerate p") {
    SplitMix64 rng(1);
    const Word x = Word::parse("0110101");
    for (int t = 0; t < 20; ++t) {
      CHECK(Bmsc(7, 0.0).transmit(x, rng) == x);
      CHECK(Bmsc(7, 1.0).transmit(x, rng) == (x ^ all_ones_word(7)));
    }
  }
  SUBCASE("empirical output distribution matches the likelihood, 4 sigma") {
    const int n = 3;
    const double p = 0.3;
    const Bmsc ch(n, p);
    const Word sent = Word::parse("101");
    const std::uint64_t trials = 200000;
    std::vector<std::uint64_t> counts(8, 0);
    for (std::uint64_t t = 0; t < trials; ++t) {
      SplitMix64 rng = substream(99, t);
      ++counts[static_cast<std::size_t>(ch.transmit(sent, rng).value())];
    }
    for (std::uint64_t y = 0; y < 8; ++y) {
      const double q = ch.likelihood(sent, Word(n, y));
      const double sigma = std::sqrt(static_cast<double>(trials) * q * (1 - q));
      CHECK(std::abs(static_cast<double>(counts[y]) - trials * q) < 4 * sigma);
    }
  }
  SUBCASE("flip rate within 4 sigma") {
    const int n = 7;
    const std::uint64_t trials = 100000;
    const double p = 0.2;
    const Bmsc ch(n, p);
    std::uint64_t flipped = 0;
    for (std::uint64_t t = 0; t < trials; ++t) {
      SplitMix64 rng = substream(2024, t);
      flipped += static_cast<std::uint64_t>(weight(ch.transmit(zero_word(n), rng)));
    }
    const double mean = static_cast<double>(flipped) / static_cast<double>(trials * n);
    const double sigma = std::sqrt(p * (1 - p) / static_cast<double>(trials * n));
    CHECK(std::abs(mean - p) < 4 * sigma);
  }
}

TEST_CASE("reasonable channels") {
  CHECK(is_reasonable(Bmsc(7, 0.2)));
  CHECK_FALSE(is_reasonable(Bmsc(7, 0.5)));  // equality everywhere
  CHECK_FALSE(is_reasonable(Bmsc(7, 0.8)));
}

TEST_CASE("translation invariance") {
  CHECK(is_translation_invariant_channel(Bmsc(6, 0.3)));

  // perturb one row of a tabulated BMSC
  const int n = 3;
  const Bmsc base(n, 0.25);
  Eigen::MatrixXd table(8, 8);
  for (Eigen::Index x = 0; x < 8; ++x)
    for (Eigen::Index y = 0; y < 8; ++y)
      table(x, y) = base.likelihood(Word(n, static_cast<std::uint64_t>(x)),
                                    Word(n, static_cast<std::uint64_t>(y)));
  table(5, 0) += 0.01;
  table(5, 7) -= 0.01;
  const TableChannel perturbed(n, table);
  CHECK_FALSE(is_translation_invariant_channel(perturbed));

  SplitMix64 rng(5);
  CHECK(is_translation_invariant_channel_sampled(Bmsc(10, 0.3), 5000, rng));
}

TEST_CASE("table channel validation") {
  Eigen::MatrixXd bad = Eigen::MatrixXd::Zero(4, 4);
  bad(0, 0) = 0.9;  // row sums 0.9
  for (int r = 1; r < 4; ++r) bad(r, r) = 1.0;
  CHECK_THROWS_AS(TableChannel(2, bad), std::invalid_argument);
  CHECK_THROWS_AS(TableChannel(2, Eigen::MatrixXd::Identity(3, 3)), std::invalid_argument);
}
