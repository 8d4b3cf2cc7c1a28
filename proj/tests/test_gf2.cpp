#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "losslab/gf2.hpp"

using namespace losslab;

TEST_CASE("weight") {
  CHECK(weight(Word::parse("0000")) == 0);
  CHECK(weight(basis_word(3, 7)) == 1);
  CHECK(weight(Word::parse("1011")) == 3);
  for (std::uint64_t v = 0; v < 64; ++v)
    CHECK(weight(Word(6, v)) == hamming_distance(Word(6, v), zero_word(6)));
}

TEST_CASE("hamming distance") {
  const Word x = Word::parse("1010");
  CHECK(hamming_distance(x, x) == 0);
  CHECK(hamming_distance(Word::parse("0000"), Word::parse("1111")) == 4);
  CHECK(hamming_distance(Word::parse("1010"), Word::parse("0011")) == 2);
  CHECK_THROWS_AS(hamming_distance(Word(3, 0), Word(4, 0)), std::invalid_argument);
}

TEST_CASE("total-order distance") {
  const Word x = Word::parse("0110101");
  CHECK(total_order_distance(x, x) == 0);
  CHECK(total_order_distance(Word::parse("1000000"), Word::parse("0000000")) == 1);
  CHECK(total_order_distance(Word::parse("0000001"), Word::parse("0000000")) == 7);
  CHECK_THROWS_AS(total_order_distance(Word(3, 0), Word(4, 0)), std::invalid_argument);
}

TEST_CASE("metric axioms, exhaustive n=4") {
  const int n = 4;
  for (std::uint64_t a = 0; a < 16; ++a)
    for (std::uint64_t b = 0; b < 16; ++b) {
      const Word x(n, a), y(n, b);
      const int dh = hamming_distance(x, y);
      const int dt = total_order_distance(x, y);
      CHECK(dh >= 0);
      CHECK(dh <= n);
      CHECK(dt <= n);
      CHECK(dh == hamming_distance(y, x));
      CHECK(dt == total_order_distance(y, x));
      CHECK((dh == 0) == (a == b));
      CHECK((dt == 0) == (a == b));
      for (std::uint64_t c = 0; c < 16; ++c) {
        const Word z(n, c);
        CHECK(hamming_distance(x, z) <= dh + hamming_distance(y, z));
        // d_T is an ultrametric
        CHECK(total_order_distance(x, z) <= std::max(dt, total_order_distance(y, z)));
      }
    }
}

TEST_CASE("word/integer bijection") {
  CHECK(word_to_int(Word::parse("0000")) == 0);
  CHECK(word_to_int(Word::parse("1010")) == 5);  // 1*1 + 0*2 + 1*4 + 0*8
  CHECK(int_to_word(15, 4) == Word::parse("1111"));
  CHECK_THROWS_AS(int_to_word(16, 4), std::out_of_range);
  for (int n = 1; n <= 10; ++n)
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v)
      CHECK(word_to_int(int_to_word(v, n)) == v);
}

TEST_CASE("word parse/str round trip and bit access") {
  const Word w = Word::parse("0110001");
  CHECK(w.str() == "0110001");
  CHECK(w.length() == 7);
  CHECK(w.bit(2));
  CHECK(w.bit(7));
  CHECK_FALSE(w.bit(1));
  CHECK_THROWS_AS(w.bit(8), std::out_of_range);
  CHECK_THROWS_AS(Word::parse("10x1"), std::invalid_argument);
  CHECK(all_ones_word(5) == Word::parse("11111"));
}

TEST_CASE("support") {
  CHECK(support(Word::parse("0000")).empty());
  CHECK(support(Word::parse("1010")) == std::vector<int>{1, 3});
  CHECK(support(all_ones_word(7)) == std::vector<int>{1, 2, 3, 4, 5, 6, 7});
  for (std::uint64_t v = 0; v < 128; ++v)
    CHECK(static_cast<int>(support(Word(7, v)).size()) == weight(Word(7, v)));
}

namespace {

// row space of a matrix as the set of all row combinations
std::set<std::uint64_t> row_space(const BinMatrix& m) {
  std::set<std::uint64_t> span;
  for (std::uint64_t combo = 0; combo < (std::uint64_t{1} << m.rows()); ++combo) {
    std::uint64_t v = 0;
    for (int i = 0; i < m.rows(); ++i)
      if ((combo >> i) & 1) v ^= m.row_bits(i);
    span.insert(v);
  }
  return span;
}

}  // namespace

TEST_CASE("row reduction") {
  SUBCASE("identity is fixed") {
    const BinMatrix id = BinMatrix::identity(5);
    const RowReduction rr = row_reduce(id);
    CHECK(rr.rref == id);
    CHECK(rr.rank == 5);
  }
  SUBCASE("zero matrix") {
    const BinMatrix z(3, 5);
    CHECK(row_reduce(z).rank == 0);
    CHECK(null_space(z).rows() == 5);
  }
  SUBCASE("Hamming parity check") {
    const BinMatrix h = BinMatrix::from_strings({"1010101", "0110011", "0001111"});
    CHECK(row_reduce(h).rank == 3);
    CHECK(null_space(h).rows() == 4);
  }
  SUBCASE("row space preserved, random matrices") {
    std::uint64_t state = 12345;
    auto next = [&] { return state = state * 6364136223846793005ull + 1442695040888963407ull; };
    for (int trial = 0; trial < 20; ++trial) {
      BinMatrix m(4, 4 + static_cast<int>(next() % 5));
      for (int r = 0; r < m.rows(); ++r)
        m.set_row_bits(r, next() & ((1ull << m.cols()) - 1));
      CHECK(row_space(m) == row_space(row_reduce(m).rref));
    }
  }
}

TEST_CASE("null space") {
  std::uint64_t state = 99;
  auto next = [&] { return state = state * 6364136223846793005ull + 1442695040888963407ull; };
  for (int trial = 0; trial < 20; ++trial) {
    const int cols = 6;
    BinMatrix m(3, cols);
    for (int r = 0; r < m.rows(); ++r) m.set_row_bits(r, next() & ((1ull << cols) - 1));
    const RowReduction rr = row_reduce(m);
    const BinMatrix ns = null_space(m);
    CHECK(rr.rank + ns.rows() == cols);
    for (int i = 0; i < ns.rows(); ++i)
      CHECK(m.multiply(ns.row_word(i)).is_zero());
    // reduced and original agree on every kernel membership
    for (std::uint64_t v = 0; v < (1ull << cols); ++v) {
      const Word w(cols, v);
      CHECK(m.multiply(w).is_zero() == rr.rref.multiply(w).is_zero());
    }
  }
}

TEST_CASE("matrix product against parity") {
  const BinMatrix g = BinMatrix::from_strings({"1000101", "0100011"});
  const BinMatrix h = null_space(g);
  const BinMatrix z = product_transposed(g, h);
  for (int r = 0; r < z.rows(); ++r) CHECK(z.row_bits(r) == 0);
}
