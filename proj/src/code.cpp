#include "losslab/code.hpp"

#include <algorithm>
#include <stdexcept>

namespace losslab {

LinearCode::LinearCode(BinMatrix g, BinMatrix h)
    : n_(g.cols()),
      k_(g.rows()),
      generator_(std::move(g)),
      parity_check_(std::move(h)) {
  if (k_ <= 16) {
    codewords_.reserve(std::size_t{1} << k_);
    for (std::uint64_t j = 0; j < (std::uint64_t{1} << k_); ++j) {
      std::uint64_t c = 0;
      for (int i = 0; i < k_; ++i)
        if ((j >> i) & 1) c ^= generator_.row_bits(i);
      codewords_.push_back(Word(n_, c));
    }
    std::sort(codewords_.begin(), codewords_.end(),
              [](const Word& a, const Word& b) { return a.value() < b.value(); });
  }
}

LinearCode LinearCode::from_generator(const BinMatrix& g) {
  if (row_reduce(g).rank != g.rows())
    throw std::invalid_argument("generator matrix must have full row rank");
  return LinearCode(g, null_space(g));
}

LinearCode LinearCode::from_parity_check(const BinMatrix& h) {
  if (row_reduce(h).rank != h.rows())
    throw std::invalid_argument("parity-check matrix must have full row rank");
  BinMatrix g = null_space(h);
  if (g.rows() == 0)
    throw std::invalid_argument("parity-check matrix admits only the zero code");
  return LinearCode(g, h);
}

const std::vector<Word>& LinearCode::codewords() const {
  if (codewords_.empty())
    throw std::out_of_range("code too large to enumerate (k > 16)");
  return codewords_;
}

int LinearCode::codeword_index(const Word& c) const {
  const auto& cws = codewords();
  auto it = std::lower_bound(
      cws.begin(), cws.end(), c.value(),
      [](const Word& w, std::uint64_t v) { return w.value() < v; });
  if (it == cws.end() || it->value() != c.value() || c.length() != n_) return -1;
  return static_cast<int>(it - cws.begin());
}

bool LinearCode::contains(const Word& c) const {
  return c.length() == n_ && syndrome(c).is_zero();
}

Word LinearCode::syndrome(const Word& y) const {
  if (y.length() != n_)
    throw std::invalid_argument("received word length does not match code");
  return parity_check_.multiply(y);
}

Word LinearCode::encode_info(const Word& u) const {
  if (u.length() != k_)
    throw std::invalid_argument("information word length does not match dimension");
  std::uint64_t c = 0;
  for (int i = 0; i < k_; ++i)
    if (u.bit(i + 1)) c ^= generator_.row_bits(i);
  return Word(n_, c);
}

LinearCode identity_code(int k) {
  return LinearCode::from_generator(BinMatrix::identity(k));
}

LinearCode hamming_code(int l) {
  if (l < 2 || l > 6) throw std::out_of_range("hamming_code requires 2 <= l <= 6");
  const int n = (1 << l) - 1;
  BinMatrix h(l, n);
  for (int col = 1; col <= n; ++col)
    for (int r = 0; r < l; ++r)
      if ((col >> r) & 1) h.set(r, col - 1, true);
  return LinearCode::from_parity_check(h);
}

LinearCode code_c3() {
  return LinearCode::from_generator(BinMatrix::from_strings({
      "1000101",
      "0100011",
      "0010110",
      "0001001",
  }));
}

LinearCode code_c4() {
  return LinearCode::from_parity_check(BinMatrix::from_strings({
      "100011100000110",
      "010001011101010",
      "001000010001001",
      "000100000101011",
  }));
}

int min_distance(const LinearCode& code) {
  int best = code.block_length();
  for (const Word& c : code.codewords())
    if (!c.is_zero()) best = std::min(best, weight(c));
  return best;
}

}  // namespace losslab
