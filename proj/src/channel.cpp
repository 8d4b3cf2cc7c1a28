#include "losslab/channel.hpp"

#include <cmath>
#include <stdexcept>

namespace losslab {

Bmsc::Bmsc(int n, double p) : n_(n), p_(p) {
  if (n < 1 || n > 64) throw std::out_of_range("channel block length must be in [1, 64]");
  if (!(p >= 0.0 && p <= 1.0)) throw std::out_of_range("crossover probability must be in [0, 1]");
  // iterated products, not pow(): bit-reproducible across platforms
  by_distance_.assign(static_cast<std::size_t>(n) + 1, 1.0);
  for (int d = 0; d <= n; ++d) {
    double v = 1.0;
    for (int i = 0; i < d; ++i) v *= p;
    for (int i = d; i < n; ++i) v *= 1.0 - p;
    by_distance_[static_cast<std::size_t>(d)] = v;
  }
}

double Bmsc::likelihood(const Word& sent, const Word& received) const {
  if (sent.length() != n_ || received.length() != n_)
    throw std::invalid_argument("word length does not match channel");
  return by_distance_[static_cast<std::size_t>(hamming_distance(sent, received))];
}

Word Bmsc::transmit(const Word& sent, SplitMix64& rng) const {
  if (sent.length() != n_)
    throw std::invalid_argument("word length does not match channel");
  std::uint64_t flips = 0;
  for (int i = 0; i < n_; ++i)
    if (rng.next_unit() < p_) flips |= 1ull << i;
  return Word(n_, sent.value() ^ flips);
}

TableChannel::TableChannel(int n, Eigen::MatrixXd table)
    : n_(n), table_(std::move(table)) {
  if (n < 1 || n > 12) throw std::out_of_range("table channel supports n <= 12");
  const auto size = Eigen::Index{1} << n;
  if (table_.rows() != size || table_.cols() != size)
    throw std::invalid_argument("table must be 2^n x 2^n");
  for (Eigen::Index x = 0; x < size; ++x) {
    if (table_.row(x).minCoeff() < 0.0)
      throw std::invalid_argument("negative channel probability");
    if (std::abs(table_.row(x).sum() - 1.0) > 1e-9)
      throw std::invalid_argument("channel row does not sum to 1");
  }
}

double TableChannel::likelihood(const Word& sent, const Word& received) const {
  if (sent.length() != n_ || received.length() != n_)
    throw std::invalid_argument("word length does not match channel");
  return table_(static_cast<Eigen::Index>(sent.value()),
                static_cast<Eigen::Index>(received.value()));
}

bool is_reasonable(const Channel& channel) {
  const int n = channel.block_length();
  if (n > 10) throw std::out_of_range("is_reasonable enumerates only n <= 10");
  const std::uint64_t size = 1ull << n;
  for (std::uint64_t x = 0; x < size; ++x) {
    const Word wx(n, x);
    const double diag = channel.likelihood(wx, wx);
    for (std::uint64_t y = 0; y < size; ++y) {
      if (y == x) continue;
      if (!(diag > channel.likelihood(wx, Word(n, y)))) return false;
    }
  }
  return true;
}

bool is_translation_invariant_channel(const Channel& channel) {
  const int n = channel.block_length();
  if (n > 8) throw std::out_of_range("exhaustive invariance check supports n <= 8");
  const std::uint64_t size = 1ull << n;
  for (std::uint64_t x = 0; x < size; ++x)
    for (std::uint64_t y = 0; y < size; ++y) {
      const double base = channel.likelihood(Word(n, x), Word(n, y));
      for (std::uint64_t z = 1; z < size; ++z)
        if (channel.likelihood(Word(n, x ^ z), Word(n, y ^ z)) != base) return false;
    }
  return true;
}

bool is_translation_invariant_channel_sampled(const Channel& channel,
                                              int triples, SplitMix64& rng) {
  const int n = channel.block_length();
  const std::uint64_t mask = n >= 64 ? ~0ull : (1ull << n) - 1;
  for (int t = 0; t < triples; ++t) {
    const std::uint64_t x = rng.next() & mask;
    const std::uint64_t y = rng.next() & mask;
    const std::uint64_t z = rng.next() & mask;
    if (channel.likelihood(Word(n, x), Word(n, y)) !=
        channel.likelihood(Word(n, x ^ z), Word(n, y ^ z)))
      return false;
  }
  return true;
}

}  // namespace losslab
