#include "losslab/encoder.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <utility>

#include "losslab/rng.hpp"

namespace losslab {

EncoderMap::EncoderMap(LinearCode code, std::vector<int> info_to_codeword)
    : code_(std::move(code)), table_(std::move(info_to_codeword)) {
  const std::size_t m = code_.size();
  if (!code_.has_codeword_list())
    throw std::out_of_range("encoder requires an enumerable code (k <= 16)");
  if (table_.size() != m)
    throw std::invalid_argument("encoder table must have 2^k entries");
  inverse_.assign(m, m);  // m = invalid marker
  for (std::size_t j = 0; j < m; ++j) {
    const int ci = table_[j];
    if (ci < 0 || static_cast<std::size_t>(ci) >= m || inverse_[static_cast<std::size_t>(ci)] != m)
      throw std::invalid_argument("encoder table is not a bijection");
    inverse_[static_cast<std::size_t>(ci)] = j;
  }
}

Word EncoderMap::encode(std::uint64_t info_index) const {
  return code_.codewords()[static_cast<std::size_t>(codeword_index_of(info_index))];
}

std::uint64_t EncoderMap::decode_info(const Word& codeword) const {
  const int ci = code_.codeword_index(codeword);
  if (ci < 0) throw std::invalid_argument("word is not a codeword");
  return info_of(ci);
}

int EncoderMap::codeword_index_of(std::uint64_t info_index) const {
  if (info_index >= table_.size()) throw std::out_of_range("information index out of range");
  return table_[static_cast<std::size_t>(info_index)];
}

std::uint64_t EncoderMap::info_of(int codeword_index) const {
  if (codeword_index < 0 || static_cast<std::size_t>(codeword_index) >= inverse_.size())
    throw std::out_of_range("codeword index out of range");
  return inverse_[static_cast<std::size_t>(codeword_index)];
}

EncoderMap lexicographic_encoder(const LinearCode& code) {
  std::vector<int> table(code.size());
  std::iota(table.begin(), table.end(), 0);  // canonical order is already sorted
  return EncoderMap(code, std::move(table));
}

EncoderMap gray_encoder(int k) {
  if (k < 1 || k > 16) throw std::out_of_range("gray_encoder requires 1 <= k <= 16");
  LinearCode code = identity_code(k);
  // identity code: codeword index == integer value
  std::vector<int> table(code.size());
  for (std::uint64_t j = 0; j < table.size(); ++j)
    table[static_cast<std::size_t>(j)] = static_cast<int>(j ^ (j >> 1));
  return EncoderMap(std::move(code), std::move(table));
}

EncoderMap weight_priority_encoder(const LinearCode& code) {
  const auto& cws = code.codewords();
  std::vector<int> order(cws.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return weight(cws[static_cast<std::size_t>(a)]) < weight(cws[static_cast<std::size_t>(b)]);
  });  // stable: equal weights stay in ascending integer order
  return EncoderMap(code, std::move(order));
}

EncoderMap random_encoder(const LinearCode& code, std::uint64_t seed) {
  std::vector<int> table(code.size());
  std::iota(table.begin(), table.end(), 0);
  SplitMix64 rng = substream(seed, 0);
  for (std::size_t i = table.size() - 1; i > 0; --i)
    std::swap(table[i], table[rng.next_below(static_cast<std::uint32_t>(i + 1))]);
  return EncoderMap(code, std::move(table));
}

EncoderMap generator_encoder(const LinearCode& code) {
  return linear_encoder_from_basis(code, row_reduce(code.generator()).rref);
}

EncoderMap linear_encoder_from_basis(const LinearCode& code, const BinMatrix& basis) {
  const int k = code.dimension();
  if (basis.rows() != k || basis.cols() != code.block_length())
    throw std::invalid_argument("basis shape must be k x n");
  std::vector<int> table(code.size());
  for (std::uint64_t j = 0; j < table.size(); ++j) {
    std::uint64_t c = 0;
    for (int i = 0; i < k; ++i)
      if ((j >> i) & 1) c ^= basis.row_bits(i);
    const int ci = code.codeword_index(Word(code.block_length(), c));
    if (ci < 0) throw std::invalid_argument("basis rows do not lie in the code");
    table[static_cast<std::size_t>(j)] = ci;
  }
  return EncoderMap(code, std::move(table));  // bijectivity check rejects rank-deficient bases
}

bool is_linear_encoder(const EncoderMap& f) {
  const int k = f.dimension();
  if (k > 12) throw std::out_of_range("pairwise linearity check supports k <= 12");
  const std::uint64_t m = std::uint64_t{1} << k;
  std::vector<std::uint64_t> img(m);
  for (std::uint64_t j = 0; j < m; ++j) img[j] = f.encode(j).value();
  for (std::uint64_t a = 0; a < m; ++a)
    for (std::uint64_t b = a; b < m; ++b)
      if (img[a ^ b] != (img[a] ^ img[b])) return false;
  return true;
}

Eigen::MatrixXd induced_value(const EncoderMap& f, const Eigen::MatrixXd& values) {
  const auto m = static_cast<Eigen::Index>(f.size());
  if (values.rows() != m || values.cols() != m)
    throw std::invalid_argument("value table must be 2^k x 2^k");
  Eigen::MatrixXd out(m, m);
  for (Eigen::Index ci = 0; ci < m; ++ci)
    for (Eigen::Index cj = 0; cj < m; ++cj)
      out(ci, cj) = values(static_cast<Eigen::Index>(f.info_of(static_cast<int>(ci))),
                           static_cast<Eigen::Index>(f.info_of(static_cast<int>(cj))));
  return out;
}

}  // namespace losslab
