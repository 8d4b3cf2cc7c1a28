#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "losslab/code.hpp"

namespace losslab {

/// A bijection f from information indices {0..2^k-1} onto the codewords of
/// an [n;k] code, held as an explicit table of canonical codeword indices.
/// Information index j is identified with the k-bit word int_to_word(j, k)
/// throughout (the fixed sigma of the translation-invariant machinery).
class EncoderMap {
 public:
  EncoderMap(LinearCode code, std::vector<int> info_to_codeword);

  const LinearCode& code() const { return code_; }
  int dimension() const { return code_.dimension(); }
  std::size_t size() const { return table_.size(); }

  Word encode(std::uint64_t info_index) const;
  std::uint64_t decode_info(const Word& codeword) const;

  int codeword_index_of(std::uint64_t info_index) const;
  std::uint64_t info_of(int codeword_index) const;

 private:
  LinearCode code_;
  std::vector<int> table_;    // info index -> codeword index
  std::vector<std::uint64_t> inverse_;  // codeword index -> info index
};

/// f(iota_j) = the codeword with the j-th smallest integer value.
EncoderMap lexicographic_encoder(const LinearCode& code);

/// Reflected Gray encoder over the identity code F_2^k:
/// f(iota_j) = int_to_word(j XOR (j >> 1), k). Consecutive images are at
/// Hamming distance exactly 1. Defined only for the no-redundancy case.
EncoderMap gray_encoder(int k);

/// Images sorted by non-decreasing Hamming weight; equal weights are ordered
/// by ascending integer value.
EncoderMap weight_priority_encoder(const LinearCode& code);

/// Uniformly random bijection, reproducible from the seed.
EncoderMap random_encoder(const LinearCode& code, std::uint64_t seed);

/// The linear encoder u -> u * G' where G' is the reduced row echelon form
/// of the code's generator matrix (a canonical systematic-style basis).
EncoderMap generator_encoder(const LinearCode& code);

/// Linear encoder defined by an explicit basis: row i of `basis` is the
/// image of the information basis word e_(i+1). Rows must span the code.
EncoderMap linear_encoder_from_basis(const LinearCode& code, const BinMatrix& basis);

/// f(a XOR b) = f(a) XOR f(b) for all information pairs, under the fixed
/// index<->word identification. Exhaustive pairwise check; k <= 12.
bool is_linear_encoder(const EncoderMap& f);

/// Pushforward of an information-indexed value table onto codeword pairs:
/// result(ci, cj) = values(f^-1(ci), f^-1(cj)) over canonical codeword
/// indices, so entry (sent, decoded) prices decoding sent as decoded.
Eigen::MatrixXd induced_value(const EncoderMap& f, const Eigen::MatrixXd& values);

}  // namespace losslab
