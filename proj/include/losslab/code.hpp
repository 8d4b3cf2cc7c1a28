#pragma once

#include <cstdint>
#include <vector>

#include "losslab/gf2.hpp"

namespace losslab {

/// An [n;k] binary linear code with generator and parity-check matrices.
///
/// The codeword list (sorted ascending by integer value, the canonical order
/// used everywhere for codeword indices) is materialized when k <= 16;
/// operations that need it throw otherwise. Immutable after construction.
class LinearCode {
 public:
  static LinearCode from_generator(const BinMatrix& g);
  static LinearCode from_parity_check(const BinMatrix& h);

  int block_length() const { return n_; }
  int dimension() const { return k_; }
  const BinMatrix& generator() const { return generator_; }
  const BinMatrix& parity_check() const { return parity_check_; }

  bool has_codeword_list() const { return !codewords_.empty(); }
  /// All 2^k codewords sorted ascending by integer value. Throws if k > 16.
  const std::vector<Word>& codewords() const;
  std::size_t size() const { return std::size_t{1} << k_; }

  /// Index of c in the canonical order, or -1 if c is not a codeword.
  int codeword_index(const Word& c) const;
  bool contains(const Word& c) const;

  /// parity_check * y; the zero word exactly when y is a codeword, and
  /// constant on cosets. Length n-k (empty for a full-space code).
  Word syndrome(const Word& y) const;

  /// u * G for an information word u of length k (combination of generator
  /// rows selected by the bits of u).
  Word encode_info(const Word& u) const;

 private:
  LinearCode(BinMatrix g, BinMatrix h);

  int n_, k_;
  BinMatrix generator_, parity_check_;
  std::vector<Word> codewords_;
};

/// The [k;k] code that is all of F_2^k.
LinearCode identity_code(int k);

/// Binary Hamming code H(l), n = 2^l - 1, k = n - l, 2 <= l <= 6. Parity
/// check columns are the binary expansions of 1..n with the least
/// significant bit in row 0.
LinearCode hamming_code(int l);

/// The reference [7;4] code C(3), defined by a fixed 4x7 generator matrix.
LinearCode code_c3();

/// The reference [15;11] code C(4), defined by a fixed 4x15 parity-check
/// matrix. One column of the matrix is zero, so its minimum distance is 1.
LinearCode code_c4();

/// Minimum Hamming weight over nonzero codewords, by enumeration (k <= 16).
int min_distance(const LinearCode& code);

}  // namespace losslab
