#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace losslab {

/// A word of n bits over GF(2), 1 <= n <= 64. Coordinate i (1-based) carries
/// positional weight 2^(i-1), so coordinate 1 is the least significant bit
/// and the integer value of a word is its bit pattern read LSB-first.
///
/// A default-constructed word has length 0 and is used only as the syndrome
/// of a full-space code; every other construction path enforces n >= 1.
class Word {
 public:
  Word() = default;
  Word(int length, std::uint64_t bits);

  /// Parses "1011..."; character j of the string is coordinate j+1.
  static Word parse(std::string_view s);

  int length() const { return length_; }
  std::uint64_t value() const { return bits_; }
  bool bit(int i) const;  // coordinate i in [1, length]
  void set_bit(int i, bool v);
  bool is_zero() const { return bits_ == 0; }
  std::string str() const;

  friend Word operator^(Word a, Word b);
  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::uint64_t bits_ = 0;
  int length_ = 0;
};

/// Inverse pair of bijections between [0, 2^n) and words of length n.
Word int_to_word(std::uint64_t value, int n);
inline std::uint64_t word_to_int(const Word& x) { return x.value(); }

Word zero_word(int n);
Word basis_word(int i, int n);  // e_i, the word with only coordinate i set
Word all_ones_word(int n);

/// Hamming weight |{i : x_i = 1}|.
int weight(const Word& x);

/// Number of coordinates at which x and y differ. Throws on length mismatch.
int hamming_distance(const Word& x, const Word& y);

/// Chain (total-order) metric: the largest coordinate index at which x and y
/// differ, 0 when x = y. Values lie in {0, 1, ..., n}; it is an ultrametric.
int total_order_distance(const Word& x, const Word& y);

/// {i : x_i = 1}, ascending.
std::vector<int> support(const Word& x);

/// Dense bit matrix over GF(2); each row is stored as a 64-bit mask, so
/// cols <= 64. Row/column indices are 0-based; column c of a row corresponds
/// to word coordinate c+1.
class BinMatrix {
 public:
  BinMatrix(int rows, int cols);
  static BinMatrix from_strings(const std::vector<std::string>& rows);
  static BinMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool at(int r, int c) const;
  void set(int r, int c, bool v);
  std::uint64_t row_bits(int r) const;
  void set_row_bits(int r, std::uint64_t bits);
  Word row_word(int r) const;  // length = cols

  /// M * v over GF(2); v has length cols, result has length rows.
  Word multiply(const Word& v) const;

  friend bool operator==(const BinMatrix&, const BinMatrix&) = default;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<std::uint64_t> row_;
};

struct RowReduction {
  BinMatrix rref;
  int rank = 0;
  std::vector<int> pivot_cols;  // 0-based, ascending
};

/// Reduced row echelon form over GF(2). Preserves the row space.
RowReduction row_reduce(const BinMatrix& m);

/// Basis of {v : M v = 0 over GF(2)}, one basis vector per row. The number
/// of rows equals cols - rank(M); a full-rank square matrix yields a 0-row
/// result.
BinMatrix null_space(const BinMatrix& m);

/// A * B^T over GF(2).
BinMatrix product_transposed(const BinMatrix& a, const BinMatrix& b);

}  // namespace losslab
