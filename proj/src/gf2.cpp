#include "losslab/gf2.hpp"

#include <bit>
#include <stdexcept>

namespace losslab {

namespace {

std::uint64_t length_mask(int n) {
  return n >= 64 ? ~0ull : (1ull << n) - 1;
}

void check_same_length(const Word& x, const Word& y) {
  if (x.length() != y.length())
    throw std::invalid_argument("word length mismatch: " +
                                std::to_string(x.length()) + " vs " +
                                std::to_string(y.length()));
}

}  // namespace

Word::Word(int length, std::uint64_t bits) : bits_(bits), length_(length) {
  if (length < 1 || length > 64)
    throw std::out_of_range("word length must be in [1, 64]");
  if (length < 64 && bits >= (1ull << length))
    throw std::out_of_range("word value out of range for length " +
                            std::to_string(length));
}

Word Word::parse(std::string_view s) {
  Word w(static_cast<int>(s.size()), 0);
  for (std::size_t j = 0; j < s.size(); ++j) {
    if (s[j] == '1')
      w.bits_ |= 1ull << j;
    else if (s[j] != '0')
      throw std::invalid_argument("word string must contain only 0/1");
  }
  return w;
}

bool Word::bit(int i) const {
  if (i < 1 || i > length_) throw std::out_of_range("word coordinate out of range");
  return (bits_ >> (i - 1)) & 1;
}

void Word::set_bit(int i, bool v) {
  if (i < 1 || i > length_) throw std::out_of_range("word coordinate out of range");
  if (v)
    bits_ |= 1ull << (i - 1);
  else
    bits_ &= ~(1ull << (i - 1));
}

std::string Word::str() const {
  std::string s(static_cast<std::size_t>(length_), '0');
  for (int i = 0; i < length_; ++i)
    if ((bits_ >> i) & 1) s[static_cast<std::size_t>(i)] = '1';
  return s;
}

Word operator^(Word a, Word b) {
  check_same_length(a, b);
  a.bits_ ^= b.bits_;
  return a;
}

Word int_to_word(std::uint64_t value, int n) {
  if (n < 1 || n > 64) throw std::out_of_range("word length must be in [1, 64]");
  if (n < 64 && value >= (1ull << n))
    throw std::out_of_range("integer does not fit in " + std::to_string(n) + " bits");
  return Word(n, value);
}

Word zero_word(int n) { return Word(n, 0); }

Word basis_word(int i, int n) {
  Word w(n, 0);
  w.set_bit(i, true);
  return w;
}

Word all_ones_word(int n) { return Word(n, length_mask(n)); }

int weight(const Word& x) { return std::popcount(x.value()); }

int hamming_distance(const Word& x, const Word& y) {
  check_same_length(x, y);
  return std::popcount(x.value() ^ y.value());
}

int total_order_distance(const Word& x, const Word& y) {
  check_same_length(x, y);
  return std::bit_width(x.value() ^ y.value());
}

std::vector<int> support(const Word& x) {
  std::vector<int> s;
  for (int i = 1; i <= x.length(); ++i)
    if (x.bit(i)) s.push_back(i);
  return s;
}

BinMatrix::BinMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 1 || cols > 64)
    throw std::out_of_range("matrix dimensions out of range");
  row_.assign(static_cast<std::size_t>(rows), 0);
}

BinMatrix BinMatrix::from_strings(const std::vector<std::string>& rows) {
  if (rows.empty()) throw std::invalid_argument("matrix needs at least one row");
  BinMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows.front().size()));
  for (int r = 0; r < m.rows_; ++r) {
    const std::string& s = rows[static_cast<std::size_t>(r)];
    if (static_cast<int>(s.size()) != m.cols_)
      throw std::invalid_argument("ragged matrix rows");
    m.row_[static_cast<std::size_t>(r)] = Word::parse(s).value();
  }
  return m;
}

BinMatrix BinMatrix::identity(int n) {
  BinMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.row_[static_cast<std::size_t>(i)] = 1ull << i;
  return m;
}

bool BinMatrix::at(int r, int c) const {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
    throw std::out_of_range("matrix index out of range");
  return (row_[static_cast<std::size_t>(r)] >> c) & 1;
}

void BinMatrix::set(int r, int c, bool v) {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
    throw std::out_of_range("matrix index out of range");
  if (v)
    row_[static_cast<std::size_t>(r)] |= 1ull << c;
  else
    row_[static_cast<std::size_t>(r)] &= ~(1ull << c);
}

std::uint64_t BinMatrix::row_bits(int r) const {
  if (r < 0 || r >= rows_) throw std::out_of_range("matrix row out of range");
  return row_[static_cast<std::size_t>(r)];
}

void BinMatrix::set_row_bits(int r, std::uint64_t bits) {
  if (r < 0 || r >= rows_) throw std::out_of_range("matrix row out of range");
  if (bits & ~length_mask(cols_)) throw std::out_of_range("row bits exceed cols");
  row_[static_cast<std::size_t>(r)] = bits;
}

Word BinMatrix::row_word(int r) const { return Word(cols_, row_bits(r)); }

Word BinMatrix::multiply(const Word& v) const {
  if (v.length() != cols_)
    throw std::invalid_argument("vector length does not match matrix cols");
  std::uint64_t out = 0;
  for (int r = 0; r < rows_; ++r) {
    const int parity = std::popcount(row_[static_cast<std::size_t>(r)] & v.value()) & 1;
    out |= static_cast<std::uint64_t>(parity) << r;
  }
  // a 0-row matrix (full-space code) yields the empty word
  return rows_ == 0 ? Word() : Word(rows_, out);
}

RowReduction row_reduce(const BinMatrix& m) {
  RowReduction out{m, 0, {}};
  BinMatrix& a = out.rref;
  int r = 0;
  for (int c = 0; c < a.cols() && r < a.rows(); ++c) {
    int piv = -1;
    for (int i = r; i < a.rows(); ++i)
      if ((a.row_bits(i) >> c) & 1) { piv = i; break; }
    if (piv < 0) continue;
    std::uint64_t tmp = a.row_bits(r);
    a.set_row_bits(r, a.row_bits(piv));
    a.set_row_bits(piv, tmp);
    for (int i = 0; i < a.rows(); ++i)
      if (i != r && ((a.row_bits(i) >> c) & 1))
        a.set_row_bits(i, a.row_bits(i) ^ a.row_bits(r));
    out.pivot_cols.push_back(c);
    ++r;
  }
  out.rank = r;
  return out;
}

BinMatrix null_space(const BinMatrix& m) {
  const RowReduction rr = row_reduce(m);
  std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
  for (int c : rr.pivot_cols) is_pivot[static_cast<std::size_t>(c)] = true;

  std::vector<std::uint64_t> basis;
  for (int f = 0; f < m.cols(); ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    std::uint64_t v = 1ull << f;
    for (int i = 0; i < rr.rank; ++i)
      if ((rr.rref.row_bits(i) >> f) & 1)
        v |= 1ull << rr.pivot_cols[static_cast<std::size_t>(i)];
    basis.push_back(v);
  }
  BinMatrix out(static_cast<int>(basis.size()), m.cols());
  for (std::size_t i = 0; i < basis.size(); ++i)
    out.set_row_bits(static_cast<int>(i), basis[i]);
  return out;
}

BinMatrix product_transposed(const BinMatrix& a, const BinMatrix& b) {
  if (a.cols() != b.cols())
    throw std::invalid_argument("A B^T requires equal column counts");
  BinMatrix out(a.rows(), std::max(1, b.rows()));
  for (int i = 0; i < a.rows(); ++i) {
    std::uint64_t bits = 0;
    for (int j = 0; j < b.rows(); ++j)
      bits |= static_cast<std::uint64_t>(std::popcount(a.row_bits(i) & b.row_bits(j)) & 1) << j;
    out.set_row_bits(i, bits);
  }
  return out;
}

}  // namespace losslab
