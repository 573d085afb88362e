#include "seqinv/gf2.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <utility>

namespace seqinv::gf2 {

namespace {

constexpr std::size_t words_for(std::size_t bits) {
  return (bits + BitVec::word_bits - 1) / BitVec::word_bits;
}

constexpr BitVec::word_type bit_mask(std::size_t i) {
  return BitVec::word_type{1} << (i % BitVec::word_bits);
}

void xor_words_from(BitVec& dst, const BitVec& src, std::size_t first_word) {
  auto d = dst.words();
  auto s = src.words();
  for (std::size_t k = first_word; k < d.size(); ++k) d[k] ^= s[k];
}

// Gauss(-Jordan) elimination in place. Pivots are searched column by column
// among the first `pivot_columns` columns; `reduced` also clears the pivot
// column above the pivot row. Returns the pivot columns in ascending order.
std::vector<std::size_t> eliminate(std::vector<BitVec>& rows, std::size_t pivot_columns,
                                   std::vector<BitVec>* transform, bool reduced) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < pivot_columns && r < rows.size(); ++c) {
    const std::size_t w = c / BitVec::word_bits;
    const auto mask = bit_mask(c);
    std::size_t p = r;
    while (p < rows.size() && (rows[p].words()[w] & mask) == 0) ++p;
    if (p == rows.size()) continue;
    if (p != r) {
      std::swap(rows[p], rows[r]);
      if (transform) std::swap((*transform)[p], (*transform)[r]);
    }
    // Row r is zero in every column before c, so XOR can start at word w.
    for (std::size_t i = reduced ? 0 : r + 1; i < rows.size(); ++i) {
      if (i == r || (rows[i].words()[w] & mask) == 0) continue;
      xor_words_from(rows[i], rows[r], w);
      if (transform) (*transform)[i] ^= (*transform)[r];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

// ---------------------------------------------------------------------------
// BitVec

BitVec::BitVec(std::size_t len, bool value)
    : words_(words_for(len), value ? ~word_type{0} : word_type{0}), len_(len) {
  if (value && len % word_bits != 0) words_.back() &= bit_mask(len) - 1;
}

BitVec BitVec::from_string(std::string_view bits) {
  BitVec v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      v.set(i);
    } else if (bits[i] != '0') {
      throw std::invalid_argument("bit string contains a character other than 0/1");
    }
  }
  return v;
}

BitVec BitVec::from_uint(std::uint64_t value, std::size_t len) {
  if (len > word_bits) throw std::invalid_argument("from_uint: length exceeds 64 bits");
  BitVec v(len);
  if (len != 0) v.words_[0] = len == word_bits ? value : value & (bit_mask(len) - 1);
  return v;
}

bool BitVec::get(std::size_t i) const {
  if (i >= len_) throw std::out_of_range("BitVec index out of range");
  return (words_[i / word_bits] & bit_mask(i)) != 0;
}

void BitVec::set(std::size_t i, bool value) {
  if (i >= len_) throw std::out_of_range("BitVec index out of range");
  if (value) {
    words_[i / word_bits] |= bit_mask(i);
  } else {
    words_[i / word_bits] &= ~bit_mask(i);
  }
}

void BitVec::flip(std::size_t i) {
  if (i >= len_) throw std::out_of_range("BitVec index out of range");
  words_[i / word_bits] ^= bit_mask(i);
}

void BitVec::push_back(bool value) {
  resize(len_ + 1);
  if (value) words_[(len_ - 1) / word_bits] |= bit_mask(len_ - 1);
}

void BitVec::resize(std::size_t len) {
  words_.resize(words_for(len), 0);
  len_ = len;
  if (len % word_bits != 0) words_.back() &= bit_mask(len) - 1;
}

BitVec& BitVec::operator^=(const BitVec& other) {
  if (other.len_ != len_) throw std::invalid_argument("BitVec xor: length mismatch");
  for (std::size_t k = 0; k < words_.size(); ++k) words_[k] ^= other.words_[k];
  return *this;
}

bool BitVec::dot(const BitVec& other) const {
  if (other.len_ != len_) throw std::invalid_argument("BitVec dot: length mismatch");
  word_type acc = 0;
  for (std::size_t k = 0; k < words_.size(); ++k) acc ^= words_[k] & other.words_[k];
  return (std::popcount(acc) & 1) != 0;
}

std::size_t BitVec::count() const noexcept {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

bool BitVec::none() const noexcept {
  return std::all_of(words_.begin(), words_.end(), [](word_type w) { return w == 0; });
}

std::size_t BitVec::find_next(std::size_t from) const noexcept {
  if (from >= len_) return len_;
  std::size_t k = from / word_bits;
  word_type w = words_[k] & ~(bit_mask(from) - 1);
  while (true) {
    if (w != 0) return std::min(len_, k * word_bits + static_cast<std::size_t>(std::countr_zero(w)));
    if (++k == words_.size()) return len_;
    w = words_[k];
  }
}

BitVec BitVec::slice(std::size_t begin, std::size_t len) const {
  if (begin + len > len_) throw std::out_of_range("BitVec slice out of range");
  BitVec out(len);
  const std::size_t shift = begin % 64, first = begin / 64;
  for (std::size_t w = 0; w < out.words_.size(); ++w) {
    word_type v = words_[first + w] >> shift;
    if (shift && first + w + 1 < words_.size()) v |= words_[first + w + 1] << (64 - shift);
    out.words_[w] = v;
  }
  if (len % 64) out.words_.back() &= (word_type{1} << (len % 64)) - 1;
  return out;
}

BitVec BitVec::concat(const BitVec& head, const BitVec& tail) {
  BitVec out = head;
  out.resize(head.size() + tail.size());
  for (std::size_t i = tail.find_next(0); i < tail.size(); i = tail.find_next(i + 1)) {
    out.set(head.size() + i);
  }
  return out;
}

std::uint64_t BitVec::to_uint() const {
  if (len_ > word_bits) throw std::invalid_argument("to_uint: vector longer than 64 bits");
  return words_.empty() ? 0 : words_[0];
}

std::string BitVec::to_string() const {
  std::string s(len_, '0');
  for (std::size_t i = 0; i < len_; ++i) {
    if (get(i)) s[i] = '1';
  }
  return s;
}

// ---------------------------------------------------------------------------
// BitMatrix

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols) : data_(rows, BitVec(cols)), cols_(cols) {}

BitMatrix BitMatrix::identity(std::size_t n) {
  BitMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i);
  return m;
}

BitMatrix BitMatrix::from_rows(std::vector<BitVec> rows, std::size_t cols) {
  for (const auto& r : rows) {
    if (r.size() != cols) throw std::invalid_argument("from_rows: row length differs from column count");
  }
  BitMatrix m;
  m.data_ = std::move(rows);
  m.cols_ = cols;
  return m;
}

BitMatrix BitMatrix::from_strings(const std::vector<std::string>& rows) {
  std::vector<BitVec> data;
  data.reserve(rows.size());
  for (const auto& r : rows) data.push_back(BitVec::from_string(r));
  const std::size_t cols = data.empty() ? 0 : data.front().size();
  return from_rows(std::move(data), cols);
}

void BitMatrix::append_row(BitVec row) {
  if (row.size() != cols_) throw std::invalid_argument("append_row: row length differs from column count");
  data_.push_back(std::move(row));
}

BitVec BitMatrix::column(std::size_t c) const {
  if (c >= cols_) throw std::out_of_range("column index out of range");
  BitVec out(rows());
  for (std::size_t r = 0; r < rows(); ++r) {
    if (data_[r].get(c)) out.set(r);
  }
  return out;
}

BitMatrix BitMatrix::transpose() const {
  BitMatrix t(cols_, rows());
  for (std::size_t r = 0; r < rows(); ++r) {
    const auto& row = data_[r];
    for (std::size_t c = row.find_next(0); c < cols_; c = row.find_next(c + 1)) t.set(c, r);
  }
  return t;
}

BitMatrix BitMatrix::select_columns(std::span<const std::size_t> columns) const {
  BitMatrix out(rows(), columns.size());
  for (std::size_t r = 0; r < rows(); ++r) {
    for (std::size_t k = 0; k < columns.size(); ++k) {
      if (data_[r].get(columns[k])) out.set(r, k);
    }
  }
  return out;
}

BitMatrix BitMatrix::select_rows(std::span<const std::size_t> rows) const {
  BitMatrix out;
  out.cols_ = cols_;
  out.data_.reserve(rows.size());
  for (auto r : rows) out.data_.push_back(data_.at(r));
  return out;
}

BitMatrix operator*(const BitMatrix& a, const BitMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product: dimension mismatch");
  BitMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    const auto& row = a.data_[i];
    for (std::size_t j = row.find_next(0); j < a.cols(); j = row.find_next(j + 1)) {
      out.data_[i] ^= b.data_[j];
    }
  }
  return out;
}

BitVec operator*(const BitMatrix& a, const BitVec& x) {
  if (a.cols() != x.size()) throw std::invalid_argument("matrix-vector product: dimension mismatch");
  BitVec out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (a.data_[i].dot(x)) out.set(i);
  }
  return out;
}

BitMatrix hstack(const BitMatrix& a, const BitMatrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("hstack: row count mismatch");
  std::vector<BitVec> rows;
  rows.reserve(a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r) rows.push_back(BitVec::concat(a.row(r), b.row(r)));
  return BitMatrix::from_rows(std::move(rows), a.cols() + b.cols());
}

BitMatrix vstack(const BitMatrix& a, const BitMatrix& b) {
  if (a.cols() != b.cols()) throw std::invalid_argument("vstack: column count mismatch");
  std::vector<BitVec> rows = a.row_data();
  rows.insert(rows.end(), b.row_data().begin(), b.row_data().end());
  return BitMatrix::from_rows(std::move(rows), a.cols());
}

// ---------------------------------------------------------------------------
// Elimination

std::size_t rank(const BitMatrix& a) {
  std::vector<BitVec> rows = a.row_data();
  return eliminate(rows, a.cols(), nullptr, false).size();
}

BitMatrix unique_rows(const BitMatrix& a) {
  std::vector<BitVec> rows = a.row_data();
  auto less = [](const BitVec& x, const BitVec& y) {
    return std::lexicographical_compare(x.words().begin(), x.words().end(), y.words().begin(), y.words().end());
  };
  std::sort(rows.begin(), rows.end(), less);
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
  return BitMatrix::from_rows(std::move(rows), a.cols());
}

RrefResult rref_with_transform(const BitMatrix& a) { return rref_with_transform(a, a.cols()); }

RrefResult rref_with_transform(const BitMatrix& a, std::size_t pivot_columns) {
  std::vector<BitVec> rows = a.row_data();
  std::vector<BitVec> transform = BitMatrix::identity(a.rows()).row_data();
  auto pivots = eliminate(rows, std::min(pivot_columns, a.cols()), &transform, true);
  return RrefResult{BitMatrix::from_rows(std::move(rows), a.cols()),
                    BitMatrix::from_rows(std::move(transform), a.rows()), std::move(pivots)};
}

std::optional<BitVec> solve(const BitMatrix& a, const BitVec& rhs) {
  if (rhs.size() != a.rows()) throw std::invalid_argument("solve: rhs length differs from row count");
  const std::size_t n = a.cols();
  std::vector<BitVec> rows;
  rows.reserve(a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    BitVec row = a.row(r);
    row.push_back(rhs.get(r));
    rows.push_back(std::move(row));
  }
  const auto pivots = eliminate(rows, n, nullptr, true);
  for (std::size_t r = pivots.size(); r < rows.size(); ++r) {
    if (rows[r].get(n)) return std::nullopt;
  }
  BitVec x(n);
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    if (rows[i].get(n)) x.set(pivots[i]);
  }
  return x;
}

bool is_consistent(const BitMatrix& a, const BitVec& rhs) { return solve(a, rhs).has_value(); }

std::vector<BitVec> kernel_basis(const BitMatrix& a) {
  std::vector<BitVec> rows = a.row_data();
  const auto pivots = eliminate(rows, a.cols(), nullptr, true);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;

  std::vector<BitVec> basis;
  for (std::size_t f = 0; f < a.cols(); ++f) {
    if (is_pivot[f]) continue;
    BitVec v(a.cols());
    v.set(f);
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      if (rows[i].get(f)) v.set(pivots[i]);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace seqinv::gf2
