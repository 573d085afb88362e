#pragma once

// Bit-packed vectors and matrices over GF(2).
//
// Rows are stored as arrays of 64-bit words, bit i of the vector lives in
// word i / 64 at position i % 64. Pad bits past size() are always zero, so
// word-wise comparison and popcount need no masking.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace seqinv::gf2 {

class BitVec {
 public:
  using word_type = std::uint64_t;
  static constexpr std::size_t word_bits = 64;

  BitVec() = default;
  explicit BitVec(std::size_t len, bool value = false);

  /// Parses a string of '0'/'1' characters; index 0 is the leftmost character.
  static BitVec from_string(std::string_view bits);
  /// Low `len` bits of `value`, bit i of the integer becomes element i.
  static BitVec from_uint(std::uint64_t value, std::size_t len);

  std::size_t size() const noexcept { return len_; }
  bool empty() const noexcept { return len_ == 0; }

  bool get(std::size_t i) const;
  bool operator[](std::size_t i) const { return get(i); }
  void set(std::size_t i, bool value = true);
  void flip(std::size_t i);
  void push_back(bool value);
  void resize(std::size_t len);

  BitVec& operator^=(const BitVec& other);
  friend BitVec operator^(BitVec lhs, const BitVec& rhs) {
    lhs ^= rhs;
    return lhs;
  }

  /// Inner product over GF(2).
  bool dot(const BitVec& other) const;
  std::size_t count() const noexcept;
  bool none() const noexcept;
  /// Index of the first set bit at or after `from`, or size() if none.
  std::size_t find_next(std::size_t from) const noexcept;

  BitVec slice(std::size_t begin, std::size_t len) const;
  static BitVec concat(const BitVec& head, const BitVec& tail);

  /// Requires size() <= 64.
  std::uint64_t to_uint() const;
  std::string to_string() const;

  std::span<const word_type> words() const noexcept { return words_; }
  std::span<word_type> words() noexcept { return words_; }

  friend bool operator==(const BitVec&, const BitVec&) = default;

 private:
  std::vector<word_type> words_;
  std::size_t len_ = 0;
};

class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols);

  static BitMatrix identity(std::size_t n);
  /// Every row must have length `cols`.
  static BitMatrix from_rows(std::vector<BitVec> rows, std::size_t cols);
  static BitMatrix from_strings(const std::vector<std::string>& rows);

  std::size_t rows() const noexcept { return data_.size(); }
  std::size_t cols() const noexcept { return cols_; }

  bool get(std::size_t r, std::size_t c) const { return data_.at(r).get(c); }
  void set(std::size_t r, std::size_t c, bool value = true) { data_.at(r).set(c, value); }

  const BitVec& row(std::size_t r) const { return data_.at(r); }
  BitVec& row(std::size_t r) { return data_.at(r); }
  const std::vector<BitVec>& row_data() const noexcept { return data_; }

  void append_row(BitVec row);
  BitVec column(std::size_t c) const;
  BitMatrix transpose() const;
  BitMatrix select_columns(std::span<const std::size_t> columns) const;
  BitMatrix select_rows(std::span<const std::size_t> rows) const;

  friend BitMatrix operator*(const BitMatrix& a, const BitMatrix& b);
  friend BitVec operator*(const BitMatrix& a, const BitVec& x);
  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  std::vector<BitVec> data_;
  std::size_t cols_ = 0;
};

/// [a | b]; row counts must agree.
BitMatrix hstack(const BitMatrix& a, const BitMatrix& b);
/// [a ; b]; column counts must agree.
BitMatrix vstack(const BitMatrix& a, const BitMatrix& b);

std::size_t rank(const BitMatrix& a);

/// Distinct rows of `a` in sorted order. Same row space, so same rank.
BitMatrix unique_rows(const BitMatrix& a);

struct RrefResult {
  BitMatrix echelon;
  /// Accumulated row operations: transform * a == echelon.
  BitMatrix transform;
  /// Pivot column of each nonzero echelon row, ascending.
  std::vector<std::size_t> pivots;
};

RrefResult rref_with_transform(const BitMatrix& a);

/// Reduced row echelon form where pivots are only searched among the first
/// `pivot_columns` columns. The remaining columns are carried along by the
/// row operations. Rows without a pivot end up below all pivot rows.
RrefResult rref_with_transform(const BitMatrix& a, std::size_t pivot_columns);

/// Canonical particular solution of a * x = rhs: RREF back-substitution with
/// every free variable set to zero. Empty if the system is inconsistent.
/// Throws std::invalid_argument if rhs.size() != a.rows().
std::optional<BitVec> solve(const BitMatrix& a, const BitVec& rhs);

bool is_consistent(const BitMatrix& a, const BitVec& rhs);

/// Basis of {x : a * x = 0}, one vector per free column in ascending order.
std::vector<BitVec> kernel_basis(const BitMatrix& a);

}  // namespace seqinv::gf2
