#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace circunit {

// Fixed-length F2 vector packed into 64-bit words. Bits past size() are kept zero.
class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(std::size_t size);

  std::size_t size() const { return size_; }
  bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }
  void set(std::size_t i, bool v = true);
  void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

  bool any() const;
  std::size_t count() const;
  // Index of the lowest set bit, or size() if none.
  std::size_t first_set() const;

  BitVec& operator^=(const BitVec& o);
  friend BitVec operator^(BitVec a, const BitVec& b) { return a ^= b; }
  friend bool operator==(const BitVec&, const BitVec&) = default;

  // Cyclic rotation towards higher indices: bit i moves to (i + k) mod size.
  BitVec rotated(std::size_t k) const;

  // Lowercase hex of the integer sum_i bit_i 2^i, without prefix; "0" for zero.
  std::string to_hex() const;
  static BitVec from_hex(const std::string& hex, std::size_t size);

  const std::vector<std::uint64_t>& words() const { return words_; }

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

// Rows of equal length over F2.
class F2Matrix {
 public:
  F2Matrix(std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  bool get(std::size_t r, std::size_t c) const { return rows_[r].get(c); }
  void set(std::size_t r, std::size_t c, bool v = true) { rows_[r].set(c, v); }
  const BitVec& row(std::size_t r) const { return rows_[r]; }

  // Rank via Gauss-Jordan elimination on a copy.
  std::size_t rank() const;
  // Reduced row echelon form (zero rows dropped).
  F2Matrix rref() const;
  // Basis of the right null space {x : M x = 0}.
  std::vector<BitVec> null_space() const;
  // M x over F2; x.size() must equal cols().
  BitVec apply(const BitVec& x) const;

  F2Matrix submatrix(const std::vector<std::size_t>& row_ids,
                     const std::vector<std::size_t>& col_ids) const;

  friend bool operator==(const F2Matrix&, const F2Matrix&) = default;

 private:
  std::size_t cols_;
  std::vector<BitVec> rows_;
};

}  // namespace circunit
