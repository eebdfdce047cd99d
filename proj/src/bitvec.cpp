#include "circunit/bitvec.hpp"

#include <bit>
#include <stdexcept>
#include <utility>

#include "circunit/errors.hpp"

namespace circunit {

namespace {

std::size_t word_count(std::size_t bits) { return (bits + 63) / 64; }

}  // namespace

BitVec::BitVec(std::size_t size) : size_(size), words_(word_count(size), 0) {}

void BitVec::set(std::size_t i, bool v) {
  const std::uint64_t mask = std::uint64_t{1} << (i & 63);
  if (v) {
    words_[i >> 6] |= mask;
  } else {
    words_[i >> 6] &= ~mask;
  }
}

bool BitVec::any() const {
  for (auto w : words_) {
    if (w != 0) return true;
  }
  return false;
}

std::size_t BitVec::count() const {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

std::size_t BitVec::first_set() const {
  for (std::size_t k = 0; k < words_.size(); ++k) {
    if (words_[k] != 0) return k * 64 + static_cast<std::size_t>(std::countr_zero(words_[k]));
  }
  return size_;
}

BitVec& BitVec::operator^=(const BitVec& o) {
  if (o.size_ != size_) throw std::invalid_argument("BitVec size mismatch");
  for (std::size_t k = 0; k < words_.size(); ++k) words_[k] ^= o.words_[k];
  return *this;
}

BitVec BitVec::rotated(std::size_t k) const {
  BitVec out(size_);
  if (size_ == 0) return out;
  k %= size_;
  if (size_ <= 64) {
    const std::uint64_t w = words_.empty() ? 0 : words_[0];
    const std::uint64_t mask = size_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << size_) - 1;
    std::uint64_t r = k == 0 ? w : ((w << k) | (w >> (size_ - k)));
    out.words_[0] = r & mask;
    return out;
  }
  // size_ is a multiple of 64 for every caller above one word; fall back to bitwise otherwise.
  if (size_ % 64 == 0) {
    const std::size_t n = words_.size();
    const std::size_t ws = k / 64;
    const std::size_t bs = k % 64;
    for (std::size_t i = 0; i < n; ++i) {
      const std::uint64_t w = words_[i];
      const std::size_t t = (i + ws) % n;
      out.words_[t] |= w << bs;
      if (bs != 0) out.words_[(t + 1) % n] |= w >> (64 - bs);
    }
    return out;
  }
  for (std::size_t i = 0; i < size_; ++i) {
    if (get(i)) out.set((i + k) % size_);
  }
  return out;
}

std::string BitVec::to_hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  const std::size_t nibbles = (size_ + 3) / 4;
  for (std::size_t q = nibbles; q-- > 0;) {
    unsigned v = 0;
    for (std::size_t b = 0; b < 4; ++b) {
      const std::size_t i = 4 * q + b;
      if (i < size_ && get(i)) v |= 1U << b;
    }
    if (out.empty() && v == 0) continue;
    out.push_back(kDigits[v]);
  }
  return out.empty() ? "0" : out;
}

BitVec BitVec::from_hex(const std::string& hex, std::size_t size) {
  BitVec out(size);
  std::size_t pos = 0;
  for (auto it = hex.rbegin(); it != hex.rend(); ++it, pos += 4) {
    const char c = *it;
    unsigned v;
    if (c >= '0' && c <= '9') {
      v = static_cast<unsigned>(c - '0');
    } else if (c >= 'a' && c <= 'f') {
      v = static_cast<unsigned>(c - 'a' + 10);
    } else if (c >= 'A' && c <= 'F') {
      v = static_cast<unsigned>(c - 'A' + 10);
    } else {
      throw ParseError("bad hex digit in '" + hex + "'");
    }
    for (std::size_t b = 0; b < 4; ++b) {
      if ((v >> b) & 1U) {
        if (pos + b >= size) throw ParseError("hex value '" + hex + "' exceeds width");
        out.set(pos + b);
      }
    }
  }
  return out;
}

F2Matrix::F2Matrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, BitVec(cols)) {}

F2Matrix F2Matrix::rref() const {
  std::vector<BitVec> m = rows_;
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < cols_ && pivot_row < m.size(); ++c) {
    std::size_t p = pivot_row;
    while (p < m.size() && !m[p].get(c)) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[pivot_row]);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r != pivot_row && m[r].get(c)) m[r] ^= m[pivot_row];
    }
    ++pivot_row;
  }
  F2Matrix out(pivot_row, cols_);
  for (std::size_t r = 0; r < pivot_row; ++r) out.rows_[r] = m[r];
  return out;
}

std::size_t F2Matrix::rank() const { return rref().rows(); }

std::vector<BitVec> F2Matrix::null_space() const {
  const F2Matrix red = rref();
  std::vector<std::size_t> pivot_col;
  std::vector<bool> is_pivot(cols_, false);
  for (std::size_t r = 0; r < red.rows(); ++r) {
    const std::size_t c = red.rows_[r].first_set();
    pivot_col.push_back(c);
    is_pivot[c] = true;
  }
  std::vector<BitVec> basis;
  for (std::size_t f = 0; f < cols_; ++f) {
    if (is_pivot[f]) continue;
    BitVec v(cols_);
    v.set(f);
    for (std::size_t r = 0; r < red.rows(); ++r) {
      if (red.rows_[r].get(f)) v.set(pivot_col[r]);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

BitVec F2Matrix::apply(const BitVec& x) const {
  if (x.size() != cols_) throw std::invalid_argument("F2Matrix::apply size mismatch");
  BitVec out(rows_.size());
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    std::size_t parity = 0;
    const auto& a = rows_[r].words();
    const auto& b = x.words();
    for (std::size_t k = 0; k < a.size(); ++k) parity += static_cast<std::size_t>(std::popcount(a[k] & b[k]));
    out.set(r, parity & 1U);
  }
  return out;
}

F2Matrix F2Matrix::submatrix(const std::vector<std::size_t>& row_ids,
                             const std::vector<std::size_t>& col_ids) const {
  F2Matrix out(row_ids.size(), col_ids.size());
  for (std::size_t r = 0; r < row_ids.size(); ++r) {
    for (std::size_t c = 0; c < col_ids.size(); ++c) {
      out.set(r, c, get(row_ids[r], col_ids[c]));
    }
  }
  return out;
}

}  // namespace circunit
