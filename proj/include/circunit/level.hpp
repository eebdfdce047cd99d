#pragma once

#include <compare>
#include <cstdint>

namespace circunit {

// Level n of the cyclotomic ring Z[alpha], alpha a primitive 2^n-th root of unity.
class Level {
 public:
  static constexpr int kMin = 3;
  static constexpr int kMax = 12;

  explicit Level(int n);

  int n() const { return n_; }
  std::int64_t order() const { return std::int64_t{1} << n_; }              // 2^n
  std::int64_t degree() const { return std::int64_t{1} << (n_ - 1); }       // 2^{n-1}
  std::int64_t real_degree() const { return std::int64_t{1} << (n_ - 2); }  // 2^{n-2}
  std::int64_t half_real() const { return std::int64_t{1} << (n_ - 3); }    // 2^{n-3}, index of sqrt2

  // Representative of e modulo 2^n in [0, 2^n).
  std::int64_t reduce(std::int64_t e) const;

  friend auto operator<=>(const Level&, const Level&) = default;

 private:
  int n_;
};

// Throws LevelMismatch unless a == b.
void require_same(const Level& a, const Level& b);

inline std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace circunit
