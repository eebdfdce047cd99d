#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "circunit/bitvec.hpp"
#include "circunit/level.hpp"

namespace circunit {

// Element of Z[alpha] reduced modulo alpha^{2^{n-1}} + 1; coeffs[j] multiplies alpha^j.
class CycInt {
 public:
  explicit CycInt(Level level);
  CycInt(Level level, std::vector<mpz_class> coeffs);

  static CycInt constant(Level level, const mpz_class& c);
  static CycInt one(Level level) { return constant(level, 1); }
  // alpha^e for any integer e.
  static CycInt monomial(Level level, std::int64_t e);

  const Level& level() const { return level_; }
  const std::vector<mpz_class>& coeffs() const { return coeffs_; }
  const mpz_class& operator[](std::size_t j) const { return coeffs_[j]; }

  bool is_zero() const;
  bool is_one() const;

  CycInt operator-() const;
  CycInt& operator+=(const CycInt& o);
  CycInt& operator-=(const CycInt& o);
  CycInt& operator*=(const CycInt& o);
  CycInt& operator*=(const mpz_class& c);
  friend CycInt operator+(CycInt a, const CycInt& b) { return a += b; }
  friend CycInt operator-(CycInt a, const CycInt& b) { return a -= b; }
  friend CycInt operator*(const CycInt& a, const CycInt& b);
  friend CycInt operator*(CycInt a, const mpz_class& c) { return a *= c; }
  friend CycInt operator*(const mpz_class& c, CycInt a) { return a *= c; }
  friend bool operator==(const CycInt& a, const CycInt& b);

  // Multiplication by alpha^e.
  CycInt shifted(std::int64_t e) const;
  CycInt pow(std::uint64_t e) const;

  std::string to_string() const;

 private:
  Level level_;
  std::vector<mpz_class> coeffs_;
};

CycInt add(const CycInt& a, const CycInt& b);
CycInt mul(const CycInt& a, const CycInt& b);

// sigma_k : alpha -> alpha^k, k odd (taken mod 2^n).
CycInt galois(const CycInt& a, std::int64_t k);
// Complex conjugation sigma_{-1}.
inline CycInt conj(const CycInt& a) { return galois(a, -1); }

mpz_class trace(const CycInt& a);
// Product of all 2^{n-1} conjugates, computed down the tower of quadratic subextensions.
mpz_class norm(const CycInt& a);
// Reference norm: literal product of every conjugate. Quadratic cost per factor; for cross-checks.
mpz_class norm_by_conjugates(const CycInt& a);

CycInt invert_unit(const CycInt& a);

BitVec mod2_coords(const CycInt& a);

// Residue class in F2[alpha]/(alpha^{2^{n-1}} + 1). Since -1 = 1 the reduction is cyclic.
class Mod2Elem {
 public:
  explicit Mod2Elem(Level level);
  Mod2Elem(Level level, BitVec bits);
  explicit Mod2Elem(const CycInt& a);

  static Mod2Elem one(Level level);

  const Level& level() const { return level_; }
  const BitVec& bits() const { return bits_; }
  bool is_one() const;

  friend Mod2Elem operator*(const Mod2Elem& a, const Mod2Elem& b);
  friend Mod2Elem operator+(const Mod2Elem& a, const Mod2Elem& b);
  friend bool operator==(const Mod2Elem&, const Mod2Elem&) = default;

  Mod2Elem pow(std::uint64_t e) const;

 private:
  Level level_;
  BitVec bits_;
};

}  // namespace circunit
