#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "circunit/bitvec.hpp"
#include "circunit/cyclotomic.hpp"
#include "circunit/level.hpp"

namespace circunit {

// s_j = alpha^j + alpha^{-j}, d_j = 1 + s_j, r_j = s_j + s_{2^{n-2} - j}.
CycInt seq_s(Level level, std::int64_t j);
CycInt seq_d(Level level, std::int64_t j);
CycInt seq_r(Level level, std::int64_t j);

bool is_real(const CycInt& a);

// Element of Z[s_1] over the integral basis (1, s_1, ..., s_{2^{n-2}-1}).
class RealElem {
 public:
  explicit RealElem(Level level);
  RealElem(Level level, std::vector<mpz_class> s_coords);

  const Level& level() const { return level_; }
  const std::vector<mpz_class>& s_coords() const { return s_coords_; }

  CycInt to_cycint() const;
  friend bool operator==(const RealElem&, const RealElem&) = default;

 private:
  Level level_;
  std::vector<mpz_class> s_coords_;
};

RealElem to_s_basis(const CycInt& a);

// Integer coordinates over B = (1, s_1..s_q, r_1..r_{q-1}), q = 2^{n-3}.
std::vector<mpz_class> to_special_basis(const RealElem& a);
RealElem from_special_basis(Level level, const std::vector<mpz_class>& b);

// Position of each basis element of B.
std::size_t special_pos_one();
std::size_t special_pos_s(Level level, std::int64_t j);  // 1 <= j <= 2^{n-3}
std::size_t special_pos_r(Level level, std::int64_t j);  // 1 <= j < 2^{n-3}
// "1", "s_3", "r_2"; the s_{2^{n-3}} entry renders as "s_q" with its index.
std::string special_label(Level level, std::size_t pos);
CycInt special_basis_element(Level level, std::size_t pos);

class SpecialCoordsMod2 {
 public:
  explicit SpecialCoordsMod2(Level level);
  SpecialCoordsMod2(Level level, BitVec bits);

  static SpecialCoordsMod2 one(Level level);

  const Level& level() const { return level_; }
  const BitVec& bits() const { return bits_; }
  bool get(std::size_t pos) const { return bits_.get(pos); }
  void flip(std::size_t pos) { bits_.flip(pos); }

  bool is_one() const;
  bool is_zero() const { return !bits_.any(); }
  // Supported only on the r-block.
  bool in_rtilde() const;

  SpecialCoordsMod2& operator+=(const SpecialCoordsMod2& o);
  friend SpecialCoordsMod2 operator+(SpecialCoordsMod2 a, const SpecialCoordsMod2& b) { return a += b; }
  friend bool operator==(const SpecialCoordsMod2&, const SpecialCoordsMod2&) = default;

  // "1+s_2+r_1", basis order, "0" when empty.
  std::string render() const;

 private:
  Level level_;
  BitVec bits_;
};

SpecialCoordsMod2 special_mod2(const CycInt& a);
// Same from a residue mod 2; requires the residue to be symmetric under alpha -> alpha^{-1}.
SpecialCoordsMod2 special_mod2(const Mod2Elem& a);
bool rtilde_member(const CycInt& a);

// Canonical mod-2 symbol of s_j ("0", "sqrt2", "s_c") and r_j ("0", "r_c").
std::string s_symbol_mod2(Level level, std::int64_t j);
std::string r_symbol_mod2(Level level, std::int64_t j);
// Rows of the tables: s_j for j = 0..2^{n-1}-1 and r_j for j = 0..2^{n-2}-1.
std::vector<std::string> s_table(Level level);
std::vector<std::string> r_table(Level level);

// Symbolic product of two elements of B modulo 2, by case analysis on the index ranges.
struct ProductRule {
  std::string case_name;
  SpecialCoordsMod2 value;
};
ProductRule special_product_mod2(Level level, std::size_t pos_a, std::size_t pos_b);

// Parses sums such as "1+r_4+r_2+(r_1+r_3+r_5)", "d_8", "sqrt2", "d_4d_2r_2" into B-coordinates mod 2.
// Terms are products of factors 1, 0, sqrt2, s_j, d_j, r_j; parentheses only group sums.
SpecialCoordsMod2 parse_mod2_expression(Level level, const std::string& text);
// The exact ring element behind such an expression (also accepts integer literals and '-').
CycInt parse_real_expression(Level level, const std::string& text);

// Power-sum conversions inside Z[s_1].
// Coefficients c_k with s_j = sum_k c_k s_1^k, j >= 0, via the closed binomial form.
std::vector<mpz_class> s_in_powers_of_s1(std::int64_t j);
// s_1^m in the s-basis over Z (unreduced: index set 0..m, entry 0 is the constant).
std::vector<mpz_class> power_of_s1_in_s(std::int64_t m);

}  // namespace circunit
