#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "circunit/cyclotomic.hpp"
#include "circunit/level.hpp"

namespace circunit {

// beta_l = 1 + alpha^{3^l} + alpha^{2*3^l}, 0 <= l < 2^{n-2}.
CycInt beta(Level level, std::int64_t l);

// The index set A = {1, 3, ..., 2^{n-1} - 3} of the generators d_j of D.
std::vector<std::int64_t> generator_indices(Level level);
bool is_generator_index(Level level, std::int64_t j);

// alpha^a * prod d_j^{e_j} over j in A.
class UnitWord {
 public:
  explicit UnitWord(Level level);
  UnitWord(Level level, std::int64_t alpha_exp, const std::map<std::int64_t, std::int64_t>& d_exps);

  static UnitWord d(Level level, std::int64_t j, std::int64_t e = 1);
  static UnitWord alpha(Level level, std::int64_t e);

  const Level& level() const { return level_; }
  std::int64_t alpha_exp() const { return alpha_exp_; }
  const std::map<std::int64_t, std::int64_t>& d_exps() const { return d_exps_; }
  std::int64_t exponent(std::int64_t j) const;
  bool is_real() const { return alpha_exp_ == 0; }
  bool is_identity() const { return alpha_exp_ == 0 && d_exps_.empty(); }

  UnitWord operator*(const UnitWord& o) const;
  UnitWord inverse() const;
  UnitWord pow(std::int64_t e) const;
  friend bool operator==(const UnitWord&, const UnitWord&) = default;

  // Exponents over A in ascending index order.
  std::vector<std::int64_t> exponent_vector() const;

  // "a^3 * d1^-2 * d7^2"; "1" for the empty word.
  std::string to_string() const;

 private:
  Level level_;
  std::int64_t alpha_exp_;
  std::map<std::int64_t, std::int64_t> d_exps_;
};

UnitWord parse_word(Level level, const std::string& text);

CycInt eval_word(const UnitWord& w);

// alpha^k * prod_l (1 - alpha^{3^l})^{k_l}, l = 0..2^{n-2}-1.
struct PWord {
  Level level;
  std::int64_t alpha_exp = 0;
  std::vector<std::int64_t> cyc_exps;
};

bool p_word_is_unit(const PWord& p);
// Exponents f_l with prod_l (1 - alpha^{3^l})^{k_l} = prod_l beta_l^{f_l}, normalised by f_0 = 0.
std::vector<std::int64_t> p_word_beta_exponents(const PWord& p);
// Exact value of a unit PWord through its beta form. Throws NotAUnit when sum k_l != 0.
CycInt eval_p_word(const PWord& p);
// alpha^k * prod_{k_l > 0} (1 - alpha^{3^l})^{k_l} and prod_{k_l < 0} (1 - alpha^{3^l})^{-k_l}.
std::pair<CycInt, CycInt> p_word_fraction(const PWord& p);

// j = sign * 3^k mod 2^n for odd j, with 0 <= k < 2^{n-2}.
struct ThreePower {
  int sign;
  std::int64_t k;
};
ThreePower three_power_index(Level level, std::int64_t j);

// d_j = alpha^{alpha_exp} * beta_{beta_index} for odd j.
struct DBetaForm {
  std::int64_t alpha_exp;
  std::int64_t beta_index;
};
DBetaForm d_as_beta(Level level, std::int64_t j);

// Numeric rank of the log-embedding matrix of the d_j, j in A. Requires n <= 8.
int independence_rank(Level level);

}  // namespace circunit
