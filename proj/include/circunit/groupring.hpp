#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "circunit/circular_units.hpp"
#include "circunit/cyclotomic.hpp"
#include "circunit/level.hpp"

namespace circunit {

// Element of Z[C_{2^n}]; coeffs[j] multiplies x^j.
class GroupRingElt {
 public:
  explicit GroupRingElt(Level level);
  GroupRingElt(Level level, std::vector<mpz_class> coeffs);

  static GroupRingElt identity(Level level);
  static GroupRingElt monomial(Level level, std::int64_t j);

  const Level& level() const { return level_; }
  const std::vector<mpz_class>& coeffs() const { return coeffs_; }
  mpz_class augmentation() const;
  bool is_identity() const;

  friend bool operator==(const GroupRingElt&, const GroupRingElt&) = default;

 private:
  Level level_;
  std::vector<mpz_class> coeffs_;
};

GroupRingElt gr_mul(const GroupRingElt& a, const GroupRingElt& b);

// gamma_0 = 1 + tr(beta - 1)/2^n, gamma_j = tr((beta - 1) alpha^{-j})/2^n.
GroupRingElt u_chi1(const CycInt& beta);
bool is_admissible(const CycInt& beta);

// Image under x -> alpha^t (t = 1 is chi_1, t = 0 the trivial character).
CycInt character_eval(const GroupRingElt& u, std::int64_t t);

struct V1Generator {
  std::string label;
  UnitWord word;
  GroupRingElt unit;
};

struct V1Report {
  Level level;
  std::vector<V1Generator> generators;  // images of the F generators
  GroupRingElt w1_torsion;              // x^{2^{n-1}} = u_chi1(-1)
  bool exploratory = false;
};

V1Report v1_generators(Level level);

}  // namespace circunit
