#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "circunit/circular_units.hpp"
#include "circunit/lattice.hpp"
#include "circunit/level.hpp"

namespace circunit {

// A_k = {1, 3, ..., 2^{n-2-k} - 1}; B_0 = A \ A_0, B_k = A_{k-1} \ A_k.
struct FunnelPartition {
  Level level;
  std::vector<std::int64_t> A;
  std::vector<std::vector<std::int64_t>> A_sets;
  std::vector<std::vector<std::int64_t>> B_sets;
};

FunnelPartition build_partition(Level level);

// q(k, j) = d_j^{-1} d_{2^{n-1-k} - j}.
UnitWord q_word(Level level, int k, std::int64_t j);

struct LabeledWord {
  std::string label;   // "d_1^4", "q(0,3)", "q(2,1)^4"
  int k;               // -1 for the power of d_1
  std::int64_t j;
  std::int64_t power;
  UnitWord word;
};

struct GeneratorSystem {
  Level level;
  std::vector<LabeledWord> f_gens;
  std::vector<LabeledWord> sqrt_gens;
};

// d_1^{2^{n-2}}, then descending k, ascending j.
std::vector<LabeledWord> f_generators(Level level);
// d_1^{2^{n-3}}, then q(k, j)^{2^{k-1}} for k = n-3 .. 1, ascending j.
std::vector<LabeledWord> sqrt_over_f_generators(Level level);
GeneratorSystem generator_system(Level level);

IntVector exponent_vector(const UnitWord& w);
IntMatrix exponent_matrix(const std::vector<LabeledWord>& gens);
IntMatrix exponent_matrix(const std::vector<UnitWord>& gens);

// Index in D of the subgroup generated by gens (0 when it has smaller rank).
mpz_class index_in_D(const IntMatrix& gens);

// Lattice facts for the funnel subgroups.
struct FunnelLatticeReport {
  mpz_class index_D_F;               // |D : F|
  mpz_class index_D_sqrtF;           // |D : sqrt F| with sqrt F = <F, sqrt_gens>
  mpz_class index_D_Dpow;            // |D : D^{2^{n-2}}|
  mpz_class index_F_Dpow;            // |F : D^{2^{n-2}}| from F-coordinates of D^{2^{n-2}}
  std::vector<mpz_class> quotient_invariants;  // invariants of sqrt F / F
  bool squares_in_F = false;
  bool sqrt_gens_outside_F = false;
  bool dpow_in_F = false;
  bool chain_strict = false;         // D^{2^{n-2}} < F < sqrt F < D
};
FunnelLatticeReport funnel_lattice_report(Level level);

}  // namespace circunit
