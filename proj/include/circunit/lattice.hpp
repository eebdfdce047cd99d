#pragma once

#include <gmpxx.h>

#include <vector>

namespace circunit {

using IntVector = std::vector<mpz_class>;
using IntMatrix = std::vector<IntVector>;

// Row Hermite normal form of the lattice spanned by the rows: echelon, positive pivots,
// entries above each pivot reduced into [0, pivot). Zero rows are dropped.
IntMatrix hermite_normal_form(IntMatrix rows);

// Membership of v in the lattice whose HNF is given.
bool lattice_contains(const IntMatrix& hnf, IntVector v);

// Nonzero invariant factors d_1 | d_2 | ... of the row lattice.
std::vector<mpz_class> smith_invariants(IntMatrix rows);

// Fraction-free determinant of a square matrix.
mpz_class bareiss_determinant(IntMatrix m);

}  // namespace circunit
