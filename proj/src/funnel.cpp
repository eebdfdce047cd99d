#include "circunit/funnel.hpp"

#include <algorithm>
#include <set>

#include "circunit/errors.hpp"

namespace circunit {

namespace {

std::string power_suffix(std::int64_t p) { return p == 1 ? "" : "^" + std::to_string(p); }

LabeledWord q_generator(Level level, int k, std::int64_t j, std::int64_t power) {
  const std::string label = "q(" + std::to_string(k) + "," + std::to_string(j) + ")" + power_suffix(power);
  return {label, k, j, power, q_word(level, k, j).pow(power)};
}

LabeledWord d1_power(Level level, std::int64_t power) {
  return {"d_1" + power_suffix(power), -1, 1, power, UnitWord::d(level, 1, power)};
}

void require_funnel_level(Level level) {
  if (level.n() < 4) throw LevelTooSmall("funnel needs n >= 4, got n = " + std::to_string(level.n()));
}

// Solves x * basis = target over Q for each target row; basis must be square and invertible.
std::vector<std::vector<mpq_class>> solve_rows(const IntMatrix& basis, const IntMatrix& targets) {
  const std::size_t r = basis.size();
  // Gauss-Jordan on [basis^T | targets^T].
  std::vector<std::vector<mpq_class>> aug(r, std::vector<mpq_class>(r + targets.size()));
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) aug[i][j] = basis[j][i];
    for (std::size_t t = 0; t < targets.size(); ++t) aug[i][r + t] = targets[t][i];
  }
  for (std::size_t c = 0; c < r; ++c) {
    std::size_t p = c;
    while (p < r && sgn(aug[p][c]) == 0) ++p;
    if (p == r) throw InternalInconsistency("generator matrix is singular");
    std::swap(aug[p], aug[c]);
    const mpq_class inv = 1 / aug[c][c];
    for (auto& x : aug[c]) x *= inv;
    for (std::size_t i = 0; i < r; ++i) {
      if (i == c || sgn(aug[i][c]) == 0) continue;
      const mpq_class f = aug[i][c];
      for (std::size_t j = 0; j < aug[i].size(); ++j) aug[i][j] -= f * aug[c][j];
    }
  }
  std::vector<std::vector<mpq_class>> out(targets.size(), std::vector<mpq_class>(r));
  for (std::size_t t = 0; t < targets.size(); ++t) {
    for (std::size_t i = 0; i < r; ++i) out[t][i] = aug[i][r + t];
  }
  return out;
}

}  // namespace

FunnelPartition build_partition(Level level) {
  require_funnel_level(level);
  FunnelPartition p{level, generator_indices(level), {}, {}};
  for (int k = 0; k <= level.n() - 3; ++k) {
    std::vector<std::int64_t> ak;
    for (std::int64_t j = 1; j <= (std::int64_t{1} << (level.n() - 2 - k)) - 1; j += 2) ak.push_back(j);
    p.A_sets.push_back(std::move(ak));
  }
  for (int k = 0; k <= level.n() - 3; ++k) {
    const auto& outer = k == 0 ? p.A : p.A_sets[static_cast<std::size_t>(k - 1)];
    const std::set<std::int64_t> inner(p.A_sets[static_cast<std::size_t>(k)].begin(),
                                       p.A_sets[static_cast<std::size_t>(k)].end());
    std::vector<std::int64_t> bk;
    for (auto j : outer) {
      if (!inner.contains(j)) bk.push_back(j);
    }
    p.B_sets.push_back(std::move(bk));
  }
  return p;
}

UnitWord q_word(Level level, int k, std::int64_t j) {
  require_funnel_level(level);
  const std::string where = "q(" + std::to_string(k) + "," + std::to_string(j) + ")";
  if (k < 0 || k > level.n() - 3) throw IndexNotInPartition(where + ": k outside 0..n-3");
  const std::int64_t top = (std::int64_t{1} << (level.n() - 2 - k)) - 1;  // max of A_k
  if (j % 2 == 0 || j < 1 || j > top || (k == 0 && j == 1)) {
    throw IndexNotInPartition(where + ": j not in " + (k == 0 ? "A_0 \\ {1}" : "A_" + std::to_string(k)));
  }
  const std::int64_t partner = (std::int64_t{1} << (level.n() - 1 - k)) - j;
  return UnitWord(level, 0, {{j, -1}, {partner, 1}});
}

std::vector<LabeledWord> f_generators(Level level) {
  require_funnel_level(level);
  const FunnelPartition p = build_partition(level);
  std::vector<LabeledWord> gens{d1_power(level, level.real_degree())};
  for (int k = level.n() - 3; k >= 1; --k) {
    for (auto j : p.A_sets[static_cast<std::size_t>(k)]) gens.push_back(q_generator(level, k, j, std::int64_t{1} << k));
  }
  for (auto j : p.A_sets[0]) {
    if (j != 1) gens.push_back(q_generator(level, 0, j, 1));
  }
  return gens;
}

std::vector<LabeledWord> sqrt_over_f_generators(Level level) {
  require_funnel_level(level);
  const FunnelPartition p = build_partition(level);
  std::vector<LabeledWord> gens{d1_power(level, level.half_real())};
  for (int k = level.n() - 3; k >= 1; --k) {
    for (auto j : p.A_sets[static_cast<std::size_t>(k)]) {
      gens.push_back(q_generator(level, k, j, std::int64_t{1} << (k - 1)));
    }
  }
  return gens;
}

GeneratorSystem generator_system(Level level) {
  return {level, f_generators(level), sqrt_over_f_generators(level)};
}

IntVector exponent_vector(const UnitWord& w) {
  IntVector v;
  for (auto e : w.exponent_vector()) v.emplace_back(static_cast<long>(e));
  return v;
}

IntMatrix exponent_matrix(const std::vector<LabeledWord>& gens) {
  IntMatrix m;
  for (const auto& g : gens) m.push_back(exponent_vector(g.word));
  return m;
}

IntMatrix exponent_matrix(const std::vector<UnitWord>& gens) {
  IntMatrix m;
  for (const auto& g : gens) m.push_back(exponent_vector(g));
  return m;
}

mpz_class index_in_D(const IntMatrix& gens) {
  if (gens.empty()) return 0;
  const auto inv = smith_invariants(gens);
  if (inv.size() < gens[0].size()) return 0;
  mpz_class idx = 1;
  for (const auto& d : inv) idx *= d;
  return idx;
}

FunnelLatticeReport funnel_lattice_report(Level level) {
  const GeneratorSystem sys = generator_system(level);
  const IntMatrix f = exponent_matrix(sys.f_gens);
  const IntMatrix f_hnf = hermite_normal_form(f);
  const std::size_t rank = generator_indices(level).size();
  const mpz_class big_n = level.real_degree();  // 2^{n-2}

  FunnelLatticeReport rep;
  rep.index_D_F = index_in_D(f);

  IntMatrix sqrt_rows = f;
  for (const auto& g : sys.sqrt_gens) sqrt_rows.push_back(exponent_vector(g.word));
  rep.index_D_sqrtF = index_in_D(sqrt_rows);

  IntMatrix dpow(rank, IntVector(rank, 0));
  for (std::size_t i = 0; i < rank; ++i) dpow[i][i] = big_n;
  rep.index_D_Dpow = index_in_D(dpow);

  rep.squares_in_F = true;
  rep.sqrt_gens_outside_F = true;
  for (const auto& g : sys.sqrt_gens) {
    if (!lattice_contains(f_hnf, exponent_vector(g.word.pow(2)))) rep.squares_in_F = false;
    if (lattice_contains(f_hnf, exponent_vector(g.word))) rep.sqrt_gens_outside_F = false;
  }

  // Coordinates of the generators of D^{2^{n-2}} over the F generators.
  rep.dpow_in_F = true;
  IntMatrix coords;
  if (f.size() == rank) {
    for (const auto& row : solve_rows(f, dpow)) {
      IntVector iv;
      for (const auto& x : row) {
        if (x.get_den() != 1) rep.dpow_in_F = false;
        iv.push_back(x.get_num());
      }
      coords.push_back(std::move(iv));
    }
    rep.index_F_Dpow = rep.dpow_in_F ? mpz_class(abs(bareiss_determinant(coords))) : mpz_class(0);
  } else {
    rep.dpow_in_F = false;
  }

  // sqrt F / F: invariants of the F-lattice expressed over a basis of sqrt F.
  const IntMatrix s_hnf = hermite_normal_form(sqrt_rows);
  if (s_hnf.size() == rank && f.size() == rank) {
    IntMatrix rel;
    for (const auto& row : solve_rows(s_hnf, f)) {
      IntVector iv;
      for (const auto& x : row) iv.push_back(x.get_num());
      rel.push_back(std::move(iv));
    }
    for (const auto& d : smith_invariants(rel)) {
      if (d != 1) rep.quotient_invariants.push_back(d);
    }
  }

  rep.chain_strict = rep.dpow_in_F && rep.index_D_Dpow > rep.index_D_F && rep.index_D_F > rep.index_D_sqrtF &&
                     rep.index_D_sqrtF > 1;
  return rep;
}

}  // namespace circunit
