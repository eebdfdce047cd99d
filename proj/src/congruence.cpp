#include "circunit/congruence.hpp"

#include <chrono>
#include <functional>
#include <random>

#include "circunit/errors.hpp"

namespace circunit {

namespace {

std::int64_t lift_exponent(Level level, std::int64_t e) { return floor_mod(e, level.real_degree()); }

CycInt eval_lifted(const UnitWord& w) {
  const Level& lv = w.level();
  CycInt acc = CycInt::monomial(lv, w.alpha_exp());
  for (const auto& [j, e] : w.d_exps()) {
    acc = acc * seq_d(lv, j).pow(static_cast<std::uint64_t>(lift_exponent(lv, e)));
  }
  return acc;
}

IdentityCheck compare(std::string name, int k, std::int64_t j, const SpecialCoordsMod2& lhs,
                      const SpecialCoordsMod2& rhs) {
  return {std::move(name), k, j, lhs == rhs, lhs.render(), rhs.render()};
}

void require_funnel_level(Level level) {
  if (level.n() < 4) throw LevelTooSmall("needs n >= 4, got n = " + std::to_string(level.n()));
}

// Row = B position, column = generator.
F2Matrix build_matrix(Level level, const std::vector<CertificateGenerator>& gens) {
  const std::size_t h = static_cast<std::size_t>(level.real_degree());
  F2Matrix m(h - 1, gens.size());
  for (std::size_t c = 0; c < gens.size(); ++c) {
    for (std::size_t p = 1; p < h; ++p) m.set(p - 1, c, gens[c].coords.get(p));
  }
  return m;
}

}  // namespace

Mod2Elem word_residue(const UnitWord& w) {
  const Level& lv = w.level();
  Mod2Elem acc(CycInt::monomial(lv, w.alpha_exp()));
  for (const auto& [j, e] : w.d_exps()) {
    acc = acc * Mod2Elem(seq_d(lv, j)).pow(static_cast<std::uint64_t>(lift_exponent(lv, e)));
  }
  return acc;
}

SpecialCoordsMod2 word_mod2(const UnitWord& w) {
  if (!w.is_real()) throw NonRealWord(w.to_string());
  const SpecialCoordsMod2 lifted = special_mod2(eval_lifted(w));
  const SpecialCoordsMod2 direct = special_mod2(eval_word(w));
  if (!(lifted == direct)) {
    throw InternalInconsistency("lifted and inverted evaluations of " + w.to_string() + " differ mod 2");
  }
  return lifted;
}

bool e_membership(const UnitWord& w) { return word_mod2(w).is_one(); }

CycInt p_factor(Level level, int k) {
  if (k < 1 || k > level.n() - 3) throw IndexOutOfRange("P(" + std::to_string(k) + ") needs 1 <= k <= n-3");
  CycInt acc = CycInt::one(level);
  for (int j = k - 1; j <= level.n() - 4; ++j) acc = acc * seq_d(level, std::int64_t{1} << j);
  return acc;
}

std::string p_factor_label(Level level, int k) {
  if (k < 1 || k > level.n() - 3) throw IndexOutOfRange("P(" + std::to_string(k) + ") needs 1 <= k <= n-3");
  std::string out;
  for (int j = k - 1; j <= level.n() - 4; ++j) out += "d_" + std::to_string(std::int64_t{1} << j);
  return out;
}

bool IdentityReport::all_passed() const {
  for (const auto& c : checks) {
    if (!c.passed) return false;
  }
  return true;
}

IdentityReport q_power_identities(Level level) {
  require_funnel_level(level);
  IdentityReport rep{level, {}};
  const std::int64_t q = level.half_real();
  const CycInt one = CycInt::one(level);
  const CycInt d_sqrt2 = seq_d(level, q);
  for (int k = 1; k <= level.n() - 3; ++k) {
    const std::int64_t t = std::int64_t{1} << (k - 1);  // 2^{k-1}
    const CycInt pk = p_factor(level, k);
    const CycInt r_t = seq_r(level, t);

    rep.checks.push_back(compare("d1^-2^(k-1) == d_{2^(n-3)} P(k)", k, 1, word_mod2(UnitWord::d(level, 1, -t)),
                                 special_mod2(d_sqrt2 * pk)));

    const std::int64_t partner = (std::int64_t{1} << (level.n() - 1 - k)) - 1;
    rep.checks.push_back(compare("d_{2^(n-1-k)-1}^2^(k-1) == d_{2^(k-1)} + r_{2^(k-1)}", k, partner,
                                 word_mod2(UnitWord::d(level, partner, t)), special_mod2(seq_d(level, t) + r_t)));

    const SpecialCoordsMod2 qk = word_mod2(q_word(level, k, 1).pow(t));
    rep.checks.push_back(compare("q(k,1)^2^(k-1) == 1 + d_{2^(k-1)}^-1 r_{2^(k-1)}", k, 1, qk,
                                 special_mod2(one + invert_unit(seq_d(level, t)) * r_t)));
    rep.checks.push_back(compare("q(k,1)^2^(k-1) == 1 + P(k) r_{2^(k-1)}", k, 1, qk, special_mod2(one + pk * r_t)));
  }
  for (std::int64_t l = 1; l < q; ++l) {
    const CycInt r_l = seq_r(level, l);
    rep.checks.push_back(compare("d_{2^(n-3)} r_l == r_l", 0, l, special_mod2(d_sqrt2 * r_l), special_mod2(r_l)));
  }
  return rep;
}

IdentityReport galois_transport_check(Level level) {
  require_funnel_level(level);
  IdentityReport rep{level, {}};
  const FunnelPartition part = build_partition(level);
  for (int k = 1; k <= level.n() - 3; ++k) {
    const std::int64_t t = std::int64_t{1} << (k - 1);
    const CycInt base = eval_word(q_word(level, k, 1).pow(t));
    for (auto j : part.A_sets[static_cast<std::size_t>(k)]) {
      rep.checks.push_back(compare("q(k,j)^2^(k-1) == sigma_j(q(k,1)^2^(k-1))", k, j,
                                   word_mod2(q_word(level, k, j).pow(t)), special_mod2(galois(base, j))));
    }
  }
  return rep;
}

Certificate verify_main_theorem(Level level, const VerifyOptions& opts) {
  require_funnel_level(level);
  const auto start = std::chrono::steady_clock::now();
  const auto gens = sqrt_over_f_generators(level);
  const std::size_t g = gens.size();
  const SpecialCoordsMod2 one = SpecialCoordsMod2::one(level);

  Certificate cert{level, {}, F2Matrix(0, 0), 0, 0, false, false, 0, 0, false, std::nullopt};
  std::vector<Mod2Elem> residues;
  std::vector<SpecialCoordsMod2> deltas;  // coords - 1
  for (const auto& gen : gens) {
    const SpecialCoordsMod2 c = word_mod2(gen.word);
    if (!c.get(0)) throw InternalInconsistency(gen.label + " has constant coordinate 0 mod 2");
    Mod2Elem res = word_residue(gen.word);
    if (!(special_mod2(res) == c)) throw InternalInconsistency(gen.label + ": residue and coordinates differ");
    residues.push_back(std::move(res));
    deltas.push_back(c + one);
    cert.generators.push_back({gen.label, c});
  }
  cert.matrix = build_matrix(level, cert.generators);
  cert.rank = cert.matrix.rank();
  cert.nullity = g - cert.rank;
  cert.trivial_only = cert.nullity == 0;
  cert.exploratory = level.n() >= 8;

  auto predicted = [&](std::uint64_t mask) {
    SpecialCoordsMod2 p = one;
    for (std::size_t v = 0; v < g; ++v) {
      if ((mask >> v) & 1U) p += deltas[v];
    }
    return p;
  };
  auto check = [&](std::uint64_t mask, const Mod2Elem& product) {
    const SpecialCoordsMod2 actual = special_mod2(product);
    if (!(actual == predicted(mask))) {
      throw DisagreementError("n = " + std::to_string(level.n()) + ", assignment mask " + std::to_string(mask) +
                              ": product " + actual.render() + " vs linearized " + predicted(mask).render());
    }
    ++cert.assignments_checked;
    if (actual.is_one()) ++cert.exhaustive_e_members;
  };

  if (g <= opts.exhaustive_cap_bits) {
    cert.exhaustive = true;
    std::function<void(std::size_t, const Mod2Elem&, std::uint64_t)> walk = [&](std::size_t i, const Mod2Elem& acc,
                                                                                std::uint64_t mask) {
      if (i == g) {
        check(mask, acc);
        return;
      }
      walk(i + 1, acc, mask);
      walk(i + 1, acc * residues[i], mask | (std::uint64_t{1} << i));
    };
    walk(0, Mod2Elem::one(level), 0);
    const bool exhaustive_trivial = cert.exhaustive_e_members == 1;
    if (exhaustive_trivial != cert.trivial_only) {
      throw DisagreementError("exhaustive enumeration finds " + std::to_string(cert.exhaustive_e_members) +
                              " members of E, linear system has nullity " + std::to_string(cert.nullity));
    }
  } else {
    std::mt19937_64 rng(opts.seed);
    for (std::size_t s = 0; s < opts.spot_checks; ++s) {
      // Masks over up to 64 generators; larger systems are sampled on their first 64 columns.
      const std::uint64_t mask = g >= 64 ? rng() : rng() & ((std::uint64_t{1} << g) - 1);
      Mod2Elem acc = Mod2Elem::one(level);
      for (std::size_t v = 0; v < g && v < 64; ++v) {
        if ((mask >> v) & 1U) acc = acc * residues[v];
      }
      check(mask, acc);
    }
  }

  // Rows r_odd against the q(1, .) columns.
  Subsystem sub{{}, {}, F2Matrix(0, 0)};
  for (std::int64_t l = 1; l < level.half_real(); l += 2) sub.rows.push_back(special_pos_r(level, l));
  for (std::size_t c = 0; c < g; ++c) {
    if (gens[c].k == 1) sub.cols.push_back(c);
  }
  std::vector<std::size_t> matrix_rows;
  for (auto p : sub.rows) matrix_rows.push_back(p - 1);
  sub.matrix = cert.matrix.submatrix(matrix_rows, sub.cols);
  sub.rank = sub.matrix.rank();
  cert.odd_r_subsystem = std::move(sub);

  cert.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return cert;
}

std::size_t replay_rank(const Certificate& cert) { return build_matrix(cert.level, cert.generators).rank(); }

}  // namespace circunit
