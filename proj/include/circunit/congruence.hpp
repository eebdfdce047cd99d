#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "circunit/bitvec.hpp"
#include "circunit/circular_units.hpp"
#include "circunit/cyclotomic.hpp"
#include "circunit/funnel.hpp"
#include "circunit/real_basis.hpp"

namespace circunit {

inline constexpr const char* kToolVersion = "circunit 1.0.0";

// B-coordinates mod 2 of a real word. Exponents are lifted into [0, 2^{n-2}) before
// evaluation and the result is compared with the evaluation through exact inverses.
SpecialCoordsMod2 word_mod2(const UnitWord& w);
// Residue of the word in Z[alpha]/2 via the lifted exponents (no realness needed).
Mod2Elem word_residue(const UnitWord& w);

bool e_membership(const UnitWord& w);

// P(k) = prod_{j=k-1}^{n-4} d_{2^j}, 1 <= k <= n-3.
CycInt p_factor(Level level, int k);
// "d_1d_2d_4" with ascending indices.
std::string p_factor_label(Level level, int k);

struct IdentityCheck {
  std::string name;
  int k = 0;
  std::int64_t j = 0;
  bool passed = false;
  std::string lhs;
  std::string rhs;
};

struct IdentityReport {
  Level level;
  std::vector<IdentityCheck> checks;
  bool all_passed() const;
};

IdentityReport q_power_identities(Level level);
// word_mod2(q(k, j)^{2^{k-1}}) against sigma_j applied to q(k, 1)^{2^{k-1}}, all k, all j in A_k.
IdentityReport galois_transport_check(Level level);

struct CertificateGenerator {
  std::string label;
  SpecialCoordsMod2 coords;
};

struct Subsystem {
  std::vector<std::size_t> rows;  // B positions
  std::vector<std::size_t> cols;  // generator indices
  F2Matrix matrix;
  std::size_t rank = 0;
};

struct VerifyOptions {
  std::uint64_t seed = 0;
  std::size_t exhaustive_cap_bits = 16;
  std::size_t spot_checks = 1000;
};

struct Certificate {
  Level level;
  std::vector<CertificateGenerator> generators;
  F2Matrix matrix;  // rows: B positions 1..2^{n-2}-1; columns: generators
  std::size_t rank = 0;
  std::size_t nullity = 0;
  bool trivial_only = false;
  bool exhaustive = false;
  std::uint64_t assignments_checked = 0;
  std::uint64_t exhaustive_e_members = 0;  // assignments landing in E, including delta = 0
  bool exploratory = false;
  std::optional<Subsystem> odd_r_subsystem;  // rows r_odd, columns q(1, .), when present
  std::string tool_version = kToolVersion;
  double elapsed_ms = 0;
};

Certificate verify_main_theorem(Level level, const VerifyOptions& opts = {});

// Recomputes rank from the generator table alone.
std::size_t replay_rank(const Certificate& cert);

}  // namespace circunit
