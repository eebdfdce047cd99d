#include <gtest/gtest.h>

#include "circunit/congruence.hpp"
#include "circunit/errors.hpp"
#include "circunit/funnel.hpp"
#include "circunit/groupring.hpp"
#include "test_support.hpp"

using namespace circunit;
using namespace circunit::testing;

namespace {

// Coefficients read straight off beta: tr(alpha^k) is +-2^{n-1} on k = 0, 2^{n-1} and 0 elsewhere.
std::vector<mpz_class> gammas_by_extraction(const CycInt& beta) {
  const auto m = static_cast<std::size_t>(beta.level().degree());
  std::vector<mpz_class> g(2 * m, 0);
  CycInt b = beta - CycInt::one(beta.level());
  for (std::size_t j = 0; j < m; ++j) {
    g[j] = b[j] / 2;
    g[j + m] = -b[j] / 2;
  }
  g[0] += 1;
  return g;
}

UnitWord random_e_word(Level lv, std::mt19937_64& rng) {
  const auto f = f_generators(lv);
  std::uniform_int_distribution<std::size_t> pick(0, f.size() - 1);
  std::uniform_int_distribution<int> ex(-2, 2);
  UnitWord w(lv);
  for (int i = 0; i < 2; ++i) w = w * f[pick(rng)].word.pow(ex(rng));
  return w;
}

}  // namespace

TEST(UChi1, Examples) {
  for (int n = 3; n <= 8; ++n) {
    Level lv(n);
    EXPECT_EQ(u_chi1(CycInt::constant(lv, -1)), GroupRingElt::monomial(lv, lv.degree()));
    EXPECT_TRUE(u_chi1(CycInt::one(lv)).is_identity());
    const auto x = GroupRingElt::monomial(lv, lv.degree());
    EXPECT_TRUE(gr_mul(x, x).is_identity());
  }
  Level lv(4);
  const auto beta = eval_word(UnitWord::d(lv, 1, 4));
  const auto u = u_chi1(beta);
  EXPECT_EQ(u.coeffs(), gammas_by_extraction(beta));
  EXPECT_EQ(u.augmentation(), 1);
  EXPECT_TRUE(is_admissible(beta));
}

TEST(UChi1, RejectsNonAdmissible) {
  for (int n = 4; n <= 7; ++n) {
    Level lv(n);
    EXPECT_FALSE(is_admissible(CycInt::monomial(lv, 1)));
    EXPECT_THROW(u_chi1(CycInt::monomial(lv, 1)), NotIntegral);
    EXPECT_FALSE(is_admissible(seq_d(lv, 1)));
    EXPECT_THROW(u_chi1(seq_d(lv, 1)), NotIntegral);
    EXPECT_THROW(u_chi1(CycInt::constant(lv, 3)), NotAUnit);
    EXPECT_THROW(is_admissible(CycInt::constant(lv, 3)), NotAUnit);
  }
}

TEST(UChi1, IntegralityIffAdmissible) {
  for (int n = 4; n <= 7; ++n) {
    Level lv(n);
    std::mt19937_64 rng(static_cast<std::uint64_t>(n));
    int admissible = 0;
    for (int i = 0; i < 500; ++i) {
      UnitWord w(lv);
      switch (i % 3) {
        case 0: w = random_e_word(lv, rng); break;
        case 1: w = random_word(lv, rng, 8, false); break;
        default: w = random_e_word(lv, rng) * UnitWord::alpha(lv, static_cast<std::int64_t>(rng() % 64)); break;
      }
      const auto beta = eval_word(w);
      const bool adm = is_admissible(beta);
      bool integral = true;
      try {
        (void)u_chi1(beta);
      } catch (const NotIntegral&) {
        integral = false;
      }
      EXPECT_EQ(adm, integral) << n << " " << w.to_string();
      // alpha^{2^{n-1}} = -1 keeps a word real and congruent to 1.
      const bool pm_e = w.alpha_exp() % lv.degree() == 0 && e_membership(w * UnitWord::alpha(lv, -w.alpha_exp()));
      EXPECT_EQ(adm, pm_e) << n << " " << w.to_string();
      admissible += adm;
    }
    EXPECT_GT(admissible, 100);
    EXPECT_LT(admissible, 500);
  }
}

TEST(UChi1, MultiplicativeWithInverses) {
  for (auto seed : kSeeds) {
    std::mt19937_64 rng(seed);
    for (int n = 4; n <= 7; ++n) {
      Level lv(n);
      const auto w1 = random_e_word(lv, rng);
      const auto w2 = random_e_word(lv, rng);
      const auto b1 = eval_word(w1), b2 = eval_word(w2);
      const auto u1 = u_chi1(b1), u2 = u_chi1(b2);
      EXPECT_EQ(gr_mul(u1, u2), u_chi1(b1 * b2));
      EXPECT_TRUE(gr_mul(u1, u_chi1(eval_word(w1.inverse()))).is_identity());
      EXPECT_EQ(character_eval(u1, 1), b1);
      EXPECT_TRUE(character_eval(u1, 0).is_one());
      EXPECT_EQ(u1.augmentation(), 1);
      // Other odd characters see the Galois conjugate.
      EXPECT_EQ(character_eval(u1, 3), galois(b1, 3));
    }
  }
  EXPECT_THROW(gr_mul(GroupRingElt::identity(Level(4)), GroupRingElt::identity(Level(5))), LevelMismatch);
}

TEST(V1, Generators) {
  for (int n = 4; n <= 7; ++n) {
    Level lv(n);
    const auto rep = v1_generators(lv);
    EXPECT_EQ(static_cast<std::int64_t>(rep.generators.size()), lv.real_degree() - 1);
    EXPECT_FALSE(rep.exploratory);
    EXPECT_EQ(rep.w1_torsion, GroupRingElt::monomial(lv, lv.degree()));
    for (const auto& g : rep.generators) {
      const auto beta = eval_word(g.word);
      EXPECT_TRUE(is_admissible(beta)) << g.label;
      EXPECT_EQ(g.unit, u_chi1(beta));
      EXPECT_EQ(g.unit.augmentation(), 1);
    }
  }
  const auto r4 = v1_generators(Level(4));
  ASSERT_EQ(r4.generators.size(), 3U);
  EXPECT_EQ(r4.generators[0].word, parse_word(Level(4), "d1^4"));
  EXPECT_TRUE(v1_generators(Level(8)).exploratory);
  EXPECT_THROW(v1_generators(Level(3)), LevelTooSmall);
}
