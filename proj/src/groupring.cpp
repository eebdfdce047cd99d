#include "circunit/groupring.hpp"

#include <utility>

#include "circunit/errors.hpp"
#include "circunit/funnel.hpp"
#include "circunit/real_basis.hpp"

namespace circunit {

namespace {

void require_unit(const CycInt& beta) {
  const mpz_class nm = norm(beta);
  if (abs(nm) != 1) throw NotAUnit("norm is " + nm.get_str());
}

}  // namespace

GroupRingElt::GroupRingElt(Level level) : level_(level), coeffs_(static_cast<std::size_t>(level.order()), 0) {}

GroupRingElt::GroupRingElt(Level level, std::vector<mpz_class> coeffs) : level_(level), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != static_cast<std::size_t>(level.order())) throw IndexOutOfRange("group ring vector of wrong length");
}

GroupRingElt GroupRingElt::identity(Level level) { return monomial(level, 0); }

GroupRingElt GroupRingElt::monomial(Level level, std::int64_t j) {
  GroupRingElt r(level);
  r.coeffs_[static_cast<std::size_t>(level.reduce(j))] = 1;
  return r;
}

mpz_class GroupRingElt::augmentation() const {
  mpz_class s = 0;
  for (const auto& c : coeffs_) s += c;
  return s;
}

bool GroupRingElt::is_identity() const { return *this == identity(level_); }

GroupRingElt gr_mul(const GroupRingElt& a, const GroupRingElt& b) {
  require_same(a.level(), b.level());
  const std::size_t n = a.coeffs().size();
  std::vector<mpz_class> r(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(a.coeffs()[i]) == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (sgn(b.coeffs()[j]) == 0) continue;
      mpz_addmul(r[(i + j) % n].get_mpz_t(), a.coeffs()[i].get_mpz_t(), b.coeffs()[j].get_mpz_t());
    }
  }
  return GroupRingElt(a.level(), std::move(r));
}

GroupRingElt u_chi1(const CycInt& beta) {
  require_unit(beta);
  const Level& lv = beta.level();
  const CycInt b1 = beta - CycInt::one(lv);
  const mpz_class denom = lv.order();
  std::vector<mpz_class> gamma(static_cast<std::size_t>(lv.order()));
  for (std::int64_t j = 0; j < lv.order(); ++j) {
    const mpz_class tr = trace(b1.shifted(-j));
    if (!mpz_divisible_p(tr.get_mpz_t(), denom.get_mpz_t())) {
      throw NotIntegral("gamma_" + std::to_string(j) + " = " + tr.get_str() + "/" + denom.get_str());
    }
    mpz_divexact(gamma[static_cast<std::size_t>(j)].get_mpz_t(), tr.get_mpz_t(), denom.get_mpz_t());
  }
  gamma[0] += 1;
  return GroupRingElt(lv, std::move(gamma));
}

bool is_admissible(const CycInt& beta) {
  require_unit(beta);
  return is_real(beta) && Mod2Elem(beta).is_one();
}

CycInt character_eval(const GroupRingElt& u, std::int64_t t) {
  CycInt acc(u.level());
  for (std::int64_t j = 0; j < u.level().order(); ++j) {
    const mpz_class& c = u.coeffs()[static_cast<std::size_t>(j)];
    if (sgn(c) != 0) acc += c * CycInt::monomial(u.level(), j * t);
  }
  return acc;
}

V1Report v1_generators(Level level) {
  if (level.n() < 4) throw LevelTooSmall("V_1 generators need n >= 4");
  V1Report rep{level, {}, GroupRingElt::monomial(level, level.degree()), level.n() >= 8};
  for (const auto& g : f_generators(level)) rep.generators.push_back({g.label, g.word, u_chi1(eval_word(g.word))});
  return rep;
}

}  // namespace circunit
