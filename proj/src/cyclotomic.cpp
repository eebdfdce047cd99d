#include "circunit/cyclotomic.hpp"

#include <sstream>
#include <utility>

#include "circunit/errors.hpp"

namespace circunit {

namespace {

using Coeffs = std::vector<mpz_class>;

// Product in Z[y]/(y^m + 1), m = a.size() = b.size().
Coeffs negacyclic_mul(const Coeffs& a, const Coeffs& b) {
  const std::size_t m = a.size();
  Coeffs r(m, 0);
  for (std::size_t i = 0; i < m; ++i) {
    if (sgn(a[i]) == 0) continue;
    const mpz_srcptr ai = a[i].get_mpz_t();
    for (std::size_t j = 0; j < m; ++j) {
      if (sgn(b[j]) == 0) continue;
      const std::size_t e = i + j;
      if (e < m) {
        mpz_addmul(r[e].get_mpz_t(), ai, b[j].get_mpz_t());
      } else {
        mpz_submul(r[e - m].get_mpz_t(), ai, b[j].get_mpz_t());
      }
    }
  }
  return r;
}

// alpha -> -alpha, the automorphism fixing the index-2 subring Z[alpha^2].
Coeffs negate_odd(Coeffs v) {
  for (std::size_t i = 1; i < v.size(); i += 2) v[i] = -v[i];
  return v;
}

// Coefficients of v * sigma(v), which lies in Z[alpha^2], re-indexed over alpha^2.
Coeffs descend(const Coeffs& v, const Coeffs& sv) {
  const Coeffs b = negacyclic_mul(v, sv);
  Coeffs half(b.size() / 2);
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (i % 2 == 1) {
      if (sgn(b[i]) != 0) throw InternalInconsistency("relative norm has odd-degree terms");
    } else {
      half[i / 2] = b[i];
    }
  }
  return half;
}

Coeffs invert_rec(const Coeffs& v) {
  if (v.size() == 1) {
    if (abs(v[0]) != 1) throw NotAUnit("norm is " + v[0].get_str());
    return v;
  }
  const Coeffs sv = negate_odd(v);
  const Coeffs w_inv = invert_rec(descend(v, sv));
  Coeffs lifted(v.size(), 0);
  for (std::size_t i = 0; i < w_inv.size(); ++i) lifted[2 * i] = w_inv[i];
  return negacyclic_mul(sv, lifted);
}

}  // namespace

CycInt::CycInt(Level level) : level_(level), coeffs_(static_cast<std::size_t>(level.degree()), 0) {}

CycInt::CycInt(Level level, std::vector<mpz_class> coeffs) : level_(level), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != static_cast<std::size_t>(level.degree())) {
    throw IndexOutOfRange("expected " + std::to_string(level.degree()) + " coefficients, got " +
                          std::to_string(coeffs_.size()));
  }
}

CycInt CycInt::constant(Level level, const mpz_class& c) {
  CycInt r(level);
  r.coeffs_[0] = c;
  return r;
}

CycInt CycInt::monomial(Level level, std::int64_t e) {
  CycInt r(level);
  const std::int64_t k = level.reduce(e);
  const std::int64_t m = level.degree();
  if (k < m) {
    r.coeffs_[static_cast<std::size_t>(k)] = 1;
  } else {
    r.coeffs_[static_cast<std::size_t>(k - m)] = -1;
  }
  return r;
}

bool CycInt::is_zero() const {
  for (const auto& c : coeffs_) {
    if (sgn(c) != 0) return false;
  }
  return true;
}

bool CycInt::is_one() const {
  if (coeffs_[0] != 1) return false;
  for (std::size_t j = 1; j < coeffs_.size(); ++j) {
    if (sgn(coeffs_[j]) != 0) return false;
  }
  return true;
}

CycInt CycInt::operator-() const {
  CycInt r(*this);
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

CycInt& CycInt::operator+=(const CycInt& o) {
  require_same(level_, o.level_);
  for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] += o.coeffs_[j];
  return *this;
}

CycInt& CycInt::operator-=(const CycInt& o) {
  require_same(level_, o.level_);
  for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] -= o.coeffs_[j];
  return *this;
}

CycInt operator*(const CycInt& a, const CycInt& b) {
  require_same(a.level_, b.level_);
  return CycInt(a.level_, negacyclic_mul(a.coeffs_, b.coeffs_));
}

CycInt& CycInt::operator*=(const CycInt& o) { return *this = *this * o; }

CycInt& CycInt::operator*=(const mpz_class& c) {
  for (auto& x : coeffs_) x *= c;
  return *this;
}

bool operator==(const CycInt& a, const CycInt& b) {
  return a.level_ == b.level_ && a.coeffs_ == b.coeffs_;
}

CycInt CycInt::shifted(std::int64_t e) const {
  const std::int64_t m = level_.degree();
  const std::int64_t k = level_.reduce(e);
  CycInt r(level_);
  for (std::int64_t j = 0; j < m; ++j) {
    const std::int64_t t = (j + k) % level_.order();
    if (t < m) {
      r.coeffs_[static_cast<std::size_t>(t)] = coeffs_[static_cast<std::size_t>(j)];
    } else {
      r.coeffs_[static_cast<std::size_t>(t - m)] = -coeffs_[static_cast<std::size_t>(j)];
    }
  }
  return r;
}

CycInt CycInt::pow(std::uint64_t e) const {
  CycInt result = one(level_);
  CycInt base = *this;
  while (e > 0) {
    if (e & 1U) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

std::string CycInt::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    const mpz_class& c = coeffs_[j];
    if (sgn(c) == 0) continue;
    if (!first) os << (sgn(c) > 0 ? " + " : " - ");
    else if (sgn(c) < 0) os << "-";
    const mpz_class a = abs(c);
    if (j == 0) {
      os << a.get_str();
    } else {
      if (a != 1) os << a.get_str() << "*";
      os << "a^" << j;
    }
    first = false;
  }
  return first ? "0" : os.str();
}

CycInt add(const CycInt& a, const CycInt& b) { return a + b; }
CycInt mul(const CycInt& a, const CycInt& b) { return a * b; }

CycInt galois(const CycInt& a, std::int64_t k) {
  const Level& lv = a.level();
  const std::int64_t kk = lv.reduce(k);
  if (kk % 2 == 0) throw EvenGaloisIndex("k = " + std::to_string(k));
  const std::int64_t m = lv.degree();
  std::vector<mpz_class> r(static_cast<std::size_t>(m), 0);
  for (std::int64_t j = 0; j < m; ++j) {
    const mpz_class& c = a[static_cast<std::size_t>(j)];
    if (sgn(c) == 0) continue;
    const std::int64_t e = (j * kk) % lv.order();
    if (e < m) {
      r[static_cast<std::size_t>(e)] += c;
    } else {
      r[static_cast<std::size_t>(e - m)] -= c;
    }
  }
  return CycInt(lv, std::move(r));
}

mpz_class trace(const CycInt& a) { return a[0] * mpz_class(a.level().degree()); }

mpz_class norm(const CycInt& a) {
  Coeffs v = a.coeffs();
  while (v.size() > 1) {
    const Coeffs sv = negate_odd(v);
    v = descend(v, sv);
  }
  return v[0];
}

mpz_class norm_by_conjugates(const CycInt& a) {
  const Level& lv = a.level();
  CycInt prod = CycInt::one(lv);
  for (std::int64_t k = 1; k < lv.order(); k += 2) prod = prod * galois(a, k);
  for (std::size_t j = 1; j < prod.coeffs().size(); ++j) {
    if (sgn(prod[j]) != 0) throw InternalInconsistency("conjugate product is not rational");
  }
  return prod[0];
}

CycInt invert_unit(const CycInt& a) { return CycInt(a.level(), invert_rec(a.coeffs())); }

BitVec mod2_coords(const CycInt& a) {
  BitVec bits(a.coeffs().size());
  for (std::size_t j = 0; j < a.coeffs().size(); ++j) {
    if (mpz_odd_p(a[j].get_mpz_t())) bits.set(j);
  }
  return bits;
}

Mod2Elem::Mod2Elem(Level level) : level_(level), bits_(static_cast<std::size_t>(level.degree())) {}

Mod2Elem::Mod2Elem(Level level, BitVec bits) : level_(level), bits_(std::move(bits)) {
  if (bits_.size() != static_cast<std::size_t>(level.degree())) {
    throw IndexOutOfRange("mod-2 residue of wrong width");
  }
}

Mod2Elem::Mod2Elem(const CycInt& a) : level_(a.level()), bits_(mod2_coords(a)) {}

Mod2Elem Mod2Elem::one(Level level) {
  Mod2Elem r(level);
  r.bits_.set(0);
  return r;
}

bool Mod2Elem::is_one() const { return bits_.get(0) && bits_.count() == 1; }

Mod2Elem operator*(const Mod2Elem& a, const Mod2Elem& b) {
  require_same(a.level_, b.level_);
  Mod2Elem r(a.level_);
  for (std::size_t i = 0; i < a.bits_.size(); ++i) {
    if (a.bits_.get(i)) r.bits_ ^= b.bits_.rotated(i);
  }
  return r;
}

Mod2Elem operator+(const Mod2Elem& a, const Mod2Elem& b) {
  require_same(a.level_, b.level_);
  return Mod2Elem(a.level_, a.bits_ ^ b.bits_);
}

Mod2Elem Mod2Elem::pow(std::uint64_t e) const {
  Mod2Elem result = one(level_);
  Mod2Elem base = *this;
  while (e > 0) {
    if (e & 1U) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

}  // namespace circunit
