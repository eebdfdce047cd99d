#include "circunit/circular_units.hpp"

#include <Eigen/Dense>

#include <cctype>
#include <cmath>
#include <numbers>
#include <sstream>

#include "circunit/errors.hpp"
#include "circunit/real_basis.hpp"

namespace circunit {

namespace {

// 3^e mod 2^n.
std::int64_t pow3(Level level, std::int64_t e) {
  std::int64_t r = 1;
  for (std::int64_t i = 0; i < e; ++i) r = (r * 3) % level.order();
  return r;
}

std::uint64_t magnitude(std::int64_t e) { return static_cast<std::uint64_t>(e < 0 ? -e : e); }

CycInt signed_power(const CycInt& x, std::int64_t e) {
  if (e >= 0) return x.pow(magnitude(e));
  return invert_unit(x).pow(magnitude(e));
}

class WordParser {
 public:
  WordParser(Level level, const std::string& text) : level_(level), text_(text) {}

  UnitWord parse() {
    UnitWord w = product();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + text_.substr(pos_) + "'");
    return w;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg + " in word '" + text_ + "'"); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::int64_t integer() {
    skip_ws();
    const bool braced = accept('{');
    skip_ws();
    bool neg = false;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) neg = text_[pos_++] == '-';
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    std::int64_t v = std::stoll(text_.substr(start, pos_ - start));
    if (braced && !accept('}')) fail("expected '}'");
    return neg ? -v : v;
  }

  UnitWord product() {
    UnitWord w = factor();
    while (accept('*')) w = w * factor();
    return w;
  }

  UnitWord factor() {
    UnitWord base = atom();
    if (accept('^')) base = base.pow(integer());
    return base;
  }

  UnitWord atom() {
    skip_ws();
    if (accept('(')) {
      UnitWord w = product();
      if (!accept(')')) fail("expected ')'");
      return w;
    }
    if (pos_ >= text_.size()) fail("unexpected end");
    if (text_.compare(pos_, 5, "alpha") == 0) {
      pos_ += 5;
      return UnitWord::alpha(level_, 1);
    }
    const char c = text_[pos_];
    if (c == 'a') {
      ++pos_;
      return UnitWord::alpha(level_, 1);
    }
    if (c == 'd') {
      ++pos_;
      accept('_');
      const std::int64_t j = integer();
      return UnitWord::d(level_, j);
    }
    if (c == '1') {
      ++pos_;
      return UnitWord(level_);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  Level level_;
  std::string text_;
  std::size_t pos_ = 0;
};

}  // namespace

CycInt beta(Level level, std::int64_t l) {
  if (l < 0 || l >= level.real_degree()) throw IndexOutOfRange("beta_" + std::to_string(l));
  const std::int64_t t = pow3(level, l);
  return CycInt::one(level) + CycInt::monomial(level, t) + CycInt::monomial(level, 2 * t);
}

std::vector<std::int64_t> generator_indices(Level level) {
  std::vector<std::int64_t> a;
  for (std::int64_t j = 1; j <= level.degree() - 3; j += 2) a.push_back(j);
  return a;
}

bool is_generator_index(Level level, std::int64_t j) { return j >= 1 && j <= level.degree() - 3 && j % 2 == 1; }

UnitWord::UnitWord(Level level) : level_(level), alpha_exp_(0) {}

UnitWord::UnitWord(Level level, std::int64_t alpha_exp, const std::map<std::int64_t, std::int64_t>& d_exps)
    : level_(level), alpha_exp_(level.reduce(alpha_exp)) {
  for (const auto& [j, e] : d_exps) {
    if (!is_generator_index(level, j)) throw IndexOutOfRange("d_" + std::to_string(j) + " is not a generator of D");
    if (e != 0) d_exps_[j] = e;
  }
}

UnitWord UnitWord::d(Level level, std::int64_t j, std::int64_t e) { return UnitWord(level, 0, {{j, e}}); }

UnitWord UnitWord::alpha(Level level, std::int64_t e) { return UnitWord(level, e, {}); }

std::int64_t UnitWord::exponent(std::int64_t j) const {
  const auto it = d_exps_.find(j);
  return it == d_exps_.end() ? 0 : it->second;
}

UnitWord UnitWord::operator*(const UnitWord& o) const {
  require_same(level_, o.level_);
  auto exps = d_exps_;
  for (const auto& [j, e] : o.d_exps_) exps[j] += e;
  return UnitWord(level_, alpha_exp_ + o.alpha_exp_, exps);
}

UnitWord UnitWord::inverse() const { return pow(-1); }

UnitWord UnitWord::pow(std::int64_t e) const {
  auto exps = d_exps_;
  for (auto& [j, x] : exps) x *= e;
  return UnitWord(level_, level_.reduce(alpha_exp_ * e), exps);
}

std::vector<std::int64_t> UnitWord::exponent_vector() const {
  std::vector<std::int64_t> v;
  for (std::int64_t j : generator_indices(level_)) v.push_back(exponent(j));
  return v;
}

std::string UnitWord::to_string() const {
  std::vector<std::string> parts;
  if (alpha_exp_ != 0) parts.push_back(alpha_exp_ == 1 ? "a" : "a^" + std::to_string(alpha_exp_));
  for (const auto& [j, e] : d_exps_) {
    parts.push_back("d" + std::to_string(j) + (e == 1 ? "" : "^" + std::to_string(e)));
  }
  if (parts.empty()) return "1";
  std::string out = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) out += " * " + parts[i];
  return out;
}

UnitWord parse_word(Level level, const std::string& text) { return WordParser(level, text).parse(); }

CycInt eval_word(const UnitWord& w) {
  const Level& lv = w.level();
  CycInt acc = CycInt::monomial(lv, w.alpha_exp());
  for (const auto& [j, e] : w.d_exps()) acc = acc * signed_power(seq_d(lv, j), e);
  return acc;
}

bool p_word_is_unit(const PWord& p) {
  std::int64_t s = 0;
  for (auto k : p.cyc_exps) s += k;
  return s == 0;
}

std::vector<std::int64_t> p_word_beta_exponents(const PWord& p) {
  if (p.cyc_exps.size() != static_cast<std::size_t>(p.level.real_degree())) {
    throw IndexOutOfRange("PWord needs 2^{n-2} exponents");
  }
  if (!p_word_is_unit(p)) throw NotAUnit("exponent sum of the PWord is nonzero");
  // prod beta_l^{f_l} = prod c_l^{f_{l-1} - f_l} with c_l = 1 - alpha^{3^l}, indices cyclic.
  std::vector<std::int64_t> f(p.cyc_exps.size(), 0);
  for (std::size_t l = 1; l < f.size(); ++l) f[l] = f[l - 1] - p.cyc_exps[l];
  return f;
}

CycInt eval_p_word(const PWord& p) {
  const auto f = p_word_beta_exponents(p);
  CycInt acc = CycInt::monomial(p.level, p.alpha_exp);
  for (std::size_t l = 0; l < f.size(); ++l) {
    if (f[l] != 0) acc = acc * signed_power(beta(p.level, static_cast<std::int64_t>(l)), f[l]);
  }
  return acc;
}

std::pair<CycInt, CycInt> p_word_fraction(const PWord& p) {
  CycInt num = CycInt::monomial(p.level, p.alpha_exp);
  CycInt den = CycInt::one(p.level);
  for (std::size_t l = 0; l < p.cyc_exps.size(); ++l) {
    const std::int64_t k = p.cyc_exps[l];
    if (k == 0) continue;
    const CycInt c = CycInt::one(p.level) - CycInt::monomial(p.level, pow3(p.level, static_cast<std::int64_t>(l)));
    if (k > 0) {
      num = num * c.pow(magnitude(k));
    } else {
      den = den * c.pow(magnitude(k));
    }
  }
  return {num, den};
}

ThreePower three_power_index(Level level, std::int64_t j) {
  const std::int64_t t = level.reduce(j);
  if (t % 2 == 0) throw EvenGaloisIndex("j = " + std::to_string(j));
  std::int64_t p = 1;
  for (std::int64_t k = 0; k < level.real_degree(); ++k) {
    if (p == t) return {1, k};
    if (level.reduce(-p) == t) return {-1, k};
    p = (p * 3) % level.order();
  }
  throw InternalInconsistency("odd residue outside <-1, 3>");
}

DBetaForm d_as_beta(Level level, std::int64_t j) {
  const ThreePower tp = three_power_index(level, j);
  const std::int64_t t = pow3(level, tp.k);
  const std::int64_t e = tp.sign > 0 ? -j : -j - 2 * t;
  return {level.reduce(e), tp.k};
}

int independence_rank(Level level) {
  if (level.n() > 8) throw InvalidLevel("independence_rank is limited to n <= 8");
  using Mat = Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>;
  const auto gens = generator_indices(level);
  const std::int64_t half = level.degree();
  Mat m(static_cast<Eigen::Index>(gens.size()), static_cast<Eigen::Index>(level.real_degree()));
  const long double pi = std::numbers::pi_v<long double>;
  for (std::size_t r = 0; r < gens.size(); ++r) {
    for (std::int64_t c = 0; c < level.real_degree(); ++c) {
      // Real embedding s_1 -> 2cos(pi k / 2^{n-1}), k = 2c + 1.
      const std::int64_t k = 2 * c + 1;
      const long double x = 1.0L + 2.0L * std::cos(pi * static_cast<long double>((gens[r] * k) % (2 * half)) /
                                                    static_cast<long double>(half));
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = std::log(std::fabs(x));
    }
  }
  Eigen::JacobiSVD<Mat> svd(m);
  int rank = 0;
  for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i) {
    if (svd.singularValues()(i) > 1e-6L) ++rank;
  }
  return rank;
}

}  // namespace circunit
