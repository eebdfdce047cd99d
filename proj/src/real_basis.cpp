#include "circunit/real_basis.hpp"

#include <cctype>
#include <utility>

#include "circunit/errors.hpp"

namespace circunit {

namespace {

std::size_t sz(std::int64_t v) { return static_cast<std::size_t>(v); }

// Adds s_t mod 2 for t in [0, 2^{n-2}], symbolically.
void add_s_mod2(SpecialCoordsMod2& out, std::int64_t t) {
  const Level& lv = out.level();
  const std::int64_t q = lv.half_real();
  const std::int64_t h = lv.real_degree();
  if (t == 0 || t == h) return;
  if (t <= q) {
    out.flip(special_pos_s(lv, t));
  } else {
    out.flip(special_pos_r(lv, 2 * q - t));
    out.flip(special_pos_s(lv, 2 * q - t));
  }
}

// Adds r_t mod 2 for t in [0, 2^{n-3}], symbolically.
void add_r_mod2(SpecialCoordsMod2& out, std::int64_t t) {
  const std::int64_t q = out.level().half_real();
  if (t == 0 || t == q) return;
  out.flip(special_pos_r(out.level(), t));
}

}  // namespace

CycInt seq_s(Level level, std::int64_t j) { return CycInt::monomial(level, j) + CycInt::monomial(level, -j); }

CycInt seq_d(Level level, std::int64_t j) { return CycInt::one(level) + seq_s(level, j); }

CycInt seq_r(Level level, std::int64_t j) { return seq_s(level, j) + seq_s(level, level.real_degree() - j); }

bool is_real(const CycInt& a) { return conj(a) == a; }

RealElem::RealElem(Level level) : level_(level), s_coords_(sz(level.real_degree()), 0) {}

RealElem::RealElem(Level level, std::vector<mpz_class> s_coords) : level_(level), s_coords_(std::move(s_coords)) {
  if (s_coords_.size() != sz(level.real_degree())) throw IndexOutOfRange("s-basis vector of wrong length");
}

CycInt RealElem::to_cycint() const {
  const std::int64_t m = level_.degree();
  std::vector<mpz_class> c(sz(m), 0);
  c[0] = s_coords_[0];
  for (std::int64_t j = 1; j < level_.real_degree(); ++j) {
    c[sz(j)] += s_coords_[sz(j)];
    c[sz(m - j)] -= s_coords_[sz(j)];
  }
  return CycInt(level_, std::move(c));
}

RealElem to_s_basis(const CycInt& a) {
  if (!is_real(a)) throw NotReal("element is not fixed by complex conjugation");
  const Level& lv = a.level();
  std::vector<mpz_class> s(sz(lv.real_degree()));
  for (std::int64_t j = 0; j < lv.real_degree(); ++j) s[sz(j)] = a[sz(j)];
  return RealElem(lv, std::move(s));
}

std::size_t special_pos_one() { return 0; }

std::size_t special_pos_s(Level level, std::int64_t j) {
  if (j < 1 || j > level.half_real()) throw IndexOutOfRange("s_" + std::to_string(j) + " is not in B");
  return sz(j);
}

std::size_t special_pos_r(Level level, std::int64_t j) {
  if (j < 1 || j >= level.half_real()) throw IndexOutOfRange("r_" + std::to_string(j) + " is not in B");
  return sz(level.half_real() + j);
}

std::string special_label(Level level, std::size_t pos) {
  const auto q = sz(level.half_real());
  if (pos == 0) return "1";
  if (pos <= q) return "s_" + std::to_string(pos);
  if (pos < 2 * q) return "r_" + std::to_string(pos - q);
  throw IndexOutOfRange("position " + std::to_string(pos) + " outside B");
}

CycInt special_basis_element(Level level, std::size_t pos) {
  const auto q = sz(level.half_real());
  if (pos == 0) return CycInt::one(level);
  if (pos <= q) return seq_s(level, static_cast<std::int64_t>(pos));
  if (pos < 2 * q) return seq_r(level, static_cast<std::int64_t>(pos - q));
  throw IndexOutOfRange("position " + std::to_string(pos) + " outside B");
}

std::vector<mpz_class> to_special_basis(const RealElem& a) {
  const Level& lv = a.level();
  const std::int64_t q = lv.half_real();
  const auto& c = a.s_coords();
  std::vector<mpz_class> b(c.size(), 0);
  b[0] = c[0];
  for (std::int64_t j = 1; j <= q; ++j) b[sz(j)] += c[sz(j)];
  // s_{q+i} = r_{q-i} - s_{q-i}
  for (std::int64_t i = 1; i < q; ++i) {
    const mpz_class& x = c[sz(q + i)];
    b[special_pos_r(lv, q - i)] += x;
    b[special_pos_s(lv, q - i)] -= x;
  }
  return b;
}

RealElem from_special_basis(Level level, const std::vector<mpz_class>& b) {
  if (b.size() != sz(level.real_degree())) throw IndexOutOfRange("B-vector of wrong length");
  const std::int64_t q = level.half_real();
  std::vector<mpz_class> c(b.size(), 0);
  c[0] = b[0];
  for (std::int64_t j = 1; j <= q; ++j) c[sz(j)] += b[sz(j)];
  // r_t = s_t + s_{2q-t}
  for (std::int64_t t = 1; t < q; ++t) {
    const mpz_class& x = b[special_pos_r(level, t)];
    c[sz(t)] += x;
    c[sz(2 * q - t)] += x;
  }
  return RealElem(level, std::move(c));
}

SpecialCoordsMod2::SpecialCoordsMod2(Level level) : level_(level), bits_(sz(level.real_degree())) {}

SpecialCoordsMod2::SpecialCoordsMod2(Level level, BitVec bits) : level_(level), bits_(std::move(bits)) {
  if (bits_.size() != sz(level.real_degree())) throw IndexOutOfRange("B-coordinates of wrong width");
}

SpecialCoordsMod2 SpecialCoordsMod2::one(Level level) {
  SpecialCoordsMod2 r(level);
  r.bits_.set(0);
  return r;
}

bool SpecialCoordsMod2::is_one() const { return bits_.get(0) && bits_.count() == 1; }

bool SpecialCoordsMod2::in_rtilde() const {
  for (std::size_t p = 0; p <= sz(level_.half_real()); ++p) {
    if (bits_.get(p)) return false;
  }
  return true;
}

SpecialCoordsMod2& SpecialCoordsMod2::operator+=(const SpecialCoordsMod2& o) {
  require_same(level_, o.level_);
  bits_ ^= o.bits_;
  return *this;
}

std::string SpecialCoordsMod2::render() const {
  std::string out;
  for (std::size_t p = 0; p < bits_.size(); ++p) {
    if (!bits_.get(p)) continue;
    if (!out.empty()) out += "+";
    out += special_label(level_, p);
  }
  return out.empty() ? "0" : out;
}

SpecialCoordsMod2 special_mod2(const CycInt& a) {
  const Level& lv = a.level();
  const auto b = to_special_basis(to_s_basis(a));
  BitVec bits(b.size());
  for (std::size_t p = 0; p < b.size(); ++p) {
    if (mpz_odd_p(b[p].get_mpz_t())) bits.set(p);
  }
  return SpecialCoordsMod2(lv, std::move(bits));
}

SpecialCoordsMod2 special_mod2(const Mod2Elem& a) {
  const Level& lv = a.level();
  const auto& bits = a.bits();
  const std::int64_t m = lv.degree();
  const std::int64_t h = lv.real_degree();
  if (bits.get(sz(h))) throw NotReal("residue has a term at alpha^{2^{n-2}}");
  for (std::int64_t j = 1; j < h; ++j) {
    if (bits.get(sz(j)) != bits.get(sz(m - j))) throw NotReal("residue is not conjugation-symmetric");
  }
  SpecialCoordsMod2 out(lv);
  if (bits.get(0)) out.flip(0);
  for (std::int64_t j = 1; j < h; ++j) {
    if (bits.get(sz(j))) add_s_mod2(out, j);
  }
  return out;
}

bool rtilde_member(const CycInt& a) { return special_mod2(a).in_rtilde(); }

std::string s_symbol_mod2(Level level, std::int64_t j) {
  const std::int64_t half = level.degree();
  std::int64_t t = floor_mod(j, half);
  if (t > level.real_degree()) t = half - t;
  if (t == 0 || t == level.real_degree()) return "0";
  if (t == level.half_real()) return "sqrt2";
  return "s_" + std::to_string(t);
}

std::string r_symbol_mod2(Level level, std::int64_t j) {
  const std::int64_t period = level.real_degree();
  std::int64_t t = floor_mod(j, period);
  if (t > level.half_real()) t = period - t;
  if (t == 0 || t == level.half_real()) return "0";
  return "r_" + std::to_string(t);
}

std::vector<std::string> s_table(Level level) {
  // Each s_j is matched against the mod-2 images of s_0..s_{2^{n-2}}; the first hit names it.
  const std::int64_t h = level.real_degree();
  std::vector<SpecialCoordsMod2> canon;
  for (std::int64_t c = 0; c <= h; ++c) canon.push_back(special_mod2(seq_s(level, c)));
  std::vector<std::string> out;
  for (std::int64_t j = 0; j < level.degree(); ++j) {
    const auto v = special_mod2(seq_s(level, j));
    std::int64_t c = 0;
    while (c <= h && !(canon[sz(c)] == v)) ++c;
    if (c > h) throw InternalInconsistency("s_" + std::to_string(j) + " has no canonical symbol");
    if (v.is_zero()) {
      out.push_back("0");
    } else if (c == level.half_real()) {
      out.push_back("sqrt2");
    } else {
      out.push_back("s_" + std::to_string(c));
    }
  }
  return out;
}

std::vector<std::string> r_table(Level level) {
  const std::int64_t q = level.half_real();
  std::vector<SpecialCoordsMod2> canon;
  for (std::int64_t c = 0; c <= q; ++c) canon.push_back(special_mod2(seq_r(level, c)));
  std::vector<std::string> out;
  for (std::int64_t j = 0; j < level.real_degree(); ++j) {
    const auto v = special_mod2(seq_r(level, j));
    std::int64_t c = 0;
    while (c <= q && !(canon[sz(c)] == v)) ++c;
    if (c > q) throw InternalInconsistency("r_" + std::to_string(j) + " has no canonical symbol");
    out.push_back(v.is_zero() ? "0" : "r_" + std::to_string(c));
  }
  return out;
}

ProductRule special_product_mod2(Level level, std::size_t pos_a, std::size_t pos_b) {
  const auto q = level.half_real();
  const auto h = level.real_degree();
  if (pos_a >= sz(h) || pos_b >= sz(h)) throw IndexOutOfRange("position outside B");
  SpecialCoordsMod2 out(level);
  if (pos_a == 0 || pos_b == 0) {
    out.flip(pos_a == 0 ? pos_b : pos_a);
    return {"1x", out};
  }
  const bool a_is_s = pos_a <= sz(q);
  const bool b_is_s = pos_b <= sz(q);
  if (!a_is_s && !b_is_s) return {"RR", out};

  if (a_is_s && b_is_s) {
    std::int64_t j = static_cast<std::int64_t>(pos_a);
    std::int64_t k = static_cast<std::int64_t>(pos_b);
    if (j > k) std::swap(j, k);
    if (k == q) {
      if (j < q) add_r_mod2(out, q - j);
      return {"SSq", out};
    }
    add_s_mod2(out, k - j);
    if (k + j <= q) {
      add_s_mod2(out, k + j);
      return {"SS<=q", out};
    }
    // s_{k+j} = r_{h-(k+j)} - s_{h-(k+j)}
    add_r_mod2(out, h - (k + j));
    add_s_mod2(out, h - (k + j));
    return {"SS>q", out};
  }

  const std::int64_t j = static_cast<std::int64_t>(a_is_s ? pos_a : pos_b);       // s_j
  const std::int64_t k = static_cast<std::int64_t>(a_is_s ? pos_b : pos_a) - q;   // r_k
  if (j == q) return {"SqR", out};
  const bool sr = j <= k;
  const std::string prefix = sr ? "SR" : "RS";
  add_r_mod2(out, sr ? k - j : j - k);
  if (k + j < q) {
    add_r_mod2(out, k + j);
    return {prefix + "<q", out};
  }
  if (k + j == q) return {prefix + "=q", out};
  add_r_mod2(out, h - (k + j));
  return {prefix + ">q", out};
}

namespace {

class ExprParser {
 public:
  ExprParser(Level level, const std::string& text) : level_(level), text_(text) {}

  CycInt parse() {
    CycInt v = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + text_.substr(pos_) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg + " in '" + text_ + "'"); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool starts_factor() {
    skip_ws();
    if (pos_ >= text_.size()) return false;
    const char c = text_[pos_];
    return c == '(' || c == 's' || c == 'd' || c == 'r' || std::isdigit(static_cast<unsigned char>(c)) ||
           text_.compare(pos_, 3, "\xE2\x88\x9A") == 0;
  }

  std::int64_t integer() {
    skip_ws();
    bool neg = false;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) neg = text_[pos_++] == '-';
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    const std::int64_t v = std::stoll(text_.substr(start, pos_ - start));
    return neg ? -v : v;
  }

  std::int64_t subscript() {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == '_') ++pos_;
    if (peek('{')) {
      ++pos_;
      const std::int64_t v = integer();
      if (!peek('}')) fail("expected '}'");
      ++pos_;
      return v;
    }
    return integer();
  }

  CycInt expr() {
    CycInt acc(level_);
    bool negate = false;
    if (peek('-')) {
      ++pos_;
      negate = true;
    }
    acc = term();
    if (negate) acc = -acc;
    while (true) {
      if (peek('+')) {
        ++pos_;
        acc += term();
      } else if (peek('-')) {
        ++pos_;
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  CycInt term() {
    CycInt acc = factor();
    while (true) {
      if (peek('*')) {
        ++pos_;
        acc = acc * factor();
      } else if (starts_factor()) {
        acc = acc * factor();
      } else {
        return acc;
      }
    }
  }

  CycInt factor() {
    CycInt base = atom();
    if (peek('^')) {
      ++pos_;
      const std::int64_t e = peek('{') ? subscript() : integer();
      if (e < 0) fail("negative powers are not supported");
      base = base.pow(static_cast<std::uint64_t>(e));
    }
    return base;
  }

  CycInt atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end");
    if (peek('(')) {
      ++pos_;
      CycInt v = expr();
      if (!peek(')')) fail("expected ')'");
      ++pos_;
      return v;
    }
    if (text_.compare(pos_, 5, "sqrt2") == 0) {
      pos_ += 5;
      return seq_s(level_, level_.half_real());
    }
    if (text_.compare(pos_, 4, "\xE2\x88\x9A" "2") == 0) {
      pos_ += 4;
      return seq_s(level_, level_.half_real());
    }
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return CycInt::constant(level_, mpz_class(text_.substr(start, pos_ - start)));
    }
    if (c == 's' || c == 'd' || c == 'r') {
      ++pos_;
      const std::int64_t j = subscript();
      if (c == 's') return seq_s(level_, j);
      if (c == 'd') return seq_d(level_, j);
      return seq_r(level_, j);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  Level level_;
  std::string text_;
  std::size_t pos_ = 0;
};

mpz_class binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

}  // namespace

CycInt parse_real_expression(Level level, const std::string& text) { return ExprParser(level, text).parse(); }

SpecialCoordsMod2 parse_mod2_expression(Level level, const std::string& text) {
  return special_mod2(parse_real_expression(level, text));
}

std::vector<mpz_class> s_in_powers_of_s1(std::int64_t j) {
  if (j < 0) throw IndexOutOfRange("negative index");
  std::vector<mpz_class> c(sz(j) + 1, 0);
  if (j == 0) {
    c[0] = 2;
    return c;
  }
  c[sz(j)] = 1;
  if (j % 2 == 0) {
    const std::int64_t h = j / 2;
    for (std::int64_t k = 0; k < h; ++k) {
      mpz_class v = binomial(h + k, h - k) + binomial(h + k - 1, h - k - 1);
      if ((h - k) % 2 == 1) v = -v;
      c[sz(2 * k)] = v;
    }
  } else {
    const std::int64_t h = (j - 1) / 2;
    for (std::int64_t k = 0; k < h; ++k) {
      mpz_class v = binomial(h + 1 + k, h - k) + binomial(h + k, h - k - 1);
      if ((h - k) % 2 == 1) v = -v;
      c[sz(2 * k + 1)] = v;
    }
  }
  return c;
}

std::vector<mpz_class> power_of_s1_in_s(std::int64_t m) {
  if (m < 0) throw IndexOutOfRange("negative exponent");
  std::vector<mpz_class> c(sz(m) + 1, 0);
  // (a + a^{-1})^m = sum_i C(m,i) a^{m-2i}; pair the exponents +-t.
  for (std::int64_t i = 0; 2 * i <= m; ++i) c[sz(m - 2 * i)] = binomial(m, i);
  return c;
}

}  // namespace circunit
