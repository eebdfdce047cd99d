#include "circunit/lattice.hpp"

#include <stdexcept>
#include <utility>

namespace circunit {

namespace {

void sub_multiple(IntVector& row, const IntVector& pivot, const mpz_class& q) {
  if (sgn(q) == 0) return;
  for (std::size_t c = 0; c < row.size(); ++c) mpz_submul(row[c].get_mpz_t(), q.get_mpz_t(), pivot[c].get_mpz_t());
}

bool is_zero(const IntVector& v) {
  for (const auto& x : v) {
    if (sgn(x) != 0) return false;
  }
  return true;
}

}  // namespace

IntMatrix hermite_normal_form(IntMatrix rows) {
  if (rows.empty()) return rows;
  const std::size_t cols = rows[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    // Euclid on column c among rows r..end.
    while (true) {
      std::size_t best = rows.size();
      for (std::size_t i = r; i < rows.size(); ++i) {
        if (sgn(rows[i][c]) == 0) continue;
        if (best == rows.size() || abs(rows[i][c]) < abs(rows[best][c])) best = i;
      }
      if (best == rows.size()) break;
      std::swap(rows[r], rows[best]);
      bool done = true;
      for (std::size_t i = r + 1; i < rows.size(); ++i) {
        if (sgn(rows[i][c]) == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), rows[i][c].get_mpz_t(), rows[r][c].get_mpz_t());
        sub_multiple(rows[i], rows[r], q);
        if (sgn(rows[i][c]) != 0) done = false;
      }
      if (done) break;
    }
    if (sgn(rows[r][c]) == 0) continue;
    if (sgn(rows[r][c]) < 0) {
      for (auto& x : rows[r]) x = -x;
    }
    for (std::size_t i = 0; i < r; ++i) {
      mpz_class q;
      mpz_fdiv_q(q.get_mpz_t(), rows[i][c].get_mpz_t(), rows[r][c].get_mpz_t());
      sub_multiple(rows[i], rows[r], q);
    }
    ++r;
  }
  rows.resize(r);
  return rows;
}

bool lattice_contains(const IntMatrix& hnf, IntVector v) {
  for (const auto& row : hnf) {
    std::size_t c = 0;
    while (sgn(row[c]) == 0) ++c;
    for (std::size_t k = 0; k < c; ++k) {
      if (sgn(v[k]) != 0) return false;
    }
    if (!mpz_divisible_p(v[c].get_mpz_t(), row[c].get_mpz_t())) return false;
    mpz_class q;
    mpz_divexact(q.get_mpz_t(), v[c].get_mpz_t(), row[c].get_mpz_t());
    sub_multiple(v, row, q);
  }
  return is_zero(v);
}

std::vector<mpz_class> smith_invariants(IntMatrix m) {
  std::vector<mpz_class> out;
  if (m.empty()) return out;
  const std::size_t rows = m.size();
  const std::size_t cols = m[0].size();
  for (std::size_t t = 0; t < rows && t < cols; ++t) {
    while (true) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      std::size_t pr = rows;
      std::size_t pc = cols;
      for (std::size_t i = t; i < rows; ++i) {
        for (std::size_t j = t; j < cols; ++j) {
          if (sgn(m[i][j]) == 0) continue;
          if (pr == rows || abs(m[i][j]) < abs(m[pr][pc])) {
            pr = i;
            pc = j;
          }
        }
      }
      if (pr == rows) return out;
      std::swap(m[t], m[pr]);
      for (auto& row : m) std::swap(row[t], row[pc]);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (sgn(m[i][t]) == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), m[i][t].get_mpz_t(), m[t][t].get_mpz_t());
        sub_multiple(m[i], m[t], q);
        if (sgn(m[i][t]) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (sgn(m[t][j]) == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), m[t][j].get_mpz_t(), m[t][t].get_mpz_t());
        for (std::size_t i = t; i < rows; ++i) mpz_submul(m[i][j].get_mpz_t(), q.get_mpz_t(), m[i][t].get_mpz_t());
        if (sgn(m[t][j]) != 0) clean = false;
      }
      if (!clean) continue;
      // Divisibility of the remaining block by the pivot.
      std::size_t bad = rows;
      for (std::size_t i = t + 1; i < rows && bad == rows; ++i) {
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (!mpz_divisible_p(m[i][j].get_mpz_t(), m[t][t].get_mpz_t())) {
            bad = i;
            break;
          }
        }
      }
      if (bad == rows) break;
      for (std::size_t j = t; j < cols; ++j) m[t][j] += m[bad][j];
    }
    out.push_back(abs(m[t][t]));
  }
  return out;
}

mpz_class bareiss_determinant(IntMatrix m) {
  const std::size_t n = m.size();
  for (const auto& row : m) {
    if (row.size() != n) throw std::invalid_argument("determinant of a non-square matrix");
  }
  if (n == 0) return 1;
  int sign = 1;
  mpz_class prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(m[k][k]) == 0) {
      std::size_t p = k + 1;
      while (p < n && sgn(m[p][k]) == 0) ++p;
      if (p == n) return 0;
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_class v = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

}  // namespace circunit
