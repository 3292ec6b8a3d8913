#include "valmat/poly.hpp"

#include <algorithm>

#include "valmat/errors.hpp"

namespace valmat {

IntPoly::IntPoly(std::vector<long long> coeffs) : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPoly IntPoly::constant(long long c) { return IntPoly(std::vector<long long>{c}); }

long long IntPoly::coeff(int i) const {
  return (i >= 0 && i < static_cast<int>(coeffs_.size())) ? coeffs_[i] : 0;
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  std::vector<long long> out(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
  return IntPoly(std::move(out));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
  std::vector<long long> out(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coeff(static_cast<int>(i)) - b.coeff(static_cast<int>(i));
  return IntPoly(std::move(out));
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return IntPoly();
  std::vector<long long> out(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return IntPoly(std::move(out));
}

IntPoly IntPoly::operator-() const { return IntPoly() - *this; }

IntPoly IntPoly::divide_exact(const IntPoly& num, const IntPoly& den) {
  if (den.is_zero()) throw theorem_violation("polynomial division by zero");
  if (num.is_zero()) return IntPoly();
  std::vector<long long> rem = num.coeffs_;
  std::vector<long long> quot(num.coeffs_.size() - den.coeffs_.size() + 1, 0);
  long long lead = den.coeffs_.back();
  for (int i = static_cast<int>(quot.size()) - 1; i >= 0; --i) {
    long long top = rem[i + den.degree()];
    if (top % lead != 0) throw theorem_violation("inexact polynomial division");
    long long q = top / lead;
    quot[i] = q;
    for (int j = 0; j <= den.degree(); ++j) rem[i + j] -= q * den.coeffs_[j];
  }
  for (long long c : rem)
    if (c != 0) throw theorem_violation("inexact polynomial division");
  return IntPoly(std::move(quot));
}

IntPoly det_cofactor(const PolySquareMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return IntPoly::constant(1);
  if (n == 1) return m[0][0];
  IntPoly out;
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i][0].is_zero()) continue;
    PolySquareMatrix minor;
    minor.reserve(n - 1);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == i) continue;
      minor.emplace_back(m[r].begin() + 1, m[r].end());
    }
    IntPoly term = m[i][0] * det_cofactor(minor);
    out = (i % 2 == 0) ? out + term : out - term;
  }
  return out;
}

IntPoly det_bareiss(const PolySquareMatrix& m) {
  const int n = static_cast<int>(m.size());
  if (n == 0) return IntPoly::constant(1);
  PolySquareMatrix a = m;
  int sign = 1;
  IntPoly prev = IntPoly::constant(1);
  for (int k = 0; k + 1 < n; ++k) {
    if (a[k][k].is_zero()) {
      int swap_row = -1;
      for (int i = k + 1; i < n; ++i) {
        if (!a[i][k].is_zero()) {
          swap_row = i;
          break;
        }
      }
      if (swap_row < 0) return IntPoly();  // singular
      std::swap(a[k], a[swap_row]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        a[i][j] = IntPoly::divide_exact(a[k][k] * a[i][j] - a[i][k] * a[k][j], prev);
      }
      a[i][k] = IntPoly();
    }
    prev = a[k][k];
  }
  return sign > 0 ? a[n - 1][n - 1] : -a[n - 1][n - 1];
}

}  // namespace valmat
