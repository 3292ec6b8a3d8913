#pragma once

#include <vector>

namespace valmat {

/// Dense univariate polynomial over the integers; coefficients ascending,
/// normalized so the leading coefficient is nonzero. Empty means zero.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<long long> coeffs);
  static IntPoly constant(long long c);

  bool is_zero() const { return coeffs_.empty(); }
  /// Degree; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  long long coeff(int i) const;
  const std::vector<long long>& coeffs() const { return coeffs_; }

  friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  IntPoly operator-() const;
  bool operator==(const IntPoly& other) const { return coeffs_ == other.coeffs_; }

  /// Exact quotient; throws theorem_violation when the division leaves a
  /// remainder (callers only divide where exactness is guaranteed).
  static IntPoly divide_exact(const IntPoly& num, const IntPoly& den);

 private:
  std::vector<long long> coeffs_;
};

using PolySquareMatrix = std::vector<std::vector<IntPoly>>;

/// Cofactor (Laplace) expansion; exponential, fine for small matrices.
IntPoly det_cofactor(const PolySquareMatrix& m);

/// Fraction-free Bareiss elimination over the polynomial ring; every interior
/// division is exact.
IntPoly det_bareiss(const PolySquareMatrix& m);

}  // namespace valmat
