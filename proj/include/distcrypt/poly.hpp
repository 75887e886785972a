#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "distcrypt/matrix.hpp"

namespace distcrypt {

/// Dense polynomial in Z[x]; coefficient k multiplies x^k. Trailing zeros
/// are trimmed, so the zero polynomial has no coefficients.
class Poly {
 public:
  Poly() = default;
  Poly(long c);  // NOLINT(google-explicit-constructor)
  Poly(const Integer& c);  // NOLINT(google-explicit-constructor)
  explicit Poly(std::vector<Integer> coeffs);

  static Poly x() { return monomial(1, 1); }
  static Poly monomial(const Integer& c, std::size_t degree);

  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  bool is_constant() const noexcept { return c_.size() <= 1; }
  const std::vector<Integer>& coeffs() const noexcept { return c_; }
  Integer coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Integer(0); }

  Integer eval(const Integer& at) const;
  /// Reduction mod x^(k+1).
  Poly truncated(std::size_t k) const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly operator-() const;
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  void trim();
  std::vector<Integer> c_;
};

/// "deg c0 c1 ... c_deg"; the zero polynomial is written "0 0".
std::string encode_poly(const Poly& p);
/// Reads one encoded polynomial from a whitespace-separated token stream.
Poly read_poly(std::istream& in);

}  // namespace distcrypt
