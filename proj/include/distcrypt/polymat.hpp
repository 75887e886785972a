#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "distcrypt/matrix.hpp"
#include "distcrypt/poly.hpp"

namespace distcrypt {

/// Square matrix over Z[x], row-major.
class PolyMat {
 public:
  PolyMat() = default;
  explicit PolyMat(std::size_t n) : n_(n), a_(n * n) {}
  /// Constant embedding of an integer matrix.
  explicit PolyMat(const Matrix& m);

  static PolyMat identity(std::size_t n);
  /// E_ij(t), 1-based indices.
  static PolyMat elementary(std::size_t n, std::size_t i, std::size_t j,
                            const Poly& t);

  std::size_t dim() const noexcept { return n_; }
  Poly& operator()(std::size_t r, std::size_t c) { return a_[r * n_ + c]; }
  const Poly& operator()(std::size_t r, std::size_t c) const {
    return a_[r * n_ + c];
  }

  bool is_zero() const;
  bool is_identity() const;
  int max_degree() const;

  PolyMat& operator+=(const PolyMat& o);
  PolyMat& operator-=(const PolyMat& o);
  friend PolyMat operator+(PolyMat a, const PolyMat& b) { return a += b; }
  friend PolyMat operator-(PolyMat a, const PolyMat& b) { return a -= b; }
  friend PolyMat operator*(const PolyMat& a, const PolyMat& b);
  friend PolyMat operator*(const Integer& s, const PolyMat& a);
  friend bool operator==(const PolyMat&, const PolyMat&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Poly> a_;
};

/// u^e for e >= 0 by binary exponentiation.
PolyMat power(const PolyMat& u, unsigned long e);
/// Exact determinant by cofactor expansion (intended for n <= 8).
Poly determinant(const PolyMat& u);
/// Adjugate-based inverse; requires det u = +-1.
PolyMat inverse(const PolyMat& u);
/// Entrywise x -> k.
Matrix evaluate_at(const PolyMat& u, const Integer& k);

/// Element of GL_n(Z[x] / x^(k+1)); entries are kept reduced.
class TruncatedPolyMat {
 public:
  TruncatedPolyMat() = default;
  TruncatedPolyMat(const PolyMat& u, std::size_t k);

  static TruncatedPolyMat identity(std::size_t n, std::size_t k);

  std::size_t dim() const noexcept { return m_.dim(); }
  std::size_t order() const noexcept { return k_; }
  const PolyMat& lift() const noexcept { return m_; }
  bool is_identity() const { return m_.is_identity(); }

  friend TruncatedPolyMat operator*(const TruncatedPolyMat& a,
                                    const TruncatedPolyMat& b);
  friend bool operator==(const TruncatedPolyMat&,
                         const TruncatedPolyMat&) = default;

 private:
  PolyMat m_;
  std::size_t k_ = 0;
};

/// Inverse mod x^(k+1): with A = A0 + N (A0 the constant part),
/// A^-1 = sum_m (-A0^-1 N)^m A0^-1, a finite sum since N is divisible by x.
TruncatedPolyMat inverse(const TruncatedPolyMat& a);

// File format: "n", then n lines of n encoded polynomials.
std::string encode(const PolyMat& u);
PolyMat decode_polymat(std::string_view text);

}  // namespace distcrypt
