#pragma once

// Exact square matrices over Z and the structural predicates used by the
// rest of the library. Nothing in here touches floating point.

#include <gmpxx.h>

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace distcrypt {

using Integer = mpz_class;
using IntVector = std::vector<Integer>;

/// Square n x n integer matrix, row-major. Models an element of SL_n(Z) or
/// GL_n(Z); membership is checked only where an operation claims it.
class Matrix {
 public:
  Matrix() = default;
  /// Zero matrix of size n.
  explicit Matrix(std::size_t n);
  /// Takes n*n entries in row-major order.
  Matrix(std::size_t n, std::vector<Integer> entries);
  Matrix(std::initializer_list<std::initializer_list<long>> rows);

  static Matrix identity(std::size_t n);
  /// E_ij(t): identity plus t at (i, j). Indices are 1-based, i != j.
  static Matrix elementary(std::size_t n, std::size_t i, std::size_t j,
                           const Integer& t);

  std::size_t dim() const noexcept { return n_; }

  Integer& operator()(std::size_t r, std::size_t c) { return a_[r * n_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const {
    return a_[r * n_ + c];
  }

  std::span<const Integer> entries() const noexcept { return a_; }

  bool is_zero() const;
  bool is_identity() const;
  /// Largest bit length over all entries.
  std::size_t max_entry_bits() const;

  Matrix& operator+=(const Matrix& other);
  Matrix& operator-=(const Matrix& other);

  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Integer> a_;
};

Matrix operator+(Matrix a, const Matrix& b);
Matrix operator-(Matrix a, const Matrix& b);
Matrix operator*(const Matrix& a, const Matrix& b);

/// Exact product; throws InputInvalid on dimension mismatch.
Matrix multiply(const Matrix& g, const Matrix& h);

/// Exact inverse of a matrix with determinant +-1; throws InputInvalid
/// otherwise.
Matrix inverse(const Matrix& g);

/// Fraction-free (Bareiss) determinant.
Integer determinant(const Matrix& g);

/// g^e by binary exponentiation; negative e goes through inverse(g).
Matrix power(const Matrix& g, const Integer& e);
Matrix power(const Matrix& g, long e);

/// M(a, v) = [[a, v], [0, 1]].
Matrix make_block(const Matrix& a, const IntVector& v);

/// Block-diagonal embedding [[a, 0], [0, corner]].
Matrix make_diagonal_block(const Matrix& a, const Integer& corner);

/// (g - Id)^n == 0.
bool is_unipotent(const Matrix& g);

/// r(n) = lcm{k >= 1 : phi(k) <= n}. Every root of unity that can be an
/// eigenvalue of an integer n x n matrix has order dividing r(n).
Integer unity_root_exponent(std::size_t n);

/// Euler's totient by trial division.
unsigned long euler_phi(unsigned long k);

/// (g^{r(n)} - Id)^n == 0.
bool is_virtually_unipotent(const Matrix& g);

/// Returns v when g == M(Id, v), i.e. g - Id vanishes outside the first
/// n-1 entries of the last column.
std::optional<IntVector> h_pattern(const Matrix& g);

IntVector matvec(const Matrix& a, const IntVector& v);

// Canonical text encoding: "n" on the first line, then n lines of n decimal
// integers separated by single spaces. No trailing whitespace; every line,
// including the last, ends in '\n'.
std::string encode(const Matrix& g);
Matrix decode(std::string_view text);
/// Reads one encoded matrix from a stream of lines; blank lines before the
/// header are skipped.
Matrix read_matrix(std::istream& in);

Integer parse_integer(std::string_view text);
IntVector parse_vector(std::string_view text);
std::string format_vector(const IntVector& v);

Integer l1_norm(const IntVector& v);
Integer linf_norm(const IntVector& v);

struct MatrixHash {
  std::size_t operator()(const Matrix& g) const noexcept;
};

}  // namespace distcrypt
