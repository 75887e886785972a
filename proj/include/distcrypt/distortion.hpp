#pragma once

// Logarithmic-length words for the unipotent translations M(Id, v) in
// SL_n(Z), n >= 3.
//
// The conjugating block is B = A^2 = [[2,1],[1,1]] with A = [[1,1],[1,0]];
// B has determinant 1, so M(B, 0) stays inside SL_n(Z). Conjugation gives
//
//   M(B,0)^j M(Id,u) M(B,0)^-j = M(Id, B^j u),
//
// so a vector written as sum_j B^j u_j with tiny u_j turns into a word whose
// length is linear in the number of B-powers used. The digits come from the
// two-sided golden-ratio expansion: identifying (x, y) with x*phi + y in
// Z[phi], A acts as multiplication by phi and A^k (0,1) = (F_k, F_{k-1}).
// Positive powers absorb the expanding eigen-direction, negative powers the
// contracting one, and a residual of norm <= 5 is written out directly.
//
// Published length bound (checked in the tests and by bench-distortion):
//
//   length(compress_translation(v)) <= compression_slope(n) * log2(1 + |v|_inf)
//                                      + compression_offset(n)
//
// with slope 8 and offset 30 for n = 3, and (n-1) times that for n > 3,
// where each coordinate is compressed separately.

#include <cstddef>
#include <vector>

#include "distcrypt/matrix.hpp"
#include "distcrypt/word.hpp"

namespace distcrypt {

/// w1 = (0,1), w2 = (1,0).
enum class Basis { W2, W1 };

struct ExpansionDigit {
  int exponent = 0;  ///< power of B, may be negative
  Basis basis = Basis::W1;
  Integer coeff;
};

/// target = sum over digits of coeff * B^exponent * basis, exactly.
struct ExpansionDigits {
  int top_exponent = 0;  ///< max |exponent| over digits (m)
  std::vector<ExpansionDigit> digits;  ///< sorted by (exponent, basis)
};

/// Bound on |coeff| of every digit produced by expand_vector.
inline constexpr int kDigitBound = 5;

Matrix conjugating_block();
IntVector basis_vector(Basis b);

ExpansionDigits expand_vector(const Integer& x, const Integer& y);
inline ExpansionDigits expand_vector(const IntVector& v) {
  return expand_vector(v.at(0), v.at(1));
}

/// Re-sums the digits with explicit powers of B.
IntVector reconstruct(const ExpansionDigits& e);

/// Word for E_pr(a) * E_qr(b), i.e. the translation a*e_p + b*e_q in column
/// r, using only the indices p, q, r (1-based, pairwise distinct). Returns
/// whichever of the compressed and the plain word is shorter.
Word compress_pair(const Integer& a, const Integer& b, int p, int q, int r);

/// Word over S evaluating to M(Id, v) in SL_n(Z), n = v.size() + 1 >= 3.
Word compress_translation(const IntVector& v);

double compression_slope(std::size_t n);
double compression_offset(std::size_t n);
/// compression_slope(n) * log2(1 + norm) + compression_offset(n).
double compression_bound(std::size_t n, const Integer& linf);

/// log2(1 + x) for x >= 0, computed without overflow for huge x.
double log2_1p(const Integer& x);

/// Checks M(a,0) M(Id,v) M(a,0)^-1 == M(Id, a v) exactly when det a = 1.
/// When det a = -1 the embedding diag(a, -1) is used instead and the right
/// side becomes M(Id, -a v). Throws InputInvalid for non-unimodular a.
bool conjugation_identity_check(const Matrix& a, const IntVector& v);

}  // namespace distcrypt
