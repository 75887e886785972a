#pragma once

// U-elements of SL_n(Z[x]): evaluation maps, virtually-unipotent
// certification, binomial powers of unipotents, short commutator words and
// the nilpotent congruence kernels of SL_n(Z[x] / x^(k+1)).

#include <cstddef>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "distcrypt/matrix.hpp"
#include "distcrypt/polymat.hpp"
#include "distcrypt/rng.hpp"

namespace distcrypt {

/// Entrywise substitution x = k.
Matrix eval_hom(const PolyMat& u, const Integer& k);

/// (u - Id)^n == 0 over Z[x].
bool is_unipotent_poly(const PolyMat& u);

/// (u^r(n) - Id)^n == 0 over Z[x]. Evaluations at a few small integers are
/// tried first: if one of them is not virtually unipotent, neither is u.
bool is_virtually_unipotent_poly(const PolyMat& u);

/// u^q = sum_{k<n} binom(q, k) (u - Id)^k for unipotent u and any integer q.
/// Throws InputInvalid when u is not unipotent.
PolyMat unipotent_power(const PolyMat& u, const Integer& q);

/// a b a^-1 b^-1
PolyMat commutator(const PolyMat& a, const PolyMat& b);
TruncatedPolyMat commutator(const TruncatedPolyMat& a,
                            const TruncatedPolyMat& b);

/// Checks E_ij(ab) == [E_ik(a), E_kj(b)] in SL_n(Z[x]). Indices are 1-based
/// and must be pairwise distinct.
bool commutator_identity(const Poly& a, const Poly& b, std::size_t n,
                         std::size_t i, std::size_t j, std::size_t k);

/// E_ij(sign) or E_ij(sign * x).
struct PolyToken {
  int row = 1;
  int col = 2;
  int sign = 1;
  bool x = false;

  PolyToken inverse() const { return {row, col, -sign, x}; }
  friend bool operator==(const PolyToken&, const PolyToken&) = default;
};

struct PolyWord {
  std::vector<PolyToken> tokens;

  std::size_t length() const noexcept { return tokens.size(); }
  PolyWord inverse() const;
  PolyWord& append(const PolyWord& o);
};

PolyMat evaluate(const PolyWord& w, std::size_t n);
std::string serialize_word(const PolyWord& w);

/// Word over {E_ij(1), E_ij(x)}^{+-1} for E_ij(N t) = E_ij(t)^N. Each term
/// a_l x^l of t becomes [E_ik(N a_l), E_kj(x^l)], the first factor being a
/// compressed word inside SL_3(Z) on the indices i, j, k and the second a
/// nested commutator of x-generators. Requires n >= 3.
PolyWord short_power_word(std::size_t n, std::size_t i, std::size_t j,
                          const Poly& t, const Integer& N);

/// For t = +-1 or +-x: length <= short_power_slope() * log2(1 + N)
///                                + short_power_offset().
inline constexpr double short_power_slope() { return 16.0; }
inline constexpr double short_power_offset() { return 64.0; }

/// Reduction of u modulo x^(k+1) (k >= 1) or modulo x - c. Degree-one
/// moduli x - c select the integer target, so "x" means x - 0.
std::variant<TruncatedPolyMat, Matrix> quotient_push(const PolyMat& u,
                                                     const Poly& modulus);

/// Random element of the kernel N_{n,k} of SL_n(Z[x]/x^(k+1)) -> SL_n(Z):
/// a product of elementary matrices E_ij(x p(x)) with small random p.
TruncatedPolyMat random_kernel_element(Rng& rng, std::size_t n, std::size_t k);

/// Left-normed commutator [[..[a1, a2], a3], .., ad]; depth 1 is a1 itself.
TruncatedPolyMat iterated_commutator(const std::vector<TruncatedPolyMat>& a);

struct KernelSurvey {
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t samples = 0;
  /// nontrivial[d-1]: number of samples whose depth-d commutator != Id,
  /// for d = 1 .. k+1.
  std::vector<std::size_t> nontrivial;
  /// Largest d with a nontrivial depth-d commutator (0 if none).
  std::size_t depth = 0;
};

KernelSurvey kernel_survey(std::size_t n, std::size_t k, std::uint64_t seed,
                           std::size_t samples);

/// kernel_survey(...).depth
std::size_t kernel_commutator_depth(std::size_t n, std::size_t k,
                                    std::uint64_t seed, std::size_t samples);

}  // namespace distcrypt
