#include "distcrypt/uelem.hpp"

#include <algorithm>

#include "distcrypt/distortion.hpp"
#include "distcrypt/error.hpp"

namespace distcrypt {

Matrix eval_hom(const PolyMat& u, const Integer& k) { return evaluate_at(u, k); }

bool is_unipotent_poly(const PolyMat& u) {
  const std::size_t n = u.dim();
  return power(u - PolyMat::identity(n), n).is_zero();
}

bool is_virtually_unipotent_poly(const PolyMat& u) {
  for (long k : {0L, 1L, -1L, 2L})
    if (!is_virtually_unipotent(eval_hom(u, k))) return false;
  const std::size_t n = u.dim();
  const unsigned long r = unity_root_exponent(n).get_ui();
  return is_unipotent_poly(power(u, r));
}

PolyMat unipotent_power(const PolyMat& u, const Integer& q) {
  if (!is_unipotent_poly(u)) throw InputInvalid("matrix is not unipotent");
  const std::size_t n = u.dim();
  const PolyMat w = u - PolyMat::identity(n);
  PolyMat acc = PolyMat::identity(n);
  PolyMat wk = PolyMat::identity(n);
  for (unsigned long k = 1; k < n; ++k) {
    wk = wk * w;
    if (wk.is_zero()) break;
    Integer binom;
    mpz_bin_ui(binom.get_mpz_t(), q.get_mpz_t(), k);
    acc += binom * wk;
  }
  return acc;
}

PolyMat commutator(const PolyMat& a, const PolyMat& b) {
  return a * b * inverse(a) * inverse(b);
}

TruncatedPolyMat commutator(const TruncatedPolyMat& a,
                            const TruncatedPolyMat& b) {
  return a * b * inverse(a) * inverse(b);
}

bool commutator_identity(const Poly& a, const Poly& b, std::size_t n,
                         std::size_t i, std::size_t j, std::size_t k) {
  if (i == j || j == k || i == k)
    throw InputInvalid("commutator indices must be pairwise distinct");
  const PolyMat lhs = PolyMat::elementary(n, i, j, a * b);
  // Inverses of elementary matrices are written out so the check does not
  // lean on the general inverse.
  const PolyMat eik = PolyMat::elementary(n, i, k, a);
  const PolyMat ekj = PolyMat::elementary(n, k, j, b);
  const PolyMat rhs = eik * ekj * PolyMat::elementary(n, i, k, -a) *
                      PolyMat::elementary(n, k, j, -b);
  return lhs == rhs;
}

PolyWord PolyWord::inverse() const {
  PolyWord out;
  out.tokens.reserve(tokens.size());
  for (auto it = tokens.rbegin(); it != tokens.rend(); ++it)
    out.tokens.push_back(it->inverse());
  return out;
}

PolyWord& PolyWord::append(const PolyWord& o) {
  tokens.insert(tokens.end(), o.tokens.begin(), o.tokens.end());
  return *this;
}

PolyMat evaluate(const PolyWord& w, std::size_t n) {
  PolyMat acc = PolyMat::identity(n);
  for (const auto& t : w.tokens) {
    if (t.row < 1 || t.col < 1 || t.row == t.col ||
        static_cast<std::size_t>(t.row) > n || static_cast<std::size_t>(t.col) > n)
      throw InputInvalid("token index out of range");
    // Right multiplication by E_rc(s): column c += s * column r.
    const Poly s = t.x ? Poly::monomial(t.sign, 1) : Poly(t.sign);
    for (std::size_t r = 0; r < n; ++r) {
      const Poly& src = acc(r, t.row - 1);
      if (!src.is_zero()) acc(r, t.col - 1) += src * s;
    }
  }
  return acc;
}

std::string serialize_word(const PolyWord& w) {
  std::string out;
  for (const auto& t : w.tokens) {
    out += std::to_string(t.row) + ' ' + std::to_string(t.col) + ' ' +
           (t.sign > 0 ? "+1" : "-1");
    if (t.x) out += " x";
    out += '\n';
  }
  return out;
}

namespace {

PolyWord lift(const Word& w) {
  PolyWord out;
  for (const auto& t : w.tokens) out.tokens.push_back({t.row, t.col, t.sign, false});
  return out;
}

PolyWord commutator_word(const PolyWord& a, const PolyWord& b) {
  PolyWord out = a;
  out.append(b).append(a.inverse()).append(b.inverse());
  return out;
}

// E_kj(x^l), l >= 1, through E_kj(x^l) = [E_ki(x^(l-1)), E_ij(x)].
PolyWord x_power_word(int k, int j, int i, std::size_t l) {
  if (l == 1) return PolyWord{{PolyToken{k, j, 1, true}}};
  return commutator_word(x_power_word(k, i, j, l - 1),
                         PolyWord{{PolyToken{i, j, 1, true}}});
}

}  // namespace

PolyWord short_power_word(std::size_t n, std::size_t i, std::size_t j,
                          const Poly& t, const Integer& N) {
  if (n < 3) throw InputInvalid("short power words need n >= 3");
  if (i == j || i < 1 || j < 1 || i > n || j > n)
    throw InputInvalid("index out of range");
  if (N < 1) throw InputInvalid("exponent must be >= 1");
  std::size_t k = 1;
  while (k == i || k == j) ++k;
  const int ii = static_cast<int>(i), jj = static_cast<int>(j),
            kk = static_cast<int>(k);

  PolyWord out;
  for (std::size_t l = 0; l < t.coeffs().size(); ++l) {
    const Integer c = N * t.coeffs()[l];
    if (sgn(c) == 0) continue;
    if (l == 0) {
      // E_ij(c) as a translation of column j in the block (i, k, j).
      out.append(lift(compress_pair(c, 0, ii, kk, jj)));
    } else {
      const PolyWord eik = lift(compress_pair(c, 0, ii, jj, kk));
      out.append(commutator_word(eik, x_power_word(kk, jj, ii, l)));
    }
  }
  return out;
}

std::variant<TruncatedPolyMat, Matrix> quotient_push(const PolyMat& u,
                                                     const Poly& modulus) {
  const int d = modulus.degree();
  if (d < 1 || modulus.coeff(d) != 1)
    throw InputInvalid("modulus must be monic of degree >= 1");
  if (d == 1) return eval_hom(u, -modulus.coeff(0));
  for (int l = 0; l < d; ++l)
    if (sgn(modulus.coeff(l)) != 0)
      throw InputInvalid("unsupported modulus: expected x^(k+1) or x - c");
  return TruncatedPolyMat(u, static_cast<std::size_t>(d - 1));
}

TruncatedPolyMat random_kernel_element(Rng& rng, std::size_t n, std::size_t k) {
  PolyMat acc = PolyMat::identity(n);
  const std::size_t factors = 2 * n;
  for (std::size_t f = 0; f < factors; ++f) {
    const std::size_t i = rng.below(n) + 1;
    std::size_t j = rng.below(n - 1) + 1;
    if (j >= i) ++j;
    // x * p(x) with deg p < k and coefficients in [-3, 3]
    std::vector<Integer> c(k + 1);
    for (std::size_t l = 1; l <= k; ++l) c[l] = rng.range(-3, 3);
    acc = acc * PolyMat::elementary(n, i, j, Poly(std::move(c)));
  }
  return TruncatedPolyMat(acc, k);
}

TruncatedPolyMat iterated_commutator(const std::vector<TruncatedPolyMat>& a) {
  if (a.empty()) throw InputInvalid("empty commutator");
  TruncatedPolyMat acc = a.front();
  for (std::size_t m = 1; m < a.size(); ++m) acc = commutator(acc, a[m]);
  return acc;
}

KernelSurvey kernel_survey(std::size_t n, std::size_t k, std::uint64_t seed,
                           std::size_t samples) {
  if (n < 2 || k < 1) throw InputInvalid("kernel survey needs n >= 2, k >= 1");
  KernelSurvey s;
  s.n = n;
  s.k = k;
  s.samples = samples;
  s.nontrivial.assign(k + 1, 0);
  Rng rng(seed);
  for (std::size_t t = 0; t < samples; ++t) {
    TruncatedPolyMat acc = random_kernel_element(rng, n, k);
    for (std::size_t d = 1; d <= k + 1; ++d) {
      if (d > 1) acc = commutator(acc, random_kernel_element(rng, n, k));
      if (!acc.is_identity()) ++s.nontrivial[d - 1];
    }
  }
  for (std::size_t d = k + 1; d >= 1; --d)
    if (s.nontrivial[d - 1] > 0) {
      s.depth = d;
      break;
    }
  return s;
}

std::size_t kernel_commutator_depth(std::size_t n, std::size_t k,
                                    std::uint64_t seed, std::size_t samples) {
  return kernel_survey(n, k, seed, samples).depth;
}

}  // namespace distcrypt
