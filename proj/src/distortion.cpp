#include "distcrypt/distortion.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "distcrypt/error.hpp"

namespace distcrypt {

namespace {

// a*phi + b in Z[phi], phi = (1 + sqrt5) / 2.
struct Golden {
  Integer a;
  Integer b;
};

Golden operator-(const Golden& x, const Golden& y) {
  return {x.a - y.a, x.b - y.b};
}
Golden scale(const Golden& x, int s) { return {s * x.a, s * x.b}; }

// phi^k = F_k phi + F_{k-1}, for every integer k.
Golden phi_power(int k) {
  Integer f, fm1;
  if (k >= 0) {
    mpz_fib2_ui(f.get_mpz_t(), fm1.get_mpz_t(), static_cast<unsigned long>(k));
    return {f, fm1};
  }
  // F_{-m} = (-1)^{m+1} F_m
  const auto m = static_cast<unsigned long>(-k);
  Integer fm, fm_minus;
  mpz_fib2_ui(fm.get_mpz_t(), fm_minus.get_mpz_t(), m);
  const Integer fm_plus = fm + fm_minus;
  const int s = (m % 2 == 0) ? -1 : 1;
  return {s * fm, -s * fm_plus};
}

// sign of p + q sqrt5
int sign_sqrt5(const Integer& p, const Integer& q) {
  const int sp = sgn(p), sq = sgn(q);
  if (sp >= 0 && sq >= 0) return (sp || sq) ? 1 : 0;
  if (sp <= 0 && sq <= 0) return -1;
  const Integer lhs = p * p, rhs = 5 * q * q;
  const int c = cmp(lhs, rhs);
  return sp > 0 ? c : -c;
}

// Signs of the two real embeddings: phi -> phi and phi -> 1 - phi.
int sign1(const Golden& z) { return sign_sqrt5(z.a + 2 * z.b, z.a); }
int sign2(const Golden& z) { return sign_sqrt5(z.a + 2 * z.b, -z.a); }

// |sigma1(z)| >= phi^k
bool above1(const Golden& z, int k) {
  const int s = sign1(z);
  if (s == 0) return false;
  return sign1(scale(z, s) - phi_power(k)) >= 0;
}

// |sigma2(z)| >= phi^k; sigma2((-1)^k phi^-k) = phi^k.
bool above2(const Golden& z, int k) {
  const int s = sign2(z);
  if (s == 0) return false;
  return sign2(scale(z, s) - scale(phi_power(-k), (k % 2) ? -1 : 1)) >= 0;
}

}  // namespace

Matrix conjugating_block() { return Matrix{{2, 1}, {1, 1}}; }

IntVector basis_vector(Basis b) {
  return b == Basis::W1 ? IntVector{0, 1} : IntVector{1, 0};
}

ExpansionDigits expand_vector(const Integer& x, const Integer& y) {
  // (x, y) <-> x*phi + y; A^k w1 <-> phi^k.
  Golden z{x, y};
  std::map<std::pair<int, Basis>, Integer> acc;
  auto emit = [&](int a_exp, const Integer& c) {
    // A^k w1 = B^{k/2} w1 for even k and B^{(k-1)/2} w2 for odd k.
    const int j = (a_exp >= 0) ? a_exp / 2 : -((-a_exp + 1) / 2);
    const Basis basis = (a_exp - 2 * j == 0) ? Basis::W1 : Basis::W2;
    acc[{j, basis}] += c;
  };

  // Greedy on the expanding embedding: each step leaves a remainder below
  // phi^(k-1), so exponents strictly decrease.
  if (above1(z, 0)) {
    int k = 0;
    while (above1(z, k + 1)) ++k;
    while (above1(z, 0)) {
      while (!above1(z, k)) --k;
      const int s = sign1(z);
      z = z - scale(phi_power(k), s);
      emit(k, s);
    }
  }
  // Greedy on the contracting embedding with phi^-k, k >= 1.
  if (above2(z, 1)) {
    int k = 1;
    while (above2(z, k + 1)) ++k;
    while (above2(z, 1)) {
      while (!above2(z, k)) --k;
      const int d = sign2(z) * ((k % 2) ? -1 : 1);
      z = z - scale(phi_power(-k), d);
      emit(-k, d);
    }
  }
  // Residual x*phi + y is the vector (x, y) = x*w2 + y*w1 at B^0.
  if (sgn(z.a) != 0) acc[{0, Basis::W2}] += z.a;
  if (sgn(z.b) != 0) acc[{0, Basis::W1}] += z.b;

  ExpansionDigits out;
  for (const auto& [key, c] : acc) {
    if (sgn(c) == 0) continue;
    out.digits.push_back({key.first, key.second, c});
    out.top_exponent = std::max(out.top_exponent, std::abs(key.first));
  }
  return out;
}

IntVector reconstruct(const ExpansionDigits& e) {
  const Matrix b = conjugating_block();
  IntVector sum{0, 0};
  for (const auto& d : e.digits) {
    const IntVector w = matvec(power(b, static_cast<long>(d.exponent)),
                               basis_vector(d.basis));
    sum[0] += d.coeff * w[0];
    sum[1] += d.coeff * w[1];
  }
  return sum;
}

namespace {

// M(B,0) on the coordinate pair (1, 2), factored once by row reduction.
const Word& block_word() {
  static const Word w = elementary_factorization(conjugating_block());
  return w;
}

Word relabel(const Word& w, int p, int q) {
  Word out;
  for (const auto& t : w.tokens)
    out.push({t.row == 1 ? p : q, t.col == 1 ? p : q, t.sign});
  return out;
}

}  // namespace

Word compress_pair(const Integer& a, const Integer& b, int p, int q, int r) {
  if (p == q || p == r || q == r)
    throw InputInvalid("compress_pair needs three distinct indices");
  const ExpansionDigits e = expand_vector(a, b);
  const Word up = relabel(block_word(), p, q);
  const Word down = up.inverse();
  auto walk = [&](Word& w, int steps) {
    for (int s = 0; s < std::abs(steps); ++s) w.append(steps > 0 ? up : down);
  };

  Word w;
  int at = 0;
  for (const auto& d : e.digits) {
    walk(w, d.exponent - at);
    at = d.exponent;
    if (d.basis == Basis::W2)
      w.push_repeated(p, r, d.coeff);
    else
      w.push_repeated(q, r, d.coeff);
  }
  walk(w, -at);
  if (abs(a) + abs(b) >= w.length()) return w;
  Word direct;
  direct.push_repeated(p, r, a).push_repeated(q, r, b);
  return direct;
}

Word compress_translation(const IntVector& v) {
  const std::size_t n = v.size() + 1;
  if (n < 3) throw InputInvalid("compression needs n >= 3");
  if (n == 3) return compress_pair(v[0], v[1], 1, 2, 3);
  Word w;
  const int last = static_cast<int>(n);
  for (int i = 1; i < last; ++i) {
    if (sgn(v[i - 1]) == 0) continue;
    const int partner = i % (last - 1) + 1;
    w.append(compress_pair(v[i - 1], 0, i, partner, last));
  }
  return w;
}

double compression_slope(std::size_t n) {
  return n <= 3 ? 8.0 : 8.0 * static_cast<double>(n - 1);
}

double compression_offset(std::size_t n) {
  return n <= 3 ? 30.0 : 30.0 * static_cast<double>(n - 1);
}

double log2_1p(const Integer& x) {
  const Integer y = x + 1;
  long exp = 0;
  const double mant = mpz_get_d_2exp(&exp, y.get_mpz_t());
  return std::log2(mant) + static_cast<double>(exp);
}

double compression_bound(std::size_t n, const Integer& linf) {
  return compression_slope(n) * log2_1p(linf) + compression_offset(n);
}

bool conjugation_identity_check(const Matrix& a, const IntVector& v) {
  const Integer det = determinant(a);
  const std::size_t m = a.dim();
  const Matrix id = Matrix::identity(m);
  if (det == 1) {
    const Matrix g = make_block(a, IntVector(m));
    const Matrix lhs = g * make_block(id, v) * inverse(g);
    return lhs == make_block(id, matvec(a, v));
  }
  if (det == -1) {
    const Matrix g = make_diagonal_block(a, -1);
    const Matrix lhs = g * make_block(id, v) * inverse(g);
    IntVector av = matvec(a, v);
    for (auto& x : av) x = -x;
    return lhs == make_block(id, av);
  }
  throw InputInvalid("conjugation check needs a unimodular block");
}

}  // namespace distcrypt
