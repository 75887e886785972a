#include "distcrypt/matrix.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <sstream>

#include "distcrypt/error.hpp"

namespace distcrypt {

Matrix::Matrix(std::size_t n) : n_(n), a_(n * n) {}

Matrix::Matrix(std::size_t n, std::vector<Integer> entries)
    : n_(n), a_(std::move(entries)) {
  if (a_.size() != n * n)
    throw InputInvalid("matrix needs " + std::to_string(n * n) +
                       " entries, got " + std::to_string(a_.size()));
}

Matrix::Matrix(std::initializer_list<std::initializer_list<long>> rows)
    : n_(rows.size()) {
  a_.reserve(n_ * n_);
  for (const auto& row : rows) {
    if (row.size() != n_) throw InputInvalid("matrix literal is not square");
    for (long x : row) a_.emplace_back(x);
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix id(n);
  for (std::size_t i = 0; i < n; ++i) id(i, i) = 1;
  return id;
}

Matrix Matrix::elementary(std::size_t n, std::size_t i, std::size_t j,
                          const Integer& t) {
  if (i == j || i < 1 || j < 1 || i > n || j > n)
    throw InputInvalid("elementary matrix index out of range");
  Matrix e = identity(n);
  e(i - 1, j - 1) = t;
  return e;
}

bool Matrix::is_zero() const {
  return std::all_of(a_.begin(), a_.end(),
                     [](const Integer& x) { return sgn(x) == 0; });
}

bool Matrix::is_identity() const {
  for (std::size_t r = 0; r < n_; ++r)
    for (std::size_t c = 0; c < n_; ++c)
      if ((*this)(r, c) != (r == c ? 1 : 0)) return false;
  return true;
}

std::size_t Matrix::max_entry_bits() const {
  std::size_t bits = 0;
  for (const auto& x : a_)
    if (sgn(x) != 0) bits = std::max(bits, mpz_sizeinbase(x.get_mpz_t(), 2));
  return bits;
}

Matrix& Matrix::operator+=(const Matrix& other) {
  if (n_ != other.n_) throw InputInvalid("dimension mismatch");
  for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += other.a_[k];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& other) {
  if (n_ != other.n_) throw InputInvalid("dimension mismatch");
  for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= other.a_[k];
  return *this;
}

Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }

Matrix operator*(const Matrix& a, const Matrix& b) {
  const std::size_t n = a.dim();
  if (n != b.dim()) throw InputInvalid("dimension mismatch");
  Matrix out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const Integer& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < n; ++j)
        mpz_addmul(out(i, j).get_mpz_t(), aik.get_mpz_t(),
                   b(k, j).get_mpz_t());
    }
  return out;
}

Matrix multiply(const Matrix& g, const Matrix& h) { return g * h; }

Integer determinant(const Matrix& g) {
  const std::size_t n = g.dim();
  if (n == 0) return 1;
  Matrix m = g;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(m(k, k)) == 0) {
      std::size_t r = k + 1;
      while (r < n && sgn(m(r, k)) == 0) ++r;
      if (r == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(m(k, c), m(r, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(m(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

Matrix inverse(const Matrix& g) {
  const std::size_t n = g.dim();
  const Integer det = determinant(g);
  if (det != 1 && det != -1)
    throw InputInvalid("matrix is not unimodular (det = " + det.get_str() +
                       ")");
  // Gauss-Jordan over Q; the result is integral because det = +-1.
  std::vector<mpq_class> m(n * 2 * n);
  const std::size_t w = 2 * n;
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) m[r * w + c] = g(r, c);
    m[r * w + n + r] = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (sgn(m[p * w + c]) == 0) ++p;
    if (p != c)
      for (std::size_t k = 0; k < w; ++k) std::swap(m[p * w + k], m[c * w + k]);
    const mpq_class pivot = m[c * w + c];
    for (std::size_t k = 0; k < w; ++k) m[c * w + k] /= pivot;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || sgn(m[r * w + c]) == 0) continue;
      const mpq_class f = m[r * w + c];
      for (std::size_t k = 0; k < w; ++k) m[r * w + k] -= f * m[c * w + k];
    }
  }
  Matrix out(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      const mpq_class& q = m[r * w + n + c];
      out(r, c) = q.get_num();  // denominator is 1
    }
  return out;
}

Matrix power(const Matrix& g, const Integer& e) {
  Matrix base = sgn(e) < 0 ? inverse(g) : g;
  Integer k = abs(e);
  Matrix acc = Matrix::identity(g.dim());
  while (sgn(k) > 0) {
    if (mpz_odd_p(k.get_mpz_t())) acc = acc * base;
    k >>= 1;
    if (sgn(k) > 0) base = base * base;
  }
  return acc;
}

Matrix power(const Matrix& g, long e) { return power(g, Integer(e)); }

Matrix make_block(const Matrix& a, const IntVector& v) {
  const std::size_t m = a.dim();
  if (v.size() != m)
    throw InputInvalid("block shape mismatch: matrix " + std::to_string(m) +
                       ", vector " + std::to_string(v.size()));
  Matrix out(m + 1);
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t c = 0; c < m; ++c) out(r, c) = a(r, c);
    out(r, m) = v[r];
  }
  out(m, m) = 1;
  return out;
}

Matrix make_diagonal_block(const Matrix& a, const Integer& corner) {
  const std::size_t m = a.dim();
  Matrix out(m + 1);
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t c = 0; c < m; ++c) out(r, c) = a(r, c);
  out(m, m) = corner;
  return out;
}

bool is_unipotent(const Matrix& g) {
  const std::size_t n = g.dim();
  return power(g - Matrix::identity(n), static_cast<long>(n)).is_zero();
}

unsigned long euler_phi(unsigned long k) {
  unsigned long result = k;
  for (unsigned long p = 2; p * p <= k; ++p) {
    if (k % p != 0) continue;
    while (k % p == 0) k /= p;
    result -= result / p;
  }
  if (k > 1) result -= result / k;
  return result;
}

Integer unity_root_exponent(std::size_t n) {
  if (n < 1) throw InputInvalid("unity_root_exponent needs n >= 1");
  // phi(k) >= sqrt(k/2) for all k, so phi(k) > n once k > 2n^2; 4n^2 is a
  // comfortable enumeration bound.
  const unsigned long bound = 4ul * n * n;
  Integer r = 1;
  for (unsigned long k = 1; k <= bound; ++k)
    if (euler_phi(k) <= n) mpz_lcm_ui(r.get_mpz_t(), r.get_mpz_t(), k);
  return r;
}

bool is_virtually_unipotent(const Matrix& g) {
  const std::size_t n = g.dim();
  const Matrix gr = power(g, unity_root_exponent(n));
  return power(gr - Matrix::identity(n), static_cast<long>(n)).is_zero();
}

std::optional<IntVector> h_pattern(const Matrix& g) {
  const std::size_t n = g.dim();
  if (n == 0) return std::nullopt;
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c + 1 < n; ++c)
      if (g(r, c) != (r == c ? 1 : 0)) return std::nullopt;
  if (g(n - 1, n - 1) != 1) return std::nullopt;
  IntVector v(n - 1);
  for (std::size_t r = 0; r + 1 < n; ++r) v[r] = g(r, n - 1);
  return v;
}

IntVector matvec(const Matrix& a, const IntVector& v) {
  if (a.dim() != v.size()) throw InputInvalid("dimension mismatch");
  IntVector out(v.size());
  for (std::size_t r = 0; r < v.size(); ++r)
    for (std::size_t c = 0; c < v.size(); ++c) out[r] += a(r, c) * v[c];
  return out;
}

std::string encode(const Matrix& g) {
  std::string out = std::to_string(g.dim());
  out += '\n';
  for (std::size_t r = 0; r < g.dim(); ++r) {
    for (std::size_t c = 0; c < g.dim(); ++c) {
      if (c) out += ' ';
      out += g(r, c).get_str();
    }
    out += '\n';
  }
  return out;
}

Integer parse_integer(std::string_view text) {
  std::string s(text);
  if (!s.empty() && s[0] == '+') s.erase(0, 1);
  if (s.empty() || (s[0] == '-' && s.size() == 1))
    throw InputInvalid("empty integer");
  for (std::size_t i = (s[0] == '-') ? 1 : 0; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9')
      throw InputInvalid("not a decimal integer: '" + std::string(text) + "'");
  return Integer(s, 10);
}

namespace {

std::vector<std::string> split_ws(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream in{std::string(line)};
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

}  // namespace

Matrix read_matrix(std::istream& in) {
  std::string line;
  bool found = false;
  while (std::getline(in, line))
    if (line.find_first_not_of(" \t\r") != std::string::npos) {
      found = true;
      break;
    }
  if (!found) throw InputInvalid("missing matrix header");
  const auto header = split_ws(line);
  if (header.size() != 1) throw InputInvalid("bad matrix header: " + line);
  const Integer nn = parse_integer(header[0]);
  if (sgn(nn) <= 0 || nn > 1000) throw InputInvalid("bad matrix dimension");
  const auto n = static_cast<std::size_t>(nn.get_ui());
  std::vector<Integer> entries;
  entries.reserve(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    if (!std::getline(in, line)) throw InputInvalid("truncated matrix");
    const auto toks = split_ws(line);
    if (toks.size() != n)
      throw InputInvalid("matrix row " + std::to_string(r + 1) + " has " +
                         std::to_string(toks.size()) + " entries");
    for (const auto& t : toks) entries.push_back(parse_integer(t));
  }
  return Matrix(n, std::move(entries));
}

Matrix decode(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_matrix(in);
}

IntVector parse_vector(std::string_view text) {
  IntVector v;
  std::string cur;
  for (char ch : text) {
    if (ch == ',' || ch == ' ') {
      if (!cur.empty()) v.push_back(parse_integer(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (!cur.empty()) v.push_back(parse_integer(cur));
  return v;
}

std::string format_vector(const IntVector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += v[i].get_str();
  }
  return out + ")";
}

Integer l1_norm(const IntVector& v) {
  Integer s = 0;
  for (const auto& x : v) s += abs(x);
  return s;
}

Integer linf_norm(const IntVector& v) {
  Integer m = 0;
  for (const auto& x : v)
    if (abs(x) > m) m = abs(x);
  return m;
}

std::size_t MatrixHash::operator()(const Matrix& g) const noexcept {
  std::size_t h = g.dim();
  for (const auto& x : g.entries()) {
    const mpz_srcptr z = x.get_mpz_t();
    std::size_t v = static_cast<std::size_t>(z->_mp_size);
    if (z->_mp_size != 0) v ^= static_cast<std::size_t>(mpz_getlimbn(z, 0)) * 0x9e3779b97f4a7c15ull;
    h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace distcrypt
