#include "distcrypt/polymat.hpp"

#include <algorithm>
#include <sstream>

#include "distcrypt/error.hpp"

namespace distcrypt {

PolyMat::PolyMat(const Matrix& m) : n_(m.dim()), a_(n_ * n_) {
  for (std::size_t r = 0; r < n_; ++r)
    for (std::size_t c = 0; c < n_; ++c) (*this)(r, c) = Poly(m(r, c));
}

PolyMat PolyMat::identity(std::size_t n) {
  PolyMat id(n);
  for (std::size_t i = 0; i < n; ++i) id(i, i) = Poly(1);
  return id;
}

PolyMat PolyMat::elementary(std::size_t n, std::size_t i, std::size_t j,
                            const Poly& t) {
  if (i == j || i < 1 || j < 1 || i > n || j > n)
    throw InputInvalid("elementary matrix index out of range");
  PolyMat e = identity(n);
  e(i - 1, j - 1) = t;
  return e;
}

bool PolyMat::is_zero() const {
  return std::all_of(a_.begin(), a_.end(),
                     [](const Poly& p) { return p.is_zero(); });
}

bool PolyMat::is_identity() const {
  for (std::size_t r = 0; r < n_; ++r)
    for (std::size_t c = 0; c < n_; ++c)
      if ((*this)(r, c) != Poly(r == c ? 1 : 0)) return false;
  return true;
}

int PolyMat::max_degree() const {
  int d = -1;
  for (const auto& p : a_) d = std::max(d, p.degree());
  return d;
}

PolyMat& PolyMat::operator+=(const PolyMat& o) {
  if (n_ != o.n_) throw InputInvalid("dimension mismatch");
  for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
  return *this;
}

PolyMat& PolyMat::operator-=(const PolyMat& o) {
  if (n_ != o.n_) throw InputInvalid("dimension mismatch");
  for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
  return *this;
}

PolyMat operator*(const PolyMat& a, const PolyMat& b) {
  const std::size_t n = a.n_;
  if (n != b.n_) throw InputInvalid("dimension mismatch");
  PolyMat out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const Poly& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (!b(k, j).is_zero()) out(i, j) += aik * b(k, j);
    }
  return out;
}

PolyMat operator*(const Integer& s, const PolyMat& a) {
  PolyMat out = a;
  for (auto& p : out.a_) p = Poly(s) * p;
  return out;
}

PolyMat power(const PolyMat& u, unsigned long e) {
  PolyMat acc = PolyMat::identity(u.dim());
  PolyMat base = u;
  while (e > 0) {
    if (e & 1u) acc = acc * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return acc;
}

namespace {

Poly cofactor_det(const PolyMat& u, std::vector<std::size_t>& rows,
                  std::vector<std::size_t>& cols) {
  const std::size_t m = rows.size();
  if (m == 0) return Poly(1);
  if (m == 1) return u(rows[0], cols[0]);
  Poly acc;
  const std::size_t r = rows.front();
  rows.erase(rows.begin());
  for (std::size_t idx = 0; idx < m; ++idx) {
    const std::size_t c = cols[idx];
    if (u(r, c).is_zero()) continue;
    cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(idx));
    const Poly term = u(r, c) * cofactor_det(u, rows, cols);
    cols.insert(cols.begin() + static_cast<std::ptrdiff_t>(idx), c);
    if (idx % 2 == 0)
      acc += term;
    else
      acc -= term;
  }
  rows.insert(rows.begin(), r);
  return acc;
}

}  // namespace

Poly determinant(const PolyMat& u) {
  std::vector<std::size_t> rows(u.dim()), cols(u.dim());
  for (std::size_t i = 0; i < u.dim(); ++i) rows[i] = cols[i] = i;
  return cofactor_det(u, rows, cols);
}

PolyMat inverse(const PolyMat& u) {
  const std::size_t n = u.dim();
  const Poly det = determinant(u);
  if (det != Poly(1) && det != Poly(-1))
    throw InputInvalid("polynomial matrix is not invertible over Z[x]");
  PolyMat out(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      // adj(u)(c, r) = (-1)^(r+c) minor(r, c)
      std::vector<std::size_t> rows, cols;
      for (std::size_t i = 0; i < n; ++i) {
        if (i != r) rows.push_back(i);
        if (i != c) cols.push_back(i);
      }
      Poly minor = cofactor_det(u, rows, cols);
      if ((r + c) % 2) minor = -minor;
      out(c, r) = det == Poly(1) ? minor : -minor;
    }
  return out;
}

Matrix evaluate_at(const PolyMat& u, const Integer& k) {
  Matrix out(u.dim());
  for (std::size_t r = 0; r < u.dim(); ++r)
    for (std::size_t c = 0; c < u.dim(); ++c) out(r, c) = u(r, c).eval(k);
  return out;
}

TruncatedPolyMat::TruncatedPolyMat(const PolyMat& u, std::size_t k)
    : m_(u.dim()), k_(k) {
  for (std::size_t r = 0; r < u.dim(); ++r)
    for (std::size_t c = 0; c < u.dim(); ++c) m_(r, c) = u(r, c).truncated(k);
}

TruncatedPolyMat TruncatedPolyMat::identity(std::size_t n, std::size_t k) {
  return TruncatedPolyMat(PolyMat::identity(n), k);
}

TruncatedPolyMat operator*(const TruncatedPolyMat& a,
                           const TruncatedPolyMat& b) {
  if (a.k_ != b.k_) throw InputInvalid("truncation order mismatch");
  return TruncatedPolyMat(a.m_ * b.m_, a.k_);
}

TruncatedPolyMat inverse(const TruncatedPolyMat& a) {
  const std::size_t n = a.dim(), k = a.order();
  const Matrix a0 = evaluate_at(a.lift(), 0);
  const PolyMat a0_inv(inverse(a0));
  const PolyMat nil = a.lift() - PolyMat(a0);
  const TruncatedPolyMat step(PolyMat(Matrix(n)) - a0_inv * nil, k);
  TruncatedPolyMat term = TruncatedPolyMat::identity(n, k);
  PolyMat sum = PolyMat::identity(n);
  for (std::size_t m = 1; m <= k; ++m) {
    term = term * step;
    sum += term.lift();
  }
  return TruncatedPolyMat(sum * a0_inv, k);
}

std::string encode(const PolyMat& u) {
  std::string out = std::to_string(u.dim()) + '\n';
  for (std::size_t r = 0; r < u.dim(); ++r) {
    for (std::size_t c = 0; c < u.dim(); ++c) {
      if (c) out += ' ';
      out += encode_poly(u(r, c));
    }
    out += '\n';
  }
  return out;
}

PolyMat decode_polymat(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string tok;
  if (!(in >> tok)) throw InputInvalid("missing matrix header");
  const Integer n = parse_integer(tok);
  if (n < 1 || n > 16) throw InputInvalid("polynomial matrix dimension out of range");
  PolyMat u(n.get_ui());
  for (std::size_t r = 0; r < u.dim(); ++r)
    for (std::size_t c = 0; c < u.dim(); ++c) u(r, c) = read_poly(in);
  if (in >> tok) throw InputInvalid("trailing data after polynomial matrix");
  return u;
}

}  // namespace distcrypt
