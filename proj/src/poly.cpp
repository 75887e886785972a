#include "distcrypt/poly.hpp"

#include <algorithm>
#include <istream>

#include "distcrypt/error.hpp"

namespace distcrypt {

Poly::Poly(long c) : Poly(Integer(c)) {}

Poly::Poly(const Integer& c) {
  if (sgn(c) != 0) c_.push_back(c);
}

Poly::Poly(std::vector<Integer> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::monomial(const Integer& c, std::size_t degree) {
  std::vector<Integer> v(degree + 1);
  v[degree] = c;
  return Poly(std::move(v));
}

void Poly::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

Integer Poly::eval(const Integer& at) const {
  Integer acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc *= at;
    acc += *it;
  }
  return acc;
}

Poly Poly::truncated(std::size_t k) const {
  if (c_.size() <= k + 1) return *this;
  return Poly(std::vector<Integer>(c_.begin(), c_.begin() + k + 1));
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Poly Poly::operator-() const {
  Poly out = *this;
  for (auto& x : out.c_) x = -x;
  return out;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> out(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (sgn(a.c_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      mpz_addmul(out[i + j].get_mpz_t(), a.c_[i].get_mpz_t(),
                 b.c_[j].get_mpz_t());
  }
  return Poly(std::move(out));
}

std::string encode_poly(const Poly& p) {
  if (p.is_zero()) return "0 0";
  std::string out = std::to_string(p.degree());
  for (const auto& c : p.coeffs()) {
    out += ' ';
    out += c.get_str();
  }
  return out;
}

Poly read_poly(std::istream& in) {
  std::string tok;
  if (!(in >> tok)) throw InputInvalid("missing polynomial degree");
  const Integer deg = parse_integer(tok);
  if (sgn(deg) < 0 || deg > 100000)
    throw InputInvalid("polynomial degree out of range: " + tok);
  std::vector<Integer> c(deg.get_ui() + 1);
  for (auto& x : c) {
    if (!(in >> tok)) throw InputInvalid("truncated polynomial");
    x = parse_integer(tok);
  }
  return Poly(std::move(c));
}

}  // namespace distcrypt
