#include "distcrypt/lattice.hpp"

#include <algorithm>
#include <utility>

#include "distcrypt/error.hpp"

namespace distcrypt {

namespace {

bool is_zero_row(const IntVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Integer& x) { return sgn(x) == 0; });
}

void axpy(IntVector& dst, const Integer& q, const IntVector& src) {
  for (std::size_t c = 0; c < dst.size(); ++c) dst[c] -= q * src[c];
}

}  // namespace

std::vector<IntVector> hermite_normal_form(std::vector<IntVector> rows) {
  rows.erase(std::remove_if(rows.begin(), rows.end(), is_zero_row), rows.end());
  if (rows.empty()) return {};
  const std::size_t dim = rows.front().size();
  for (const auto& r : rows)
    if (r.size() != dim) throw InputInvalid("lattice vectors differ in length");

  std::size_t top = 0;
  for (std::size_t col = 0; col < dim && top < rows.size(); ++col) {
    // Euclid on column col among rows top.. until one nonzero entry is left.
    for (;;) {
      std::size_t best = rows.size();
      for (std::size_t r = top; r < rows.size(); ++r)
        if (sgn(rows[r][col]) != 0 &&
            (best == rows.size() || abs(rows[r][col]) < abs(rows[best][col])))
          best = r;
      if (best == rows.size()) break;
      std::swap(rows[top], rows[best]);
      bool done = true;
      for (std::size_t r = top + 1; r < rows.size(); ++r) {
        if (sgn(rows[r][col]) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), rows[r][col].get_mpz_t(), rows[top][col].get_mpz_t());
        axpy(rows[r], q, rows[top]);
        if (sgn(rows[r][col]) != 0) done = false;
      }
      if (done) break;
    }
    if (sgn(rows[top][col]) == 0) continue;
    if (sgn(rows[top][col]) < 0)
      for (auto& x : rows[top]) x = -x;
    for (std::size_t r = 0; r < top; ++r) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), rows[r][col].get_mpz_t(), rows[top][col].get_mpz_t());
      axpy(rows[r], q, rows[top]);
    }
    ++top;
  }
  rows.resize(top);
  return rows;
}

Integer lattice_index(const std::vector<IntVector>& hnf, std::size_t dim) {
  if (hnf.size() < dim) return 0;
  Integer idx = 1;
  for (const auto& r : hnf) {
    const auto it = std::find_if(r.begin(), r.end(),
                                 [](const Integer& x) { return sgn(x) != 0; });
    idx *= *it;
  }
  return idx;
}

bool in_lattice(const std::vector<IntVector>& hnf, IntVector v) {
  for (const auto& r : hnf) {
    if (r.size() != v.size()) throw InputInvalid("dimension mismatch");
    const auto it = std::find_if(r.begin(), r.end(),
                                 [](const Integer& x) { return sgn(x) != 0; });
    const std::size_t col = static_cast<std::size_t>(it - r.begin());
    for (std::size_t c = 0; c < col; ++c)
      if (sgn(v[c]) != 0) return false;
    if (!mpz_divisible_p(v[col].get_mpz_t(), it->get_mpz_t())) return false;
    const Integer q = v[col] / *it;
    axpy(v, q, r);
  }
  return is_zero_row(v);
}

}  // namespace distcrypt
