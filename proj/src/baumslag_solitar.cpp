#include "distcrypt/baumslag_solitar.hpp"

#include "distcrypt/error.hpp"

namespace distcrypt::bs {

namespace {

mpq_class pow2(long p) {
  mpq_class r = 1;
  if (p >= 0)
    mpq_mul_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<unsigned long>(p));
  else
    mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<unsigned long>(-p));
  return r;
}

}  // namespace

Affine compose(const Affine& f, const Affine& g) {
  // [[2^pf, qf],[0,1]] * [[2^pg, qg],[0,1]]
  Affine out;
  out.p = f.p + g.p;
  out.q = pow2(f.p) * g.q + f.q;
  out.q.canonicalize();
  return out;
}

Affine evaluate(const BsWord& w) {
  Affine acc;
  for (const auto& l : w) {
    Affine step;
    if (l.gen == 'a')
      step.q = l.exp;
    else if (l.gen == 't')
      step.p = -l.exp;
    else
      throw InputInvalid("BS(1,2) letters are 'a' and 't'");
    acc = compose(acc, step);
  }
  return acc;
}

Affine translation(const Integer& n) {
  Affine f;
  f.q = mpq_class(n);
  return f;
}

BsWord power_word(unsigned k) {
  BsWord w(k, Letter{'t', -1});
  w.push_back({'a', 1});
  w.insert(w.end(), k, Letter{'t', 1});
  return w;
}

BsWord general_word(const Integer& n) {
  if (n < 1) throw InputInvalid("general_word needs n >= 1");
  const std::size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
  BsWord w(bits - 1, Letter{'t', -1});
  w.push_back({'a', 1});
  for (std::size_t i = bits - 1; i-- > 0;) {
    w.push_back({'t', 1});
    if (mpz_tstbit(n.get_mpz_t(), i)) w.push_back({'a', 1});
  }
  return w;
}

std::string to_string(const BsWord& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += w[i].gen;
    if (w[i].exp < 0) out += "^-1";
  }
  return out;
}

}  // namespace distcrypt::bs
