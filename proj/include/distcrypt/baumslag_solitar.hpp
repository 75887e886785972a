#pragma once

// BS(1,2) = <a, t | t^-1 a t = a^2>, realised by affine maps of the dyadic
// rationals: a is x -> x + 1 and t is x -> x / 2. An element is
// x -> 2^p x + q, composed like the matrices [[2^p, q], [0, 1]].

#include <cstddef>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "distcrypt/matrix.hpp"

namespace distcrypt::bs {

struct Letter {
  char gen = 'a';  ///< 'a' or 't'
  int exp = 1;     ///< +-1
  friend bool operator==(const Letter&, const Letter&) = default;
};

using BsWord = std::vector<Letter>;

struct Affine {
  long p = 0;       ///< scale exponent
  mpq_class q = 0;  ///< translation, always dyadic
  friend bool operator==(const Affine&, const Affine&) = default;
};

Affine compose(const Affine& f, const Affine& g);  ///< matrix product f * g
Affine evaluate(const BsWord& w);
/// x -> x + n, i.e. a^n.
Affine translation(const Integer& n);

/// t^-k a t^k, length 2k + 1.
BsWord power_word(unsigned k);

/// Horner scheme over the binary digits of n >= 1:
/// t^-(L-1) a t a^{b_1} t a^{b_2} ... t a^{b_{L-1}}, length <= 3L - 2.
BsWord general_word(const Integer& n);

std::string to_string(const BsWord& w);

}  // namespace distcrypt::bs
