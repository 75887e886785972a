#include <gtest/gtest.h>

#include "distcrypt/baumslag_solitar.hpp"
#include "distcrypt/cayley.hpp"
#include "distcrypt/distortion.hpp"
#include "distcrypt/error.hpp"
#include "oracles.hpp"

using namespace distcrypt;

namespace {

const Matrix kA{{1, 1}, {1, 0}};

}  // namespace

TEST(ConjugatingBlock, IsASquareWithDetOne) {
  EXPECT_EQ(conjugating_block(), oracle::mul(kA, kA));
  EXPECT_EQ(determinant(conjugating_block()), 1);
}

TEST(ConjugationIdentity, KnownValues) {
  EXPECT_TRUE(conjugation_identity_check(Matrix::identity(2), {5, -7}));
  EXPECT_TRUE(conjugation_identity_check(conjugating_block(), {1, 0}));
  EXPECT_TRUE(conjugation_identity_check(kA, {0, 1}));
  EXPECT_THROW(conjugation_identity_check(Matrix{{2, 0}, {0, 1}}, {1, 0}), InputInvalid);
}

TEST(ConjugationIdentity, DirectOracle) {
  // M(A,0) M(Id,v) M(A,0)^-1 by schoolbook products, compared with M(Id, Av).
  const Matrix b = conjugating_block();
  const Matrix g = make_block(b, {0, 0});
  const Matrix gi = make_block(inverse(b), {0, 0});
  const Matrix lhs = oracle::mul(oracle::mul(g, oracle::translation({1, 0})), gi);
  EXPECT_EQ(lhs, oracle::translation({2, 1}));
}

TEST(ExpandVector, KnownValues) {
  EXPECT_TRUE(expand_vector(0, 0).digits.empty());
  EXPECT_EQ(expand_vector(0, 0).top_exponent, 0);

  // A^9 w1 = (F_9, F_8) = (34, 21), which is B^4 w2.
  const IntVector a9 = matvec(oracle::repeated_power(kA, 9), {0, 1});
  ASSERT_EQ(a9, (IntVector{34, 21}));
  const auto e = expand_vector(34, 21);
  ASSERT_EQ(e.digits.size(), 1u);
  EXPECT_EQ(e.digits[0].exponent, 4);
  EXPECT_EQ(e.digits[0].basis, Basis::W2);
  EXPECT_EQ(e.digits[0].coeff, 1);

  const auto m = expand_vector(1000000, 0);
  EXPECT_LE(m.top_exponent, 30);
  EXPECT_EQ(reconstruct(m), (IntVector{1000000, 0}));
}

TEST(ExpandVector, ExactAndBoundedDigits) {
  Rng rng(31);
  for (int t = 0; t < 1000; ++t) {
    const Integer bound = Integer(1) << (1 + rng.below(80));
    const IntVector v{rng.range(-bound, bound), rng.range(-bound, bound)};
    const auto e = expand_vector(v);
    ASSERT_EQ(reconstruct(e), v);
    for (const auto& d : e.digits) EXPECT_LE(abs(d.coeff), kDigitBound);
    EXPECT_LE(e.top_exponent, 2.0 * log2_1p(linf_norm(v)) + 4);
  }
}

TEST(ExpandVector, PowersOfBGiveSingleDigits) {
  const Matrix b = conjugating_block();
  for (int k = -12; k <= 12; ++k)
    for (Basis basis : {Basis::W1, Basis::W2}) {
      const IntVector v = matvec(power(b, static_cast<long>(k)), basis_vector(basis));
      const auto e = expand_vector(v);
      EXPECT_EQ(reconstruct(e), v);
      EXPECT_EQ(e.digits.size(), 1u) << k;
    }
}

TEST(CompressTranslation, KnownValues) {
  EXPECT_TRUE(compress_translation({0, 0}).empty());
  EXPECT_TRUE(compress_translation({0, 0, 0, 0}).empty());
  EXPECT_EQ(compress_translation({1, 0}), (Word{{{1, 3, 1}}}));
  EXPECT_EQ(compress_translation({1, 0, 0}), (Word{{{1, 4, 1}}}));
  const Word w = compress_translation({34, 21});
  EXPECT_EQ(oracle::word_product(w, 3), oracle::translation({34, 21}));
  EXPECT_LE(w.length(), compression_bound(3, 34));
  EXPECT_THROW(compress_translation({5}), InputInvalid);
}

TEST(CompressTranslation, SoundAndLogarithmic) {
  Rng rng(77);
  const Integer lim("1000000000");
  for (int t = 0; t < 1000; ++t) {
    const std::size_t n = 3 + (t % 3);
    IntVector v(n - 1);
    for (auto& x : v) x = rng.range(-lim, lim);
    if (t % 5 == 0) v[0] = rng.range(-3, 3);
    const Word w = compress_translation(v);
    ASSERT_EQ(evaluate(w, n), oracle::translation(v));
    EXPECT_LE(w.length(), compression_bound(n, linf_norm(v))) << format_vector(v);
  }
}

TEST(CompressTranslation, PowersOfTwo) {
  for (int k = 0; k <= 64; ++k) {
    const IntVector v{Integer(1) << k, 0};
    const Word w = compress_translation(v);
    ASSERT_EQ(evaluate(w, 3), oracle::translation(v));
    EXPECT_LE(w.length(), compression_slope(3) * k + compression_offset(3));
  }
}

TEST(CompressTranslation, NeverShorterThanGeodesic) {
  const auto s = standard_generators(3);
  const Ball ball(s, 4);
  for (long a = -6; a <= 6; ++a)
    for (long b = -6; b <= 6; ++b) {
      const IntVector v{a, b};
      const auto d = ball.find(oracle::translation(v));
      if (!d) continue;
      EXPECT_GE(static_cast<int>(compress_translation(v).length()), *d);
    }
}

TEST(CompressPair, UsesOnlyItsIndices) {
  const Word w = compress_pair(1000, -77, 2, 4, 1);
  for (const auto& t : w.tokens) {
    EXPECT_TRUE(t.row == 2 || t.row == 4 || t.row == 1);
    EXPECT_TRUE(t.col == 2 || t.col == 4 || t.col == 1);
  }
  Matrix expect = Matrix::identity(5);
  expect(1, 0) = 1000;
  expect(3, 0) = -77;
  EXPECT_EQ(evaluate(w, 5), expect);
  EXPECT_THROW(compress_pair(1, 1, 1, 1, 2), InputInvalid);
}

TEST(BaumslagSolitar, PowerWord) {
  EXPECT_EQ(bs::to_string(bs::power_word(0)), "a");
  EXPECT_EQ(bs::evaluate(bs::power_word(0)), bs::translation(1));
  const auto w3 = bs::power_word(3);
  EXPECT_EQ(w3.size(), 7u);
  EXPECT_EQ(bs::evaluate(w3), bs::translation(8));
  for (unsigned k = 0; k <= 30; ++k) {
    const auto w = bs::power_word(k);
    EXPECT_EQ(w.size(), 2 * k + 1);
    EXPECT_EQ(bs::evaluate(w), bs::translation(Integer(1) << k));
  }
}

TEST(BaumslagSolitar, Relation) {
  // t^-1 a t = a^2
  const bs::BsWord rel{{'t', -1}, {'a', 1}, {'t', 1}};
  EXPECT_EQ(bs::evaluate(rel), bs::translation(2));
  EXPECT_EQ(bs::general_word(2), rel);
}

TEST(BaumslagSolitar, GeneralWord) {
  EXPECT_EQ(bs::to_string(bs::general_word(1)), "a");
  const Integer n = 1000003;
  const auto w = bs::general_word(n);
  EXPECT_EQ(bs::evaluate(w), bs::translation(n));
  EXPECT_LE(w.size(), 4 * std::log2(1000003.0) + 4);
  Rng rng(13);
  for (int t = 0; t < 200; ++t) {
    const Integer m = rng.range(Integer(1), Integer("1000000000000"));
    const auto g = bs::general_word(m);
    EXPECT_EQ(bs::evaluate(g), bs::translation(m));
    EXPECT_LE(static_cast<double>(g.size()), 4 * log2_1p(m - 1) + 4);
  }
  EXPECT_THROW(bs::general_word(0), InputInvalid);
}
