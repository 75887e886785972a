#include <gtest/gtest.h>

#include "distcrypt/cayley.hpp"
#include "distcrypt/error.hpp"
#include "distcrypt/word.hpp"
#include "oracles.hpp"

using namespace distcrypt;

TEST(Evaluate, KnownValues) {
  EXPECT_EQ(evaluate(Word{}, 3), Matrix::identity(3));
  EXPECT_EQ(evaluate(Word{{{1, 3, 1}, {1, 3, 1}}}, 3), Matrix::elementary(3, 1, 3, 2));
  const Word comm{{{1, 2, 1}, {2, 3, 1}, {1, 2, -1}, {2, 3, -1}}};
  EXPECT_EQ(evaluate(comm, 3), Matrix::elementary(3, 1, 3, 1));
}

TEST(Evaluate, AgreesWithProductOfMatrices) {
  Rng rng(17);
  const auto toks = standard_tokens(4);
  for (int t = 0; t < 100; ++t) {
    Word w;
    for (int s = 0; s < 40; ++s) w.push(toks[rng.below(toks.size())]);
    EXPECT_EQ(evaluate(w, 4), oracle::word_product(w, 4));
    EXPECT_TRUE((evaluate(w, 4) * evaluate(w.inverse(), 4)).is_identity());
  }
}

TEST(Evaluate, RejectsBadTokens) {
  EXPECT_THROW(evaluate(Word{{{1, 4, 1}}}, 3), InputInvalid);
  EXPECT_THROW(evaluate(Word{{{2, 2, 1}}}, 3), InputInvalid);
  EXPECT_THROW(evaluate(Word{{{1, 2, 2}}}, 3), InputInvalid);
}

TEST(WordText, RoundTrip) {
  const Word w{{{1, 2, 1}, {3, 1, -1}}};
  EXPECT_EQ(serialize_word(w), "1 2 +1\n3 1 -1\n");
  EXPECT_EQ(parse_word(serialize_word(w)), w);
  EXPECT_EQ(parse_token("2 1 1"), (GeneratorToken{2, 1, 1}));
  EXPECT_THROW(parse_token("1 1 +1"), InputInvalid);
  EXPECT_THROW(parse_token("1 2 +2"), InputInvalid);
  EXPECT_THROW(parse_token("1 2"), InputInvalid);
  EXPECT_THROW(parse_token("1 2 +1 7"), InputInvalid);
}

TEST(StandardTokens, CountAndOrder) {
  const auto t = standard_tokens(3);
  ASSERT_EQ(t.size(), 12u);
  EXPECT_EQ(t[0], (GeneratorToken{1, 2, 1}));
  EXPECT_EQ(t[1], (GeneratorToken{1, 2, -1}));
}

TEST(ElementaryFactorization, ReproducesMatrix) {
  EXPECT_TRUE(elementary_factorization(Matrix::identity(3)).empty());
  const Matrix b{{2, 1}, {1, 1}};
  const Word wb = elementary_factorization(b);
  EXPECT_EQ(evaluate(wb, 2), b);
  EXPECT_EQ(wb.length(), 2u);
  Matrix minus = Matrix::identity(3);
  minus(0, 0) = -1;
  minus(1, 1) = -1;
  EXPECT_EQ(evaluate(elementary_factorization(minus), 3), minus);
  Rng rng(8);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 2 + rng.below(3);
    const Matrix g = oracle::random_sl(rng, n, 12);
    EXPECT_EQ(oracle::word_product(elementary_factorization(g), n), g);
  }
  EXPECT_THROW(elementary_factorization(Matrix{{1, 1}, {1, 0}}), InputInvalid);
}

TEST(Bfs, KnownValues) {
  const auto s = standard_generators(3);
  EXPECT_EQ(bfs_length(Matrix::identity(3), s, 4), 0);
  EXPECT_EQ(bfs_length(Matrix::elementary(3, 1, 3, 1), s, 4), 1);
  EXPECT_EQ(bfs_length(Matrix::elementary(3, 1, 3, 2), s, 4), 2);
  EXPECT_EQ(bfs_length(make_block(Matrix::identity(2), {1, 1}), s, 4), 2);
  EXPECT_EQ(bfs_length(Matrix::elementary(3, 1, 3, 2), s, 1), std::nullopt);
}

TEST(Bfs, AgreesWithBall) {
  const auto s = standard_generators(3);
  const Ball ball(s, 3);
  EXPECT_EQ(ball.sphere_size(0), 1u);
  EXPECT_EQ(ball.sphere_size(1), 12u);
  Rng rng(2);
  for (int t = 0; t < 200; ++t) {
    const std::size_t i = rng.below(ball.size());
    EXPECT_EQ(bfs_length(ball.element(i), s, 3), ball.distance(i));
  }
}

TEST(Bfs, AbelianGeneratorsGiveL1Norm) {
  const Matrix id = Matrix::identity(2);
  const std::vector<Matrix> h{make_block(id, {1, 0}), make_block(id, {0, 1})};
  for (long a = -3; a <= 3; ++a)
    for (long b = -3; b <= 3; ++b) {
      if (std::abs(a) + std::abs(b) > 3) continue;
      EXPECT_EQ(bfs_length(make_block(id, {a, b}), h, 3), std::abs(a) + std::abs(b));
    }
}

TEST(Bfs, StateCapThrows) {
  const auto s = standard_generators(3);
  EXPECT_THROW(bfs_length(Matrix::elementary(3, 1, 3, 50), s, 8, 1000),
               ResourceCapExceeded);
  EXPECT_THROW(Ball(s, 6, 1000), ResourceCapExceeded);
}

TEST(Symmetrize, AddsInversesAndDropsIdentity) {
  const std::vector<Matrix> g{Matrix::identity(3), Matrix::elementary(3, 1, 2, 1)};
  const auto s = symmetrize(g);
  ASSERT_EQ(s.size(), 2u);
  EXPECT_EQ(s[1], Matrix::elementary(3, 1, 2, -1));
}
