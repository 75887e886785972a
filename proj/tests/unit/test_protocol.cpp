#include <gtest/gtest.h>

#include <set>

#include "distcrypt/distortion.hpp"
#include "distcrypt/error.hpp"
#include "distcrypt/protocol.hpp"
#include "oracles.hpp"

using namespace distcrypt;

namespace {

std::size_t members(const SecretKey& key, const Payload& p) {
  std::size_t c = 0;
  for (const auto& e : p.elements)
    if (membership(key, element_matrix(key, e))) ++c;
  return c;
}

}  // namespace

TEST(Keygen, IdentityConjugator) {
  const SecretKey k = keygen(1, 3, 0);
  EXPECT_TRUE(k.c.is_identity());
  ASSERT_EQ(k.subgroup_gens.size(), 2u);
  EXPECT_EQ(k.subgroup_gens[0], Matrix::elementary(3, 1, 3, 1));
  EXPECT_EQ(k.subgroup_gens[1], Matrix::elementary(3, 2, 3, 1));
}

TEST(Keygen, DeterministicAndSeedSensitive) {
  const SecretKey a = keygen(42, 3, 16), b = keygen(42, 3, 16), c = keygen(43, 3, 16);
  EXPECT_EQ(write_key(a), write_key(b));
  EXPECT_NE(encode(a.c), encode(c.c));
  EXPECT_EQ(a.c_word.length(), 16u);
  EXPECT_THROW(keygen(1, 2, 4), InputInvalid);
}

TEST(Keygen, KeyInvariants) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const SecretKey k = keygen(seed, 3 + seed % 3, 12);
    EXPECT_TRUE(oracle::mul(k.c, k.c_inv).is_identity());
    EXPECT_EQ(oracle::word_product(k.c_word, k.n), k.c);
    for (std::size_t i = 0; i < k.subgroup_gens.size(); ++i) {
      IntVector e(k.n - 1);
      e[i] = 1;
      EXPECT_EQ(h_pattern(k.c * k.subgroup_gens[i] * k.c_inv), e);
    }
  }
}

TEST(ChooseTranslation, NormAndShape) {
  Rng rng(6);
  for (int t = 0; t < 50; ++t) {
    const IntVector v = choose_translation(rng, 1, 2);
    EXPECT_EQ(l1_norm(v), 1);
    EXPECT_EQ(v.size(), 2u);
  }
  EXPECT_EQ(l1_norm(choose_translation(rng, 3, 2)), 3);
  EXPECT_EQ(l1_norm(choose_translation(rng, 1000000, 2)), 1000000);
  EXPECT_EQ(l1_norm(choose_translation(rng, Integer("123456789012345678901"), 5)),
            Integer("123456789012345678901"));
  EXPECT_THROW(choose_translation(rng, 0, 2), InputInvalid);
}

TEST(ChooseTranslation, CoversEveryPointOfTheSphere) {
  // |v|_1 = 2 in Z^2 has 8 points.
  Rng rng(12);
  std::set<std::pair<long, long>> seen;
  for (int t = 0; t < 2000; ++t) {
    const IntVector v = choose_translation(rng, 2, 2);
    seen.insert({v[0].get_si(), v[1].get_si()});
  }
  EXPECT_EQ(seen.size(), 8u);
}

TEST(Encrypt, IdentityKeyNoDecoys) {
  const SecretKey key = keygen(1, 3, 0);
  Rng rng(1);
  const Payload p = encrypt_translation(key, {3, 0}, {0, WireMode::Matrix}, rng);
  ASSERT_EQ(p.elements.size(), 1u);
  EXPECT_EQ(std::get<Matrix>(p.elements[0]), Matrix::elementary(3, 1, 3, 3));
}

TEST(Encrypt, ExactlyOneMemberBothModes) {
  const SecretKey key = keygen(5, 3, 16);
  for (WireMode mode : {WireMode::Matrix, WireMode::Word})
    for (std::uint64_t s = 0; s < 20; ++s) {
      const Payload p = encrypt(key, 5 + s, {4, mode}, s);
      ASSERT_EQ(p.elements.size(), 5u);
      EXPECT_EQ(members(key, p), 1u);
      EXPECT_EQ(decrypt(key, p), 5 + s);
    }
}

TEST(Encrypt, RealElementPositionVaries) {
  const SecretKey key = keygen(9, 3, 8);
  std::set<std::size_t> positions;
  for (std::uint64_t s = 0; s < 60; ++s) {
    const Payload p = encrypt(key, 7, {3, WireMode::Matrix}, s);
    for (std::size_t i = 0; i < p.elements.size(); ++i)
      if (membership(key, element_matrix(key, p.elements[i]))) positions.insert(i);
  }
  EXPECT_EQ(positions.size(), 4u);
}

TEST(Encrypt, WordLengthAfterConjugation) {
  for (std::size_t conj_len : {0u, 8u, 16u}) {
    const SecretKey key = keygen(100 + conj_len, 3, conj_len);
    for (std::uint64_t s = 0; s < 10; ++s) {
      const Integer msg = Integer(1) << 20;
      const Payload p = encrypt(key, msg, {0, WireMode::Word}, s);
      const Word& w = std::get<Word>(p.elements[0]);
      EXPECT_LE(static_cast<double>(w.length()) - 2.0 * conj_len,
                compression_bound(3, msg));
    }
  }
}

TEST(Membership, KnownValues) {
  const SecretKey key = keygen(3, 3, 10);
  EXPECT_EQ(membership(key, Matrix::identity(3)), (IntVector{0, 0}));
  EXPECT_FALSE(membership(key, key.c_inv * Matrix::elementary(3, 2, 1, 1) * key.c));
  const Matrix h = key.c_inv * make_block(Matrix::identity(2), {4, -9}) * key.c;
  EXPECT_EQ(membership(key, h), (IntVector{4, -9}));
  EXPECT_FALSE(membership(key, Matrix::identity(4)));
}

TEST(Decrypt, Errors) {
  const SecretKey key = keygen(4, 3, 12);
  Payload decoys;
  decoys.elements.emplace_back(Matrix::elementary(3, 2, 1, 1));
  try {
    decrypt(key, decoys);
    FAIL();
  } catch (const ProtocolError& e) {
    EXPECT_EQ(e.kind(), ProtocolError::Kind::MalformedPayload);
    EXPECT_NE(std::string(e.what()).find("malformed-payload"), std::string::npos);
  }
  Payload two;
  two.elements.emplace_back(Matrix::identity(3));
  two.elements.emplace_back(Matrix::identity(3));
  try {
    decrypt(key, two);
    FAIL();
  } catch (const ProtocolError& e) {
    EXPECT_EQ(e.kind(), ProtocolError::Kind::AmbiguousPayload);
  }
}

TEST(Decrypt, WrongKeyFails) {
  const SecretKey alice = keygen(10, 3, 16);
  std::size_t failures = 0;
  for (std::uint64_t s = 0; s < 50; ++s) {
    const SecretKey eve = keygen(1000 + s, 3, 16);
    const Payload p = encrypt(alice, 12345, {4, WireMode::Matrix}, s);
    try {
      decrypt(eve, p);
    } catch (const ProtocolError&) {
      ++failures;
    }
  }
  EXPECT_EQ(failures, 50u);
}

TEST(Normalizer, KnownValues) {
  EXPECT_TRUE(normalizer_form_check(make_block(conjugating_block(), {5, -2})));
  EXPECT_FALSE(normalizer_form_check(Matrix::elementary(3, 3, 1, 1)));
  EXPECT_TRUE(normalizer_form_check(Matrix::identity(3)));
  EXPECT_TRUE(normalizes_translations(make_block(conjugating_block(), {5, -2})));
  EXPECT_FALSE(normalizes_translations(Matrix::elementary(3, 3, 1, 1)));
}

TEST(Normalizer, FormCheckMatchesOperationalCheck) {
  Rng rng(44);
  for (int t = 0; t < 200; ++t) {
    const Matrix b = oracle::random_sl(rng, 2, 6);
    const long eps = rng.coin() ? 1 : -1;
    Matrix blk = b;
    if (eps < 0) {
      blk(0, 0) = -blk(0, 0);
      blk(1, 0) = -blk(1, 0);
    }
    Matrix g = make_diagonal_block(blk, eps);
    g(0, 2) = rng.range(-9, 9);
    g(1, 2) = rng.range(-9, 9);
    EXPECT_TRUE(normalizer_form_check(g));
    EXPECT_TRUE(normalizes_translations(g));
    const Matrix bad = g * Matrix::elementary(3, 3, 1 + rng.below(2), rng.range(1, 5));
    EXPECT_FALSE(normalizer_form_check(bad));
    EXPECT_FALSE(normalizes_translations(bad));
  }
}

TEST(KeyFile, RoundTrip) {
  const SecretKey k = keygen(42, 4, 16);
  const std::string text = write_key(k);
  EXPECT_EQ(text.substr(0, text.find('\n')), "4 16 42");
  const SecretKey r = read_key(text);
  EXPECT_EQ(r.c, k.c);
  EXPECT_EQ(r.c_word, k.c_word);
  EXPECT_EQ(write_key(r), text);
}

TEST(KeyFile, ForeignConjugatorFallsBackToFactorization) {
  const Matrix c = Matrix::elementary(3, 1, 2, 7) * Matrix::elementary(3, 3, 2, -2);
  const SecretKey k = read_key("3 5 1\n" + encode(c));
  EXPECT_EQ(k.c, c);
  EXPECT_EQ(evaluate(k.c_word, 3), c);
}

TEST(KeyFile, Rejects) {
  EXPECT_THROW(read_key(""), InputInvalid);
  EXPECT_THROW(read_key("2 0 1\n2\n1 0\n0 1\n"), InputInvalid);
  EXPECT_THROW(read_key("3 0\n" + encode(Matrix::identity(3))), InputInvalid);
  EXPECT_THROW(read_key("3 0 1\n3\n2 0 0\n0 1 0\n0 0 1\n"), InputInvalid);
  EXPECT_THROW(read_key("3 0 1\n" + encode(Matrix::identity(4))), InputInvalid);
}

TEST(PayloadFile, RoundTripBothModes) {
  const SecretKey key = keygen(8, 3, 6);
  for (WireMode mode : {WireMode::Matrix, WireMode::Word}) {
    const Payload p = encrypt(key, 99, {3, mode}, 2);
    const std::string text = write_payload(p);
    const Payload q = read_payload(text);
    EXPECT_EQ(q.mode, mode);
    EXPECT_EQ(q.elements, p.elements);
    EXPECT_EQ(write_payload(q), text);
    EXPECT_EQ(decrypt(key, q), 99);
  }
}

TEST(PayloadFile, Rejects) {
  EXPECT_THROW(read_payload(""), InputInvalid);
  EXPECT_THROW(read_payload("1 text\n"), InputInvalid);
  EXPECT_THROW(read_payload("2 matrix\n" + encode(Matrix::identity(3))), InputInvalid);
  EXPECT_THROW(read_payload("1 word\n1 1 +1\n"), InputInvalid);
  Payload empty_word;
  empty_word.mode = WireMode::Word;
  empty_word.elements.emplace_back(Word{});
  EXPECT_THROW(write_payload(empty_word), InputInvalid);
}
