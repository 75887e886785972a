#pragma once

// Symmetric-key scheme over SL_n(Z): the shared secret is a conjugator c,
// the secret subgroup is c^-1 H c with H = {M(Id, v)}, a message n >= 1 is
// carried by an element c^-1 M(Id, v) c with |v|_1 = n, and decoys outside
// the subgroup hide which element of the payload matters.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "distcrypt/matrix.hpp"
#include "distcrypt/rng.hpp"
#include "distcrypt/word.hpp"

namespace distcrypt {

struct SecretKey {
  std::size_t n = 3;
  std::size_t conj_len = 0;
  std::uint64_t seed = 0;
  Matrix c;
  Matrix c_inv;
  /// t_i = c^-1 M(Id, e_i) c
  std::vector<Matrix> subgroup_gens;
  /// Word over S with evaluate(c_word) == c.
  Word c_word;
};

enum class WireMode { Matrix, Word };

const char* to_string(WireMode m);
WireMode parse_wire_mode(std::string_view s);

/// Ordered elements; exactly one of them lies in c^-1 H c.
struct Payload {
  WireMode mode = WireMode::Matrix;
  std::vector<std::variant<Matrix, Word>> elements;
};

/// Builds the key from a seeded random reduced word of length conj_len over
/// S. Deterministic in (seed, n, conj_len). Requires n >= 3.
SecretKey keygen(std::uint64_t seed, std::size_t n, std::size_t conj_len);

/// Completes a key from its conjugator: the word is regenerated from the
/// seed when it reproduces c, and otherwise recovered by row reduction.
SecretKey key_from_conjugator(std::size_t n, std::size_t conj_len,
                              std::uint64_t seed, const Matrix& c);

/// Random v in Z^dim with |v|_1 = msg: uniform composition (stars and bars)
/// followed by uniform signs on the nonzero parts.
IntVector choose_translation(Rng& rng, const Integer& msg, std::size_t dim);

struct EncryptOptions {
  std::size_t decoys = 0;
  WireMode mode = WireMode::Matrix;
};

Payload encrypt(const SecretKey& key, const Integer& msg,
                const EncryptOptions& opts, std::uint64_t seed);
/// As above, with the translation fixed by the caller.
Payload encrypt_translation(const SecretKey& key, const IntVector& v,
                            const EncryptOptions& opts, Rng& rng);

/// v with c g c^-1 == M(Id, v), if any.
std::optional<IntVector> membership(const SecretKey& key, const Matrix& g);

/// Element as a matrix; words are evaluated in dimension key.n.
Matrix element_matrix(const SecretKey& key,
                      const std::variant<Matrix, Word>& e);

/// Returns |v|_1 of the unique member. Throws ProtocolError when no element
/// or more than one element passes membership.
Integer decrypt(const SecretKey& key, const Payload& payload);

/// g has the block form [[B, x], [0, eps]] with eps = +-1.
bool normalizer_form_check(const Matrix& g);
/// g M(Id, e_i) g^-1 and g^-1 M(Id, e_i) g both stay in H for every i.
bool normalizes_translations(const Matrix& g);

// Key file: "n conj_len seed" then the canonical encoding of c.
std::string write_key(const SecretKey& key);
SecretKey read_key(std::string_view text);

// Payload file: "count mode", then the elements blank-line separated.
std::string write_payload(const Payload& p);
Payload read_payload(std::string_view text);

}  // namespace distcrypt
