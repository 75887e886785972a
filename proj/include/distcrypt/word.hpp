#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "distcrypt/matrix.hpp"

namespace distcrypt {

/// E_ij(sign) with 1-based indices, i != j, sign = +-1. The tokens over all
/// ordered pairs form the standard generating set S of SL_n(Z).
struct GeneratorToken {
  int row = 1;
  int col = 2;
  int sign = 1;

  GeneratorToken inverse() const { return {row, col, -sign}; }
  friend bool operator==(const GeneratorToken&, const GeneratorToken&) = default;
};

/// Finite product of generator tokens; length is the token count.
struct Word {
  std::vector<GeneratorToken> tokens;

  std::size_t length() const noexcept { return tokens.size(); }
  bool empty() const noexcept { return tokens.empty(); }

  Word inverse() const;
  Word& append(const Word& other);
  Word& push(GeneratorToken t) {
    tokens.push_back(t);
    return *this;
  }
  /// |count| copies of E_ij(sign(count)).
  Word& push_repeated(int row, int col, const Integer& count);

  friend bool operator==(const Word&, const Word&) = default;
};

Word concat(const Word& a, const Word& b);

/// Exact product of the denoted elementary matrices in SL_n(Z); the empty
/// word evaluates to Id. Throws InputInvalid for indices outside [1, n].
Matrix evaluate(const Word& w, std::size_t n);

/// All tokens E_ij(+-1) for n, in a fixed order.
std::vector<GeneratorToken> standard_tokens(std::size_t n);

/// Writes a word as lines "i j s" with s printed as +1 or -1.
std::string serialize_word(const Word& w);
Word parse_word(std::string_view text);
/// Parses a single "i j s" line.
GeneratorToken parse_token(std::string_view line);

/// Writes g (det 1) as a word over S by integer row reduction: Euclidean
/// elimination column by column, sign repair with rotation pairs, and back
/// substitution. Length is linear in the entry sizes, so this is meant for
/// small fixed matrices such as the conjugating block.
Word elementary_factorization(const Matrix& g);

}  // namespace distcrypt
