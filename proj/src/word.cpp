#include "distcrypt/word.hpp"

#include <sstream>

#include "distcrypt/error.hpp"

namespace distcrypt {

Word Word::inverse() const {
  Word out;
  out.tokens.reserve(tokens.size());
  for (auto it = tokens.rbegin(); it != tokens.rend(); ++it)
    out.tokens.push_back(it->inverse());
  return out;
}

Word& Word::append(const Word& other) {
  tokens.insert(tokens.end(), other.tokens.begin(), other.tokens.end());
  return *this;
}

Word& Word::push_repeated(int row, int col, const Integer& count) {
  const int s = sgn(count);
  for (Integer k = abs(count); sgn(k) > 0; --k) tokens.push_back({row, col, s});
  return *this;
}

Word concat(const Word& a, const Word& b) {
  Word out = a;
  return out.append(b);
}

Matrix evaluate(const Word& w, std::size_t n) {
  Matrix g = Matrix::identity(n);
  for (const auto& t : w.tokens) {
    if (t.row < 1 || t.col < 1 || t.row == t.col ||
        static_cast<std::size_t>(t.row) > n ||
        static_cast<std::size_t>(t.col) > n || (t.sign != 1 && t.sign != -1))
      throw InputInvalid("generator token out of range");
    // g * E_ij(s): column j += s * column i.
    const std::size_t i = t.row - 1, j = t.col - 1;
    for (std::size_t r = 0; r < n; ++r) {
      if (t.sign > 0)
        g(r, j) += g(r, i);
      else
        g(r, j) -= g(r, i);
    }
  }
  return g;
}

std::vector<GeneratorToken> standard_tokens(std::size_t n) {
  std::vector<GeneratorToken> out;
  for (int i = 1; i <= static_cast<int>(n); ++i)
    for (int j = 1; j <= static_cast<int>(n); ++j) {
      if (i == j) continue;
      out.push_back({i, j, 1});
      out.push_back({i, j, -1});
    }
  return out;
}

std::string serialize_word(const Word& w) {
  std::string out;
  for (const auto& t : w.tokens) {
    out += std::to_string(t.row);
    out += ' ';
    out += std::to_string(t.col);
    out += t.sign > 0 ? " +1\n" : " -1\n";
  }
  return out;
}

GeneratorToken parse_token(std::string_view line) {
  std::istringstream in{std::string(line)};
  std::string a, b, s, extra;
  if (!(in >> a >> b >> s) || (in >> extra))
    throw InputInvalid("bad word token line: '" + std::string(line) + "'");
  const Integer i = parse_integer(a), j = parse_integer(b),
                sign = parse_integer(s);
  if (i < 1 || j < 1 || i > 1000 || j > 1000 || i == j ||
      (sign != 1 && sign != -1))
    throw InputInvalid("bad word token: '" + std::string(line) + "'");
  return {static_cast<int>(i.get_si()), static_cast<int>(j.get_si()),
          static_cast<int>(sign.get_si())};
}

Word parse_word(std::string_view text) {
  Word w;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    w.tokens.push_back(parse_token(line));
  }
  return w;
}

Word elementary_factorization(const Matrix& g) {
  const std::size_t n = g.dim();
  if (determinant(g) != 1)
    throw InputInvalid("elementary factorization needs det = 1");
  Matrix m = g;
  std::vector<GeneratorToken> ops;  // left multiplications, in order applied

  // row a += q * row b
  auto add_row = [&](std::size_t a, std::size_t b, const Integer& q) {
    if (sgn(q) == 0) return;
    for (std::size_t c = 0; c < n; ++c) m(a, c) += q * m(b, c);
    const int s = sgn(q);
    for (Integer k = abs(q); sgn(k) > 0; --k)
      ops.push_back({static_cast<int>(a + 1), static_cast<int>(b + 1), s});
  };

  for (std::size_t c = 0; c < n; ++c) {
    for (;;) {
      std::size_t best = n;
      for (std::size_t r = c + 1; r < n; ++r)
        if (sgn(m(r, c)) != 0 && (best == n || abs(m(r, c)) < abs(m(best, c))))
          best = r;
      if (best == n) break;
      const Integer p = m(c, c), b = m(best, c);
      if (sgn(p) == 0) {
        add_row(c, best, 1);
      } else if (abs(b) < abs(p)) {
        if (abs(b) == 1) {
          add_row(c, best, -Integer((p - sgn(p)) / b));
        } else {
          Integer q;
          mpz_tdiv_q(q.get_mpz_t(), p.get_mpz_t(), b.get_mpz_t());
          add_row(c, best, -q);
        }
      } else if (abs(p) == 1) {
        for (std::size_t r = c + 1; r < n; ++r) add_row(r, c, -m(r, c) * p);
        break;
      } else {
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), b.get_mpz_t(), p.get_mpz_t());
        add_row(best, c, -q);
      }
    }
  }
  // Diagonal is now +-1 with product 1. Negate rows pairwise using the
  // rotation E_ab(1) E_ba(-1) E_ab(1), whose square is -Id on the pair.
  for (std::size_t c = 0; c + 1 < n; ++c) {
    if (m(c, c) != -1) continue;
    for (int rep = 0; rep < 2; ++rep) {
      add_row(c, c + 1, 1);
      add_row(c + 1, c, -1);
      add_row(c, c + 1, 1);
    }
  }
  for (std::size_t c = n; c-- > 1;)
    for (std::size_t i = 0; i < c; ++i) add_row(i, c, -Integer(m(i, c)));

  Word w;
  w.tokens.reserve(ops.size());
  for (const auto& op : ops) w.tokens.push_back(op.inverse());
  return w;
}

}  // namespace distcrypt
