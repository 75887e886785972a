#include "distcrypt/protocol.hpp"

#include <algorithm>
#include <sstream>

#include "distcrypt/distortion.hpp"
#include "distcrypt/error.hpp"

namespace distcrypt {

const char* to_string(WireMode m) {
  return m == WireMode::Matrix ? "matrix" : "word";
}

WireMode parse_wire_mode(std::string_view s) {
  if (s == "matrix") return WireMode::Matrix;
  if (s == "word") return WireMode::Word;
  throw InputInvalid("unknown wire mode '" + std::string(s) + "'");
}

namespace {

// Uniform reduced word: no token is followed by its own inverse.
Word random_reduced_word(Rng& rng, std::size_t n, std::size_t length) {
  const auto tokens = standard_tokens(n);
  Word w;
  while (w.length() < length) {
    const GeneratorToken t = tokens[rng.below(tokens.size())];
    if (!w.empty() && w.tokens.back() == t.inverse()) continue;
    w.push(t);
  }
  return w;
}

SecretKey assemble_key(std::size_t n, std::size_t conj_len,
                       std::uint64_t seed, Word c_word) {
  SecretKey key;
  key.n = n;
  key.conj_len = conj_len;
  key.seed = seed;
  key.c = evaluate(c_word, n);
  key.c_inv = evaluate(c_word.inverse(), n);
  key.c_word = std::move(c_word);
  const Matrix id = Matrix::identity(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    IntVector e(n - 1);
    e[i] = 1;
    key.subgroup_gens.push_back(key.c_inv * make_block(id, e) * key.c);
  }
  return key;
}

}  // namespace

SecretKey keygen(std::uint64_t seed, std::size_t n, std::size_t conj_len) {
  if (n < 3) throw InputInvalid("key dimension must be at least 3");
  Rng rng(seed);
  return assemble_key(n, conj_len, seed, random_reduced_word(rng, n, conj_len));
}

SecretKey key_from_conjugator(std::size_t n, std::size_t conj_len,
                              std::uint64_t seed, const Matrix& c) {
  if (c.dim() != n) throw InputInvalid("conjugator dimension mismatch");
  if (determinant(c) != 1) throw InputInvalid("conjugator must have det 1");
  SecretKey key = keygen(seed, n, conj_len);
  if (key.c == c) return key;
  return assemble_key(n, conj_len, seed, elementary_factorization(c));
}

IntVector choose_translation(Rng& rng, const Integer& msg, std::size_t dim) {
  if (msg < 1) throw InputInvalid("message must be >= 1");
  if (dim < 1) throw InputInvalid("translation dimension must be >= 1");
  // Stars and bars: dim-1 distinct bar positions among msg+dim-1 slots.
  const Integer slots = msg + Integer(static_cast<unsigned long>(dim - 1));
  std::vector<Integer> bars;
  while (bars.size() + 1 < dim) {
    Integer p = rng.below(slots);
    if (std::find(bars.begin(), bars.end(), p) == bars.end())
      bars.push_back(std::move(p));
  }
  std::sort(bars.begin(), bars.end());
  IntVector v(dim);
  Integer prev = -1;
  for (std::size_t i = 0; i + 1 < dim; ++i) {
    v[i] = bars[i] - prev - 1;
    prev = bars[i];
  }
  v[dim - 1] = slots - 1 - prev;
  for (auto& x : v)
    if (sgn(x) != 0 && rng.sign() < 0) x = -x;
  return v;
}

std::optional<IntVector> membership(const SecretKey& key, const Matrix& g) {
  if (g.dim() != key.n) return std::nullopt;
  return h_pattern(key.c * g * key.c_inv);
}

Matrix element_matrix(const SecretKey& key,
                      const std::variant<Matrix, Word>& e) {
  if (const auto* m = std::get_if<Matrix>(&e)) return *m;
  return evaluate(std::get<Word>(e), key.n);
}

Payload encrypt_translation(const SecretKey& key, const IntVector& v,
                            const EncryptOptions& opts, Rng& rng) {
  if (v.size() + 1 != key.n) throw InputInvalid("translation dimension mismatch");
  Payload p;
  p.mode = opts.mode;
  const Matrix id = Matrix::identity(key.n - 1);
  const Matrix h = key.c_inv * make_block(id, v) * key.c;

  std::variant<Matrix, Word> real;
  std::size_t word_length = 0;
  if (opts.mode == WireMode::Word) {
    Word w = key.c_word.inverse();
    w.append(compress_translation(v)).append(key.c_word);
    word_length = w.length();
    real = std::move(w);
  } else {
    real = h;
  }

  const std::size_t target_bits = std::max<std::size_t>(h.max_entry_bits(), 1);
  std::vector<std::variant<Matrix, Word>> decoys;
  while (decoys.size() < opts.decoys) {
    if (opts.mode == WireMode::Word) {
      Word w = random_reduced_word(rng, key.n, std::max<std::size_t>(word_length, 1));
      if (membership(key, evaluate(w, key.n))) continue;
      decoys.emplace_back(std::move(w));
    } else {
      // Grow a random reduced word until the entries reach the size of the
      // real element's entries.
      const auto tokens = standard_tokens(key.n);
      Matrix g = Matrix::identity(key.n);
      GeneratorToken last{0, 0, 0};
      while (g.max_entry_bits() < target_bits) {
        const GeneratorToken t = tokens[rng.below(tokens.size())];
        if (t == last.inverse()) continue;
        g = g * Matrix::elementary(key.n, t.row, t.col, t.sign);
        last = t;
      }
      if (membership(key, g)) continue;
      decoys.emplace_back(std::move(g));
    }
  }
  const std::size_t pos = rng.below(opts.decoys + 1);
  for (std::size_t i = 0; i <= opts.decoys; ++i) {
    if (i == pos)
      p.elements.push_back(real);
    else
      p.elements.push_back(std::move(decoys[i < pos ? i : i - 1]));
  }
  return p;
}

Payload encrypt(const SecretKey& key, const Integer& msg,
                const EncryptOptions& opts, std::uint64_t seed) {
  Rng rng(seed);
  const IntVector v = choose_translation(rng, msg, key.n - 1);
  return encrypt_translation(key, v, opts, rng);
}

Integer decrypt(const SecretKey& key, const Payload& payload) {
  std::optional<IntVector> found;
  std::size_t members = 0;
  for (const auto& e : payload.elements) {
    if (auto v = membership(key, element_matrix(key, e))) {
      ++members;
      found = std::move(v);
    }
  }
  if (members == 0)
    throw ProtocolError(ProtocolError::Kind::MalformedPayload,
                        "no payload element lies in the key subgroup");
  if (members > 1)
    throw ProtocolError(ProtocolError::Kind::AmbiguousPayload,
                        std::to_string(members) +
                            " payload elements lie in the key subgroup");
  return l1_norm(*found);
}

bool normalizer_form_check(const Matrix& g) {
  const std::size_t n = g.dim();
  for (std::size_t c = 0; c + 1 < n; ++c)
    if (sgn(g(n - 1, c)) != 0) return false;
  return abs(g(n - 1, n - 1)) == 1;
}

bool normalizes_translations(const Matrix& g) {
  const std::size_t n = g.dim();
  const Matrix g_inv = inverse(g);
  const Matrix id = Matrix::identity(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    IntVector e(n - 1);
    e[i] = 1;
    const Matrix t = make_block(id, e);
    if (!h_pattern(g * t * g_inv) || !h_pattern(g_inv * t * g)) return false;
  }
  return true;
}

std::string write_key(const SecretKey& key) {
  return std::to_string(key.n) + ' ' + std::to_string(key.conj_len) + ' ' +
         std::to_string(key.seed) + '\n' + encode(key.c);
}

namespace {

std::uint64_t parse_u64(const std::string& s) {
  const Integer v = parse_integer(s);
  if (sgn(v) < 0 || mpz_sizeinbase(v.get_mpz_t(), 2) > 64)
    throw InputInvalid("value out of range: " + s);
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, v.get_mpz_t());
  return out;
}

}  // namespace

SecretKey read_key(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  if (!std::getline(in, line)) throw InputInvalid("empty key file");
  std::istringstream head(line);
  std::string n_s, len_s, seed_s, extra;
  if (!(head >> n_s >> len_s >> seed_s) || (head >> extra))
    throw InputInvalid("bad key header: " + line);
  const std::uint64_t n = parse_u64(n_s);
  if (n < 3 || n > 64) throw InputInvalid("key dimension out of range");
  const Matrix c = read_matrix(in);
  return key_from_conjugator(n, parse_u64(len_s), parse_u64(seed_s), c);
}

std::string write_payload(const Payload& p) {
  std::string out = std::to_string(p.elements.size()) + ' ' + to_string(p.mode) + '\n';
  for (std::size_t i = 0; i < p.elements.size(); ++i) {
    if (i) out += '\n';
    if (const auto* m = std::get_if<Matrix>(&p.elements[i])) {
      out += encode(*m);
    } else {
      const Word& w = std::get<Word>(p.elements[i]);
      if (w.empty()) throw InputInvalid("cannot serialize an empty word");
      out += serialize_word(w);
    }
  }
  return out;
}

Payload read_payload(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  if (!std::getline(in, line)) throw InputInvalid("empty payload file");
  std::istringstream head(line);
  std::string count_s, mode_s, extra;
  if (!(head >> count_s >> mode_s) || (head >> extra))
    throw InputInvalid("bad payload header: " + line);
  const Integer count = parse_integer(count_s);
  Payload p;
  p.mode = parse_wire_mode(mode_s);

  std::vector<std::string> blocks;
  std::string cur;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) {
      if (!cur.empty()) blocks.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += line;
      cur += '\n';
    }
  }
  if (!cur.empty()) blocks.push_back(std::move(cur));
  if (count != static_cast<unsigned long>(blocks.size()))
    throw InputInvalid("payload header announces " + count.get_str() +
                       " elements, found " + std::to_string(blocks.size()));
  for (const auto& b : blocks) {
    if (p.mode == WireMode::Matrix)
      p.elements.emplace_back(decode(b));
    else
      p.elements.emplace_back(parse_word(b));
  }
  return p;
}

}  // namespace distcrypt
