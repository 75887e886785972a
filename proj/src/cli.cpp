#include "distcrypt/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "distcrypt/attack.hpp"
#include "distcrypt/distortion.hpp"
#include "distcrypt/error.hpp"
#include "distcrypt/protocol.hpp"
#include "distcrypt/uelem.hpp"

namespace distcrypt {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputInvalid("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Writes to path, or to out when path is empty or "-".
void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InputInvalid("cannot write " + path);
  f << text;
  if (!f) throw InputInvalid("write failed for " + path);
}

// Constraint file: blocks of a length line followed by an encoded matrix.
std::vector<LengthConstraint> read_constraints(const std::string& text) {
  std::istringstream in(text);
  std::vector<LengthConstraint> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const Integer k = parse_integer(line);
    if (k < 1 || k > 64) throw InputInvalid("constraint length out of range");
    out.push_back({read_matrix(in), static_cast<int>(k.get_si())});
  }
  if (out.empty()) throw InputInvalid("no constraints in file");
  return out;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

struct Options {
  std::uint64_t seed = 0;
  std::size_t n = 3;
  std::size_t conj_len = 16;
  std::size_t decoys = 8;
  std::string mode = "matrix";
  std::string key_path, payload_path, out_path, input_path, csv_path;
  std::string message, vector;
  int k_min = 4, k_max = 40;
  int pool_radius = 4, max_length = 4;
  std::size_t count = 3, constraint_count = 3;
  std::size_t state_cap = kDefaultStateCap;
  std::size_t messages = 20, trials = 1;
  std::string max_message = "1000000000";
  bool secure = false;
  std::string power;
};

int cmd_keygen(const Options& o, std::ostream& out) {
  emit(o.out_path, write_key(keygen(o.seed, o.n, o.conj_len)), out);
  return kExitOk;
}

int cmd_encrypt(const Options& o, std::ostream& out, std::ostream& err) {
  const SecretKey key = read_key(read_file(o.key_path));
  const Integer msg = parse_integer(o.message);
  const Payload p =
      encrypt(key, msg, {o.decoys, parse_wire_mode(o.mode)}, o.seed);
  if (p.mode == WireMode::Word)
    for (const auto& e : p.elements)
      if (auto m = membership(key, element_matrix(key, e)))
        err << "payload word length " << std::get<Word>(e).length() << '\n';
  emit(o.out_path, write_payload(p), out);
  return kExitOk;
}

int cmd_decrypt(const Options& o, std::ostream& out) {
  const SecretKey key = read_key(read_file(o.key_path));
  const Payload p = read_payload(read_file(o.payload_path));
  out << decrypt(key, p).get_str() << '\n';
  return kExitOk;
}

int cmd_compress(const Options& o, std::ostream& out, std::ostream& err) {
  const IntVector v = parse_vector(o.vector);
  const Word w = compress_translation(v);
  const std::size_t n = v.size() + 1;
  if (evaluate(w, n) != make_block(Matrix::identity(n - 1), v))
    throw Error("compressed word does not evaluate to M(Id, v)");
  err << "length " << w.length() << " bound "
      << compression_bound(n, linf_norm(v)) << '\n';
  emit(o.out_path, serialize_word(w), out);
  return kExitOk;
}

int cmd_bench(const Options& o, std::ostream& out) {
  if (o.k_min < 0 || o.k_max < o.k_min || o.k_max > 4096)
    throw InputInvalid("bad k range");
  if (o.n < 3) throw InputInvalid("n must be >= 3");
  std::ostringstream csv;
  csv << "n_value,vector_norm,word_length,log2_norm,ratio,bound\n";
  csv.precision(6);
  csv << std::fixed;
  const Matrix id = Matrix::identity(o.n - 1);
  for (int k = o.k_min; k <= o.k_max; ++k) {
    IntVector v(o.n - 1);
    v[0] = Integer(1) << k;
    const Word w = compress_translation(v);
    if (evaluate(w, o.n) != make_block(id, v))
      throw Error("soundness gate failed at k = " + std::to_string(k));
    const double lg = log2_1p(v[0]);
    csv << v[0].get_str() << ',' << l1_norm(v).get_str() << ',' << w.length()
        << ',' << lg << ',' << static_cast<double>(w.length()) / lg << ','
        << compression_bound(o.n, v[0]) << '\n';
  }
  emit(o.out_path, csv.str(), out);
  return kExitOk;
}

int cmd_kpa(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.n < 2) throw InputInvalid("n must be >= 2");
  const auto base = standard_generators(o.n);
  const auto constraints =
      o.input_path.empty()
          ? random_constraints(o.seed, o.constraint_count, base, o.max_length,
                               o.state_cap)
          : read_constraints(read_file(o.input_path));
  for (const auto& c : constraints)
    if (c.g.dim() != o.n) throw InputInvalid("constraint dimension mismatch");
  const KpaResult r =
      extend_generating_set(constraints, base, o.pool_radius, o.count, o.state_cap);
  emit(o.out_path, kpa_report(r, constraints), out);
  if (r.partial) {
    err << "pool exhausted: " << r.extensions.size() << " of " << o.count
        << " extensions found\n";
    return kExitPartial;
  }
  return kExitOk;
}

int cmd_eve(const Options& o, std::ostream& out) {
  if (o.secure) {
    const PatternSurvey s =
        secure_pattern_survey(o.seed, o.messages, o.n, o.conj_len, o.decoys);
    std::ostringstream os;
    os << "payloads " << s.payloads << "\nelements " << s.elements
       << "\nbare_pattern " << s.bare_pattern << '\n';
    emit(o.out_path, os.str(), out);
    return kExitOk;
  }
  const Integer max_message = parse_integer(o.max_message);
  std::vector<EveReport> reports;
  for (std::size_t t = 0; t < o.trials; ++t) {
    EveReport r = attack_success_experiment(o.seed + t, o.messages, o.n, max_message);
    r.trial = t;
    reports.push_back(std::move(r));
  }
  if (!o.csv_path.empty()) emit(o.csv_path, eve_csv(reports), out);
  emit(o.out_path, eve_summary(reports), out);
  return kExitOk;
}

int cmd_uelem(const Options& o, std::ostream& out) {
  const PolyMat u = decode_polymat(read_file(o.input_path));
  std::ostringstream os;
  os << "dimension " << u.dim() << '\n';
  os << "determinant " << encode_poly(determinant(u)) << '\n';
  const bool uni = is_unipotent_poly(u);
  const bool vu = is_virtually_unipotent_poly(u);
  os << "unipotent " << yes_no(uni) << '\n';
  os << "virtually_unipotent " << yes_no(vu) << '\n';
  for (long k = -3; k <= 3; ++k)
    os << "eval " << k << " virtually_unipotent "
       << yes_no(is_virtually_unipotent(eval_hom(u, k))) << '\n';
  if (!o.power.empty()) {
    const Integer q = parse_integer(o.power);
    if (!uni) throw InputInvalid("--power needs a unipotent matrix");
    if (abs(q) > 4096) throw InputInvalid("--power must satisfy |q| <= 4096");
    const PolyMat binom = unipotent_power(u, q);
    const PolyMat base = sgn(q) < 0 ? inverse(u) : u;
    const PolyMat iter = power(base, Integer(abs(q)).get_ui());
    os << "power " << q.get_str() << " binomial_matches_iterated "
       << yes_no(binom == iter) << '\n';
    os << encode(binom);
  }
  emit(o.out_path, os.str(), out);
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Distorted-subgroup encryption toolkit"};
  app.require_subcommand(1);
  app.set_config("--config", "", "TOML/INI file mirroring the flags");
  Options o;

  auto* keygen_cmd = app.add_subcommand("keygen", "Generate a secret key");
  keygen_cmd->add_option("--seed", o.seed)->required();
  keygen_cmd->add_option("--n", o.n, "matrix dimension")->capture_default_str()
      ->check(CLI::Range(3, 64));
  keygen_cmd->add_option("--conj-len", o.conj_len)->capture_default_str()
      ->check(CLI::Range(0, 100000));
  keygen_cmd->add_option("--out", o.out_path);

  auto* enc = app.add_subcommand("encrypt", "Encrypt a positive integer");
  enc->add_option("--key", o.key_path)->required();
  enc->add_option("--message", o.message)->required();
  enc->add_option("--seed", o.seed)->required();
  enc->add_option("--decoys", o.decoys)->capture_default_str()
      ->check(CLI::Range(0, 10000));
  enc->add_option("--mode", o.mode)->capture_default_str()
      ->check(CLI::IsMember({"matrix", "word"}));
  enc->add_option("--out", o.out_path);

  auto* dec = app.add_subcommand("decrypt", "Recover the message");
  dec->add_option("--key", o.key_path)->required();
  dec->add_option("--payload", o.payload_path)->required();

  auto* comp = app.add_subcommand("compress", "Short word for M(Id, v)");
  comp->add_option("--vector", o.vector, "entries, comma separated")->required();
  comp->add_option("--out", o.out_path);

  auto* bench = app.add_subcommand("bench-distortion",
                                   "Word lengths for v = (2^k, 0, ...)");
  bench->add_option("--n", o.n)->capture_default_str()->check(CLI::Range(3, 64));
  bench->add_option("--k-min", o.k_min)->capture_default_str();
  bench->add_option("--k-max", o.k_max)->capture_default_str();
  bench->add_option("--out", o.out_path);

  auto* kpa = app.add_subcommand("kpa", "Length-preserving generating sets");
  kpa->add_option("--seed", o.seed);
  kpa->add_option("--n", o.n)->capture_default_str()->check(CLI::Range(2, 8));
  kpa->add_option("--constraints", o.input_path, "file of 'k' + matrix blocks");
  kpa->add_option("--constraint-count", o.constraint_count)->capture_default_str();
  kpa->add_option("--max-length", o.max_length)->capture_default_str()
      ->check(CLI::Range(1, 8));
  kpa->add_option("--pool-radius", o.pool_radius)->capture_default_str()
      ->check(CLI::Range(1, 8));
  kpa->add_option("--count", o.count)->capture_default_str();
  kpa->add_option("--state-cap", o.state_cap)->capture_default_str();
  kpa->add_option("--out", o.out_path);
  kpa->callback([&] {
    if (o.input_path.empty() && kpa->count("--seed") == 0)
      throw CLI::ValidationError("kpa", "--seed is required without --constraints");
  });

  auto* eve = app.add_subcommand("eve", "Eve's lattice reconstruction");
  eve->add_option("--seed", o.seed)->required();
  eve->add_option("--n", o.n)->capture_default_str()->check(CLI::Range(3, 64));
  eve->add_option("--messages", o.messages)->capture_default_str();
  eve->add_option("--trials", o.trials)->capture_default_str();
  eve->add_option("--max-message", o.max_message)->capture_default_str();
  eve->add_flag("--secure", o.secure, "pattern survey against the full protocol");
  eve->add_option("--conj-len", o.conj_len)->capture_default_str();
  eve->add_option("--decoys", o.decoys)->capture_default_str();
  eve->add_option("--csv", o.csv_path);
  eve->add_option("--out", o.out_path);

  auto* ue = app.add_subcommand("uelem-check", "Certify a matrix over Z[x]");
  ue->add_option("--input", o.input_path)->required();
  ue->add_option("--power", o.power, "compare binomial and iterated powers");
  ue->add_option("--out", o.out_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputInvalid;
  }

  try {
    if (*keygen_cmd) return cmd_keygen(o, out);
    if (*enc) return cmd_encrypt(o, out, err);
    if (*dec) return cmd_decrypt(o, out);
    if (*comp) return cmd_compress(o, out, err);
    if (*bench) return cmd_bench(o, out);
    if (*kpa) return cmd_kpa(o, out, err);
    if (*eve) return cmd_eve(o, out);
    if (*ue) return cmd_uelem(o, out);
  } catch (const InputInvalid& e) {
    err << "input-invalid: " << e.what() << '\n';
    return kExitInputInvalid;
  } catch (const ProtocolError& e) {
    err << "protocol-error: " << e.what() << '\n';
    return kExitProtocol;
  } catch (const ResourceCapExceeded& e) {
    err << "resource-cap: " << e.what() << '\n';
    return kExitResourceCap;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitFailure;
}

}  // namespace distcrypt
