#include "distcrypt/attack.hpp"

#include <algorithm>
#include <sstream>

#include "distcrypt/error.hpp"
#include "distcrypt/lattice.hpp"
#include "distcrypt/protocol.hpp"
#include "distcrypt/rng.hpp"

namespace distcrypt {

EveReconstruction eve_reconstruct(const Intercept& intercepts,
                                  const std::optional<Matrix>& known_conjugator) {
  EveReconstruction out;
  std::optional<Matrix> c_inv;
  if (known_conjugator) c_inv = inverse(*known_conjugator);
  std::vector<IntVector> vs;
  for (std::size_t i = 0; i < intercepts.elements.size(); ++i) {
    const Matrix& h = intercepts.elements[i];
    std::optional<IntVector> v;
    if (!known_conjugator)
      v = h_pattern(h);
    else if (h.dim() == known_conjugator->dim())
      v = h_pattern(*known_conjugator * h * *c_inv);
    if (!v || (!vs.empty() && v->size() != vs.front().size())) {
      out.skipped.push_back(i);
      continue;
    }
    vs.push_back(std::move(*v));
  }
  out.basis = hermite_normal_form(std::move(vs));
  return out;
}

EveReport attack_success_experiment(std::uint64_t seed,
                                    std::size_t message_count, std::size_t n,
                                    const Integer& max_message) {
  if (n < 3) throw InputInvalid("dimension must be at least 3");
  if (max_message < 1) throw InputInvalid("max message must be >= 1");
  EveReport rep;
  rep.dim = n - 1;
  Rng rng(seed);
  const Matrix id = Matrix::identity(n - 1);
  Intercept seen;
  for (std::size_t m = 1; m <= message_count; ++m) {
    const Integer msg = rng.range(Integer(1), max_message);
    seen.elements.push_back(make_block(id, choose_translation(rng, msg, n - 1)));
    auto rec = eve_reconstruct(seen, std::nullopt);
    EveStep step;
    step.intercept_count = m;
    step.lattice_index = lattice_index(rec.basis, n - 1);
    step.recovered_full = step.lattice_index == 1;
    if (step.recovered_full && !rep.first_full) rep.first_full = m;
    rep.trajectory.push_back(step);
    rep.basis = std::move(rec.basis);
  }
  return rep;
}

std::string eve_csv(std::span<const EveReport> reports) {
  std::string out = "trial,intercept_count,lattice_index,recovered_full\n";
  for (const auto& r : reports)
    for (const auto& s : r.trajectory)
      out += std::to_string(r.trial) + ',' + std::to_string(s.intercept_count) +
             ',' + s.lattice_index.get_str() + ',' +
             (s.recovered_full ? "1" : "0") + '\n';
  return out;
}

std::string eve_summary(std::span<const EveReport> reports) {
  std::ostringstream os;
  std::size_t full = 0;
  for (const auto& r : reports) {
    os << "trial " << r.trial << ": ";
    if (r.first_full) {
      ++full;
      os << "full lattice after " << *r.first_full << " intercepts\n";
    } else if (r.trajectory.empty()) {
      os << "no intercepts, empty lattice\n";
    } else {
      os << "partial lattice, index "
         << (sgn(r.trajectory.back().lattice_index) == 0
                 ? std::string("infinite")
                 : r.trajectory.back().lattice_index.get_str())
         << ", basis";
      for (const auto& b : r.basis) os << ' ' << format_vector(b);
      os << '\n';
    }
  }
  os << full << '/' << reports.size() << " trials recovered the full lattice\n";
  return os.str();
}

PatternSurvey secure_pattern_survey(std::uint64_t seed, std::size_t messages,
                                    std::size_t n, std::size_t conj_len,
                                    std::size_t decoys) {
  PatternSurvey s;
  const SecretKey key = keygen(seed, n, conj_len);
  Rng rng(seed ^ 0x9e3779b97f4a7c15ULL);
  for (std::size_t m = 0; m < messages; ++m) {
    const Integer msg = rng.range(Integer(1), Integer(1'000'000));
    const Payload p = encrypt(key, msg, {decoys, WireMode::Matrix}, rng.next());
    ++s.payloads;
    for (const auto& e : p.elements) {
      ++s.elements;
      if (h_pattern(std::get<Matrix>(e))) ++s.bare_pattern;
    }
  }
  return s;
}

std::optional<int> length_with_extended_set(const Matrix& g,
                                            std::span<const Matrix> base,
                                            std::span<const Matrix> extra,
                                            int radius, std::size_t state_cap) {
  std::vector<Matrix> gens(base.begin(), base.end());
  gens.insert(gens.end(), extra.begin(), extra.end());
  return bfs_length(g, gens, radius, state_cap);
}

bool constraints_hold(std::span<const LengthConstraint> constraints,
                      std::span<const Matrix> gens, std::size_t state_cap) {
  for (const auto& c : constraints)
    if (bfs_length(c.g, gens, c.k, state_cap) != c.k) return false;
  return true;
}

namespace {

void check_constraints(std::span<const LengthConstraint> constraints,
                       std::span<const Matrix> base, std::size_t state_cap) {
  for (const auto& c : constraints) {
    if (c.k < 1) throw InputInvalid("constraint length must be >= 1");
    if (c.g.is_identity()) throw InputInvalid("constraint element is Id");
    const auto len = bfs_length(c.g, base, c.k, state_cap);
    if (len != c.k)
      throw InputInvalid("constraint fails over the base set: length " +
                         (len ? std::to_string(*len) : "> " + std::to_string(c.k)) +
                         ", required " + std::to_string(c.k));
  }
}

}  // namespace

KpaResult extend_generating_set(std::span<const LengthConstraint> constraints,
                                std::span<const Matrix> base, int pool_radius,
                                std::size_t count, std::size_t state_cap) {
  if (base.empty()) throw InputInvalid("empty base generating set");
  check_constraints(constraints, base, state_cap);
  for (const auto& c : constraints)
    if (c.k > pool_radius)
      throw InputInvalid("pool radius must be at least every constraint length");

  KpaResult res;
  const Ball pool(base, pool_radius, state_cap);
  std::vector<std::vector<Matrix>> sets{std::vector<Matrix>(base.begin(), base.end())};
  for (std::size_t i = 0; i < pool.size() && res.extensions.size() < count; ++i) {
    if (pool.distance(i) < 2) continue;
    const Matrix& t = pool.element(i);
    ++res.candidates_examined;
    const auto& current = sets.back();
    // Length under the current set; at most the base distance.
    const auto cur_len = bfs_length(t, current, pool.distance(i), state_cap);
    if (cur_len && *cur_len <= 1) continue;
    std::vector<Matrix> next = current;
    next.push_back(t);
    if (!constraints_hold(constraints, next, state_cap)) continue;

    Extension ext;
    ext.t = t;
    for (const auto& s : sets)
      ext.witness.push_back(*bfs_length(t, s, pool.distance(i), state_cap));
    ext.witness.push_back(1);
    res.extensions.push_back(std::move(ext));
    sets.push_back(std::move(next));
  }
  res.partial = res.extensions.size() < count;
  return res;
}

std::vector<LengthConstraint> random_constraints(std::uint64_t seed,
                                                 std::size_t count,
                                                 std::span<const Matrix> base,
                                                 int max_length,
                                                 std::size_t state_cap) {
  if (max_length < 1) throw InputInvalid("max length must be >= 1");
  const Ball ball(base, max_length, state_cap);
  if (ball.size() < count + 1)
    throw InputInvalid("ball too small for the requested constraints");
  Rng rng(seed);
  std::vector<std::size_t> picked;
  std::vector<LengthConstraint> out;
  while (out.size() < count) {
    const std::size_t i = 1 + rng.below(ball.size() - 1);
    if (std::find(picked.begin(), picked.end(), i) != picked.end()) continue;
    picked.push_back(i);
    out.push_back({ball.element(i), ball.distance(i)});
  }
  return out;
}

bool verify_kpa(const KpaResult& r, std::span<const LengthConstraint> constraints,
                std::span<const Matrix> base, std::size_t state_cap) {
  std::vector<std::vector<Matrix>> sets{std::vector<Matrix>(base.begin(), base.end())};
  for (const auto& e : r.extensions) {
    auto next = sets.back();
    next.push_back(e.t);
    sets.push_back(std::move(next));
  }
  for (const auto& s : sets)
    if (!constraints_hold(constraints, s, state_cap)) return false;
  for (std::size_t j = 0; j < r.extensions.size(); ++j) {
    const auto& e = r.extensions[j];
    if (e.witness.size() != j + 2 || e.witness.back() != 1) return false;
    const int cap = *std::max_element(e.witness.begin(), e.witness.end());
    for (std::size_t q = 0; q < e.witness.size(); ++q) {
      const auto len = bfs_length(e.t, sets[q], cap, state_cap);
      if (len != e.witness[q]) return false;
      if (q + 1 < e.witness.size() && *len <= 1) return false;
    }
  }
  return true;
}

std::string kpa_report(const KpaResult& r,
                       std::span<const LengthConstraint> constraints) {
  std::ostringstream os;
  os << "constraints " << constraints.size() << '\n';
  for (const auto& c : constraints) os << c.k << '\n' << encode(c.g);
  os << "extensions " << r.extensions.size()
     << (r.partial ? " partial" : " complete") << '\n';
  os << "candidates_examined " << r.candidates_examined << '\n';
  for (std::size_t j = 0; j < r.extensions.size(); ++j) {
    const auto& e = r.extensions[j];
    os << "t" << (j + 1) << '\n' << encode(e.t) << "witness";
    for (std::size_t q = 0; q < e.witness.size(); ++q)
      os << " S" << q << '=' << e.witness[q];
    os << '\n';
  }
  return os.str();
}

}  // namespace distcrypt
