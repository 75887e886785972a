#pragma once

// Attack harnesses. Eve's lattice reconstruction shows why the basic
// protocol (no decoys, H itself on the wire) leaks the key subgroup; the KPA
// search builds generating sets S_j = S_{j-1} + {t_j} that keep a list of
// word lengths fixed while the metrics themselves differ.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "distcrypt/cayley.hpp"
#include "distcrypt/matrix.hpp"

namespace distcrypt {

/// Elements seen on the wire, labels withheld.
struct Intercept {
  std::vector<Matrix> elements;
};

struct EveReconstruction {
  std::vector<IntVector> basis;      ///< Hermite form of the recovered lattice
  std::vector<std::size_t> skipped;  ///< intercepts not of the form M(Id, v)
};

/// Unconjugates each element by the known conjugator c (h -> c h c^-1), reads
/// v off M(Id, v) and returns the canonical basis of the span.
EveReconstruction eve_reconstruct(const Intercept& intercepts,
                                  const std::optional<Matrix>& known_conjugator);

struct EveStep {
  std::size_t intercept_count = 0;
  Integer lattice_index;  ///< 0 while the rank is deficient
  bool recovered_full = false;
};

struct EveReport {
  std::size_t trial = 0;
  std::size_t dim = 0;  ///< n - 1
  std::vector<EveStep> trajectory;
  std::optional<std::size_t> first_full;
  std::vector<IntVector> basis;
};

/// Basic protocol with c = Id: message_count seeded messages uniform in
/// [1, max_message], translations from choose_translation, each intercepted.
EveReport attack_success_experiment(std::uint64_t seed,
                                    std::size_t message_count,
                                    std::size_t n = 3,
                                    const Integer& max_message = 1'000'000'000);

/// Rows "trial,intercept_count,lattice_index,recovered_full" with header.
std::string eve_csv(std::span<const EveReport> reports);
std::string eve_summary(std::span<const EveReport> reports);

/// Against the secure protocol Eve only gets a statistic: how often payload
/// elements show the bare M(Id, v) pattern without unconjugation.
struct PatternSurvey {
  std::size_t payloads = 0;
  std::size_t elements = 0;
  std::size_t bare_pattern = 0;
};

PatternSurvey secure_pattern_survey(std::uint64_t seed, std::size_t messages,
                                    std::size_t n, std::size_t conj_len,
                                    std::size_t decoys);

/// Word length of g over base + extra (inverses added), if at most radius.
std::optional<int> length_with_extended_set(
    const Matrix& g, std::span<const Matrix> base, std::span<const Matrix> extra,
    int radius, std::size_t state_cap = kDefaultStateCap);

struct LengthConstraint {
  Matrix g;
  int k = 1;
};

struct Extension {
  Matrix t;
  /// witness[q] = length of t under S_q for q = 0 .. j, where t = t_j (so
  /// the last entry is 1 and every earlier one is > 1).
  std::vector<int> witness;
};

struct KpaResult {
  std::vector<Extension> extensions;
  std::size_t candidates_examined = 0;
  bool partial = false;  ///< pool ran out before count extensions
};

/// Whether every constraint keeps its exact length over gens.
bool constraints_hold(std::span<const LengthConstraint> constraints,
                      std::span<const Matrix> gens,
                      std::size_t state_cap = kDefaultStateCap);

/// Walks the radius-pool_radius ball of base in BFS order and accepts t when
/// it is not already of length <= 1 under the current set and adding it keeps
/// every constraint. Throws InputInvalid if the constraints fail over base.
KpaResult extend_generating_set(std::span<const LengthConstraint> constraints,
                                std::span<const Matrix> base, int pool_radius,
                                std::size_t count,
                                std::size_t state_cap = kDefaultStateCap);

/// count distinct non-identity elements of the base ball with length <=
/// max_length, each constrained to its exact length.
std::vector<LengthConstraint> random_constraints(
    std::uint64_t seed, std::size_t count, std::span<const Matrix> base,
    int max_length, std::size_t state_cap = kDefaultStateCap);

/// Recomputes every claim of a KPA result by fresh searches.
bool verify_kpa(const KpaResult& r, std::span<const LengthConstraint> constraints,
                std::span<const Matrix> base,
                std::size_t state_cap = kDefaultStateCap);

std::string kpa_report(const KpaResult& r,
                       std::span<const LengthConstraint> constraints);

}  // namespace distcrypt
