#pragma once

// Exact word lengths in a finitely generated matrix group by breadth-first
// search over the Cayley graph. States are deduplicated by exact matrix
// equality (equivalently, by canonical encoding).

#include <cstddef>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "distcrypt/matrix.hpp"

namespace distcrypt {

inline constexpr std::size_t kDefaultStateCap = 5'000'000;

/// Adds missing inverses and drops duplicates and the identity, keeping the
/// first-seen order so searches stay deterministic.
std::vector<Matrix> symmetrize(std::span<const Matrix> gens);

/// E_ij(+-1) for all i != j.
std::vector<Matrix> standard_generators(std::size_t n);

/// Exact length of g over gens (inverses added automatically) if it is at
/// most radius, otherwise nullopt. Bidirectional search; throws
/// ResourceCapExceeded when more than state_cap states are stored.
std::optional<int> bfs_length(const Matrix& g, std::span<const Matrix> gens,
                              int radius,
                              std::size_t state_cap = kDefaultStateCap);

/// The ball of a given radius around Id, with exact distances, in BFS
/// discovery order.
class Ball {
 public:
  Ball(std::span<const Matrix> gens, int radius,
       std::size_t state_cap = kDefaultStateCap);

  std::size_t size() const noexcept { return elements_.size(); }
  int radius() const noexcept { return radius_; }
  const Matrix& element(std::size_t i) const { return elements_[i]; }
  int distance(std::size_t i) const { return distance_[i]; }
  /// Distance of g if g lies in the ball.
  std::optional<int> find(const Matrix& g) const;
  /// Number of elements at exactly distance d.
  std::size_t sphere_size(int d) const;

 private:
  int radius_;
  std::vector<Matrix> elements_;
  std::vector<int> distance_;
  std::unordered_map<Matrix, std::size_t, MatrixHash> index_;
};

}  // namespace distcrypt
