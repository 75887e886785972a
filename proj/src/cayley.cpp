#include "distcrypt/cayley.hpp"

#include <algorithm>
#include <limits>

#include "distcrypt/error.hpp"
#include "distcrypt/word.hpp"

namespace distcrypt {

std::vector<Matrix> symmetrize(std::span<const Matrix> gens) {
  std::vector<Matrix> out;
  auto add = [&](const Matrix& m) {
    if (m.is_identity()) return;
    if (std::find(out.begin(), out.end(), m) == out.end()) out.push_back(m);
  };
  for (const auto& g : gens) {
    add(g);
    add(inverse(g));
  }
  return out;
}

std::vector<Matrix> standard_generators(std::size_t n) {
  std::vector<Matrix> out;
  for (const auto& t : standard_tokens(n))
    out.push_back(Matrix::elementary(n, t.row, t.col, t.sign));
  return out;
}

namespace {

using DistanceMap = std::unordered_map<Matrix, int, MatrixHash>;

}  // namespace

std::optional<int> bfs_length(const Matrix& g, std::span<const Matrix> gens,
                              int radius, std::size_t state_cap) {
  if (radius < 0) throw InputInvalid("bfs radius must be >= 0");
  for (const auto& s : gens)
    if (s.dim() != g.dim()) throw InputInvalid("generator dimension mismatch");
  if (g.is_identity()) return 0;
  const auto sym = symmetrize(gens);

  DistanceMap fwd, bwd;
  std::vector<Matrix> ffront{Matrix::identity(g.dim())}, bfront{g};
  fwd.emplace(ffront[0], 0);
  bwd.emplace(g, 0);
  int fdepth = 0, bdepth = 0;

  while (fdepth + bdepth < radius) {
    const bool forward = ffront.size() <= bfront.size();
    DistanceMap& own = forward ? fwd : bwd;
    const DistanceMap& other = forward ? bwd : fwd;
    std::vector<Matrix>& front = forward ? ffront : bfront;
    const int depth = (forward ? fdepth : bdepth) + 1;

    int best = std::numeric_limits<int>::max();
    std::vector<Matrix> next;
    for (const auto& x : front) {
      for (const auto& s : sym) {
        Matrix y = x * s;
        if (own.contains(y)) continue;
        if (auto it = other.find(y); it != other.end())
          best = std::min(best, depth + it->second);
        own.emplace(y, depth);
        next.push_back(std::move(y));
        if (fwd.size() + bwd.size() > state_cap)
          throw ResourceCapExceeded(fwd.size() + bwd.size());
      }
    }
    front = std::move(next);
    (forward ? fdepth : bdepth) = depth;
    if (best != std::numeric_limits<int>::max()) return best;
    if (front.empty()) return std::nullopt;
  }
  return std::nullopt;
}

Ball::Ball(std::span<const Matrix> gens, int radius, std::size_t state_cap)
    : radius_(radius) {
  if (radius < 0) throw InputInvalid("ball radius must be >= 0");
  if (gens.empty()) throw InputInvalid("ball needs at least one generator");
  const auto sym = symmetrize(gens);
  const Matrix id = Matrix::identity(gens.front().dim());
  elements_.push_back(id);
  distance_.push_back(0);
  index_.emplace(id, 0);
  std::size_t begin = 0;
  for (int d = 1; d <= radius; ++d) {
    const std::size_t end = elements_.size();
    for (std::size_t i = begin; i < end; ++i) {
      for (const auto& s : sym) {
        Matrix y = elements_[i] * s;
        if (index_.contains(y)) continue;
        index_.emplace(y, elements_.size());
        elements_.push_back(std::move(y));
        distance_.push_back(d);
        if (elements_.size() > state_cap)
          throw ResourceCapExceeded(elements_.size());
      }
    }
    begin = end;
  }
}

std::optional<int> Ball::find(const Matrix& g) const {
  if (auto it = index_.find(g); it != index_.end()) return distance_[it->second];
  return std::nullopt;
}

std::size_t Ball::sphere_size(int d) const {
  return static_cast<std::size_t>(
      std::count(distance_.begin(), distance_.end(), d));
}

}  // namespace distcrypt
