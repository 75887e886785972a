#pragma once

#include <cstddef>
#include <vector>

#include "distcrypt/matrix.hpp"

namespace distcrypt {

/// Canonical basis of the row lattice: row echelon form with positive
/// pivots, entries above each pivot reduced into [0, pivot), zero rows
/// dropped. Two generating sets of the same lattice give the same result.
std::vector<IntVector> hermite_normal_form(std::vector<IntVector> rows);

/// [Z^dim : L] for a basis in Hermite form; 0 when L has rank < dim.
Integer lattice_index(const std::vector<IntVector>& hnf, std::size_t dim);

/// Whether v is an integer combination of the rows of a Hermite basis.
bool in_lattice(const std::vector<IntVector>& hnf, IntVector v);

}  // namespace distcrypt
