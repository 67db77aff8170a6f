#pragma once

#include "polyspace/numeric.hpp"

#include <optional>
#include <vector>

namespace polyspace {

/// Fraction-free determinant (Bareiss) of a square integer matrix.
Int bareiss_determinant(std::vector<std::vector<Int>> a);

int rank_mod2(std::vector<std::vector<Int>> a);

int rational_rank(std::vector<std::vector<Rat>> rows);

/// Signature (#positive - #negative eigenvalues) of a symmetric rational
/// matrix, computed by exact congruence diagonalization.
int symmetric_signature(std::vector<std::vector<Rat>> a);

/// A full-rank sublattice of Q^n in Hermite-echelon form: row i has its pivot
/// in column pivots[i], pivot entries positive, entries above a pivot reduced
/// into [0, pivot).
struct LatticeBasis {
    int ambient = 0;
    std::vector<std::vector<Rat>> rows;
    std::vector<int> pivots;

    int rank() const { return static_cast<int>(rows.size()); }

    /// Coordinates of v in this basis, or nullopt when v is outside the
    /// rational span. Coordinates are rational; they are integral exactly
    /// when v lies in the lattice itself.
    std::optional<std::vector<Rat>> coordinates(std::vector<Rat> v) const;
};

/// Canonical basis of the Z-span of the given rational vectors.
LatticeBasis lattice_from_generators(int ambient, const std::vector<std::vector<Rat>>& generators);

}  // namespace polyspace
