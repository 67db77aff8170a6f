#pragma once

#include "polyspace/cohomology.hpp"
#include "polyspace/invariants.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace polyspace {

/// The m x m change-of-basis matrix from the symmetrized candidate basis
/// {b_i} = {(x/2) c_i + (y/2) sum_j c_j} to {R, V_1..V_{m-1}}; rows are
/// b_m, b_1, ..., b_{m-1}, columns R, V_1, ..., V_{m-1}. Entries are integers
/// because x and y share parity.
std::vector<std::vector<Int>> standardization_matrix(const Int& x, const Int& y, int m);

/// Closed form -x^{m-1} (x + y m) / 2 for the determinant of the matrix
/// above. Throws ParityViolationError unless x = y mod 2.
Int standardization_determinant(const Int& x, const Int& y, int m);

/// Searches |x|,|y| <= bound (x = y mod 2) for a determinant that becomes a
/// unit once the primes dividing n are inverted. The two guaranteed shapes
/// (2,0) for even n and (m,1) when every prime of m divides n are tried
/// first, so those witnesses are reported exactly.
std::optional<std::pair<Int, Int>> is_standardizable(const Int& n, int m, const Int& bound);

/// (1 - t^{m-1})(1 - t^{m+1}) / ((1-t^2)(1-t^4)), the Betti generating
/// function of the quotient by the full symmetric group.
PoincarePolynomial quotient_poincare(int m);

/// The quotient ring over Q: generators p (degree 4) and s_1..s_{(m-1)/2}
/// (degree 2i), the multiplication recursion relators, and the two top
/// relators in degrees m-1 and m+1.
RingPresentation invariant_presentation(int m);

/// Edge-permutation action on a rational Pol presentation: c_i -> c_{pi(i)}
/// transported to the R, V generators.
class PermutationAction {
public:
    PermutationAction(const RingPresentation& pres, std::vector<int> perm);  // perm 0-based

    const std::vector<int>& permutation() const { return perm_; }
    const GradedPolynomial& variable_image(int index) const {
        return images_[static_cast<std::size_t>(index)];
    }

    /// Multiplicative image followed by reduction to normal form.
    GradedPolynomial apply(const GradedPolynomial& p) const;

    /// Matrix of the action on the degree-d standard monomial basis
    /// (columns indexed by standard monomials, rows by their images).
    std::vector<std::vector<Rat>> matrix_on_degree(int degree) const;

private:
    const RingPresentation* pres_;
    std::vector<int> perm_;
    std::vector<GradedPolynomial> images_;
};

/// Fixed-subspace dimensions of the symmetric group acting on the rational
/// cohomology of the equilateral m-gon space, per degree 0..2(m-3), obtained
/// by averaging the permutation action. m <= 7 (cost grows with m!).
std::vector<int> invariant_dimensions(int m);

/// Reduces the x=m, y=1 candidate basis mod 2; its determinant -m^m is odd,
/// so the basis survives and the mod-2 action is the standard permutation
/// action.
bool mod2_action_is_standard(int m);

}  // namespace polyspace
