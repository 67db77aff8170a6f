#pragma once

#include "polyspace/lengths.hpp"
#include "polyspace/numeric.hpp"
#include "polyspace/spaces.hpp"

#include <string>
#include <vector>

namespace polyspace {

/// Univariate integer polynomial in t; the Betti generating functions of the
/// polygon spaces only use even powers, planar ones use every power.
class PoincarePolynomial {
public:
    PoincarePolynomial() = default;
    explicit PoincarePolynomial(std::vector<Int> coefficients);
    static PoincarePolynomial monomial(int power, Int coefficient = 1);
    static PoincarePolynomial from_dimensions(const std::vector<int>& dims);

    bool is_zero() const { return coefficients_.empty(); }
    int degree() const { return static_cast<int>(coefficients_.size()) - 1; }
    Int coefficient(int power) const;
    const std::vector<Int>& coefficients() const { return coefficients_; }

    PoincarePolynomial operator+(const PoincarePolynomial& other) const;
    PoincarePolynomial operator-(const PoincarePolynomial& other) const;
    PoincarePolynomial operator*(const PoincarePolynomial& other) const;
    bool operator==(const PoincarePolynomial& other) const = default;

    /// Exact division; throws InexactDivisionError on a nonzero remainder.
    PoincarePolynomial exact_divide(const PoincarePolynomial& divisor) const;

    /// t^k P(1/t) for k >= degree.
    PoincarePolynomial reversed(int k) const;

    bool palindromic() const;

    /// Value at t = i for a polynomial with only even powers.
    Int evaluate_at_i() const;

    Int evaluate_at_minus_one() const;

    std::string to_string() const;  // "1 + 4t^2 + 4t^4 + t^6"

private:
    std::vector<Int> coefficients_;  // coefficients_[k] multiplies t^k; no trailing zeros
    void trim();
};

/// Betti generating function of UP, APol or Pol from the distinguished-edge
/// short poset: (1/(1-t^2)) * sum_{J in S_m} (t^{2|J|} - t^{2(m-|J|-e)}),
/// e = 2, 1, 0 for Pol, APol, UP.
PoincarePolynomial poincare(const LengthVector& alpha, SpaceTag space);

/// Klyachko's expression over the full short family:
/// (1/(t^2(t^2-1))) * ((1+t^2)^{m-1} - sum_{J in S} t^{2|J|}).
PoincarePolynomial klyachko_poincare(const LengthVector& alpha);

/// sum_{J in S_m} (-1)^{|J|}; equals the Poincare polynomial at t = i.
/// Defined for odd m (the closed space has dimension divisible by 4).
Int signature(const LengthVector& alpha);

/// Euler characteristic of the planar polygon space: the same alternating sum.
Int planar_euler(const LengthVector& alpha);

}  // namespace polyspace
