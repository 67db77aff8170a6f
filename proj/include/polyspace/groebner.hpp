#pragma once

#include "polyspace/polyring.hpp"

#include <vector>

namespace polyspace {

/// An ordered relator list for the R-dominant graded order. `confluent` is
/// set by buchberger() once every S-polynomial of basis pairs reduces to 0;
/// all leading coefficients are units (+-1 over Z, nonzero over Q, 1 over Z2).
struct GroebnerBasis {
    VariableSetPtr vars;
    Ring ring = Ring::Z;
    std::vector<GradedPolynomial> relators;  // ascending leading monomials, monic
    bool confluent = false;
};

/// Deterministic normal form: repeatedly reduce the largest reducible
/// monomial by the first applicable relator. Works against any relator list;
/// the result is a true normal form (unique) only for confluent bases.
/// Throws NonUnitLeadingCoefficientError when a needed division fails.
GradedPolynomial reduce(const GradedPolynomial& p, const std::vector<GradedPolynomial>& relators);
GradedPolynomial reduce(const GradedPolynomial& p, const GroebnerBasis& basis);

/// S(r1,r2) = (t2/g)(r1 - t1) - (t1/g)(r2 - t2), t_i the leading terms and
/// g = gcd of the leading monomials. Lies in the ideal generated by r1, r2.
GradedPolynomial s_polynomial(const GradedPolynomial& r1, const GradedPolynomial& r2,
                              const MonomialOrder& order);

/// Buchberger completion with the degree-ascending pair queue, the coprime
/// skip and the chain criterion, followed by interreduction; the returned
/// basis is the canonical reduced basis of the ideal (independent of the
/// generator order). Generators must be homogeneous.
GroebnerBasis buchberger(std::vector<GradedPolynomial> generators);

/// { r / gcd(r, R^k) }: generates the ideal quotient I : R^k whenever the
/// S-polynomials among relators not divisible by R^k reduce to zero, which
/// the presentation relator families satisfy by construction.
std::vector<GradedPolynomial> quotient_by_r_power(const std::vector<GradedPolynomial>& relators,
                                                  int k);
std::vector<GradedPolynomial> quotient_by_r_power(const GroebnerBasis& basis, int k);

/// The staircase: minimal monomial generators of the leading-term ideal plus
/// enumeration of standard monomials (those divisible by no leading monomial).
struct Staircase {
    VariableSetPtr vars;
    std::vector<Monomial> leading;

    bool is_standard(const Monomial& m) const;
    std::vector<Monomial> standard_monomials(int degree) const;
};

Staircase staircase(const GroebnerBasis& basis);

/// Ranks of the graded quotient in degrees 0..up_to (inclusive), by counting
/// standard monomials. Requires a confluent basis.
std::vector<int> graded_dimensions(const GroebnerBasis& basis, int up_to);

/// All monomials of the given weighted degree, in descending monomial order.
std::vector<Monomial> monomials_of_degree(const VariableSetPtr& vars, int degree);

}  // namespace polyspace
