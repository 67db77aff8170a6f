#pragma once

#include "polyspace/numeric.hpp"

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace polyspace {

inline constexpr int kMaxVariables = 31;

/// Immutable list of variables with their (even or odd) degrees. The listing
/// order is the tie-break order of the monomial order below.
class VariableSet {
public:
    static std::shared_ptr<const VariableSet> make(std::vector<std::pair<std::string, int>> vars);

    int count() const { return static_cast<int>(names_.size()); }
    const std::string& name(int i) const { return names_[static_cast<std::size_t>(i)]; }
    int degree(int i) const { return degrees_[static_cast<std::size_t>(i)]; }
    int r_index() const { return r_index_; }
    int index_of(const std::string& name) const;

private:
    std::vector<std::string> names_;
    std::vector<int> degrees_;
    int r_index_ = -1;
};

using VariableSetPtr = std::shared_ptr<const VariableSet>;

VariableSetPtr spatial_variables(int m);   // R, V1..V_{m-1}, all of degree 2
VariableSetPtr planar_variables(int m);    // R, V1..V_{m-1}, all of degree 1
VariableSetPtr danilov_variables(int m);   // R, V1..V_{m-1}, U1..U_{m-1}, degree 2
VariableSetPtr chern_variables(int m);     // c1..cm degree 2, p degree 4
VariableSetPtr sigma_variables(int m);     // p degree 4, s1..s_{(m-1)/2} with deg(s_i) = 2i

class Monomial {
public:
    Monomial() = default;
    static Monomial one(const VariableSet& vars);
    static Monomial variable(const VariableSet& vars, int index, int power = 1);

    int variable_count() const { return n_; }
    int exponent(int i) const { return e_[static_cast<std::size_t>(i)]; }
    int weighted_degree() const { return wdeg_; }
    bool is_one() const { return wdeg_ == 0; }

    Monomial times(const Monomial& other) const;
    bool divides(const Monomial& other) const;
    Monomial divided_by(const Monomial& other) const;
    bool coprime_with(const Monomial& other) const;
    static Monomial lcm(const VariableSet& vars, const Monomial& a, const Monomial& b);
    static Monomial gcd(const VariableSet& vars, const Monomial& a, const Monomial& b);

    /// Largest j with R^j dividing this monomial (0 when the set has no R).
    int r_power(const VariableSet& vars) const;

    bool operator==(const Monomial& other) const;

    std::string to_string(const VariableSet& vars) const;

private:
    std::uint16_t wdeg_ = 0;
    std::uint8_t n_ = 0;
    std::array<std::uint8_t, kMaxVariables> e_{};
};

/// The R-dominant graded order: higher total (weighted) degree first; among
/// equal degrees the smaller R-exponent wins; ties broken lexicographically
/// along the declared variable order. 1 is the minimum and the order is
/// multiplicative, so it is a monomial well-order.
struct MonomialOrder {
    explicit MonomialOrder(VariableSetPtr vars_in)
        : vars(std::move(vars_in)), r_index(vars->r_index()) {}

    /// >0 when a is the larger monomial, <0 when smaller, 0 when equal.
    int compare(const Monomial& a, const Monomial& b) const;
    bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

    VariableSetPtr vars;
    int r_index;
};

struct Term {
    Monomial monomial;
    Rat coefficient;
};

/// Sparse exact polynomial, graded by the declared variable degrees, terms
/// kept in strictly descending monomial order with no zero coefficients.
class GradedPolynomial {
public:
    GradedPolynomial() = default;
    static GradedPolynomial zero(VariableSetPtr vars, Ring ring);
    static GradedPolynomial constant(VariableSetPtr vars, Ring ring, Rat value);
    static GradedPolynomial variable(VariableSetPtr vars, Ring ring, int index, int power = 1);
    static GradedPolynomial term(VariableSetPtr vars, Ring ring, Monomial monomial, Rat coefficient);
    static GradedPolynomial from_terms(VariableSetPtr vars, Ring ring, std::vector<Term> terms);

    const VariableSetPtr& vars() const { return vars_; }
    Ring ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    const Monomial& leading_monomial() const;
    const Rat& leading_coefficient() const;

    /// Weighted degree of the leading term; -1 for the zero polynomial.
    int degree() const;
    bool is_homogeneous() const;

    GradedPolynomial operator+(const GradedPolynomial& other) const;
    GradedPolynomial operator-(const GradedPolynomial& other) const;
    GradedPolynomial operator-() const;
    GradedPolynomial operator*(const GradedPolynomial& other) const;
    bool operator==(const GradedPolynomial& other) const;

    GradedPolynomial scaled(const Rat& factor) const;
    GradedPolynomial times_term(const Monomial& monomial, const Rat& coefficient) const;
    GradedPolynomial power(int n) const;

    /// Homomorphic substitution of one variable by a homogeneous polynomial
    /// of the same degree. Throws GradingMismatchError otherwise.
    GradedPolynomial substitute(int var_index, const GradedPolynomial& replacement) const;

    GradedPolynomial homogeneous_component(int degree) const;

    /// Same terms, coefficients renormalized into another ring.
    GradedPolynomial with_ring(Ring target) const;

    /// Transports the polynomial to another variable set, matching variables
    /// by name; variables absent from the target must not occur.
    GradedPolynomial mapped_to(VariableSetPtr target) const;

    std::string to_string() const;

private:
    VariableSetPtr vars_;
    Ring ring_ = Ring::Z;
    std::vector<Term> terms_;

    void normalize();
};

}  // namespace polyspace
