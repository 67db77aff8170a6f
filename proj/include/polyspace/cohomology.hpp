#pragma once

#include "polyspace/groebner.hpp"
#include "polyspace/invariants.hpp"
#include "polyspace/lengths.hpp"
#include "polyspace/linalg.hpp"
#include "polyspace/spaces.hpp"

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace polyspace {

/// The three relator families presenting H*(UP(alpha)):
///   squares        V_i^2 + R V_i                        (i = 1..m-1)
///   long_monomials prod_{i in L} V_i                    (minimal L in L_m)
///   run_relators   sum_{S in L, S in S_m} (prod V) R^{|L-S|+1}
///                                                       (minimal long L in {1..m-1})
/// Dividing the run relators by R (or R^2) gives the APol (or Pol) families.
struct RelatorFamilies {
    std::vector<GradedPolynomial> squares;
    std::vector<GradedPolynomial> long_monomials;
    std::vector<GradedPolynomial> run_relators;

    std::vector<GradedPolynomial> all() const;
};

RelatorFamilies up_relator_families(const LengthVector& alpha, const VariableSetPtr& vars, Ring ring);

/// The facet presentation of the toric ambient space, kept around as the
/// intermediate from which the R/V form is derived by substituting
/// U_i -> V_i + R.
struct DanilovPresentation {
    VariableSetPtr vars;  // R, V_i, U_i
    std::vector<GradedPolynomial> linear;         // U_i - V_i - R
    std::vector<GradedPolynomial> opposite_pairs; // U_i V_i
    std::vector<GradedPolynomial> down_runs;      // prod_{i in L} V_i, minimal L in L_m
    std::vector<GradedPolynomial> up_runs;        // R prod_{i in L} U_i, minimal long L
};

DanilovPresentation danilov_presentation(const LengthVector& alpha);

struct CohomologyClass {
    GradedPolynomial normal_form;
    int degree = 0;
};

/// Per-degree integral data: the image lattice of the integer polynomials
/// inside the rational normal-form coordinates. When the completion stayed
/// over Z this is the standard-monomial lattice itself; after a fallback to
/// Q it recovers the correct integral structure (the quotient is free, so
/// the integral ring embeds in its rationalization).
struct IntegralStructure {
    std::vector<LatticeBasis> lattice;  // indexed by degree 0..top_degree
    int top_orientation = 1;            // sign applied to the top lattice generator
};

class RingPresentation {
public:
    SpaceTag space = SpaceTag::Pol;
    Ring coefficient_ring = Ring::Z;
    VariableSetPtr vars;
    std::optional<LengthVector> alpha;
    std::vector<GradedPolynomial> relators;  // defining family, before completion
    GroebnerBasis basis;                     // confluent
    bool basis_rationalized = false;         // completion fell back from Z to Q
    bool zero_ring = false;
    int top_degree = 0;
    int degree_step = 2;                     // 1 for the planar ring
    std::vector<int> dimensions;             // per degree, 0..top_degree
    std::vector<std::vector<Monomial>> graded_basis;
    std::vector<std::string> notes;

    PoincarePolynomial poincare_polynomial() const;

    /// Total rank of the quotient.
    int total_dimension() const;

    /// Normal form against the completed basis. Accepts polynomials over Z
    /// or Q for integral presentations (reduction happens over Q when either
    /// the basis or the input is rational).
    GradedPolynomial normal_form(const GradedPolynomial& p) const;

    CohomologyClass make_class(const GradedPolynomial& p) const;

    /// Coordinates of a homogeneous normal form over the standard monomials
    /// of its degree.
    std::vector<Rat> nf_vector(const GradedPolynomial& nf, int degree) const;

    const IntegralStructure& integral() const;

    /// Lattice coordinates of a homogeneous class; entries are integral for
    /// integral classes.
    std::vector<Rat> class_coordinates(const GradedPolynomial& p, int degree) const;

    /// Coordinate against the oriented top generator.
    Rat top_coordinate(const GradedPolynomial& p) const;

private:
    struct IntegralCache {
        std::once_flag once;
        IntegralStructure value;
    };
    std::shared_ptr<IntegralCache> integral_cache_ = std::make_shared<IntegralCache>();
};

CohomologyClass cup_product(const CohomologyClass& a, const CohomologyClass& b,
                            const RingPresentation& pres);

RingPresentation build_up_presentation(const LengthVector& alpha);
RingPresentation build_apol_presentation(const LengthVector& alpha);
RingPresentation build_pol_presentation(const LengthVector& alpha);
RingPresentation build_planar_presentation(const LengthVector& alpha);

/// The manifestly symmetric presentation over Q: generators c_1..c_m, p with
/// relators c_i^2 - p and one relator per minimal long subset of {1..m}.
RingPresentation build_symmetric_presentation(const LengthVector& alpha);

struct CharacteristicClasses {
    std::vector<CohomologyClass> chern;  // c_1..c_m
    CohomologyClass pontryagin;          // p = c_i^2, equal for every i
    CohomologyClass symplectic;          // [omega], over Q
    CohomologyClass tangent_c1;
    Rat liouville_volume = Rat(0);       // integral of omega^(m-3) / (m-3)!
};

CharacteristicClasses characteristic_classes(const RingPresentation& pol);

struct IntersectionForm {
    std::vector<std::string> basis_labels;
    std::vector<std::vector<Int>> matrix;
    std::string top_label;
};

IntersectionForm intersection_form(const RingPresentation& pol);

int signature_of_form(const IntersectionForm& form);
bool is_unimodular(const IntersectionForm& form);

/// Gram matrix of user-supplied middle-degree classes, along with their
/// coordinates in the middle-degree lattice basis (the change of basis).
struct GramResult {
    std::vector<std::vector<Int>> matrix;
    std::vector<std::vector<Rat>> change_of_basis;
};

GramResult gram_matrix(const RingPresentation& pol, const std::vector<GradedPolynomial>& classes);

/// Integral lattice coordinates (throws when the class is not integral).
std::vector<Int> integral_coordinates(const RingPresentation& pres, const GradedPolynomial& p,
                                      int degree);

/// Number of x in H^2 tensor Z/4 with x^3 = 0, by brute force over the
/// 4^rank(H^2) degree-2 elements.
Int count_degree2_cube_zero_mod4(const RingPresentation& pol);

}  // namespace polyspace
