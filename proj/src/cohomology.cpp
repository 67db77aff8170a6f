#include "polyspace/cohomology.hpp"

#include "polyspace/errors.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace polyspace {

std::vector<GradedPolynomial> RelatorFamilies::all() const {
    std::vector<GradedPolynomial> out;
    out.reserve(squares.size() + long_monomials.size() + run_relators.size());
    out.insert(out.end(), squares.begin(), squares.end());
    out.insert(out.end(), long_monomials.begin(), long_monomials.end());
    out.insert(out.end(), run_relators.begin(), run_relators.end());
    return out;
}

namespace {

struct AlphaCombinatorics {
    int m = 0;
    std::vector<std::uint32_t> sm;                 // S_m, sorted masks over edges 1..m-1
    std::vector<std::uint32_t> minimal_lm;         // minimal elements of L_m
    std::vector<std::uint32_t> minimal_long_below; // minimal long subsets of {1..m-1}

    bool in_sm(std::uint32_t s) const { return std::binary_search(sm.begin(), sm.end(), s); }
};

AlphaCombinatorics alpha_combinatorics(const LengthVector& alpha) {
    AlphaCombinatorics c;
    c.m = alpha.edge_count();
    SubsetFamily shorts = short_family(alpha);
    const std::uint32_t kbit = 1u << (c.m - 1);
    const std::uint32_t below = kbit - 1u;  // {1..m-1}
    for (std::uint32_t s = 0; s <= below; ++s) {
        if (shorts.contains(s | kbit)) c.sm.push_back(s);
    }
    for (std::uint32_t s = 0; s <= below; ++s) {
        if (shorts.contains(s | kbit)) continue;  // s not in L_m
        bool minimal = true;
        for (std::uint32_t rest = s; rest && minimal;) {
            std::uint32_t bit = rest & (~rest + 1u);
            if (!shorts.contains((s ^ bit) | kbit)) minimal = false;
            rest ^= bit;
        }
        if (minimal) c.minimal_lm.push_back(s);
    }
    for (std::uint32_t s = 1; s <= below; ++s) {
        if (shorts.contains(s)) continue;  // s short
        bool minimal = true;
        for (std::uint32_t rest = s; rest && minimal;) {
            std::uint32_t bit = rest & (~rest + 1u);
            if (!shorts.contains(s ^ bit)) minimal = false;
            rest ^= bit;
        }
        if (minimal) c.minimal_long_below.push_back(s);
    }
    return c;
}

Monomial subset_monomial(const VariableSet& vars, std::uint32_t subset) {
    // bit i-1 (edge i, i <= m-1) maps to the variable V_i at index i
    Monomial m = Monomial::one(vars);
    for (std::uint32_t rest = subset; rest;) {
        std::uint32_t bit = rest & (~rest + 1u);
        int edge = std::countr_zero(bit) + 1;
        m = m.times(Monomial::variable(vars, edge, 1));
        rest ^= bit;
    }
    return m;
}

}  // namespace

RelatorFamilies up_relator_families(const LengthVector& alpha, const VariableSetPtr& vars, Ring ring) {
    require_generic(alpha);
    const int m = alpha.edge_count();
    if (vars->count() != m) throw std::invalid_argument("variable set does not match the edge count");
    AlphaCombinatorics comb = alpha_combinatorics(alpha);
    RelatorFamilies fam;

    for (int i = 1; i < m; ++i) {
        GradedPolynomial square = GradedPolynomial::term(vars, ring, Monomial::variable(*vars, i, 2), Rat(1));
        Monomial rv = Monomial::variable(*vars, 0, 1).times(Monomial::variable(*vars, i, 1));
        fam.squares.push_back(square + GradedPolynomial::term(vars, ring, rv, Rat(1)));
    }

    for (std::uint32_t L : comb.minimal_lm)
        fam.long_monomials.push_back(
            GradedPolynomial::term(vars, ring, subset_monomial(*vars, L), Rat(1)));

    for (std::uint32_t L : comb.minimal_long_below) {
        std::vector<Term> terms;
        for (std::uint32_t S = L;; S = (S - 1) & L) {
            if (comb.in_sm(S)) {
                int r_exp = std::popcount(L & ~S) + 1;
                Monomial mono = subset_monomial(*vars, S).times(Monomial::variable(*vars, 0, r_exp));
                terms.push_back({mono, Rat(1)});
            }
            if (S == 0) break;
        }
        GradedPolynomial relator = GradedPolynomial::from_terms(vars, ring, std::move(terms));
        if (!relator.is_zero()) fam.run_relators.push_back(relator);
    }
    return fam;
}

DanilovPresentation danilov_presentation(const LengthVector& alpha) {
    require_generic(alpha);
    const int m = alpha.edge_count();
    DanilovPresentation pres;
    pres.vars = danilov_variables(m);
    const VariableSet& vars = *pres.vars;
    AlphaCombinatorics comb = alpha_combinatorics(alpha);
    auto u_index = [&](int i) { return m + i - 1; };  // U_i after R, V_1..V_{m-1}

    for (int i = 1; i < m; ++i) {
        GradedPolynomial rel = GradedPolynomial::variable(pres.vars, Ring::Z, u_index(i)) -
                               GradedPolynomial::variable(pres.vars, Ring::Z, i) -
                               GradedPolynomial::variable(pres.vars, Ring::Z, 0);
        pres.linear.push_back(rel);
        Monomial uv = Monomial::variable(vars, u_index(i), 1).times(Monomial::variable(vars, i, 1));
        pres.opposite_pairs.push_back(GradedPolynomial::term(pres.vars, Ring::Z, uv, Rat(1)));
    }
    for (std::uint32_t L : comb.minimal_lm)
        pres.down_runs.push_back(
            GradedPolynomial::term(pres.vars, Ring::Z, subset_monomial(vars, L), Rat(1)));
    for (std::uint32_t L : comb.minimal_long_below) {
        Monomial mono = Monomial::variable(vars, 0, 1);
        for (std::uint32_t rest = L; rest;) {
            std::uint32_t bit = rest & (~rest + 1u);
            mono = mono.times(Monomial::variable(vars, u_index(std::countr_zero(bit) + 1), 1));
            rest ^= bit;
        }
        pres.up_runs.push_back(GradedPolynomial::term(pres.vars, Ring::Z, mono, Rat(1)));
    }
    return pres;
}

PoincarePolynomial RingPresentation::poincare_polynomial() const {
    return PoincarePolynomial::from_dimensions(dimensions);
}

int RingPresentation::total_dimension() const {
    int total = 0;
    for (int d : dimensions) total += d;
    return total;
}

GradedPolynomial RingPresentation::normal_form(const GradedPolynomial& p) const {
    switch (basis.ring) {
        case Ring::Q:
            return reduce(p.ring() == Ring::Q ? p : p.with_ring(Ring::Q), basis);
        case Ring::Z2:
            return reduce(p.ring() == Ring::Z2 ? p : p.with_ring(Ring::Z2), basis);
        case Ring::Z: {
            if (p.ring() == Ring::Z) return reduce(p, basis);
            if (p.ring() == Ring::Q) {
                std::vector<GradedPolynomial> rationalized;
                rationalized.reserve(basis.relators.size());
                for (const auto& r : basis.relators) rationalized.push_back(r.with_ring(Ring::Q));
                return reduce(p, rationalized);
            }
            break;
        }
        default:
            break;
    }
    throw std::invalid_argument("unsupported coefficient ring combination in normal_form");
}

CohomologyClass RingPresentation::make_class(const GradedPolynomial& p) const {
    GradedPolynomial nf = normal_form(p);
    int degree = nf.is_zero() ? p.degree() : nf.degree();
    return CohomologyClass{std::move(nf), degree};
}

std::vector<Rat> RingPresentation::nf_vector(const GradedPolynomial& nf, int degree) const {
    if (degree < 0 || degree > top_degree) throw std::invalid_argument("degree out of range");
    const auto& monomials = graded_basis[static_cast<std::size_t>(degree)];
    std::vector<Rat> coords(monomials.size(), Rat(0));
    for (const Term& t : nf.terms()) {
        if (t.monomial.weighted_degree() != degree)
            throw std::invalid_argument("normal form is not homogeneous of the requested degree");
        bool found = false;
        for (std::size_t s = 0; s < monomials.size(); ++s) {
            if (monomials[s] == t.monomial) {
                coords[s] = t.coefficient;
                found = true;
                break;
            }
        }
        if (!found) throw std::logic_error("normal form contains a non-standard monomial");
    }
    return coords;
}

namespace {

GradedPolynomial polynomial_from_coords(const RingPresentation& pres, int degree,
                                        const std::vector<Rat>& coords) {
    const auto& monomials = pres.graded_basis[static_cast<std::size_t>(degree)];
    std::vector<Term> terms;
    for (std::size_t s = 0; s < monomials.size(); ++s)
        if (coords[s].numerator() != 0) terms.push_back({monomials[s], coords[s]});
    return GradedPolynomial::from_terms(pres.vars, Ring::Q, std::move(terms));
}

// Gram matrix of the middle-degree lattice basis against the unoriented top
// generator; only meaningful for a nonzero Pol presentation with m odd.
std::vector<std::vector<Rat>> middle_gram(const RingPresentation& pres, const IntegralStructure& s) {
    const int middle = pres.top_degree / 2;
    const LatticeBasis& B = s.lattice[static_cast<std::size_t>(middle)];
    const LatticeBasis& T = s.lattice[static_cast<std::size_t>(pres.top_degree)];
    std::vector<GradedPolynomial> reps;
    reps.reserve(B.rows.size());
    for (const auto& row : B.rows) reps.push_back(polynomial_from_coords(pres, middle, row));
    std::vector<std::vector<Rat>> gram(B.rows.size(), std::vector<Rat>(B.rows.size(), Rat(0)));
    for (std::size_t i = 0; i < reps.size(); ++i) {
        for (std::size_t j = i; j < reps.size(); ++j) {
            GradedPolynomial nf = pres.normal_form(reps[i] * reps[j]);
            auto coords = T.coordinates(pres.nf_vector(nf, pres.top_degree));
            if (!coords || coords->size() != 1)
                throw std::logic_error("top degree does not have rank one");
            gram[i][j] = gram[j][i] = (*coords)[0];
        }
    }
    return gram;
}

int compute_orientation(const RingPresentation& pres, const IntegralStructure& s) {
    if (pres.space != SpaceTag::Pol || pres.zero_ring || !pres.alpha.has_value()) return 1;
    const LengthVector& alpha = *pres.alpha;
    const int m = alpha.edge_count();
    if (s.lattice[static_cast<std::size_t>(pres.top_degree)].rank() != 1)
        throw std::logic_error("top degree of a closed polygon space must have rank one");

    if (m % 2 == 1) {
        Int target = signature(alpha);
        if (target != 0) {
            int sig = symmetric_signature(middle_gram(pres, s));
            if (Int(sig) == target) return 1;
            if (Int(-sig) == target) return -1;
            throw std::logic_error("signature does not match the combinatorial value");
        }
    }
    // orient by the symplectic volume: omega^(m-3) must be positive
    std::vector<Rat> alpha_values = alpha.lengths();
    GradedPolynomial omega = GradedPolynomial::zero(pres.vars, Ring::Q);
    {
        Rat r_coeff = -alpha_values.back();
        for (int j = 0; j + 1 < m; ++j) r_coeff += alpha_values[static_cast<std::size_t>(j)];
        omega = GradedPolynomial::term(pres.vars, Ring::Q, Monomial::variable(*pres.vars, 0, 1), r_coeff);
        SubsetFamily sm = distinguished_subposet(alpha, m);
        for (int j = 1; j < m; ++j) {
            if (!sm.contains(1u << (j - 1))) continue;
            omega = omega + GradedPolynomial::term(pres.vars, Ring::Q, Monomial::variable(*pres.vars, j, 1),
                                                   Rat(2) * alpha_values[static_cast<std::size_t>(j - 1)]);
        }
    }
    GradedPolynomial nf = pres.normal_form(omega.power(m - 3));
    auto coords = s.lattice[static_cast<std::size_t>(pres.top_degree)].coordinates(
        pres.nf_vector(nf, pres.top_degree));
    if (!coords || (*coords)[0].numerator() == 0)
        throw std::logic_error("vanishing symplectic volume");
    return (*coords)[0].numerator() > 0 ? 1 : -1;
}

}  // namespace

const IntegralStructure& RingPresentation::integral() const {
    std::call_once(integral_cache_->once, [&] {
        IntegralStructure s;
        s.lattice.resize(static_cast<std::size_t>(top_degree) + 1);
        for (int d = 0; d <= top_degree; ++d) {
            const int dim = dimensions[static_cast<std::size_t>(d)];
            if (dim == 0) {
                s.lattice[static_cast<std::size_t>(d)] = LatticeBasis{0, {}, {}};
                continue;
            }
            std::vector<std::vector<Rat>> generators;
            for (const Monomial& mono : monomials_of_degree(vars, d)) {
                GradedPolynomial nf =
                    normal_form(GradedPolynomial::term(vars, basis.ring, mono, Rat(1)));
                generators.push_back(nf_vector(nf, d));
            }
            LatticeBasis lattice = lattice_from_generators(dim, generators);
            if (lattice.rank() != dim)
                throw std::logic_error("integral lattice does not have full rank");
            s.lattice[static_cast<std::size_t>(d)] = std::move(lattice);
        }
        s.top_orientation = compute_orientation(*this, s);
        integral_cache_->value = std::move(s);
    });
    return integral_cache_->value;
}

std::vector<Rat> RingPresentation::class_coordinates(const GradedPolynomial& p, int degree) const {
    const IntegralStructure& s = integral();
    GradedPolynomial nf = normal_form(p);
    auto coords = s.lattice[static_cast<std::size_t>(degree)].coordinates(nf_vector(nf, degree));
    if (!coords) throw std::logic_error("class outside the rational span");
    return *coords;
}

Rat RingPresentation::top_coordinate(const GradedPolynomial& p) const {
    if (zero_ring) return Rat(0);
    const IntegralStructure& s = integral();
    auto coords = class_coordinates(p, top_degree);
    if (coords.size() != 1) throw std::logic_error("top degree does not have rank one");
    return coords[0] * Rat(s.top_orientation);
}

CohomologyClass cup_product(const CohomologyClass& a, const CohomologyClass& b,
                            const RingPresentation& pres) {
    GradedPolynomial x = a.normal_form;
    GradedPolynomial y = b.normal_form;
    if (x.ring() != y.ring()) {
        if (x.ring() == Ring::Z) x = x.with_ring(y.ring());
        if (y.ring() == Ring::Z) y = y.with_ring(x.ring());
    }
    return pres.make_class(x * y);
}

namespace {

std::vector<Int> expected_dimensions(const PoincarePolynomial& p, int top) {
    std::vector<Int> out(static_cast<std::size_t>(top) + 1, Int(0));
    for (int d = 0; d <= top; ++d) out[static_cast<std::size_t>(d)] = p.coefficient(d);
    return out;
}

RingPresentation complete_presentation(SpaceTag space, Ring target, VariableSetPtr vars,
                                       std::optional<LengthVector> alpha,
                                       std::vector<GradedPolynomial> relators, int top, int step,
                                       const std::vector<Int>& expected) {
    RingPresentation pres;
    pres.space = space;
    pres.coefficient_ring = target;
    pres.vars = vars;
    pres.alpha = std::move(alpha);
    pres.relators = relators;
    pres.top_degree = top;
    pres.degree_step = step;

    std::erase_if(relators, [](const GradedPolynomial& r) { return r.is_zero(); });
    try {
        pres.basis = buchberger(relators);
    } catch (const NonUnitLeadingCoefficientError&) {
        if (target != Ring::Z) throw;
        std::vector<GradedPolynomial> rationalized;
        rationalized.reserve(relators.size());
        for (const auto& r : relators) rationalized.push_back(r.with_ring(Ring::Q));
        pres.basis = buchberger(std::move(rationalized));
        pres.basis_rationalized = true;
    }

    for (const auto& r : pres.basis.relators)
        if (!r.is_zero() && r.leading_monomial().is_one()) pres.zero_ring = true;

    std::vector<int> dims = graded_dimensions(pres.basis, top + 2 * step);
    for (int d = top + 1; d <= top + 2 * step; ++d)
        if (dims[static_cast<std::size_t>(d)] != 0)
            throw std::logic_error("graded quotient does not vanish above the expected top degree");
    dims.resize(static_cast<std::size_t>(top) + 1);
    pres.dimensions = dims;

    Staircase stairs = staircase(pres.basis);
    pres.graded_basis.resize(static_cast<std::size_t>(top) + 1);
    for (int d = 0; d <= top; ++d)
        pres.graded_basis[static_cast<std::size_t>(d)] = stairs.standard_monomials(d);

    if (!expected.empty()) {
        for (int d = 0; d <= top; ++d)
            if (Int(dims[static_cast<std::size_t>(d)]) != expected[static_cast<std::size_t>(d)])
                throw std::logic_error("graded dimensions disagree with the Betti numbers at degree " +
                                       std::to_string(d));
    }
    if (space == SpaceTag::UP || space == SpaceTag::APol || space == SpaceTag::Pol) {
        for (int d = 0; d <= top; ++d)
            if (dims[static_cast<std::size_t>(d)] != dims[static_cast<std::size_t>(top - d)])
                throw std::logic_error("Betti numbers are not palindromic");
    }
    return pres;
}

void check_presentation_size(const LengthVector& alpha) {
    if (alpha.edge_count() > 12)
        throw TooLargeError("ring presentations are limited to 12 edges");
}

}  // namespace

RingPresentation build_up_presentation(const LengthVector& alpha) {
    check_presentation_size(alpha);
    const int m = alpha.edge_count();
    VariableSetPtr vars = spatial_variables(m);
    RelatorFamilies fam = up_relator_families(alpha, vars, Ring::Z);
    return complete_presentation(SpaceTag::UP, Ring::Z, vars, alpha, fam.all(), 2 * (m - 1), 2,
                                 expected_dimensions(poincare(alpha, SpaceTag::UP), 2 * (m - 1)));
}

RingPresentation build_apol_presentation(const LengthVector& alpha) {
    check_presentation_size(alpha);
    const int m = alpha.edge_count();
    VariableSetPtr vars = spatial_variables(m);
    RelatorFamilies fam = up_relator_families(alpha, vars, Ring::Z);
    return complete_presentation(SpaceTag::APol, Ring::Z, vars, alpha,
                                 quotient_by_r_power(fam.all(), 1), 2 * (m - 2), 2,
                                 expected_dimensions(poincare(alpha, SpaceTag::APol), 2 * (m - 2)));
}

RingPresentation build_pol_presentation(const LengthVector& alpha) {
    check_presentation_size(alpha);
    const int m = alpha.edge_count();
    VariableSetPtr vars = spatial_variables(m);
    RelatorFamilies fam = up_relator_families(alpha, vars, Ring::Z);
    RingPresentation pres = complete_presentation(
        SpaceTag::Pol, Ring::Z, vars, alpha, quotient_by_r_power(fam.all(), 2), 2 * (m - 3), 2,
        expected_dimensions(poincare(alpha, SpaceTag::Pol), 2 * (m - 3)));
    pres.notes.push_back("w2(xi) = c_i mod 2 for every i");
    return pres;
}

RingPresentation build_planar_presentation(const LengthVector& alpha) {
    check_presentation_size(alpha);
    const int m = alpha.edge_count();
    VariableSetPtr vars = planar_variables(m);
    RelatorFamilies fam = up_relator_families(alpha, vars, Ring::Z2);
    PoincarePolynomial spatial = poincare(alpha, SpaceTag::Pol);
    std::vector<Int> expected(static_cast<std::size_t>(m - 3) + 1, Int(0));
    for (int k = 0; k <= m - 3; ++k) expected[static_cast<std::size_t>(k)] = spatial.coefficient(2 * k);
    RingPresentation pres =
        complete_presentation(SpaceTag::PlanarPol, Ring::Z2, vars, alpha,
                              quotient_by_r_power(fam.all(), 2), m - 3, 1, expected);
    pres.notes.push_back("w1(kappa) = R");
    pres.notes.push_back("H^k here matches H^(2k) of the spatial ring mod 2");
    return pres;
}

RingPresentation build_symmetric_presentation(const LengthVector& alpha) {
    check_presentation_size(alpha);
    require_generic(alpha);
    const int m = alpha.edge_count();
    VariableSetPtr vars = chern_variables(m);
    const int p_index = m;
    std::vector<GradedPolynomial> relators;
    for (int i = 1; i <= m; ++i) {
        relators.push_back(GradedPolynomial::variable(vars, Ring::Q, i - 1, 2) -
                           GradedPolynomial::variable(vars, Ring::Q, p_index));
    }
    SubsetFamily longs = long_family(alpha);
    for (std::uint32_t L : longs.minimal_elements()) {
        const int lsize = std::popcount(L);
        std::vector<Term> terms;
        for (std::uint32_t M = L;; M = (M - 1) & L) {
            if ((std::popcount(M) % 2) != (lsize % 2)) {
                Monomial mono = Monomial::one(*vars);
                for (std::uint32_t rest = M; rest;) {
                    std::uint32_t bit = rest & (~rest + 1u);
                    mono = mono.times(Monomial::variable(*vars, std::countr_zero(bit), 1));
                    rest ^= bit;
                }
                int p_exp = (lsize - std::popcount(M) - 1) / 2;
                if (p_exp > 0) mono = mono.times(Monomial::variable(*vars, p_index, p_exp));
                terms.push_back({mono, Rat(1)});
            }
            if (M == 0) break;
        }
        relators.push_back(GradedPolynomial::from_terms(vars, Ring::Q, std::move(terms)));
    }
    return complete_presentation(SpaceTag::SymmetricPol, Ring::Q, vars, alpha, std::move(relators),
                                 2 * (m - 3), 2,
                                 expected_dimensions(poincare(alpha, SpaceTag::Pol), 2 * (m - 3)));
}

CharacteristicClasses characteristic_classes(const RingPresentation& pol) {
    if (pol.space != SpaceTag::Pol || !pol.alpha.has_value())
        throw std::invalid_argument("characteristic classes live on a Pol presentation");
    const LengthVector& alpha = *pol.alpha;
    const int m = alpha.edge_count();
    const VariableSetPtr& vars = pol.vars;
    const Ring work = pol.basis.ring == Ring::Q ? Ring::Q : Ring::Z;

    CharacteristicClasses out;
    std::vector<GradedPolynomial> raw;
    for (int i = 1; i < m; ++i) {
        raw.push_back(GradedPolynomial::variable(vars, work, 0) +
                      GradedPolynomial::variable(vars, work, i).scaled(Rat(2)));
    }
    raw.push_back(-GradedPolynomial::variable(vars, work, 0));
    for (const auto& c : raw) out.chern.push_back(pol.make_class(c));

    out.pontryagin = pol.make_class(raw.front() * raw.front());
    for (const auto& c : raw) {
        CohomologyClass square = pol.make_class(c * c);
        if (!(square.normal_form == out.pontryagin.normal_form))
            throw std::logic_error("the squares of the circle-bundle classes disagree");
    }

    SubsetFamily sm = distinguished_subposet(alpha, m);
    GradedPolynomial omega = GradedPolynomial::zero(vars, Ring::Q);
    {
        Rat r_coeff = -alpha.length(m - 1);
        for (int j = 0; j + 1 < m; ++j) r_coeff += alpha.length(j);
        omega = GradedPolynomial::term(vars, Ring::Q, Monomial::variable(*vars, 0, 1), r_coeff);
        for (int j = 1; j < m; ++j) {
            if (!sm.contains(1u << (j - 1))) continue;
            omega = omega + GradedPolynomial::term(vars, Ring::Q, Monomial::variable(*vars, j, 1),
                                                   Rat(2) * alpha.length(j - 1));
        }
    }
    out.symplectic = pol.make_class(omega);

    GradedPolynomial tangent =
        GradedPolynomial::variable(vars, work, 0).scaled(Rat(m - 2));
    for (int j = 1; j < m; ++j)
        if (sm.contains(1u << (j - 1)))
            tangent = tangent + GradedPolynomial::variable(vars, work, j).scaled(Rat(2));
    out.tangent_c1 = pol.make_class(tangent);

    // omega = sum alpha_i c_i must hold exactly
    GradedPolynomial weighted = GradedPolynomial::zero(vars, Ring::Q);
    for (int i = 0; i < m; ++i)
        weighted = weighted + raw[static_cast<std::size_t>(i)].with_ring(Ring::Q).scaled(alpha.length(i));
    if (!pol.normal_form(weighted - omega).is_zero())
        throw std::logic_error("omega differs from sum alpha_i c_i in the ring");

    if (!pol.zero_ring) {
        GradedPolynomial top_power = omega.power(m - 3);
        Rat coord = pol.top_coordinate(top_power);
        Int factorial = 1;
        for (int i = 2; i <= m - 3; ++i) factorial *= i;
        out.liouville_volume = coord / Rat(factorial);
    }
    return out;
}

IntersectionForm intersection_form(const RingPresentation& pol) {
    if (pol.space != SpaceTag::Pol) throw std::invalid_argument("intersection form needs a Pol presentation");
    if (pol.zero_ring) throw EmptySpaceError("the polygon space is empty");
    if (!pol.alpha.has_value() || pol.alpha->edge_count() % 2 == 0)
        throw OddMiddleDegreeError("the middle degree pairing needs an odd edge count");
    const IntegralStructure& s = pol.integral();
    const int middle = pol.top_degree / 2;
    const LatticeBasis& B = s.lattice[static_cast<std::size_t>(middle)];

    IntersectionForm form;
    std::vector<GradedPolynomial> reps;
    for (const auto& row : B.rows) {
        GradedPolynomial rep = polynomial_from_coords(pol, middle, row);
        form.basis_labels.push_back(rep.to_string());
        reps.push_back(std::move(rep));
    }
    form.matrix.assign(reps.size(), std::vector<Int>(reps.size(), Int(0)));
    for (std::size_t i = 0; i < reps.size(); ++i) {
        for (std::size_t j = i; j < reps.size(); ++j) {
            Rat value = pol.top_coordinate(reps[i] * reps[j]);
            if (value.denominator() != 1)
                throw std::logic_error("non-integral intersection pairing");
            form.matrix[i][j] = form.matrix[j][i] = value.numerator();
        }
    }
    const LatticeBasis& T = s.lattice[static_cast<std::size_t>(pol.top_degree)];
    GradedPolynomial top_rep =
        polynomial_from_coords(pol, pol.top_degree, T.rows[0]).scaled(Rat(s.top_orientation));
    form.top_label = top_rep.to_string();
    return form;
}

int signature_of_form(const IntersectionForm& form) {
    std::vector<std::vector<Rat>> m(form.matrix.size());
    for (std::size_t i = 0; i < form.matrix.size(); ++i)
        for (const Int& v : form.matrix[i]) m[i].emplace_back(v);
    return symmetric_signature(std::move(m));
}

bool is_unimodular(const IntersectionForm& form) {
    Int det = bareiss_determinant(form.matrix);
    return det == 1 || det == -1;
}

GramResult gram_matrix(const RingPresentation& pol, const std::vector<GradedPolynomial>& classes) {
    if (classes.empty()) return {};
    GramResult out;
    const int degree = pol.normal_form(classes.front()).degree();
    out.matrix.assign(classes.size(), std::vector<Int>(classes.size(), Int(0)));
    for (std::size_t i = 0; i < classes.size(); ++i) {
        out.change_of_basis.push_back(pol.class_coordinates(classes[i], degree));
        for (std::size_t j = i; j < classes.size(); ++j) {
            Rat value = pol.top_coordinate(classes[i].with_ring(Ring::Q) * classes[j].with_ring(Ring::Q));
            if (value.denominator() != 1) throw std::logic_error("non-integral pairing");
            out.matrix[i][j] = out.matrix[j][i] = value.numerator();
        }
    }
    return out;
}

std::vector<Int> integral_coordinates(const RingPresentation& pres, const GradedPolynomial& p,
                                      int degree) {
    std::vector<Int> out;
    for (const Rat& c : pres.class_coordinates(p, degree)) {
        if (c.denominator() != 1) throw std::logic_error("class is not integral");
        out.push_back(c.numerator());
    }
    return out;
}

Int count_degree2_cube_zero_mod4(const RingPresentation& pol) {
    if (pol.zero_ring) throw EmptySpaceError("the polygon space is empty");
    if (pol.top_degree < 6) throw std::invalid_argument("needs degrees up to 6");
    const IntegralStructure& s = pol.integral();
    const int b2 = pol.dimensions[2];
    const int b4 = pol.dimensions[4];
    const int b6 = pol.dimensions[6];
    if (b2 > 10) throw TooLargeError("degree-2 rank too large for brute force");

    auto reps = [&](int degree) {
        std::vector<GradedPolynomial> out;
        for (const auto& row : s.lattice[static_cast<std::size_t>(degree)].rows)
            out.push_back(polynomial_from_coords(pol, degree, row));
        return out;
    };
    std::vector<GradedPolynomial> B2 = reps(2), B4 = reps(4);

    // structure tensors mod 4: T2[i][j] in Z^{b4}, T3[k][i] in Z^{b6}
    std::vector<std::vector<std::vector<Int>>> T2(
        static_cast<std::size_t>(b2),
        std::vector<std::vector<Int>>(static_cast<std::size_t>(b2)));
    for (int i = 0; i < b2; ++i)
        for (int j = 0; j < b2; ++j)
            T2[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = integral_coordinates(
                pol, B2[static_cast<std::size_t>(i)] * B2[static_cast<std::size_t>(j)], 4);
    std::vector<std::vector<std::vector<Int>>> T3(
        static_cast<std::size_t>(b4),
        std::vector<std::vector<Int>>(static_cast<std::size_t>(b2)));
    for (int k = 0; k < b4; ++k)
        for (int i = 0; i < b2; ++i)
            T3[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)] = integral_coordinates(
                pol, B4[static_cast<std::size_t>(k)] * B2[static_cast<std::size_t>(i)], 6);

    Int count = 0;
    std::vector<int> a(static_cast<std::size_t>(b2), 0);
    while (true) {
        std::vector<Int> square(static_cast<std::size_t>(b4), Int(0));
        for (int i = 0; i < b2; ++i) {
            if (a[static_cast<std::size_t>(i)] == 0) continue;
            for (int j = 0; j < b2; ++j) {
                if (a[static_cast<std::size_t>(j)] == 0) continue;
                const auto& t = T2[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
                for (int k = 0; k < b4; ++k)
                    square[static_cast<std::size_t>(k)] +=
                        a[static_cast<std::size_t>(i)] * a[static_cast<std::size_t>(j)] *
                        t[static_cast<std::size_t>(k)];
            }
        }
        std::vector<Int> cube(static_cast<std::size_t>(b6), Int(0));
        for (int k = 0; k < b4; ++k) {
            Int sk = mod_floor(square[static_cast<std::size_t>(k)], 4);
            if (sk == 0) continue;
            for (int i = 0; i < b2; ++i) {
                if (a[static_cast<std::size_t>(i)] == 0) continue;
                const auto& t = T3[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)];
                for (int l = 0; l < b6; ++l)
                    cube[static_cast<std::size_t>(l)] += sk * a[static_cast<std::size_t>(i)] *
                                                         t[static_cast<std::size_t>(l)];
            }
        }
        bool zero = true;
        for (const Int& c : cube) zero = zero && mod_floor(c, 4) == 0;
        if (zero) ++count;

        int pos = 0;
        while (pos < b2 && a[static_cast<std::size_t>(pos)] == 3) {
            a[static_cast<std::size_t>(pos)] = 0;
            ++pos;
        }
        if (pos == b2) break;
        ++a[static_cast<std::size_t>(pos)];
    }
    return count;
}

}  // namespace polyspace
