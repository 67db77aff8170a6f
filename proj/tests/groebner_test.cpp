#include "polyspace/groebner.hpp"

#include "polyspace/errors.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace polyspace;

namespace {

GradedPolynomial var(const VariableSetPtr& vars, Ring ring, const std::string& name, int power = 1) {
    return GradedPolynomial::variable(vars, ring, vars->index_of(name), power);
}

// the regular pentagon relator families, as listed: V_i^2 + R V_i, the
// products V_i V_j, and the five run relators
std::vector<GradedPolynomial> pentagon_relators(const VariableSetPtr& vars, Ring ring) {
    std::vector<GradedPolynomial> out;
    GradedPolynomial r = var(vars, ring, "R");
    std::vector<GradedPolynomial> v;
    for (int i = 1; i <= 4; ++i) v.push_back(var(vars, ring, "V" + std::to_string(i)));
    for (int i = 0; i < 4; ++i) out.push_back(v[i] * v[i] + r * v[i]);
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) out.push_back(v[i] * v[j]);
    for (int skip = 3; skip >= 0; --skip) {
        GradedPolynomial relator = r * r;
        for (int i = 0; i < 4; ++i)
            if (i != skip) relator = relator + r * v[i];
        out.push_back(relator);
    }
    GradedPolynomial top = r * r * r;
    for (int i = 0; i < 4; ++i) top = top + r * r * v[i];
    out.push_back(top);
    return out;
}

}  // namespace

TEST_CASE("reduction examples") {
    auto vars = spatial_variables(5);
    auto relators = pentagon_relators(vars, Ring::Z);
    GradedPolynomial rv1v2 = var(vars, Ring::Z, "R") * var(vars, Ring::Z, "V1") * var(vars, Ring::Z, "V2");
    CHECK(reduce(rv1v2, relators).is_zero());

    GradedPolynomial v1sq = var(vars, Ring::Z, "V1", 2);
    GradedPolynomial single = var(vars, Ring::Z, "V1", 2) + var(vars, Ring::Z, "R") * var(vars, Ring::Z, "V1");
    CHECK(reduce(v1sq, {single}) == -(var(vars, Ring::Z, "R") * var(vars, Ring::Z, "V1")));

    GradedPolynomial one = GradedPolynomial::constant(vars, Ring::Z, Rat(1));
    CHECK(reduce(one, relators) == one);
}

TEST_CASE("S-polynomial examples") {
    auto vars = spatial_variables(5);
    MonomialOrder order(vars);
    GradedPolynomial r1 = var(vars, Ring::Z, "V1", 2) + var(vars, Ring::Z, "R") * var(vars, Ring::Z, "V1");
    GradedPolynomial r2 = var(vars, Ring::Z, "V1") * var(vars, Ring::Z, "V2");
    CHECK(s_polynomial(r1, r2, order) ==
          var(vars, Ring::Z, "R") * var(vars, Ring::Z, "V1") * var(vars, Ring::Z, "V2"));

    CHECK(s_polynomial(r2, var(vars, Ring::Z, "V3") * var(vars, Ring::Z, "V4"), order).is_zero());

    GradedPolynomial r3 = var(vars, Ring::Z, "V2", 2) + var(vars, Ring::Z, "R") * var(vars, Ring::Z, "V2");
    CHECK(reduce(s_polynomial(r1, r3, order), {r1, r3}).is_zero());
}

TEST_CASE("completion of the first quadrilateral chamber") {
    // V_1, V_2, V_3 and the run relator R^2 present Z[R]/(R^2)
    auto vars = spatial_variables(4);
    std::vector<GradedPolynomial> gens = {var(vars, Ring::Z, "V1"), var(vars, Ring::Z, "V2"),
                                          var(vars, Ring::Z, "V3"), var(vars, Ring::Z, "R", 2)};
    GroebnerBasis basis = buchberger(gens);
    CHECK(basis.confluent);
    CHECK(basis.relators.size() == 4);
    auto dims = graded_dimensions(basis, 6);
    CHECK(dims == std::vector<int>{1, 0, 1, 0, 0, 0, 0});
    Staircase s = staircase(basis);
    CHECK(s.standard_monomials(2) == std::vector<Monomial>{Monomial::variable(*vars, 0, 1)});
}

TEST_CASE("a confluent monomial ideal is left unchanged") {
    auto vars = spatial_variables(4);
    std::vector<GradedPolynomial> gens = {var(vars, Ring::Z, "V1") * var(vars, Ring::Z, "V2"),
                                          var(vars, Ring::Z, "V3", 2)};
    GroebnerBasis basis = buchberger(gens);
    REQUIRE(basis.relators.size() == 2);
    // canonical output order is ascending leading monomials
    CHECK(basis.relators[0] == gens[1]);
    CHECK(basis.relators[1] == gens[0]);
}

TEST_CASE("pentagon ideal: integral completion fails, rational completion works") {
    auto vars = spatial_variables(5);
    CHECK_THROWS_AS(buchberger(pentagon_relators(vars, Ring::Z)), NonUnitLeadingCoefficientError);

    GroebnerBasis basis = buchberger(pentagon_relators(vars, Ring::Q));
    auto dims = graded_dimensions(basis, 6);
    CHECK(dims == std::vector<int>{1, 0, 5, 0, 1, 0, 0});

    // confluence: every S-polynomial of basis pairs reduces to zero
    MonomialOrder order(vars);
    for (std::size_t i = 0; i < basis.relators.size(); ++i)
        for (std::size_t j = i + 1; j < basis.relators.size(); ++j)
            CHECK(reduce(s_polynomial(basis.relators[i], basis.relators[j], order), basis).is_zero());
}

TEST_CASE("reduction is idempotent and detects ideal membership") {
    auto vars = spatial_variables(5);
    auto relators = pentagon_relators(vars, Ring::Q);
    GroebnerBasis basis = buchberger(relators);
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> coeff(-3, 3);
    std::uniform_int_distribution<int> exp(0, 1);
    auto random_poly = [&] {
        std::vector<Term> terms;
        for (int t = 0; t < 4; ++t) {
            Monomial m = Monomial::one(*vars);
            for (int i = 0; i < vars->count(); ++i) {
                int e = exp(rng);
                if (e) m = m.times(Monomial::variable(*vars, i, e));
            }
            terms.push_back({m, Rat(coeff(rng))});
        }
        return GradedPolynomial::from_terms(vars, Ring::Q, std::move(terms));
    };
    for (int trial = 0; trial < 200; ++trial) {
        GradedPolynomial p = random_poly();
        GradedPolynomial nf = reduce(p, basis);
        CHECK(reduce(nf, basis) == nf);

        // a random combination of the relators lies in the ideal
        GradedPolynomial combo = GradedPolynomial::zero(vars, Ring::Q);
        for (const auto& r : relators)
            if (rng() % 3 == 0) combo = combo + random_poly() * r;
        CHECK(reduce(combo, basis).is_zero());
        CHECK(reduce(p + combo, basis) == nf);
    }
}

TEST_CASE("the completed basis does not depend on the generator order") {
    auto vars = spatial_variables(5);
    auto relators = pentagon_relators(vars, Ring::Q);
    GroebnerBasis reference = buchberger(relators);
    std::mt19937 rng(2718);
    for (int trial = 0; trial < 25; ++trial) {
        auto shuffled = relators;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        GroebnerBasis other = buchberger(shuffled);
        CHECK(other.relators == reference.relators);
    }
}

TEST_CASE("ideal quotients by powers of R") {
    auto vars = spatial_variables(4);
    GradedPolynomial r2 = var(vars, Ring::Z, "R", 2);
    auto quotient = quotient_by_r_power({r2}, 1);
    REQUIRE(quotient.size() == 1);
    CHECK(quotient[0] == var(vars, Ring::Z, "R"));

    // (R^4) : R^2 = (R^2), and relators without R-content are untouched
    GradedPolynomial r4 = var(vars, Ring::Z, "R", 4);
    GradedPolynomial square = var(vars, Ring::Z, "V1", 2) + var(vars, Ring::Z, "R") * var(vars, Ring::Z, "V1");
    auto pol = quotient_by_r_power({r4, square}, 2);
    CHECK(pol[0] == r2);
    CHECK(pol[1] == square);
}

TEST_CASE("normal forms over Z keep integer coefficients") {
    auto vars = spatial_variables(4);
    std::vector<GradedPolynomial> gens = {var(vars, Ring::Z, "V1"), var(vars, Ring::Z, "V2"),
                                          var(vars, Ring::Z, "V3"), var(vars, Ring::Z, "R", 2)};
    GroebnerBasis basis = buchberger(gens);
    std::mt19937 rng(31);
    std::uniform_int_distribution<int> coeff(-9, 9);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<Term> terms;
        for (int t = 0; t < 5; ++t) {
            Monomial m = Monomial::one(*vars);
            for (int i = 0; i < vars->count(); ++i)
                if (rng() % 2) m = m.times(Monomial::variable(*vars, i, 1));
            terms.push_back({m, Rat(coeff(rng))});
        }
        GradedPolynomial p = GradedPolynomial::from_terms(vars, Ring::Z, std::move(terms));
        GradedPolynomial nf = reduce(p, basis);  // Ring::Z arithmetic rejects fractions
        for (const Term& t : nf.terms()) CHECK(t.coefficient.denominator() == 1);
    }
}

TEST_CASE("the zero ring has an empty staircase") {
    auto vars = spatial_variables(4);
    GroebnerBasis basis = buchberger({GradedPolynomial::constant(vars, Ring::Z, Rat(1)),
                                      var(vars, Ring::Z, "V1")});
    REQUIRE(basis.relators.size() == 1);
    CHECK(basis.relators[0].leading_monomial().is_one());
    auto dims = graded_dimensions(basis, 4);
    CHECK(dims == std::vector<int>{0, 0, 0, 0, 0});
}

TEST_CASE("graded dimensions need confluence") {
    auto vars = spatial_variables(4);
    GroebnerBasis fake;
    fake.vars = vars;
    fake.ring = Ring::Z;
    fake.relators = {var(vars, Ring::Z, "V1")};
    fake.confluent = false;
    CHECK_THROWS_AS(graded_dimensions(fake, 2), NotConfluentError);
}
