#include "polyspace/polyring.hpp"

#include "polyspace/errors.hpp"

#include <doctest.h>

#include <random>

using namespace polyspace;

namespace {

GradedPolynomial var(const VariableSetPtr& vars, Ring ring, const std::string& name, int power = 1) {
    return GradedPolynomial::variable(vars, ring, vars->index_of(name), power);
}

GradedPolynomial random_polynomial(const VariableSetPtr& vars, Ring ring, std::mt19937& rng,
                                   int max_terms = 5) {
    std::uniform_int_distribution<int> coeff(-4, 4);
    std::uniform_int_distribution<int> exp(0, 2);
    std::uniform_int_distribution<int> terms(1, max_terms);
    std::vector<Term> out;
    for (int t = terms(rng); t > 0; --t) {
        Monomial m = Monomial::one(*vars);
        for (int i = 0; i < vars->count(); ++i) {
            int e = exp(rng);
            if (e) m = m.times(Monomial::variable(*vars, i, e));
        }
        out.push_back({m, Rat(coeff(rng))});
    }
    return GradedPolynomial::from_terms(vars, ring, std::move(out));
}

}  // namespace

TEST_CASE("the R-dominant graded order") {
    auto vars = spatial_variables(4);
    MonomialOrder order(vars);
    Monomial v1sq = Monomial::variable(*vars, 1, 2);
    Monomial rv1 = Monomial::variable(*vars, 0, 1).times(Monomial::variable(*vars, 1, 1));
    CHECK(order.compare(v1sq, rv1) > 0);

    Monomial one = Monomial::one(*vars);
    Monomial r = Monomial::variable(*vars, 0, 1);
    CHECK(order.compare(one, r) < 0);

    Monomial r2v1 = Monomial::variable(*vars, 0, 2).times(Monomial::variable(*vars, 1, 1));
    Monomial rv1v2 = rv1.times(Monomial::variable(*vars, 2, 1));
    CHECK(order.compare(rv1v2, r2v1) > 0);

    // leading term statements from the relator families
    GradedPolynomial relator = var(vars, Ring::Z, "V1", 2) +
                               var(vars, Ring::Z, "R") * var(vars, Ring::Z, "V1");
    CHECK(relator.leading_monomial() == v1sq);
}

TEST_CASE("the order is a multiplicative well order") {
    auto vars = spatial_variables(5);
    MonomialOrder order(vars);
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> exp(0, 3);
    auto random_monomial = [&] {
        Monomial m = Monomial::one(*vars);
        for (int i = 0; i < vars->count(); ++i) {
            int e = exp(rng);
            if (e) m = m.times(Monomial::variable(*vars, i, e));
        }
        return m;
    };
    for (int trial = 0; trial < 500; ++trial) {
        Monomial a = random_monomial(), b = random_monomial(), c = random_monomial();
        int ab = order.compare(a, b);
        CHECK(order.compare(a.times(c), b.times(c)) == ab);
        if (!a.is_one()) CHECK(order.compare(a, Monomial::one(*vars)) > 0);
    }
}

TEST_CASE("exact polynomial arithmetic") {
    auto vars = spatial_variables(4);
    GradedPolynomial v1 = var(vars, Ring::Z, "V1");
    GradedPolynomial r = var(vars, Ring::Z, "R");
    CHECK((v1 + r) * (v1 - r) == v1 * v1 - r * r);
    GradedPolynomial relator = v1 * v1 + r * v1;
    CHECK(relator * GradedPolynomial::constant(vars, Ring::Z, Rat(1)) == relator);
    CHECK(relator.to_string() == "V1^2 + R*V1");

    GradedPolynomial z4 = var(vars, Ring::Z4, "V1").scaled(Rat(2)).scaled(Rat(2));
    CHECK(z4.is_zero());

    GradedPolynomial z2 = (var(vars, Ring::Z2, "V1") + var(vars, Ring::Z2, "R")) *
                          (var(vars, Ring::Z2, "V1") + var(vars, Ring::Z2, "R"));
    CHECK(z2 == var(vars, Ring::Z2, "V1", 2) + var(vars, Ring::Z2, "R", 2));
}

TEST_CASE("ring axioms hold over every coefficient domain") {
    std::mt19937 rng(99);
    for (Ring ring : {Ring::Z, Ring::Q, Ring::Z2, Ring::Z4}) {
        auto vars = spatial_variables(4);
        for (int trial = 0; trial < 40; ++trial) {
            GradedPolynomial a = random_polynomial(vars, ring, rng);
            GradedPolynomial b = random_polynomial(vars, ring, rng);
            GradedPolynomial c = random_polynomial(vars, ring, rng);
            CHECK(a + b == b + a);
            CHECK((a + b) + c == a + (b + c));
            CHECK(a * b == b * a);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK((a - a).is_zero());
        }
    }
}

TEST_CASE("substitution is a graded ring homomorphism") {
    auto dvars = danilov_variables(4);
    GradedPolynomial u1v1 = var(dvars, Ring::Z, "U1") * var(dvars, Ring::Z, "V1");
    GradedPolynomial image =
        u1v1.substitute(dvars->index_of("U1"), var(dvars, Ring::Z, "V1") + var(dvars, Ring::Z, "R"));
    CHECK(image == var(dvars, Ring::Z, "V1", 2) + var(dvars, Ring::Z, "R") * var(dvars, Ring::Z, "V1"));

    // degree-2 change of basis in a merged variable set
    auto merged = VariableSet::make({{"c1", 2}, {"R", 2}, {"V1", 2}});
    GradedPolynomial c1 = var(merged, Ring::Z, "c1");
    GradedPolynomial replaced =
        c1.substitute(merged->index_of("c1"),
                      var(merged, Ring::Z, "R") + var(merged, Ring::Z, "V1").scaled(Rat(2)));
    CHECK(replaced == var(merged, Ring::Z, "R") + var(merged, Ring::Z, "V1").scaled(Rat(2)));

    auto svars = sigma_variables(5);
    GradedPolynomial p = var(svars, Ring::Q, "p");
    CHECK(p.substitute(svars->index_of("p"), p) == p);

    // homomorphism on random inputs
    std::mt19937 rng(4242);
    auto vars = spatial_variables(4);
    GradedPolynomial replacement = var(vars, Ring::Z, "V2") + var(vars, Ring::Z, "R");
    for (int trial = 0; trial < 40; ++trial) {
        GradedPolynomial a = random_polynomial(vars, Ring::Z, rng);
        GradedPolynomial b = random_polynomial(vars, Ring::Z, rng);
        int v1 = vars->index_of("V1");
        CHECK((a * b).substitute(v1, replacement) ==
              a.substitute(v1, replacement) * b.substitute(v1, replacement));
    }

    CHECK_THROWS_AS(var(vars, Ring::Z, "V1").substitute(vars->index_of("V1"),
                                                        var(vars, Ring::Z, "R", 2)),
                    GradingMismatchError);
}

TEST_CASE("homogeneous components recombine") {
    auto vars = spatial_variables(4);
    GradedPolynomial one = GradedPolynomial::constant(vars, Ring::Z, Rat(1));
    GradedPolynomial r = var(vars, Ring::Z, "R");
    GradedPolynomial p = one + r + r * r;
    CHECK(p.homogeneous_component(2) == r);
    GradedPolynomial relator = var(vars, Ring::Z, "V1", 2) + r * var(vars, Ring::Z, "V1");
    CHECK(relator.homogeneous_component(4) == relator);
    CHECK(relator.homogeneous_component(2).is_zero());

    std::mt19937 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        GradedPolynomial q = random_polynomial(vars, Ring::Z, rng, 8);
        GradedPolynomial sum = GradedPolynomial::zero(vars, Ring::Z);
        for (int d = 0; d <= q.degree(); ++d) sum = sum + q.homogeneous_component(d);
        CHECK(sum == q);
    }
}

TEST_CASE("rendering is canonical and deterministic") {
    auto vars = spatial_variables(5);
    GradedPolynomial p = var(vars, Ring::Z, "R", 2) -
                         var(vars, Ring::Z, "R") * var(vars, Ring::Z, "V1").scaled(Rat(3));
    CHECK(p.to_string() == "-3*R*V1 + R^2");
    CHECK(GradedPolynomial::zero(vars, Ring::Z).to_string() == "0");
    CHECK(GradedPolynomial::constant(vars, Ring::Q, Rat(5, 2)).to_string() == "5/2");
}
