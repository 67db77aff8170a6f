#include "polyspace/invariants.hpp"

#include "polyspace/errors.hpp"
#include "support/helpers.hpp"

#include <doctest.h>

#include <bit>

using namespace polyspace;
using namespace polyspace::testing;

namespace {

PoincarePolynomial even_sum(const LengthVector& alpha) {
    PoincarePolynomial out;
    SubsetFamily sm = distinguished_subposet(alpha, alpha.edge_count());
    for (std::uint32_t j : sm.members())
        out = out + PoincarePolynomial::monomial(2 * std::popcount(j));
    return out;
}

}  // namespace

TEST_CASE("Betti generating functions of the named examples") {
    CHECK(poincare(lv("2,2,3,5,5,10"), SpaceTag::Pol).to_string() == "1 + 4t^2 + 4t^4 + t^6");
    for (int m = 4; m <= 8; ++m) {
        std::vector<int> entries(static_cast<std::size_t>(m), 1);
        entries.back() = m - 2;
        PoincarePolynomial p = poincare(lv(entries), SpaceTag::Pol);
        for (int k = 0; k <= m - 3; ++k) CHECK(p.coefficient(2 * k) == 1);
        CHECK(p.degree() == 2 * (m - 3));
    }
    CHECK(poincare(lv("1,1,10"), SpaceTag::Pol).is_zero());
    CHECK(poincare(lv("1,1,1,2"), SpaceTag::UP).to_string() == "1 + t^2 + t^4 + t^6");
    CHECK(poincare(lv("1,1,1,2"), SpaceTag::APol).to_string() == "1 + t^2 + t^4");
    CHECK_THROWS_AS(poincare(lv("1,1,1,1"), SpaceTag::Pol), NonGenericError);
}

TEST_CASE("the two Betti formulas agree") {
    CHECK(klyachko_poincare(lv("1,1,1,1,1")).to_string() == "1 + 5t^2 + t^4");
    CHECK(klyachko_poincare(lv("1,1,1,1,1")) == poincare(lv("1,1,1,1,1"), SpaceTag::Pol));
    CHECK(klyachko_poincare(lv("1,1,1,2")).to_string() == "1 + t^2");
    CHECK(klyachko_poincare(lv("2,2,3,5,5,8")).to_string() == "1 + 4t^2 + 4t^4 + t^6");

    for (int m = 3; m <= 6; ++m) {
        for (const auto& alpha : chamber_representatives(m, m <= 5 ? 9 : 11)) {
            PoincarePolynomial direct = poincare(alpha, SpaceTag::Pol);
            CHECK(direct == klyachko_poincare(alpha));
            CHECK(direct.palindromic());
        }
    }
    for (const auto& alpha : random_chambers(7, 10, 20240601))
        CHECK(poincare(alpha, SpaceTag::Pol) == klyachko_poincare(alpha));
}

TEST_CASE("the even-cohomology recurrences hold per chamber") {
    PoincarePolynomial one_minus_t2({Int(1), Int(0), Int(-1)});
    for (int m = 3; m <= 6; ++m) {
        for (const auto& alpha : chamber_representatives(m, 9)) {
            PoincarePolynomial open = even_sum(alpha);
            if (open.is_zero()) {
                CHECK(poincare(alpha, SpaceTag::Pol).is_zero());
                continue;
            }
            PoincarePolynomial rev = open.reversed(2 * (m - 1));
            CHECK(one_minus_t2 * poincare(alpha, SpaceTag::APol) == open - rev);
            CHECK(one_minus_t2 * poincare(alpha, SpaceTag::UP) ==
                  open - open.reversed(2 * m));
            CHECK(one_minus_t2 * poincare(alpha, SpaceTag::Pol) ==
                  open - open.reversed(2 * (m - 2)));
        }
    }
}

TEST_CASE("signatures") {
    CHECK(signature(lv("1,1,1,1,1")) == -3);
    CHECK(signature(lv("1,1,1,1,3")) == 1);
    CHECK(signature(lv("1,1,1")) == 1);
    CHECK_THROWS_AS(signature(lv("1,1,1,2")), EvenEdgeCountError);

    // the signature is the Betti polynomial evaluated at t = i
    for (int m : {3, 5}) {
        for (const auto& alpha : chamber_representatives(m, 9))
            CHECK(signature(alpha) == poincare(alpha, SpaceTag::Pol).evaluate_at_i());
    }
    for (const auto& alpha : random_chambers(7, 8, 77))
        CHECK(signature(alpha) == poincare(alpha, SpaceTag::Pol).evaluate_at_i());
}

TEST_CASE("planar Euler characteristics") {
    CHECK(planar_euler(lv("1,1,1,1,1")) == -3);
    CHECK(planar_euler(lv("1,1,1,1,1,4")) == 0);   // RP^3
    CHECK(planar_euler(lv("1,1,1,1,3")) == 1);     // RP^2
    CHECK(planar_euler(lv("1/4,1/4,1,1,1")) == 0); // torus
    CHECK(planar_euler(lv("1,1,10")) == 0);        // empty space

    for (int m = 3; m <= 6; ++m)
        for (const auto& alpha : chamber_representatives(m, 9))
            CHECK(planar_euler(alpha) == poincare(alpha, SpaceTag::Pol).evaluate_at_i());
}

TEST_CASE("exact division guards") {
    PoincarePolynomial p({Int(1), Int(1)});
    PoincarePolynomial d({Int(1), Int(0), Int(-1)});
    CHECK_THROWS_AS(p.exact_divide(d), InexactDivisionError);
    PoincarePolynomial q({Int(1), Int(0), Int(-1)});
    CHECK(q.exact_divide(PoincarePolynomial({Int(1), Int(-1)})).to_string() == "1 + t");
}
