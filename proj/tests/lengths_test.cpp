#include "polyspace/lengths.hpp"

#include "polyspace/errors.hpp"
#include "support/helpers.hpp"

#include <doctest.h>

#include <bit>
#include <random>

using namespace polyspace;
using namespace polyspace::testing;

namespace {

// independent oracle: try every sign vector with exact rational sums
bool generic_by_full_enumeration(const LengthVector& alpha) {
    const int m = alpha.edge_count();
    for (std::uint32_t bits = 0; bits < (1u << m); ++bits) {
        Rat sum(0);
        for (int i = 0; i < m; ++i)
            sum += ((bits >> i) & 1u) ? alpha.length(i) : -alpha.length(i);
        if (sum.numerator() == 0) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("genericity by sign enumeration") {
    CHECK_FALSE(is_generic(lv("1,1,1,1")));
    CHECK(is_generic(lv("1,1,1,1,1")));
    CHECK(is_generic(lv("2,2,3,5,5,10")));
    CHECK(generic_by_full_enumeration(lv("2,2,3,5,5,10")));
    CHECK_FALSE(generic_by_full_enumeration(lv("1,1,1,1")));
    CHECK(is_generic(lv("1/2,1/3,1/4")));
    CHECK_FALSE(is_generic(lv("1/2,1/3,1/6")));

    auto witness = degenerate_signs(lv("1,1,1,1"));
    REQUIRE(witness.has_value());
    Rat sum(0);
    for (int i = 0; i < 4; ++i) sum += Rat((*witness)[static_cast<std::size_t>(i)]);
    CHECK(sum.numerator() == 0);
}

TEST_CASE("short families of the two quadrilateral chambers") {
    SubsetFamily s1 = short_family(lv("1,1,1,2"));
    CHECK(s1.maximal_elements() ==
          std::vector<std::uint32_t>{mask({1, 2}), mask({1, 3}), mask({2, 3}), mask({4})});
    SubsetFamily s2 = short_family(lv("2,2,2,1"));
    CHECK(s2.maximal_elements() ==
          std::vector<std::uint32_t>{mask({1, 4}), mask({2, 4}), mask({3, 4})});

    SubsetFamily tri = short_family(lv("1,1,1"));
    CHECK(tri.members() ==
          std::vector<std::uint32_t>{0, mask({1}), mask({2}), mask({3})});

    CHECK(s1.downward_closed());
    CHECK(long_family(lv("1,1,1,2")).upward_closed());
    CHECK_THROWS_AS(short_family(lv("1,1,1,1")), NonGenericError);
}

TEST_CASE("complement duality for generic vectors") {
    for (const auto& alpha : {lv("1,1,1,2"), lv("2,2,3,5,5,10"), lv("1,2,3,5")}) {
        SubsetFamily s = short_family(alpha);
        const std::uint32_t full = s.ground_mask();
        for (std::uint32_t j = 0; j <= full; ++j)
            CHECK(s.contains(j) != s.contains(full & ~j));
        CHECK(s.contains(0));
    }
}

TEST_CASE("distinguished subposets") {
    SubsetFamily pentagon = distinguished_subposet(lv("1,1,1,1,1"), 5);
    CHECK(pentagon.members() ==
          std::vector<std::uint32_t>{0, mask({1}), mask({2}), mask({3}), mask({4})});

    SubsetFamily hexagon = distinguished_subposet(lv("2,2,3,5,5,10"), 6);
    CHECK(hexagon.members() ==
          std::vector<std::uint32_t>{0, mask({1}), mask({2}), mask({3})});

    SubsetFamily degenerate = distinguished_subposet(lv("1,1,10"), 3);
    CHECK(degenerate.members().empty());

    SubsetFamily longs = distinguished_longs(lv("1,1,1,2"), 4);
    CHECK(longs.minimal_elements() ==
          std::vector<std::uint32_t>{mask({1}), mask({2}), mask({3})});
}

TEST_CASE("reconstruction of the full short family from S_k") {
    SUBCASE("round trips on chamber representatives") {
        for (int m = 3; m <= 7; ++m) {
            int bound = m <= 5 ? 9 : (m == 6 ? 11 : 13);
            auto reps = chamber_representatives(m, bound);
            for (const auto& alpha : reps) {
                for (int k = 1; k <= m; ++k) {
                    SubsetFamily sk = distinguished_subposet(alpha, k);
                    CHECK(reconstruct_shorts(sk, k, m) == short_family(alpha));
                }
            }
        }
    }
    SUBCASE("an empty S_k forces the two membership rules") {
        SubsetFamily empty(FamilyKind::DistinguishedShorts, 3, mask({1, 2}), {});
        SubsetFamily s = reconstruct_shorts(empty, 3, 3);
        CHECK(s.contains(0));
        CHECK_FALSE(s.contains(mask({3})));
    }
    SUBCASE("closure violations are rejected") {
        SubsetFamily bad(FamilyKind::DistinguishedShorts, 4, mask({1, 2, 3}), {mask({1})});
        CHECK_THROWS_AS(reconstruct_shorts(bad, 4, 4), InconsistentFamilyError);
    }
}

TEST_CASE("classify_pair finds a witness permutation or proves none") {
    auto identity = classify_pair(lv("1,1,1,2"), lv("1,1,1,2"));
    REQUIRE(identity.has_value());
    CHECK(apply_permutation(short_family(lv("1,1,1,2")).members(), *identity) ==
          short_family(lv("1,1,1,2")).members());

    CHECK_FALSE(classify_pair(lv("1,1,1,2"), lv("2,2,2,1")).has_value());

    auto witness = classify_pair(lv("1,2,3,5"), lv("3,1,5,2"));
    REQUIRE(witness.has_value());
    CHECK(apply_permutation(short_family(lv("1,2,3,5")).members(), *witness) ==
          short_family(lv("3,1,5,2")).members());

    CHECK_THROWS_AS(classify_pair(lv("1,1,1"), lv("1,1,1,2")), DimensionMismatchError);
}

TEST_CASE("short families are permutation equivariant") {
    std::mt19937 rng(20240517);
    std::uniform_int_distribution<int> entry(1, 12);
    for (int trial = 0; trial < 60; ++trial) {
        int m = 3 + static_cast<int>(rng() % 5);
        std::vector<int> entries(static_cast<std::size_t>(m));
        for (int& e : entries) e = entry(rng);
        LengthVector alpha = lv(entries);
        if (!is_generic(alpha)) continue;
        std::vector<int> perm(static_cast<std::size_t>(m));
        for (int i = 0; i < m; ++i) perm[static_cast<std::size_t>(i)] = i;
        std::shuffle(perm.begin(), perm.end(), rng);
        LengthVector beta = alpha.permuted(perm);
        CHECK(apply_permutation(short_family(beta).members(), perm) ==
              short_family(alpha).members());
    }
}

TEST_CASE("singleton membership matches emptiness of the polygon space") {
    SubsetFamily s = short_family(lv("1,1,10"));
    bool all_singletons_short = true;
    for (int i = 1; i <= 3; ++i) all_singletons_short &= s.contains(mask({i}));
    CHECK_FALSE(all_singletons_short);

    SubsetFamily t = short_family(lv("1,1,1,2"));
    for (int i = 1; i <= 4; ++i) CHECK(t.contains(mask({i})));
}

TEST_CASE("chamber censuses are stable") {
    CHECK(chamber_representatives(3, 7).size() == 2);
    CHECK(chamber_representatives(4, 9).size() == 3);
    CHECK(chamber_representatives(5, 9).size() == 7);
    CHECK(chamber_representatives(6, 11).size() == 21);
}
