#pragma once

#include "polyspace/lengths.hpp"
#include "polyspace/numeric.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace polyspace::testing {

inline LengthVector lv(const std::string& text) { return LengthVector::parse(text); }

inline LengthVector lv(std::vector<int> entries) {
    std::vector<Rat> rats;
    rats.reserve(entries.size());
    for (int e : entries) rats.emplace_back(e);
    return LengthVector(std::move(rats));
}

inline std::uint32_t mask(std::initializer_list<int> edges) {
    std::uint32_t m = 0;
    for (int e : edges) m |= 1u << (e - 1);
    return m;
}

// canonical form of a subset family under edge permutations: the smallest
// sorted member list over all relabelings
inline std::vector<std::uint32_t> canonical_family(const std::vector<std::uint32_t>& members, int m) {
    std::vector<int> perm(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) perm[static_cast<std::size_t>(i)] = i;
    std::vector<std::uint32_t> best;
    do {
        std::vector<std::uint32_t> image = apply_permutation(members, perm);
        if (best.empty() || image < best) best = std::move(image);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

// Representatives of every short-family class realized by integer vectors
// with entries <= max_entry. An odd total makes genericity automatic. The
// returned vectors are nondecreasing and pairwise in different classes.
inline std::vector<LengthVector> chamber_representatives(int m, int max_entry,
                                                         bool up_to_permutation = true) {
    std::vector<LengthVector> reps;
    std::vector<std::vector<std::uint32_t>> seen_raw;
    std::vector<std::vector<std::uint32_t>> seen_canonical;
    std::vector<int> entries(static_cast<std::size_t>(m), 1);
    auto scan = [&](auto&& self, int index, int low) -> void {
        if (index == m) {
            int total = 0;
            for (int e : entries) total += e;
            if (total % 2 == 0) return;
            LengthVector alpha = lv(entries);
            auto family = short_family(alpha).members();
            if (std::find(seen_raw.begin(), seen_raw.end(), family) != seen_raw.end()) return;
            seen_raw.push_back(family);
            if (up_to_permutation) {
                auto canonical = canonical_family(family, m);
                if (std::find(seen_canonical.begin(), seen_canonical.end(), canonical) !=
                    seen_canonical.end())
                    return;
                seen_canonical.push_back(std::move(canonical));
            }
            reps.push_back(std::move(alpha));
            return;
        }
        for (int e = low; e <= max_entry; ++e) {
            entries[static_cast<std::size_t>(index)] = e;
            self(self, index + 1, e);
        }
    };
    scan(scan, 0, 1);
    return reps;
}

// A deterministic sample of distinct chambers for larger m.
inline std::vector<LengthVector> random_chambers(int m, int count, unsigned seed, int max_entry = 40) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> pick(1, max_entry);
    std::vector<LengthVector> reps;
    std::vector<std::vector<std::uint32_t>> seen;
    int attempts = 0;
    while (static_cast<int>(reps.size()) < count && attempts < 100000) {
        ++attempts;
        std::vector<int> entries(static_cast<std::size_t>(m));
        int total = 0;
        for (int& e : entries) total += (e = pick(rng));
        if (total % 2 == 0) {
            entries[0] += 1;
            if (entries[0] > max_entry) continue;
        }
        std::sort(entries.begin(), entries.end());
        LengthVector alpha = lv(entries);
        auto family = short_family(alpha).members();
        if (std::find(seen.begin(), seen.end(), family) != seen.end()) continue;
        seen.push_back(std::move(family));
        reps.push_back(std::move(alpha));
    }
    return reps;
}

}  // namespace polyspace::testing
