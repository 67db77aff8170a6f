#include "polyspace/lengths.hpp"

#include "polyspace/errors.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace polyspace {

LengthVector::LengthVector(std::vector<Rat> alpha) : alpha_(std::move(alpha)) {
    if (alpha_.size() < 3) throw std::invalid_argument("a length vector needs at least 3 edges");
    if (alpha_.size() > 25) throw TooLargeError("length vectors beyond 25 edges are not supported");
    Int common_den = 1;
    for (const Rat& a : alpha_) {
        if (a.numerator() <= 0) throw std::invalid_argument("lengths must be strictly positive");
        common_den = boost::multiprecision::lcm(common_den, a.denominator());
    }
    scaled_.reserve(alpha_.size());
    scaled_total_ = 0;
    for (const Rat& a : alpha_) {
        scaled_.push_back(a.numerator() * (common_den / a.denominator()));
        scaled_total_ += scaled_.back();
    }
}

LengthVector LengthVector::parse(const std::string& text) {
    std::vector<Rat> entries;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) {
        auto begin = token.find_first_not_of(" \t");
        auto end = token.find_last_not_of(" \t");
        if (begin == std::string::npos) throw std::invalid_argument("empty length entry");
        entries.push_back(parse_rational(token.substr(begin, end - begin + 1)));
    }
    return LengthVector(std::move(entries));
}

LengthVector LengthVector::distinguished_last(int k) const {
    const int m = edge_count();
    if (k < 1 || k > m) throw std::invalid_argument("distinguished edge out of range");
    std::vector<Rat> reordered;
    reordered.reserve(alpha_.size());
    for (int i = 0; i < m; ++i) reordered.push_back(alpha_[static_cast<std::size_t>((k + i) % m)]);
    return LengthVector(std::move(reordered));
}

LengthVector LengthVector::permuted(const std::vector<int>& perm) const {
    if (perm.size() != alpha_.size()) throw std::invalid_argument("permutation has wrong size");
    std::vector<Rat> out(alpha_.size());
    for (std::size_t i = 0; i < perm.size(); ++i) out[i] = alpha_[static_cast<std::size_t>(perm[i])];
    return LengthVector(std::move(out));
}

std::string LengthVector::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < alpha_.size(); ++i) {
        if (i) out += ",";
        out += rational_to_string(alpha_[i]);
    }
    return out;
}

std::optional<std::vector<int>> degenerate_signs(const LengthVector& alpha) {
    const int m = alpha.edge_count();
    const auto& w = alpha.scaled();
    // By symmetry fix eps_m = -1: 2^(m-1) sign patterns.
    const std::uint32_t half = 1u << (m - 1);
    for (std::uint32_t bits = 0; bits < half; ++bits) {
        Int sum = -w[static_cast<std::size_t>(m - 1)];
        for (int i = 0; i < m - 1; ++i)
            sum += (bits >> i) & 1u ? w[static_cast<std::size_t>(i)] : -w[static_cast<std::size_t>(i)];
        if (sum == 0) {
            std::vector<int> signs(static_cast<std::size_t>(m), -1);
            for (int i = 0; i < m - 1; ++i)
                signs[static_cast<std::size_t>(i)] = (bits >> i) & 1u ? 1 : -1;
            return signs;
        }
    }
    return std::nullopt;
}

bool is_generic(const LengthVector& alpha) { return !degenerate_signs(alpha).has_value(); }

void require_generic(const LengthVector& alpha) {
    if (auto signs = degenerate_signs(alpha)) {
        std::string message = "non-generic: ";
        for (int i = 0; i < alpha.edge_count(); ++i) {
            const bool plus = (*signs)[static_cast<std::size_t>(i)] > 0;
            if (i == 0)
                message += plus ? "" : "-";
            else
                message += plus ? "+" : "-";
            message += rational_to_string(alpha.length(i));
        }
        message += "=0";
        throw NonGenericError(message);
    }
}

SubsetFamily::SubsetFamily(FamilyKind kind, int ground_size, std::uint32_t ground_mask,
                           std::vector<std::uint32_t> members)
    : kind_(kind), ground_size_(ground_size), ground_mask_(ground_mask), members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    for (std::uint32_t s : members_)
        if ((s & ~ground_mask_) != 0) throw std::invalid_argument("family member outside its ground set");
}

bool SubsetFamily::contains(std::uint32_t subset) const {
    return std::binary_search(members_.begin(), members_.end(), subset);
}

std::vector<std::uint32_t> SubsetFamily::maximal_elements() const {
    std::vector<std::uint32_t> out;
    for (std::uint32_t s : members_) {
        bool maximal = true;
        std::uint32_t rest = ground_mask_ & ~s;
        while (rest && maximal) {
            std::uint32_t bit = rest & (~rest + 1u);
            if (contains(s | bit)) maximal = false;
            rest ^= bit;
        }
        if (maximal) out.push_back(s);
    }
    return out;
}

std::vector<std::uint32_t> SubsetFamily::minimal_elements() const {
    std::vector<std::uint32_t> out;
    for (std::uint32_t s : members_) {
        bool minimal = true;
        std::uint32_t rest = s;
        while (rest && minimal) {
            std::uint32_t bit = rest & (~rest + 1u);
            if (contains(s ^ bit)) minimal = false;
            rest ^= bit;
        }
        if (minimal) out.push_back(s);
    }
    return out;
}

bool SubsetFamily::downward_closed() const {
    for (std::uint32_t s : members_) {
        std::uint32_t rest = s;
        while (rest) {
            std::uint32_t bit = rest & (~rest + 1u);
            if (!contains(s ^ bit)) return false;
            rest ^= bit;
        }
    }
    return true;
}

bool SubsetFamily::upward_closed() const {
    for (std::uint32_t s : members_) {
        std::uint32_t rest = ground_mask_ & ~s;
        while (rest) {
            std::uint32_t bit = rest & (~rest + 1u);
            if (!contains(s | bit)) return false;
            rest ^= bit;
        }
    }
    return true;
}

std::string subset_to_string(std::uint32_t subset) {
    std::string out = "{";
    bool first = true;
    for (int i = 0; i < 32; ++i) {
        if ((subset >> i) & 1u) {
            if (!first) out += ",";
            out += std::to_string(i + 1);
            first = false;
        }
    }
    out += "}";
    return out;
}

std::string subsets_to_string(const std::vector<std::uint32_t>& subsets) {
    std::string out;
    for (std::size_t i = 0; i < subsets.size(); ++i) {
        if (i) out += " ";
        out += subset_to_string(subsets[i]);
    }
    return out;
}

namespace {

std::vector<std::uint32_t> short_masks(const LengthVector& alpha) {
    require_generic(alpha);
    const int m = alpha.edge_count();
    if (m > 20) throw TooLargeError("subset families beyond 20 edges are not supported");
    const auto& w = alpha.scaled();
    const Int& total = alpha.scaled_total();
    const std::uint32_t limit = 1u << m;
    std::vector<Int> sums(limit);
    sums[0] = 0;
    std::vector<std::uint32_t> shorts;
    for (std::uint32_t s = 1; s < limit; ++s) {
        std::uint32_t low = s & (~s + 1u);
        sums[s] = sums[s ^ low] + w[static_cast<std::size_t>(std::countr_zero(low))];
    }
    for (std::uint32_t s = 0; s < limit; ++s)
        if (2 * sums[s] < total) shorts.push_back(s);
    return shorts;
}

}  // namespace

SubsetFamily short_family(const LengthVector& alpha) {
    const int m = alpha.edge_count();
    return SubsetFamily(FamilyKind::Shorts, m, (1u << m) - 1u, short_masks(alpha));
}

SubsetFamily long_family(const LengthVector& alpha) {
    const int m = alpha.edge_count();
    const std::uint32_t ground = (1u << m) - 1u;
    auto shorts = short_masks(alpha);
    std::vector<std::uint32_t> longs;
    longs.reserve((1u << m) - shorts.size());
    std::size_t at = 0;
    for (std::uint32_t s = 0; s <= ground; ++s) {
        if (at < shorts.size() && shorts[at] == s)
            ++at;
        else
            longs.push_back(s);
    }
    return SubsetFamily(FamilyKind::Longs, m, ground, longs);
}

SubsetFamily distinguished_subposet(const LengthVector& alpha, int k) {
    const int m = alpha.edge_count();
    if (k < 1 || k > m) throw std::invalid_argument("distinguished edge out of range");
    const std::uint32_t kbit = 1u << (k - 1);
    const std::uint32_t ground = ((1u << m) - 1u) & ~kbit;
    std::vector<std::uint32_t> members;
    for (std::uint32_t s : short_masks(alpha))
        if (s & kbit) members.push_back(s ^ kbit);
    return SubsetFamily(FamilyKind::DistinguishedShorts, m, ground, members);
}

SubsetFamily distinguished_longs(const LengthVector& alpha, int k) {
    const int m = alpha.edge_count();
    if (k < 1 || k > m) throw std::invalid_argument("distinguished edge out of range");
    const std::uint32_t kbit = 1u << (k - 1);
    const std::uint32_t ground = ((1u << m) - 1u) & ~kbit;
    auto shorts = short_family(alpha);
    std::vector<std::uint32_t> members;
    for (std::uint32_t s = 0; s <= ground; ++s) {
        if (s & kbit) continue;
        if ((s & ~ground) == 0 && !shorts.contains(s | kbit)) members.push_back(s);
    }
    return SubsetFamily(FamilyKind::DistinguishedLongs, m, ground, members);
}

SubsetFamily reconstruct_shorts(const SubsetFamily& sk, int k, int m) {
    if (!sk.downward_closed())
        throw InconsistentFamilyError("S_k input is not closed under taking subsets");
    const std::uint32_t kbit = 1u << (k - 1);
    const std::uint32_t full = (1u << m) - 1u;
    if ((sk.ground_mask() & kbit) != 0)
        throw InconsistentFamilyError("S_k ground set must not contain the distinguished edge");
    std::vector<std::uint32_t> members;
    for (std::uint32_t j = 0; j <= full; ++j) {
        if (j & kbit) {
            if (sk.contains(j ^ kbit)) members.push_back(j);
        } else {
            std::uint32_t other = (full & ~j) ^ kbit;  // complement(J) - {k}
            if (!sk.contains(other)) members.push_back(j);
        }
    }
    return SubsetFamily(FamilyKind::Shorts, m, full, members);
}

std::vector<std::uint32_t> apply_permutation(const std::vector<std::uint32_t>& subsets,
                                             const std::vector<int>& perm) {
    std::vector<std::uint32_t> out;
    out.reserve(subsets.size());
    for (std::uint32_t s : subsets) {
        std::uint32_t image = 0;
        for (std::size_t i = 0; i < perm.size(); ++i)
            if ((s >> i) & 1u) image |= 1u << perm[i];
        out.push_back(image);
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// per-edge profile: for every subset size, in how many maximal shorts of that
// size the edge sits; a poset isomorphism must match profiles
std::vector<std::vector<int>> edge_profiles(const SubsetFamily& shorts) {
    const int m = shorts.ground_size();
    auto maximal = shorts.maximal_elements();
    std::vector<std::vector<int>> profile(static_cast<std::size_t>(m),
                                          std::vector<int>(static_cast<std::size_t>(m + 1), 0));
    for (std::uint32_t s : maximal) {
        int size = std::popcount(s);
        for (int i = 0; i < m; ++i)
            if ((s >> i) & 1u) ++profile[static_cast<std::size_t>(i)][static_cast<std::size_t>(size)];
    }
    return profile;
}

bool extend_match(const std::vector<std::uint32_t>& a_members, const std::vector<std::uint32_t>& b_sorted,
                  const std::vector<std::vector<int>>& pa, const std::vector<std::vector<int>>& pb,
                  std::vector<int>& perm, std::vector<bool>& used, std::size_t next) {
    const std::size_t m = perm.size();
    if (next == m) {
        auto mapped = apply_permutation(a_members, perm);
        return mapped == b_sorted;
    }
    for (std::size_t image = 0; image < m; ++image) {
        if (used[image] || pa[next] != pb[image]) continue;
        perm[next] = static_cast<int>(image);
        used[image] = true;
        if (extend_match(a_members, b_sorted, pa, pb, perm, used, next + 1)) return true;
        used[image] = false;
    }
    return false;
}

}  // namespace

std::optional<std::vector<int>> classify_pair(const LengthVector& a, const LengthVector& b) {
    if (a.edge_count() != b.edge_count())
        throw DimensionMismatchError("length vectors have different edge counts");
    auto sa = short_family(a);
    auto sb = short_family(b);
    if (sa.size() != sb.size()) return std::nullopt;
    auto pa = edge_profiles(sa);
    auto pb = edge_profiles(sb);
    {
        auto sorted_a = pa;
        auto sorted_b = pb;
        std::sort(sorted_a.begin(), sorted_a.end());
        std::sort(sorted_b.begin(), sorted_b.end());
        if (sorted_a != sorted_b) return std::nullopt;
    }
    std::vector<int> perm(static_cast<std::size_t>(a.edge_count()), -1);
    std::vector<bool> used(perm.size(), false);
    std::vector<std::uint32_t> b_sorted = sb.members();
    if (extend_match(sa.members(), b_sorted, pa, pb, perm, used, 0)) return perm;
    return std::nullopt;
}

}  // namespace polyspace
