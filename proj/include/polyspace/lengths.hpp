#pragma once

#include "polyspace/numeric.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace polyspace {

/// An exact positive length vector alpha = (alpha_1, ..., alpha_m), m >= 3.
class LengthVector {
public:
    explicit LengthVector(std::vector<Rat> alpha);

    /// Parses "1,1,1,2" with entries "7" or "3/4". Decimals are rejected.
    static LengthVector parse(const std::string& text);

    int edge_count() const { return static_cast<int>(alpha_.size()); }
    const Rat& length(int i) const { return alpha_[static_cast<std::size_t>(i)]; }  // 0-based
    const std::vector<Rat>& lengths() const { return alpha_; }

    /// Integer rescaling of alpha (common denominator cleared). Subset sums
    /// use these; scaling does not change the short/long structure.
    const std::vector<Int>& scaled() const { return scaled_; }
    const Int& scaled_total() const { return scaled_total_; }

    /// Cyclic reorder (alpha_{k+1},...,alpha_m,alpha_1,...,alpha_k) putting
    /// edge k (1-based) last, so the presentation builders distinguish it.
    LengthVector distinguished_last(int k) const;

    /// new[i] = alpha[perm[i]] with perm a 0-based permutation.
    LengthVector permuted(const std::vector<int>& perm) const;

    std::string to_string() const;

private:
    std::vector<Rat> alpha_;
    std::vector<Int> scaled_;
    Int scaled_total_;
};

/// A sign vector epsilon with sum(eps_i * alpha_i) = 0, when one exists.
std::optional<std::vector<int>> degenerate_signs(const LengthVector& alpha);

bool is_generic(const LengthVector& alpha);

void require_generic(const LengthVector& alpha);

enum class FamilyKind { Shorts, DistinguishedShorts, Longs, DistinguishedLongs };

/// A downward- or upward-closed family of subsets of an index set, stored as
/// explicit bitmasks (bit i-1 is edge i). Exponential in m; meant for m <= ~20.
class SubsetFamily {
public:
    SubsetFamily(FamilyKind kind, int ground_size, std::uint32_t ground_mask,
                 std::vector<std::uint32_t> members);

    FamilyKind kind() const { return kind_; }
    int ground_size() const { return ground_size_; }
    std::uint32_t ground_mask() const { return ground_mask_; }
    // by value on rvalues, so iterating members() of a temporary stays valid
    const std::vector<std::uint32_t>& members() const& { return members_; }
    std::vector<std::uint32_t> members() && { return std::move(members_); }
    std::size_t size() const { return members_.size(); }

    bool contains(std::uint32_t subset) const;
    std::vector<std::uint32_t> maximal_elements() const;
    std::vector<std::uint32_t> minimal_elements() const;
    bool downward_closed() const;
    bool upward_closed() const;

    bool operator==(const SubsetFamily& other) const {
        return ground_mask_ == other.ground_mask_ && members_ == other.members_;
    }

private:
    FamilyKind kind_;
    int ground_size_;
    std::uint32_t ground_mask_;
    std::vector<std::uint32_t> members_;  // sorted
};

std::string subset_to_string(std::uint32_t subset);
std::string subsets_to_string(const std::vector<std::uint32_t>& subsets);

/// S(alpha): all short subsets of {1..m}. Throws NonGenericError.
SubsetFamily short_family(const LengthVector& alpha);

/// L(alpha): all long subsets of {1..m}.
SubsetFamily long_family(const LengthVector& alpha);

/// S_k(alpha) = { J subset of {1..m}-{k} : J + {k} short }, k 1-based.
SubsetFamily distinguished_subposet(const LengthVector& alpha, int k);

/// L_k(alpha) = { J subset of {1..m}-{k} : J + {k} long }.
SubsetFamily distinguished_longs(const LengthVector& alpha, int k);

/// Rebuilds the full short family from S_k alone: for k in J use
/// J - {k} in S_k, otherwise use complement(J) - {k} not in S_k.
/// Throws InconsistentFamilyError when sk is not downward closed.
SubsetFamily reconstruct_shorts(const SubsetFamily& sk, int k, int m);

/// Searches for a permutation carrying S(a) onto S(b); the witness perm is
/// 0-based with perm[i] = image of edge i. Brute force over m! with pruning
/// by per-edge membership profiles; fine for m <= 9.
std::optional<std::vector<int>> classify_pair(const LengthVector& a, const LengthVector& b);

std::vector<std::uint32_t> apply_permutation(const std::vector<std::uint32_t>& subsets,
                                             const std::vector<int>& perm);

}  // namespace polyspace
