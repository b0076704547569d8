#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

#include "whit/lie.hpp"

namespace whit {

/// Finite multiset of positive rank-2 weights.
///
/// Storage is one sorted list of (weight, multiplicity) pairs, ascending in
/// the weight order; the non-decreasing sequence λ¹ ≤ ⋯ ≤ λ^r and the
/// multiplicity function λ(α) are both views of it. The empty partition is
/// the null partition 0̄.
class Partition {
public:
    struct Part {
        Weight weight;
        std::uint32_t mult = 0;

        bool operator==(const Part&) const noexcept = default;
    };

    Partition() = default;
    /// Any order; throws NotPositive for a non-positive entry, OutOfRange for rank ≠ 2.
    static Partition from_entries(const std::vector<Weight>& entries);

    const std::vector<Part>& parts() const noexcept { return parts_; }
    std::vector<Weight> sequence() const;
    std::uint32_t multiplicity(const Weight& alpha) const;
    std::size_t length() const noexcept { return length_; }
    /// |λ|; the zero weight for 0̄.
    const Weight& sum() const noexcept { return sum_; }
    bool is_null() const noexcept { return parts_.empty(); }

    /// S_λ, ascending.
    std::vector<Weight> support() const;
    /// S⁺_λ: the support entries with positive first coordinate, ascending.
    std::vector<Weight> positive_support() const;
    /// Σ_{β ∈ S⁺_λ} λ(β).
    std::uint32_t positive_count() const;

    /// λ_α, or nullopt when λ(α) = 0.
    std::optional<Partition> remove_one(const Weight& alpha) const;
    Partition add_one(const Weight& alpha) const;

    bool operator==(const Partition& o) const noexcept { return parts_ == o.parts_; }
    /// Structural order for use as a container key; unrelated to < and ≺.
    std::strong_ordering structural_cmp(const Partition& o) const noexcept;

private:
    std::vector<Part> parts_;
    std::size_t length_ = 0;
    Weight sum_ = Weight::zero(2);
};

struct PartitionStats {
    std::size_t length = 0;
    Weight weight_sum = Weight::zero(2);
    std::vector<Weight> support;
    std::vector<Weight> positive_support;
};

PartitionStats partition_stats(const Partition& lambda);
std::optional<Partition> remove_one(const Partition& mu, const Weight& alpha);

/// λ < μ: at the least α where the multiplicities differ, λ(α) < μ(α).
bool partition_lt(const Partition& lambda, const Partition& mu);
/// λ ≺ μ: as partition_lt, restricted to entries with positive first
/// coordinate when such a difference exists, otherwise λ < μ.
bool partition_prec(const Partition& lambda, const Partition& mu);

std::strong_ordering partition_lt_cmp(const Partition& lambda, const Partition& mu);
std::strong_ordering partition_prec_cmp(const Partition& lambda, const Partition& mu);

/// (λ, μ, k) ∈ P × P × N, indexing the monomial x_{1,λ} x_{2,μ} d2(0)^k.
struct Triple {
    Partition lambda;
    Partition mu;
    std::uint32_t k = 0;

    Weight weight_sum() const { return lambda.sum() + mu.sum(); }
    bool is_minimum() const noexcept { return lambda.is_null() && mu.is_null() && k == 0; }
    bool operator==(const Triple&) const noexcept = default;
};

/// Total order on triples: weight sum, then k, then μ under <, then λ under ≺.
std::strong_ordering triple_cmp(const Triple& a, const Triple& b);
bool triple_prec(const Triple& a, const Triple& b);

}  // namespace whit
