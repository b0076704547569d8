#include "whit/orders.hpp"

#include <algorithm>

#include "whit/error.hpp"

namespace whit {

Partition Partition::from_entries(const std::vector<Weight>& entries) {
    std::vector<Weight> sorted = entries;
    for (const auto& w : sorted) {
        if (w.rank() != 2) throw OutOfRange("partition entries must be rank-2 weights");
        if (!is_positive(w)) throw NotPositive("partition entry " + w.str() + " is not positive");
    }
    std::sort(sorted.begin(), sorted.end());
    Partition p;
    for (const auto& w : sorted) {
        if (!p.parts_.empty() && p.parts_.back().weight == w) {
            ++p.parts_.back().mult;
        } else {
            p.parts_.push_back({w, 1});
        }
        p.sum_ += w;
    }
    p.length_ = sorted.size();
    return p;
}

std::vector<Weight> Partition::sequence() const {
    std::vector<Weight> out;
    out.reserve(length_);
    for (const auto& part : parts_) out.insert(out.end(), part.mult, part.weight);
    return out;
}

std::uint32_t Partition::multiplicity(const Weight& alpha) const {
    auto it = std::lower_bound(parts_.begin(), parts_.end(), alpha,
                               [](const Part& p, const Weight& w) { return p.weight < w; });
    return (it != parts_.end() && it->weight == alpha) ? it->mult : 0;
}

std::vector<Weight> Partition::support() const {
    std::vector<Weight> out;
    out.reserve(parts_.size());
    for (const auto& part : parts_) out.push_back(part.weight);
    return out;
}

std::vector<Weight> Partition::positive_support() const {
    std::vector<Weight> out;
    for (const auto& part : parts_) {
        if (part.weight[0] > 0) out.push_back(part.weight);
    }
    return out;
}

std::uint32_t Partition::positive_count() const {
    std::uint32_t n = 0;
    for (const auto& part : parts_) {
        if (part.weight[0] > 0) n += part.mult;
    }
    return n;
}

std::optional<Partition> Partition::remove_one(const Weight& alpha) const {
    auto it = std::lower_bound(parts_.begin(), parts_.end(), alpha,
                               [](const Part& p, const Weight& w) { return p.weight < w; });
    if (it == parts_.end() || it->weight != alpha) return std::nullopt;
    Partition p = *this;
    auto pit = p.parts_.begin() + (it - parts_.begin());
    if (--pit->mult == 0) p.parts_.erase(pit);
    --p.length_;
    p.sum_ -= alpha;
    return p;
}

Partition Partition::add_one(const Weight& alpha) const {
    if (alpha.rank() != 2) throw OutOfRange("partition entries must be rank-2 weights");
    if (!is_positive(alpha)) throw NotPositive("partition entry " + alpha.str() + " is not positive");
    Partition p = *this;
    auto it = std::lower_bound(p.parts_.begin(), p.parts_.end(), alpha,
                               [](const Part& q, const Weight& w) { return q.weight < w; });
    if (it != p.parts_.end() && it->weight == alpha) {
        ++it->mult;
    } else {
        p.parts_.insert(it, Part{alpha, 1});
    }
    ++p.length_;
    p.sum_ += alpha;
    return p;
}

std::strong_ordering Partition::structural_cmp(const Partition& o) const noexcept {
    const std::size_t n = std::min(parts_.size(), o.parts_.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (auto c = parts_[i].weight <=> o.parts_[i].weight; c != 0) return c;
        if (auto c = parts_[i].mult <=> o.parts_[i].mult; c != 0) return c;
    }
    return parts_.size() <=> o.parts_.size();
}

PartitionStats partition_stats(const Partition& lambda) {
    return {lambda.length(), lambda.sum(), lambda.support(), lambda.positive_support()};
}

std::optional<Partition> remove_one(const Partition& mu, const Weight& alpha) { return mu.remove_one(alpha); }

namespace {

// Walks both part lists in ascending weight order and compares multiplicities
// at the first weight where they differ, considering only weights accepted by keep.
template <typename Pred>
std::strong_ordering first_difference(const Partition& a, const Partition& b, Pred keep) {
    auto x = a.parts().begin();
    auto y = b.parts().begin();
    const auto xe = a.parts().end();
    const auto ye = b.parts().end();
    while (x != xe || y != ye) {
        if (y == ye || (x != xe && x->weight < y->weight)) {
            if (keep(x->weight)) return std::strong_ordering::greater;  // a(α) > 0 = b(α)
            ++x;
        } else if (x == xe || y->weight < x->weight) {
            if (keep(y->weight)) return std::strong_ordering::less;
            ++y;
        } else {
            if (x->mult != y->mult && keep(x->weight)) return x->mult <=> y->mult;
            ++x;
            ++y;
        }
    }
    return std::strong_ordering::equal;
}

}  // namespace

std::strong_ordering partition_lt_cmp(const Partition& lambda, const Partition& mu) {
    return first_difference(lambda, mu, [](const Weight&) { return true; });
}

std::strong_ordering partition_prec_cmp(const Partition& lambda, const Partition& mu) {
    auto c = first_difference(lambda, mu, [](const Weight& w) { return w[0] > 0; });
    if (c != 0) return c;
    return partition_lt_cmp(lambda, mu);
}

bool partition_lt(const Partition& lambda, const Partition& mu) { return partition_lt_cmp(lambda, mu) < 0; }

bool partition_prec(const Partition& lambda, const Partition& mu) { return partition_prec_cmp(lambda, mu) < 0; }

std::strong_ordering triple_cmp(const Triple& a, const Triple& b) {
    if (auto c = a.weight_sum() <=> b.weight_sum(); c != 0) return c;
    if (auto c = a.k <=> b.k; c != 0) return c;
    if (auto c = partition_lt_cmp(a.mu, b.mu); c != 0) return c;
    return partition_prec_cmp(a.lambda, b.lambda);
}

bool triple_prec(const Triple& a, const Triple& b) { return triple_cmp(a, b) < 0; }

}  // namespace whit
