#include "whit/lie.hpp"

#include <algorithm>

#include "whit/error.hpp"

namespace whit {

Weight::Weight(std::initializer_list<std::int32_t> entries) {
    if (entries.size() > kMaxRank) throw OutOfRange("weight rank exceeds kMaxRank");
    rank_ = static_cast<std::uint8_t>(entries.size());
    std::copy(entries.begin(), entries.end(), c_.begin());
}

Weight Weight::zero(std::size_t rank) {
    if (rank > kMaxRank) throw OutOfRange("weight rank exceeds kMaxRank");
    Weight w;
    w.rank_ = static_cast<std::uint8_t>(rank);
    return w;
}

Weight Weight::unit(std::size_t rank, std::size_t index) {
    if (index < 1 || index > rank) throw OutOfRange("unit weight index out of range");
    Weight w = zero(rank);
    w.c_[index - 1] = 1;
    return w;
}

bool Weight::is_zero() const noexcept {
    return std::all_of(c_.begin(), c_.begin() + rank_, [](std::int32_t x) { return x == 0; });
}

Weight Weight::operator-() const {
    Weight w = *this;
    for (std::size_t i = 0; i < rank_; ++i) w.c_[i] = -w.c_[i];
    return w;
}

Weight& Weight::operator+=(const Weight& o) {
    for (std::size_t i = 0; i < rank_; ++i) c_[i] += o.c_[i];
    return *this;
}

Weight& Weight::operator-=(const Weight& o) {
    for (std::size_t i = 0; i < rank_; ++i) c_[i] -= o.c_[i];
    return *this;
}

Weight operator*(std::int32_t k, Weight a) {
    for (std::size_t i = 0; i < a.rank_; ++i) a.c_[i] *= k;
    return a;
}

std::strong_ordering Weight::operator<=>(const Weight& o) const noexcept {
    if (auto c = rank_ <=> o.rank_; c != 0) return c;
    for (std::size_t i = 0; i < rank_; ++i) {
        if (c_[i] != o.c_[i]) return c_[i] <=> o.c_[i];
    }
    return std::strong_ordering::equal;
}

std::string Weight::str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < rank_; ++i) {
        if (i) s += ",";
        s += std::to_string(c_[i]);
    }
    return s + ")";
}

std::strong_ordering weight_cmp(const Weight& a, const Weight& b) { return a <=> b; }

TriangularPart triangular_part(const Weight& alpha) {
    for (std::size_t i = 0; i < alpha.rank(); ++i) {
        if (alpha[i] > 0) return TriangularPart::positive;
        if (alpha[i] < 0) return TriangularPart::negative;
    }
    return TriangularPart::zero;
}

bool is_positive(const Weight& alpha) { return triangular_part(alpha) == TriangularPart::positive; }

std::strong_ordering Generator::operator<=>(const Generator& o) const noexcept {
    if (auto c = weight <=> o.weight; c != 0) return c;
    return index <=> o.index;
}

int basis_bracket(const Generator& x, const Generator& y, std::array<BasisBracketTerm, 2>& out) {
    const long beta_i = y.weight[static_cast<std::size_t>(x.index - 1)];
    const long alpha_j = x.weight[static_cast<std::size_t>(y.index - 1)];
    if (x.index == y.index) {
        const long c = beta_i - alpha_j;
        if (c == 0) return 0;
        out[0] = {c, x.index};
        return 1;
    }
    int n = 0;
    if (beta_i != 0) out[n++] = {beta_i, y.index};
    if (alpha_j != 0) out[n++] = {-alpha_j, x.index};
    return n;
}

// ---------------------------------------------------------------- LieElt

LieElt LieElt::basis(int index, const Weight& weight, const Scalar& coeff) {
    return basis(Generator{index, weight}, coeff);
}

LieElt LieElt::basis(const Generator& g, const Scalar& coeff) {
    if (g.index < 1 || static_cast<std::size_t>(g.index) > g.weight.rank()) {
        throw OutOfRange("generator index out of range for weight rank");
    }
    LieElt x;
    x.add_term(g, coeff);
    return x;
}

std::size_t LieElt::rank() const noexcept { return terms_.empty() ? 0 : terms_.begin()->first.weight.rank(); }

Scalar LieElt::coeff(const Generator& g) const {
    auto it = terms_.find(g);
    return it == terms_.end() ? Scalar() : it->second;
}

void LieElt::add_term(const Generator& g, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(g, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

LieElt LieElt::operator-() const {
    LieElt x = *this;
    for (auto& [g, c] : x.terms_) c = -c;
    return x;
}

LieElt& LieElt::operator+=(const LieElt& o) {
    for (const auto& [g, c] : o.terms_) add_term(g, c);
    return *this;
}

LieElt& LieElt::operator-=(const LieElt& o) {
    for (const auto& [g, c] : o.terms_) add_term(g, -c);
    return *this;
}

LieElt operator*(const Scalar& s, const LieElt& x) {
    LieElt out;
    if (s.is_zero()) return out;
    for (const auto& [g, c] : x.terms_) out.add_term(g, s * c);
    return out;
}

LieElt bracket(const LieElt& x, const LieElt& y) {
    LieElt out;
    std::array<BasisBracketTerm, 2> buf{};
    for (const auto& [gx, cx] : x.terms()) {
        for (const auto& [gy, cy] : y.terms()) {
            const int n = basis_bracket(gx, gy, buf);
            if (n == 0) continue;
            const Scalar c = cx * cy;
            const Weight w = gx.weight + gy.weight;
            for (int t = 0; t < n; ++t) out.add_term(Generator{buf[t].index, w}, Scalar(buf[t].coeff) * c);
        }
    }
    return out;
}

Scalar psi_eval(const Generator& g, const PsiSpec& spec) {
    if (g.weight.rank() != 2) throw OutOfRange("psi is defined for rank-2 weights only");
    if (!is_positive(g.weight)) throw NotPositive("psi_eval: weight " + g.weight.str() + " is not positive");
    if (g.weight[0] != 0) return {};
    if (g.weight[1] == 1) return spec.value(g.index == 1 ? 1 : 2);
    if (g.weight[1] == 2 && g.index == 2) return spec.value(3);
    return {};
}

Scalar psi_eval(const LieElt& x, const PsiSpec& spec) {
    Scalar acc;
    for (const auto& [g, c] : x.terms()) acc += c * psi_eval(g, spec);
    return acc;
}

// ---------------------------------------------------------------- decomposition

namespace {

void require_above_two_eps(const Weight& alpha, int index) {
    const std::size_t n = alpha.rank();
    if (n < 2) throw OutOfRange("decomposition needs rank >= 2");
    if (index < 1 || static_cast<std::size_t>(index) > n) throw OutOfRange("generator index out of range");
    if (!(alpha > 2 * Weight::unit(n, n))) {
        throw OutOfRange("decomposition requires alpha > 2 eps_n, got " + alpha.str());
    }
}

}  // namespace

std::vector<BracketTerm> prop21_decompose(int index, const Weight& alpha) {
    require_above_two_eps(alpha, index);
    const std::size_t n = alpha.rank();
    const int top = static_cast<int>(n);
    const Weight en = Weight::unit(n, n);
    const std::int32_t an = alpha[n - 1];
    std::vector<BracketTerm> out;
    if (an > 2) {
        const Rational denom(an - 2);
        if (index == top) {
            out.push_back({Scalar(Rational(1) / denom), LieElt::basis(top, en), LieElt::basis(top, alpha - en)});
        } else {
            const Rational ai(alpha[static_cast<std::size_t>(index - 1)]);
            out.push_back({Scalar(ai / denom), LieElt::basis(top, en), LieElt::basis(top, alpha - en)});
            out.push_back({Scalar(-1), LieElt::basis(index, en), LieElt::basis(top, alpha - en)});
        }
        return out;
    }
    std::size_t i0 = 0;
    while (alpha[i0] == 0) ++i0;
    const Rational a0(alpha[i0]);
    const int pivot = static_cast<int>(i0 + 1);
    out.push_back({Scalar(Rational(1) / a0), LieElt::basis(pivot, en), LieElt::basis(index, alpha - en)});
    if (index == top) {
        out.push_back({Scalar(Rational(1) / (a0 * a0)), LieElt::basis(pivot, en), LieElt::basis(pivot, alpha - en)});
    }
    return out;
}

std::vector<BracketTerm> prop21_uncorrected(int index, const Weight& alpha) {
    require_above_two_eps(alpha, index);
    const std::size_t n = alpha.rank();
    const int top = static_cast<int>(n);
    const Weight en = Weight::unit(n, n);
    const std::int32_t an = alpha[n - 1];
    if (an <= 2) throw OutOfRange("the two-bracket expression needs alpha_n > 2");
    const Rational ai(alpha[static_cast<std::size_t>(index - 1)]);
    return {
        {Scalar(ai / Rational(an - 2)), LieElt::basis(top, en), LieElt::basis(top, alpha - en)},
        {Scalar(-1), LieElt::basis(index, en), LieElt::basis(top, alpha - en)},
    };
}

LieElt evaluate_brackets(const std::vector<BracketTerm>& expr) {
    LieElt out;
    for (const auto& t : expr) out += t.coeff * bracket(t.left, t.right);
    return out;
}

}  // namespace whit
