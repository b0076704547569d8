#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <vector>

#include "whit/coeff.hpp"

namespace whit {

inline constexpr std::size_t kMaxRank = 8;

/// Element of Z^n, the grading group of Der A_n.
///
/// Comparison is the total order of the grading: β < α iff the first nonzero
/// entry of α − β is positive, which is the lexicographic order on tuples.
/// Only weights of equal rank may be compared or added.
class Weight {
public:
    Weight() = default;
    Weight(std::initializer_list<std::int32_t> entries);

    static Weight zero(std::size_t rank);
    /// ε_i, 1-based index.
    static Weight unit(std::size_t rank, std::size_t index);

    std::size_t rank() const noexcept { return rank_; }
    std::int32_t operator[](std::size_t i) const noexcept { return c_[i]; }
    std::int32_t& operator[](std::size_t i) noexcept { return c_[i]; }

    bool is_zero() const noexcept;

    Weight operator-() const;
    Weight& operator+=(const Weight& o);
    Weight& operator-=(const Weight& o);
    friend Weight operator+(Weight a, const Weight& b) { return a += b; }
    friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
    friend Weight operator*(std::int32_t k, Weight a);

    bool operator==(const Weight& o) const noexcept { return rank_ == o.rank_ && c_ == o.c_; }
    std::strong_ordering operator<=>(const Weight& o) const noexcept;

    std::string str() const;

private:
    std::uint8_t rank_ = 0;
    std::array<std::int32_t, kMaxRank> c_{};
};

/// The order of the grading group: less, equal or greater.
std::strong_ordering weight_cmp(const Weight& a, const Weight& b);

enum class TriangularPart { negative, zero, positive };

/// Which summand of L = L⁺ ⊕ h ⊕ L⁻ contains the weight space L_α.
TriangularPart triangular_part(const Weight& alpha);
bool is_positive(const Weight& alpha);

/// Basis derivation d_i(α) = t^α t_i ∂/∂t_i; index is 1-based.
/// Ordered by weight, then index.
struct Generator {
    int index = 1;
    Weight weight;

    bool operator==(const Generator& o) const noexcept = default;
    std::strong_ordering operator<=>(const Generator& o) const noexcept;
};

/// One term c·d_k(α+β) of a basis bracket.
struct BasisBracketTerm {
    long coeff;
    int index;
};

/// [d_i(α), d_j(β)] = β_i d_j(α+β) − α_j d_i(α+β); at most two terms, all of weight α+β.
/// Returns the number of nonzero terms written to out.
int basis_bracket(const Generator& x, const Generator& y, std::array<BasisBracketTerm, 2>& out);

/// Finite linear combination Σ c_{i,α} d_i(α) with Scalar coefficients.
class LieElt {
public:
    using TermMap = std::map<Generator, Scalar>;

    LieElt() = default;
    static LieElt basis(int index, const Weight& weight, const Scalar& coeff = Scalar(1));
    static LieElt basis(const Generator& g, const Scalar& coeff = Scalar(1));

    const TermMap& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    /// Rank of the weights involved, or 0 for the zero element.
    std::size_t rank() const noexcept;
    Scalar coeff(const Generator& g) const;

    void add_term(const Generator& g, const Scalar& c);

    LieElt operator-() const;
    LieElt& operator+=(const LieElt& o);
    LieElt& operator-=(const LieElt& o);
    friend LieElt operator+(LieElt a, const LieElt& b) { return a += b; }
    friend LieElt operator-(LieElt a, const LieElt& b) { return a -= b; }
    friend LieElt operator*(const Scalar& s, const LieElt& x);
    bool operator==(const LieElt& o) const { return terms_ == o.terms_; }

private:
    TermMap terms_;
};

LieElt bracket(const LieElt& x, const LieElt& y);

/// The value of ψ on an element of L⁺ (rank 2 only).
///
/// ψ is determined by its values on Ω: d1(ε2) ↦ ψ1, d2(ε2) ↦ ψ2, d2(2ε2) ↦ ψ3.
/// d1(2ε2) and every weight space above 2ε2 lie in [L⁺, L⁺] and map to 0.
/// Throws NotPositive if some weight of x is not positive.
Scalar psi_eval(const LieElt& x, const PsiSpec& spec);
Scalar psi_eval(const Generator& g, const PsiSpec& spec);

/// c · [left, right].
struct BracketTerm {
    Scalar coeff;
    LieElt left;
    LieElt right;
};

/// Writes d_i(α), α > 2ε_n, as a combination of brackets of elements of L⁺.
///
/// α_n > 2: for i ≠ n, α_i/(α_n−2)[d_n(ε_n), d_n(α−ε_n)] − [d_i(ε_n), d_n(α−ε_n)];
///          for i = n, 1/(α_n−2)[d_n(ε_n), d_n(α−ε_n)].
/// α_n ≤ 2: with i0 the first index having α_{i0} ≠ 0 (then α_{i0} > 0),
///          1/α_{i0}[d_{i0}(ε_n), d_i(α−ε_n)] + δ_{in}/α_{i0}²[d_{i0}(ε_n), d_{i0}(α−ε_n)].
/// Throws OutOfRange unless α > 2ε_n.
std::vector<BracketTerm> prop21_decompose(int index, const Weight& alpha);

/// The two-bracket α_n > 2 expression applied verbatim for every index,
/// including i = n where it evaluates to 2·d_n(α).
std::vector<BracketTerm> prop21_uncorrected(int index, const Weight& alpha);

/// Σ c·[left, right].
LieElt evaluate_brackets(const std::vector<BracketTerm>& expr);

}  // namespace whit
