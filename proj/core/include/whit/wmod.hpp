#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "whit/coeff.hpp"
#include "whit/lie.hpp"
#include "whit/orders.hpp"

namespace whit {

/// PBW basis vector x_{1,λ} x_{2,μ} d2(0)^k z^r w of the universal Whittaker module.
struct BasisMonomial {
    Partition lambda;
    Partition mu;
    std::uint32_t k = 0;
    std::uint32_t r = 0;

    Triple triple() const { return {lambda, mu, k}; }
    bool operator==(const BasisMonomial&) const noexcept = default;
};

/// Leading-first order: larger triple first, then larger power of z.
struct LeadingFirst {
    bool operator()(const BasisMonomial& a, const BasisMonomial& b) const;
};

/// Finite Scalar combination of basis monomials, kept in leading-first order.
class ModuleVector {
public:
    using TermMap = std::map<BasisMonomial, Scalar, LeadingFirst>;

    ModuleVector() = default;
    /// The cyclic Whittaker vector w.
    static ModuleVector generator();
    static ModuleVector monomial(const BasisMonomial& m, const Scalar& c = Scalar(1));
    /// x_{λ,μ,k} f(z) w.
    static ModuleVector from_poly(const Triple& t, const ZPoly& f);

    const TermMap& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }
    Scalar coeff(const BasisMonomial& m) const;

    void add_term(const BasisMonomial& m, const Scalar& c);

    /// P(v), leading-first.
    std::vector<Triple> support() const;
    /// f_{λ,μ,k}(z) for the given triple.
    ZPoly poly(const Triple& t) const;
    /// True iff v = f(z) w for some f (including v = 0).
    bool is_z_polynomial() const;
    /// The f with v = f(z) w; throws unless is_z_polynomial().
    ZPoly as_z_polynomial() const;

    ModuleVector specialize(const PsiSpec& spec) const;

    ModuleVector operator-() const;
    ModuleVector& operator+=(const ModuleVector& o);
    ModuleVector& operator-=(const ModuleVector& o);
    friend ModuleVector operator+(ModuleVector a, const ModuleVector& b) { return a += b; }
    friend ModuleVector operator-(ModuleVector a, const ModuleVector& b) { return a -= b; }
    friend ModuleVector operator*(const Scalar& s, const ModuleVector& v);
    bool operator==(const ModuleVector& o) const { return terms_ == o.terms_; }

private:
    TermMap terms_;
};

struct Degree {
    Triple triple;
    ZPoly leading;
};

/// deg(v) with its coefficient polynomial; throws ZeroVector for v = 0.
Degree degree_of(const ModuleVector& v);

/// v ∈ W_ψ(t), the span of monomials whose triple is ≺ t. W_ψ(0̄,0̄,0) = {0}.
bool in_filtration(const ModuleVector& v, const Triple& t);

/// Product of generators applied to w; the rightmost factor acts first.
using Word = std::vector<Generator>;

/// The PBW word of a basis monomial (z^r and d2(0)^k expanded).
Word to_word(const BasisMonomial& m);

/// Counters of one normal-ordering run.
struct RewriteStats {
    std::size_t rewrites = 0;
    std::size_t max_word_length = 0;
};

/// The module W_ψ = U(L) ⊗_{U(L⁺)} C_ψ for n = 2 with a fixed ψ.
///
/// The action is computed by normal ordering words g_1 ⋯ g_m w. Words are
/// rewritten by two rules until every factor is non-positive and the factors
/// are in PBW order (d1-negatives, d2-negatives, d2(0), z):
///
///   - a positive rightmost factor x is replaced by the scalar ψ(x);
///   - the rightmost adjacent out-of-order pair a b becomes b a + [a, b].
///
/// Each rule strictly decreases (length, inversion count) in lexicographic
/// order, and this is checked on every rewrite; a failure raises
/// InternalAssertion. Pending words are processed largest measure first so
/// every word is rewritten once with its fully accumulated coefficient.
///
/// All members are const and the object holds no cache, so a single instance
/// may be shared between threads.
class WhittakerModule {
public:
    explicit WhittakerModule(PsiSpec spec) : psi_(std::move(spec)) {}

    const PsiSpec& psi() const noexcept { return psi_; }

    ModuleVector act(const LieElt& x, const ModuleVector& v) const;
    ModuleVector act(const Generator& g, const ModuleVector& v) const;
    /// Acts with word[n-1] first and word[0] last, i.e. by the product word[0]⋯word[n-1].
    ModuleVector act_word(const std::vector<LieElt>& word, const ModuleVector& v) const;
    /// (D − ψ(D))^exponent v for D ∈ L⁺.
    ModuleVector apply_shifted(const LieElt& d, const ModuleVector& v, unsigned exponent = 1) const;

    /// Normal form of Σ c·(word)w.
    ModuleVector normal_form(const std::vector<std::pair<Word, Scalar>>& words, RewriteStats* stats = nullptr) const;

private:
    PsiSpec psi_;
};

/// Lex-positive α with 0 ≤ α1 ≤ a1_max and a2_min ≤ α2 ≤ a2_max.
struct CheckBox {
    int a1_max = 3;
    int a2_min = -3;
    int a2_max = 3;
};

/// Box sized from v: M1 is the largest first coordinate of a weight sum in
/// P(v), M2 the largest Σ|γ2| over the entries of a support triple; the box is
/// [0, M1+3] × [−M2−3, M2+3].
CheckBox default_check_box(const ModuleVector& v);

/// Generators d_i(α) to test: the three elements of Ω first (d2(2ε2), d1(ε2),
/// d2(ε2)), then every other lex-positive α of the box ascending, d1 before d2.
std::vector<Generator> check_generators(const CheckBox& box);

struct WhittakerCheck {
    bool passed = false;
    std::optional<Generator> witness;
    /// act(witness, v) − ψ(witness) v when refuted.
    ModuleVector defect;
    std::size_t checked = 0;
};

/// Tests x v = ψ(x) v over the box generators; refutation is exact, passing
/// certifies the box only. Throws ZeroVector for v = 0.
WhittakerCheck is_whittaker(const WhittakerModule& module, const ModuleVector& v,
                            const std::optional<CheckBox>& box = std::nullopt);

}  // namespace whit
