#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "whit/wmod.hpp"

namespace whit {

/// The filtration congruences that drive the reduction to a Whittaker vector.
///
///   l3_5     D ∈ Ω on x_{λ,μ,k} f(z) w is ψ(D)·(the same) modulo lower triples.
///   l3_7     k′ > 0: d2(2ε2).
///   l3_8_1   k′ = 0, μ′ ≠ 0̄, α = min S_μ′ with α1 > 0: d1(α+2ε2).
///   l3_8_2   as above with α1 = 0: d2(α+2ε2).
///   l3_9     μ′ = 0̄, k′ = 0, S⁺_λ′ ≠ ∅, α = min S⁺_λ′: d2(α+2ε2).
///   l3_10    λ′ ⊂ {(0,·)}, Λ_{N−ε2} = ∅, α = min S_λ′: d2(α+ε2).
///   l3_11_*  λ′ ⊂ {(0,·)}, (ξ,η,l) = max Λ_{N−ε2}; l > 0: d1(ε2);
///            l = 0, η ≠ 0̄: d1(β+ε2), β = min S_η; l = 0, η = 0̄: d2(α+ε2).
enum class LemmaId { l3_5, l3_7, l3_8_1, l3_8_2, l3_9, l3_10, l3_11_1, l3_11_2, l3_11_3 };

/// "3.5", "3.8.1", ...
std::string lemma_name(LemmaId id);
/// Accepts "3.8.1" or "lemma3.8.1".
std::optional<LemmaId> parse_lemma_name(std::string_view text);
const std::vector<LemmaId>& all_lemmas();

/// Structure of a nonzero vector relevant to choosing a reduction operator.
struct LemmaContext {
    Triple degree;
    ZPoly leading;
    /// N = |λ′| + |μ′|.
    Weight n = Weight::zero(2);
    /// Λ_N and Λ_{N−ε2}, leading-first.
    std::vector<Triple> lambda_n;
    std::vector<Triple> lambda_n_minus;
};

/// Throws ZeroVector for v = 0.
LemmaContext lemma_context(const ModuleVector& v);

/// One application of a reduction lemma: (op − ψ(op)) sends v to a vector
/// congruent to coeff · x_{target} f(z) w modulo W_ψ(target).
struct LemmaStep {
    LemmaId lemma = LemmaId::l3_7;
    Generator op;
    Triple target;
    /// The triple whose polynomial f appears on the right side.
    Triple source;
    /// The leading coefficient as stated (before ψ is applied).
    Scalar printed_coeff;
    /// The leading coefficient the action actually produces.
    Scalar exact_coeff;
};

/// The reduction lemma whose hypotheses v satisfies. Throws OutOfRange when
/// deg(v) = (0̄,0̄,0), since then no lemma applies.
LemmaStep governing_step(const LemmaContext& ctx);

/// Errata codes attached to reports.
inline constexpr std::string_view kErrataProofSign = "3.8.1:proof-sign";
inline constexpr std::string_view kErrataBetaScalar = "3.11.2:beta-scalar";
inline constexpr std::string_view kErrataPsiIndex = "3.11.3:psi-index";

/// A vector together with a lemma whose hypotheses it satisfies.
class LemmaInstance {
public:
    /// For l3_5, uw must be x_{λ,μ,k} f(z) w (a single triple) and omega one
    /// of d2(2ε2), d1(ε2), d2(ε2). Throws HypothesisViolated otherwise.
    LemmaInstance(LemmaId id, ModuleVector uw, std::optional<Generator> omega = std::nullopt);

    LemmaId id() const noexcept { return id_; }
    const ModuleVector& vector() const noexcept { return uw_; }
    const LemmaContext& context() const noexcept { return ctx_; }
    const LemmaStep& step() const noexcept { return step_; }

private:
    LemmaId id_;
    ModuleVector uw_;
    LemmaContext ctx_;
    LemmaStep step_;
};

struct LemmaReport {
    LemmaId lemma = LemmaId::l3_5;
    ModuleVector instance;
    Generator op;
    Triple target;
    ModuleVector computed;
    /// Right side as stated.
    ModuleVector printed;
    /// Right side with the coefficient the action produces.
    ModuleVector exact;
    /// computed − printed ∈ W_ψ(target).
    bool match = false;
    /// computed − exact ∈ W_ψ(target).
    bool filtration_ok = false;
    std::vector<std::string> errata;

    /// The congruence holds and any mismatch with the statement is explained by an errata entry.
    bool accepted() const noexcept { return filtration_ok && (match || !errata.empty()); }
};

LemmaReport verify_lemma(const LemmaInstance& inst, const PsiSpec& spec);

/// Random valid instances, reproducible from the seed.
std::vector<LemmaInstance> random_lemma_instances(LemmaId id, std::size_t count, std::uint64_t seed);

}  // namespace whit
