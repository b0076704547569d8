#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "whit/lemmas.hpp"
#include "whit/wmod.hpp"

namespace whit {

/// A finite slice of the PBW basis: monomials x_{λ,μ,k} z^r w with entries of
/// λ and μ drawn from `entries`, |λ| + |μ| ≤ cap, k ≤ kmax and r ≤ rmax.
///
/// When cap has a positive first coordinate, entries (0,b) can repeat without
/// bound under the cap, so max_length (a bound on ℓ(λ) + ℓ(μ)) is required.
struct Truncation {
    Weight cap = Weight::zero(2);
    std::vector<Weight> entries;
    std::uint32_t kmax = 0;
    std::uint32_t rmax = 0;
    std::optional<std::uint32_t> max_length;
};

/// Throws OutOfRange on a non-positive entry or an unbounded slice.
void validate(const Truncation& trunc);

/// Basis monomials of the slice, ascending (w first).
std::vector<BasisMonomial> truncation_basis(const Truncation& trunc);

/// The default check box of the vector spanned by the whole slice.
CheckBox truncation_check_box(const Truncation& trunc);

/// Basis of the Whittaker vectors inside the slice: the nullspace of
/// {act(d_i(α), v) = ψ(d_i(α)) v} over the slice's check generators, solved
/// exactly. Vectors are ordered by their free column, so z^r w comes out as
/// the r-th vector. Requires specialized ψ; threads > 1 computes the columns
/// of the system in parallel.
std::vector<ModuleVector> whittaker_space(const Truncation& trunc, const PsiSpec& spec, unsigned threads = 1);

/// One application of (op − ψ(op))^exponent.
struct ReductionStep {
    LemmaId lemma = LemmaId::l3_7;
    Generator op;
    Scalar psi_value;
    unsigned exponent = 1;
    Triple degree_before;
    Triple degree_after;
};

struct ReductionTranscript {
    std::vector<ReductionStep> steps;
};

/// (|λ|+|μ|, k, ℓ(μ), Σ_{β∈S⁺_λ} λ(β)), then the full triple.
struct ReductionMeasure {
    Weight weight_sum;
    std::uint32_t k = 0;
    std::size_t mu_length = 0;
    std::uint32_t positive_count = 0;
    Triple triple;
};

ReductionMeasure reduction_measure(const Triple& t);
std::strong_ordering measure_cmp(const ReductionMeasure& a, const ReductionMeasure& b);

struct Reduction {
    /// f with f(z) w = result.
    ZPoly poly;
    ModuleVector result;
    ReductionTranscript transcript;
};

/// Maps (op, v) to the action of op on v in the module being reduced.
using Action = std::function<ModuleVector(const LieElt&, const ModuleVector&)>;

/// Drives v to a nonzero multiple of a Whittaker polynomial by repeatedly
/// applying the operator prescribed by the governing lemma (to the power k′
/// when k′ > 0). Every step must land exactly on the lemma's predicted
/// degree, which strictly decreases the measure; otherwise InternalAssertion.
/// Throws ZeroVector for v = 0 and NonTermination past max_steps.
Reduction reduce_to_whittaker(const ModuleVector& v, const PsiSpec& spec, std::size_t max_steps = 10000);

/// Same loop with a caller-supplied action (used for quotients).
Reduction reduce_with(const ModuleVector& v, const PsiSpec& spec, const Action& act, std::size_t max_steps = 10000);

/// Reapplies the recorded operators to v.
ModuleVector replay(const ReductionTranscript& transcript, const ModuleVector& v, const PsiSpec& spec);

struct SubmoduleResult {
    /// Monic generator of I_M = {f : f(z) w ∈ M} found within the slice.
    ZPoly generator;
    /// Vectors reduced during the search.
    std::size_t explored = 0;
    /// True when the last search round did not change the gcd.
    bool stable = false;
};

/// Generator of the ideal of the submodule U(L)·gens. The gcd of the
/// reductions of the generators is refined breadth-first by applying z, d2(0)
/// and x − ψ(x) for positive generators x of the slice's check box, keeping
/// only vectors inside the slice (weight sum ≤ cap, k ≤ kmax, r ≤ rmax).
SubmoduleResult submodule_generator(const std::vector<ModuleVector>& gens, const Truncation& trunc,
                                    const PsiSpec& spec, unsigned depth = 2);

/// π: W_ψ → L_{ψ,a}, substituting z ↦ a.
ModuleVector project_to_quotient(const ModuleVector& v, const Rational& a);

/// The action on L_{ψ,a} = W_ψ / U(b⁻)(z−a)w: π(act(x, v)).
ModuleVector quotient_act(const LieElt& x, const ModuleVector& v, const Rational& a, const PsiSpec& spec);

/// Runs the reduction inside L_{ψ,a} and returns c with c·w̄ ∈ U(L)·v.
/// Throws ZeroVector if π(v) = 0 and ProbeFailed if the reduction reaches 0.
Scalar simplicity_probe(const ModuleVector& v, const Rational& a, const PsiSpec& spec);

}  // namespace whit
