#include "whit/solver.hpp"

#include <algorithm>
#include <exception>
#include <thread>

#include "whit/error.hpp"
#include "whit/linalg.hpp"

namespace whit {

void validate(const Truncation& trunc) {
    if (trunc.cap.rank() != 2) throw OutOfRange("truncation cap must be a rank-2 weight");
    if (trunc.cap < Weight::zero(2)) throw OutOfRange("truncation cap must be non-negative");
    for (const auto& e : trunc.entries) {
        if (e.rank() != 2) throw OutOfRange("truncation entries must be rank-2 weights");
        if (!is_positive(e)) throw NotPositive("truncation entry " + e.str() + " is not positive");
    }
    if (trunc.cap[0] > 0 && !trunc.max_length) {
        throw OutOfRange("a cap with positive first coordinate needs max_length");
    }
}

namespace {

// Multisets over `entries` (sorted, distinct) with sum ≤ cap and length ≤ max_len.
void enumerate_partitions(const std::vector<Weight>& entries, std::size_t from, const Weight& cap,
                          std::size_t max_len, std::vector<Weight>& cur, Weight sum, std::vector<Partition>& out) {
    out.push_back(Partition::from_entries(cur));
    if (cur.size() == max_len) return;
    for (std::size_t i = from; i < entries.size(); ++i) {
        Weight next = sum + entries[i];
        if (next > cap) continue;
        cur.push_back(entries[i]);
        enumerate_partitions(entries, i, cap, max_len, cur, next, out);
        cur.pop_back();
    }
}

struct Ascending {
    bool operator()(const BasisMonomial& a, const BasisMonomial& b) const { return LeadingFirst{}(b, a); }
};

bool inside(const ModuleVector& v, const Truncation& trunc) {
    for (const auto& [m, c] : v.terms()) {
        if (m.k > trunc.kmax || m.r > trunc.rmax) return false;
        if (m.lambda.sum() + m.mu.sum() > trunc.cap) return false;
    }
    return true;
}

ModuleVector shifted(const WhittakerModule& module, const Generator& g, const ModuleVector& v) {
    ModuleVector out = module.act(g, v);
    if (is_positive(g.weight)) out -= psi_eval(g, module.psi()) * v;
    return out;
}

}  // namespace

std::vector<BasisMonomial> truncation_basis(const Truncation& trunc) {
    validate(trunc);
    std::vector<Weight> entries = trunc.entries;
    std::sort(entries.begin(), entries.end());
    entries.erase(std::unique(entries.begin(), entries.end()), entries.end());
    const std::size_t max_len = trunc.max_length ? *trunc.max_length : std::size_t(-1);

    std::vector<Partition> parts;
    std::vector<Weight> cur;
    enumerate_partitions(entries, 0, trunc.cap, max_len, cur, Weight::zero(2), parts);

    std::vector<BasisMonomial> out;
    for (const auto& lambda : parts) {
        for (const auto& mu : parts) {
            if (lambda.sum() + mu.sum() > trunc.cap) continue;
            if (lambda.length() + mu.length() > max_len) continue;
            for (std::uint32_t k = 0; k <= trunc.kmax; ++k) {
                for (std::uint32_t r = 0; r <= trunc.rmax; ++r) out.push_back({lambda, mu, k, r});
            }
        }
    }
    std::sort(out.begin(), out.end(), Ascending{});
    return out;
}

CheckBox truncation_check_box(const Truncation& trunc) {
    ModuleVector all;
    for (const auto& m : truncation_basis(trunc)) all.add_term(m, Scalar(1));
    return default_check_box(all);
}

std::vector<ModuleVector> whittaker_space(const Truncation& trunc, const PsiSpec& spec, unsigned threads) {
    if (spec.is_symbolic()) throw Error("whittaker_space needs a specialized ψ");
    const auto basis = truncation_basis(trunc);
    const auto gens = check_generators(truncation_check_box(trunc));
    const WhittakerModule module(spec);
    std::vector<Rational> psi_values;
    psi_values.reserve(gens.size());
    for (const auto& g : gens) psi_values.push_back(psi_eval(g, spec).rational_value());

    // Column j lists the defects of basis[j], one block per generator.
    using Entry = std::pair<BasisMonomial, Rational>;
    std::vector<std::vector<std::vector<Entry>>> columns(basis.size());
    const auto fill = [&](std::size_t j) {
        const ModuleVector b = ModuleVector::monomial(basis[j]);
        auto& col = columns[j];
        col.resize(gens.size());
        for (std::size_t g = 0; g < gens.size(); ++g) {
            ModuleVector d = module.act(gens[g], b);
            if (psi_values[g] != 0) d -= Scalar(psi_values[g]) * b;
            for (const auto& [m, c] : d.terms()) col[g].emplace_back(m, c.rational_value());
        }
    };

    threads = std::max(1u, threads);
    if (threads == 1) {
        for (std::size_t j = 0; j < basis.size(); ++j) fill(j);
    } else {
        std::vector<std::thread> pool;
        std::vector<std::exception_ptr> errors(threads);
        for (unsigned t = 0; t < threads; ++t) {
            pool.emplace_back([&, t] {
                try {
                    for (std::size_t j = t; j < basis.size(); j += threads) fill(j);
                } catch (...) {
                    errors[t] = std::current_exception();
                }
            });
        }
        for (auto& th : pool) th.join();
        for (auto& e : errors) {
            if (e) std::rethrow_exception(e);
        }
    }

    RowEchelon echelon(basis.size());
    for (std::size_t g = 0; g < gens.size(); ++g) {
        std::map<BasisMonomial, SparseRow, LeadingFirst> rows;
        for (std::size_t j = 0; j < basis.size(); ++j) {
            for (const auto& [m, c] : columns[j][g]) rows[m].emplace_back(j, c);
        }
        for (const auto& [m, row] : rows) echelon.insert(row);
    }

    std::vector<ModuleVector> out;
    for (const auto& x : echelon.nullspace()) {
        ModuleVector v;
        for (std::size_t j = 0; j < x.size(); ++j) {
            if (x[j] != 0) v.add_term(basis[j], Scalar(x[j]));
        }
        out.push_back(std::move(v));
    }
    return out;
}

ReductionMeasure reduction_measure(const Triple& t) {
    return {t.weight_sum(), t.k, t.mu.length(), t.lambda.positive_count(), t};
}

std::strong_ordering measure_cmp(const ReductionMeasure& a, const ReductionMeasure& b) {
    if (auto c = a.weight_sum <=> b.weight_sum; c != 0) return c;
    if (auto c = a.k <=> b.k; c != 0) return c;
    if (auto c = a.mu_length <=> b.mu_length; c != 0) return c;
    if (auto c = a.positive_count <=> b.positive_count; c != 0) return c;
    return triple_cmp(a.triple, b.triple);
}

Reduction reduce_with(const ModuleVector& v, const PsiSpec& spec, const Action& act, std::size_t max_steps) {
    if (v.is_zero()) throw ZeroVector("cannot reduce the zero vector");
    Reduction red;
    ModuleVector cur = v;
    for (;;) {
        const LemmaContext ctx = lemma_context(cur);
        if (ctx.degree.is_minimum()) break;
        if (red.transcript.steps.size() >= max_steps) {
            throw NonTermination("reduction exceeded " + std::to_string(max_steps) + " steps");
        }
        const LemmaStep st = governing_step(ctx);
        ReductionStep rec;
        rec.lemma = st.lemma;
        rec.op = st.op;
        rec.psi_value = psi_eval(st.op, spec);
        rec.exponent = st.lemma == LemmaId::l3_7 ? ctx.degree.k : 1;
        rec.degree_before = ctx.degree;
        const Triple predicted =
            rec.exponent > 1 ? Triple{ctx.degree.lambda, ctx.degree.mu, 0} : st.target;

        const LieElt d = LieElt::basis(st.op);
        for (unsigned e = 0; e < rec.exponent; ++e) cur = act(d, cur) - rec.psi_value * cur;
        if (cur.is_zero()) {
            throw InternalAssertion("lemma " + lemma_name(st.lemma) + " step reached the zero vector");
        }
        rec.degree_after = degree_of(cur).triple;
        if (!(rec.degree_after == predicted)) {
            throw InternalAssertion("lemma " + lemma_name(st.lemma) + " step missed its predicted degree");
        }
        if (measure_cmp(reduction_measure(rec.degree_after), reduction_measure(rec.degree_before)) >= 0) {
            throw InternalAssertion("reduction measure did not decrease");
        }
        red.transcript.steps.push_back(std::move(rec));
    }
    red.poly = cur.as_z_polynomial();
    red.result = std::move(cur);
    return red;
}

Reduction reduce_to_whittaker(const ModuleVector& v, const PsiSpec& spec, std::size_t max_steps) {
    const WhittakerModule module(spec);
    return reduce_with(
        v, spec, [&](const LieElt& x, const ModuleVector& u) { return module.act(x, u); }, max_steps);
}

ModuleVector replay(const ReductionTranscript& transcript, const ModuleVector& v, const PsiSpec& spec) {
    const WhittakerModule module(spec);
    ModuleVector cur = v;
    for (const auto& st : transcript.steps) {
        for (unsigned e = 0; e < st.exponent; ++e) cur = module.act(st.op, cur) - st.psi_value * cur;
    }
    return cur;
}

SubmoduleResult submodule_generator(const std::vector<ModuleVector>& gens, const Truncation& trunc,
                                    const PsiSpec& spec, unsigned depth) {
    if (spec.is_symbolic()) throw Error("submodule_generator needs a specialized ψ");
    validate(trunc);
    if (gens.empty()) throw ZeroVector("no generators given");
    const WhittakerModule module(spec);
    SubmoduleResult res;
    ZPoly g;
    for (const auto& v : gens) {
        g = gcd(g, reduce_to_whittaker(v, spec).poly);
        ++res.explored;
    }

    std::vector<Generator> ops{{1, Weight::zero(2)}, {2, Weight::zero(2)}};
    const auto box_gens = check_generators(truncation_check_box(trunc));
    ops.insert(ops.end(), box_gens.begin(), box_gens.end());

    constexpr std::size_t kFrontier = 64;
    std::vector<ModuleVector> frontier = gens;
    res.stable = g.degree() == std::size_t(0);
    for (unsigned round = 0; round < depth && !res.stable; ++round) {
        const ZPoly before = g;
        std::vector<ModuleVector> next;
        for (const auto& e : frontier) {
            for (const auto& op : ops) {
                ModuleVector cand = shifted(module, op, e);
                if (cand.is_zero() || !inside(cand, trunc)) continue;
                ++res.explored;
                g = gcd(g, reduce_to_whittaker(cand, spec).poly);
                if (next.size() < kFrontier) next.push_back(std::move(cand));
            }
        }
        res.stable = g == before;
        if (next.empty()) {
            res.stable = true;
            break;
        }
        frontier = std::move(next);
    }
    res.generator = g;
    return res;
}

ModuleVector project_to_quotient(const ModuleVector& v, const Rational& a) {
    ModuleVector out;
    for (const auto& [m, c] : v.terms()) {
        BasisMonomial base = m;
        base.r = 0;
        Rational p = 1;
        for (std::uint32_t i = 0; i < m.r; ++i) p *= a;
        out.add_term(base, Scalar(p) * c);
    }
    return out;
}

ModuleVector quotient_act(const LieElt& x, const ModuleVector& v, const Rational& a, const PsiSpec& spec) {
    return project_to_quotient(WhittakerModule(spec).act(x, v), a);
}

Scalar simplicity_probe(const ModuleVector& v, const Rational& a, const PsiSpec& spec) {
    const ModuleVector start = project_to_quotient(v, a);
    if (start.is_zero()) throw ZeroVector("vector is zero in the quotient");
    const WhittakerModule module(spec);
    const Action act = [&](const LieElt& x, const ModuleVector& u) {
        return project_to_quotient(module.act(x, u), a);
    };
    Reduction red;
    try {
        red = reduce_with(start, spec, act);
    } catch (const InternalAssertion& e) {
        throw ProbeFailed(e.what());
    }
    const Scalar c = red.poly.coeff(0);
    if (c.is_zero()) throw ProbeFailed("reduction in the quotient returned 0");
    return c;
}

}  // namespace whit
