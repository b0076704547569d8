// Acceptance run: one PASS/FAIL line per criterion, exact arithmetic throughout.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include "cli.hpp"
#include "oracles.hpp"
#include "random_vectors.hpp"
#include "whit/error.hpp"
#include "whit/json_io.hpp"
#include "whit/text.hpp"

using namespace whit;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

struct Criterion {
    int id;
    std::string name;
    double limit_s;
    std::function<Outcome()> run;
};

// Collects failures; the first few are kept for the report line.
struct Tracker {
    std::size_t checks = 0;
    std::size_t failures = 0;
    std::string first;

    void expect(bool ok, const std::string& what) {
        ++checks;
        if (ok) return;
        if (failures++ == 0) first = what;
    }
    Outcome outcome(const std::string& summary) const {
        if (failures == 0) return {true, summary};
        return {false, summary + "; " + std::to_string(failures) + " failed, first: " + first};
    }
};

LieElt random_homogeneous(std::mt19937_64& rng, int bound) {
    std::uniform_int_distribution<int> e(-bound, bound);
    std::uniform_int_distribution<int> c(-3, 3);
    const Weight w{e(rng), e(rng)};
    LieElt x;
    while (x.is_zero()) x = LieElt::basis(1, w, Scalar(c(rng))) + LieElt::basis(2, w, Scalar(c(rng)));
    return x;
}

// Sum of 1-3 PBW monomials, each with at most `factors` factors in total.
ModuleVector random_pbw(std::mt19937_64& rng, int factors, bool symbolic) {
    static const std::vector<Weight> pool{{0, 1}, {0, 2}, {0, 3}, {1, -2}, {1, -1}, {1, 0}, {1, 1}, {2, -1}};
    std::uniform_int_distribution<int> pick(0, int(pool.size()) - 1);
    std::uniform_int_distribution<int> slot(0, 3);
    std::uniform_int_distribution<int> num(-4, 4);
    ModuleVector v;
    while (v.is_zero()) {
        for (int t = std::uniform_int_distribution<int>(1, 3)(rng); t > 0; --t) {
            std::vector<Weight> lam;
            std::vector<Weight> mu;
            BasisMonomial m;
            for (int n = std::uniform_int_distribution<int>(0, factors)(rng); n > 0; --n) {
                switch (slot(rng)) {
                    case 0: lam.push_back(pool[pick(rng)]); break;
                    case 1: mu.push_back(pool[pick(rng)]); break;
                    case 2: ++m.k; break;
                    default: ++m.r; break;
                }
            }
            m.lambda = Partition::from_entries(lam);
            m.mu = Partition::from_entries(mu);
            const Scalar c = symbolic ? whit::testing::random_coeff(rng) : Scalar(num(rng));
            v.add_term(m, c);
        }
    }
    return v;
}

std::string fmt_seconds(double s) {
    std::ostringstream o;
    o << std::fixed << std::setprecision(2) << s << " s";
    return o.str();
}

// 1. Jacobi identity and antisymmetry, cross-checked against vector fields.
Outcome lie_soundness() {
    std::mt19937_64 rng(1001);
    Tracker t;
    for (int i = 0; i < 1000; ++i) {
        const LieElt x = random_homogeneous(rng, 4);
        const LieElt y = random_homogeneous(rng, 4);
        const LieElt z = random_homogeneous(rng, 4);
        const LieElt jac = bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) + bracket(z, bracket(x, y));
        t.expect(jac.is_zero(), "Jacobi at " + format_lie(x) + ", " + format_lie(y) + ", " + format_lie(z));
        t.expect((bracket(x, y) + bracket(y, x)).is_zero(), "antisymmetry at " + format_lie(x) + ", " + format_lie(y));
        t.expect(bracket(x, y) == oracle::vector_field_bracket(x, y), "vector fields at " + format_lie(x));
    }
    return t.outcome("1000 triples, bracket equals the vector-field commutator");
}

// 2. Decomposition round trip and the factor 2 of the uncorrected i = n form.
Outcome decomposition() {
    Tracker t;
    std::size_t total = 0;
    std::size_t doubled = 0;
    for (int a1 = -5; a1 <= 5; ++a1) {
        for (int a2 = -5; a2 <= 5; ++a2) {
            const Weight alpha{a1, a2};
            if (!(alpha > Weight{0, 2})) continue;
            for (int i = 1; i <= 2; ++i) {
                ++total;
                const auto terms = prop21_decompose(i, alpha);
                t.expect(evaluate_brackets(terms) == LieElt::basis(i, alpha), "d" + std::to_string(i) + alpha.str());
                LieElt via_fields;
                for (const auto& b : terms) via_fields += b.coeff * oracle::vector_field_bracket(b.left, b.right);
                t.expect(via_fields == LieElt::basis(i, alpha), "vector fields at " + alpha.str());
            }
            if (a2 > 2) {
                const bool two = evaluate_brackets(prop21_uncorrected(2, alpha)) == LieElt::basis(2, alpha, Scalar(2));
                doubled += two;
                t.expect(two, "uncorrected i=n at " + alpha.str());
                t.expect(evaluate_brackets(prop21_uncorrected(1, alpha)) == LieElt::basis(1, alpha),
                         "uncorrected i=1 at " + alpha.str());
            }
        }
    }
    t.expect(total == 116, "weight count " + std::to_string(total));
    return t.outcome(std::to_string(total) + " decompositions exact; uncorrected i=n form gives 2*d2 in " +
                     std::to_string(doubled) + " cases");
}

// 3. act([x,y],v) = x(yv) − y(xv) with symbolic ψ.
Outcome action_axiom() {
    std::mt19937_64 rng(3003);
    const WhittakerModule m(PsiSpec::symbolic());
    Tracker t;
    for (int i = 0; i < 200; ++i) {
        const LieElt x = random_homogeneous(rng, 3);
        const LieElt y = random_homogeneous(rng, 3);
        const ModuleVector v = random_pbw(rng, 4, true);
        const ModuleVector lhs = m.act(bracket(x, y), v);
        const ModuleVector rhs = m.act(x, m.act(y, v)) - m.act(y, m.act(x, v));
        t.expect(lhs == rhs, "x=" + format_lie(x) + " y=" + format_lie(y) + " v=" + format_vector(v));
    }
    return t.outcome("200 (x,y,v) triples, symbolic psi");
}

// 4. Ω acts by ψ modulo the filtration.
Outcome omega_congruence() {
    const PsiSpec sym = PsiSpec::symbolic();
    Tracker t;
    for (const auto& inst : random_lemma_instances(LemmaId::l3_5, 200, 4004)) {
        const LemmaReport r = verify_lemma(inst, sym);
        const ModuleVector defect = r.computed - r.printed;
        t.expect(r.match && r.filtration_ok && r.errata.empty(), "report for " + format_vector(inst.vector()));
        t.expect(oracle::below(defect, r.target), "oracle filtration for " + format_vector(inst.vector()));
    }
    return t.outcome("200 instances, defect below the instance triple");
}

// 5. Whittaker vectors of the slice are exactly w, zw, z²w, z³w.
Outcome whittaker_vectors() {
    Truncation trunc;
    trunc.cap = Weight{0, 4};
    trunc.entries = {{0, 1}, {0, 2}, {0, 3}, {1, -1}, {1, 0}, {1, 1}};
    trunc.kmax = 2;
    trunc.rmax = 3;
    Tracker t;
    std::vector<ModuleVector> expected;
    for (std::uint32_t r = 0; r <= 3; ++r) expected.push_back(ModuleVector::monomial({{}, {}, 0, r}));
    for (const PsiSpec& spec : {PsiSpec::specialized(1, 1, 1), PsiSpec::specialized(2, 3, 5)}) {
        const auto space = whittaker_space(trunc, spec);
        t.expect(space == expected, "basis has " + std::to_string(space.size()) + " vectors");
        const WhittakerModule m(spec);
        for (const auto& v : space) t.expect(is_whittaker(m, v).passed, "predicate on " + format_vector(v));
    }
    return t.outcome(std::to_string(truncation_basis(trunc).size()) +
                     " monomials; psi=(1,1,1) and (2,3,5) give {w, z w, z^2 w, z^3 w}");
}

// 6. Every reduction lemma on 50 random instances.
Outcome lemma_suite() {
    const PsiSpec sym = PsiSpec::symbolic();
    Tracker t;
    std::map<std::string, std::size_t> errata;
    for (LemmaId id : all_lemmas()) {
        const std::string name = lemma_name(id);
        for (const auto& inst : random_lemma_instances(id, 50, 6006)) {
            const LemmaReport r = verify_lemma(inst, sym);
            const std::string where = name + " on " + format_vector(inst.vector());
            for (const auto& e : r.errata) ++errata[e];
            auto has = [&](std::string_view code) {
                return std::find(r.errata.begin(), r.errata.end(), code) != r.errata.end();
            };
            t.expect(r.filtration_ok, "residual " + where);
            t.expect(oracle::below(r.computed - r.exact, r.target), "oracle residual " + where);
            t.expect(r.accepted(), "accepted " + where);
            t.expect(has(kErrataProofSign) == (id == LemmaId::l3_8_1), "proof-sign entry " + where);
            t.expect(has(kErrataBetaScalar) == (id == LemmaId::l3_11_2), "beta-scalar entry " + where);
            if (id == LemmaId::l3_11_3) {
                t.expect(!r.match && has(kErrataPsiIndex), "psi-index entry " + where);
            } else {
                t.expect(r.match && !has(kErrataPsiIndex), "statement " + where);
            }
        }
    }
    std::string summary = "9 lemmas x 50 instances; errata";
    for (const auto& [e, n] : errata) summary += " " + e + " x" + std::to_string(n);
    return t.outcome(summary);
}

// 7. Reduction to a Whittaker polynomial with replay and stepwise descent.
Outcome reduction() {
    std::mt19937_64 rng(7007);
    const std::vector<PsiSpec> specs{PsiSpec::symbolic(), PsiSpec::specialized(1, 2, 3),
                                     PsiSpec::specialized(Rational(-3, 2), 5, Rational(1, 7))};
    Tracker t;
    std::size_t steps = 0;
    for (int i = 0; i < 100; ++i) {
        const PsiSpec& spec = specs[std::size_t(i) % specs.size()];
        const WhittakerModule m(spec);
        const ModuleVector v = random_pbw(rng, 5, false);
        const std::string where = format_vector(v);
        const Reduction red = reduce_to_whittaker(v, spec);
        t.expect(!red.result.is_zero() && red.result == ModuleVector::from_poly({}, red.poly), "result " + where);
        t.expect(is_whittaker(m, red.result).passed, "Whittaker " + where);
        t.expect(replay(red.transcript, v, spec) == red.result, "replay " + where);
        ModuleVector cur = v;
        for (const auto& s : red.transcript.steps) {
            ++steps;
            t.expect(degree_of(cur).triple == s.degree_before, "recorded degree " + where);
            cur = m.apply_shifted(LieElt::basis(s.op.index, s.op.weight), cur, s.exponent);
            t.expect(!cur.is_zero() && degree_of(cur).triple == s.degree_after, "landing degree " + where);
            t.expect(oracle::triple_less(s.degree_after, s.degree_before), "triple descent " + where);
            t.expect(measure_cmp(reduction_measure(s.degree_after), reduction_measure(s.degree_before)) ==
                         std::strong_ordering::less,
                     "measure descent " + where);
        }
        t.expect(cur == red.result, "stepwise replay " + where);
    }
    return t.outcome("100 inputs, " + std::to_string(steps) + " steps");
}

// Slice spanned by the support of v.
Truncation slice_of(const ModuleVector& v) {
    Truncation t;
    std::size_t longest = 0;
    for (const auto& [m, c] : v.terms()) {
        t.cap = std::max(t.cap, m.lambda.sum() + m.mu.sum());
        for (const auto& e : m.lambda.support()) t.entries.push_back(e);
        for (const auto& e : m.mu.support()) t.entries.push_back(e);
        t.kmax = std::max(t.kmax, m.k);
        t.rmax = std::max(t.rmax, m.r);
        longest = std::max(longest, m.lambda.length() + m.mu.length());
    }
    std::sort(t.entries.begin(), t.entries.end());
    t.entries.erase(std::unique(t.entries.begin(), t.entries.end()), t.entries.end());
    if (t.cap[0] > 0) t.max_length = std::uint32_t(longest);
    return t;
}

// 8. Submodule generator against the brute-force span closure.
Outcome submodule_oracle() {
    std::mt19937_64 rng(8008);
    const PsiSpec spec = PsiSpec::specialized(1, 2, 3);
    const WhittakerModule m(spec);
    static const std::vector<Weight> pool{{0, 1}, {0, 2}, {1, -1}, {1, 0}};
    std::uniform_int_distribution<int> root(-3, 3);
    std::uniform_int_distribution<int> kind(0, 3);
    std::uniform_int_distribution<int> pick(0, int(pool.size()) - 1);
    Tracker t;
    std::string found;
    for (int i = 0; i < 20; ++i) {
        ZPoly g(Scalar(1));
        for (int d = std::uniform_int_distribution<int>(0, 3)(rng); d > 0; --d) {
            g = g * (ZPoly::monomial(1) - ZPoly(Scalar(root(rng))));
        }
        std::vector<LieElt> u;
        for (int n = std::uniform_int_distribution<int>(0, 3)(rng); n > 0; --n) {
            switch (kind(rng)) {
                case 0: u.push_back(LieElt::basis(1, Weight{0, 0})); break;
                case 1: u.push_back(LieElt::basis(2, Weight{0, 0})); break;
                case 2: u.push_back(LieElt::basis(1, -pool[pick(rng)])); break;
                default: u.push_back(LieElt::basis(2, -pool[pick(rng)])); break;
            }
        }
        const ModuleVector v = m.act_word(u, ModuleVector::from_poly({}, g));
        const Truncation slice = slice_of(v);
        const ZPoly lib = submodule_generator({v}, slice, spec).generator;
        const std::vector<Rational> ref = oracle::submodule_ideal(v, slice, spec);
        t.expect(lib == ZPoly::from_rationals(ref), "g=" + format_poly(g) + " v=" + format_vector(v) + " library " +
                                                         format_poly(lib) + " oracle " +
                                                         format_poly(ZPoly::from_rationals(ref)));
        if (i < 3) found += (found.empty() ? "" : ", ") + format_poly(lib);
    }
    return t.outcome("20 cases agree with the span closure (first: " + found + ")");
}

// 9. The probe reaches a nonzero multiple of w̄ from every quotient basis vector.
Outcome simplicity() {
    const PsiSpec spec = PsiSpec::specialized(1, 2, 3);
    const Rational a = 2;
    Truncation trunc;
    trunc.cap = Weight{0, 3};
    trunc.entries = {{0, 1}, {0, 2}, {0, 3}};
    trunc.kmax = 2;
    trunc.rmax = 0;
    Tracker t;
    std::size_t n = 0;
    const Action qact = [&](const LieElt& x, const ModuleVector& v) { return quotient_act(x, v, a, spec); };
    for (const auto& b : truncation_basis(trunc)) {
        ++n;
        const ModuleVector v = ModuleVector::monomial(b);
        const std::string where = format_monomial(b);
        try {
            const Scalar c = simplicity_probe(v, a, spec);
            t.expect(c.is_rational() && !c.is_zero(), "probe value at " + where);
            const Reduction red = reduce_with(v, spec, qact);
            t.expect(red.result == c * ModuleVector::generator(), "quotient reduction at " + where);
        } catch (const ProbeFailed& e) {
            t.expect(false, "ProbeFailed at " + where);
        }
    }
    return t.outcome(std::to_string(n) + " quotient basis vectors, all probes nonzero");
}

struct CliResult {
    int code;
    std::string out;
};

CliResult cli(const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, out, err);
    return {code, out.str()};
}

// 10. Text and JSON round trips through the CLI, and exit codes.
Outcome cli_contract() {
    std::mt19937_64 rng(10010);
    const WhittakerModule m(PsiSpec::symbolic());
    Tracker t;
    for (int i = 0; i < 100; ++i) {
        const ModuleVector v = whit::testing::random_module_vector(rng);
        const std::string text = format_vector(v);
        t.expect(parse_vector(text, m) == v, "text parse of " + text);
        t.expect(cli({"nf", "--", text}).out == text + "\n", "cli text round trip of " + text);
        const std::string json = to_json(v).dump();
        t.expect(vector_from_json(parse_json(json)) == v, "json parse of " + text);
        const CliResult r = cli({"nf", json, "--format", "json"});
        t.expect(r.code == 0 && vector_from_json(parse_json(r.out)) == v, "cli json round trip of " + text);
    }
    t.expect(cli({"act", "d1(0,1)", "w"}).out == "s1 * w\n", "act d1(0,1) w");
    t.expect(cli({"act", "d1(0 1)", "w"}).code == cli::kParseError, "parse error exit");
    t.expect(cli({"nf", "d1(0,-1) x"}).code == cli::kParseError, "bad token exit");
    t.expect(cli({"act", "d1(0,1)", "w", "--psi", "1,0,3"}).code == cli::kSingularPsi, "singular psi exit");
    t.expect(cli({"verify", "3.11.3", "--random", "5", "--seed", "7"}).code == cli::kOk, "verify with errata exit");
    t.expect(cli({"verify", "3.11.3", "--random", "5", "--seed", "7", "--strict"}).code == cli::kMismatch,
             "seeded mismatch exit");
    return t.outcome("100 vectors round-trip as text and JSON; exit codes 0/1/2/3 as specified");
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "Lie algebra soundness", 30, lie_soundness},
        {2, "decomposition round trip", 10, decomposition},
        {3, "action axiom", 120, action_axiom},
        {4, "Omega filtration congruence", 60, omega_congruence},
        {5, "Whittaker vectors at truncation", 300, whittaker_vectors},
        {6, "lemma verifier suite", 300, lemma_suite},
        {7, "reduction to Whittaker polynomials", 300, reduction},
        {8, "submodule oracle equivalence", 600, submodule_oracle},
        {9, "simplicity probe on the quotient", 300, simplicity},
        {10, "CLI round trip and exit codes", 30, cli_contract},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (s > c.limit_s) {
            o.pass = false;
            o.detail += "; over the " + fmt_seconds(c.limit_s) + " limit";
        }
        failed += !o.pass;
        std::cout << (o.pass ? "PASS" : "FAIL") << " [" << c.id << "] " << c.name << " (" << fmt_seconds(s) << "): "
                  << o.detail << std::endl;
    }
    std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << std::endl;
    return failed == 0 ? 0 : 1;
}
