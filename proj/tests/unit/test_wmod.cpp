#include <doctest.h>

#include <random>

#include "whit/error.hpp"
#include "whit/wmod.hpp"

using namespace whit;

namespace {

Partition P(std::initializer_list<Weight> w) { return Partition::from_entries(w); }

ModuleVector X(Partition l, Partition m, std::uint32_t k, std::uint32_t r, const Scalar& c = Scalar(1)) {
    return ModuleVector::monomial({std::move(l), std::move(m), k, r}, c);
}

LieElt d(int i, int a, int b, const Scalar& c = Scalar(1)) { return LieElt::basis(i, Weight{a, b}, c); }

const Scalar s1 = Scalar::psi(1);
const Scalar s3 = Scalar::psi(3);

LieElt random_homogeneous(std::mt19937_64& rng, int bound) {
    std::uniform_int_distribution<int> e(-bound, bound);
    std::uniform_int_distribution<int> c(-2, 2);
    const int a = e(rng);
    const int b = e(rng);
    return d(1, a, b, Scalar(c(rng))) + d(2, a, b, Scalar(c(rng) + 3));
}

ModuleVector random_vector(std::mt19937_64& rng, const WhittakerModule& m) {
    std::uniform_int_distribution<int> e(-2, 1);
    std::uniform_int_distribution<int> len(0, 4);
    std::uniform_int_distribution<int> idx(1, 2);
    std::vector<LieElt> word;
    for (int n = len(rng); n > 0; --n) word.push_back(d(idx(rng), e(rng), e(rng)));
    return m.act_word(word, ModuleVector::generator());
}

}  // namespace

TEST_CASE("action examples") {
    const WhittakerModule m(PsiSpec::symbolic());
    const ModuleVector w = ModuleVector::generator();
    CHECK(m.act(d(1, 0, 1), w) == s1 * w);
    CHECK(m.act(d(2, 0, 2), X({}, {}, 1, 0)) == s3 * X({}, {}, 1, 0) - (Scalar(2) * s3) * w);
    CHECK(m.act(d(1, 0, 1), X(P({{0, 1}}), {}, 0, 0)) == s1 * X(P({{0, 1}}), {}, 0, 0));
    CHECK(m.act(d(1, 0, -1), w) == X(P({{0, 1}}), {}, 0, 0));
    CHECK(m.act(d(2, 0, 0), w) == X({}, {}, 1, 0));
    CHECK(m.act(d(1, 0, 0), w) == X({}, {}, 0, 1));

    CHECK(m.act_word({d(1, 0, 1), d(1, 0, 1)}, w) == (s1 * s1) * w);
    CHECK(m.act_word({}, X({}, {}, 2, 1)) == X({}, {}, 2, 1));
    CHECK(m.act_word({d(2, 0, 2), d(2, 0, 0)}, w) == m.act(d(2, 0, 2), X({}, {}, 1, 0)));
}

TEST_CASE("PBW order of factors") {
    const WhittakerModule m(PsiSpec::symbolic());
    const ModuleVector w = ModuleVector::generator();
    // d2-negatives sit to the right of d1-negatives; [d2(0,-1), d1(0,-2)] = -2 d1(0,-3).
    const ModuleVector v = m.act_word({d(2, 0, -1), d(1, 0, -2)}, w);
    CHECK(v == X(P({{0, 2}}), P({{0, 1}}), 0, 0) - Scalar(2) * X(P({{0, 3}}), {}, 0, 0));
    CHECK(m.act_word({d(1, 0, -2), d(2, 0, -1)}, w) == X(P({{0, 2}}), P({{0, 1}}), 0, 0));
    // z d1(−γ) = d1(−γ)(z − γ1)
    const ModuleVector u = m.act_word({d(1, 0, 0), d(1, -1, 1)}, w);
    CHECK(u == X(P({{1, -1}}), {}, 0, 1) - X(P({{1, -1}}), {}, 0, 0));
    // h2 d1(−γ) = d1(−γ)(h2 − γ2)
    const ModuleVector h = m.act_word({d(2, 0, 0), d(1, 0, -3)}, w);
    CHECK(h == X(P({{0, 3}}), {}, 1, 0) - Scalar(3) * X(P({{0, 3}}), {}, 0, 0));
}

TEST_CASE("degree and filtration") {
    const ModuleVector v = X({}, P({{0, 1}}), 0, 0) + X({}, {}, 0, 5);
    const Degree dv = degree_of(v);
    CHECK(dv.triple == Triple{{}, P({{0, 1}}), 0});
    CHECK(dv.leading == ZPoly(Scalar(1)));

    CHECK(degree_of(ModuleVector::generator()).triple.is_minimum());
    const ModuleVector p = X({}, {}, 0, 2, Scalar(3)) - X({}, {}, 0, 1, Scalar(Rational(1, 2)));
    CHECK(degree_of(p).leading == ZPoly::from_rationals({0, Rational(-1, 2), 3}));
    CHECK_THROWS_AS(degree_of(ModuleVector()), ZeroVector);

    CHECK(in_filtration(X({}, {}, 0, 3), {P({{0, 1}}), {}, 0}));
    CHECK_FALSE(in_filtration(ModuleVector::generator(), {}));
    CHECK(in_filtration(ModuleVector(), {}));
    CHECK(in_filtration(ModuleVector(), {P({{0, 1}}), {}, 0}));
}

TEST_CASE("z-polynomial vectors") {
    const ModuleVector p = X({}, {}, 0, 2, Scalar(3)) + X({}, {}, 0, 0, Scalar(-1));
    CHECK(p.is_z_polynomial());
    CHECK(p.as_z_polynomial() == ZPoly::from_rationals({-1, 0, 3}));
    CHECK_FALSE(X({}, {}, 1, 0).is_z_polynomial());
    CHECK(ModuleVector::from_poly({}, ZPoly::from_rationals({-1, 0, 3})) == p);
}

TEST_CASE("Whittaker predicate") {
    const WhittakerModule m(PsiSpec::symbolic());
    CHECK(is_whittaker(m, ModuleVector::generator()).passed);
    const ModuleVector p = X({}, {}, 0, 2, Scalar(3)) - X({}, {}, 0, 1, Scalar(Rational(1, 2)));
    CHECK(is_whittaker(m, p).passed);

    const ModuleVector x = X(P({{0, 1}}), {}, 0, 0);
    const WhittakerCheck c = is_whittaker(m, x);
    CHECK_FALSE(c.passed);
    REQUIRE(c.witness.has_value());
    CHECK(*c.witness == Generator{2, Weight{0, 2}});
    CHECK(c.defect == -s1 * ModuleVector::generator());
    CHECK_THROWS_AS(is_whittaker(m, ModuleVector()), ZeroVector);

    const auto gens = check_generators(CheckBox{});
    REQUIRE(gens.size() >= 3);
    CHECK(gens[0] == Generator{2, Weight{0, 2}});
    CHECK(gens[1] == Generator{1, Weight{0, 1}});
    CHECK(gens[2] == Generator{2, Weight{0, 1}});
}

TEST_CASE("Whittaker vectors have a unique type") {
    const WhittakerModule m(PsiSpec::symbolic());
    const PsiSpec other = PsiSpec::specialized(1, 1, 1);
    for (const ModuleVector& v : {ModuleVector::generator(), X({}, {}, 0, 1), X({}, {}, 0, 3) + X({}, {}, 0, 0)}) {
        REQUIRE(is_whittaker(m, v).passed);
        const Generator g{1, Weight{0, 1}};
        CHECK_FALSE((m.act(g, v) - psi_eval(g, other) * v).is_zero());
    }
}

TEST_CASE("action axiom and linearity") {
    const WhittakerModule m(PsiSpec::symbolic());
    std::mt19937_64 rng(21);
    for (int i = 0; i < 30; ++i) {
        const LieElt x = random_homogeneous(rng, 4);
        const LieElt y = random_homogeneous(rng, 4);
        const ModuleVector v = random_vector(rng, m);
        const ModuleVector u = random_vector(rng, m);
        CHECK(m.act(bracket(x, y), v) == m.act(x, m.act(y, v)) - m.act(y, m.act(x, v)));
        CHECK(m.act(x + y, v) == m.act(x, v) + m.act(y, v));
        CHECK(m.act(x, v + u) == m.act(x, v) + m.act(x, u));
    }
}

TEST_CASE("generator is a Whittaker vector for every positive element") {
    const PsiSpec spec = PsiSpec::symbolic();
    const WhittakerModule m(spec);
    for (int a = 0; a <= 3; ++a) {
        for (int b = -4; b <= 4; ++b) {
            if (!is_positive(Weight{a, b})) continue;
            const LieElt x = d(1, a, b, Scalar(2)) - d(2, a, b);
            CHECK(m.act(x, ModuleVector::generator()) == psi_eval(x, spec) * ModuleVector::generator());
        }
    }
}

TEST_CASE("positive generators beyond the first-coordinate budget act by zero") {
    const WhittakerModule m(PsiSpec::symbolic());
    std::mt19937_64 rng(2);
    for (int i = 0; i < 30; ++i) {
        const ModuleVector v = random_vector(rng, m);
        if (v.is_zero()) continue;
        int budget = 0;
        for (const auto& t : v.support()) budget = std::max(budget, int(t.weight_sum()[0]));
        for (int b = -3; b <= 3; ++b) {
            CHECK(m.act(d(1, budget + 1, b), v).is_zero());
            CHECK(m.act(d(2, budget + 2, b), v).is_zero());
        }
    }
}

TEST_CASE("Omega does not raise the degree") {
    const WhittakerModule m(PsiSpec::symbolic());
    std::mt19937_64 rng(6);
    for (int i = 0; i < 40; ++i) {
        const ModuleVector v = random_vector(rng, m);
        if (v.is_zero()) continue;
        for (const Generator& g : {Generator{2, Weight{0, 2}}, Generator{1, Weight{0, 1}}, Generator{2, Weight{0, 1}}}) {
            const ModuleVector u = m.act(g, v);
            if (!u.is_zero()) CHECK_FALSE(triple_prec(degree_of(v).triple, degree_of(u).triple));
        }
    }
}

TEST_CASE("rewrite statistics") {
    const WhittakerModule m(PsiSpec::symbolic());
    RewriteStats stats;
    const Word word{{2, Weight{0, 2}}, {1, Weight{0, -1}}, {2, Weight{0, 0}}};
    const ModuleVector v = m.normal_form({{word, Scalar(1)}}, &stats);
    CHECK_FALSE(v.is_zero());
    CHECK(stats.rewrites > 0);
    CHECK(stats.max_word_length == 3);
    CHECK(to_word({P({{0, 1}}), P({{1, 1}}), 2, 1}).size() == 5);
}
