#include <doctest.h>

#include "random_vectors.hpp"
#include "whit/error.hpp"
#include "whit/json_io.hpp"

using namespace whit;

TEST_CASE("scalar schema") {
    const Scalar s = Scalar::monomial({1, 0, 2}, Rational(-3, 2));
    const Json j = to_json(s);
    CHECK(j.dump() == R"({"monomials":[{"e":[1,0,2],"num":"-3","den":"2"}]})");
    CHECK(scalar_from_json(j) == s);
    CHECK(scalar_from_json(parse_json(R"({"monomials":[{"e":["1","0","2"],"num":"-3","den":"2"}]})")) == s);
}

TEST_CASE("round trips") {
    std::mt19937_64 rng(41);
    for (int i = 0; i < 100; ++i) {
        const ModuleVector v = whit::testing::random_module_vector(rng);
        CHECK(vector_from_json(parse_json(to_json(v).dump())) == v);
        const Partition p = whit::testing::random_partition(rng);
        CHECK(partition_from_json(to_json(p)) == p);
        const Triple t{p, whit::testing::random_partition(rng), 2};
        CHECK(triple_from_json(to_json(t)) == t);
    }
    const LieElt x = LieElt::basis(2, Weight{0, 2}, Scalar::psi(1)) - LieElt::basis(1, Weight{1, -7});
    CHECK(lie_from_json(to_json(x)) == x);
    const ZPoly f = ZPoly::from_rationals({-1, 0, Rational(1, 3)});
    CHECK(poly_from_json(to_json(f)) == f);

    Truncation t;
    t.cap = Weight{1, 0};
    t.entries = {Weight{0, 1}, Weight{1, -1}};
    t.kmax = 2;
    t.rmax = 3;
    t.max_length = 2;
    const Truncation u = truncation_from_json(to_json(t));
    CHECK(u.cap == t.cap);
    CHECK(u.entries == t.entries);
    CHECK(u.kmax == 2);
    CHECK(u.rmax == 3);
    CHECK(u.max_length == std::optional<std::uint32_t>(2));
}

TEST_CASE("malformed input") {
    CHECK_THROWS_AS(parse_json("{\"terms\": [}"), ParseError);
    CHECK_THROWS_AS(vector_from_json(parse_json("{\"terms\": 3}")), ParseError);
    CHECK_THROWS_AS(scalar_from_json(parse_json(R"({"monomials":[{"e":[1,0],"num":"1","den":"1"}]})")), ParseError);
    CHECK_THROWS_AS(scalar_from_json(parse_json(R"({"monomials":[{"e":[0,0,0],"num":"x","den":"1"}]})")), ParseError);
    CHECK_THROWS_AS(partition_from_json(parse_json("[[0,-1]]")), ParseError);
    try {
        parse_json("{\"a\": tru}");
        FAIL("no error");
    } catch (const ParseError& e) {
        CHECK(e.offset() > 0);
    }
}
