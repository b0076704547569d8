#include <doctest.h>

#include <random>

#include "whit/linalg.hpp"

using namespace whit;

namespace {

Rational dot(const SparseRow& row, const std::vector<Rational>& x) {
    Rational s = 0;
    for (const auto& [j, a] : row) s += a * x[j];
    return s;
}

}  // namespace

TEST_CASE("rank and nullspace of a small system") {
    RowEchelon e(3);
    CHECK(e.insert({{0, 1}, {1, 1}}));
    CHECK(e.insert({{1, 2}, {2, 2}}));
    CHECK_FALSE(e.insert({{0, 2}, {1, 4}, {2, 2}}));
    CHECK_FALSE(e.insert({}));
    CHECK(e.rank() == 2);
    const auto ns = e.nullspace();
    REQUIRE(ns.size() == 1);
    CHECK(ns[0] == std::vector<Rational>{1, -1, 1});
}

TEST_CASE("fractional rows are made primitive") {
    RowEchelon e(2);
    CHECK(e.insert({{0, Rational(1, 2)}, {1, Rational(1, 3)}}));
    const auto rows = e.rows();
    REQUIRE(rows.size() == 1);
    CHECK(rows[0] == SparseRow{{0, 3}, {1, 2}});
    CHECK(e.nullspace()[0] == std::vector<Rational>{Rational(-2, 3), 1});
}

TEST_CASE("nullspace vectors solve random systems") {
    std::mt19937_64 rng(12);
    std::uniform_int_distribution<int> v(-3, 3);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t cols = 2 + trial % 7;
        RowEchelon e(cols);
        std::vector<SparseRow> system;
        for (std::size_t r = 0; r < cols - 1; ++r) {
            SparseRow row;
            for (std::size_t j = 0; j < cols; ++j) {
                const int a = v(rng);
                if (a == 0) continue;
                Rational q(a, 1 + int(j % 3));
                q.canonicalize();
                row.push_back({j, q});
            }
            system.push_back(row);
            e.insert(row);
        }
        const auto ns = e.nullspace();
        CHECK(ns.size() + e.rank() == cols);
        for (const auto& x : ns) {
            for (const auto& row : system) CHECK(dot(row, x) == 0);
        }
        std::vector<std::size_t> pivots;
        for (const auto& row : e.rows()) pivots.push_back(row.front().first);
        CHECK(std::is_sorted(pivots.begin(), pivots.end()));
        CHECK(std::adjacent_find(pivots.begin(), pivots.end()) == pivots.end());
    }
}
