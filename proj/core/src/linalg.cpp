#include "whit/linalg.hpp"

#include "whit/error.hpp"

namespace whit {

void RowEchelon::make_primitive(IntRow& row) {
    if (row.empty()) return;
    Integer g = 0;
    for (const auto& [col, v] : row) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        if (g == 1) break;
    }
    if (row.front().second < 0) g = -g;
    if (g != 1) {
        for (auto& [col, v] : row) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
    }
}

// a·x − b·y
RowEchelon::IntRow RowEchelon::combine(const Integer& a, const IntRow& x, const Integer& b, const IntRow& y) {
    IntRow out;
    out.reserve(x.size() + y.size());
    auto i = x.begin();
    auto j = y.begin();
    while (i != x.end() || j != y.end()) {
        if (j == y.end() || (i != x.end() && i->first < j->first)) {
            out.emplace_back(i->first, a * i->second);
            ++i;
        } else if (i == x.end() || j->first < i->first) {
            out.emplace_back(j->first, -b * j->second);
            ++j;
        } else {
            Integer v = a * i->second - b * j->second;
            if (v != 0) out.emplace_back(i->first, std::move(v));
            ++i;
            ++j;
        }
    }
    return out;
}

bool RowEchelon::insert(const SparseRow& row) {
    Integer lcm = 1;
    for (const auto& [col, v] : row) {
        if (col >= columns_) throw OutOfRange("row entry beyond the column count");
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.get_den_mpz_t());
    }
    IntRow r;
    r.reserve(row.size());
    for (const auto& [col, v] : row) {
        if (v == 0) continue;
        Integer n = v.get_num() * (lcm / v.get_den());
        r.emplace_back(col, std::move(n));
    }
    make_primitive(r);
    while (!r.empty()) {
        auto it = pivots_.find(r.front().first);
        if (it == pivots_.end()) {
            const std::size_t lead = r.front().first;
            pivots_.emplace(lead, std::move(r));
            return true;
        }
        const IntRow& p = it->second;
        Integer g;
        mpz_gcd(g.get_mpz_t(), p.front().second.get_mpz_t(), r.front().second.get_mpz_t());
        const Integer a = p.front().second / g;
        const Integer b = r.front().second / g;
        r = combine(a, r, b, p);
        make_primitive(r);
    }
    return false;
}

std::vector<SparseRow> RowEchelon::rows() const {
    std::vector<SparseRow> out;
    out.reserve(pivots_.size());
    for (const auto& [lead, row] : pivots_) {
        SparseRow s;
        s.reserve(row.size());
        for (const auto& [col, v] : row) s.emplace_back(col, Rational(v));
        out.push_back(std::move(s));
    }
    return out;
}

std::vector<std::vector<Rational>> RowEchelon::nullspace() const {
    // Back-substitution into reduced form, last pivot first.
    std::map<std::size_t, std::vector<std::pair<std::size_t, Rational>>> reduced;
    for (auto it = pivots_.rbegin(); it != pivots_.rend(); ++it) {
        const auto& row = it->second;
        const Rational lead(row.front().second);
        std::map<std::size_t, Rational> acc;
        for (std::size_t t = 1; t < row.size(); ++t) acc[row[t].first] += Rational(row[t].second) / lead;
        // Substitute already-reduced pivot columns.
        for (auto a = acc.begin(); a != acc.end();) {
            auto red = reduced.find(a->first);
            if (red == reduced.end()) {
                ++a;
                continue;
            }
            const Rational f = a->second;
            const std::size_t done = a->first;
            for (const auto& [col, v] : red->second) acc[col] -= f * v;
            a = acc.erase(acc.find(done));
            a = acc.upper_bound(done);
        }
        std::vector<std::pair<std::size_t, Rational>> entries;
        for (auto& [col, v] : acc) {
            if (v != 0) entries.emplace_back(col, v);
        }
        reduced.emplace(it->first, std::move(entries));
    }
    // Pivot column p satisfies x_p = −Σ_{free j} c_{p,j} x_j.
    std::vector<std::vector<Rational>> basis;
    for (std::size_t j = 0; j < columns_; ++j) {
        if (pivots_.count(j)) continue;
        std::vector<Rational> x(columns_);
        x[j] = 1;
        for (const auto& [p, entries] : reduced) {
            for (const auto& [col, v] : entries) {
                if (col == j) x[p] = -v;
            }
        }
        basis.push_back(std::move(x));
    }
    return basis;
}

}  // namespace whit
