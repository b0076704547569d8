#include "whit/json_io.hpp"

#include <string>

#include "whit/error.hpp"

namespace whit {

namespace {

[[noreturn]] void schema_error(const std::string& expected, const std::string& detail = {}) {
    throw ParseError(0, {expected}, detail);
}

const Json& field(const Json& j, const char* key) {
    if (!j.is_object()) schema_error("object");
    auto it = j.find(key);
    if (it == j.end()) schema_error(std::string("key \"") + key + "\"");
    return *it;
}

const Json& array(const Json& j, const char* what) {
    if (!j.is_array()) schema_error(std::string("array for ") + what);
    return j;
}

Integer integer_of(const Json& j) {
    if (j.is_number_integer()) return Integer(j.dump());
    if (j.is_string()) {
        const auto& s = j.get_ref<const std::string&>();
        Integer v;
        if (s.empty() || v.set_str(s, 10) != 0) schema_error("decimal integer", "got \"" + s + "\"");
        return v;
    }
    schema_error("integer or decimal string");
}

long small_of(const Json& j, long lo, long hi) {
    const Integer v = integer_of(j);
    if (v < lo || v > hi) schema_error("integer in range", v.get_str());
    return v.get_si();
}

}  // namespace

Json to_json(const Scalar& s) {
    Json terms = Json::array();
    for (const auto& t : s.terms()) {
        terms.push_back({{"e", {t.exps[0], t.exps[1], t.exps[2]}},
                         {"num", t.coeff.get_num().get_str()},
                         {"den", t.coeff.get_den().get_str()}});
    }
    return {{"monomials", terms}};
}

Json to_json(const Weight& w) {
    Json a = Json::array();
    for (std::size_t i = 0; i < w.rank(); ++i) a.push_back(w[i]);
    return a;
}

Json to_json(const LieElt& x) {
    Json terms = Json::array();
    for (const auto& [g, c] : x.terms()) {
        terms.push_back({{"i", g.index}, {"alpha", to_json(g.weight)}, {"coeff", to_json(c)}});
    }
    return {{"terms", terms}};
}

Json to_json(const Partition& p) {
    Json a = Json::array();
    for (const auto& w : p.sequence()) a.push_back(to_json(w));
    return a;
}

Json to_json(const Triple& t) { return {{"lambda", to_json(t.lambda)}, {"mu", to_json(t.mu)}, {"k", t.k}}; }

Json to_json(const ModuleVector& v) {
    Json terms = Json::array();
    for (const auto& [m, c] : v.terms()) {
        terms.push_back({{"lambda", to_json(m.lambda)},
                         {"mu", to_json(m.mu)},
                         {"k", m.k},
                         {"r", m.r},
                         {"coeff", to_json(c)}});
    }
    return {{"terms", terms}};
}

Json to_json(const ZPoly& f) {
    Json a = Json::array();
    for (const auto& c : f.coeffs()) a.push_back(to_json(c));
    return {{"coeffs", a}};
}

Json to_json(const Truncation& t) {
    Json entries = Json::array();
    for (const auto& e : t.entries) entries.push_back(to_json(e));
    Json j = {{"cap", to_json(t.cap)}, {"entries", entries}, {"kmax", t.kmax}, {"rmax", t.rmax}};
    if (t.max_length) j["max_length"] = *t.max_length;
    return j;
}

Json to_json(const LemmaReport& r) {
    Json errata = Json::array();
    for (const auto& e : r.errata) errata.push_back(e);
    return {{"lemma", lemma_name(r.lemma)},
            {"instance", to_json(r.instance)},
            {"op", {{"i", r.op.index}, {"alpha", to_json(r.op.weight)}}},
            {"target", to_json(r.target)},
            {"match", r.match},
            {"computed", to_json(r.computed)},
            {"printed", to_json(r.printed)},
            {"exact", to_json(r.exact)},
            {"errata", errata},
            {"filtration_ok", r.filtration_ok}};
}

Json to_json(const ReductionTranscript& t) {
    Json steps = Json::array();
    for (const auto& s : t.steps) {
        steps.push_back({{"lemma", lemma_name(s.lemma)},
                         {"op", {{"i", s.op.index}, {"alpha", to_json(s.op.weight)}}},
                         {"psi", to_json(s.psi_value)},
                         {"exponent", s.exponent},
                         {"before", to_json(s.degree_before)},
                         {"after", to_json(s.degree_after)}});
    }
    return {{"steps", steps}};
}

Scalar scalar_from_json(const Json& j) {
    std::vector<Scalar::Term> terms;
    for (const auto& m : array(field(j, "monomials"), "monomials")) {
        const Json& e = array(field(m, "e"), "e");
        if (e.size() != 3) schema_error("three exponents");
        Scalar::Term t;
        for (int i = 0; i < 3; ++i) t.exps[i] = static_cast<std::uint32_t>(small_of(e[i], 0, 1 << 20));
        const Integer num = integer_of(field(m, "num"));
        const Integer den = integer_of(field(m, "den"));
        if (den == 0) schema_error("nonzero denominator");
        t.coeff = Rational(num, den);
        t.coeff.canonicalize();
        terms.push_back(std::move(t));
    }
    return Scalar::from_terms(std::move(terms));
}

Weight weight_from_json(const Json& j) {
    const Json& a = array(j, "weight");
    if (a.size() != 2) schema_error("weight [a,b]");
    constexpr long lim = 1L << 30;
    return Weight{static_cast<std::int32_t>(small_of(a[0], -lim, lim)),
                  static_cast<std::int32_t>(small_of(a[1], -lim, lim))};
}

LieElt lie_from_json(const Json& j) {
    LieElt x;
    for (const auto& t : array(field(j, "terms"), "terms")) {
        const int i = static_cast<int>(small_of(field(t, "i"), 1, 2));
        x.add_term({i, weight_from_json(field(t, "alpha"))}, scalar_from_json(field(t, "coeff")));
    }
    return x;
}

Partition partition_from_json(const Json& j) {
    std::vector<Weight> entries;
    for (const auto& w : array(j, "partition")) entries.push_back(weight_from_json(w));
    try {
        return Partition::from_entries(entries);
    } catch (const NotPositive& e) {
        schema_error("positive weights", e.what());
    }
}

Triple triple_from_json(const Json& j) {
    return {partition_from_json(field(j, "lambda")), partition_from_json(field(j, "mu")),
            static_cast<std::uint32_t>(small_of(field(j, "k"), 0, 1 << 20))};
}

ModuleVector vector_from_json(const Json& j) {
    ModuleVector v;
    for (const auto& t : array(field(j, "terms"), "terms")) {
        BasisMonomial m{partition_from_json(field(t, "lambda")), partition_from_json(field(t, "mu")),
                        static_cast<std::uint32_t>(small_of(field(t, "k"), 0, 1 << 20)),
                        static_cast<std::uint32_t>(small_of(field(t, "r"), 0, 1 << 20))};
        v.add_term(m, scalar_from_json(field(t, "coeff")));
    }
    return v;
}

ZPoly poly_from_json(const Json& j) {
    std::vector<Scalar> c;
    for (const auto& s : array(field(j, "coeffs"), "coeffs")) c.push_back(scalar_from_json(s));
    return ZPoly(std::move(c));
}

Truncation truncation_from_json(const Json& j) {
    Truncation t;
    t.cap = weight_from_json(field(j, "cap"));
    for (const auto& e : array(field(j, "entries"), "entries")) t.entries.push_back(weight_from_json(e));
    t.kmax = static_cast<std::uint32_t>(small_of(field(j, "kmax"), 0, 1 << 20));
    t.rmax = static_cast<std::uint32_t>(small_of(field(j, "rmax"), 0, 1 << 20));
    if (j.contains("max_length")) t.max_length = static_cast<std::uint32_t>(small_of(j["max_length"], 0, 1 << 20));
    return t;
}

Json parse_json(std::string_view text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(e.byte > 0 ? e.byte - 1 : 0, {"JSON"}, e.what());
    }
}

}  // namespace whit
