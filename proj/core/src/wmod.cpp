#include "whit/wmod.hpp"

#include <algorithm>
#include <cstdlib>

#include "whit/error.hpp"

namespace whit {

// ---------------------------------------------------------------- ordering

bool LeadingFirst::operator()(const BasisMonomial& a, const BasisMonomial& b) const {
    if (auto c = triple_cmp(a.triple(), b.triple()); c != 0) return c > 0;
    return a.r > b.r;
}

// ---------------------------------------------------------------- ModuleVector

ModuleVector ModuleVector::generator() { return monomial(BasisMonomial{}); }

ModuleVector ModuleVector::monomial(const BasisMonomial& m, const Scalar& c) {
    ModuleVector v;
    v.add_term(m, c);
    return v;
}

ModuleVector ModuleVector::from_poly(const Triple& t, const ZPoly& f) {
    ModuleVector v;
    for (std::size_t r = 0; r < f.coeffs().size(); ++r) {
        v.add_term(BasisMonomial{t.lambda, t.mu, t.k, static_cast<std::uint32_t>(r)}, f.coeffs()[r]);
    }
    return v;
}

Scalar ModuleVector::coeff(const BasisMonomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar() : it->second;
}

void ModuleVector::add_term(const BasisMonomial& m, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

std::vector<Triple> ModuleVector::support() const {
    std::vector<Triple> out;
    for (const auto& [m, c] : terms_) {
        Triple t = m.triple();
        if (out.empty() || !(out.back() == t)) out.push_back(std::move(t));
    }
    return out;
}

ZPoly ModuleVector::poly(const Triple& t) const {
    std::vector<Scalar> c;
    for (const auto& [m, s] : terms_) {
        if (m.k == t.k && m.mu == t.mu && m.lambda == t.lambda) {
            if (c.size() <= m.r) c.resize(m.r + 1);
            c[m.r] = s;
        }
    }
    return ZPoly(std::move(c));
}

bool ModuleVector::is_z_polynomial() const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [](const auto& kv) { return kv.first.triple().is_minimum(); });
}

ZPoly ModuleVector::as_z_polynomial() const {
    if (!is_z_polynomial()) throw Error("vector is not of the form f(z) w");
    return poly(Triple{});
}

ModuleVector ModuleVector::specialize(const PsiSpec& spec) const {
    ModuleVector v;
    for (const auto& [m, c] : terms_) v.add_term(m, c.specialize(spec));
    return v;
}

ModuleVector ModuleVector::operator-() const {
    ModuleVector v = *this;
    for (auto& [m, c] : v.terms_) c = -c;
    return v;
}

ModuleVector& ModuleVector::operator+=(const ModuleVector& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

ModuleVector& ModuleVector::operator-=(const ModuleVector& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

ModuleVector operator*(const Scalar& s, const ModuleVector& v) {
    ModuleVector out;
    if (s.is_zero()) return out;
    for (const auto& [m, c] : v.terms_) out.terms_.emplace_hint(out.terms_.end(), m, s * c);
    std::erase_if(out.terms_, [](const auto& kv) { return kv.second.is_zero(); });
    return out;
}

Degree degree_of(const ModuleVector& v) {
    if (v.is_zero()) throw ZeroVector("degree of the zero vector");
    Triple t = v.terms().begin()->first.triple();
    ZPoly f = v.poly(t);
    return {std::move(t), std::move(f)};
}

bool in_filtration(const ModuleVector& v, const Triple& t) {
    if (v.is_zero()) return true;
    return triple_cmp(v.terms().begin()->first.triple(), t) < 0;
}

// ---------------------------------------------------------------- words

namespace {

// PBW blocks: d1-negatives, d2-negatives, d2(0), z = d1(0), then positives.
int block_of(const Generator& g) {
    switch (triangular_part(g.weight)) {
        case TriangularPart::negative:
            return g.index == 1 ? 0 : 1;
        case TriangularPart::zero:
            return g.index == 2 ? 2 : 3;
        case TriangularPart::positive:
            return 4;
    }
    return 4;
}

// Total order on generators defining the PBW order of factors. Within the
// negative blocks the factor d_i(−γ) precedes d_i(−γ') when γ < γ'.
bool factor_less(const Generator& a, const Generator& b) {
    const int ba = block_of(a);
    const int bb = block_of(b);
    if (ba != bb) return ba < bb;
    switch (ba) {
        case 0:
        case 1:
            return b.weight < a.weight;
        case 4:
            return a < b;
        default:
            return false;
    }
}

std::uint32_t inversions(const Word& w) {
    std::uint32_t n = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        for (std::size_t j = i + 1; j < w.size(); ++j) {
            if (factor_less(w[j], w[i])) ++n;
        }
    }
    return n;
}

struct PendingKey {
    std::uint32_t length;
    std::uint32_t inv;
    Word word;
};

// Largest measure first.
struct PendingOrder {
    bool operator()(const PendingKey& a, const PendingKey& b) const {
        if (a.length != b.length) return a.length > b.length;
        if (a.inv != b.inv) return a.inv > b.inv;
        return std::lexicographical_compare(a.word.begin(), a.word.end(), b.word.begin(), b.word.end());
    }
};

using Pending = std::map<PendingKey, Scalar, PendingOrder>;

void push(Pending& pending, Word word, const Scalar& c, const PendingKey& parent) {
    if (c.is_zero()) return;
    PendingKey key{static_cast<std::uint32_t>(word.size()), inversions(word), std::move(word)};
    if (key.length > parent.length || (key.length == parent.length && key.inv >= parent.inv)) {
        throw InternalAssertion("normal ordering failed to decrease (length, inversions)");
    }
    auto [it, inserted] = pending.try_emplace(std::move(key), c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) pending.erase(it);
    }
}

BasisMonomial from_sorted_word(const Word& w) {
    std::vector<Weight> lambda;
    std::vector<Weight> mu;
    BasisMonomial m;
    for (const auto& g : w) {
        switch (block_of(g)) {
            case 0:
                lambda.push_back(-g.weight);
                break;
            case 1:
                mu.push_back(-g.weight);
                break;
            case 2:
                ++m.k;
                break;
            case 3:
                ++m.r;
                break;
            default:
                throw InternalAssertion("positive factor left in a normal-ordered word");
        }
    }
    m.lambda = Partition::from_entries(lambda);
    m.mu = Partition::from_entries(mu);
    return m;
}

void require_rank2(const Generator& g) {
    if (g.weight.rank() != 2) throw OutOfRange("module action is defined for rank-2 generators only");
}

}  // namespace

Word to_word(const BasisMonomial& m) {
    Word w;
    w.reserve(m.lambda.length() + m.mu.length() + m.k + m.r);
    for (const auto& g : m.lambda.sequence()) w.push_back({1, -g});
    for (const auto& g : m.mu.sequence()) w.push_back({2, -g});
    w.insert(w.end(), m.k, Generator{2, Weight::zero(2)});
    w.insert(w.end(), m.r, Generator{1, Weight::zero(2)});
    return w;
}

ModuleVector WhittakerModule::normal_form(const std::vector<std::pair<Word, Scalar>>& words,
                                          RewriteStats* stats) const {
    Pending pending;
    for (const auto& [w, c] : words) {
        if (c.is_zero()) continue;
        for (const auto& g : w) require_rank2(g);
        PendingKey key{static_cast<std::uint32_t>(w.size()), inversions(w), w};
        auto [it, inserted] = pending.try_emplace(std::move(key), c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) pending.erase(it);
        }
    }

    ModuleVector out;
    std::array<BasisBracketTerm, 2> buf{};
    while (!pending.empty()) {
        auto node = pending.extract(pending.begin());
        const PendingKey& key = node.key();
        const Scalar& c = node.mapped();
        const Word& w = key.word;
        if (stats) {
            ++stats->rewrites;
            stats->max_word_length = std::max<std::size_t>(stats->max_word_length, w.size());
        }

        if (!w.empty() && block_of(w.back()) == 4) {
            const Scalar value = psi_eval(w.back(), psi_);
            push(pending, Word(w.begin(), w.end() - 1), c * value, key);
            continue;
        }

        std::size_t j = w.size();
        for (std::size_t i = w.size(); i-- > 1;) {
            if (factor_less(w[i], w[i - 1])) {
                j = i - 1;
                break;
            }
        }
        if (j == w.size()) {
            out.add_term(from_sorted_word(w), c);
            continue;
        }

        Word swapped = w;
        std::swap(swapped[j], swapped[j + 1]);
        push(pending, std::move(swapped), c, key);

        const int n = basis_bracket(w[j], w[j + 1], buf);
        const Weight sum = w[j].weight + w[j + 1].weight;
        for (int t = 0; t < n; ++t) {
            Word shorter;
            shorter.reserve(w.size() - 1);
            shorter.insert(shorter.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(j));
            shorter.push_back(Generator{buf[t].index, sum});
            shorter.insert(shorter.end(), w.begin() + static_cast<std::ptrdiff_t>(j) + 2, w.end());
            push(pending, std::move(shorter), c * Scalar(buf[t].coeff), key);
        }
    }
    return out;
}

ModuleVector WhittakerModule::act(const LieElt& x, const ModuleVector& v) const {
    std::vector<std::pair<Word, Scalar>> words;
    words.reserve(x.terms().size() * v.size());
    for (const auto& [g, cg] : x.terms()) {
        require_rank2(g);
        for (const auto& [m, cm] : v.terms()) {
            Word w;
            w.reserve(1 + m.lambda.length() + m.mu.length() + m.k + m.r);
            w.push_back(g);
            const Word tail = to_word(m);
            w.insert(w.end(), tail.begin(), tail.end());
            words.emplace_back(std::move(w), cg * cm);
        }
    }
    return normal_form(words);
}

ModuleVector WhittakerModule::act(const Generator& g, const ModuleVector& v) const {
    return act(LieElt::basis(g), v);
}

ModuleVector WhittakerModule::act_word(const std::vector<LieElt>& word, const ModuleVector& v) const {
    ModuleVector out = v;
    for (auto it = word.rbegin(); it != word.rend(); ++it) out = act(*it, out);
    return out;
}

ModuleVector WhittakerModule::apply_shifted(const LieElt& d, const ModuleVector& v, unsigned exponent) const {
    const Scalar shift = psi_eval(d, psi_);
    ModuleVector out = v;
    for (unsigned e = 0; e < exponent; ++e) out = act(d, out) - shift * out;
    return out;
}

// ---------------------------------------------------------------- Whittaker predicate

CheckBox default_check_box(const ModuleVector& v) {
    int m1 = 0;
    int m2 = 0;
    for (const auto& [m, c] : v.terms()) {
        const Weight s = m.lambda.sum() + m.mu.sum();
        m1 = std::max(m1, static_cast<int>(s[0]));
        int abs2 = 0;
        for (const auto* p : {&m.lambda, &m.mu}) {
            for (const auto& part : p->parts()) abs2 += std::abs(part.weight[1]) * static_cast<int>(part.mult);
        }
        m2 = std::max(m2, abs2);
    }
    return {m1 + 3, -m2 - 3, m2 + 3};
}

std::vector<Generator> check_generators(const CheckBox& box) {
    const Weight e2 = Weight{0, 1};
    const Weight two_e2 = Weight{0, 2};
    std::vector<Generator> out{{2, two_e2}, {1, e2}, {2, e2}};
    for (int a1 = 0; a1 <= box.a1_max; ++a1) {
        for (int a2 = box.a2_min; a2 <= box.a2_max; ++a2) {
            const Weight alpha{a1, a2};
            if (!is_positive(alpha)) continue;
            for (int i = 1; i <= 2; ++i) {
                Generator g{i, alpha};
                if (std::find(out.begin(), out.begin() + 3, g) != out.begin() + 3) continue;
                out.push_back(g);
            }
        }
    }
    return out;
}

WhittakerCheck is_whittaker(const WhittakerModule& module, const ModuleVector& v, const std::optional<CheckBox>& box) {
    if (v.is_zero()) throw ZeroVector("the Whittaker predicate needs a nonzero vector");
    WhittakerCheck result;
    for (const auto& g : check_generators(box.value_or(default_check_box(v)))) {
        ++result.checked;
        ModuleVector defect = module.act(g, v) - psi_eval(g, module.psi()) * v;
        if (!defect.is_zero()) {
            result.witness = g;
            result.defect = std::move(defect);
            return result;
        }
    }
    result.passed = true;
    return result;
}

}  // namespace whit
