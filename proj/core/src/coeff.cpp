#include "whit/coeff.hpp"

#include <algorithm>
#include <utility>

#include "whit/error.hpp"

namespace whit {

namespace {

std::uint32_t degree_of(const PsiExponents& e) { return e[0] + e[1] + e[2]; }

// Leading-first ordering of exponent vectors.
bool exps_before(const PsiExponents& a, const PsiExponents& b) {
    const auto da = degree_of(a);
    const auto db = degree_of(b);
    if (da != db) return da > db;
    return a > b;
}

}  // namespace

Scalar::Scalar(long value) {
    if (value != 0) terms_.push_back({PsiExponents{0, 0, 0}, Rational(value)});
}

Scalar::Scalar(const Rational& value) {
    if (value != 0) {
        Rational c = value;
        c.canonicalize();
        terms_.push_back({PsiExponents{0, 0, 0}, std::move(c)});
    }
}

Scalar Scalar::psi(int index) {
    if (index < 1 || index > 3) throw OutOfRange("psi indeterminate index must be 1, 2 or 3");
    PsiExponents e{0, 0, 0};
    e[static_cast<std::size_t>(index - 1)] = 1;
    return monomial(e, Rational(1));
}

Scalar Scalar::monomial(const PsiExponents& exps, const Rational& coeff) {
    Scalar s;
    if (coeff != 0) {
        Rational c = coeff;
        c.canonicalize();
        s.terms_.push_back({exps, std::move(c)});
    }
    return s;
}

Scalar Scalar::from_terms(std::vector<Term> terms) {
    Scalar s;
    s.terms_ = std::move(terms);
    s.canonicalize();
    return s;
}

void Scalar::canonicalize() {
    for (auto& t : terms_) t.coeff.canonicalize();
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& a, const Term& b) { return exps_before(a.exps, b.exps); });
    std::vector<Term> merged;
    merged.reserve(terms_.size());
    for (auto& t : terms_) {
        if (!merged.empty() && merged.back().exps == t.exps) {
            merged.back().coeff += t.coeff;
        } else {
            merged.push_back(std::move(t));
        }
    }
    std::erase_if(merged, [](const Term& t) { return t.coeff == 0; });
    terms_ = std::move(merged);
}

Scalar Scalar::normalized() const {
    Scalar s = *this;
    s.canonicalize();
    return s;
}

bool Scalar::is_rational() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && degree_of(terms_.front().exps) == 0);
}

Rational Scalar::rational_value() const {
    if (terms_.empty()) return Rational(0);
    if (!is_rational()) throw Error("scalar is not a rational constant");
    return terms_.front().coeff;
}

std::uint32_t Scalar::total_degree() const noexcept {
    return terms_.empty() ? 0 : degree_of(terms_.front().exps);
}

Scalar Scalar::operator-() const {
    Scalar s = *this;
    for (auto& t : s.terms_) t.coeff = -t.coeff;
    return s;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    if (o.terms_.empty()) return *this;
    if (terms_.empty()) return *this = o;
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    auto a = terms_.begin();
    auto b = o.terms_.begin();
    while (a != terms_.end() || b != o.terms_.end()) {
        if (b == o.terms_.end() || (a != terms_.end() && exps_before(a->exps, b->exps))) {
            out.push_back(std::move(*a++));
        } else if (a == terms_.end() || exps_before(b->exps, a->exps)) {
            out.push_back(*b++);
        } else {
            Rational c = a->coeff + b->coeff;
            if (c != 0) out.push_back({a->exps, std::move(c)});
            ++a;
            ++b;
        }
    }
    terms_ = std::move(out);
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar operator*(const Scalar& a, const Scalar& b) {
    if (a.terms_.empty() || b.terms_.empty()) return {};
    Scalar out;
    if (a.terms_.size() == 1 && b.terms_.size() == 1) {
        const auto& x = a.terms_.front();
        const auto& y = b.terms_.front();
        out.terms_.push_back({PsiExponents{x.exps[0] + y.exps[0], x.exps[1] + y.exps[1], x.exps[2] + y.exps[2]},
                              x.coeff * y.coeff});
        return out;
    }
    out.terms_.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& x : a.terms_) {
        for (const auto& y : b.terms_) {
            out.terms_.push_back(
                {PsiExponents{x.exps[0] + y.exps[0], x.exps[1] + y.exps[1], x.exps[2] + y.exps[2]},
                 x.coeff * y.coeff});
        }
    }
    out.canonicalize();
    return out;
}

Scalar& Scalar::operator*=(const Scalar& o) { return *this = *this * o; }

Scalar Scalar::specialize(const PsiSpec& spec) const {
    if (spec.is_symbolic()) throw Error("specialize requires a specialized psi");
    const auto& p = spec.values();
    Rational acc = 0;
    for (const auto& t : terms_) {
        Rational m = t.coeff;
        for (std::size_t i = 0; i < 3; ++i) {
            for (std::uint32_t e = 0; e < t.exps[i]; ++e) m *= p[i];
        }
        acc += m;
    }
    return Scalar(acc);
}

// ---------------------------------------------------------------- ZPoly

ZPoly::ZPoly(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

ZPoly::ZPoly(const Scalar& constant) {
    if (!constant.is_zero()) coeffs_.push_back(constant);
}

ZPoly ZPoly::monomial(std::size_t power, const Scalar& coeff) {
    if (coeff.is_zero()) return {};
    std::vector<Scalar> c(power + 1);
    c[power] = coeff;
    return ZPoly(std::move(c));
}

ZPoly ZPoly::from_rationals(const std::vector<Rational>& coeffs) {
    std::vector<Scalar> c;
    c.reserve(coeffs.size());
    for (const auto& q : coeffs) c.emplace_back(q);
    return ZPoly(std::move(c));
}

void ZPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

std::optional<std::size_t> ZPoly::degree() const noexcept {
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.size() - 1;
}

Scalar ZPoly::coeff(std::size_t power) const { return power < coeffs_.size() ? coeffs_[power] : Scalar(); }

const Scalar& ZPoly::leading() const {
    if (coeffs_.empty()) throw ZeroVector("leading coefficient of the zero polynomial");
    return coeffs_.back();
}

bool ZPoly::is_rational() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Scalar& s) { return s.is_rational(); });
}

Scalar ZPoly::eval(const Scalar& at) const {
    Scalar acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
    return acc;
}

ZPoly ZPoly::specialize(const PsiSpec& spec) const {
    std::vector<Scalar> c;
    c.reserve(coeffs_.size());
    for (const auto& s : coeffs_) c.push_back(s.specialize(spec));
    return ZPoly(std::move(c));
}

ZPoly ZPoly::monic() const {
    if (coeffs_.empty()) throw ZeroVector("monic associate of the zero polynomial");
    if (!is_rational()) throw Error("monic requires rational coefficients");
    const Rational lead = leading().rational_value();
    std::vector<Scalar> c;
    c.reserve(coeffs_.size());
    for (const auto& s : coeffs_) c.emplace_back(Rational(s.rational_value() / lead));
    return ZPoly(std::move(c));
}

ZPoly ZPoly::operator-() const {
    ZPoly p = *this;
    for (auto& s : p.coeffs_) s = -s;
    return p;
}

ZPoly& ZPoly::operator+=(const ZPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

ZPoly& ZPoly::operator-=(const ZPoly& o) { return *this += -o; }

ZPoly operator*(const ZPoly& a, const ZPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Scalar> c(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return ZPoly(std::move(c));
}

ZPoly operator*(const Scalar& s, const ZPoly& p) {
    std::vector<Scalar> c;
    c.reserve(p.coeffs_.size());
    for (const auto& x : p.coeffs_) c.push_back(s * x);
    return ZPoly(std::move(c));
}

ZPoly ZPoly::rem(const ZPoly& divisor) const {
    if (divisor.is_zero()) throw ZeroVector("polynomial division by zero");
    if (!is_rational() || !divisor.is_rational()) throw Error("polynomial remainder requires rational coefficients");
    ZPoly r = *this;
    const Rational lead = divisor.leading().rational_value();
    const std::size_t dd = *divisor.degree();
    while (!r.is_zero() && *r.degree() >= dd) {
        const std::size_t shift = *r.degree() - dd;
        const Rational q = r.leading().rational_value() / lead;
        r -= ZPoly::monomial(shift, Scalar(q)) * divisor;
    }
    return r;
}

ZPoly gcd(const ZPoly& a, const ZPoly& b) {
    ZPoly x = a;
    ZPoly y = b;
    while (!y.is_zero()) {
        ZPoly r = x.rem(y);
        x = std::move(y);
        y = std::move(r);
    }
    return x.is_zero() ? x : x.monic();
}

// ---------------------------------------------------------------- PsiSpec

PsiSpec PsiSpec::symbolic() { return PsiSpec{}; }

PsiSpec PsiSpec::specialized(const Rational& p1, const Rational& p2, const Rational& p3) {
    if (p1 == 0 || p2 == 0 || p3 == 0) {
        throw SingularPsi("psi is singular: psi(d1(0,1)), psi(d2(0,1)), psi(d2(0,2)) must all be nonzero");
    }
    PsiSpec s;
    s.symbolic_ = false;
    s.values_ = {p1, p2, p3};
    for (auto& v : s.values_) v.canonicalize();
    return s;
}

Scalar PsiSpec::value(int index) const {
    if (index < 1 || index > 3) throw OutOfRange("psi value index must be 1, 2 or 3");
    if (symbolic_) return Scalar::psi(index);
    return Scalar(values_[static_cast<std::size_t>(index - 1)]);
}

Scalar PsiSpec::apply(const Scalar& s) const { return symbolic_ ? s : s.specialize(*this); }

std::string to_string(const Rational& q) {
    Rational c = q;
    c.canonicalize();
    if (c.get_den() == 1) return c.get_num().get_str();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

}  // namespace whit
