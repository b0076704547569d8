#include "whit/text.hpp"

#include <cctype>
#include <optional>
#include <utility>
#include <vector>

#include "whit/error.hpp"

namespace whit {

namespace {

std::string monomial_text(const PsiExponents& e) {
    std::string out;
    for (int i = 0; i < 3; ++i) {
        if (e[i] == 0) continue;
        if (!out.empty()) out += '*';
        out += 's' + std::to_string(i + 1);
        if (e[i] > 1) out += '^' + std::to_string(e[i]);
    }
    return out;
}

std::string term_text(const Scalar::Term& t) {
    const std::string m = monomial_text(t.exps);
    if (m.empty()) return to_string(t.coeff);
    if (t.coeff == 1) return m;
    if (t.coeff == -1) return "-" + m;
    return to_string(t.coeff) + "*" + m;
}

// (negative, text of the absolute value or a parenthesized sum; empty for 1).
std::pair<bool, std::string> coeff_text(const Scalar& s) {
    if (s.terms().size() == 1) {
        Scalar::Term t = s.terms().front();
        const bool neg = t.coeff < 0;
        if (neg) t.coeff = -t.coeff;
        if (t.coeff == 1 && t.exps == PsiExponents{}) return {neg, ""};
        return {neg, term_text(t)};
    }
    return {false, "(" + format_scalar(s) + ")"};
}

void append_signed(std::string& out, bool neg, const std::string& body) {
    if (out.empty()) {
        out = neg ? "-" + body : body;
    } else {
        out += neg ? " - " : " + ";
        out += body;
    }
}

}  // namespace

std::string format_scalar(const Scalar& s) {
    if (s.is_zero()) return "0";
    std::string out;
    for (const auto& t : s.terms()) {
        Scalar::Term a = t;
        const bool neg = a.coeff < 0;
        if (neg) a.coeff = -a.coeff;
        append_signed(out, neg, term_text(a));
    }
    return out;
}

std::string format_weight(const Weight& w) {
    std::string out = "(";
    for (std::size_t i = 0; i < w.rank(); ++i) {
        if (i) out += ',';
        out += std::to_string(w[i]);
    }
    return out + ")";
}

std::string format_generator(const Generator& g) {
    if (g.weight.rank() == 2 && g.weight.is_zero()) return g.index == 1 ? "z" : "h2";
    return "d" + std::to_string(g.index) + format_weight(g.weight);
}

std::string format_lie(const LieElt& x) {
    if (x.is_zero()) return "0";
    std::string out;
    for (const auto& [g, c] : x.terms()) {
        auto [neg, text] = coeff_text(c);
        append_signed(out, neg, text.empty() ? format_generator(g) : text + "*" + format_generator(g));
    }
    return out;
}

std::string format_partition(const Partition& p) {
    std::string out = "[";
    bool first = true;
    for (const auto& w : p.sequence()) {
        if (!first) out += ',';
        first = false;
        out += format_weight(w);
    }
    return out + "]";
}

std::string format_triple(const Triple& t) {
    return "(" + format_partition(t.lambda) + "," + format_partition(t.mu) + "," + std::to_string(t.k) + ")";
}

std::string format_monomial(const BasisMonomial& m) {
    std::string out;
    const auto factor = [&](const std::string& f) {
        out += f;
        out += ' ';
    };
    for (const auto& w : m.lambda.sequence()) factor(format_generator({1, -w}));
    for (const auto& w : m.mu.sequence()) factor(format_generator({2, -w}));
    if (m.k == 1) factor("h2");
    if (m.k > 1) factor("h2^" + std::to_string(m.k));
    if (m.r == 1) factor("z");
    if (m.r > 1) factor("z^" + std::to_string(m.r));
    return out + "w";
}

std::string format_vector(const ModuleVector& v) {
    if (v.is_zero()) return "0";
    std::string out;
    for (const auto& [m, c] : v.terms()) {
        auto [neg, text] = coeff_text(c);
        append_signed(out, neg, text.empty() ? format_monomial(m) : text + " * " + format_monomial(m));
    }
    return out;
}

std::string format_poly(const ZPoly& f) {
    if (f.is_zero()) return "0";
    std::string out;
    for (std::size_t i = f.coeffs().size(); i-- > 0;) {
        const Scalar& c = f.coeffs()[i];
        if (c.is_zero()) continue;
        const std::string zp = i == 0 ? "" : (i == 1 ? "z" : "z^" + std::to_string(i));
        auto [neg, text] = coeff_text(c);
        std::string body;
        if (zp.empty()) {
            body = text.empty() ? "1" : text;
        } else {
            body = text.empty() ? zp : text + "*" + zp;
        }
        append_signed(out, neg, body);
    }
    return out;
}

namespace {

class Cursor {
public:
    explicit Cursor(std::string_view text) : s_(text) {}

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool at_end() {
        skip_ws();
        return pos_ == s_.size();
    }
    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }
    bool starts_with(std::string_view tok) {
        skip_ws();
        return s_.substr(pos_, tok.size()) == tok;
    }
    bool accept(std::string_view tok) {
        if (!starts_with(tok)) return false;
        pos_ += tok.size();
        return true;
    }
    void expect(std::string_view tok) {
        if (!accept(tok)) fail({"'" + std::string(tok) + "'"});
    }
    std::size_t pos() {
        skip_ws();
        return pos_;
    }

    [[noreturn]] void fail(std::vector<std::string> expected, const std::string& detail = {}) {
        skip_ws();
        throw ParseError(pos_, std::move(expected), detail);
    }

    bool digit_next() {
        const char c = peek();
        return c >= '0' && c <= '9';
    }

    Integer natural() {
        skip_ws();
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail({"digit"});
        return Integer(std::string(s_.substr(start, pos_ - start)));
    }

    std::int32_t small_int(bool allow_sign) {
        bool neg = false;
        if (allow_sign) {
            if (accept("-")) {
                neg = true;
            } else {
                accept("+");
            }
        }
        const std::size_t at = pos();
        Integer v = natural();
        if (neg) v = -v;
        if (!v.fits_sint_p() || v > Integer(1 << 30) || v < Integer(-(1 << 30))) {
            throw ParseError(at, {"integer"}, "value out of range");
        }
        return static_cast<std::int32_t>(v.get_si());
    }

    Rational rational() {
        Integer num = natural();
        Integer den = 1;
        if (accept("/")) {
            const std::size_t at = pos();
            den = natural();
            if (den == 0) throw ParseError(at, {"nonzero denominator"});
        }
        Rational q(num, den);
        q.canonicalize();
        return q;
    }

private:
    std::string_view s_;
    std::size_t pos_ = 0;
};

Scalar scalar_expr(Cursor& c);

// rational | s1..s3 ['^' n] | '(' scalar ')'; nullopt if no scalar factor starts here.
std::optional<Scalar> scalar_factor(Cursor& c) {
    if (c.digit_next()) return Scalar(c.rational());
    if (c.accept("(")) {
        Scalar s = scalar_expr(c);
        c.expect(")");
        return s;
    }
    for (int i = 1; i <= 3; ++i) {
        if (c.accept("s" + std::to_string(i))) {
            Scalar s = Scalar::psi(i);
            if (c.accept("^")) {
                const std::size_t at = c.pos();
                const Integer e = c.natural();
                if (e > 64) throw ParseError(at, {"exponent ≤ 64"});
                Scalar p(1);
                for (long k = 0; k < e.get_si(); ++k) p *= s;
                s = p;
            }
            return s;
        }
    }
    return std::nullopt;
}

const std::vector<std::string> kScalarStart{"rational", "s1", "s2", "s3", "'('"};

Scalar scalar_term(Cursor& c) {
    auto f = scalar_factor(c);
    if (!f) c.fail(kScalarStart);
    Scalar acc = *f;
    for (;;) {
        if (c.accept("*")) {
            auto g = scalar_factor(c);
            if (!g) c.fail(kScalarStart);
            acc *= *g;
            continue;
        }
        auto g = scalar_factor(c);
        if (!g) break;
        acc *= *g;
    }
    return acc;
}

Scalar scalar_expr(Cursor& c) {
    bool neg = c.accept("-");
    if (!neg) c.accept("+");
    Scalar acc = scalar_term(c);
    if (neg) acc = -acc;
    for (;;) {
        if (c.accept("+")) {
            acc += scalar_term(c);
        } else if (c.accept("-")) {
            acc -= scalar_term(c);
        } else {
            return acc;
        }
    }
}

// d1(a,b) | d2(a,b) | z | h2; nullopt if none starts here.
std::optional<Generator> generator(Cursor& c) {
    for (int i = 1; i <= 2; ++i) {
        if (c.accept("d" + std::to_string(i))) {
            c.expect("(");
            const std::int32_t a = c.small_int(true);
            c.expect(",");
            const std::int32_t b = c.small_int(true);
            c.expect(")");
            return Generator{i, Weight{a, b}};
        }
    }
    if (c.accept("h2")) return Generator{2, Weight::zero(2)};
    if (c.accept("z")) return Generator{1, Weight::zero(2)};
    return std::nullopt;
}

bool term_end(Cursor& c) {
    const char ch = c.peek();
    return ch == '\0' || ch == '+' || ch == '-' || ch == ')';
}

LieElt lie_term(Cursor& c) {
    Scalar coeff(1);
    std::optional<Generator> gen;
    bool first = true;
    while (first || !term_end(c)) {
        if (!first) c.accept("*");
        first = false;
        const std::size_t at = c.pos();
        if (auto g = generator(c)) {
            if (gen) throw ParseError(at, {"'+'", "'-'", "end of input"}, "a term holds one generator");
            gen = g;
            continue;
        }
        if (auto s = scalar_factor(c)) {
            coeff *= *s;
            continue;
        }
        c.fail({"d1(", "d2(", "z", "h2", "rational", "s1", "s2", "s3", "'('"});
    }
    if (!gen) c.fail({"d1(", "d2(", "z", "h2"});
    return LieElt::basis(*gen, coeff);
}

}  // namespace

Scalar parse_scalar(std::string_view text) {
    Cursor c(text);
    Scalar s = scalar_expr(c);
    if (!c.at_end()) c.fail({"'+'", "'-'", "end of input"});
    return s;
}

Rational parse_rational(std::string_view text) {
    Cursor c(text);
    const bool neg = c.accept("-");
    Rational q = c.rational();
    if (!c.at_end()) c.fail({"end of input"});
    return neg ? Rational(-q) : q;
}

Weight parse_weight(std::string_view text) {
    Cursor c(text);
    const bool paren = c.accept("(");
    const std::int32_t a = c.small_int(true);
    c.expect(",");
    const std::int32_t b = c.small_int(true);
    if (paren) c.expect(")");
    if (!c.at_end()) c.fail({"end of input"});
    return Weight{a, b};
}

LieElt parse_lie(std::string_view text) {
    Cursor c(text);
    if (c.starts_with("0")) {
        Cursor probe(text);
        probe.accept("0");
        if (probe.at_end()) return {};
    }
    LieElt acc;
    bool neg = c.accept("-");
    if (!neg) c.accept("+");
    for (;;) {
        LieElt t = lie_term(c);
        if (neg) t = -t;
        acc += t;
        if (c.at_end()) return acc;
        if (c.accept("+")) {
            neg = false;
        } else if (c.accept("-")) {
            neg = true;
        } else {
            c.fail({"'+'", "'-'", "end of input"});
        }
    }
}

ModuleVector parse_vector(std::string_view text, const WhittakerModule& module) {
    Cursor c(text);
    if (c.starts_with("0")) {
        Cursor probe(text);
        probe.accept("0");
        if (probe.at_end()) return {};
    }
    ModuleVector acc;
    bool neg = c.accept("-");
    if (!neg) c.accept("+");
    for (;;) {
        Scalar coeff(1);
        std::vector<LieElt> word;
        for (;;) {
            c.accept("*");
            if (c.accept("w")) break;
            if (auto g = generator(c)) {
                unsigned power = 1;
                if (c.accept("^")) {
                    const std::size_t at = c.pos();
                    const Integer e = c.natural();
                    if (e > 64) throw ParseError(at, {"exponent ≤ 64"});
                    power = static_cast<unsigned>(e.get_ui());
                }
                for (unsigned i = 0; i < power; ++i) word.push_back(LieElt::basis(*g));
                continue;
            }
            if (!word.empty()) c.fail({"d1(", "d2(", "z", "h2", "'w'"});
            if (auto s = scalar_factor(c)) {
                coeff *= *s;
                continue;
            }
            c.fail({"d1(", "d2(", "z", "h2", "'w'", "rational", "s1", "s2", "s3", "'('"});
        }
        ModuleVector t = coeff * module.act_word(word, ModuleVector::generator());
        if (neg) t = -t;
        acc += t;
        if (c.at_end()) return acc;
        if (c.accept("+")) {
            neg = false;
        } else if (c.accept("-")) {
            neg = true;
        } else {
            c.fail({"'+'", "'-'", "end of input"});
        }
    }
}

}  // namespace whit
