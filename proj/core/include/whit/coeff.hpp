#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace whit {

using Rational = mpq_class;
using Integer = mpz_class;

class PsiSpec;

/// Exponent vector (e1,e2,e3) of a monomial s1^e1 s2^e2 s3^e3 in the ψ-indeterminates.
using PsiExponents = std::array<std::uint32_t, 3>;

/// Exact scalar: a polynomial in the three ψ-indeterminates s1,s2,s3 over Q.
///
/// Terms are kept sorted leading-first (total degree, then lexicographic on
/// the exponents, both descending), without duplicate exponents and without
/// zero coefficients. A rational constant is the single term with zero
/// exponents; zero is the empty sum.
class Scalar {
public:
    struct Term {
        PsiExponents exps{};
        Rational coeff;

        bool operator==(const Term& o) const { return exps == o.exps && coeff == o.coeff; }
    };

    Scalar() = default;
    Scalar(long value);  // NOLINT(google-explicit-constructor)
    Scalar(const Rational& value);  // NOLINT(google-explicit-constructor)

    /// The indeterminate s<index>, index in {1,2,3}.
    static Scalar psi(int index);
    static Scalar monomial(const PsiExponents& exps, const Rational& coeff);
    /// Builds a canonical scalar from arbitrary (possibly duplicated or zero) terms.
    static Scalar from_terms(std::vector<Term> terms);

    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_rational() const noexcept;
    /// The constant value; throws whit::Error when the scalar involves an indeterminate.
    Rational rational_value() const;
    std::uint32_t total_degree() const noexcept;

    const std::vector<Term>& terms() const noexcept { return terms_; }

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    bool operator==(const Scalar& o) const { return terms_ == o.terms_; }

    /// Substitutes the concrete values of a specialized ψ.
    Scalar specialize(const PsiSpec& spec) const;

    /// Re-canonicalizes; the identity on any value produced by the public API.
    Scalar normalized() const;

private:
    void canonicalize();
    std::vector<Term> terms_;
};

/// Polynomial in z with Scalar coefficients; coeffs()[r] multiplies z^r.
class ZPoly {
public:
    ZPoly() = default;
    explicit ZPoly(std::vector<Scalar> coeffs);
    ZPoly(const Scalar& constant);  // NOLINT(google-explicit-constructor)

    static ZPoly monomial(std::size_t power, const Scalar& coeff = Scalar(1));
    /// Rational polynomial from coefficients in ascending power order.
    static ZPoly from_rationals(const std::vector<Rational>& coeffs);

    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// std::nullopt for the zero polynomial.
    std::optional<std::size_t> degree() const noexcept;
    const std::vector<Scalar>& coeffs() const noexcept { return coeffs_; }
    Scalar coeff(std::size_t power) const;
    const Scalar& leading() const;
    bool is_rational() const;

    Scalar eval(const Scalar& at) const;
    ZPoly specialize(const PsiSpec& spec) const;

    /// Monic associate of a rational polynomial; throws on zero or symbolic input.
    ZPoly monic() const;

    ZPoly operator-() const;
    ZPoly& operator+=(const ZPoly& o);
    ZPoly& operator-=(const ZPoly& o);
    friend ZPoly operator+(ZPoly a, const ZPoly& b) { return a += b; }
    friend ZPoly operator-(ZPoly a, const ZPoly& b) { return a -= b; }
    friend ZPoly operator*(const ZPoly& a, const ZPoly& b);
    friend ZPoly operator*(const Scalar& s, const ZPoly& p);
    bool operator==(const ZPoly& o) const { return coeffs_ == o.coeffs_; }

    /// Remainder of rational polynomial division.
    ZPoly rem(const ZPoly& divisor) const;

private:
    void trim();
    std::vector<Scalar> coeffs_;
};

/// Monic gcd of two rational polynomials; gcd(0,0) is 0.
ZPoly gcd(const ZPoly& a, const ZPoly& b);

/// The homomorphism ψ, either left symbolic (values are s1,s2,s3) or specialized
/// to three nonzero rationals p1,p2,p3 for ψ(d1(ε2)), ψ(d2(ε2)), ψ(d2(2ε2)).
class PsiSpec {
public:
    static PsiSpec symbolic();
    /// Throws SingularPsi if any value is zero.
    static PsiSpec specialized(const Rational& p1, const Rational& p2, const Rational& p3);

    bool is_symbolic() const noexcept { return symbolic_; }
    /// Value on the Ω generator with index 1..3 (s<index> in symbolic mode).
    Scalar value(int index) const;
    const std::array<Rational, 3>& values() const noexcept { return values_; }
    /// Maps a scalar to this ψ's ring (identity in symbolic mode).
    Scalar apply(const Scalar& s) const;

    bool operator==(const PsiSpec& o) const { return symbolic_ == o.symbolic_ && values_ == o.values_; }

private:
    bool symbolic_ = true;
    std::array<Rational, 3> values_{};
};

/// Canonical string of a rational: "p/q", or "p" when q = 1.
std::string to_string(const Rational& q);

}  // namespace whit
