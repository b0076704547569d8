#pragma once

#include <string>
#include <string_view>

#include "whit/coeff.hpp"
#include "whit/lie.hpp"
#include "whit/orders.hpp"
#include "whit/wmod.hpp"

namespace whit {

// Text forms.
//
//   scalar   "s1^2 - 1", "-2*s3", "1/2*s1*s3 + 3"
//   lie      "2*d2(0,2) - d1(1,-7)"; z is d1(0,0) and h2 is d2(0,0)
//   vector   "s1 * d1(0,-1) d2(0,-2) h2^2 z w - 3/2 * w"
//
// A coefficient with several monomials is printed in parentheses. Parsers
// accept what the printers produce plus some slack: factors of a term may be
// joined by '*' or whitespace, coefficients may be any product of rationals,
// s1..s3 powers and parenthesized scalars, and generators in a vector word
// may carry a power (z^3). Errors carry the 0-based offset of the offending
// character and the set of tokens that would have been accepted there.

std::string format_scalar(const Scalar& s);
std::string format_weight(const Weight& w);
std::string format_generator(const Generator& g);
std::string format_lie(const LieElt& x);
std::string format_partition(const Partition& p);
std::string format_triple(const Triple& t);
std::string format_monomial(const BasisMonomial& m);
std::string format_vector(const ModuleVector& v);
std::string format_poly(const ZPoly& f);

Scalar parse_scalar(std::string_view text);
Rational parse_rational(std::string_view text);
LieElt parse_lie(std::string_view text);
/// Each word is applied to w with module.act_word; positive generators act through ψ.
ModuleVector parse_vector(std::string_view text, const WhittakerModule& module);
/// "a,b".
Weight parse_weight(std::string_view text);

}  // namespace whit
