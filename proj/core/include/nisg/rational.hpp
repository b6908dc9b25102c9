#pragma once

#include <gmpxx.h>

#include <string>

namespace nisg {

// All assertion paths run on exact rationals; floating point never decides
// a verdict.
using Rational = mpq_class;

// Accepts "num" or "num/den" with an optional leading minus on the
// numerator.  Rejects empty strings, stray characters and zero denominators.
Rational parse_rational(const std::string& text);

// Canonical form: lowest terms, positive denominator, "/den" omitted when
// the denominator is 1.  Matches what parse_rational accepts.
std::string format_rational(const Rational& value);

const Rational& rat_min(const Rational& a, const Rational& b);
const Rational& rat_max(const Rational& a, const Rational& b);
Rational rat_abs(const Rational& a);

// num/den in lowest terms.  The raw two-argument mpq_class constructor does
// not reduce, and comparisons on unreduced values are unreliable; every
// fraction built from computed parts must go through here.
Rational rat_frac(long num, long den);

// A nonnegative value of the form sqrt(radicand), kept exact by never
// leaving the rationals.  All comparisons go through sign analysis and
// squaring.
struct SqrtVal {
  Rational radicand;  // >= 0
};

std::string format_sqrt(const SqrtVal& value);

bool sqrt_eq(const SqrtVal& a, const SqrtVal& b);
bool sqrt_leq(const SqrtVal& a, const SqrtVal& b);
// a <= sqrt(s)
bool rat_leq_sqrt(const Rational& a, const SqrtVal& s);
// sqrt(s) <= a
bool sqrt_leq_rat(const SqrtVal& s, const Rational& a);
// sqrt(a) <= sqrt(b) + sqrt(c) for radicands a, b, c >= 0
bool sqrt_triangle_leq(const Rational& a, const Rational& b, const Rational& c);

}  // namespace nisg
