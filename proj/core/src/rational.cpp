#include "nisg/rational.hpp"

#include <cstddef>

#include "nisg/errors.hpp"

namespace nisg {

namespace {

bool all_digits(const std::string& s, std::size_t from, std::size_t to) {
  if (from >= to) return false;
  for (std::size_t i = from; i < to; ++i) {
    if (s[i] < '0' || s[i] > '9') return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  std::size_t start = 0;
  if (!text.empty() && text[0] == '-') start = 1;
  const std::size_t slash = text.find('/');
  if (slash == std::string::npos) {
    if (!all_digits(text, start, text.size())) {
      throw input_error("malformed rational: \"" + text + "\"");
    }
  } else {
    if (!all_digits(text, start, slash) ||
        !all_digits(text, slash + 1, text.size())) {
      throw input_error("malformed rational: \"" + text + "\"");
    }
    bool den_zero = true;
    for (std::size_t i = slash + 1; i < text.size(); ++i) {
      if (text[i] != '0') den_zero = false;
    }
    if (den_zero) {
      throw input_error("zero denominator in rational: \"" + text + "\"");
    }
  }
  Rational value;
  if (value.set_str(text, 10) != 0) {
    throw input_error("malformed rational: \"" + text + "\"");
  }
  value.canonicalize();
  return value;
}

std::string format_rational(const Rational& value) { return value.get_str(); }

const Rational& rat_min(const Rational& a, const Rational& b) {
  return b < a ? b : a;
}

const Rational& rat_max(const Rational& a, const Rational& b) {
  return a < b ? b : a;
}

Rational rat_abs(const Rational& a) { return a < 0 ? Rational(-a) : a; }

Rational rat_frac(long num, long den) {
  if (den == 0) throw input_error("zero denominator");
  Rational out(num, den);
  out.canonicalize();
  return out;
}

std::string format_sqrt(const SqrtVal& value) {
  return "sqrt(" + format_rational(value.radicand) + ")";
}

bool sqrt_eq(const SqrtVal& a, const SqrtVal& b) {
  return a.radicand == b.radicand;
}

bool sqrt_leq(const SqrtVal& a, const SqrtVal& b) {
  return a.radicand <= b.radicand;
}

bool rat_leq_sqrt(const Rational& a, const SqrtVal& s) {
  if (a <= 0) return true;
  return a * a <= s.radicand;
}

bool sqrt_leq_rat(const SqrtVal& s, const Rational& a) {
  if (a < 0) return false;
  return s.radicand <= a * a;
}

bool sqrt_triangle_leq(const Rational& a, const Rational& b,
                       const Rational& c) {
  if (a < 0 || b < 0 || c < 0) {
    throw invariant_error("sqrt_triangle_leq: negative radicand");
  }
  const Rational excess = a - b - c;
  if (excess <= 0) return true;
  return excess * excess <= 4 * b * c;
}

}  // namespace nisg
