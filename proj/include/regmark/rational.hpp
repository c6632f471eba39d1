#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace regmark {

// All coordinates and coefficients are exact. Predicates (collinearity,
// incidence, betweenness) are decidable only because nothing is ever rounded.
using BigInt = boost::multiprecision::cpp_int;

// Always in lowest terms with positive denominator; zero is 0/1.
using Rational = boost::multiprecision::cpp_rational;

inline BigInt numerator(const Rational& r) {
  return boost::multiprecision::numerator(r);
}

inline BigInt denominator(const Rational& r) {
  return boost::multiprecision::denominator(r);
}

// The two-argument Rational constructor insists on a positive denominator;
// this one fixes the sign and rejects zero.
Rational make_rational(BigInt num, BigInt den);

// Lowest-terms text form: "p/q", or bare "p" when q = 1. Never decimals.
std::string to_string(const Rational& r);

std::string to_string(const BigInt& n);

// Accepts "p", "-p", "p/q"; throws Error on anything else (q = 0 included).
Rational parse_rational(const std::string& text);

}  // namespace regmark
