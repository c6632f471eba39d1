#include "regmark/rational.hpp"

#include "regmark/errors.hpp"

namespace regmark {

std::string to_string(const BigInt& n) { return n.str(); }

Rational make_rational(BigInt num, BigInt den) {
  if (den == 0) throw Error("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Rational(std::move(num), std::move(den));
}

std::string to_string(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

Rational parse_rational(const std::string& text) {
  const auto bad = [&] { return Error("not a rational: '" + text + "'"); };
  if (text.empty()) throw bad();
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      return Rational(BigInt(text));
    }
    const std::string num = text.substr(0, slash);
    const std::string den = text.substr(slash + 1);
    if (num.empty() || den.empty()) throw bad();
    BigInt d(den);
    if (d == 0) throw Error("zero denominator: '" + text + "'");
    return make_rational(BigInt(num), std::move(d));
  } catch (const std::runtime_error& e) {
    // cpp_int rejects malformed digit strings with std::runtime_error.
    if (dynamic_cast<const Error*>(&e)) throw;
    throw bad();
  }
}

}  // namespace regmark
