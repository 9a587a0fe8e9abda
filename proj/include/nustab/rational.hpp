#ifndef NUSTAB_RATIONAL_HPP
#define NUSTAB_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace nustab {

// All eigenvalue-ratio arithmetic is exact; doubles appear only in the
// numerical geometry engine.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Renders a rational as "p/q" (or "p" when the denominator is 1).
inline std::string to_fraction_string(const Rational& r)
{
  const Integer num = boost::multiprecision::numerator(r);
  const Integer den = boost::multiprecision::denominator(r);
  if (den == 1)
    return num.str();
  return num.str() + "/" + den.str();
}

/// Parses "p" or "p/q". Throws std::invalid_argument on malformed input.
inline Rational parse_fraction(const std::string& s)
{
  if (s.empty())
    throw std::invalid_argument("empty rational literal");
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos)
      return Rational(Integer(s));
    const Integer num(s.substr(0, slash));
    const Integer den(s.substr(slash + 1));
    if (den == 0)
      throw std::invalid_argument("zero denominator in \"" + s + "\"");
    return Rational(num, den);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("malformed rational literal \"" + s + "\"");
  }
}

}  // namespace nustab

#endif
