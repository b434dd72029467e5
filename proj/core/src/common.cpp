#include "fprlab/common.hpp"

#include <iomanip>
#include <sstream>

#include <boost/multiprecision/cpp_dec_float.hpp>

namespace fprlab {

std::string to_string(const BigInt& n) { return n.str(); }

std::string to_string(const Rational& r) {
  const BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(text));
    BigInt num(text.substr(0, slash));
    BigInt den(text.substr(slash + 1));
    if (den == 0) throw ParseError("zero denominator in rational '" + text + "'", slash);
    return Rational(num, den);
  } catch (const std::runtime_error&) {
    throw ParseError("malformed rational '" + text + "'", 0);
  }
}

std::string to_decimal(const Rational& r) {
  using Dec = boost::multiprecision::cpp_dec_float_50;
  Dec value = Dec(boost::multiprecision::numerator(r)) / Dec(boost::multiprecision::denominator(r));
  std::ostringstream out;
  out << std::setprecision(15) << value;
  return out.str();
}

}  // namespace fprlab
