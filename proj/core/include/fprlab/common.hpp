#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace fprlab {

/// A point of a permutation domain. Internally 0-indexed.
using Point = std::uint32_t;

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Renders a rational as "a/b" (or "a" when the denominator is 1).
std::string to_string(const Rational& r);
std::string to_string(const BigInt& n);

/// Parses "a/b" or "a".
Rational parse_rational(const std::string& text);

/// Decimal rendering with 15 significant digits.
std::string to_decimal(const Rational& r);

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Inputs of mismatched degree, field, or dimension.
class DegreeMismatch : public Error {
 public:
  using Error::Error;
};

/// A configured size cap (degree, order, class count...) would be exceeded.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// An element was expected to lie in a group and does not.
class NotAMember : public Error {
 public:
  using Error::Error;
};

/// An operation requiring a transitive action was given an intransitive one.
class NotTransitive : public Error {
 public:
  using Error::Error;
};

/// Malformed text input (group specs, cycle notation, tuple files).
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at position " + std::to_string(position + 1) + ")"),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Well-formed input that names something unsupported or meaningless.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

}  // namespace fprlab
