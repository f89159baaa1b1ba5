#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mmpair {

/// Exact rational scalar. GMP keeps every value canonical (lowest terms,
/// positive denominator) after each arithmetic operation.
using Rational = mpq_class;

/// Coordinate vector with respect to a fixed basis.
using Vector = std::vector<Rational>;

class ParseError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Parses "p", "-p", "+p" or "p/q". Throws ParseError on malformed text or q = 0.
Rational parse_rational(std::string_view text);

/// Canonical text form: "p" for integers, otherwise "p/q" with q > 0.
std::string to_string(const Rational& r);

Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);
bool is_zero(const Vector& v);

Vector& add_scaled(Vector& acc, const Rational& c, const Vector& v);
Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator-(const Vector& a);
Vector operator*(const Rational& c, const Vector& v);

std::vector<std::string> to_strings(const Vector& v);

} // namespace mmpair
