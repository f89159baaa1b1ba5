#include "mmpair/rational.hpp"

#include <cctype>

namespace mmpair {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

} // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den))
    throw ParseError("malformed rational '" + std::string(text) + "'");

  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  if (negative) n = -n;
  Rational r(n, d);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(10); }

Vector zero_vector(std::size_t n) { return Vector(n, Rational(0)); }

Vector unit_vector(std::size_t n, std::size_t i) {
  Vector v(n, Rational(0));
  v.at(i) = 1;
  return v;
}

bool is_zero(const Vector& v) {
  for (const auto& x : v)
    if (sgn(x) != 0) return false;
  return true;
}

Vector& add_scaled(Vector& acc, const Rational& c, const Vector& v) {
  if (acc.size() != v.size()) throw std::invalid_argument("vector length mismatch");
  if (sgn(c) == 0) return acc;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (sgn(v[i]) != 0) acc[i] += c * v[i];
  return acc;
}

Vector operator+(const Vector& a, const Vector& b) {
  Vector r = a;
  return add_scaled(r, 1, b);
}

Vector operator-(const Vector& a, const Vector& b) {
  Vector r = a;
  return add_scaled(r, -1, b);
}

Vector operator-(const Vector& a) {
  Vector r = a;
  for (auto& x : r) x = -x;
  return r;
}

Vector operator*(const Rational& c, const Vector& v) {
  Vector r = v;
  for (auto& x : r) x *= c;
  return r;
}

std::vector<std::string> to_strings(const Vector& v) {
  std::vector<std::string> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

} // namespace mmpair
