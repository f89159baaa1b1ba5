#include "mmpair/algebra.hpp"

#include <set>
#include <tuple>

namespace mmpair {

std::string to_string(AlgebraKind k) {
  switch (k) {
  case AlgebraKind::general: return "general";
  case AlgebraKind::anticommutative: return "anticommutative";
  case AlgebraKind::lie: return "lie";
  case AlgebraKind::gl: return "gl";
  }
  return "general";
}

AlgebraKind parse_algebra_kind(const std::string& s) {
  if (s == "general") return AlgebraKind::general;
  if (s == "anticommutative") return AlgebraKind::anticommutative;
  if (s == "lie") return AlgebraKind::lie;
  if (s == "gl") return AlgebraKind::gl;
  throw AlgebraError(AlgebraError::Code::malformed, "unknown algebra kind '" + s + "'");
}

AlgebraDescriptor gl_descriptor(std::size_t n) {
  AlgebraDescriptor d;
  d.name = "gl" + std::to_string(n);
  d.kind = AlgebraKind::gl;
  d.gl_n = n;
  d.dim = n * n;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) d.basis.push_back("E" + std::to_string(i) + "_" + std::to_string(j));
  return d;
}

Vector Algebra::bracket(const Vector& u, const Vector& v) const {
  const std::size_t n = dim();
  if (u.size() != n || v.size() != n) throw ShapeError("bracket: element dimension mismatch in " + name());
  Vector out = zero_vector(n);
  if (kind() == AlgebraKind::gl) {
    const std::size_t m = desc_.gl_n;
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t k = 0; k < m; ++k) {
        const Rational& uik = u[i * m + k];
        const Rational& vik = v[i * m + k];
        const bool un = sgn(uik) != 0, vn = sgn(vik) != 0;
        if (!un && !vn) continue;
        for (std::size_t j = 0; j < m; ++j) {
          if (un && sgn(v[k * m + j]) != 0) out[i * m + j] += uik * v[k * m + j];
          if (vn && sgn(u[k * m + j]) != 0) out[i * m + j] -= vik * u[k * m + j];
        }
      }
    return out;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(u[i]) == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (sgn(v[j]) == 0) continue;
      const auto& entries = table_[i * n + j];
      if (entries.empty()) continue;
      const Rational c = u[i] * v[j];
      for (const auto& [k, val] : entries) out[k] += c * val;
    }
  }
  return out;
}

Vector Algebra::bracket_basis(std::size_t i, std::size_t j) const {
  const std::size_t n = dim();
  if (i >= n || j >= n) throw ShapeError("bracket_basis: index out of range");
  if (kind() == AlgebraKind::gl) return bracket(unit_vector(n, i), unit_vector(n, j));
  Vector out = zero_vector(n);
  for (const auto& [k, val] : table_[i * n + j]) out[k] = val;
  return out;
}

Vector bracket(const Algebra& a, const Vector& u, const Vector& v) { return a.bracket(u, v); }

Vector jacobian(const Algebra& a, const Vector& x, const Vector& y, const Vector& z) {
  Vector j = a.bracket(a.bracket(x, y), z);
  add_scaled(j, 1, a.bracket(a.bracket(y, z), x));
  add_scaled(j, 1, a.bracket(a.bracket(z, x), y));
  return j;
}

Vector associator(const Algebra& a, const Vector& x, const Vector& y, const Vector& z) {
  return a.bracket(a.bracket(x, y), z) - a.bracket(x, a.bracket(y, z));
}

AlgebraPtr build_algebra(AlgebraDescriptor d) {
  using Code = AlgebraError::Code;
  if (d.kind == AlgebraKind::gl) {
    if (d.gl_n == 0) throw AlgebraError(Code::malformed, "gl algebra needs n >= 1");
    if (!d.table.empty()) throw AlgebraError(Code::malformed, "gl algebra takes no structure table");
    const std::string name = d.name;
    d = gl_descriptor(d.gl_n);
    if (!name.empty()) d.name = name;
    return AlgebraPtr(new Algebra(std::move(d), {}));
  }
  if (d.dim == 0) throw AlgebraError(Code::malformed, "algebra '" + d.name + "' has dimension 0");
  if (d.basis.empty())
    for (std::size_t i = 0; i < d.dim; ++i) d.basis.push_back("e" + std::to_string(i));
  if (d.basis.size() != d.dim)
    throw AlgebraError(Code::malformed, "algebra '" + d.name + "': basis has " + std::to_string(d.basis.size()) +
                                            " labels, dim is " + std::to_string(d.dim));

  const std::size_t n = d.dim;
  const bool antisym = d.kind != AlgebraKind::general;
  std::set<std::tuple<std::size_t, std::size_t, std::size_t>> seen;
  std::vector<std::vector<std::pair<std::size_t, Rational>>> table(n * n);

  for (const auto& e : d.table) {
    if (e.i >= n || e.j >= n || e.k >= n)
      throw AlgebraError(Code::index_out_of_range, "structure constant index out of range", {e.i, e.j, e.k});
    if (!seen.insert({e.i, e.j, e.k}).second)
      throw AlgebraError(Code::duplicate_entry, "duplicate structure constant", {e.i, e.j, e.k});
    if (sgn(e.value) == 0) continue;
    if (antisym) {
      if (e.i == e.j)
        throw AlgebraError(Code::axiom_violation, "anticommutativity violated: [u,u] != 0", {e.i, e.j, e.k});
      if (e.i > e.j)
        throw AlgebraError(Code::malformed, "anticommutative tables list only entries with i < j", {e.i, e.j, e.k});
      table[e.i * n + e.j].emplace_back(e.k, e.value);
      table[e.j * n + e.i].emplace_back(e.k, -e.value);
    } else {
      table[e.i * n + e.j].emplace_back(e.k, e.value);
    }
  }

  AlgebraPtr a(new Algebra(std::move(d), std::move(table)));

  if (a->kind() == AlgebraKind::lie) {
    const Verdict v = sweep(3, n, [&](std::span<const std::size_t> t) -> std::optional<Witness> {
      Vector r = jacobian(*a, a->element(t[0]), a->element(t[1]), a->element(t[2]));
      if (is_zero(r)) return std::nullopt;
      return Witness{"jacobi", {}, std::move(r)};
    });
    if (!v.pass)
      throw AlgebraError(Code::axiom_violation, "Jacobi identity fails in '" + a->name() + "'", v.first()->tuple);
  }
  return a;
}

AlgebraPtr commutator_algebra(const Algebra& a) {
  if (a.kind() != AlgebraKind::general)
    throw AlgebraError(AlgebraError::Code::malformed, "commutator_algebra expects a general algebra");
  AlgebraDescriptor d;
  d.name = a.name() + "-minus";
  d.kind = AlgebraKind::anticommutative;
  d.dim = a.dim();
  d.basis = a.descriptor().basis;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = i + 1; j < a.dim(); ++j) {
      const Vector c = a.bracket_basis(i, j) - a.bracket_basis(j, i);
      for (std::size_t k = 0; k < c.size(); ++k)
        if (sgn(c[k]) != 0) d.table.push_back({i, j, k, c[k]});
    }
  return build_algebra(std::move(d));
}

Verdict alternativity_check(const Algebra& a, const SweepOptions& opts) {
  return sweep(3, a.dim(), [&](std::span<const std::size_t> t) -> std::optional<Witness> {
    const Vector x = a.element(t[0]), y = a.element(t[1]), z = a.element(t[2]);
    Vector left = associator(a, x, z, y) + associator(a, z, x, y);
    if (!is_zero(left)) return Witness{"left-alternative", {}, std::move(left)};
    Vector right = associator(a, y, x, z) + associator(a, y, z, x);
    if (!is_zero(right)) return Witness{"right-alternative", {}, std::move(right)};
    return std::nullopt;
  }, opts);
}

Verdict associativity_check(const Algebra& a, const SweepOptions& opts) {
  return sweep(3, a.dim(), [&](std::span<const std::size_t> t) -> std::optional<Witness> {
    Vector r = associator(a, a.element(t[0]), a.element(t[1]), a.element(t[2]));
    if (is_zero(r)) return std::nullopt;
    return Witness{"associative", {}, std::move(r)};
  }, opts);
}

Verdict maltsev_check(const Algebra& a, const SweepOptions& opts) {
  // f(a,b,y,z) = [J(a,y,z),b] − J(a,y,[b,z]); the identity is f(x,x,y,z) = 0,
  // whose full linearization is f(x1,x2,y,z) + f(x2,x1,y,z) = 0.
  auto f = [&](const Vector& p, const Vector& q, const Vector& y, const Vector& z) {
    return a.bracket(jacobian(a, p, y, z), q) - jacobian(a, p, y, a.bracket(q, z));
  };
  return sweep(4, a.dim(), [&](std::span<const std::size_t> t) -> std::optional<Witness> {
    if (t[0] > t[1]) return std::nullopt;
    const Vector x1 = a.element(t[0]), x2 = a.element(t[1]), y = a.element(t[2]), z = a.element(t[3]);
    Vector r = f(x1, x2, y, z) + f(x2, x1, y, z);
    if (is_zero(r)) return std::nullopt;
    return Witness{"maltsev", {}, std::move(r)};
  }, opts);
}

} // namespace mmpair
