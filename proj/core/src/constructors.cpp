#include "mmpair/constructors.hpp"

#include <map>
#include <mutex>

namespace mmpair {

namespace {

AlgebraDescriptor lie(std::string name, std::vector<std::string> basis, std::vector<StructureConstant> table,
                      AlgebraKind kind = AlgebraKind::lie) {
  AlgebraDescriptor d;
  d.name = std::move(name);
  d.kind = kind;
  d.dim = basis.size();
  d.basis = std::move(basis);
  d.table = std::move(table);
  return d;
}

// Product table of a matrix-unit algebra: E_ij E_kl = δ_jk E_il, restricted to
// the listed units.
AlgebraDescriptor matrix_units(std::string name, const std::vector<std::pair<int, int>>& units) {
  AlgebraDescriptor d;
  d.name = std::move(name);
  d.kind = AlgebraKind::general;
  d.dim = units.size();
  for (auto [i, j] : units) d.basis.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
  for (std::size_t a = 0; a < units.size(); ++a)
    for (std::size_t b = 0; b < units.size(); ++b) {
      if (units[a].second != units[b].first) continue;
      const std::pair<int, int> prod{units[a].first, units[b].second};
      for (std::size_t c = 0; c < units.size(); ++c)
        if (units[c] == prod) d.table.push_back({a, b, c, Rational(1)});
    }
  return d;
}

Vector conjugate(const Vector& a) {
  Vector r = -a;
  r[0] = a[0];
  return r;
}

} // namespace

AlgebraDescriptor sl2_descriptor() {
  return lie("sl2", {"e", "f", "h"}, {{0, 1, 2, Rational(1)}, {0, 2, 0, Rational(-2)}, {1, 2, 1, Rational(2)}});
}

AlgebraDescriptor so3_descriptor() {
  return lie("so3", {"e1", "e2", "e3"}, {{0, 1, 2, Rational(1)}, {1, 2, 0, Rational(1)}, {0, 2, 1, Rational(-1)}});
}

AlgebraDescriptor solvable2_descriptor() { return lie("solvable2", {"e1", "e2"}, {{0, 1, 1, Rational(1)}}); }

AlgebraDescriptor m2_descriptor() { return matrix_units("m2", {{0, 0}, {0, 1}, {1, 0}, {1, 1}}); }

AlgebraDescriptor ut2_descriptor() { return matrix_units("ut2", {{0, 0}, {0, 1}, {1, 1}}); }

AlgebraDescriptor rationals_descriptor() {
  return lie("rationals", {"1"}, {{0, 0, 0, Rational(1)}}, AlgebraKind::general);
}

AlgebraDescriptor zero1_descriptor() { return lie("zero1", {"e1"}, {}, AlgebraKind::anticommutative); }

AlgebraDescriptor nonalternative3_descriptor() {
  return lie("nonalt3", {"e0", "e1", "e2"}, {{0, 0, 1, Rational(1)}, {0, 1, 2, Rational(1)}}, AlgebraKind::general);
}

AlgebraDescriptor nonlie3_descriptor() {
  return lie("nonlie3", {"e1", "e2", "e3"}, {{0, 1, 2, Rational(1)}, {0, 2, 0, Rational(1)}},
             AlgebraKind::anticommutative);
}

Vector cayley_dickson_multiply(const Vector& x, const Vector& y) {
  const std::size_t n = x.size();
  if (y.size() != n || n == 0 || (n & (n - 1)) != 0)
    throw ShapeError("Cayley-Dickson operands must have equal power-of-two length");
  if (n == 1) return {x[0] * y[0]};
  const std::size_t h = n / 2;
  const Vector a(x.begin(), x.begin() + h), b(x.begin() + h, x.end());
  const Vector c(y.begin(), y.begin() + h), d(y.begin() + h, y.end());
  const Vector first = cayley_dickson_multiply(a, c) - cayley_dickson_multiply(conjugate(d), b);
  const Vector second = cayley_dickson_multiply(d, a) + cayley_dickson_multiply(b, conjugate(c));
  Vector out = first;
  out.insert(out.end(), second.begin(), second.end());
  return out;
}

AlgebraDescriptor octonion_algebra() {
  AlgebraDescriptor d;
  d.name = "octonions";
  d.kind = AlgebraKind::general;
  d.dim = 8;
  for (std::size_t i = 0; i < 8; ++i) d.basis.push_back("e" + std::to_string(i));
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j) {
      const Vector p = cayley_dickson_multiply(unit_vector(8, i), unit_vector(8, j));
      for (std::size_t k = 0; k < 8; ++k)
        if (sgn(p[k]) != 0) d.table.push_back({i, j, k, p[k]});
    }
  return d;
}

std::vector<std::string> named_algebras() {
  return {"sl2", "so3", "solvable2", "m2", "ut2", "rationals", "zero1", "nonalt3", "nonlie3", "octonions"};
}

AlgebraPtr named_algebra(const std::string& name) {
  static std::mutex mu;
  static std::map<std::string, AlgebraPtr> cache;
  std::lock_guard lock(mu);
  if (auto it = cache.find(name); it != cache.end()) return it->second;

  AlgebraDescriptor d;
  if (name == "sl2") d = sl2_descriptor();
  else if (name == "so3") d = so3_descriptor();
  else if (name == "solvable2") d = solvable2_descriptor();
  else if (name == "m2") d = m2_descriptor();
  else if (name == "ut2") d = ut2_descriptor();
  else if (name == "rationals") d = rationals_descriptor();
  else if (name == "zero1") d = zero1_descriptor();
  else if (name == "nonalt3") d = nonalternative3_descriptor();
  else if (name == "nonlie3") d = nonlie3_descriptor();
  else if (name == "octonions") d = octonion_algebra();
  else if (name.size() > 2 && name.starts_with("gl") &&
           name.find_first_not_of("0123456789", 2) == std::string::npos)
    d = gl_descriptor(std::stoul(name.substr(2)));
  else
    throw std::invalid_argument("unknown algebra name '" + name + "'");
  return cache[name] = build_algebra(std::move(d));
}

MapTriple zero_pair(AlgebraPtr m, AlgebraPtr l) {
  const LinearMap z = LinearMap::zero(std::move(m), std::move(l));
  return make_triple(z, z);
}

std::array<MapTriple, 3> identity_orbit_pairs(AlgebraPtr l) {
  if (l->kind() != AlgebraKind::lie && l->kind() != AlgebraKind::gl)
    throw PairError("identity-orbit pairs need a Lie algebra, '" + l->name() + "' is " + to_string(l->kind()));
  const LinearMap id = LinearMap::identity(l);
  const LinearMap zero = LinearMap::zero(l, l);
  return {make_triple(id, zero), make_triple(zero, -id), make_triple(-id, id)};
}

MapTriple lr_pair(AlgebraPtr a) {
  if (a->kind() != AlgebraKind::general) throw PairError("lr_pair expects a general algebra");
  const std::size_t n = a->dim();
  AlgebraPtr m = commutator_algebra(*a);
  AlgebraPtr l = build_algebra(gl_descriptor(n));
  Matrix left(n * n, n), right(n * n, n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t c = 0; c < n; ++c) {
      const Vector xc = a->bracket_basis(x, c);
      const Vector cx = a->bracket_basis(c, x);
      for (std::size_t r = 0; r < n; ++r) {
        left(r * n + c, x) = xc[r];
        right(r * n + c, x) = cx[r];
      }
    }
  return make_triple(LinearMap(m, l, std::move(left)), LinearMap(m, l, std::move(right)));
}

MapTriple perturb(const MapTriple& t, MapSelector map, std::size_t row, std::size_t col, const Rational& delta) {
  LinearMap s = t.S, tt = t.T;
  LinearMap& target = map == MapSelector::S ? s : tt;
  if (row >= target.matrix.rows() || col >= target.matrix.cols())
    throw std::out_of_range("perturbation entry (" + std::to_string(row) + ", " + std::to_string(col) +
                            ") outside " + std::to_string(target.matrix.rows()) + "x" +
                            std::to_string(target.matrix.cols()) + " matrix");
  target.matrix(row, col) += delta;
  return make_triple(s, tt);
}

} // namespace mmpair
