#include "mmpair/pairs.hpp"

namespace mmpair {

namespace {

void require_same_spaces(const LinearMap& a, const LinearMap& b) {
  if (a.source != b.source || a.target != b.target) throw PairError("linear maps act between different algebras");
}

Witness residual(std::string relation, Vector r) { return Witness{std::move(relation), {}, std::move(r)}; }

} // namespace

LinearMap::LinearMap(AlgebraPtr m, AlgebraPtr l, Matrix a)
    : source(std::move(m)), target(std::move(l)), matrix(std::move(a)) {
  if (!source || !target) throw PairError("linear map needs source and target algebras");
  if (matrix.rows() != target->dim() || matrix.cols() != source->dim())
    throw PairError("linear map matrix is " + std::to_string(matrix.rows()) + "x" + std::to_string(matrix.cols()) +
                    ", expected " + std::to_string(target->dim()) + "x" + std::to_string(source->dim()));
}

LinearMap LinearMap::zero(AlgebraPtr m, AlgebraPtr l) {
  Matrix z(l->dim(), m->dim());
  return LinearMap(std::move(m), std::move(l), std::move(z));
}

LinearMap LinearMap::identity(AlgebraPtr a) {
  Matrix id = Matrix::identity(a->dim());
  return LinearMap(a, a, std::move(id));
}

LinearMap operator+(const LinearMap& a, const LinearMap& b) {
  require_same_spaces(a, b);
  return LinearMap(a.source, a.target, a.matrix + b.matrix);
}

LinearMap operator-(const LinearMap& a, const LinearMap& b) {
  require_same_spaces(a, b);
  return LinearMap(a.source, a.target, a.matrix - b.matrix);
}

LinearMap operator-(const LinearMap& a) { return LinearMap(a.source, a.target, -a.matrix); }

LinearMap operator*(const Rational& c, const LinearMap& a) { return LinearMap(a.source, a.target, c * a.matrix); }

MapTriple make_triple(const LinearMap& S, const LinearMap& T) {
  require_same_spaces(S, T);
  if (S.source->kind() == AlgebraKind::general)
    throw PairError("source algebra '" + S.source->name() + "' must be anti-commutative");
  if (S.target->kind() != AlgebraKind::lie && S.target->kind() != AlgebraKind::gl)
    throw PairError("target algebra '" + S.target->name() + "' must be a Lie algebra");
  return MapTriple{S, T, -S - T};
}

Conjugates conjugates(const MapTriple& t) {
  Conjugates c{t.T - t.P, t.P - t.S, t.S - t.T};
  if (!(c.Sp + c.Tp + c.Pp).matrix.is_zero()) throw std::logic_error("conjugates do not sum to zero");
  if (invert_conjugates(c) != t) throw std::logic_error("conjugation is not inverted by 3S = P+ - T+");
  return c;
}

MapTriple invert_conjugates(const Conjugates& c) {
  const Rational third(1, 3);
  return MapTriple{third * (c.Pp - c.Tp), third * (c.Sp - c.Pp), third * (c.Tp - c.Sp)};
}

std::string to_string(MapRole r) {
  switch (r) {
  case MapRole::S: return "S";
  case MapRole::T: return "T";
  case MapRole::P: return "P";
  case MapRole::Sp: return "Sp";
  case MapRole::Tp: return "Tp";
  case MapRole::Pp: return "Pp";
  }
  return "?";
}

TrialityElement TrialityElement::parse(const std::string& word) {
  if (word == "id" || word.empty()) return identity();
  if (word == "s2") return sigma() * sigma();
  if (word == "s2t") return sigma() * sigma() * tau();
  TrialityElement g;
  for (char c : word) {
    if (c == 's' || c == 'S')
      g = g * sigma();
    else if (c == 't' || c == 'T')
      g = g * tau();
    else
      throw std::invalid_argument("triality word '" + word + "' may contain only s and t");
  }
  return g;
}

std::string TrialityElement::name() const {
  static const char* names[2][3] = {{"id", "s", "s2"}, {"t", "st", "s2t"}};
  return names[flip_][rot_];
}

std::array<TrialityElement, 6> triality_group() {
  return {TrialityElement{0, false}, TrialityElement{1, false}, TrialityElement{2, false},
          TrialityElement{0, true},  TrialityElement{1, true},  TrialityElement{2, true}};
}

MapTriple triality_apply(TrialityElement g, const MapTriple& t) {
  MapTriple r = t;
  if (g.flip()) r = MapTriple{-r.T, -r.S, -r.P};
  for (int i = 0; i < g.rotation(); ++i) r = MapTriple{r.T, r.P, r.S};
  return r;
}

TripleContext::TripleContext(const MapTriple& t) : m_(t.S.source), l_(t.S.target) {
  if (t.T.source != m_ || t.P.source != m_ || t.T.target != l_ || t.P.target != l_)
    throw PairError("triple maps act between different algebras");
  const std::size_t n = m_->dim();
  const Conjugates c{t.T - t.P, t.P - t.S, t.S - t.T};
  const LinearMap* maps[6] = {&t.S, &t.T, &t.P, &c.Sp, &c.Tp, &c.Pp};
  for (int r = 0; r < 6; ++r) {
    images_[r].reserve(n);
    for (std::size_t i = 0; i < n; ++i) images_[r].push_back(maps[r]->image(i));
  }
  mbr_.reserve(n * n);
  y6_.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      mbr_.push_back(m_->bracket_basis(i, j));
      Vector y = lbr(MapRole::S, i, MapRole::S, j);
      add_scaled(y, 1, lbr(MapRole::T, i, MapRole::T, j));
      add_scaled(y, 1, lbr(MapRole::P, i, MapRole::P, j));
      y6_.push_back(std::move(y));
    }
}

Vector TripleContext::apply(MapRole r, const Vector& m) const {
  if (m.size() != dim_m()) throw ShapeError("element of M has wrong dimension");
  Vector out = zero_vector(l_->dim());
  const auto& imgs = images_[static_cast<int>(r)];
  for (std::size_t i = 0; i < m.size(); ++i) add_scaled(out, m[i], imgs[i]);
  return out;
}

Vector TripleContext::yamagutian(const Vector& u, const Vector& v) const {
  Vector out = zero_vector(l_->dim());
  for (std::size_t i = 0; i < dim_m(); ++i) {
    if (sgn(u[i]) == 0) continue;
    for (std::size_t j = 0; j < dim_m(); ++j)
      if (sgn(v[j]) != 0) add_scaled(out, u[i] * v[j] / 6, y6(i, j));
  }
  return out;
}

Verdict check_mm_1a(const TripleContext& ctx, const SweepOptions& opts) {
  using enum MapRole;
  return sweep(2, ctx.dim_m(), [&](std::span<const std::size_t> p) -> std::optional<Witness> {
    const auto x = p[0], y = p[1];
    Vector r = ctx.lbr(S, x, S, y) - ctx.at_bracket(S, x, y);
    add_scaled(r, 2, ctx.lbr(S, x, T, y));
    if (is_zero(r)) return std::nullopt;
    return residual("MM-1A", std::move(r));
  }, opts);
}

Verdict check_mm_1b(const TripleContext& ctx, const SweepOptions& opts) {
  using enum MapRole;
  return sweep(2, ctx.dim_m(), [&](std::span<const std::size_t> p) -> std::optional<Witness> {
    const auto x = p[0], y = p[1];
    Vector r = ctx.lbr(T, x, T, y) - ctx.at_bracket(T, y, x);
    add_scaled(r, 2, ctx.lbr(T, x, S, y));
    if (is_zero(r)) return std::nullopt;
    return residual("MM-1B", std::move(r));
  }, opts);
}

Verdict check_mm(const TripleContext& ctx, const SweepOptions& opts) {
  using enum MapRole;
  return sweep(2, ctx.dim_m(), [&](std::span<const std::size_t> p) -> std::optional<Witness> {
    const auto x = p[0], y = p[1];
    Vector a = ctx.lbr(S, x, S, y) - ctx.at_bracket(S, x, y);
    add_scaled(a, 2, ctx.lbr(S, x, T, y));
    if (!is_zero(a)) return residual("MM-1A", std::move(a));
    Vector b = ctx.lbr(T, x, T, y) - ctx.at_bracket(T, y, x);
    add_scaled(b, 2, ctx.lbr(T, x, S, y));
    if (!is_zero(b)) return residual("MM-1B", std::move(b));
    return std::nullopt;
  }, opts);
}

Verdict check_mm(const MapTriple& t, const SweepOptions& opts) { return check_mm(TripleContext(t), opts); }

Verdict st_symmetry_check(const TripleContext& ctx, const SweepOptions& opts) {
  using enum MapRole;
  return sweep(2, ctx.dim_m(), [&](std::span<const std::size_t> p) -> std::optional<Witness> {
    Vector r = ctx.lbr(S, p[0], T, p[1]) - ctx.lbr(T, p[0], S, p[1]);
    if (is_zero(r)) return std::nullopt;
    return residual("ST-SYM", std::move(r));
  }, opts);
}

Verdict st_symmetry_check(const MapTriple& t, const SweepOptions& opts) {
  return st_symmetry_check(TripleContext(t), opts);
}

Verdict minimality_check(const TripleContext& ctx, const SweepOptions& opts) {
  using enum MapRole;
  return sweep(2, ctx.dim_m(), [&](std::span<const std::size_t> p) -> std::optional<Witness> {
    const auto x = p[0], y = p[1];
    const Vector a = Rational(2) * ctx.lbr(S, x, T, y);
    const Vector b = ctx.at_bracket(S, x, y) - ctx.lbr(S, x, S, y);
    const Vector c = ctx.at_bracket(T, y, x) - ctx.lbr(T, x, T, y);
    const Vector d = Rational(2) * ctx.lbr(T, x, S, y);
    if (Vector r = a - b; !is_zero(r)) return residual("MIN 2[Sx,Ty] = S[x,y] - [Sx,Sy]", std::move(r));
    if (Vector r = b - c; !is_zero(r)) return residual("MIN S[x,y] - [Sx,Sy] = T[y,x] - [Tx,Ty]", std::move(r));
    if (Vector r = c - d; !is_zero(r)) return residual("MIN T[y,x] - [Tx,Ty] = 2[Tx,Sy]", std::move(r));
    return std::nullopt;
  }, opts);
}

Verdict minimality_check(const MapTriple& t, const SweepOptions& opts) {
  return minimality_check(TripleContext(t), opts);
}

Verdict conj_mm_check(const TripleContext& ctx, const SweepOptions& opts) {
  using enum MapRole;
  static constexpr std::array<std::pair<MapRole, MapRole>, 3> roles{{{S, Sp}, {T, Tp}, {P, Pp}}};
  return sweep(2, ctx.dim_m(), [&](std::span<const std::size_t> p) -> std::optional<Witness> {
    const auto x = p[0], y = p[1];
    for (const auto& [X, Xp] : roles) {
      const Vector rhs = ctx.at_bracket(X, x, y);
      if (Vector r = ctx.lbr(X, x, Xp, y) - rhs; !is_zero(r))
        return residual("CONJ-MM [" + to_string(X) + "x," + to_string(Xp) + "y]", std::move(r));
      if (Vector r = ctx.lbr(Xp, x, X, y) - rhs; !is_zero(r))
        return residual("CONJ-MM [" + to_string(Xp) + "x," + to_string(X) + "y]", std::move(r));
    }
    return std::nullopt;
  }, opts);
}

Verdict conj_mm_check(const MapTriple& t, const SweepOptions& opts) { return conj_mm_check(TripleContext(t), opts); }

bool OrbitVerdict::agree() const {
  for (bool b : mm_pass)
    if (b != mm_pass[0]) return false;
  return true;
}

OrbitVerdict orbit_check(const MapTriple& t, const SweepOptions& opts) {
  OrbitVerdict v;
  for (std::size_t g = 0; g < v.elements.size(); ++g)
    v.mm_pass[g] = check_mm(triality_apply(v.elements[g], t), opts).pass;
  return v;
}

Vector YamagutianTable::evaluate(const Vector& u, const Vector& v) const {
  if (u.size() != dim_ || v.size() != dim_) throw ShapeError("Yamagutian arguments have wrong dimension");
  Vector out = zero_vector(values_.empty() ? 0 : values_.front().size());
  for (std::size_t i = 0; i < dim_; ++i) {
    if (sgn(u[i]) == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j)
      if (sgn(v[j]) != 0) add_scaled(out, u[i] * v[j], at(i, j));
  }
  return out;
}

YamagutianTable yamagutian(const MapTriple& t) {
  const TripleContext ctx(t);
  const std::size_t n = ctx.dim_m();
  std::vector<Vector> values;
  values.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) values.push_back(Rational(1, 6) * ctx.y6(i, j));
  return YamagutianTable(n, std::move(values));
}

Verdict yamagutian_form_check(const TripleContext& ctx, YamagutianForm form, const SweepOptions& opts) {
  using enum MapRole;
  struct Rot {
    MapRole X, Xp, A, B, Cp;
  };
  // Rotations (S,T,P) -> (T,P,S) -> (P,S,T); for the mixed form the triple
  // (A, B, Cp) is (S, T, P⁺), (T, P, S⁺), (P, S, T⁺).
  static constexpr std::array<Rot, 3> rots{{{S, Sp, S, T, Pp}, {T, Tp, T, P, Sp}, {P, Pp, P, S, Tp}}};
  return sweep(2, ctx.dim_m(), [&](std::span<const std::size_t> p) -> std::optional<Witness> {
    const auto x = p[0], y = p[1];
    const Vector& y6 = ctx.y6(x, y);
    switch (form) {
    case YamagutianForm::cubic:
      for (const auto& r : rots) {
        Vector v = Rational(3) * ctx.lbr(r.X, x, r.X, y) - ctx.at_bracket(r.Xp, x, y) - y6;
        if (!is_zero(v)) return residual("Y-ALT1 " + to_string(r.X), std::move(v));
      }
      break;
    case YamagutianForm::mixed:
      for (const auto& r : rots) {
        Vector v = Rational(2) * ctx.at_bracket(r.Cp, x, y) - Rational(6) * ctx.lbr(r.A, x, r.B, y) - y6;
        if (!is_zero(v)) return residual("Y-ALT2 " + to_string(r.Cp), std::move(v));
      }
      break;
    case YamagutianForm::conjugate:
      for (const auto& r : rots) {
        Vector v = ctx.lbr(r.Xp, x, r.Xp, y) + ctx.at_bracket(r.Xp, x, y) - y6;
        if (!is_zero(v)) return residual("Y-CONJ " + to_string(r.Xp), std::move(v));
      }
      break;
    case YamagutianForm::sum18: {
      Vector v = Rational(-3) * y6;
      for (const auto& r : rots) add_scaled(v, 1, ctx.lbr(r.Xp, x, r.Xp, y));
      if (!is_zero(v)) return residual("Y-18", std::move(v));
      break;
    }
    }
    return std::nullopt;
  }, opts);
}

Verdict yamagutian_forms_check(const MapTriple& t, const SweepOptions& opts) {
  const TripleContext ctx(t);
  for (auto form : {YamagutianForm::cubic, YamagutianForm::mixed, YamagutianForm::conjugate, YamagutianForm::sum18}) {
    Verdict v = yamagutian_form_check(ctx, form, opts);
    if (!v.pass) return v;
  }
  return {};
}

Verdict yamagutian_invariance_check(const MapTriple& t) {
  const YamagutianTable base = yamagutian(t);
  Verdict v;
  const auto group = triality_group();
  for (std::size_t g = 0; g < group.size(); ++g) {
    const YamagutianTable other = yamagutian(triality_apply(group[g], t));
    if (other == base) continue;
    for (std::size_t i = 0; i < base.dim() && v.pass; ++i)
      for (std::size_t j = 0; j < base.dim(); ++j)
        if (other.at(i, j) != base.at(i, j)) {
          v.pass = false;
          v.failures.push_back(Witness{"Y-TRI " + group[g].name(), {g, i, j}, other.at(i, j) - base.at(i, j)});
          break;
        }
    if (!v.pass) break;
  }
  return v;
}

} // namespace mmpair
