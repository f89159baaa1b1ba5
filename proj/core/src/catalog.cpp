#include "mmpair/catalog.hpp"

#include <stdexcept>

namespace mmpair {

namespace {

using enum MapRole;
using Tuple = std::span<const std::size_t>;

std::optional<Witness> fail(std::string relation, Vector r) { return Witness{std::move(relation), {}, std::move(r)}; }

// Cyclic shift S→T→P→S of a role (and of the conjugates alongside).
MapRole rotate(MapRole r, int times = 1) {
  static constexpr MapRole next[6] = {T, P, S, Tp, Pp, Sp};
  for (int i = 0; i < times; ++i) r = next[static_cast<int>(r)];
  return r;
}

MapRole conj(MapRole r) {
  static constexpr MapRole c[3] = {Sp, Tp, Pp};
  return c[static_cast<int>(r)];
}

Vector x_of(const TripleContext& ctx, MapRole r, std::size_t i) { return ctx.image(r, i); }

// Checks a chain a0 = a1 = ... pointwise.
std::optional<Witness> chain(const std::string& label, const std::vector<Vector>& terms) {
  for (std::size_t i = 0; i + 1 < terms.size(); ++i)
    if (Vector r = terms[i] - terms[i + 1]; !is_zero(r))
      return fail(label + " (link " + std::to_string(i + 1) + ")", std::move(r));
  return std::nullopt;
}

Vector m_bracket3(const TripleContext& ctx, std::size_t x, std::size_t y, std::size_t z) {
  return ctx.M().bracket(ctx.mbracket(x, y), ctx.M().element(z));
}

Vector m_jacobian(const TripleContext& ctx, std::size_t x, std::size_t y, std::size_t z) {
  return jacobian(ctx.M(), ctx.M().element(x), ctx.M().element(y), ctx.M().element(z));
}

Verdict sweep_ctx(const TripleContext& ctx, std::size_t arity, const SweepOptions& opts,
                  const std::function<std::optional<Witness>(Tuple)>& f) {
  return sweep(arity, ctx.dim_m(), f, opts);
}

// [X⁺_[x,y], X⁺_z] + [X⁺_[y,z], X⁺_x] + [X⁺_[z,x], X⁺_y] = −V_{J(x,y,z)}
CatalogEntry conj_jacobian_entry(std::string id, MapRole X, MapRole V, bool gating) {
  const std::string x = to_string(X), v = to_string(V);
  CatalogEntry e{id,
                 "[" + x + "_[x,y]," + x + "_z] + cyc = -" + v + "_J(x,y,z)",
                 3,
                 true,
                 gating,
                 {"[" + x + "([x,y])," + x + "(z)] + [" + x + "([y,z])," + x + "(x)] + [" + x + "([z,x])," + x +
                  "(y)] = -" + v + "(J(x,y,z))"},
                 {}};
  e.check = [X, V, id](const TripleContext& ctx, const MapTriple&, const SweepOptions& o) {
    return sweep_ctx(ctx, 3, o, [&](Tuple t) -> std::optional<Witness> {
      const std::size_t a = t[0], b = t[1], c = t[2];
      Vector r = ctx.lbracket(ctx.at_bracket(X, a, b), ctx.image(X, c));
      add_scaled(r, 1, ctx.lbracket(ctx.at_bracket(X, b, c), ctx.image(X, a)));
      add_scaled(r, 1, ctx.lbracket(ctx.at_bracket(X, c, a), ctx.image(X, b)));
      add_scaled(r, 1, ctx.apply(V, m_jacobian(ctx, a, b, c)));
      if (is_zero(r)) return std::nullopt;
      return fail(id, std::move(r));
    });
  };
  return e;
}

CatalogEntry decomp_entry(std::string id, MapRole A) {
  const MapRole B = rotate(A);
  const std::string a = to_string(A), b = to_string(B);
  CatalogEntry e{id,
                 "[" + a + "x," + a + "y] = 2Y + 1/3 " + a + "_[x,y] + 2/3 " + b + "_[x,y]; [" + a + "x," + b +
                     "y] = -Y + 1/3 " + a + "_[x,y] - 1/3 " + b + "_[x,y]; [" + b + "x," + b + "y] = 2Y - 2/3 " + a +
                     "_[x,y] - 1/3 " + b + "_[x,y]",
                 2,
                 true,
                 true,
                 {"[" + a + "(x)," + a + "(y)] = 2*Y(x;y) + 1/3*" + a + "([x,y]) + 2/3*" + b + "([x,y])",
                  "[" + a + "(x)," + b + "(y)] = -Y(x;y) + 1/3*" + a + "([x,y]) - 1/3*" + b + "([x,y])",
                  "[" + b + "(x)," + b + "(y)] = 2*Y(x;y) - 2/3*" + a + "([x,y]) - 1/3*" + b + "([x,y])",
                  "3*[" + a + "(x)," + a + "(y)] = 6*Y(x;y) + " + a + "([x,y]) + 2*" + b + "([x,y])",
                  "3*[" + a + "(x)," + b + "(y)] = -3*Y(x;y) + " + a + "([x,y]) - " + b + "([x,y])",
                  "3*[" + b + "(x)," + b + "(y)] = 6*Y(x;y) - 2*" + a + "([x,y]) - " + b + "([x,y])"},
                 {}};
  e.check = [A, B, id](const TripleContext& ctx, const MapTriple&, const SweepOptions& o) {
    return sweep_ctx(ctx, 2, o, [&](Tuple t) -> std::optional<Witness> {
      const std::size_t x = t[0], y = t[1];
      const Vector Y = Rational(1, 6) * ctx.y6(x, y);
      const Vector ab = ctx.at_bracket(A, x, y), bb = ctx.at_bracket(B, x, y);
      const Rational third(1, 3), two_thirds(2, 3);
      const Vector aa_l = ctx.lbr(A, x, A, y), ab_l = ctx.lbr(A, x, B, y), bb_l = ctx.lbr(B, x, B, y);

      // raw coefficients
      Vector r1 = aa_l - Rational(2) * Y;
      add_scaled(add_scaled(r1, -third, ab), -two_thirds, bb);
      if (!is_zero(r1)) return fail(id + " [AA]", std::move(r1));
      Vector r2 = ab_l + Y;
      add_scaled(add_scaled(r2, -third, ab), third, bb);
      if (!is_zero(r2)) return fail(id + " [AB]", std::move(r2));
      Vector r3 = bb_l - Rational(2) * Y;
      add_scaled(add_scaled(r3, two_thirds, ab), third, bb);
      if (!is_zero(r3)) return fail(id + " [BB]", std::move(r3));

      // cleared by 3
      const Vector& y6 = ctx.y6(x, y);
      Vector c1 = Rational(3) * aa_l - y6 - ab - Rational(2) * bb;
      if (!is_zero(c1)) return fail(id + " 3[AA]", std::move(c1));
      Vector c2 = Rational(3) * ab_l + Rational(1, 2) * y6 - ab + bb;
      if (!is_zero(c2)) return fail(id + " 3[AB]", std::move(c2));
      Vector c3 = Rational(3) * bb_l - y6 + Rational(2) * ab + bb;
      if (!is_zero(c3)) return fail(id + " 3[BB]", std::move(c3));
      return std::nullopt;
    });
  };
  return e;
}

std::vector<CatalogEntry> build_catalog() {
  std::vector<CatalogEntry> c;

  c.push_back({"MM-1A", "[Sx,Sy] = S_[x,y] - 2[Sx,Ty]", 2, false, true,
               {"[S(x),S(y)] = S([x,y]) - 2*[S(x),T(y)]"},
               [](const TripleContext& ctx, const MapTriple&, const SweepOptions& o) { return check_mm_1a(ctx, o); }});
  c.push_back({"MM-1B", "[Tx,Ty] = T_[y,x] - 2[Tx,Sy]", 2, false, true,
               {"[T(x),T(y)] = T([y,x]) - 2*[T(x),S(y)]"},
               [](const TripleContext& ctx, const MapTriple&, const SweepOptions& o) { return check_mm_1b(ctx, o); }});
  c.push_back({"ST-SYM", "[Sx,Ty] = [Tx,Sy]", 2, true, true, {"[S(x),T(y)] = [T(x),S(y)]"},
               [](const TripleContext& ctx, const MapTriple&, const SweepOptions& o) {
                 return st_symmetry_check(ctx, o);
               }});
  c.push_back({"MIN", "2[Sx,Ty] = S_[x,y] - [Sx,Sy] = T_[y,x] - [Tx,Ty] = 2[Tx,Sy]", 2, true, true,
               {"2*[S(x),T(y)] = S([x,y]) - [S(x),S(y)] = T([y,x]) - [T(x),T(y)] = 2*[T(x),S(y)]"},
               [](const TripleContext& ctx, const MapTriple&, const SweepOptions& o) {
                 return minimality_check(ctx, o);
               }});
  c.push_back({"ORBIT", "(S,T),(-T,-S),(T,P),(-P,-T),(P,S),(-S,-P): one pair => all pairs", 0, false, true, {},
               [](const TripleContext&, const MapTriple& t, const SweepOptions& o) {
                 const OrbitVerdict ov = orbit_check(t, o);
                 Verdict v;
                 for (std::size_t g = 1; g < ov.mm_pass.size(); ++g)
                   if (ov.mm_pass[g] != ov.mm_pass[0]) {
                     v.pass = false;
                     v.failures.push_back({"ORBIT " + ov.elements[g].name(), {g}, {}});
                     break;
                   }
                 return v;
               }});
  c.push_back({"CONJ-DEF", "P+ = S - T = P + 2S = -P - 2T (and rotations)", 1, false, true,
               {"Pp(x) = S(x) - T(x) = P(x) + 2*S(x) = -P(x) - 2*T(x)",
                "Sp(x) = T(x) - P(x) = S(x) + 2*T(x) = -S(x) - 2*P(x)",
                "Tp(x) = P(x) - S(x) = T(x) + 2*P(x) = -T(x) - 2*S(x)"},
               [](const TripleContext& ctx, const MapTriple&, const SweepOptions& o) {
                 return sweep_ctx(ctx, 1, o, [&](Tuple t) -> std::optional<Witness> {
                   for (MapRole A : {S, T, P}) {
                     // A⁺ of the role preceding ... P⁺ = S − T uses (S, T, P)
                     const MapRole B = rotate(A), C = rotate(A, 2);
                     const Vector a = x_of(ctx, A, t[0]), b = x_of(ctx, B, t[0]), cc = x_of(ctx, C, t[0]);
                     if (auto w = chain("CONJ-DEF " + to_string(conj(C)),
                                        {ctx.image(conj(C), t[0]), a - b, cc + Rational(2) * a, -cc - Rational(2) * b}))
                       return w;
                   }
                   return std::nullopt;
                 });
               }});
  c.push_back({"CONJ-SUM", "S+ + T+ + P+ = 0", 1, false, true, {"Sp(x) + Tp(x) + Pp(x) = 0"},
               [](const TripleContext& ctx, const MapTriple&, const SweepOptions& o) {
                 return sweep_ctx(ctx, 1, o, [&](Tuple t) -> std::optional<Witness> {
                   Vector r = ctx.image(Sp, t[0]) + ctx.image(Tp, t[0]) + ctx.image(Pp, t[0]);
                   if (is_zero(r)) return std::nullopt;
                   return fail("CONJ-SUM", std::move(r));
                 });
               }});
  c.push_back({"CONJ-MM", "[Sx,S+y] = [S+x,Sy] = S_[x,y] (and for T, P)", 2, true, true,
               {"[S(x),Sp(y)] = [Sp(x),S(y)] = S([x,y])", "[T(x),Tp(y)] = [Tp(x),T(y)] = T([x,y])",
                "[P(x),Pp(y)] = [Pp(x),P(y)] = P([x,y])"},
               [](const TripleContext& ctx, const MapTriple&, const SweepOptions& o) { return conj_mm_check(ctx, o); }});
  c.push_back({"CONJ-INV", "3P = T+ - S+ = P+ + 2T+ = -P+ - 2S+ (and rotations)", 1, false, true,
               {"3*P(x) = Tp(x) - Sp(x) = Pp(x) + 2*Tp(x) = -Pp(x) - 2*Sp(x)",
                "3*S(x) = Pp(x) - Tp(x) = Sp(x) + 2*Pp(x) = -Sp(x) - 2*Tp(x)",
                "3*T(x) = Sp(x) - Pp(x) = Tp(x) + 2*Sp(x) = -Tp(x) - 2*Pp(x)"},
               [](const TripleContext& ctx, const MapTriple&, const SweepOptions& o) {
                 return sweep_ctx(ctx, 1, o, [&](Tuple t) -> std::optional<Witness> {
                   for (MapRole A : {P, S, T}) {
                     // 3A = B⁺ − C⁺ = A⁺ + 2B⁺ = −A⁺ − 2C⁺ with (A, B, C) = (P, T, S) rotated
                     const MapRole B = rotate(A, 2), C = rotate(A);
                     const Vector ap = ctx.image(conj(A), t[0]), bp = ctx.image(conj(B), t[0]),
                                  cp = ctx.image(conj(C), t[0]);
                     if (auto w = chain("CONJ-INV 3" + to_string(A),
                                        {Rational(3) * ctx.image(A, t[0]), bp - cp, ap + Rational(2) * bp,
                                         -ap - Rational(2) * cp}))
                       return w;
                   }
                   return std::nullopt;
                 });
               }});
  c.push_back({"Y-SKEW", "6Y(x;y) = [Sx,Sy] + [Tx,Ty] + [Px,Py] = -6Y(y;x)", 2, false, true,
               {"6*Y(x;y) = [S(x),S(y)] + [T(x),T(y)] + [P(x),P(y)] = -6*Y(y;x)"},
               [](const TripleContext& ctx, const MapTriple&, const SweepOptions& o) {
                 return sweep_ctx(ctx, 2, o, [&](Tuple t) -> std::optional<Witness> {
                   Vector r = ctx.y6(t[0], t[1]) + ctx.y6(t[1], t[0]);
                   if (is_zero(r)) return std::nullopt;
                   return fail("Y-SKEW", std::move(r));
                 });
               }});
  c.push_back({"Y-TRI", "Y(g.(S,T,P)) = Y(S,T,P) for every triality substitution g", 0, false, true, {},
               [](const TripleContext&, const MapTriple& t, const SweepOptions&) {
                 return yamagutian_invariance_check(t);
               }});
  c.push_back({"Y-ALT1", "6Y(x;y) = 3[Sx,Sy] - S+_[x,y] = 3[Tx,Ty] - T+_[x,y] = 3[Px,Py] - P+_[x,y]", 2, true, true,
               {"6*Y(x;y) = 3*[S(x),S(y)] - Sp([x,y]) = 3*[T(x),T(y)] - Tp([x,y]) = 3*[P(x),P(y)] - Pp([x,y])"},
               [](const TripleContext& ctx, const MapTriple&, const SweepOptions& o) {
                 return yamagutian_form_check(ctx, YamagutianForm::cubic, o);
               }});
  c.push_back({"Y-ALT2",
               "6Y(x;y) = 2P+_[x,y] - 6[Sx,Ty] = 2S+_[x,y] - 6[Tx,Py] = 2T+_[x,y] - 6[Px,Sy]", 2, true, true,
               {"6*Y(x;y) = 2*Pp([x,y]) - 6*[S(x),T(y)] = 2*Sp([x,y]) - 6*[T(x),P(y)] = 2*Tp([x,y]) - 6*[P(x),S(y)]"},
               [](const TripleContext& ctx, const MapTriple&, const SweepOptions& o) {
                 return yamagutian_form_check(ctx, YamagutianForm::mixed, o);
               }});
  c.push_back({"Y-CONJ",
               "6Y(x;y) = [S+x,S+y] + S+_[x,y] = [T+x,T+y] + T+_[x,y] = [P+x,P+y] + P+_[x,y]", 2, true, true,
               {"6*Y(x;y) = [Sp(x),Sp(y)] + Sp([x,y]) = [Tp(x),Tp(y)] + Tp([x,y]) = [Pp(x),Pp(y)] + Pp([x,y])"},
               [](const TripleContext& ctx, const MapTriple&, const SweepOptions& o) {
                 return yamagutian_form_check(ctx, YamagutianForm::conjugate, o);
               }});
  c.push_back({"Y-18", "18Y(x;y) = [S+x,S+y] + [T+x,T+y] + [P+x,P+y]", 2, true, true,
               {"18*Y(x;y) = [Sp(x),Sp(y)] + [Tp(x),Tp(y)] + [Pp(x),Pp(y)]"},
               [](const TripleContext& ctx, const MapTriple&, const SweepOptions& o) {
                 return yamagutian_form_check(ctx, YamagutianForm::sum18, o);
               }});
  c.push_back(decomp_entry("DECOMP-ST", S));
  c.push_back(decomp_entry("DECOMP-TP", T));
  c.push_back(decomp_entry("DECOMP-PS", P));
  c.push_back({"Y-ACT", "6[Y(x;y),Sz] = 3[[Sx,Sy],Sz] - S_[[x,y],z] (and for T, P)", 3, true, true,
               {"6*[Y(x;y),S(z)] = 3*[[S(x),S(y)],S(z)] - S([[x,y],z])",
                "6*[Y(x;y),T(z)] = 3*[[T(x),T(y)],T(z)] - T([[x,y],z])",
                "6*[Y(x;y),P(z)] = 3*[[P(x),P(y)],P(z)] - P([[x,y],z])"},
               [](const TripleContext& ctx, const MapTriple&, const SweepOptions& o) {
                 return sweep_ctx(ctx, 3, o, [&](Tuple t) -> std::optional<Witness> {
                   const Vector xyz = m_bracket3(ctx, t[0], t[1], t[2]);
                   for (MapRole X : {S, T, P}) {
                     Vector r = ctx.lbracket(ctx.y6(t[0], t[1]), ctx.image(X, t[2]));
                     add_scaled(r, -3, ctx.lbracket(ctx.lbr(X, t[0], X, t[1]), ctx.image(X, t[2])));
                     add_scaled(r, 1, ctx.apply(X, xyz));
                     if (!is_zero(r)) return fail("Y-ACT " + to_string(X), std::move(r));
                   }
                   return std::nullopt;
                 });
               }});
  c.push_back({"TRI-SUM3", "[[Sx,Sy],Sz] + [[Tx,Ty],Tz] + [[Px,Py],Pz] = 0", 3, true, true,
               {"[[S(x),S(y)],S(z)] + [[T(x),T(y)],T(z)] + [[P(x),P(y)],P(z)] = 0"},
               [](const TripleContext& ctx, const MapTriple&, const SweepOptions& o) {
                 return sweep_ctx(ctx, 3, o, [&](Tuple t) -> std::optional<Witness> {
                   Vector r = zero_vector(ctx.L().dim());
                   for (MapRole X : {S, T, P})
                     add_scaled(r, 1, ctx.lbracket(ctx.lbr(X, t[0], X, t[1]), ctx.image(X, t[2])));
                   if (is_zero(r)) return std::nullopt;
                   return fail("TRI-SUM3", std::move(r));
                 });
               }});
  c.push_back({"Y-CYC", "6[Y(x;y),Sz] + 6[Y(y;z),Sx] + 6[Y(z;x),Sy] = -S_J(x,y,z) (and for T, P)", 3, true, true,
               {"6*[Y(x;y),S(z)] + 6*[Y(y;z),S(x)] + 6*[Y(z;x),S(y)] = -S(J(x,y,z))",
                "6*[Y(x;y),T(z)] + 6*[Y(y;z),T(x)] + 6*[Y(z;x),T(y)] = -T(J(x,y,z))",
                "6*[Y(x;y),P(z)] + 6*[Y(y;z),P(x)] + 6*[Y(z;x),P(y)] = -P(J(x,y,z))"},
               [](const TripleContext& ctx, const MapTriple&, const SweepOptions& o) {
                 return sweep_ctx(ctx, 3, o, [&](Tuple t) -> std::optional<Witness> {
                   const std::size_t a = t[0], b = t[1], cc = t[2];
                   const Vector J = m_jacobian(ctx, a, b, cc);
                   for (MapRole X : {S, T, P}) {
                     Vector r = ctx.lbracket(ctx.y6(a, b), ctx.image(X, cc));
                     add_scaled(r, 1, ctx.lbracket(ctx.y6(b, cc), ctx.image(X, a)));
                     add_scaled(r, 1, ctx.lbracket(ctx.y6(cc, a), ctx.image(X, b)));
                     add_scaled(r, 1, ctx.apply(X, J));
                     if (!is_zero(r)) return fail("Y-CYC " + to_string(X), std::move(r));
                   }
                   return std::nullopt;
                 });
               }});
  c.push_back(conj_jacobian_entry("CONJ-J-A-Pp", Sp, Pp, false));
  c.push_back(conj_jacobian_entry("CONJ-J-A-Sp", Sp, Sp, true));
  c.push_back(conj_jacobian_entry("CONJ-J-B", Tp, Tp, true));
  c.push_back(conj_jacobian_entry("CONJ-J-C", Pp, Pp, true));
  c.push_back({"Y-J", "Y([x,y];z) + Y([y,z];x) + Y([z,x];y) = 0", 3, true, true,
               {"Y([x,y];z) + Y([y,z];x) + Y([z,x];y) = 0"},
               [](const TripleContext& ctx, const MapTriple&, const SweepOptions& o) {
                 return sweep_ctx(ctx, 3, o, [&](Tuple t) -> std::optional<Witness> {
                   const std::size_t a = t[0], b = t[1], cc = t[2];
                   const auto& M = ctx.M();
                   Vector r = ctx.yamagutian(ctx.mbracket(a, b), M.element(cc));
                   add_scaled(r, 1, ctx.yamagutian(ctx.mbracket(b, cc), M.element(a)));
                   add_scaled(r, 1, ctx.yamagutian(ctx.mbracket(cc, a), M.element(b)));
                   if (is_zero(r)) return std::nullopt;
                   return fail("Y-J", std::move(r));
                 });
               }});
  return c;
}

} // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> c = build_catalog();
  return c;
}

const CatalogEntry& catalog_entry(std::string_view id) {
  for (const auto& e : catalog())
    if (e.id == id) return e;
  throw std::out_of_range("no catalog entry '" + std::string(id) + "'");
}

Verdict evaluate_entry(const CatalogEntry& e, const TripleContext& ctx, const MapTriple& t, const SweepOptions& opts) {
  return e.check(ctx, t, opts);
}

std::string to_string(Status s) {
  switch (s) {
  case Status::pass: return "pass";
  case Status::fail: return "fail";
  case Status::skipped: return "skipped";
  }
  return "?";
}

bool IdentityReport::passed() const {
  for (const auto& e : entries) {
    if (e.status == Status::skipped) return false;
    if (e.status == Status::fail && e.gating) return false;
  }
  return true;
}

const ReportEntry* IdentityReport::find(std::string_view id) const {
  for (const auto& e : entries)
    if (e.id == id) return &e;
  return nullptr;
}

namespace {

ReportEntry make_entry(const CatalogEntry& e, Verdict v) {
  return ReportEntry{e.id, e.anchor, v.pass ? Status::pass : Status::fail, e.gating, std::move(v.failures)};
}

} // namespace

IdentityReport run_suite(const MapTriple& t, const SweepOptions& opts) {
  const TripleContext ctx(t);
  IdentityReport report;
  bool mm_ok = true;
  for (const auto& e : catalog()) {
    if (e.conditional && !mm_ok) {
      report.entries.push_back(ReportEntry{e.id, e.anchor, Status::skipped, e.gating, {}});
      continue;
    }
    report.entries.push_back(make_entry(e, e.check(ctx, t, opts)));
    if ((e.id == "MM-1A" || e.id == "MM-1B") && report.entries.back().status == Status::fail) mm_ok = false;
  }
  return report;
}

IdentityReport run_mm_report(const MapTriple& t, const SweepOptions& opts) {
  const TripleContext ctx(t);
  IdentityReport report;
  for (const char* id : {"MM-1A", "MM-1B"}) {
    const auto& e = catalog_entry(id);
    report.entries.push_back(make_entry(e, e.check(ctx, t, opts)));
  }
  return report;
}

} // namespace mmpair
