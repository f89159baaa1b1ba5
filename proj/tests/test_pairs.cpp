#include "doctest.h"
#include "support.hpp"

using namespace mmpair;

namespace {

// Direct evaluation of both pair relations at arbitrary x, y.
bool mm_holds_at(const MapTriple& t, const Vector& x, const Vector& y) {
  const Algebra& L = t.L();
  const Vector xy = t.M().bracket(x, y), yx = t.M().bracket(y, x);
  const Vector r1 = L.bracket(t.S(x), t.S(y)) - t.S(xy) + Rational(2) * L.bracket(t.S(x), t.T(y));
  const Vector r2 = L.bracket(t.T(x), t.T(y)) - t.T(yx) + Rational(2) * L.bracket(t.T(x), t.S(y));
  return is_zero(r1) && is_zero(r2);
}

Vector y_direct(const MapTriple& t, const Vector& x, const Vector& y) {
  const Algebra& L = t.L();
  Vector s = L.bracket(t.S(x), t.S(y)) + L.bracket(t.T(x), t.T(y)) + L.bracket(t.P(x), t.P(y));
  return Rational(1, 6) * s;
}

MapTriple sigma_oracle(const MapTriple& t) { return {t.T, t.P, t.S}; }
MapTriple tau_oracle(const MapTriple& t) { return {-t.T, -t.S, -t.P}; }

} // namespace

TEST_SUITE("triality") {
  TEST_CASE("group law") {
    using G = TrialityElement;
    const G s = G::sigma(), t = G::tau(), id = G::identity();
    CHECK(s * s * s == id);
    CHECK(t * t == id);
    CHECK(t * s * t == s * s);
    const auto g = triality_group();
    for (std::size_t i = 0; i < 6; ++i)
      for (std::size_t j = 0; j < 6; ++j) CHECK((i == j) == (g[i] == g[j]));
    for (const auto& a : g) {
      CHECK(G::parse(a.name()) == a);
      bool has_inverse = false;
      for (const auto& b : g) has_inverse = has_inverse || (a * b == id);
      CHECK(has_inverse);
      for (const auto& b : g)
        for (const auto& c : g) CHECK((a * b) * c == a * (b * c));
    }
    CHECK(G::parse("sts") == t);
    CHECK(G::parse("ttss") == s * s);
    CHECK_THROWS(G::parse("x"));
  }

  TEST_CASE("action matches the generators and is a group action") {
    const auto g = triality_group();
    for (const auto& f : test::passing_fixtures(false)) {
      const MapTriple& t = f.triple;
      CHECK(triality_apply(TrialityElement::sigma(), t) == sigma_oracle(t));
      CHECK(triality_apply(TrialityElement::tau(), t) == tau_oracle(t));
      CHECK(triality_apply(TrialityElement::identity(), t) == t);
      // σ³ = τ² = id and τστ = σ² as map equalities
      CHECK(sigma_oracle(sigma_oracle(sigma_oracle(t))) == t);
      CHECK(tau_oracle(tau_oracle(t)) == t);
      CHECK(tau_oracle(sigma_oracle(tau_oracle(t))) == sigma_oracle(sigma_oracle(t)));
      for (const auto& a : g)
        for (const auto& b : g) CHECK(triality_apply(a * b, t) == triality_apply(a, triality_apply(b, t)));
    }
  }
}

TEST_SUITE("pairs") {
  TEST_CASE("make_triple completes P and validates sorts") {
    const auto sl2 = named_algebra("sl2");
    const MapTriple t = make_triple(LinearMap::identity(sl2), LinearMap::zero(sl2, sl2));
    CHECK(t.P == -LinearMap::identity(sl2));
    const auto oct = named_algebra("octonions");
    CHECK_THROWS_AS(make_triple(LinearMap::zero(oct, sl2), LinearMap::zero(oct, sl2)), PairError);
    const auto oct_minus = commutator_algebra(*oct);
    CHECK_THROWS_AS(make_triple(LinearMap::zero(sl2, oct_minus), LinearMap::zero(sl2, oct_minus)), PairError);
    CHECK_THROWS(LinearMap(sl2, sl2, Matrix(2, 3)));
  }

  TEST_CASE("conjugates and their inversion") {
    for (const auto& f : test::passing_fixtures(false)) {
      const MapTriple& t = f.triple;
      const Conjugates c = conjugates(t);
      CHECK(c.Sp == t.T - t.P);
      CHECK(c.Tp == t.P - t.S);
      CHECK(c.Pp == t.S - t.T);
      CHECK(invert_conjugates(c) == t);
      CHECK(Rational(3) * t.S == c.Pp - c.Tp);
    }
  }

  TEST_CASE("check_mm on fixtures agrees with direct evaluation at random points") {
    test::RationalGen gen(17);
    for (const auto& f : test::passing_fixtures(false)) {
      CAPTURE(f.name);
      CHECK(check_mm(f.triple).pass);
      const std::size_t n = f.triple.M().dim();
      for (int k = 0; k < 10; ++k) CHECK(mm_holds_at(f.triple, gen.vector(n), gen.vector(n)));
    }
  }

  TEST_CASE("perturbations fail check_mm with an exact witness") {
    const MapTriple t = identity_orbit_pairs(named_algebra("sl2"))[0];
    const MapTriple p = perturb(t, MapSelector::S, 0, 2, 1);
    const Verdict v = check_mm(p);
    REQUIRE_FALSE(v.pass);
    const Witness& w = *v.first();
    REQUIRE(w.tuple.size() == 2);
    const auto& M = p.M();
    CHECK_FALSE(mm_holds_at(p, M.element(w.tuple[0]), M.element(w.tuple[1])));
    CHECK_FALSE(is_zero(w.residual));
    // the doubled identity (ι, ι) is not a pair
    const LinearMap id = LinearMap::identity(named_algebra("sl2"));
    CHECK_FALSE(check_mm(make_triple(id, id)).pass);
  }

  TEST_CASE("sweep results do not depend on the job count") {
    const MapTriple p = perturb(lr_pair(named_algebra("m2")), MapSelector::T, 3, 1, Rational(-1, 2));
    SweepOptions one{1, 0}, many{4, 0};
    const Verdict a = check_mm(p, one), b = check_mm(p, many);
    REQUIRE(a.failures.size() == b.failures.size());
    for (std::size_t i = 0; i < a.failures.size(); ++i) {
      CHECK(a.failures[i].tuple == b.failures[i].tuple);
      CHECK(a.failures[i].relation == b.failures[i].relation);
      CHECK(a.failures[i].residual == b.failures[i].residual);
    }
    SweepOptions two{2, 2};
    CHECK(check_mm(p, two).failures.size() == 2);
  }

  TEST_CASE("derived pair identities hold on fixtures") {
    for (const auto& f : test::passing_fixtures(false)) {
      CAPTURE(f.name);
      CHECK(st_symmetry_check(f.triple).pass);
      CHECK(minimality_check(f.triple).pass);
      CHECK(conj_mm_check(f.triple).pass);
      CHECK(orbit_check(f.triple).agree());
    }
  }
}

TEST_SUITE("yamagutian") {
  TEST_CASE("sl2 identity pair: Y(e;f) = h/3") {
    const MapTriple t = identity_orbit_pairs(named_algebra("sl2"))[0];
    const YamagutianTable y = yamagutian(t);
    CHECK(y.at(0, 1) == Vector{0, 0, Rational(1, 3)});
    CHECK(y.at(1, 0) == Vector{0, 0, Rational(-1, 3)});
    // Y(h;e) = [h,e]/3 = 2e/3
    CHECK(y.at(2, 0) == Vector{Rational(2, 3), 0, 0});
  }

  TEST_CASE("table, context and direct definition agree") {
    test::RationalGen gen(23);
    for (const auto& f : test::passing_fixtures(false)) {
      const YamagutianTable y = yamagutian(f.triple);
      const TripleContext ctx(f.triple);
      const std::size_t n = f.triple.M().dim();
      for (int k = 0; k < 10; ++k) {
        const Vector u = gen.vector(n), v = gen.vector(n);
        const Vector d = y_direct(f.triple, u, v);
        CHECK(y.evaluate(u, v) == d);
        CHECK(ctx.yamagutian(u, v) == d);
        CHECK(y.evaluate(v, u) == -d);
      }
    }
  }

  TEST_CASE("invariance under every substitution") {
    for (const auto& f : test::passing_fixtures(false)) {
      const YamagutianTable y = yamagutian(f.triple);
      for (const auto& g : triality_group()) CHECK(yamagutian(triality_apply(g, f.triple)) == y);
      CHECK(yamagutian_invariance_check(f.triple).pass);
    }
  }

  TEST_CASE("alternative expressions hold on pairs") {
    for (const auto& f : test::passing_fixtures(false)) CHECK(yamagutian_forms_check(f.triple).pass);
  }
}
