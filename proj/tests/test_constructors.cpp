#include "doctest.h"
#include "support.hpp"

#include <array>

using namespace mmpair;

namespace {

// Independent Cayley–Dickson product on fixed-size arrays, by recursion on
// halves: (a,b)(c,d) = (ac − d̄b, da + bc̄).
template <std::size_t N>
std::array<Rational, N> conj(const std::array<Rational, N>& x) {
  std::array<Rational, N> r;
  r[0] = x[0];
  for (std::size_t i = 1; i < N; ++i) r[i] = -x[i];
  return r;
}

template <std::size_t N>
std::array<Rational, N> cd(const std::array<Rational, N>& x, const std::array<Rational, N>& y) {
  if constexpr (N == 1) {
    return {x[0] * y[0]};
  } else {
    constexpr std::size_t H = N / 2;
    std::array<Rational, H> a, b, c, d;
    for (std::size_t i = 0; i < H; ++i) {
      a[i] = x[i], b[i] = x[H + i], c[i] = y[i], d[i] = y[H + i];
    }
    const auto l1 = cd(a, c), l2 = cd(conj(d), b), r1 = cd(d, a), r2 = cd(b, conj(c));
    std::array<Rational, N> r;
    for (std::size_t i = 0; i < H; ++i) {
      r[i] = l1[i] - l2[i];
      r[H + i] = r1[i] + r2[i];
    }
    return r;
  }
}

Rational norm(const Vector& v) {
  Rational s = 0;
  for (const auto& x : v) s += x * x;
  return s;
}

// reshape a gl(n) coordinate vector and apply it to y
Vector act(const Vector& glvec, const Vector& y) {
  const std::size_t n = y.size();
  Vector r = zero_vector(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) r[i] += glvec[i * n + j] * y[j];
  return r;
}

} // namespace

TEST_SUITE("constructors") {
  TEST_CASE("octonion table matches an independent doubling") {
    const auto oct = named_algebra("octonions");
    test::RationalGen gen(2);
    for (int t = 0; t < 30; ++t) {
      const Vector x = gen.vector(8), y = gen.vector(8);
      std::array<Rational, 8> ax, ay;
      std::copy(x.begin(), x.end(), ax.begin());
      std::copy(y.begin(), y.end(), ay.begin());
      const auto p = cd(ax, ay);
      CHECK(oct->bracket(x, y) == Vector(p.begin(), p.end()));
      CHECK(cayley_dickson_multiply(x, y) == oct->bracket(x, y));
    }
  }

  TEST_CASE("octonion basis facts") {
    const auto oct = named_algebra("octonions");
    const Vector one = oct->element(0);
    for (std::size_t i = 1; i < 8; ++i) {
      CHECK(oct->bracket(oct->element(i), oct->element(i)) == -one);
      for (std::size_t j = 1; j < 8; ++j)
        if (i != j)
          CHECK(oct->bracket(oct->element(i), oct->element(j)) == -oct->bracket(oct->element(j), oct->element(i)));
    }
    test::RationalGen gen(4);
    for (int t = 0; t < 30; ++t) {
      const Vector x = gen.vector(8), y = gen.vector(8);
      CHECK(oct->bracket(one, x) == x);
      CHECK(oct->bracket(x, one) == x);
      CHECK(norm(oct->bracket(x, y)) == norm(x) * norm(y));
    }
  }

  TEST_CASE("lr_pair maps are left and right multiplications") {
    test::RationalGen gen(9);
    for (const char* name : {"rationals", "m2", "ut2", "octonions", "nonalt3"}) {
      const auto a = named_algebra(name);
      const MapTriple t = lr_pair(a);
      CHECK(t.M().dim() == a->dim());
      CHECK(t.L().dim() == a->dim() * a->dim());
      CHECK(t.M().kind() == AlgebraKind::anticommutative);
      for (int k = 0; k < 10; ++k) {
        const Vector x = gen.vector(a->dim()), y = gen.vector(a->dim());
        CHECK(act(t.S(x), y) == a->bracket(x, y));
        CHECK(act(t.T(x), y) == a->bracket(y, x));
        CHECK(t.P(x) == -(t.S(x) + t.T(x)));
      }
    }
  }

  TEST_CASE("identity orbit pairs") {
    const auto sl2 = named_algebra("sl2");
    const auto o = identity_orbit_pairs(sl2);
    const LinearMap id = LinearMap::identity(sl2), z = LinearMap::zero(sl2, sl2);
    CHECK(o[0].S == id);
    CHECK(o[0].T == z);
    CHECK(o[0].P == -id);
    CHECK(o[1].S == z);
    CHECK(o[1].T == -id);
    CHECK(o[2].S == -id);
    CHECK(o[2].T == id);
    CHECK(o[2].P == z);
  }

  TEST_CASE("perturb changes one entry") {
    const MapTriple t = identity_orbit_pairs(named_algebra("sl2"))[0];
    const MapTriple p = perturb(t, MapSelector::T, 2, 1, Rational(1, 2));
    CHECK(p.S == t.S);
    CHECK(p.T.matrix(2, 1) == Rational(1, 2));
    CHECK((p.T.matrix - t.T.matrix) * Vector{1, 0, 1} == Vector{0, 0, 0});
    CHECK(p.P == -(p.S + p.T));
    CHECK_THROWS(perturb(t, MapSelector::S, 3, 0, 1));
  }

  TEST_CASE("named algebras") {
    CHECK(named_algebra("sl2") == named_algebra("sl2"));
    CHECK(named_algebra("gl3")->dim() == 9);
    CHECK_THROWS(named_algebra("sl5"));
    CHECK_THROWS(named_algebra("gl0"));
    for (const auto& n : named_algebras()) CHECK(named_algebra(n)->name() == n);
  }
}
