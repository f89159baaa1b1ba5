#include "doctest.h"
#include "support.hpp"

using namespace mmpair;

namespace {

AlgebraDescriptor lie3(std::vector<StructureConstant> table) {
  AlgebraDescriptor d;
  d.name = "t";
  d.kind = AlgebraKind::lie;
  d.dim = 3;
  d.basis = {"a", "b", "c"};
  d.table = std::move(table);
  return d;
}

} // namespace

TEST_SUITE("algebra") {
  TEST_CASE("sl2 brackets") {
    const auto sl2 = named_algebra("sl2");
    const Vector e = sl2->element(0), f = sl2->element(1), h = sl2->element(2);
    CHECK(sl2->bracket(e, f) == h);
    CHECK(sl2->bracket(h, e) == Rational(2) * e);
    CHECK(sl2->bracket(h, f) == Rational(-2) * f);
    CHECK(sl2->bracket(f, e) == -h);
    CHECK(is_zero(sl2->bracket(h, h)));
  }

  TEST_CASE("gl(n) is the matrix commutator") {
    const auto gl2 = named_algebra("gl2");
    CHECK(gl2->dim() == 4);
    // [E12, E21] = E11 - E22
    CHECK(gl2->bracket(unit_vector(4, 1), unit_vector(4, 2)) == Vector{1, 0, 0, -1});
    CHECK(gl2->basis_label(1) == "E0_1");
  }

  TEST_CASE("validation errors") {
    CHECK_NOTHROW(build_algebra(lie3({{0, 1, 2, 1}})));
    auto code_of = [](AlgebraDescriptor d) {
      try {
        build_algebra(std::move(d));
      } catch (const AlgebraError& e) {
        return e.code();
      }
      FAIL("no error");
      return AlgebraError::Code::malformed;
    };
    CHECK(code_of(lie3({{0, 3, 1, 1}})) == AlgebraError::Code::index_out_of_range);
    CHECK(code_of(lie3({{0, 1, 2, 1}, {0, 1, 2, 2}})) == AlgebraError::Code::duplicate_entry);
    CHECK(code_of(lie3({{1, 1, 2, 1}})) == AlgebraError::Code::axiom_violation);
    // [a,b] = a, [a,c] = b, [b,c] = a fails Jacobi
    AlgebraDescriptor bad = nonlie3_descriptor();
    bad.kind = AlgebraKind::lie;
    CHECK(code_of(bad) == AlgebraError::Code::axiom_violation);
    AlgebraDescriptor short_basis = lie3({});
    short_basis.basis.pop_back();
    CHECK(code_of(short_basis) == AlgebraError::Code::malformed);
  }

  TEST_CASE("Jacobi violation carries a witness triple") {
    AlgebraDescriptor bad = nonlie3_descriptor();
    bad.kind = AlgebraKind::lie;
    try {
      build_algebra(bad);
      FAIL("expected AlgebraError");
    } catch (const AlgebraError& e) {
      REQUIRE(e.witness().size() == 3);
      const auto a = build_algebra(nonlie3_descriptor());
      const auto& w = e.witness();
      CHECK_FALSE(is_zero(jacobian(*a, a->element(w[0]), a->element(w[1]), a->element(w[2]))));
    }
  }

  TEST_CASE("Lie algebras: random Jacobi and antisymmetry") {
    test::RationalGen gen(3);
    for (const char* name : {"sl2", "so3", "solvable2", "gl2", "gl3"}) {
      const auto a = named_algebra(name);
      for (int i = 0; i < 25; ++i) {
        const Vector x = gen.vector(a->dim()), y = gen.vector(a->dim()), z = gen.vector(a->dim());
        CHECK(is_zero(jacobian(*a, x, y, z)));
        CHECK(a->bracket(x, y) == -a->bracket(y, x));
      }
    }
  }

  TEST_CASE("associative, alternative and Mal'tsev checks") {
    const auto m2 = named_algebra("m2");
    CHECK(associativity_check(*m2).pass);
    CHECK(alternativity_check(*m2).pass);
    const auto oct = named_algebra("octonions");
    CHECK_FALSE(associativity_check(*oct).pass);
    CHECK(alternativity_check(*oct).pass);
    CHECK_FALSE(alternativity_check(*named_algebra("nonalt3")).pass);
    const auto oct_minus = commutator_algebra(*oct);
    CHECK(oct_minus->kind() == AlgebraKind::anticommutative);
    CHECK(maltsev_check(*oct_minus).pass);
    // A⁻ of an alternative algebra is Mal'tsev but not Lie for the octonions
    const auto e = [&](std::size_t i) { return oct_minus->element(i); };
    CHECK_FALSE(is_zero(jacobian(*oct_minus, e(1), e(2), e(4))));
    CHECK(maltsev_check(*named_algebra("sl2")).pass);
  }

  TEST_CASE("commutator algebra of m2 agrees with gl2") {
    const auto m2m = commutator_algebra(*named_algebra("m2"));
    const auto gl2 = named_algebra("gl2");
    test::RationalGen gen(8);
    for (int i = 0; i < 20; ++i) {
      const Vector x = gen.vector(4), y = gen.vector(4);
      CHECK(m2m->bracket(x, y) == gl2->bracket(x, y));
    }
  }

  TEST_CASE("associator is trilinear") {
    const auto oct = named_algebra("octonions");
    test::RationalGen gen(21);
    for (int i = 0; i < 10; ++i) {
      const Vector x = gen.vector(8), y = gen.vector(8), z = gen.vector(8), w = gen.vector(8);
      const Rational c = gen.next();
      CHECK(associator(*oct, x + c * w, y, z) == associator(*oct, x, y, z) + c * associator(*oct, w, y, z));
      // alternativity: (x,x,y) = 0 and (x,y,y) = 0
      CHECK(is_zero(associator(*oct, x, x, y)));
      CHECK(is_zero(associator(*oct, x, y, y)));
    }
  }
}
