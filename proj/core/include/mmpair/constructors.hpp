#pragma once

#include "mmpair/pairs.hpp"

#include <array>
#include <string>
#include <vector>

namespace mmpair {

/// sl2 with basis (e, f, h): [e,f] = h, [h,e] = 2e, [h,f] = −2f.
AlgebraDescriptor sl2_descriptor();
/// so3: [e1,e2] = e3 and cyclic.
AlgebraDescriptor so3_descriptor();
/// Two-dimensional non-abelian Lie algebra: [e1,e2] = e2.
AlgebraDescriptor solvable2_descriptor();
/// Full 2×2 matrix algebra, basis E11, E12, E21, E22.
AlgebraDescriptor m2_descriptor();
/// Upper-triangular 2×2 matrices, basis E11, E12, E22.
AlgebraDescriptor ut2_descriptor();
/// ℚ as a one-dimensional associative algebra.
AlgebraDescriptor rationals_descriptor();
/// One-dimensional algebra with zero bracket.
AlgebraDescriptor zero1_descriptor();
/// Three-dimensional general algebra with e0·e0 = e1, e0·e1 = e2; not alternative.
AlgebraDescriptor nonalternative3_descriptor();
/// Anticommutative [e1,e2] = e3, [e1,e3] = e1, [e2,e3] = 0; not Lie.
AlgebraDescriptor nonlie3_descriptor();

/// Octonions over ℚ by Cayley–Dickson doubling ℚ → ℂ → ℍ → 𝕆 with
/// (a,b)(c,d) = (ac − d̄b, da + bc̄) and conjugate (a,b)‾ = (ā, −b).
/// Basis e0..e7, e0 the unit; e_i for i < n/2 sits in the first half.
AlgebraDescriptor octonion_algebra();

/// Multiplication of coordinate vectors of length 2^k under the doubling above.
Vector cayley_dickson_multiply(const Vector& a, const Vector& b);

/// Built-in algebras by name: sl2, so3, solvable2, m2, ut2, rationals, zero1,
/// nonalt3, nonlie3, octonions, and glN for N >= 1. Each name maps to one
/// shared instance.
AlgebraPtr named_algebra(const std::string& name);
std::vector<std::string> named_algebras();

MapTriple zero_pair(AlgebraPtr m, AlgebraPtr l);

/// (ι,0,−ι), (0,−ι,ι), (−ι,ι,0) for the identity map ι of a Lie algebra.
std::array<MapTriple, 3> identity_orbit_pairs(AlgebraPtr l);

/// S = left multiplication, T = right multiplication, M = A⁻, L = gl(dim A).
MapTriple lr_pair(AlgebraPtr a);

enum class MapSelector { S, T };

/// Shifts one entry of S or T by delta and recomputes P.
MapTriple perturb(const MapTriple& t, MapSelector map, std::size_t row, std::size_t col, const Rational& delta);

} // namespace mmpair
