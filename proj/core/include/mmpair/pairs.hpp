#pragma once

#include "mmpair/algebra.hpp"

#include <array>
#include <string>

namespace mmpair {

class PairError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Linear map M → L. Column j holds the L-coordinates of the image of the
/// j-th basis element of M.
struct LinearMap {
  AlgebraPtr source;
  AlgebraPtr target;
  Matrix matrix;

  LinearMap(AlgebraPtr m, AlgebraPtr l, Matrix a);
  static LinearMap zero(AlgebraPtr m, AlgebraPtr l);
  /// Only for M = L as algebras.
  static LinearMap identity(AlgebraPtr a);

  Vector operator()(const Vector& m) const { return matrix * m; }
  Vector image(std::size_t j) const { return matrix.column(j); }

  friend bool operator==(const LinearMap& a, const LinearMap& b) {
    return a.source == b.source && a.target == b.target && a.matrix == b.matrix;
  }
};

LinearMap operator+(const LinearMap& a, const LinearMap& b);
LinearMap operator-(const LinearMap& a, const LinearMap& b);
LinearMap operator-(const LinearMap& a);
LinearMap operator*(const Rational& c, const LinearMap& a);

/// (S, T, P) with S + T + P = 0.
struct MapTriple {
  LinearMap S, T, P;

  const Algebra& M() const { return *S.source; }
  const Algebra& L() const { return *S.target; }

  friend bool operator==(const MapTriple&, const MapTriple&) = default;
};

/// P = −S − T. M must be anticommutative (or Lie/gl), L must be Lie or gl.
MapTriple make_triple(const LinearMap& S, const LinearMap& T);

/// S⁺ = T − P, T⁺ = P − S, P⁺ = S − T.
struct Conjugates {
  LinearMap Sp, Tp, Pp;
};

/// Computes the conjugates and asserts their sum and inversion relations.
Conjugates conjugates(const MapTriple& t);
/// Recovers S, T, P from the conjugates via 3S = P⁺ − T⁺ and its rotations.
MapTriple invert_conjugates(const Conjugates& c);

enum class MapRole { S, T, P, Sp, Tp, Pp };
std::string to_string(MapRole r);

/// Element σ^rotation ∘ τ^flip of the order-6 substitution group, where
/// σ·(S,T,P) = (T,P,S) and τ·(S,T,P) = (−T,−S,−P).
class TrialityElement {
public:
  constexpr TrialityElement() = default;
  constexpr TrialityElement(int rotation, bool flip) : rot_(((rotation % 3) + 3) % 3), flip_(flip) {}

  static constexpr TrialityElement identity() { return {}; }
  static constexpr TrialityElement sigma() { return {1, false}; }
  static constexpr TrialityElement tau() { return {0, true}; }

  /// Reduces a word over {s, t} (read left to right as a product, "st" = σ∘τ)
  /// or one of the names id, s, s2, t, st, s2t.
  static TrialityElement parse(const std::string& word);

  int rotation() const { return rot_; }
  bool flip() const { return flip_; }
  std::string name() const;

  friend constexpr TrialityElement operator*(TrialityElement g, TrialityElement h) {
    // τ σ^c = σ^{−c} τ
    return {g.rot_ + (g.flip_ ? -h.rot_ : h.rot_), g.flip_ != h.flip_};
  }
  friend constexpr bool operator==(TrialityElement, TrialityElement) = default;

private:
  int rot_ = 0;
  bool flip_ = false;
};

/// id, σ, σ², τ, στ, σ²τ.
std::array<TrialityElement, 6> triality_group();

MapTriple triality_apply(TrialityElement g, const MapTriple& t);

/// Precomputed basis data for sweeping identities over a triple.
class TripleContext {
public:
  explicit TripleContext(const MapTriple& t);

  const Algebra& M() const { return *m_; }
  const Algebra& L() const { return *l_; }
  std::size_t dim_m() const { return m_->dim(); }

  const Vector& image(MapRole r, std::size_t i) const { return images_[static_cast<int>(r)][i]; }
  Vector apply(MapRole r, const Vector& m) const;
  const Vector& mbracket(std::size_t i, std::size_t j) const { return mbr_[i * dim_m() + j]; }
  /// X_{[e_i, e_j]}
  Vector at_bracket(MapRole r, std::size_t i, std::size_t j) const { return apply(r, mbracket(i, j)); }
  /// [X_{e_i}, Y_{e_j}] in L
  Vector lbr(MapRole a, std::size_t i, MapRole b, std::size_t j) const {
    return l_->bracket(image(a, i), image(b, j));
  }
  Vector lbracket(const Vector& u, const Vector& v) const { return l_->bracket(u, v); }

  /// 6Y(e_i; e_j) = [S_i,S_j] + [T_i,T_j] + [P_i,P_j]
  const Vector& y6(std::size_t i, std::size_t j) const { return y6_[i * dim_m() + j]; }
  /// Y(u; v) by bilinear extension.
  Vector yamagutian(const Vector& u, const Vector& v) const;

private:
  AlgebraPtr m_, l_;
  std::array<std::vector<Vector>, 6> images_;
  std::vector<Vector> mbr_;
  std::vector<Vector> y6_;
};

/// [S_x,S_y] = S_[x,y] − 2[S_x,T_y] ("MM-1A") and
/// [T_x,T_y] = T_[y,x] − 2[T_x,S_y] ("MM-1B") on all basis pairs.
Verdict check_mm(const MapTriple& t, const SweepOptions& opts = {});
Verdict check_mm(const TripleContext& ctx, const SweepOptions& opts = {});
Verdict check_mm_1a(const TripleContext& ctx, const SweepOptions& opts = {});
Verdict check_mm_1b(const TripleContext& ctx, const SweepOptions& opts = {});

/// [S_x,T_y] = [T_x,S_y]
Verdict st_symmetry_check(const MapTriple& t, const SweepOptions& opts = {});
Verdict st_symmetry_check(const TripleContext& ctx, const SweepOptions& opts = {});

/// 2[S_x,T_y] = S_[x,y] − [S_x,S_y] = T_[y,x] − [T_x,T_y] = 2[T_x,S_y]
Verdict minimality_check(const MapTriple& t, const SweepOptions& opts = {});
Verdict minimality_check(const TripleContext& ctx, const SweepOptions& opts = {});

/// [X_x,X⁺_y] = [X⁺_x,X_y] = X_[x,y] for X ∈ {S, T, P}
Verdict conj_mm_check(const MapTriple& t, const SweepOptions& opts = {});
Verdict conj_mm_check(const TripleContext& ctx, const SweepOptions& opts = {});

struct OrbitVerdict {
  std::array<TrialityElement, 6> elements = triality_group();
  std::array<bool, 6> mm_pass{};
  bool agree() const;
};
OrbitVerdict orbit_check(const MapTriple& t, const SweepOptions& opts = {});

/// Y(e_i; e_j) for all i, j; skew by construction.
class YamagutianTable {
public:
  YamagutianTable(std::size_t dim_m, std::vector<Vector> values) : dim_(dim_m), values_(std::move(values)) {}

  std::size_t dim() const { return dim_; }
  const Vector& at(std::size_t i, std::size_t j) const { return values_[i * dim_ + j]; }
  Vector evaluate(const Vector& u, const Vector& v) const;

  friend bool operator==(const YamagutianTable&, const YamagutianTable&) = default;

private:
  std::size_t dim_;
  std::vector<Vector> values_;
};

YamagutianTable yamagutian(const MapTriple& t);

enum class YamagutianForm {
  cubic,      // 6Y = 3[X_x,X_y] − X⁺_[x,y]
  mixed,      // 6Y = 2P⁺_[x,y] − 6[S_x,T_y] and rotations
  conjugate,  // 6Y = [X⁺_x,X⁺_y] + X⁺_[x,y]
  sum18       // 18Y = Σ [X⁺_x,X⁺_y]
};
Verdict yamagutian_form_check(const TripleContext& ctx, YamagutianForm form, const SweepOptions& opts = {});
/// All ten alternative expressions.
Verdict yamagutian_forms_check(const MapTriple& t, const SweepOptions& opts = {});

/// yamagutian(g·t) = yamagutian(t) for all six g; witness tuple is {g index}.
Verdict yamagutian_invariance_check(const MapTriple& t);

} // namespace mmpair
