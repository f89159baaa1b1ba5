#pragma once

#include "mmpair/matrix.hpp"
#include "mmpair/verdict.hpp"

#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace mmpair {

enum class AlgebraKind { general, anticommutative, lie, gl };

std::string to_string(AlgebraKind k);
AlgebraKind parse_algebra_kind(const std::string& s);

struct StructureConstant {
  std::size_t i, j, k;
  Rational value;
};

/// Structure-constant description of a finite-dimensional algebra.
/// For anticommutative and lie kinds only entries with i < j are listed; the
/// rest follows by antisymmetry. For gl, `gl_n` is set and `table` is empty.
struct AlgebraDescriptor {
  std::string name;
  AlgebraKind kind = AlgebraKind::general;
  std::size_t dim = 0;
  std::vector<std::string> basis;
  std::vector<StructureConstant> table;
  std::size_t gl_n = 0;
};

class AlgebraError : public std::runtime_error {
public:
  enum class Code { axiom_violation, index_out_of_range, duplicate_entry, malformed };

  AlgebraError(Code code, std::string message, std::vector<std::size_t> witness = {})
      : std::runtime_error(std::move(message)), code_(code), witness_(std::move(witness)) {}

  Code code() const { return code_; }
  const std::vector<std::size_t>& witness() const { return witness_; }

private:
  Code code_;
  std::vector<std::size_t> witness_;
};

class Algebra;
using AlgebraPtr = std::shared_ptr<const Algebra>;

/// A validated algebra. Elements are coordinate vectors of length dim().
/// For non-general kinds the product is written as a bracket.
class Algebra {
public:
  const AlgebraDescriptor& descriptor() const { return desc_; }
  const std::string& name() const { return desc_.name; }
  AlgebraKind kind() const { return desc_.kind; }
  std::size_t dim() const { return desc_.dim; }
  const std::string& basis_label(std::size_t i) const { return desc_.basis.at(i); }

  /// Bilinear product; for gl kind the matrix commutator of the row-major
  /// n×n reshapes.
  Vector bracket(const Vector& u, const Vector& v) const;
  /// Product of basis elements i and j.
  Vector bracket_basis(std::size_t i, std::size_t j) const;

  Vector element(std::size_t i) const { return unit_vector(dim(), i); }

  friend AlgebraPtr build_algebra(AlgebraDescriptor d);

private:
  using Table = std::vector<std::vector<std::pair<std::size_t, Rational>>>;
  Algebra(AlgebraDescriptor d, Table t) : desc_(std::move(d)), table_(std::move(t)) {}

  AlgebraDescriptor desc_;
  // Sparse product table indexed by i * dim + j.
  Table table_;
};

/// Validates indices, duplicates and the kind-specific axioms, completes
/// antisymmetric tables. Throws AlgebraError.
AlgebraPtr build_algebra(AlgebraDescriptor d);

/// gl(n): all n×n matrices under the commutator, basis E_ij in row-major order.
AlgebraDescriptor gl_descriptor(std::size_t n);

Vector bracket(const Algebra& a, const Vector& u, const Vector& v);

/// J(x,y,z) = [[x,y],z] + [[y,z],x] + [[z,x],y].
Vector jacobian(const Algebra& a, const Vector& x, const Vector& y, const Vector& z);

/// The minus algebra A⁻ of a general algebra: [x,y] = xy − yx.
AlgebraPtr commutator_algebra(const Algebra& a);

/// Linearized alternative laws (x,z,y)+(z,x,y) = 0 and (y,x,z)+(y,z,x) = 0 on
/// all basis triples, (a,b,c) = (ab)c − a(bc).
Verdict alternativity_check(const Algebra& a, const SweepOptions& opts = {});

/// (x,y,z) = 0 on all basis triples.
Verdict associativity_check(const Algebra& a, const SweepOptions& opts = {});

/// Mal'tsev identity [J(x,y,z),x] = J(x,y,[x,z]), linearized in x, on all
/// basis tuples (x1, x2, y, z).
Verdict maltsev_check(const Algebra& a, const SweepOptions& opts = {});

/// Associator (ab)c − a(bc).
Vector associator(const Algebra& a, const Vector& x, const Vector& y, const Vector& z);

} // namespace mmpair
