#pragma once

#include "mmpair/pairs.hpp"

#include <istream>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace mmpair::dsl {

/// Expressions are two-sorted: M-valued (variables, brackets, J) and
/// L-valued (maps applied to M-expressions, Y, brackets). The literal 0 fits
/// either sort.
enum class Sort { M, L, zero };

struct Node;
using NodePtr = std::shared_ptr<const Node>;

struct Node {
  enum class Kind { variable, map, yamagutian, jacobian, bracket, scale, sum, zero };

  Kind kind;
  Sort sort;
  std::size_t column;       // 1-based source column
  int variable = -1;        // 0..3 for x, y, z, w
  MapRole role = MapRole::S;
  Rational coefficient = 1;
  std::vector<NodePtr> children;
};

/// lhs = rhs, or a chain a = b = c = ... (every link must hold).
struct Identity {
  std::string text;
  std::vector<NodePtr> sides;
  std::vector<int> free_variables; // sorted, subset of {0,1,2,3}
};

class DslError : public ParseError {
public:
  enum class Kind { syntax, sort };

  DslError(Kind kind, std::size_t column, std::string message, std::vector<std::string> expected = {});

  Kind kind() const { return kind_; }
  std::size_t column() const { return column_; }
  const std::vector<std::string>& expected() const { return expected_; }

private:
  Kind kind_;
  std::size_t column_;
  std::vector<std::string> expected_;
};

Identity parse_identity(std::string_view text);

/// One identity per nonblank line; '#' starts a comment.
std::vector<Identity> parse_identity_lines(std::istream& in);

std::string variable_name(int v);

/// Value of an expression with M-elements assigned to x, y, z, w. An empty
/// vector stands for the polymorphic zero.
Vector evaluate(const Node& n, const TripleContext& ctx, std::span<const Vector> assignment);

/// Residual of the first failing link at the given assignment, or nullopt.
std::optional<Witness> evaluate_at(const Identity& id, const TripleContext& ctx, std::span<const Vector> assignment);

/// Sweeps all basis tuples for the free variables; witness tuples list the
/// basis indices in free-variable order.
Verdict eval_identity(const Identity& id, const TripleContext& ctx, const SweepOptions& opts = {});

} // namespace mmpair::dsl
