#pragma once

#include "mmpair/rational.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace mmpair {

/// A failing instance of some relation: which relation, at which basis tuple,
/// and the exact nonzero residual (lhs − rhs).
struct Witness {
  std::string relation;
  std::vector<std::size_t> tuple;
  Vector residual;
};

struct Verdict {
  bool pass = true;
  std::vector<Witness> failures; // lexicographic tuple order, truncated to the witness limit

  explicit operator bool() const { return pass; }
  const Witness* first() const { return failures.empty() ? nullptr : &failures.front(); }
};

struct SweepOptions {
  unsigned jobs = 1;
  std::size_t witness_limit = 1; // 0 = unlimited
};

using TupleCheck = std::function<std::optional<Witness>(std::span<const std::size_t>)>;

/// Runs `check` on every tuple in [0, dim)^arity in lexicographic order.
/// Work is split into contiguous chunks across `jobs` threads; the reported
/// failures do not depend on the number of jobs.
Verdict sweep(std::size_t arity, std::size_t dim, const TupleCheck& check, const SweepOptions& opts = {});

} // namespace mmpair
