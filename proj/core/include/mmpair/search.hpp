#pragma once

#include "mmpair/catalog.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace mmpair {

/// S = Σ a_i B_i, T = Σ b_i B_i over a fixed list of basis maps.
struct AnsatzSpace {
  AlgebraPtr M, L;
  std::vector<LinearMap> basis;
};

enum class SearchStrategy { automatic, exact, numeric };
std::string to_string(SearchStrategy s);
SearchStrategy parse_search_strategy(const std::string& s);

struct SearchOptions {
  SearchStrategy strategy = SearchStrategy::automatic;
  unsigned starts = 100;
  std::uint64_t seed = 1;
  std::int64_t max_denominator = 1'000'000;
  bool exclude_trivial = false;
  unsigned jobs = 1;
  int max_iterations = 200;
};

struct SearchSolution {
  Vector a, b;
  MapTriple triple;
  bool suite_pass = false;
};

struct SearchDiagnostics {
  SearchStrategy used = SearchStrategy::exact;
  unsigned starts = 0;
  unsigned converged = 0;
  unsigned rejected = 0; // converged but failed rationalization or exact verification
  bool degenerate = false; // every coefficient vector solves the system
};

struct SearchResult {
  std::vector<SearchSolution> solutions; // sorted by (a, b)
  SearchDiagnostics diagnostics;
};

/// Solves the Moufang–Mal'tsev relations restricted to the ansatz. One basis
/// map is solved in closed form; larger ansätze (or strategy = numeric) use
/// multi-start Levenberg–Marquardt in double precision followed by
/// continued-fraction rationalization. Every returned solution passes
/// check_mm exactly.
SearchResult ansatz_search(const AnsatzSpace& space, const SearchOptions& opts = {});

/// Best rational approximation with denominator at most `max_den`.
Rational rationalize(double value, std::int64_t max_den);

} // namespace mmpair
