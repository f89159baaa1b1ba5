#pragma once

#include "mmpair/pairs.hpp"

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace mmpair {

/// One named identity about Moufang–Mal'tsev triples.
struct CatalogEntry {
  std::string id;
  std::string anchor;        // the displayed formula, ASCII
  std::size_t arity;         // number of M-variables swept; 0 for structural checks
  bool conditional;          // asserted only for Moufang–Mal'tsev pairs
  bool gating;               // a failure makes the suite fail
  std::vector<std::string> dsl; // equivalent DSL lines; empty when not expressible
  std::function<Verdict(const TripleContext&, const MapTriple&, const SweepOptions&)> check;
};

/// The closed built-in catalog, in report order.
const std::vector<CatalogEntry>& catalog();
const CatalogEntry& catalog_entry(std::string_view id);

/// Runs the built-in check of `e` regardless of preconditions.
Verdict evaluate_entry(const CatalogEntry& e, const TripleContext& ctx, const MapTriple& t,
                       const SweepOptions& opts = {});

enum class Status { pass, fail, skipped };
std::string to_string(Status s);

struct ReportEntry {
  std::string id;
  std::string anchor;
  Status status = Status::pass;
  bool gating = true;
  std::vector<Witness> failures;
};

struct IdentityReport {
  std::vector<ReportEntry> entries;

  /// No gating entry failed and nothing was skipped.
  bool passed() const;
  const ReportEntry* find(std::string_view id) const;
};

/// Evaluates every catalog entry. Conditional entries are skipped when MM-1A or
/// MM-1B fails.
IdentityReport run_suite(const MapTriple& t, const SweepOptions& opts = {});

/// Report holding only the MM-1A and MM-1B entries.
IdentityReport run_mm_report(const MapTriple& t, const SweepOptions& opts = {});

} // namespace mmpair
