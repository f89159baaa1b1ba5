#pragma once

#include "mmpair/catalog.hpp"

#include <string>

namespace mmpair {

/// Ordered JSON array of {"id", "anchor", "status", "witness", "residual"};
/// witness and residual are null unless the entry failed with a tuple witness.
std::string report_to_json(const IdentityReport& r);

/// One line per entry plus up to `witness_limit` witness lines (0 = all).
/// Basis labels of M and L are used for readability.
std::string report_to_text(const IdentityReport& r, const Algebra& m, const Algebra& l, std::size_t witness_limit);

std::string format_element(const Vector& v, const Algebra& a);
std::string format_tuple(const std::vector<std::size_t>& t, const Algebra& a);

} // namespace mmpair
