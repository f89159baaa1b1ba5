#pragma once

#include "mmpair/search.hpp"

#include <filesystem>
#include <string>
#include <string_view>

namespace mmpair {

/// Malformed or unreadable input; `where` names the file and field.
class InputError : public std::runtime_error {
public:
  InputError(std::string where, const std::string& message)
      : std::runtime_error(where + ": " + message), where_(std::move(where)) {}
  const std::string& where() const { return where_; }

private:
  std::string where_;
};

std::string read_text_file(const std::filesystem::path& p);

/// {"name", "kind", "dim" | "n", "basis", "table": [[i, j, k, "p/q"], ...]}
AlgebraDescriptor parse_algebra_json(std::string_view text, const std::string& origin = "<algebra>");
std::string algebra_to_json(const AlgebraDescriptor& d);
AlgebraPtr load_algebra(const std::filesystem::path& p);

/// {"M": algebra | name | path, "L": ..., "S": {"entries": [[...]]}, "T": {...}}.
/// String references resolve to built-in names first, then to files relative
/// to `base_dir`.
MapTriple parse_pair_json(std::string_view text, const std::filesystem::path& base_dir,
                          const std::string& origin = "<pair>");
MapTriple load_pair(const std::filesystem::path& p);
std::string pair_to_json(const MapTriple& t);

struct AnsatzFile {
  AnsatzSpace space;
  SearchOptions options;
};

/// {"M", "L", "basis": [{"entries": ...}, ...], optional "exclude_trivial",
/// "strategy" (auto|exact|numeric), "starts", "seed", "max_denominator"}.
AnsatzFile parse_ansatz_json(std::string_view text, const std::filesystem::path& base_dir,
                             const std::string& origin = "<ansatz>");
AnsatzFile load_ansatz(const std::filesystem::path& p);
std::string ansatz_to_json(const AnsatzSpace& space, const SearchOptions& opts);

} // namespace mmpair
