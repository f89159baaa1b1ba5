#include "mmpair/io.hpp"

#include "mmpair/constructors.hpp"

#include "json.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace mmpair {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

void reject_unknown(const json& j, const std::set<std::string>& allowed, const std::string& where) {
  if (!j.is_object()) throw InputError(where, "expected a JSON object");
  for (const auto& [key, _] : j.items())
    if (!allowed.contains(key)) throw InputError(where + "." + key, "unknown key");
}

const json& require(const json& j, const std::string& key, const std::string& where) {
  if (!j.contains(key)) throw InputError(where, "missing key '" + key + "'");
  return j.at(key);
}

std::size_t as_index(const json& j, const std::string& where) {
  if (!j.is_number_integer() || j.get<long long>() < 0) throw InputError(where, "expected a non-negative integer");
  return j.get<std::size_t>();
}

Rational as_rational(const json& j, const std::string& where) {
  try {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long>());
  } catch (const ParseError& e) {
    throw InputError(where, e.what());
  }
  throw InputError(where, "expected a rational string \"p/q\"");
}

json parse_json(std::string_view text, const std::string& origin) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(origin, std::string("invalid JSON: ") + e.what());
  }
}

AlgebraDescriptor algebra_from(const json& j, const std::string& where) {
  reject_unknown(j, {"name", "kind", "dim", "n", "basis", "table"}, where);
  AlgebraDescriptor d;
  d.name = j.contains("name") ? j.at("name").get<std::string>() : std::string("algebra");
  const json& kind = require(j, "kind", where);
  if (!kind.is_string()) throw InputError(where + ".kind", "expected a string");
  try {
    d.kind = parse_algebra_kind(kind.get<std::string>());
  } catch (const AlgebraError& e) {
    throw InputError(where + ".kind", e.what());
  }
  if (d.kind == AlgebraKind::gl) {
    if (j.contains("dim") || j.contains("table")) throw InputError(where, "gl algebras take only \"n\"");
    d.gl_n = as_index(require(j, "n", where), where + ".n");
    d.dim = d.gl_n * d.gl_n;
    return d;
  }
  if (j.contains("n")) throw InputError(where + ".n", "only gl algebras take \"n\"");
  d.dim = as_index(require(j, "dim", where), where + ".dim");
  if (j.contains("basis")) {
    const json& b = j.at("basis");
    if (!b.is_array()) throw InputError(where + ".basis", "expected an array of labels");
    for (const auto& s : b) d.basis.push_back(s.get<std::string>());
  }
  if (j.contains("table")) {
    const json& t = j.at("table");
    if (!t.is_array()) throw InputError(where + ".table", "expected an array");
    for (std::size_t r = 0; r < t.size(); ++r) {
      const std::string w = where + ".table[" + std::to_string(r) + "]";
      const json& e = t[r];
      if (!e.is_array() || e.size() != 4) throw InputError(w, "expected [i, j, k, \"p/q\"]");
      d.table.push_back({as_index(e[0], w), as_index(e[1], w), as_index(e[2], w), as_rational(e[3], w)});
    }
  }
  return d;
}

AlgebraPtr build_checked(AlgebraDescriptor d, const std::string& where) {
  try {
    return build_algebra(std::move(d));
  } catch (const AlgebraError& e) {
    std::string msg = e.what();
    if (!e.witness().empty()) {
      msg += " at (";
      for (std::size_t i = 0; i < e.witness().size(); ++i) msg += (i ? ", " : "") + std::to_string(e.witness()[i]);
      msg += ")";
    }
    throw InputError(where, msg);
  }
}

AlgebraPtr resolve_algebra(const json& j, const std::filesystem::path& base, const std::string& where) {
  if (j.is_string()) {
    const std::string ref = j.get<std::string>();
    try {
      return named_algebra(ref);
    } catch (const std::invalid_argument&) {
    }
    const std::filesystem::path p = base / ref;
    if (!std::filesystem::exists(p)) throw InputError(where, "'" + ref + "' is neither a built-in algebra nor a file");
    return load_algebra(p);
  }
  return build_checked(algebra_from(j, where), where);
}

Matrix matrix_from(const json& j, std::size_t rows, std::size_t cols, const std::string& where) {
  reject_unknown(j, {"entries"}, where);
  const json& e = require(j, "entries", where);
  if (!e.is_array() || e.size() != rows)
    throw InputError(where + ".entries", "expected " + std::to_string(rows) + " rows (dim L)");
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const std::string w = where + ".entries[" + std::to_string(r) + "]";
    if (!e[r].is_array() || e[r].size() != cols)
      throw InputError(w, "expected " + std::to_string(cols) + " columns (dim M)");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = as_rational(e[r][c], w + "[" + std::to_string(c) + "]");
  }
  return m;
}

ordered_json matrix_json(const Matrix& m) {
  ordered_json rows = ordered_json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(to_strings(m.row(r)));
  ordered_json o;
  o["entries"] = std::move(rows);
  return o;
}

ordered_json algebra_json(const AlgebraDescriptor& d) {
  ordered_json o;
  o["name"] = d.name;
  o["kind"] = to_string(d.kind);
  if (d.kind == AlgebraKind::gl) {
    o["n"] = d.gl_n;
    return o;
  }
  o["dim"] = d.dim;
  o["basis"] = d.basis;
  ordered_json table = ordered_json::array();
  for (const auto& e : d.table) {
    if (d.kind != AlgebraKind::general && e.i > e.j) continue;
    table.push_back(ordered_json::array({e.i, e.j, e.k, to_string(e.value)}));
  }
  o["table"] = std::move(table);
  return o;
}

// Indented JSON whose innermost arrays (rows, table entries, labels) stay on
// one line.
void write_compact(std::ostream& os, const ordered_json& j, int depth) {
  const auto scalar_array = [](const ordered_json& a) {
    return a.is_array() && std::all_of(a.begin(), a.end(), [](const auto& x) { return x.is_primitive(); });
  };
  const std::string pad(2 * (depth + 1), ' '), close(2 * depth, ' ');
  if (j.is_object() && !j.empty()) {
    os << "{\n";
    std::size_t i = 0;
    for (const auto& [k, v] : j.items()) {
      os << pad << ordered_json(k).dump() << ": ";
      write_compact(os, v, depth + 1);
      os << (++i < j.size() ? ",\n" : "\n");
    }
    os << close << '}';
  } else if (j.is_array() && !j.empty() && !scalar_array(j)) {
    os << "[\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      os << pad;
      write_compact(os, j[i], depth + 1);
      os << (i + 1 < j.size() ? ",\n" : "\n");
    }
    os << close << ']';
  } else {
    std::string flat = j.dump();
    if (j.is_array()) {
      // "[1,2]" -> "[1, 2]"
      std::string spaced;
      bool in_string = false;
      for (char c : flat) {
        if (c == '"') in_string = !in_string;
        spaced += c;
        if (c == ',' && !in_string) spaced += ' ';
      }
      flat = std::move(spaced);
    }
    os << flat;
  }
}

std::string compact(const ordered_json& j) {
  std::ostringstream os;
  write_compact(os, j, 0);
  os << '\n';
  return os.str();
}

std::string where_of(const std::string& origin, const char* key) { return origin + "." + key; }

template <class F>
auto guarded(const std::string& origin, F&& f) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw InputError(origin, e.what());
  }
}

} // namespace

std::string read_text_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw InputError(p.string(), "cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

AlgebraDescriptor parse_algebra_json(std::string_view text, const std::string& origin) {
  return guarded(origin, [&] {   return algebra_from(parse_json(text, origin), origin); });
  }

  std::string algebra_to_json(const AlgebraDescriptor& d) { return compact(algebra_json(d)); }

  AlgebraPtr load_algebra(const std::filesystem::path& p) {
    return build_checked(parse_algebra_json(read_text_file(p), p.string()), p.string());
  }

  MapTriple parse_pair_json(std::string_view text, const std::filesystem::path& base_dir, const std::string& origin) {
    return guarded(origin, [&] {
    const json j = parse_json(text, origin);
    reject_unknown(j, {"M", "L", "S", "T"}, origin);
    AlgebraPtr m = resolve_algebra(require(j, "M", origin), base_dir, where_of(origin, "M"));
    AlgebraPtr l = resolve_algebra(require(j, "L", origin), base_dir, where_of(origin, "L"));
    Matrix s = matrix_from(require(j, "S", origin), l->dim(), m->dim(), where_of(origin, "S"));
    Matrix t = matrix_from(require(j, "T", origin), l->dim(), m->dim(), where_of(origin, "T"));
    try {
      return make_triple(LinearMap(m, l, std::move(s)), LinearMap(m, l, std::move(t)));
    } catch (const PairError& e) {
      throw InputError(origin, e.what());
    }
  });
}

MapTriple load_pair(const std::filesystem::path& p) {
  return parse_pair_json(read_text_file(p), p.parent_path(), p.string());
}

std::string pair_to_json(const MapTriple& t) {
  ordered_json o;
  o["M"] = algebra_json(t.M().descriptor());
  o["L"] = algebra_json(t.L().descriptor());
  o["S"] = matrix_json(t.S.matrix);
  o["T"] = matrix_json(t.T.matrix);
  return compact(o);
}

AnsatzFile parse_ansatz_json(std::string_view text, const std::filesystem::path& base_dir, const std::string& origin) {
  return guarded(origin, [&] {
    const json j = parse_json(text, origin);
    reject_unknown(j, {"M", "L", "basis", "exclude_trivial", "strategy", "starts", "seed", "max_denominator"}, origin);
    AnsatzFile f;
    f.space.M = resolve_algebra(require(j, "M", origin), base_dir, where_of(origin, "M"));
    f.space.L = resolve_algebra(require(j, "L", origin), base_dir, where_of(origin, "L"));
    const json& basis = require(j, "basis", origin);
    if (!basis.is_array() || basis.empty()) throw InputError(where_of(origin, "basis"), "expected a non-empty array");
    for (std::size_t i = 0; i < basis.size(); ++i)
      f.space.basis.emplace_back(f.space.M, f.space.L,
                                 matrix_from(basis[i], f.space.L->dim(), f.space.M->dim(),
                                             where_of(origin, "basis") + "[" + std::to_string(i) + "]"));
    try {
      if (j.contains("exclude_trivial")) f.options.exclude_trivial = j.at("exclude_trivial").get<bool>();
      if (j.contains("strategy")) f.options.strategy = parse_search_strategy(j.at("strategy").get<std::string>());
      if (j.contains("starts")) f.options.starts = j.at("starts").get<unsigned>();
      if (j.contains("seed")) f.options.seed = j.at("seed").get<std::uint64_t>();
      if (j.contains("max_denominator")) f.options.max_denominator = j.at("max_denominator").get<std::int64_t>();
    } catch (const std::exception& e) {
      throw InputError(origin, e.what());
    }
    if (f.options.max_denominator < 1) throw InputError(where_of(origin, "max_denominator"), "must be >= 1");
    try {
      make_triple(f.space.basis.front(), f.space.basis.front());
    } catch (const PairError& e) {
      throw InputError(origin, e.what());
    }
    return f;
  });
}

AnsatzFile load_ansatz(const std::filesystem::path& p) {
  return parse_ansatz_json(read_text_file(p), p.parent_path(), p.string());
}

std::string ansatz_to_json(const AnsatzSpace& space, const SearchOptions& opts) {
  ordered_json o;
  o["M"] = algebra_json(space.M->descriptor());
  o["L"] = algebra_json(space.L->descriptor());
  ordered_json basis = ordered_json::array();
  for (const auto& b : space.basis) basis.push_back(matrix_json(b.matrix));
  o["basis"] = std::move(basis);
  o["exclude_trivial"] = opts.exclude_trivial;
  o["strategy"] = to_string(opts.strategy);
  o["starts"] = opts.starts;
  o["seed"] = opts.seed;
  o["max_denominator"] = opts.max_denominator;
  return compact(o);
}

} // namespace mmpair
