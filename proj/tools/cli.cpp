#include "cli.hpp"

#include "mmpair/constructors.hpp"
#include "mmpair/dsl.hpp"
#include "mmpair/io.hpp"
#include "mmpair/report.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace mmpair::cli {

namespace {

using nlohmann::ordered_json;

struct Common {
  std::string out_path;
  std::string format = "text";
  unsigned jobs = 1;
  long witness_limit = -1; // -1: format default
  std::string perturb;

  SweepOptions sweep(std::size_t json_default = 0, std::size_t text_default = 5) const {
    SweepOptions o;
    o.jobs = std::max(1u, jobs);
    if (witness_limit >= 0)
      o.witness_limit = static_cast<std::size_t>(witness_limit);
    else
      o.witness_limit = format == "json" ? json_default : text_default;
    return o;
  }
  bool json() const { return format == "json"; }
};

void add_common(CLI::App* cmd, Common& c, bool with_perturb = true) {
  cmd->add_option("--out", c.out_path, "Write the report to PATH instead of standard output");
  cmd->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  cmd->add_option("--jobs", c.jobs, "Worker threads for basis sweeps")->check(CLI::PositiveNumber);
  cmd->add_option("--witness-limit", c.witness_limit, "Witnesses per identity (0 = all)")
      ->check(CLI::NonNegativeNumber);
  if (with_perturb)
    cmd->add_option("--perturb", c.perturb, "Shift one entry of S or T before checking, MAP:ROW:COL:RAT");
}

class Emitter {
public:
  Emitter(const Common& c, std::ostream& out) : common_(c), out_(out) {}
  void write(const std::string& text) {
    if (common_.out_path.empty()) {
      out_ << text;
      return;
    }
    std::ofstream f(common_.out_path, std::ios::binary);
    if (!f) throw InputError(common_.out_path, "cannot open output file");
    f << text;
  }

private:
  const Common& common_;
  std::ostream& out_;
};

MapTriple load_with_perturbation(const std::string& path, const std::string& spec) {
  MapTriple t = load_pair(path);
  if (spec.empty()) return t;
  std::vector<std::string> parts;
  std::stringstream ss(spec);
  for (std::string p; std::getline(ss, p, ':');) parts.push_back(p);
  if (parts.size() != 4 || (parts[0] != "S" && parts[0] != "T"))
    throw InputError("--perturb", "expected MAP:ROW:COL:RAT with MAP in {S, T}");
  try {
    const std::size_t row = std::stoul(parts[1]), col = std::stoul(parts[2]);
    return perturb(t, parts[0] == "S" ? MapSelector::S : MapSelector::T, row, col, parse_rational(parts[3]));
  } catch (const ParseError& e) {
    throw InputError("--perturb", e.what());
  } catch (const std::logic_error& e) {
    throw InputError("--perturb", e.what());
  }
}

int cmd_report(const std::string& pair_path, const Common& c, bool full, std::ostream& out) {
  const MapTriple t = load_with_perturbation(pair_path, c.perturb);
  const SweepOptions opts = c.sweep(1, 5);
  // the JSON schema carries the first witness only; text mode may show more
  const IdentityReport r = full ? run_suite(t, opts) : run_mm_report(t, opts);
  Emitter(c, out).write(c.json() ? report_to_json(r) : report_to_text(r, t.M(), t.L(), opts.witness_limit));
  return r.passed() ? kPass : kFail;
}

int cmd_orbit(const std::string& pair_path, const std::string& apply, const Common& c, std::ostream& out) {
  const MapTriple t = load_with_perturbation(pair_path, c.perturb);
  if (!apply.empty()) {
    TrialityElement g;
    try {
      g = TrialityElement::parse(apply);
    } catch (const std::invalid_argument& e) {
      throw InputError("--apply", e.what());
    }
    Emitter(c, out).write(pair_to_json(triality_apply(g, t)));
    return kPass;
  }
  const OrbitVerdict v = orbit_check(t, c.sweep(1, 1));
  std::string text;
  if (c.json()) {
    ordered_json arr = ordered_json::array();
    for (std::size_t g = 0; g < 6; ++g)
      arr.push_back({{"element", v.elements[g].name()}, {"status", v.mm_pass[g] ? "pass" : "fail"}});
    ordered_json o;
    o["orbit"] = std::move(arr);
    o["agree"] = v.agree();
    text = o.dump(2) + "\n";
  } else {
    std::ostringstream os;
    for (std::size_t g = 0; g < 6; ++g)
      os << (v.mm_pass[g] ? "PASS  " : "FAIL  ") << v.elements[g].name() << '\n';
    os << (v.agree() ? "orbit verdicts agree\n" : "orbit verdicts DISAGREE\n");
    text = os.str();
  }
  Emitter(c, out).write(text);
  return v.agree() ? kPass : kFail;
}

int cmd_yamagutian(const std::string& pair_path, const Common& c, std::ostream& out) {
  const MapTriple t = load_with_perturbation(pair_path, c.perturb);
  const YamagutianTable y = yamagutian(t);
  std::string text;
  if (c.json()) {
    ordered_json arr = ordered_json::array();
    for (std::size_t i = 0; i < y.dim(); ++i)
      for (std::size_t j = i + 1; j < y.dim(); ++j)
        arr.push_back({{"i", i}, {"j", j}, {"value", to_strings(y.at(i, j))}});
    text = arr.dump(2) + "\n";
  } else {
    std::ostringstream os;
    for (std::size_t i = 0; i < y.dim(); ++i)
      for (std::size_t j = i + 1; j < y.dim(); ++j)
        os << "Y(" << t.M().basis_label(i) << "; " << t.M().basis_label(j)
           << ") = " << format_element(y.at(i, j), t.L()) << '\n';
    text = os.str();
  }
  Emitter(c, out).write(text);
  return kPass;
}

int cmd_eval(const std::string& pair_path, const std::vector<std::string>& exprs, const std::string& file,
             const Common& c, std::ostream& out, std::ostream& err) {
  std::vector<dsl::Identity> ids;
  const auto parse_one = [&](const std::string& text, const std::string& origin) {
    try {
      ids.push_back(dsl::parse_identity(text));
    } catch (const dsl::DslError& e) {
      err << origin << ": " << e.what() << '\n' << "  " << text << '\n'
          << "  " << std::string(e.column() > 0 ? e.column() - 1 : 0, ' ') << "^\n";
      throw;
    }
  };
  for (const auto& e : exprs) parse_one(e, "--expr");
  if (!file.empty()) {
    std::istringstream in(read_text_file(file));
    std::size_t lineno = 0;
    for (std::string line; std::getline(in, line);) {
      ++lineno;
      if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
      if (std::all_of(line.begin(), line.end(), [](unsigned char ch) { return std::isspace(ch); })) continue;
      parse_one(line, file + ":" + std::to_string(lineno));
    }
  }
  if (ids.empty()) throw InputError("eval", "no identity given (use --expr or --file)");

  const MapTriple t = load_with_perturbation(pair_path, c.perturb);
  const TripleContext ctx(t);
  const SweepOptions opts = c.sweep(0, 5);
  bool all = true;
  ordered_json arr = ordered_json::array();
  std::ostringstream os;
  for (const auto& id : ids) {
    const Verdict v = dsl::eval_identity(id, ctx, opts);
    all = all && v.pass;
    if (c.json()) {
      ordered_json ws = ordered_json::array();
      for (const auto& w : v.failures) ws.push_back({{"witness", w.tuple}, {"residual", to_strings(w.residual)}});
      arr.push_back({{"identity", id.text}, {"status", v.pass ? "pass" : "fail"}, {"witnesses", std::move(ws)}});
    } else {
      os << (v.pass ? "PASS  " : "FAIL  ") << id.text << '\n';
      for (const auto& w : v.failures) {
        os << "      at";
        for (std::size_t i = 0; i < w.tuple.size(); ++i)
          os << ' ' << dsl::variable_name(id.free_variables[i]) << '=' << t.M().basis_label(w.tuple[i]);
        os << " (" << w.relation << "): residual " << format_element(w.residual, t.L()) << '\n';
      }
    }
  }
  Emitter(c, out).write(c.json() ? arr.dump(2) + "\n" : os.str());
  return all ? kPass : kFail;
}

int cmd_search(const std::string& path, const Common& c, std::optional<std::uint64_t> seed,
               std::optional<unsigned> starts, const std::string& strategy, std::ostream& out) {
  AnsatzFile f = load_ansatz(path);
  if (seed) f.options.seed = *seed;
  if (starts) f.options.starts = *starts;
  if (!strategy.empty()) f.options.strategy = parse_search_strategy(strategy);
  f.options.jobs = std::max(1u, c.jobs);
  const SearchResult r = ansatz_search(f.space, f.options);

  std::string text;
  const auto& d = r.diagnostics;
  if (c.json()) {
    ordered_json sols = ordered_json::array();
    for (const auto& s : r.solutions)
      sols.push_back({{"a", to_strings(s.a)}, {"b", to_strings(s.b)}, {"check_mm", "pass"},
                      {"suite", s.suite_pass ? "pass" : "fail"}});
    ordered_json o;
    o["solutions"] = std::move(sols);
    o["diagnostics"] = {{"strategy", to_string(d.used)}, {"starts", d.starts},     {"converged", d.converged},
                        {"rejected", d.rejected},        {"degenerate", d.degenerate}};
    text = o.dump(2) + "\n";
  } else {
    std::ostringstream os;
    os << "strategy " << to_string(d.used);
    if (d.used == SearchStrategy::numeric)
      os << ": " << d.starts << " starts, " << d.converged << " converged, " << d.rejected << " rejected";
    os << '\n';
    if (d.degenerate) os << "every coefficient vector solves the relations on this ansatz\n";
    for (const auto& s : r.solutions) {
      os << "a = (";
      for (std::size_t i = 0; i < s.a.size(); ++i) os << (i ? ", " : "") << to_string(s.a[i]);
      os << "), b = (";
      for (std::size_t i = 0; i < s.b.size(); ++i) os << (i ? ", " : "") << to_string(s.b[i]);
      os << ")  check_mm PASS  suite " << (s.suite_pass ? "PASS" : "FAIL") << '\n';
    }
    os << r.solutions.size() << " solution(s)\n";
    text = os.str();
  }
  Emitter(c, out).write(text);
  return r.solutions.empty() ? kFail : kPass;
}

void write_file(const std::filesystem::path& dir, const std::string& name, const std::string& text,
                std::vector<std::string>& written) {
  std::ofstream f(dir / name, std::ios::binary);
  if (!f) throw InputError((dir / name).string(), "cannot write file");
  f << text;
  written.push_back(name);
}

} // namespace

std::vector<std::string> write_examples(const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  std::vector<std::string> written;

  for (const auto& name : named_algebras())
    write_file(dir, name + ".json", algebra_to_json(named_algebra(name)->descriptor()), written);

  const auto sl2 = named_algebra("sl2");
  const auto sl2_orbit = identity_orbit_pairs(sl2);
  write_file(dir, "sl2-identity-pair.json", pair_to_json(sl2_orbit[0]), written);
  write_file(dir, "sl2-identity-pair-s.json", pair_to_json(sl2_orbit[1]), written);
  write_file(dir, "sl2-identity-pair-s2.json", pair_to_json(sl2_orbit[2]), written);
  write_file(dir, "so3-identity-pair.json", pair_to_json(identity_orbit_pairs(named_algebra("so3"))[0]), written);
  write_file(dir, "solvable2-identity-pair.json",
             pair_to_json(identity_orbit_pairs(named_algebra("solvable2"))[0]), written);
  write_file(dir, "sl2-zero-pair.json", pair_to_json(zero_pair(sl2, sl2)), written);
  write_file(dir, "so3-sl2-zero-pair.json", pair_to_json(zero_pair(named_algebra("so3"), sl2)), written);
  write_file(dir, "sl2-gl2-zero-pair.json", pair_to_json(zero_pair(sl2, named_algebra("gl2"))), written);
  const LinearMap id = LinearMap::identity(sl2);
  write_file(dir, "sl2-double-identity-pair.json", pair_to_json(make_triple(id, id)), written);
  for (const char* a : {"rationals", "m2", "ut2", "octonions", "nonalt3"})
    write_file(dir, std::string(a) + "-lr-pair.json", pair_to_json(lr_pair(named_algebra(a))), written);

  AnsatzSpace scalar{sl2, sl2, {id}};
  write_file(dir, "sl2-scalar-ansatz.json", ansatz_to_json(scalar, {}), written);
  SearchOptions numeric;
  numeric.strategy = SearchStrategy::numeric;
  write_file(dir, "sl2-scalar-ansatz-numeric.json", ansatz_to_json(scalar, numeric), written);
  // projection onto h: brackets of images vanish while B[e,f] = h does not,
  // so only the excluded zero solution remains
  Matrix proj(3, 3);
  proj(2, 2) = 1;
  SearchOptions exclude;
  exclude.exclude_trivial = true;
  write_file(dir, "sl2-empty-ansatz.json", ansatz_to_json(AnsatzSpace{sl2, sl2, {LinearMap(sl2, sl2, proj)}}, exclude),
             written);

  std::ostringstream dsl;
  dsl << "# Built-in identity catalog in DSL form; variables range over basis tuples of M.\n";
  for (const auto& e : catalog()) {
    if (e.dsl.empty()) continue;
    dsl << "# " << e.id << (e.gating ? "" : " (informational)") << '\n';
    for (const auto& line : e.dsl) dsl << line << '\n';
  }
  write_file(dir, "catalog.dsl", dsl.str(), written);
  return written;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification of Moufang-Mal'tsev pairs, triality and the Yamagutian", "mmpair"};
  app.require_subcommand(1);

  Common common;
  std::string pair_path, apply, file, strategy, dir;
  std::vector<std::string> exprs;
  std::optional<std::uint64_t> seed;
  std::optional<unsigned> starts;

  auto* check = app.add_subcommand("check", "Check the pair relations on all basis pairs");
  check->add_option("pair", pair_path, "Pair file")->required();
  add_common(check, common);

  auto* suite = app.add_subcommand("suite", "Run the full identity catalog");
  suite->add_option("pair", pair_path, "Pair file")->required();
  add_common(suite, common);

  auto* orbit = app.add_subcommand("orbit", "Check the pair relations across the triality orbit");
  orbit->add_option("pair", pair_path, "Pair file")->required();
  orbit->add_option("--apply", apply, "Emit g.(S,T,P) as a pair file for a word g over {s, t}");
  add_common(orbit, common);

  auto* yam = app.add_subcommand("yamagutian", "Print the Yamagutian table Y(e_i; e_j), i < j");
  yam->add_option("pair", pair_path, "Pair file")->required();
  add_common(yam, common);

  auto* eval = app.add_subcommand("eval", "Evaluate DSL identities on all basis tuples");
  eval->add_option("pair", pair_path, "Pair file")->required();
  eval->add_option("--expr", exprs, "Identity text (repeatable)")->allow_extra_args(false);
  eval->add_option("--file", file, "File with one identity per line, '#' comments");
  add_common(eval, common);

  auto* search = app.add_subcommand("search", "Solve the pair relations over an ansatz space");
  search->add_option("space", pair_path, "Ansatz file")->required();
  search->add_option("--seed", seed, "Seed for the numeric starts");
  search->add_option("--starts", starts, "Number of numeric starts");
  search->add_option("--strategy", strategy, "auto, exact or numeric")
      ->check(CLI::IsMember({"auto", "exact", "numeric"}));
  add_common(search, common, false);

  auto* examples = app.add_subcommand("examples", "Write the shipped fixture files into a directory");
  examples->add_option("dir", dir, "Target directory")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "mmpair: " << e.what() << '\n';
    return kInputError;
  }

  try {
    if (*check) return cmd_report(pair_path, common, false, out);
    if (*suite) return cmd_report(pair_path, common, true, out);
    if (*orbit) return cmd_orbit(pair_path, apply, common, out);
    if (*yam) return cmd_yamagutian(pair_path, common, out);
    if (*eval) return cmd_eval(pair_path, exprs, file, common, out, err);
    if (*search) return cmd_search(pair_path, common, seed, starts, strategy, out);
    if (*examples) {
      for (const auto& f : write_examples(dir)) out << (std::filesystem::path(dir) / f).string() << '\n';
      return kPass;
    }
  } catch (const dsl::DslError&) {
    return kInputError;
  } catch (const InputError& e) {
    err << "mmpair: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    err << "mmpair: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

} // namespace mmpair::cli
