// Acceptance criteria AC1-AC8. Prints one PASS/FAIL line per criterion,
// followed by indented detail lines; exits non-zero if any criterion fails.
#include "support.hpp"

#include "mmpair/catalog.hpp"
#include "mmpair/dsl.hpp"
#include "mmpair/io.hpp"
#include "mmpair/search.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <iostream>
#include <set>
#include <sstream>

using namespace mmpair;
using test::Fixture;

namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> details;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      details.push_back("failed: " + what);
    }
  }
  void note(const std::string& what) { details.push_back(what); }
};

// Independent evaluation of both relations at arbitrary elements.
bool mm_direct(const MapTriple& t, const Vector& x, const Vector& y) {
  const Algebra& L = t.L();
  const Vector r1 = L.bracket(t.S(x), t.S(y)) - t.S(t.M().bracket(x, y)) + Rational(2) * L.bracket(t.S(x), t.T(y));
  const Vector r2 = L.bracket(t.T(x), t.T(y)) - t.T(t.M().bracket(y, x)) + Rational(2) * L.bracket(t.T(x), t.S(y));
  return is_zero(r1) && is_zero(r2);
}

bool mm_direct_basis(const MapTriple& t) {
  const Algebra& M = t.M();
  for (std::size_t i = 0; i < M.dim(); ++i)
    for (std::size_t j = 0; j < M.dim(); ++j)
      if (!mm_direct(t, M.element(i), M.element(j))) return false;
  return true;
}

struct Perturbation {
  MapSelector map;
  std::size_t row, col;
  Rational delta;
  std::string text() const {
    return std::string(map == MapSelector::S ? "S" : "T") + ":" + std::to_string(row) + ":" + std::to_string(col) +
           ":" + to_string(delta);
  }
};

// 20 distinct single-entry perturbations spread over entries and deltas, or
// all of them when fewer exist.
std::vector<Perturbation> perturbations(const MapTriple& t, std::uint64_t seed) {
  std::vector<Perturbation> all;
  for (MapSelector m : {MapSelector::S, MapSelector::T})
    for (std::size_t r = 0; r < t.S.matrix.rows(); ++r)
      for (std::size_t c = 0; c < t.S.matrix.cols(); ++c)
        for (const Rational& d : {Rational(1), Rational(-1), Rational(1, 2)}) all.push_back({m, r, c, d});
  test::RationalGen gen(seed);
  std::shuffle(all.begin(), all.end(), gen.engine());
  if (all.size() > 20) all.resize(20);
  return all;
}

Outcome ac1(const std::vector<Fixture>& fixtures) {
  Outcome o;
  for (const auto& f : fixtures) {
    const auto start = std::chrono::steady_clock::now();
    const Verdict v = check_mm(f.triple, {1, 1});
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    o.require(v.pass, "check_mm on " + f.name);
    o.require(mm_direct_basis(f.triple), "direct evaluation on " + f.name);
    if (f.name == "octonions-lr") {
      std::ostringstream os;
      os << "octonions-lr check_mm single-threaded: " << secs << " s";
      o.note(os.str());
      o.require(secs < 60.0, "octonion runtime under 60 s");
    }
  }
  o.note(std::to_string(fixtures.size()) + " fixtures");
  return o;
}

Outcome ac2(const std::vector<Fixture>& fixtures) {
  Outcome o;
  o.require(catalog().size() >= 21, "catalog has at least 21 entries");
  for (const char* id : {"CONJ-MM", "Y-18", "DECOMP-ST", "DECOMP-TP", "DECOMP-PS", "Y-ACT", "TRI-SUM3", "Y-CYC",
                         "CONJ-J-B", "CONJ-J-C", "Y-J"})
    o.require(std::any_of(catalog().begin(), catalog().end(), [&](const CatalogEntry& e) { return e.id == id; }),
              std::string("catalog contains ") + id);
  for (const auto& f : fixtures) {
    const IdentityReport r = run_suite(f.triple);
    o.require(r.passed(), "suite on " + f.name);
    for (const auto& e : r.entries)
      if (e.gating && e.status != Status::pass) o.note(f.name + ": " + e.id + " " + to_string(e.status));
  }
  o.note(std::to_string(catalog().size()) + " catalog entries");
  return o;
}

Outcome ac3(const std::vector<Fixture>& fixtures) {
  Outcome o;
  using G = TrialityElement;
  o.require(G::sigma() * G::sigma() * G::sigma() == G::identity(), "sigma^3 = id");
  o.require(G::tau() * G::tau() == G::identity(), "tau^2 = id");
  o.require(G::tau() * G::sigma() * G::tau() == G::sigma() * G::sigma(), "tau sigma tau = sigma^2");
  std::vector<Fixture> all = fixtures;
  for (const auto& f : fixtures) all.push_back({f.name + "~", perturb(f.triple, MapSelector::T, 0, 0, 1)});
  for (const auto& f : all) {
    const MapTriple& t = f.triple;
    const auto s = [](const MapTriple& x) { return triality_apply(G::sigma(), x); };
    const auto u = [](const MapTriple& x) { return triality_apply(G::tau(), x); };
    o.require(s(t) == MapTriple{t.T, t.P, t.S}, "sigma action on " + f.name);
    o.require(u(t) == MapTriple{-t.T, -t.S, -t.P}, "tau action on " + f.name);
    o.require(s(s(s(t))) == t && u(u(t)) == t && u(s(u(t))) == s(s(t)), "group relations as maps on " + f.name);
    const bool base = check_mm(t).pass;
    for (const auto& g : triality_group())
      o.require(check_mm(triality_apply(g, t)).pass == base, "check_mm(" + g.name() + ".t) on " + f.name);
  }
  return o;
}

Outcome ac4(const std::vector<Fixture>& fixtures) {
  Outcome o;
  for (const auto& f : fixtures) {
    const YamagutianTable y = yamagutian(f.triple);
    for (const auto& g : triality_group())
      o.require(yamagutian(triality_apply(g, f.triple)) == y, "Y invariant under " + g.name() + " on " + f.name);
    test::RationalGen gen(std::hash<std::string>{}(f.name));
    const std::size_t n = f.triple.M().dim();
    const Algebra& L = f.triple.L();
    bool skew = true;
    for (int k = 0; k < 100; ++k) {
      const Vector u = gen.vector(n), v = gen.vector(n);
      const MapTriple& t = f.triple;
      const Vector direct = Rational(1, 6) * (L.bracket(t.S(u), t.S(v)) + L.bracket(t.T(u), t.T(v)) +
                                              L.bracket(t.P(u), t.P(v)));
      skew = skew && y.evaluate(u, v) == direct && y.evaluate(v, u) == -direct;
    }
    o.require(skew, "Y skew on 100 random pairs on " + f.name);
  }
  const auto sl2 = named_algebra("sl2");
  const YamagutianTable y = yamagutian(identity_orbit_pairs(sl2)[0]);
  o.require(y.at(0, 1) == Vector{0, 0, Rational(1, 3)}, "Y(e;f) = h/3 on the sl2 identity pair");
  return o;
}

Outcome ac5(const std::vector<Fixture>& fixtures) {
  Outcome o;
  for (const auto& f : fixtures) {
    std::size_t failing = 0, total = 0;
    std::vector<std::string> survivors;
    for (const auto& p : perturbations(f.triple, std::hash<std::string>{}(f.name))) {
      ++total;
      const MapTriple q = perturb(f.triple, p.map, p.row, p.col, p.delta);
      const OrbitVerdict v = orbit_check(q);
      o.require(v.agree(), "orbit uniformity for " + f.name + " " + p.text());
      if (!v.mm_pass[0]) {
        ++failing;
      } else {
        // confirm the survivor is a genuine pair, not a checker gap
        test::RationalGen gen(total);
        bool genuine = mm_direct_basis(q);
        for (int k = 0; k < 5; ++k)
          genuine = genuine && mm_direct(q, gen.vector(q.M().dim()), gen.vector(q.M().dim()));
        survivors.push_back(p.text() + (genuine ? "" : " (NOT confirmed by direct evaluation)"));
      }
    }
    const bool ok = total == 20 && failing == total;
    o.require(ok, f.name + ": " + std::to_string(failing) + "/" + std::to_string(total) +
                      " perturbations fail check_mm");
    if (!survivors.empty()) {
      std::string s = f.name + ": perturbed maps that still form a pair:";
      for (const auto& x : survivors) s += " " + x;
      o.note(s);
    }
    if (total < 20) o.note(f.name + ": only " + std::to_string(total) + " single-entry perturbations exist");
  }
  return o;
}

Outcome ac6() {
  Outcome o;
  const auto sl2 = named_algebra("sl2");
  const AnsatzSpace space{sl2, sl2, {LinearMap::identity(sl2)}};
  const std::set<std::pair<Rational, Rational>> expected{{0, 0}, {1, 0}, {0, -1}, {-1, 1}};
  for (SearchStrategy s : {SearchStrategy::exact, SearchStrategy::numeric}) {
    SearchOptions opts;
    opts.strategy = s;
    opts.starts = 100;
    opts.seed = 1;
    const SearchResult r = ansatz_search(space, opts);
    std::set<std::pair<Rational, Rational>> got;
    for (const auto& sol : r.solutions) {
      got.insert({sol.a[0], sol.b[0]});
      const MapTriple t = make_triple(sol.a[0] * LinearMap::identity(sl2), sol.b[0] * LinearMap::identity(sl2));
      o.require(check_mm(t).pass && mm_direct_basis(t), "solution verified");
    }
    o.require(got == expected && r.solutions.size() == 4, to_string(s) + " path returns exactly the four solutions");
    if (s == SearchStrategy::numeric)
      o.note("numeric: " + std::to_string(r.diagnostics.converged) + "/" + std::to_string(r.diagnostics.starts) +
             " starts converged, " + std::to_string(r.diagnostics.rejected) + " rejected");
  }
  return o;
}

Outcome ac7(const std::vector<Fixture>& fixtures) {
  Outcome o;
  std::vector<Fixture> all = fixtures;
  for (const auto& f : fixtures) {
    const std::size_t rows = f.triple.S.matrix.rows();
    all.push_back({f.name + "~S", perturb(f.triple, MapSelector::S, rows - 1, 0, 1)});
    all.push_back({f.name + "~T", perturb(f.triple, MapSelector::T, 0, f.triple.M().dim() - 1, Rational(1, 2))});
  }
  std::size_t compared = 0, failing_cases = 0;
  for (const auto& f : all) {
    const TripleContext ctx(f.triple);
    for (const auto& e : catalog()) {
      if (e.dsl.empty()) continue;
      bool dsl_pass = true;
      for (const auto& line : e.dsl) dsl_pass = dsl::eval_identity(dsl::parse_identity(line), ctx).pass && dsl_pass;
      const bool builtin = evaluate_entry(e, ctx, f.triple).pass;
      o.require(dsl_pass == builtin, e.id + " on " + f.name);
      ++compared;
      failing_cases += !builtin;
    }
  }
  o.note(std::to_string(compared) + " comparisons, " + std::to_string(failing_cases) + " of them failing verdicts");
  o.require(failing_cases > 0, "perturbed fixtures exercise failing verdicts");
  return o;
}

Outcome ac8(const std::vector<Fixture>& fixtures) {
  Outcome o;
  bool found = false;
  for (const auto& f : fixtures) {
    const TripleContext ctx(f.triple);
    const Conjugates c = conjugates(f.triple);
    const Algebra& M = f.triple.M();
    bool differ = false;
    for (std::size_t i = 0; i < M.dim() && !differ; ++i)
      for (std::size_t j = 0; j < M.dim() && !differ; ++j)
        for (std::size_t k = 0; k < M.dim() && !differ; ++k) {
          const Vector J = jacobian(M, M.element(i), M.element(j), M.element(k));
          differ = c.Sp(J) != c.Pp(J);
        }
    const IdentityReport r = run_suite(f.triple);
    const auto* p_variant = r.find("CONJ-J-A-Pp");
    const auto* s_variant = r.find("CONJ-J-A-Sp");
    o.require(p_variant && s_variant && p_variant->status != Status::skipped && s_variant->status != Status::skipped,
              "both variants evaluated on " + f.name);
    if (!p_variant || !s_variant) continue;
    o.require(s_variant->status == Status::pass, "S+_J variant holds on " + f.name);
    if (differ) {
      found = true;
      o.note(f.name + ": S+_J != P+_J; P+_J variant " + to_string(p_variant->status) + ", S+_J variant " +
             to_string(s_variant->status));
    }
  }
  o.require(found, "a fixture with S+_J != P+_J");
  const std::filesystem::path readme = std::filesystem::path(MMPAIR_SOURCE_DIR) / "README.md";
  std::string text;
  try {
    text = read_text_file(readme);
  } catch (const InputError&) {
  }
  o.require(text.find("CONJ-J-A-Sp") != std::string::npos && text.find("CONJ-J-A-Pp") != std::string::npos,
            "README documents which variant holds");
  return o;
}

} // namespace

int main() {
  const std::vector<Fixture> fixtures = test::passing_fixtures();
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"AC1 defining relations on all fixtures", [&] { return ac1(fixtures); }},
      {"AC2 full identity suite", [&] { return ac2(fixtures); }},
      {"AC3 triality substitutions and group relations", [&] { return ac3(fixtures); }},
      {"AC4 Yamagutian invariance and skewness", [&] { return ac4(fixtures); }},
      {"AC5 negative suite", [&] { return ac5(fixtures); }},
      {"AC6 ansatz search", [] { return ac6(); }},
      {"AC7 DSL oracle equivalence", [&] { return ac7(fixtures); }},
      {"AC8 right-hand side of the S+ cyclic identity", [&] { return ac8(fixtures); }},
  };
  bool all = true;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.details.push_back(std::string("exception: ") + e.what());
    }
    all = all && o.pass;
    std::cout << (o.pass ? "PASS " : "FAIL ") << name << '\n';
    for (const auto& d : o.details) std::cout << "     " << d << '\n';
  }
  return all ? 0 : 1;
}
