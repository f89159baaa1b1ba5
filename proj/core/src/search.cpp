#include "mmpair/search.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <random>
#include <thread>

namespace mmpair {

std::string to_string(SearchStrategy s) {
  switch (s) {
  case SearchStrategy::automatic: return "auto";
  case SearchStrategy::exact: return "exact";
  case SearchStrategy::numeric: return "numeric";
  }
  return "auto";
}

SearchStrategy parse_search_strategy(const std::string& s) {
  if (s == "auto") return SearchStrategy::automatic;
  if (s == "exact") return SearchStrategy::exact;
  if (s == "numeric") return SearchStrategy::numeric;
  throw std::invalid_argument("unknown search strategy '" + s + "'");
}

Rational rationalize(double value, std::int64_t max_den) {
  if (!std::isfinite(value)) throw std::invalid_argument("cannot rationalize a non-finite value");
  // Continued-fraction convergents with the semiconvergent check at the end.
  const bool neg = value < 0;
  double x = std::fabs(value);
  mpz_class p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  for (int iter = 0; iter < 64; ++iter) {
    const double fl = std::floor(x);
    const mpz_class a = static_cast<long>(fl);
    const mpz_class q2 = q0 + a * q1;
    if (q2 > max_den) {
      const mpz_class k = (max_den - q0) / q1;
      const Rational semi(p0 + k * p1, q0 + k * q1), conv(p1, q1);
      const double target = std::fabs(value);
      const Rational best = std::fabs(semi.get_d() - target) < std::fabs(conv.get_d() - target) ? semi : conv;
      Rational r(best);
      r.canonicalize();
      return neg ? Rational(-r) : r;
    }
    const mpz_class p2 = p0 + a * p1;
    p0 = p1, q0 = q1, p1 = p2, q1 = q2;
    const double frac = x - fl;
    if (frac < 1e-15) break;
    x = 1.0 / frac;
  }
  Rational r(p1, q1);
  r.canonicalize();
  return neg ? Rational(-r) : r;
}

namespace {

MapTriple triple_from(const AnsatzSpace& space, const Vector& a, const Vector& b) {
  LinearMap S = LinearMap::zero(space.M, space.L), T = LinearMap::zero(space.M, space.L);
  for (std::size_t i = 0; i < space.basis.size(); ++i) {
    S.matrix += a[i] * space.basis[i].matrix;
    T.matrix += b[i] * space.basis[i].matrix;
  }
  return make_triple(S, T);
}

bool coefficients_less(const SearchSolution& x, const SearchSolution& y) {
  for (std::size_t i = 0; i < x.a.size(); ++i)
    if (x.a[i] != y.a[i]) return x.a[i] < y.a[i];
  for (std::size_t i = 0; i < x.b.size(); ++i)
    if (x.b[i] != y.b[i]) return x.b[i] < y.b[i];
  return false;
}

bool same_coefficients(const SearchSolution& x, const SearchSolution& y) { return x.a == y.a && x.b == y.b; }

// With one basis map B, the relations on every basis pair and L-coordinate read
//   α(a² + 2ab) − βa = 0,  α(b² + 2ab) + βb = 0
// where α ranges over coordinates of [B e_x, B e_y] and β over those of
// B[e_x, e_y]. Collecting all of them into vectors A and Bv, the solution set
// is {(0,0)} unless Bv = λA with λ ≠ 0, in which case it is λ·{(0,0), (1,0),
// (0,−1), (−1,1)}; A = Bv = 0 makes every (a, b) a solution.
std::vector<std::pair<Rational, Rational>> closed_form_k1(const AnsatzSpace& space, bool& degenerate) {
  const AlgebraPtr& M = space.M;
  const LinearMap& B = space.basis.front();
  Vector alpha, beta;
  for (std::size_t x = 0; x < M->dim(); ++x)
    for (std::size_t y = 0; y < M->dim(); ++y) {
      const Vector c = space.L->bracket(B.image(x), B.image(y));
      const Vector d = B(M->bracket_basis(x, y));
      alpha.insert(alpha.end(), c.begin(), c.end());
      beta.insert(beta.end(), d.begin(), d.end());
    }
  const bool a_zero = is_zero(alpha), b_zero = is_zero(beta);
  degenerate = a_zero && b_zero;
  std::vector<std::pair<Rational, Rational>> out{{0, 0}};
  if (a_zero || b_zero) return out;

  std::size_t pivot = 0;
  while (sgn(alpha[pivot]) == 0) ++pivot;
  const Rational lambda = beta[pivot] / alpha[pivot];
  for (std::size_t i = 0; i < alpha.size(); ++i)
    if (beta[i] != lambda * alpha[i]) return out;
  out.push_back({lambda, 0});
  out.push_back({0, -lambda});
  out.push_back({-lambda, lambda});
  return out;
}

// Residuals r(c) = cᵀ Q c + gᵀ c with c = (a_1..a_k, b_1..b_k).
struct QuadraticSystem {
  std::size_t n = 0;
  std::vector<Eigen::MatrixXd> Q;
  std::vector<Eigen::VectorXd> g;

  Eigen::VectorXd residual(const Eigen::VectorXd& c) const {
    Eigen::VectorXd r(Q.size());
    for (std::size_t i = 0; i < Q.size(); ++i) r[i] = c.dot(Q[i] * c) + g[i].dot(c);
    return r;
  }
  Eigen::MatrixXd jacobian(const Eigen::VectorXd& c) const {
    Eigen::MatrixXd J(Q.size(), n);
    for (std::size_t i = 0; i < Q.size(); ++i) J.row(i) = ((Q[i] + Q[i].transpose()) * c + g[i]).transpose();
    return J;
  }
};

QuadraticSystem build_system(const AnsatzSpace& space) {
  const std::size_t k = space.basis.size();
  const std::size_t dm = space.M->dim(), dl = space.L->dim();
  QuadraticSystem sys;
  sys.n = 2 * k;
  for (std::size_t x = 0; x < dm; ++x)
    for (std::size_t y = 0; y < dm; ++y) {
      std::vector<std::vector<Vector>> C(k, std::vector<Vector>(k));
      std::vector<Vector> D(k);
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j)
          C[i][j] = space.L->bracket(space.basis[i].image(x), space.basis[j].image(y));
        D[i] = space.basis[i](space.M->bracket_basis(x, y));
      }
      for (std::size_t l = 0; l < dl; ++l) {
        // first relation: Σ a_i a_j C + 2 Σ a_i b_j C − Σ a_i D
        // second relation: Σ b_i b_j C + 2 Σ b_i a_j C + Σ b_i D
        for (int rel = 0; rel < 2; ++rel) {
          Eigen::MatrixXd Q = Eigen::MatrixXd::Zero(2 * k, 2 * k);
          Eigen::VectorXd g = Eigen::VectorXd::Zero(2 * k);
          const std::size_t own = rel == 0 ? 0 : k, other = rel == 0 ? k : 0;
          bool nonzero = false;
          for (std::size_t i = 0; i < k; ++i) {
            for (std::size_t j = 0; j < k; ++j) {
              const double c = C[i][j][l].get_d();
              if (c == 0) continue;
              nonzero = true;
              Q(own + i, own + j) += c;
              Q(own + i, other + j) += 2 * c;
            }
            const double d = D[i][l].get_d();
            if (d != 0) {
              nonzero = true;
              g[own + i] += rel == 0 ? -d : d;
            }
          }
          if (nonzero) {
            sys.Q.push_back(std::move(Q));
            sys.g.push_back(std::move(g));
          }
        }
      }
    }
  return sys;
}

std::optional<Eigen::VectorXd> levenberg_marquardt(const QuadraticSystem& sys, Eigen::VectorXd c, int max_iter) {
  double mu = 1e-3;
  Eigen::VectorXd r = sys.residual(c);
  double cost = r.squaredNorm();
  for (int it = 0; it < max_iter; ++it) {
    if (r.lpNorm<Eigen::Infinity>() < 1e-12) return c;
    const Eigen::MatrixXd J = sys.jacobian(c);
    const Eigen::MatrixXd A = J.transpose() * J;
    const Eigen::VectorXd grad = J.transpose() * r;
    bool improved = false;
    for (int tries = 0; tries < 20 && !improved; ++tries) {
      Eigen::MatrixXd damped = A;
      damped.diagonal().array() += mu;
      const Eigen::VectorXd step = damped.colPivHouseholderQr().solve(-grad);
      const Eigen::VectorXd next = c + step;
      const Eigen::VectorXd rn = sys.residual(next);
      const double nc = rn.squaredNorm();
      if (std::isfinite(nc) && nc < cost) {
        c = next;
        r = rn;
        cost = nc;
        mu = std::max(mu / 3, 1e-12);
        improved = true;
      } else {
        mu *= 4;
      }
    }
    if (!improved) break;
  }
  if (r.lpNorm<Eigen::Infinity>() < 1e-9) return c;
  return std::nullopt;
}

void numeric_search(const AnsatzSpace& space, const SearchOptions& opts, std::vector<SearchSolution>& found,
                    SearchDiagnostics& diag) {
  const QuadraticSystem sys = build_system(space);
  const std::size_t k = space.basis.size();
  diag.starts = opts.starts;

  struct Outcome {
    bool converged = false;
    std::optional<SearchSolution> solution;
  };
  std::vector<Outcome> outcomes(opts.starts);

  auto run = [&](unsigned s) {
    std::seed_seq seq{static_cast<std::uint32_t>(opts.seed), static_cast<std::uint32_t>(opts.seed >> 32),
                      static_cast<std::uint32_t>(s)};
    std::mt19937_64 rng(seq);
    std::uniform_real_distribution<double> dist(-2.0, 2.0);
    Eigen::VectorXd c(2 * k);
    for (Eigen::Index i = 0; i < c.size(); ++i) c[i] = dist(rng);
    const auto sol = sys.Q.empty() ? std::optional<Eigen::VectorXd>(c)
                                   : levenberg_marquardt(sys, c, opts.max_iterations);
    if (!sol) return;
    outcomes[s].converged = true;
    Vector a(k), b(k);
    for (std::size_t i = 0; i < k; ++i) {
      a[i] = rationalize((*sol)[i], opts.max_denominator);
      b[i] = rationalize((*sol)[k + i], opts.max_denominator);
    }
    MapTriple t = triple_from(space, a, b);
    if (!check_mm(t).pass) return;
    outcomes[s].solution = SearchSolution{std::move(a), std::move(b), std::move(t), false};
  };

  const unsigned jobs = std::max(1u, std::min(opts.jobs, opts.starts));
  if (jobs == 1) {
    for (unsigned s = 0; s < opts.starts; ++s) run(s);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < jobs; ++w)
      pool.emplace_back([&, w] {
        for (unsigned s = w; s < opts.starts; s += jobs) run(s);
      });
    for (auto& t : pool) t.join();
  }

  for (auto& o : outcomes) {
    if (!o.converged) continue;
    ++diag.converged;
    if (!o.solution) {
      ++diag.rejected;
      continue;
    }
    found.push_back(std::move(*o.solution));
  }
}

} // namespace

SearchResult ansatz_search(const AnsatzSpace& space, const SearchOptions& opts) {
  if (space.basis.empty()) throw std::invalid_argument("ansatz needs at least one basis map");
  for (const auto& b : space.basis)
    if (b.source != space.M || b.target != space.L)
      throw PairError("ansatz basis maps must all act between the ansatz algebras");
  make_triple(space.basis.front(), space.basis.front()); // validates algebra kinds

  SearchResult result;
  const std::size_t k = space.basis.size();
  const bool exact = opts.strategy == SearchStrategy::exact ||
                     (opts.strategy == SearchStrategy::automatic && k == 1);
  if (exact && k != 1) throw std::invalid_argument("the exact strategy handles one basis map only");

  std::vector<SearchSolution> found;
  if (exact) {
    result.diagnostics.used = SearchStrategy::exact;
    for (auto& [a, b] : closed_form_k1(space, result.diagnostics.degenerate)) {
      MapTriple t = triple_from(space, {a}, {b});
      if (!check_mm(t).pass) {
        ++result.diagnostics.rejected;
        continue;
      }
      found.push_back(SearchSolution{{a}, {b}, std::move(t), false});
    }
  } else {
    result.diagnostics.used = SearchStrategy::numeric;
    numeric_search(space, opts, found, result.diagnostics);
  }

  std::sort(found.begin(), found.end(), coefficients_less);
  found.erase(std::unique(found.begin(), found.end(), same_coefficients), found.end());
  for (auto& s : found) {
    const bool trivial = is_zero(s.a) && is_zero(s.b);
    if (trivial && opts.exclude_trivial) continue;
    SweepOptions so;
    so.jobs = opts.jobs;
    s.suite_pass = run_suite(s.triple, so).passed();
    result.solutions.push_back(std::move(s));
  }
  return result;
}

} // namespace mmpair
