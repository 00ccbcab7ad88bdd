#include "gcsh/solver.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>
#include <Eigen/LU>
#include <algorithm>
#include <cmath>
#include <limits>

#include "gcsh/rng.hpp"

namespace gcsh {

namespace {

double sup_norm(const VertexFunction& v) { return v.lpNorm<Eigen::Infinity>(); }

bool lex_less(const VertexFunction& a, const VertexFunction& b) {
  for (int i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

// Nonlinearity of the constant reduction in long double; never throws, so
// root isolation can scan freely.
long double scalar_g(double lambda, int p, double sigma, double f_const,
                     double v) {
  const long double s = expl(static_cast<long double>(v));
  long double t = s - static_cast<long double>(sigma);
  long double pw = 1.0L;
  for (int i = 0; i < 2 * p + 1; ++i) pw *= t;
  return static_cast<long double>(lambda) * s * pw + static_cast<long double>(f_const);
}

long double scalar_g_deriv(double lambda, int p, double sigma, double v) {
  const long double s = expl(static_cast<long double>(v));
  const long double t = s - static_cast<long double>(sigma);
  long double pw = 1.0L;
  for (int i = 0; i < 2 * p; ++i) pw *= t;
  return static_cast<long double>(lambda) * s * pw * (t + (2 * p + 1) * s);
}

int sgn(long double x) { return (x > 0) - (x < 0); }

double bisect(const std::function<long double(double)>& fn, double a, double b) {
  long double fa = fn(a);
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (a + b);
    if (mid == a || mid == b) break;
    const long double fm = fn(mid);
    if (sgn(fm) == sgn(fa) && fm != 0.0L) {
      a = mid;
      fa = fm;
    } else {
      b = mid;
    }
    if (b - a < 1e-15 * (1.0 + std::abs(a) + std::abs(b))) break;
  }
  return 0.5 * (a + b);
}

}  // namespace

const char* newton_status_name(NewtonStatus status) {
  switch (status) {
    case NewtonStatus::Converged: return "Converged";
    case NewtonStatus::MaxIter: return "MaxIter";
    case NewtonStatus::SingularJacobian: return "SingularJacobian";
    case NewtonStatus::StepUnderflow: return "StepUnderflow";
  }
  return "Unknown";
}

VertexFunction solve_poisson_meanzero(const Graph& g, const VertexFunction& rhs) {
  check_aligned(g, rhs, "solve_poisson_meanzero");
  const int m = g.size();
  const VertexFunction centered = rhs.array() - mean(g, rhs);

  // L v = -mu .* centered. Adding the rank-one term mu mu^T / |V| makes the
  // system positive definite and pins the mu-mean of v to zero.
  Eigen::MatrixXd K = g.quadratic_form_matrix() +
                      g.measure() * g.measure().transpose() / g.total_measure();
  Eigen::LDLT<Eigen::MatrixXd> ldlt(K);
  if (ldlt.info() != Eigen::Success) {
    fail(Errc::SingularSystem, "mean-zero Poisson system factorization failed");
  }
  VertexFunction v = ldlt.solve((-g.measure().array() * centered.array()).matrix());
  v.array() -= mean(g, v);

  const double defect = sup_norm(laplacian_apply(g, v) - centered);
  if (!(defect <= 1e-10 * (1.0 + sup_norm(rhs)))) {
    fail(Errc::SingularSystem,
         "mean-zero Poisson solve defect " + std::to_string(defect));
  }
  if (m == 1) v.setZero();
  return v;
}

NewtonResult newton_solve(const Graph& g, const ModelParams& params,
                          const VertexFunction& u0, const NewtonConfig& cfg) {
  check_aligned(g, u0, "newton_solve");
  NewtonResult res;
  res.u = u0;
  try {
    res.residual_norm = sup_norm(residual_F(g, params, res.u));
  } catch (const Error& e) {
    if (e.code() != Errc::Overflow) throw;
    res.status = NewtonStatus::StepUnderflow;  // unusable start
    res.residual_norm = std::numeric_limits<double>::infinity();
    return res;
  }
  res.residual_history.push_back(res.residual_norm);

  for (int it = 0; it < cfg.max_iter; ++it) {
    if (res.residual_norm <= cfg.tol_residual) {
      res.status = NewtonStatus::Converged;
      res.iterations = it;
      return res;
    }
    const VertexFunction r = residual_F(g, params, res.u);
    VertexFunction delta;
    try {
      Eigen::FullPivLU<Eigen::MatrixXd> lu(jacobian_F(g, params, res.u));
      if (!lu.isInvertible()) {
        res.status = NewtonStatus::SingularJacobian;
        res.iterations = it;
        return res;
      }
      delta = lu.solve(-r);
    } catch (const Error& e) {
      if (e.code() != Errc::Overflow) throw;
      res.status = NewtonStatus::SingularJacobian;
      res.iterations = it;
      return res;
    }

    double step = 1.0;
    bool accepted = false;
    while (step >= cfg.min_step) {
      try {
        const VertexFunction trial = res.u + step * delta;
        const double trial_norm = sup_norm(residual_F(g, params, trial));
        if (trial_norm < res.residual_norm) {
          res.u = trial;
          res.residual_norm = trial_norm;
          res.residual_history.push_back(trial_norm);
          accepted = true;
          break;
        }
      } catch (const Error& e) {
        if (e.code() != Errc::Overflow) throw;  // overshoot; shrink and retry
      }
      step *= cfg.damping;
    }
    if (!accepted) {
      res.status = NewtonStatus::StepUnderflow;
      res.iterations = it;
      return res;
    }
  }
  if (res.residual_norm <= cfg.tol_residual) {
    res.status = NewtonStatus::Converged;
  } else {
    res.status = NewtonStatus::MaxIter;
  }
  res.iterations = cfg.max_iter;
  return res;
}

ScalarCandidates scalar_constant_candidates(double lambda, int p, double sigma,
                                            double f_const, double lo, double hi) {
  ScalarCandidates out;
  if (!(hi > lo)) return out;
  const auto fn = [&](double v) { return scalar_g(lambda, p, sigma, f_const, v); };
  const auto dfn = [&](double v) { return scalar_g_deriv(lambda, p, sigma, v); };

  // Breakpoints = interval ends plus the zeros of g', so g is monotone on
  // every piece. g' has few sign changes; a moderate grid resolves them.
  const int n_grid = 4096;
  std::vector<double> breakpoints = {lo};
  double prev_v = lo;
  long double prev_d = dfn(lo);
  for (int i = 1; i <= n_grid; ++i) {
    const double v = lo + (hi - lo) * i / n_grid;
    const long double d = dfn(v);
    if (sgn(d) != sgn(prev_d) && sgn(prev_d) != 0) {
      const double ext = bisect(dfn, prev_v, v);
      breakpoints.push_back(ext);
      out.extrema.push_back(ext);
    }
    prev_v = v;
    prev_d = d;
  }
  breakpoints.push_back(hi);

  for (std::size_t k = 0; k + 1 < breakpoints.size(); ++k) {
    const double a = breakpoints[k];
    const double b = breakpoints[k + 1];
    const long double fa = fn(a);
    const long double fb = fn(b);
    if (fa == 0.0L) out.roots.push_back(a);
    if (sgn(fa) * sgn(fb) < 0) out.roots.push_back(bisect(fn, a, b));
  }
  if (fn(hi) == 0.0L) out.roots.push_back(hi);

  std::sort(out.roots.begin(), out.roots.end());
  out.roots.erase(std::unique(out.roots.begin(), out.roots.end(),
                              [](double a, double b) { return std::abs(a - b) < 1e-12; }),
                  out.roots.end());
  return out;
}

namespace {

struct Accepted {
  VertexFunction u;
  double residual_norm;
};

void try_seed(const Graph& g, const ModelParams& params, const NewtonConfig& cfg,
              const VertexFunction& seed, std::vector<Accepted>& found) {
  NewtonResult res = newton_solve(g, params, seed, cfg);
  if (!res.ok()) return;
  // polish to the rounding floor so that stops scattered across the flat
  // residual basin of a near-singular root collapse to one point
  for (int it = 0; it < 30; ++it) {
    try {
      Eigen::FullPivLU<Eigen::MatrixXd> lu(jacobian_F(g, params, res.u));
      if (!lu.isInvertible()) break;
      const VertexFunction trial =
          res.u + lu.solve(-residual_F(g, params, res.u));
      const double norm = residual_F(g, params, trial).lpNorm<Eigen::Infinity>();
      if (norm >= res.residual_norm) break;
      res.u = trial;
      res.residual_norm = norm;
    } catch (const Error& e) {
      if (e.code() != Errc::Overflow) throw;
      break;
    }
  }
  found.push_back({res.u, res.residual_norm});
}

}  // namespace

SolutionSet multi_start_solve(const Graph& g, const ModelParams& params,
                              const AprioriCertificate& box, int n_starts,
                              const NewtonConfig& cfg, double dedup_tol,
                              std::uint64_t seed) {
  check_aligned(g, params.f, "multi_start_solve");
  const int m = g.size();
  SolutionSet set;
  set.dedup_tol = dedup_tol;

  // The certificate box can be extremely deep (its lower end scales like
  // -c3); solutions live where the nonlinearity is alive, so a clipped band
  // gets its own share of seeds on top of the full-box coverage.
  const double band_lo = std::max(box.lower, -box.alpha - std::min(box.c3, 30.0));
  const double band_hi = box.upper;

  std::vector<Accepted> found;

  const int n_box = (n_starts + 1) / 2;
  ScrambledLowDiscrepancy lds_box(m, mix64(seed ^ 0x1));
  for (int i = 0; i < n_box; ++i) {
    const auto x = lds_box.point(i);
    VertexFunction u0(m);
    for (int j = 0; j < m; ++j) u0[j] = box.lower + (box.upper - box.lower) * x[j];
    try_seed(g, params, cfg, u0, found);
  }

  const int n_band = n_starts - n_box;
  ScrambledLowDiscrepancy lds_band(m, mix64(seed ^ 0x2));
  for (int i = 0; i < n_band; ++i) {
    const auto x = lds_band.point(i);
    VertexFunction u0(m);
    for (int j = 0; j < m; ++j) u0[j] = band_lo + (band_hi - band_lo) * x[j];
    try_seed(g, params, cfg, u0, found);
  }

  // Constant seeds: a coarse ladder always, and the scalar-reduction roots
  // whenever the source is constant (those give the analytic family).
  const int n_ladder = 17;
  for (int i = 0; i < n_ladder; ++i) {
    const double c = band_lo + (band_hi - band_lo) * i / (n_ladder - 1.0);
    try_seed(g, params, cfg, VertexFunction::Constant(m, c), found);
  }
  const auto mean_cands = scalar_constant_candidates(params.lambda, params.p,
                                                     params.sigma, mean(g, params.f),
                                                     band_lo - 1.0, band_hi + 1.0);
  const double f_spread = params.f.maxCoeff() - params.f.minCoeff();
  if (f_spread <= 1e-13 * (1.0 + params.f.cwiseAbs().maxCoeff())) {
    for (double r : mean_cands.roots) {
      try_seed(g, params, cfg, VertexFunction::Constant(m, r), found);
    }
    for (double e : mean_cands.extrema) {
      try_seed(g, params, cfg, VertexFunction::Constant(m, e), found);
    }
  }

  // Spike seeds: solution families pin some vertices near a root of the
  // mean scalar reduction while the rest sit on a shifted level, from small
  // offsets (near-bifurcation members) down to deep plunges. Cover every
  // subset on small graphs.
  if (m >= 2) {
    std::vector<double> base_levels(mean_cands.roots.rbegin(),
                                    mean_cands.roots.rend());
    if (base_levels.size() > 2) base_levels.resize(2);
    if (base_levels.empty() && !mean_cands.extrema.empty()) {
      base_levels.push_back(mean_cands.extrema.back());
    }
    std::vector<std::vector<int>> subsets;
    if (m <= 6) {
      for (std::uint32_t mask = 1; mask + 1 < (1u << m); ++mask) {
        std::vector<int> s;
        for (int i = 0; i < m; ++i) {
          if (mask & (1u << i)) s.push_back(i);
        }
        subsets.push_back(std::move(s));
      }
    } else {
      for (int i = 0; i < m; ++i) {
        subsets.push_back({i});
        for (int j = i + 1; j < m; ++j) subsets.push_back({i, j});
      }
    }
    std::vector<std::pair<double, double>> level_pairs;
    for (double base : base_levels) {
      for (double off : {0.35, 0.75, 1.5, 3.0}) {
        level_pairs.emplace_back(base, base - off);
      }
      for (double off : {0.35, 0.75, 1.5}) {
        level_pairs.emplace_back(base, base + off);
      }
      for (double frac : {0.2, 0.45, 0.8}) {
        level_pairs.emplace_back(base, base + frac * (band_lo - base));
      }
    }
    if (base_levels.size() == 2) {
      level_pairs.emplace_back(base_levels[0], base_levels[1]);
      level_pairs.emplace_back(base_levels[1], base_levels[0]);
    }
    for (auto [base, alt] : level_pairs) {
      const double alt_c = std::clamp(alt, box.lower, box.upper);
      for (const auto& subset : subsets) {
        VertexFunction u0 = VertexFunction::Constant(m, base);
        for (int i : subset) u0[i] = alt_c;
        try_seed(g, params, cfg, u0, found);
      }
    }
  }

  auto dedup = [&](std::vector<Accepted>& items) {
    std::sort(items.begin(), items.end(),
              [](const Accepted& a, const Accepted& b) { return lex_less(a.u, b.u); });
    std::vector<Accepted> kept;
    for (const Accepted& cand : items) {
      bool merged = false;
      for (Accepted& k : kept) {
        if (sup_norm(cand.u - k.u) <= dedup_tol) {
          if (cand.residual_norm < k.residual_norm) k = cand;
          merged = true;
          break;
        }
      }
      if (!merged) kept.push_back(cand);
    }
    items = kept;
  };
  dedup(found);

  // Refinement wave: walk out of each find along the softest eigendirection
  // of the linearization; near-fold partners hide there.
  const Eigen::VectorXd mu_isqrt = g.measure().cwiseSqrt().cwiseInverse();
  const std::size_t first_wave = std::min<std::size_t>(found.size(), 16);
  std::vector<Accepted> second = found;
  for (std::size_t k = 0; k < first_wave; ++k) {
    Eigen::MatrixXd sym = mu_isqrt.asDiagonal() * g.quadratic_form_matrix() *
                          mu_isqrt.asDiagonal();
    try {
      sym.diagonal() += hprime_diagonal(params, found[k].u);
    } catch (const Error& e) {
      if (e.code() != Errc::Overflow) throw;
      continue;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(sym);
    if (es.info() != Eigen::Success) continue;
    std::vector<int> order(m);
    for (int i = 0; i < m; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      return std::abs(es.eigenvalues()[a]) < std::abs(es.eigenvalues()[b]);
    });
    for (int d = 0; d < std::min(m, 2); ++d) {
      VertexFunction dir = mu_isqrt.asDiagonal() * es.eigenvectors().col(order[d]);
      const double scale = sup_norm(dir);
      if (scale <= 0) continue;
      dir /= scale;
      for (double c : {0.05, 0.25, 1.0}) {
        try_seed(g, params, cfg, found[k].u + c * dir, second);
        try_seed(g, params, cfg, found[k].u - c * dir, second);
      }
    }
  }
  dedup(second);

  for (const Accepted& a : second) {
    if (a.residual_norm > cfg.tol_residual) continue;
    set.solutions.push_back(a.u);
    set.residual_norms.push_back(a.residual_norm);
    set.jacobian_signs.push_back(jacobian_sign_unchecked(g, params, a.u));
  }
  return set;
}

BoxMinResult minimize_box(const Graph& g, const ModelParams& params,
                          const BarrierSpec& spec, const NewtonConfig& cfg) {
  check_aligned(g, spec.lower, "minimize_box");
  check_aligned(g, spec.upper, "minimize_box");
  if (params.sigma != 1.0) {
    fail(Errc::SigmaNotOne, "minimize_box minimizes the sigma = 1 functional");
  }
  if (!((spec.upper - spec.lower).minCoeff() > 0)) {
    fail(Errc::DimensionMismatch, "box lower face must lie strictly below upper face");
  }

  const auto clamp_box = [&](VertexFunction u) {
    return u.cwiseMax(spec.lower).cwiseMin(spec.upper);
  };
  const double face_margin = 1e-6;

  VertexFunction u = 0.5 * (spec.lower + spec.upper);
  double value = functional_J(g, params, u);
  double step = 1.0;
  int interior_streak = 0;
  const int max_iter = 20000;

  for (int it = 0; it < max_iter; ++it) {
    const VertexFunction grad =
        (g.measure().array() * residual_F(g, params, u).array()).matrix();

    // stationarity of the projected problem
    const double pg_norm = sup_norm(clamp_box(u - grad) - u);
    const bool active_low = ((u.array() - spec.lower.array()) < 1e-12).any();
    const bool active_high = ((spec.upper.array() - u.array()) < 1e-12).any();
    if (pg_norm <= 1e-12 * (1.0 + std::abs(value))) {
      if (active_low || active_high) {
        fail(Errc::OnBoundary,
             "box minimizer is pinned to a face; the barrier does not certify a "
             "local minimum for these parameters");
      }
      break;  // interior stationary point; Newton will polish
    }

    // Armijo backtracking along the projected gradient path
    bool moved = false;
    while (step >= 1e-18) {
      const VertexFunction trial = clamp_box(u - step * grad);
      const double trial_value = functional_J(g, params, trial);
      const double decrease = grad.dot(trial - u);
      if (trial_value <= value + 1e-4 * decrease && trial_value < value) {
        u = trial;
        value = trial_value;
        moved = true;
        break;
      }
      step *= 0.5;
    }
    if (!moved) {
      if (active_low || active_high) {
        fail(Errc::OnBoundary,
             "box minimizer is pinned to a face; the barrier does not certify a "
             "local minimum for these parameters");
      }
      break;
    }
    step = std::min(step * 2.0, 1e6);

    const bool interior = ((u.array() - spec.lower.array()) > 1e-12).all() &&
                          ((spec.upper.array() - u.array()) > 1e-12).all();
    interior_streak = interior ? interior_streak + 1 : 0;
    if (interior_streak >= 3) {
      const NewtonResult polish = newton_solve(g, params, u, cfg);
      if (polish.ok() &&
          (polish.u.array() > spec.lower.array()).all() &&
          (polish.u.array() < spec.upper.array()).all()) {
        BoxMinResult out;
        out.u = polish.u;
        out.residual_norm = polish.residual_norm;
        out.iterations = it + 1;
        out.strict_interior =
            ((polish.u - spec.lower).minCoeff() > face_margin) &&
            ((spec.upper - polish.u).minCoeff() > face_margin);
        return out;
      }
      interior_streak = 0;  // fall back to projected gradient
    }
  }

  // Stationary by projection with no active face; insist on a genuine zero
  // of the gradient.
  const NewtonResult polish = newton_solve(g, params, u, cfg);
  if (polish.ok() && (polish.u.array() > spec.lower.array()).all() &&
      (polish.u.array() < spec.upper.array()).all()) {
    BoxMinResult out;
    out.u = polish.u;
    out.residual_norm = polish.residual_norm;
    out.strict_interior = ((polish.u - spec.lower).minCoeff() > face_margin) &&
                          ((spec.upper - polish.u).minCoeff() > face_margin);
    return out;
  }
  fail(Errc::NonConvergence, "box minimization did not reach an interior critical point");
}

BarrierSpec barrier_from_lemma(const Graph& g, const ModelParams& params,
                               const std::optional<WarmStart>& warm) {
  check_aligned(g, params.f, "barrier_from_lemma");
  if (params.sigma != 1.0) {
    fail(Errc::SigmaNotOne, "barriers apply to the sigma = 1 equation");
  }
  const double fbar = mean(g, params.f);
  if (!(params.lambda * fbar > 0)) {
    fail(Errc::BarrierUnavailable,
         "barrier construction needs lambda * mean(f) > 0");
  }
  const double ln_half = std::log(0.5);
  const int m = g.size();

  const auto validate = [&](const VertexFunction& face, bool want_negative,
                            const char* which) {
    const VertexFunction r = residual_F(g, params, face);
    const bool ok = want_negative ? (r.maxCoeff() < 0) : (r.minCoeff() > 0);
    if (!ok) {
      fail(Errc::BarrierUnavailable,
           std::string(which) +
               " face fails its sign condition; enlarge |lambda| (pointwise value " +
               std::to_string(want_negative ? r.maxCoeff() : r.minCoeff()) + ")");
    }
  };

  BarrierSpec spec;
  if (params.lambda > 0) {
    if (warm) {
      if (!(warm->lambda_prev > 0) || !(params.lambda > warm->lambda_prev)) {
        fail(Errc::BarrierUnavailable,
             "warm start needs 0 < lambda_prev < lambda");
      }
      check_aligned(g, warm->u_prev, "barrier_from_lemma warm start");
      spec.lower =
          warm->u_prev.array() + std::log(warm->lambda_prev / params.lambda);
    } else {
      // cold lower face ln(1/2): requires lambda > 2^(2p+2) max f
      spec.lower = VertexFunction::Constant(m, ln_half);
    }
    validate(spec.lower, /*want_negative=*/true, "lower");

    double A = std::max(1.0, std::ceil((spec.lower.maxCoeff() + 0.5) * 2.0) / 2.0);
    for (; A <= 80.0; A += 0.5) {
      if (barrier_check(g, params, A).minCoeff() > 0) break;
    }
    if (A > 80.0) {
      fail(Errc::BarrierUnavailable, "no admissible upper barrier level A <= 80");
    }
    spec.A = A;
    spec.upper = VertexFunction::Constant(m, A);
    validate(spec.upper, /*want_negative=*/false, "upper");
  } else {
    if (warm) {
      if (!(warm->lambda_prev < 0) || !(params.lambda < warm->lambda_prev)) {
        fail(Errc::BarrierUnavailable,
             "warm start needs lambda < lambda_prev < 0");
      }
      check_aligned(g, warm->u_prev, "barrier_from_lemma warm start");
      spec.upper =
          warm->u_prev.array() + std::log(warm->lambda_prev / params.lambda);
    } else {
      // cold upper face ln(1/2): requires lambda < 2^(2p+2) min f
      spec.upper = VertexFunction::Constant(m, ln_half);
    }
    validate(spec.upper, /*want_negative=*/false, "upper");

    const VertexFunction phi = solve_poisson_meanzero(g, params.f);
    double A = 1.0;
    bool found = false;
    for (; A <= 80.0; A += 0.5) {
      const VertexFunction face = phi.array() - A;
      if (!((spec.upper - face).minCoeff() > 0)) continue;
      bool neg = true;
      for (int i = 0; i < m && neg; ++i) {
        neg = nonlinearity(params, face[i]) + fbar < 0;
      }
      if (neg) {
        found = true;
        break;
      }
    }
    if (!found) {
      fail(Errc::BarrierUnavailable, "no admissible lower barrier level A <= 80");
    }
    spec.A = A;
    spec.lower = phi.array() - A;
    validate(spec.lower, /*want_negative=*/true, "lower");
  }
  return spec;
}

ContinuationResult continuation_path(
    const Graph& g,
    const std::function<std::pair<double, ModelParams>(double)>& family,
    const VertexFunction& u_start, int n_steps, const NewtonConfig& cfg) {
  ContinuationResult out;
  if (n_steps < 1) {
    fail(Errc::DimensionMismatch, "continuation needs at least one step");
  }

  auto [param0, params0] = family(0.0);
  const NewtonResult start = newton_solve(g, params0, u_start, cfg);
  if (!start.ok()) {
    out.status = ContinuationStatus::NonConvergence;
    return out;
  }
  out.path.push_back({param0, start.u});
  out.last_good_param = param0;

  VertexFunction u = start.u;
  double theta = 0.0;
  const double h0 = 1.0 / n_steps;
  double h = h0;
  const double h_min = 1e-4;

  while (theta < 1.0) {
    const double h_try = std::min(h, 1.0 - theta);
    const auto [param, params] = family(theta + h_try);
    const NewtonResult step = newton_solve(g, params, u, cfg);
    if (step.ok()) {
      theta += h_try;
      u = step.u;
      out.path.push_back({param, u});
      out.last_good_param = param;
      h = std::min(h * 2.0, h0);
    } else {
      h = h_try * 0.5;
      if (h < h_min) {
        out.status = ContinuationStatus::TurningPoint;
        return out;
      }
    }
  }
  out.status = ContinuationStatus::Complete;
  return out;
}

}  // namespace gcsh
