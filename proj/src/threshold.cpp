#include "gcsh/threshold.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace gcsh {

namespace {

AprioriCertificate enumeration_box(const Graph& g, const ModelParams& params) {
  const double f_int = integral(g, params.f);
  if (params.lambda != 0.0 && f_int != 0.0) {
    return apriori_certificate(g, params, tightest_Lambda(g, params));
  }
  // With \int f = 0 the sandwich hypotheses fail and no certified box
  // exists; fall back to the same formulas with the conditions that still
  // make sense.
  const double abs_lambda = std::max(std::abs(params.lambda), 1e-8);
  double Lambda = std::max(abs_lambda, 1.0 / abs_lambda);
  Lambda = std::max(Lambda, params.f.cwiseAbs().maxCoeff());
  Lambda = std::max(Lambda, 1.0);
  return certificate_formulas(g, params.p, Lambda);
}

}  // namespace

bool is_solvable(const Graph& g, const ModelParams& params, int n_starts,
                 const NewtonConfig& cfg, std::uint64_t seed) {
  const AprioriCertificate box = enumeration_box(g, params);
  return !multi_start_solve(g, params, box, n_starts, cfg, 1e-6, seed).empty();
}

double lambda_star_lower_bound(double f_mean, int p) {
  if (f_mean == 0.0) {
    fail(Errc::SignMismatch, "critical-coupling bound needs mean(f) != 0");
  }
  const double num = std::pow(2.0 * p + 2.0, 2 * p + 2);
  const double den = std::pow(2.0 * p + 1.0, 2 * p + 1);
  return num / den * f_mean;
}

ThresholdReport lambda_star_bisect(const Graph& g, const VertexFunction& f, int p,
                                   std::optional<double> hi_seed, double tol,
                                   int n_starts, const NewtonConfig& cfg,
                                   std::uint64_t seed) {
  check_aligned(g, f, "lambda_star_bisect");
  const double fbar = mean(g, f);
  const double bound = lambda_star_lower_bound(fbar, p);  // rejects fbar == 0
  if (!(tol > 0)) {
    fail(Errc::DimensionMismatch, "bisection tolerance must be positive");
  }

  ThresholdReport report;
  report.lower_bound = bound;
  report.n_starts_used = n_starts;

  std::map<double, int> counts;
  const auto probe = [&](double lambda) {
    auto it = counts.find(lambda);
    if (it == counts.end()) {
      ModelParams params{lambda, p, 1.0, f};
      const SolutionSet set = multi_start_solve(
          g, params, enumeration_box(g, params), n_starts, cfg, 1e-6, seed);
      it = counts.emplace(lambda, static_cast<int>(set.size())).first;
    }
    return it->second > 0;
  };

  // Work with |lambda|; the mean(f) < 0 case mirrors to negative couplings.
  const double direction = fbar > 0 ? 1.0 : -1.0;
  double unsolvable = std::abs(bound) * (1.0 - 1e-6);
  while (probe(direction * unsolvable) && unsolvable > 1e-8) {
    unsolvable *= 0.5;  // the closed-form bound should already be unsolvable
  }

  double solvable = std::abs(hi_seed.value_or(std::abs(bound)));
  const double cap = std::abs(bound) * 1024.0;
  while (!probe(direction * solvable)) {
    solvable *= 2.0;
    if (solvable > cap) {
      fail(Errc::NoSolvableSeed,
           "no solvable coupling found up to 1024x the closed-form bound");
    }
  }

  while (solvable - unsolvable > tol) {
    const double mid = 0.5 * (solvable + unsolvable);
    if (mid == solvable || mid == unsolvable) break;
    if (probe(direction * mid)) {
      solvable = mid;
    } else {
      unsolvable = mid;
    }
  }

  const double end_a = direction * unsolvable;
  const double end_b = direction * solvable;
  report.bracket_lo = std::min(end_a, end_b);
  report.bracket_hi = std::max(end_a, end_b);
  report.counts.assign(counts.begin(), counts.end());
  return report;
}

SweepResult sweep_lambda(const Graph& g, const VertexFunction& f, int p,
                         std::vector<double> lambda_grid, int n_starts,
                         const NewtonConfig& cfg, std::uint64_t seed) {
  check_aligned(g, f, "sweep_lambda");
  std::sort(lambda_grid.begin(), lambda_grid.end());
  SweepResult result;
  for (double lambda : lambda_grid) {
    ModelParams params{lambda, p, 1.0, f};
    SolutionSet set = multi_start_solve(g, params, enumeration_box(g, params),
                                        n_starts, cfg, 1e-6, seed);
    result.points.push_back({lambda, std::move(set)});
  }
  return result;
}

}  // namespace gcsh
