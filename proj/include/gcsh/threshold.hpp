#pragma once

#include "gcsh/solver.hpp"

namespace gcsh {

// One-sided solvability oracle: true is certified by a residual check,
// false means the enumeration found nothing.
bool is_solvable(const Graph& g, const ModelParams& params, int n_starts,
                 const NewtonConfig& cfg = {}, std::uint64_t seed = 0);

// ((2p+2)^(2p+2) / (2p+1)^(2p+1)) * f_mean: a lower bound for the critical
// coupling when f_mean > 0, an upper bound (negative) when f_mean < 0.
double lambda_star_lower_bound(double f_mean, int p);

struct ThresholdReport {
  double bracket_lo = 0;  // solvability flips inside [bracket_lo, bracket_hi]
  double bracket_hi = 0;
  double lower_bound = 0;  // signed closed-form bound
  std::vector<std::pair<double, int>> counts;  // probe lambda -> solution count
  int n_starts_used = 0;
};

// Bisection for the critical coupling in the lambda * mean(f) > 0 regime.
// For mean(f) > 0 the bracket has is_solvable false at bracket_lo and true
// at bracket_hi; for mean(f) < 0 the roles of the ends are mirrored.
ThresholdReport lambda_star_bisect(const Graph& g, const VertexFunction& f, int p,
                                   std::optional<double> hi_seed, double tol,
                                   int n_starts, const NewtonConfig& cfg = {},
                                   std::uint64_t seed = 0);

struct SweepPoint {
  double lambda;
  SolutionSet solutions;
};

struct SweepResult {
  std::vector<SweepPoint> points;  // lambda ascending
};

// Solution counts, sup-norms and Jacobian signs on a lambda grid.
SweepResult sweep_lambda(const Graph& g, const VertexFunction& f, int p,
                         std::vector<double> lambda_grid, int n_starts,
                         const NewtonConfig& cfg = {}, std::uint64_t seed = 0);

}  // namespace gcsh
