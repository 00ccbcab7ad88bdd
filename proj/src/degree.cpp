#include "gcsh/degree.hpp"

#include <cmath>

namespace gcsh {

namespace {

std::optional<int> signed_count(const SolutionSet& set) {
  int total = 0;
  for (int s : set.jacobian_signs) {
    if (s == 0) return std::nullopt;
    total += s;
  }
  return total;
}

}  // namespace

int jacobian_sign(const Graph& g, const ModelParams& params,
                  const VertexFunction& u_star, double tol) {
  const double norm = residual_F(g, params, u_star).lpNorm<Eigen::Infinity>();
  if (!(norm <= tol)) {
    fail(Errc::ResidualTooLarge,
         "residual " + std::to_string(norm) + " exceeds tolerance " +
             std::to_string(tol) + "; not a zero of the map");
  }
  return jacobian_sign_unchecked(g, params, u_star);
}

int degree_theoretical(double lambda, double f_integral) {
  if (lambda * f_integral == 0.0) {
    fail(Errc::HypothesisViolated,
         "degree table needs lambda * \\int f dmu != 0");
  }
  if (lambda * f_integral > 0) return 0;
  return lambda > 0 ? 1 : -1;
}

DegreeReport degree_by_enumeration(const Graph& g, const ModelParams& params,
                                   int n_starts, const NewtonConfig& cfg,
                                   std::uint64_t seed) {
  const double f_int = integral(g, params.f);
  if (params.lambda * f_int == 0.0) {
    fail(Errc::HypothesisViolated,
         "degree enumeration needs lambda * \\int f dmu != 0");
  }
  DegreeReport report;
  report.theoretical_degree = degree_theoretical(params.lambda, f_int);
  const AprioriCertificate box =
      apriori_certificate(g, params, tightest_Lambda(g, params));
  report.solutions_used = multi_start_solve(g, params, box, n_starts, cfg, 1e-6, seed);
  report.enumerated_degree = signed_count(report.solutions_used);
  report.consistent = report.enumerated_degree.has_value() &&
                      *report.enumerated_degree == report.theoretical_degree;
  return report;
}

int degree_scalar_oracle(const ModelParams& params, double R) {
  if (params.f.size() != 1) {
    fail(Errc::DimensionMismatch, "scalar oracle applies to single-vertex models");
  }
  if (!(R > 0)) {
    fail(Errc::DimensionMismatch, "oracle radius must be positive");
  }
  const auto boundary_sign = [&](double u) {
    const long double s = expl(static_cast<long double>(u));
    long double pw = 1.0L;
    for (int i = 0; i < 2 * params.p + 1; ++i) pw *= (s - 1.0L);
    const long double term = static_cast<long double>(params.lambda) * s * pw;
    const long double value = term + static_cast<long double>(params.f[0]);
    const long double scale = fabsl(term) + fabsl(params.f[0]);
    if (!(fabsl(value) > 4e-15L * scale)) {
      fail(Errc::BoundaryZero,
           "map vanishes on the boundary at u = " + std::to_string(u));
    }
    return value > 0 ? 1 : -1;
  };
  return (boundary_sign(R) - boundary_sign(-R)) / 2;
}

std::vector<std::pair<double, std::optional<int>>> homotopy_audit_sigma(
    const Graph& g, const ModelParams& params, const std::vector<double>& sigmas,
    int n_starts, const NewtonConfig& cfg, std::uint64_t seed) {
  const double f_int = integral(g, params.f);
  if (params.lambda * f_int == 0.0) {
    fail(Errc::HypothesisViolated, "audit needs lambda * \\int f dmu != 0");
  }
  // One box certifies every sigma in [0, 1].
  const AprioriCertificate box =
      apriori_certificate(g, params, tightest_Lambda(g, params));
  std::vector<std::pair<double, std::optional<int>>> out;
  for (double sigma : sigmas) {
    ModelParams sampled = params;
    sampled.sigma = sigma;
    const SolutionSet set =
        multi_start_solve(g, sampled, box, n_starts, cfg, 1e-6, seed);
    out.emplace_back(sigma, signed_count(set));
  }
  return out;
}

std::vector<std::pair<double, std::optional<int>>> homotopy_audit_t(
    const Graph& g, const GEpsilonParams& gp, const std::vector<double>& ts,
    int n_starts, const NewtonConfig& cfg, std::uint64_t seed) {
  std::vector<std::pair<double, std::optional<int>>> out;
  for (double t : ts) {
    GEpsilonParams sampled = gp;
    sampled.t = t;
    const ModelParams eff = g_eps_effective(sampled);
    const AprioriCertificate box =
        apriori_certificate(g, eff, tightest_Lambda(g, eff));
    const SolutionSet set = multi_start_solve(g, eff, box, n_starts, cfg, 1e-6, seed);
    out.emplace_back(t, signed_count(set));
  }
  return out;
}

}  // namespace gcsh
