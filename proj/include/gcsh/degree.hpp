#pragma once

#include <optional>

#include "gcsh/solver.hpp"

namespace gcsh {

struct DegreeReport {
  std::optional<int> enumerated_degree;  // empty = indeterminate (a singular zero)
  int theoretical_degree = 0;
  SolutionSet solutions_used;
  bool consistent = false;
};

// Sign of det(-Delta + diag(h'(u_star))) at a verified zero.
int jacobian_sign(const Graph& g, const ModelParams& params,
                  const VertexFunction& u_star, double tol = 1e-8);

// Closed-form degree of the sigma = 1 map on the a-priori ball:
//   +1 for lambda > 0, \int f < 0;  0 for lambda \int f > 0;  -1 for lambda < 0, \int f > 0.
int degree_theoretical(double lambda, double f_integral);

// Signed count of Jacobian signs over the enumerated zero set inside the
// a-priori box, compared against the closed form.
DegreeReport degree_by_enumeration(const Graph& g, const ModelParams& params,
                                   int n_starts, const NewtonConfig& cfg = {},
                                   std::uint64_t seed = 0);

// One-dimensional boundary-sign degree (sgn F(R) - sgn F(-R)) / 2 for the
// single-vertex map F(u) = lambda e^u (e^u - 1)^(2p+1) + f; independent of
// the enumeration path.
int degree_scalar_oracle(const ModelParams& params, double R);

// Signed counts along homotopy samples; every regular sample must agree.
std::vector<std::pair<double, std::optional<int>>> homotopy_audit_sigma(
    const Graph& g, const ModelParams& params, const std::vector<double>& sigmas,
    int n_starts, const NewtonConfig& cfg = {}, std::uint64_t seed = 0);

std::vector<std::pair<double, std::optional<int>>> homotopy_audit_t(
    const Graph& g, const GEpsilonParams& gp, const std::vector<double>& ts,
    int n_starts, const NewtonConfig& cfg = {}, std::uint64_t seed = 0);

}  // namespace gcsh
