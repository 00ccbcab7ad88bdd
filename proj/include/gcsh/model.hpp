#pragma once

#include <utility>

#include "gcsh/graph.hpp"

namespace gcsh {

// Parameters of the map F(u, sigma) = -Delta u + lambda e^u (e^u - sigma)^(2p+1) + f.
// sigma = 1 is the Chern-Simons Higgs equation itself; sigma in [0,1] spans
// the deformation used for degree computations.
struct ModelParams {
  double lambda = 1.0;
  int p = 0;
  double sigma = 1.0;
  VertexFunction f;
};

// G_eps(u, t) = -Delta u + lambda e^((2p+2)u) + (t + (1-t) eps) f.
// base.sigma is ignored; the exponential family corresponds to sigma = 0.
struct GEpsilonParams {
  ModelParams base;
  double epsilon = 1e-2;
  double t = 0.0;
};

// Explicit solution box: every solution of F(u, sigma) = 0, for any
// sigma in [0,1] and parameters inside the Lambda sandwich, satisfies
// lower <= u(x) <= upper.
struct AprioriCertificate {
  double Lambda = 0;
  double c1 = 0;
  double c2 = 0;
  double c3 = 0;
  double alpha = 0;
  double lower = 0;
  double upper = 0;

  bool contains(const VertexFunction& u, double slack = 0.0) const {
    return u.minCoeff() >= lower - slack && u.maxCoeff() <= upper + slack;
  }
};

// Pointwise nonlinearity h(u) = lambda e^u (e^u - sigma)^(2p+1) and its
// derivative. Entries with u beyond the overflow guard raise Overflow.
double nonlinearity(const ModelParams& params, double u);
double nonlinearity_derivative(const ModelParams& params, double u);

VertexFunction residual_F(const Graph& g, const ModelParams& params,
                          const VertexFunction& u);

// -Delta + diag(h'(u)) as a dense matrix.
Eigen::MatrixXd jacobian_F(const Graph& g, const ModelParams& params,
                           const VertexFunction& u);
VertexFunction hprime_diagonal(const ModelParams& params, const VertexFunction& u);

// J_lambda(u) = 1/2 \int |grad u|^2 + lambda/(2p+2) \int (e^u - 1)^(2p+2) + \int f u.
// Defined for sigma = 1 only; its mu-gradient is residual_F.
double functional_J(const Graph& g, const ModelParams& params,
                    const VertexFunction& u);

// F-map equivalent of G_eps(., t): sigma = 0 with the source rescaled.
ModelParams g_eps_effective(const GEpsilonParams& gp);
VertexFunction residual_G_eps(const Graph& g, const GEpsilonParams& gp,
                              const VertexFunction& u);

// Tightest admissible bound parameter for the sandwich
// 1/Lambda <= |lambda| <= Lambda, 1/Lambda <= |\int f| <= Lambda, ||f||_inf <= Lambda.
double tightest_Lambda(const Graph& g, const ModelParams& params);

AprioriCertificate apriori_certificate(const Graph& g, const ModelParams& params,
                                       double Lambda);

// The box formulas alone, without checking the sandwich hypotheses.
AprioriCertificate certificate_formulas(const Graph& g, int p, double Lambda);

// Global minimum of s (s-1)^(2p+1) over s > 0: attained at s = 1/(2p+2) with
// value -(2p+1)^(2p+1) / (2p+2)^(2p+2).
std::pair<double, double> nonlinearity_extrema(int p);

// L_lambda applied to the constant function c (the -Delta term vanishes):
// lambda e^c (e^c - 1)^(2p+1) + f, evaluated pointwise. Requires sigma = 1.
VertexFunction barrier_check(const Graph& g, const ModelParams& params, double c);

// Deformation scale for the exponential family; small enough that its
// solution is unique by the contraction estimate.
double default_epsilon(const Graph& g, const ModelParams& params);

// Sign of det(-Delta + diag(h'(u))) from the inertia of the conjugated
// symmetric matrix; 0 when numerically singular. No residual precondition.
int jacobian_sign_unchecked(const Graph& g, const ModelParams& params,
                            const VertexFunction& u);

}  // namespace gcsh
