#include "gcsh/model.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

#include "gcsh/spectral.hpp"

namespace gcsh {

namespace {

constexpr double kOverflowGuard = 700.0;

long double ipow(long double base, int n) {
  long double acc = 1.0L;
  for (int i = 0; i < n; ++i) acc *= base;
  return acc;
}

double finished(long double value, const char* what) {
  const double out = static_cast<double>(value);
  if (!std::isfinite(out)) {
    fail(Errc::Overflow, std::string(what) + " overflowed double range");
  }
  return out;
}

void check_params(const ModelParams& params) {
  if (params.p < 0) {
    fail(Errc::DimensionMismatch, "nonlinearity exponent p must be >= 0");
  }
  if (params.sigma < 0.0 || params.sigma > 1.0) {
    fail(Errc::DimensionMismatch, "sigma must lie in [0, 1]");
  }
}

}  // namespace

double nonlinearity(const ModelParams& params, double u) {
  if (u > kOverflowGuard) {
    fail(Errc::Overflow, "e^u out of range at u = " + std::to_string(u));
  }
  const long double s = expl(static_cast<long double>(u));
  const long double val =
      static_cast<long double>(params.lambda) * s * ipow(s - params.sigma, 2 * params.p + 1);
  return finished(val, "nonlinearity");
}

// h'(u) in the factored form lambda e^u (e^u - sigma)^(2p) [(e^u - sigma) + (2p+1) e^u],
// which avoids cancellation near e^u = sigma.
double nonlinearity_derivative(const ModelParams& params, double u) {
  if (u > kOverflowGuard) {
    fail(Errc::Overflow, "e^u out of range at u = " + std::to_string(u));
  }
  const long double s = expl(static_cast<long double>(u));
  const long double t = s - params.sigma;
  const long double val = static_cast<long double>(params.lambda) * s *
                          ipow(t, 2 * params.p) * (t + (2 * params.p + 1) * s);
  return finished(val, "nonlinearity derivative");
}

VertexFunction residual_F(const Graph& g, const ModelParams& params,
                          const VertexFunction& u) {
  check_aligned(g, u, "residual_F");
  check_aligned(g, params.f, "residual_F source");
  check_params(params);
  VertexFunction r = -laplacian_apply(g, u);
  for (int i = 0; i < g.size(); ++i) {
    r[i] += nonlinearity(params, u[i]) + params.f[i];
  }
  return r;
}

VertexFunction hprime_diagonal(const ModelParams& params, const VertexFunction& u) {
  VertexFunction h(u.size());
  for (int i = 0; i < u.size(); ++i) h[i] = nonlinearity_derivative(params, u[i]);
  return h;
}

Eigen::MatrixXd jacobian_F(const Graph& g, const ModelParams& params,
                           const VertexFunction& u) {
  check_aligned(g, u, "jacobian_F");
  check_params(params);
  Eigen::MatrixXd jac = -g.operator_matrix();
  jac.diagonal() += hprime_diagonal(params, u);
  return jac;
}

double functional_J(const Graph& g, const ModelParams& params,
                    const VertexFunction& u) {
  check_aligned(g, u, "functional_J");
  check_aligned(g, params.f, "functional_J source");
  if (params.sigma != 1.0) {
    fail(Errc::SigmaNotOne, "functional_J corresponds to the sigma = 1 map only");
  }
  const double dirichlet = u.dot(g.quadratic_form_matrix() * u);
  long double potential = 0.0L;
  for (int i = 0; i < g.size(); ++i) {
    if (u[i] > kOverflowGuard) {
      fail(Errc::Overflow, "e^u out of range at u = " + std::to_string(u[i]));
    }
    potential += static_cast<long double>(g.measure(i)) *
                 ipow(expl(static_cast<long double>(u[i])) - 1.0L, 2 * params.p + 2);
  }
  const double source = integral(g, params.f.cwiseProduct(u));
  return finished(0.5L * dirichlet +
                      params.lambda / (2.0L * (params.p + 1)) * potential + source,
                  "functional_J");
}

ModelParams g_eps_effective(const GEpsilonParams& gp) {
  if (!(gp.epsilon > 0)) {
    fail(Errc::DimensionMismatch, "epsilon must be positive");
  }
  if (gp.t < 0.0 || gp.t > 1.0) {
    fail(Errc::DimensionMismatch, "homotopy parameter t must lie in [0, 1]");
  }
  ModelParams eff = gp.base;
  eff.sigma = 0.0;
  eff.f = (gp.t + (1.0 - gp.t) * gp.epsilon) * gp.base.f;
  return eff;
}

VertexFunction residual_G_eps(const Graph& g, const GEpsilonParams& gp,
                              const VertexFunction& u) {
  return residual_F(g, g_eps_effective(gp), u);
}

double tightest_Lambda(const Graph& g, const ModelParams& params) {
  check_aligned(g, params.f, "tightest_Lambda");
  const double abs_lambda = std::abs(params.lambda);
  const double abs_fint = std::abs(integral(g, params.f));
  if (abs_lambda == 0.0 || abs_fint == 0.0) {
    fail(Errc::LambdaSandwichViolated,
         abs_lambda == 0.0 ? "lambda = 0 admits no sandwich Lambda"
                           : "\\int f dmu = 0 admits no sandwich Lambda");
  }
  double Lambda = std::max(abs_lambda, 1.0 / abs_lambda);
  Lambda = std::max(Lambda, std::max(abs_fint, 1.0 / abs_fint));
  Lambda = std::max(Lambda, params.f.cwiseAbs().maxCoeff());
  return Lambda;
}

AprioriCertificate apriori_certificate(const Graph& g, const ModelParams& params,
                                       double Lambda) {
  check_aligned(g, params.f, "apriori_certificate");
  check_params(params);
  if (!(Lambda > 0)) {
    fail(Errc::LambdaSandwichViolated, "Lambda must be positive");
  }
  const double abs_lambda = std::abs(params.lambda);
  const double abs_fint = std::abs(integral(g, params.f));
  const double f_sup = params.f.cwiseAbs().maxCoeff();
  const double inv = 1.0 / Lambda;
  if (!(inv <= abs_lambda && abs_lambda <= Lambda)) {
    fail(Errc::LambdaSandwichViolated,
         "|lambda| = " + std::to_string(abs_lambda) + " outside [1/Lambda, Lambda]");
  }
  if (!(inv <= abs_fint && abs_fint <= Lambda)) {
    fail(Errc::LambdaSandwichViolated,
         "|\\int f dmu| = " + std::to_string(abs_fint) + " outside [1/Lambda, Lambda]");
  }
  if (!(f_sup <= Lambda)) {
    fail(Errc::LambdaSandwichViolated,
         "||f||_inf = " + std::to_string(f_sup) + " exceeds Lambda");
  }

  return certificate_formulas(g, params.p, Lambda);
}

AprioriCertificate certificate_formulas(const Graph& g, int p, double Lambda) {
  const int m = g.size();
  const double volume = g.total_measure();
  const double mu0 = g.min_measure();

  AprioriCertificate cert;
  cert.Lambda = Lambda;
  cert.c1 = volume + Lambda * Lambda;
  const double root = std::pow(cert.c1 / mu0, 1.0 / (2 * p + 1));
  cert.upper = std::log1p(root);
  cert.c2 = Lambda * std::pow(2.0 + root, 2 * p + 2) + Lambda;
  if (m == 1) {
    cert.c3 = 0.0;  // max u - min u vanishes on a single vertex
  } else {
    cert.c3 = cert.c2 *
              std::sqrt((m - 1) * volume / (g.min_weight() * poincare_constant(g)));
  }
  cert.alpha = std::log(std::max(1.0, 4.0 * Lambda * Lambda * volume));
  cert.lower = -cert.alpha - cert.c3;
  return cert;
}

std::pair<double, double> nonlinearity_extrema(int p) {
  const double s_min = 1.0 / (2 * p + 2);
  const double value_min = -static_cast<double>(ipow(2 * p + 1, 2 * p + 1)) /
                           static_cast<double>(ipow(2 * p + 2, 2 * p + 2));
  return {s_min, value_min};
}

VertexFunction barrier_check(const Graph& g, const ModelParams& params, double c) {
  check_aligned(g, params.f, "barrier_check");
  if (params.sigma != 1.0) {
    fail(Errc::SigmaNotOne, "barrier_check applies to the sigma = 1 operator");
  }
  const double h = nonlinearity(params, c);
  VertexFunction out = params.f;
  out.array() += h;
  return out;
}

double default_epsilon(const Graph& g, const ModelParams& params) {
  const double cap = 1e-2;
  if (g.size() == 1) return cap;
  const double Lambda = tightest_Lambda(g, params);
  const double contraction =
      std::sqrt(g.min_weight() * poincare_constant(g) /
                ((g.size() - 1) * g.total_measure())) *
      g.min_measure() / (8.0 * (params.p + 1) * Lambda * Lambda * Lambda);
  return std::min(cap, contraction);
}

int jacobian_sign_unchecked(const Graph& g, const ModelParams& params,
                            const VertexFunction& u) {
  check_aligned(g, u, "jacobian_sign");
  // det(-Delta + H) and det(L + diag(mu) H) share their sign because
  // det diag(mu) > 0; the latter symmetrizes cleanly.
  const Eigen::VectorXd mu_isqrt = g.measure().cwiseSqrt().cwiseInverse();
  Eigen::MatrixXd sym =
      mu_isqrt.asDiagonal() * g.quadratic_form_matrix() * mu_isqrt.asDiagonal();
  sym.diagonal() += hprime_diagonal(params, u);

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(sym);
  if (solver.info() != Eigen::Success) {
    fail(Errc::EigenFailure, "eigen decomposition of the linearization failed");
  }
  const Eigen::VectorXd& eigs = solver.eigenvalues();
  const double scale = std::max(1.0, eigs.cwiseAbs().maxCoeff());
  int negatives = 0;
  for (int i = 0; i < eigs.size(); ++i) {
    if (std::abs(eigs[i]) < 1e-10 * scale) return 0;
    if (eigs[i] < 0) ++negatives;
  }
  return (negatives % 2 == 0) ? 1 : -1;
}

}  // namespace gcsh
