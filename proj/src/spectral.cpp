#include "gcsh/spectral.hpp"

#include <Eigen/Eigenvalues>

namespace gcsh {

namespace {
constexpr double kZeroSnap = 1e-10;
}

// -Delta is self-adjoint for the mu-inner product but non-symmetric as a
// matrix when mu varies; conjugating by diag(mu)^{+-1/2} restores symmetry
// with the same eigenvalues.
EigenBasis eigen_basis(const Graph& g) {
  const Eigen::VectorXd mu_isqrt = g.measure().cwiseSqrt().cwiseInverse();
  const Eigen::MatrixXd sym =
      mu_isqrt.asDiagonal() * g.quadratic_form_matrix() * mu_isqrt.asDiagonal();

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(sym);
  if (solver.info() != Eigen::Success) {
    fail(Errc::EigenFailure, "eigen decomposition of the weighted Laplacian failed");
  }

  EigenBasis basis;
  basis.eigenvalues = solver.eigenvalues();
  for (int k = 0; k < basis.eigenvalues.size(); ++k) {
    if (std::abs(basis.eigenvalues[k]) < kZeroSnap) basis.eigenvalues[k] = 0.0;
  }
  basis.vectors = mu_isqrt.asDiagonal() * solver.eigenvectors();
  return basis;
}

Spectrum spectrum(const Graph& g) { return Spectrum{eigen_basis(g).eigenvalues}; }

double poincare_constant(const Graph& g) {
  if (g.size() < 2) {
    fail(Errc::EigenFailure,
         "poincare_constant needs at least two vertices; the single-vertex graph "
         "has no spectral gap");
  }
  return spectrum(g).eigenvalues[1];
}

}  // namespace gcsh
