#pragma once

#include "gcsh/graph.hpp"

namespace gcsh {

// Eigenvalues of -Delta in the mu-weighted inner product, sorted ascending.
// lambda_0 = 0 on a connected graph; lambda_1 is the Poincare constant.
struct Spectrum {
  Eigen::VectorXd eigenvalues;
};

// Eigenpairs of -Delta: column k of `vectors` is a mu-orthonormal
// eigenfunction for eigenvalues[k].
struct EigenBasis {
  Eigen::VectorXd eigenvalues;
  Eigen::MatrixXd vectors;
};

Spectrum spectrum(const Graph& g);
EigenBasis eigen_basis(const Graph& g);

// lambda_1 = inf { \int |grad u|^2 dmu : mean(u) = 0, \int u^2 dmu = 1 }
double poincare_constant(const Graph& g);

}  // namespace gcsh
