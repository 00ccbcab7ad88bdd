#pragma once

#include <Eigen/Dense>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "gcsh/errors.hpp"

namespace gcsh {

// A function on the vertex set, aligned to the owning Graph's vertex order.
using VertexFunction = Eigen::VectorXd;

struct EdgeSpec {
  std::string a;
  std::string b;
  double w;
};

// Connected finite graph with symmetric positive edge weights and a positive
// vertex measure. Immutable after build(); vertex order is construction
// order and fixes the alignment of every VertexFunction.
class Graph {
 public:
  struct Edge {
    int a;
    int b;
    double w;
  };

  static Graph build(const std::vector<std::string>& vertex_ids,
                     const std::vector<EdgeSpec>& edges,
                     const std::vector<double>& measure);

  int size() const { return static_cast<int>(ids_.size()); }
  const std::vector<std::string>& vertex_ids() const { return ids_; }
  int index_of(const std::string& id) const;

  const Eigen::VectorXd& measure() const { return mu_; }
  double measure(int i) const { return mu_[i]; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<std::vector<std::pair<int, double>>>& adjacency() const {
    return adj_;
  }

  double min_measure() const { return mu0_; }       // mu_0
  double min_weight() const { return w0_; }          // w_0 (+inf when edgeless)
  double total_measure() const { return volume_; }   // |V| as a measure

  // Combinatorial quadratic-form matrix: u^T L u = \int |grad u|^2 dmu.
  const Eigen::MatrixXd& quadratic_form_matrix() const { return lcomb_; }
  // Matrix applying the mu-Laplacian: Delta u = -diag(mu)^-1 L u.
  Eigen::MatrixXd operator_matrix() const;

 private:
  Graph() = default;

  std::vector<std::string> ids_;
  std::unordered_map<std::string, int> index_;
  Eigen::VectorXd mu_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::pair<int, double>>> adj_;
  Eigen::MatrixXd lcomb_;
  double mu0_ = 0;
  double w0_ = 0;
  double volume_ = 0;
};

void check_aligned(const Graph& g, const VertexFunction& u, const char* where);

Graph build_graph(const std::vector<std::string>& vertex_ids,
                  const std::vector<EdgeSpec>& edges,
                  const std::vector<double>& measure);

// Delta u(x) = (1/mu(x)) sum_{y~x} w_xy (u(y) - u(x))
VertexFunction laplacian_apply(const Graph& g, const VertexFunction& u);

// (operator matrix applying Delta, combinatorial quadratic-form matrix)
std::pair<Eigen::MatrixXd, Eigen::MatrixXd> laplacian_matrices(const Graph& g);

// Gamma(u,v)(x) = (1/2mu(x)) sum_{y~x} w_xy (u(y)-u(x))(v(y)-v(x))
VertexFunction gradient_form(const Graph& g, const VertexFunction& u,
                             const VertexFunction& v);

// \int_V u dmu = sum_x mu(x) u(x)
double integral(const Graph& g, const VertexFunction& u);

// mean value: integral / total measure
double mean(const Graph& g, const VertexFunction& u);

// Unit-mass spike: 1/mu(x0) at x0, zero elsewhere.
VertexFunction dirac_delta(const Graph& g, const std::string& x0);
VertexFunction dirac_delta(const Graph& g, int x0);

// f = 4*pi * sum_j delta_{p_j}; repeated vortex points stack.
VertexFunction vortex_source(const Graph& g,
                             const std::vector<std::string>& vortex_points);

}  // namespace gcsh
