#include "gcsh/graph.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <set>

namespace gcsh {

Graph Graph::build(const std::vector<std::string>& vertex_ids,
                   const std::vector<EdgeSpec>& edges,
                   const std::vector<double>& measure) {
  if (vertex_ids.empty()) {
    fail(Errc::DimensionMismatch, "graph needs at least one vertex");
  }
  if (measure.size() != vertex_ids.size()) {
    fail(Errc::DimensionMismatch,
         "measure has " + std::to_string(measure.size()) + " entries for " +
             std::to_string(vertex_ids.size()) + " vertices");
  }

  Graph g;
  g.ids_ = vertex_ids;
  for (std::size_t i = 0; i < vertex_ids.size(); ++i) {
    auto [it, inserted] = g.index_.emplace(vertex_ids[i], static_cast<int>(i));
    if (!inserted) {
      fail(Errc::DuplicateVertex, "duplicate vertex id '" + vertex_ids[i] + "'");
    }
  }

  const int m = g.size();
  g.mu_.resize(m);
  for (int i = 0; i < m; ++i) {
    if (!(measure[i] > 0) || !std::isfinite(measure[i])) {
      fail(Errc::NonPositiveMeasure,
           "vertex '" + g.ids_[i] + "' has measure " + std::to_string(measure[i]));
    }
    g.mu_[i] = measure[i];
  }

  g.adj_.assign(m, {});
  std::set<std::pair<int, int>> seen;
  for (const EdgeSpec& e : edges) {
    const int a = g.index_of(e.a);
    const int b = g.index_of(e.b);
    if (a == b) {
      fail(Errc::SelfLoop, "self-loop at vertex '" + e.a + "'");
    }
    auto key = std::minmax(a, b);
    if (!seen.insert(key).second) {
      fail(Errc::DuplicateEdge, "duplicate edge '" + e.a + "'-'" + e.b + "'");
    }
    if (!(e.w > 0) || !std::isfinite(e.w)) {
      fail(Errc::NonPositiveWeight, "edge '" + e.a + "'-'" + e.b +
                                        "' has weight " + std::to_string(e.w));
    }
    g.edges_.push_back({key.first, key.second, e.w});
    g.adj_[a].emplace_back(b, e.w);
    g.adj_[b].emplace_back(a, e.w);
  }

  // connectivity: BFS from vertex 0
  std::vector<char> reached(m, 0);
  std::vector<int> queue = {0};
  reached[0] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (auto [nbr, w] : g.adj_[queue[head]]) {
      if (!reached[nbr]) {
        reached[nbr] = 1;
        queue.push_back(nbr);
      }
    }
  }
  for (int i = 0; i < m; ++i) {
    if (!reached[i]) {
      fail(Errc::Disconnected, "vertex '" + g.ids_[i] + "' is not reachable from '" +
                                   g.ids_[0] + "'");
    }
  }

  g.mu0_ = g.mu_.minCoeff();
  g.volume_ = g.mu_.sum();
  g.w0_ = std::numeric_limits<double>::infinity();
  for (const auto& e : g.edges_) g.w0_ = std::min(g.w0_, e.w);

  g.lcomb_ = Eigen::MatrixXd::Zero(m, m);
  for (const auto& e : g.edges_) {
    g.lcomb_(e.a, e.a) += e.w;
    g.lcomb_(e.b, e.b) += e.w;
    g.lcomb_(e.a, e.b) -= e.w;
    g.lcomb_(e.b, e.a) -= e.w;
  }
  return g;
}

int Graph::index_of(const std::string& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) {
    fail(Errc::UnknownVertex, "unknown vertex '" + id + "'");
  }
  return it->second;
}

Eigen::MatrixXd Graph::operator_matrix() const {
  return -(mu_.cwiseInverse().asDiagonal() * lcomb_);
}

void check_aligned(const Graph& g, const VertexFunction& u, const char* where) {
  if (u.size() != g.size()) {
    fail(Errc::DimensionMismatch,
         std::string(where) + ": function has " + std::to_string(u.size()) +
             " entries for a graph with " + std::to_string(g.size()) + " vertices");
  }
}

Graph build_graph(const std::vector<std::string>& vertex_ids,
                  const std::vector<EdgeSpec>& edges,
                  const std::vector<double>& measure) {
  return Graph::build(vertex_ids, edges, measure);
}

VertexFunction laplacian_apply(const Graph& g, const VertexFunction& u) {
  check_aligned(g, u, "laplacian_apply");
  VertexFunction out = VertexFunction::Zero(g.size());
  for (int x = 0; x < g.size(); ++x) {
    double acc = 0;
    for (auto [y, w] : g.adjacency()[x]) acc += w * (u[y] - u[x]);
    out[x] = acc / g.measure(x);
  }
  return out;
}

std::pair<Eigen::MatrixXd, Eigen::MatrixXd> laplacian_matrices(const Graph& g) {
  return {g.operator_matrix(), g.quadratic_form_matrix()};
}

VertexFunction gradient_form(const Graph& g, const VertexFunction& u,
                             const VertexFunction& v) {
  check_aligned(g, u, "gradient_form");
  check_aligned(g, v, "gradient_form");
  VertexFunction out = VertexFunction::Zero(g.size());
  for (int x = 0; x < g.size(); ++x) {
    double acc = 0;
    for (auto [y, w] : g.adjacency()[x]) {
      acc += w * ((u[y] - u[x]) * (v[y] - v[x]));
    }
    out[x] = acc / (2.0 * g.measure(x));
  }
  return out;
}

double integral(const Graph& g, const VertexFunction& u) {
  check_aligned(g, u, "integral");
  return g.measure().dot(u);
}

double mean(const Graph& g, const VertexFunction& u) {
  return integral(g, u) / g.total_measure();
}

VertexFunction dirac_delta(const Graph& g, int x0) {
  if (x0 < 0 || x0 >= g.size()) {
    fail(Errc::UnknownVertex, "vertex index " + std::to_string(x0) + " out of range");
  }
  VertexFunction d = VertexFunction::Zero(g.size());
  d[x0] = 1.0 / g.measure(x0);
  return d;
}

VertexFunction dirac_delta(const Graph& g, const std::string& x0) {
  return dirac_delta(g, g.index_of(x0));
}

VertexFunction vortex_source(const Graph& g,
                             const std::vector<std::string>& vortex_points) {
  VertexFunction f = VertexFunction::Zero(g.size());
  for (const auto& p : vortex_points) {
    f += 4.0 * std::numbers::pi * dirac_delta(g, p);
  }
  return f;
}

}  // namespace gcsh
