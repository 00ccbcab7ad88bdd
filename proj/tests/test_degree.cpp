#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "gcsh/degree.hpp"
#include "testutil.hpp"

using namespace gcsh;
using namespace gcsh::testing;

namespace {

ModelParams constant_source(const Graph& g, double lambda, int p, double sigma,
                            double f_value) {
  return {lambda, p, sigma, VertexFunction::Constant(g.size(), f_value)};
}

struct CorpusInstance {
  Graph graph;
  ModelParams params;
};

// lambda and mean(f) sampled in all three sign regimes, magnitudes in [1/2, 8]
CorpusInstance corpus_instance(CounterRng& rng, int index) {
  std::vector<Graph> graphs = canonical_graphs();
  Graph g = graphs[index % graphs.size()];
  const int regime = (index / static_cast<int>(graphs.size())) % 3;
  const double mag_l = rng.uniform(0.5, 8.0);
  const double mag_f = rng.uniform(0.5, 8.0);
  double lambda = 0, f_mean = 0;
  if (regime == 0) {
    lambda = mag_l;
    f_mean = -mag_f;
  } else if (regime == 1) {
    lambda = (index % 2 == 0) ? mag_l : -mag_l;
    f_mean = (index % 2 == 0) ? mag_f : -mag_f;
  } else {
    lambda = -mag_l;
    f_mean = mag_f;
  }
  VertexFunction f = (index % 2 == 0)
                         ? random_function(rng, g.size(), 0.4)
                         : VertexFunction::Zero(g.size());
  f.array() += f_mean - mean(g, f);
  ModelParams params{lambda, rng.uniform_int(0, 2), 1.0, std::move(f)};
  return {std::move(g), std::move(params)};
}

}  // namespace

TEST_CASE("jacobian_sign at the frozen scalar zeros") {
  const Graph g = single_vertex();
  {
    const ModelParams params = constant_source(g, 1.0, 0, 1.0, -2.0);
    const VertexFunction u = VertexFunction::Constant(1, std::log(2.0));
    CHECK(jacobian_sign(g, params, u) == 1);
  }
  {
    const ModelParams params = constant_source(g, 8.0, 0, 1.0, 1.0);
    const VertexFunction u =
        VertexFunction::Constant(1, std::log((2.0 - std::sqrt(2.0)) / 4.0));
    CHECK(jacobian_sign(g, params, u) == -1);
  }
  {
    // double root at s = 1/2: h' = 4 s (2s - 1) = 0
    const ModelParams params = constant_source(g, 4.0, 0, 1.0, 1.0);
    const VertexFunction u = VertexFunction::Constant(1, -std::log(2.0));
    CHECK(jacobian_sign(g, params, u) == 0);
  }
  {
    const ModelParams params = constant_source(g, 1.0, 0, 1.0, -2.0);
    try {
      jacobian_sign(g, params, VertexFunction::Constant(1, 0.4));
      FAIL("expected ResidualTooLarge");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::ResidualTooLarge);
    }
  }
}

TEST_CASE("theoretical degree table") {
  CHECK(degree_theoretical(1.0, -2.0) == 1);
  CHECK(degree_theoretical(-2.0, 3.0) == -1);
  CHECK(degree_theoretical(1.0, 2.0) == 0);
  CHECK(degree_theoretical(-1.0, -2.0) == 0);
  CHECK_THROWS_AS(degree_theoretical(0.0, 1.0), Error);
  CHECK_THROWS_AS(degree_theoretical(1.0, 0.0), Error);
}

TEST_CASE("degree by enumeration on the frozen instances") {
  const Graph g1 = single_vertex();
  {
    const auto report =
        degree_by_enumeration(g1, constant_source(g1, 8.0, 0, 1.0, 1.0), 64);
    REQUIRE(report.enumerated_degree.has_value());
    CHECK(*report.enumerated_degree == 0);
    CHECK(report.theoretical_degree == 0);
    CHECK(report.consistent);
    CHECK(report.solutions_used.size() == 2);
  }
  {
    const auto report =
        degree_by_enumeration(g1, constant_source(g1, 1.0, 0, 1.0, -2.0), 64);
    CHECK(report.theoretical_degree == 1);
    REQUIRE(report.enumerated_degree.has_value());
    CHECK(*report.enumerated_degree == 1);
    CHECK(report.consistent);
  }
  {
    const Graph g = p2();
    const auto report =
        degree_by_enumeration(g, constant_source(g, 1.0, 0, 1.0, -1.0), 64);
    CHECK(report.theoretical_degree == 1);
    REQUIRE(report.enumerated_degree.has_value());
    CHECK(*report.enumerated_degree == 1);
    CHECK(report.consistent);
  }
  CHECK_THROWS_AS(
      degree_by_enumeration(g1, constant_source(g1, 1.0, 0, 1.0, 0.0), 16),
      Error);
}

TEST_CASE("scalar boundary oracle") {
  const Graph g = single_vertex();
  CHECK(degree_scalar_oracle(constant_source(g, 1.0, 0, 1.0, -2.0), 10.0) == 1);
  CHECK(degree_scalar_oracle(constant_source(g, 8.0, 0, 1.0, 1.0), 10.0) == 0);
  CHECK(degree_scalar_oracle(constant_source(g, -1.0, 1, 1.0, 2.0), 10.0) == -1);

  // boundary hit: f exactly cancels the nonlinearity at u = R
  const double R = 2.0;
  const double cancel = -std::exp(R) * (std::exp(R) - 1.0);
  try {
    degree_scalar_oracle(constant_source(g, 1.0, 0, 1.0, cancel), R);
    FAIL("expected BoundaryZero");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::BoundaryZero);
  }
}

TEST_CASE("scalar oracle equals the table in all three regimes") {
  CounterRng rng(51);
  const Graph g = single_vertex();
  for (int trial = 0; trial < 60; ++trial) {
    const int regime = trial % 3;
    const double mag_l = rng.uniform(0.5, 8.0);
    const double mag_f = rng.uniform(0.5, 8.0);
    double lambda = 0, f_val = 0;
    if (regime == 0) {
      lambda = mag_l;
      f_val = -mag_f;
    } else if (regime == 1) {
      lambda = (trial % 2 == 0) ? mag_l : -mag_l;
      f_val = (trial % 2 == 0) ? mag_f : -mag_f;
    } else {
      lambda = -mag_l;
      f_val = mag_f;
    }
    const ModelParams params = constant_source(g, lambda, rng.uniform_int(0, 2),
                                               1.0, f_val);
    const auto box = apriori_certificate(g, params, tightest_Lambda(g, params));
    const double R = std::max(std::abs(box.lower), std::abs(box.upper)) + 1.0;
    CHECK(degree_scalar_oracle(params, R) == degree_theoretical(lambda, f_val));
  }
}

TEST_CASE("agreement suite over the randomized corpus") {
  CounterRng rng(52);
  int determinate = 0, total = 0;
  for (int index = 0; index < 45; ++index) {
    const CorpusInstance inst = corpus_instance(rng, index);
    const auto report = degree_by_enumeration(inst.graph, inst.params, 128, {},
                                              900 + index);
    ++total;
    if (report.enumerated_degree.has_value()) {
      ++determinate;
      CHECK(*report.enumerated_degree == report.theoretical_degree);
    }
  }
  CHECK(determinate * 100 >= total * 95);
}

TEST_CASE("jacobian sign is invariant under measure transport") {
  // mu -> c mu with lambda -> lambda/c, f -> f/c keeps the same solutions
  // and the same linearization signs.
  CounterRng rng(53);
  for (int index = 0; index < 12; ++index) {
    const CorpusInstance inst = corpus_instance(rng, index);
    const auto box =
        apriori_certificate(inst.graph, inst.params,
                            tightest_Lambda(inst.graph, inst.params));
    const SolutionSet set =
        multi_start_solve(inst.graph, inst.params, box, 64, {}, 1e-6, index);
    for (double c : {0.5, 3.0}) {
      std::vector<double> scaled_mu;
      for (int i = 0; i < inst.graph.size(); ++i) {
        scaled_mu.push_back(c * inst.graph.measure(i));
      }
      std::vector<EdgeSpec> edges;
      for (const auto& e : inst.graph.edges()) {
        edges.push_back({inst.graph.vertex_ids()[e.a],
                         inst.graph.vertex_ids()[e.b], e.w});
      }
      const Graph scaled =
          build_graph(inst.graph.vertex_ids(), edges, scaled_mu);
      ModelParams transported = inst.params;
      transported.lambda /= c;
      transported.f /= c;
      for (std::size_t k = 0; k < set.size(); ++k) {
        const double defect =
            residual_F(scaled, transported, set.solutions[k])
                .lpNorm<Eigen::Infinity>();
        CHECK(defect <= 1e-8);
        CHECK(jacobian_sign_unchecked(scaled, transported, set.solutions[k]) ==
              set.jacobian_signs[k]);
      }
    }
  }
}

TEST_CASE("homotopy audits are constant on regular paths") {
  const Graph g = single_vertex();
  {
    const ModelParams params = constant_source(g, 1.0, 0, 1.0, -2.0);
    const auto audit =
        homotopy_audit_sigma(g, params, {0.0, 0.25, 0.5, 0.75, 1.0}, 64);
    for (const auto& [sigma, count] : audit) {
      REQUIRE(count.has_value());
      CHECK(*count == 1);
    }
  }
  {
    const ModelParams params = constant_source(g, 8.0, 0, 1.0, 1.0);
    const auto audit = homotopy_audit_sigma(g, params, {0.0, 1.0}, 64);
    REQUIRE(audit[0].second.has_value());
    REQUIRE(audit[1].second.has_value());
    CHECK(*audit[0].second == 0);  // lambda e^(2u) = -1 has no solution
    CHECK(*audit[1].second == 0);  // the two sigma = 1 roots cancel
  }
  {
    const ModelParams base = constant_source(g, 1.0, 0, 1.0, -2.0);
    const GEpsilonParams gp{base, default_epsilon(g, base), 0.0};
    const auto audit = homotopy_audit_t(g, gp, {0.0, 1.0}, 64);
    for (const auto& [t, count] : audit) {
      REQUIRE(count.has_value());
      CHECK(*count == 1);
    }
  }
}
