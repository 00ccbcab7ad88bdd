#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "testutil.hpp"

using namespace gcsh;
using namespace gcsh::testing;

namespace {

// Independent stencil evaluation straight from the definition, used as the
// oracle for the matrix/adjacency implementations.
VertexFunction laplacian_bruteforce(const Graph& g, const VertexFunction& u) {
  VertexFunction out = VertexFunction::Zero(g.size());
  for (const auto& e : g.edges()) {
    out[e.a] += e.w * (u[e.b] - u[e.a]) / g.measure(e.a);
    out[e.b] += e.w * (u[e.a] - u[e.b]) / g.measure(e.b);
  }
  return out;
}

double dirichlet_energy_bruteforce(const Graph& g, const VertexFunction& u) {
  double acc = 0;
  for (const auto& e : g.edges()) acc += e.w * (u[e.b] - u[e.a]) * (u[e.b] - u[e.a]);
  return acc;
}

}  // namespace

TEST_CASE("build_graph accepts the small test graphs") {
  const Graph g2 = p2();
  CHECK(g2.size() == 2);
  CHECK(g2.total_measure() == doctest::Approx(2.0));
  CHECK(g2.min_measure() == doctest::Approx(1.0));
  CHECK(g2.min_weight() == doctest::Approx(1.0));

  const Graph g3 = p3();
  CHECK(g3.size() == 3);
  CHECK(g3.total_measure() == doctest::Approx(3.0));

  CHECK(single_vertex().size() == 1);
}

TEST_CASE("build_graph rejects invalid inputs with named errors") {
  CHECK_THROWS_AS(build_graph({"a", "b"}, {}, {1.0, 1.0}), Error);
  try {
    build_graph({"a", "b"}, {}, {1.0, 1.0});
  } catch (const Error& e) {
    CHECK(e.code() == Errc::Disconnected);
  }

  CHECK_THROWS_AS(build_graph({"a"}, {{"a", "a", 1.0}}, {1.0}), Error);
  try {
    build_graph({"a"}, {{"a", "a", 1.0}}, {1.0});
  } catch (const Error& e) {
    CHECK(e.code() == Errc::SelfLoop);
    CHECK(std::string(e.what()).find("a") != std::string::npos);
  }

  try {
    build_graph({"a", "b"}, {{"a", "b", 1.0}, {"b", "a", 2.0}}, {1.0, 1.0});
    FAIL("duplicate edge not rejected");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::DuplicateEdge);
  }

  try {
    build_graph({"a", "b"}, {{"a", "b", -1.0}}, {1.0, 1.0});
    FAIL("negative weight not rejected");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NonPositiveWeight);
    CHECK(std::string(e.what()).find("'a'-'b'") != std::string::npos);
  }

  try {
    build_graph({"a", "b"}, {{"a", "b", 1.0}}, {1.0, 0.0});
    FAIL("zero measure not rejected");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NonPositiveMeasure);
    CHECK(std::string(e.what()).find("'b'") != std::string::npos);
  }

  try {
    build_graph({"a", "b"}, {{"a", "x", 1.0}}, {1.0, 1.0});
    FAIL("unknown endpoint not rejected");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::UnknownVertex);
  }
}

TEST_CASE("laplacian_apply matches the hand stencils") {
  const Graph g2 = p2();
  VertexFunction u(2);
  u << 0, 1;
  const VertexFunction lu = laplacian_apply(g2, u);
  CHECK(lu[0] == doctest::Approx(1.0));
  CHECK(lu[1] == doctest::Approx(-1.0));

  const Graph g3 = p3();
  VertexFunction v(3);
  v << -1, 0, 1;
  const VertexFunction lv = laplacian_apply(g3, v);
  CHECK(lv[0] == doctest::Approx(1.0));
  CHECK(lv[1] == doctest::Approx(0.0));
  CHECK(lv[2] == doctest::Approx(-1.0));

  const VertexFunction c = VertexFunction::Constant(3, 4.2);
  CHECK(laplacian_apply(g3, c).lpNorm<Eigen::Infinity>() == 0.0);

  VertexFunction bad(2);
  CHECK_THROWS_AS(laplacian_apply(g3, bad), Error);
}

TEST_CASE("laplacian matrices: frozen entries and operator consistency") {
  const auto [op2, l2] = laplacian_matrices(p2());
  Eigen::MatrixXd expected2(2, 2);
  expected2 << 1, -1, -1, 1;
  CHECK((l2 - expected2).lpNorm<Eigen::Infinity>() == 0.0);

  const auto [op3, l3] = laplacian_matrices(p3());
  Eigen::MatrixXd expected3(3, 3);
  expected3 << 1, -1, 0, -1, 2, -1, 0, -1, 1;
  CHECK((l3 - expected3).lpNorm<Eigen::Infinity>() == 0.0);

  CounterRng rng(11);
  for (int trial = 0; trial < 25; ++trial) {
    const Graph g = random_connected_graph(rng);
    const auto [op, lcomb] = laplacian_matrices(g);
    CHECK(lcomb.rowwise().sum().lpNorm<Eigen::Infinity>() < 1e-12);
    CHECK((lcomb - lcomb.transpose()).lpNorm<Eigen::Infinity>() == 0.0);

    const VertexFunction u = random_function(rng, g.size(), 3.0);
    const VertexFunction via_matrix = op * u;
    const VertexFunction via_stencil = laplacian_apply(g, u);
    CHECK((via_matrix - via_stencil).lpNorm<Eigen::Infinity>() <
          1e-12 * (1 + via_stencil.lpNorm<Eigen::Infinity>()));
    CHECK((via_stencil - laplacian_bruteforce(g, u)).lpNorm<Eigen::Infinity>() <
          1e-12 * (1 + via_stencil.lpNorm<Eigen::Infinity>()));

    const double quad = u.dot(lcomb * u);
    CHECK(quad == doctest::Approx(dirichlet_energy_bruteforce(g, u)).epsilon(1e-12));
    CHECK(quad == doctest::Approx(integral(g, gradient_form(g, u, u))).epsilon(1e-10));
  }
}

TEST_CASE("gradient form: frozen P2 values and algebraic structure") {
  const Graph g = p2();
  VertexFunction u(2), v(2);
  u << 0, 1;
  v << 1, 0;
  const VertexFunction guv = gradient_form(g, u, v);
  CHECK(guv[0] == doctest::Approx(-0.5));
  CHECK(guv[1] == doctest::Approx(-0.5));
  const VertexFunction guu = gradient_form(g, u, u);
  CHECK(guu[0] == doctest::Approx(0.5));
  CHECK(guu[1] == doctest::Approx(0.5));

  CounterRng rng(12);
  for (int trial = 0; trial < 25; ++trial) {
    const Graph gr = random_connected_graph(rng);
    const VertexFunction a = random_function(rng, gr.size(), 2.0);
    const VertexFunction b = random_function(rng, gr.size(), 2.0);
    const VertexFunction c = random_function(rng, gr.size(), 2.0);

    CHECK(gradient_form(gr, a, a).minCoeff() >= 0.0);
    CHECK((gradient_form(gr, a, b) - gradient_form(gr, b, a))
              .lpNorm<Eigen::Infinity>() == 0.0);
    const double s = rng.uniform(-3, 3);
    const VertexFunction lin =
        gradient_form(gr, a + s * b, c) -
        (gradient_form(gr, a, c) + s * gradient_form(gr, b, c));
    CHECK(lin.lpNorm<Eigen::Infinity>() < 1e-10);

    const VertexFunction constant = VertexFunction::Constant(gr.size(), 7.0);
    CHECK(gradient_form(gr, constant, b).lpNorm<Eigen::Infinity>() == 0.0);
  }
}

TEST_CASE("integral, mean, dirac, vortex") {
  const Graph g = p2();
  VertexFunction u(2);
  u << 0, 1;
  CHECK(integral(g, u) == doctest::Approx(1.0));
  CHECK(mean(g, u) == doctest::Approx(0.5));

  const Graph gw = build_graph({"a", "b"}, {{"a", "b", 1.0}}, {2.0, 1.0});
  VertexFunction ones = VertexFunction::Constant(2, 1.0);
  CHECK(integral(gw, ones) == doctest::Approx(3.0));
  CHECK(mean(gw, VertexFunction::Constant(2, 4.5)) == doctest::Approx(4.5));
  CHECK(integral(g, VertexFunction::Zero(2)) == 0.0);

  const Graph g3 = p3();
  VertexFunction w(3);
  w << -1, 0, 1;
  CHECK(mean(g3, w) == doctest::Approx(0.0));

  const VertexFunction d = dirac_delta(g, "a");
  CHECK(d[0] == doctest::Approx(1.0));
  CHECK(d[1] == 0.0);
  const VertexFunction dw = dirac_delta(gw, "a");
  CHECK(dw[0] == doctest::Approx(0.5));
  CHECK(integral(gw, dw) == doctest::Approx(1.0));
  CHECK_THROWS_AS(dirac_delta(g, "zz"), Error);

  const VertexFunction f1 = vortex_source(g, {"a"});
  CHECK(f1[0] == doctest::Approx(4 * std::numbers::pi));
  CHECK(f1[1] == 0.0);
  const VertexFunction f2 = vortex_source(g, {"a", "a"});
  CHECK(f2[0] == doctest::Approx(8 * std::numbers::pi));
  CHECK(vortex_source(g, {}).lpNorm<Eigen::Infinity>() == 0.0);
  CHECK(integral(g, vortex_source(g, {"a", "b", "a"})) ==
        doctest::Approx(12 * std::numbers::pi));
}

TEST_CASE("discrete calculus identities on random graphs") {
  CounterRng rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = random_connected_graph(rng);
    const VertexFunction u = random_function(rng, g.size(), 5.0);
    const VertexFunction v = random_function(rng, g.size(), 5.0);

    // \int Delta u dmu = 0
    const double total = integral(g, laplacian_apply(g, u));
    CHECK(std::abs(total) <= 1e-12 * (1 + u.lpNorm<Eigen::Infinity>()));

    // \int Gamma(u,v) dmu = -\int v Delta u dmu
    const double lhs = integral(g, gradient_form(g, u, v));
    const double rhs = -integral(g, v.cwiseProduct(laplacian_apply(g, u)));
    CHECK(std::abs(lhs - rhs) <= 1e-10 * (1 + std::abs(lhs) + std::abs(rhs)));

    // shift invariance
    const VertexFunction u_shift = u.array() + 3.25;
    const VertexFunction shifted = laplacian_apply(g, u_shift) - laplacian_apply(g, u);
    CHECK(shifted.lpNorm<Eigen::Infinity>() < 1e-12);
  }
}
