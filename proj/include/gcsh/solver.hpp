#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "gcsh/model.hpp"

namespace gcsh {

struct NewtonConfig {
  double tol_residual = 1e-10;  // sup-norm stopping criterion
  int max_iter = 100;
  double damping = 0.5;  // backtracking factor, in (0, 1)
  double min_step = 1e-12;
};

enum class NewtonStatus { Converged, MaxIter, SingularJacobian, StepUnderflow };

const char* newton_status_name(NewtonStatus status);

struct NewtonResult {
  NewtonStatus status = NewtonStatus::MaxIter;
  VertexFunction u;          // solution, or last iterate on failure
  double residual_norm = 0;  // sup norm at u
  int iterations = 0;
  std::vector<double> residual_history;  // per accepted iterate, starting at u0

  bool ok() const { return status == NewtonStatus::Converged; }
};

// Unique v with Delta v = g - mean(g) and mean(v) = 0.
VertexFunction solve_poisson_meanzero(const Graph& g, const VertexFunction& rhs);

// Damped Newton on residual_F: solve J delta = -r, backtrack until the
// sup-norm residual decreases. Failure is a value, not an exception.
NewtonResult newton_solve(const Graph& g, const ModelParams& params,
                          const VertexFunction& u0, const NewtonConfig& cfg = {});

// Candidate constant levels for constant solutions: all roots of
// lambda e^v (e^v - sigma)^(2p+1) + f_const on [lo, hi] (isolated on the
// monotone pieces between extrema), plus the interior extrema themselves
// (seeds for tangent and near-tangent roots).
struct ScalarCandidates {
  std::vector<double> roots;
  std::vector<double> extrema;
};
ScalarCandidates scalar_constant_candidates(double lambda, int p, double sigma,
                                            double f_const, double lo, double hi);

struct BarrierSpec {
  VertexFunction lower;
  VertexFunction upper;
  double A = 0;  // barrier level used for the non-constant face construction
};

struct BoxMinResult {
  VertexFunction u;
  bool strict_interior = false;  // > 1e-6 from both faces
  double residual_norm = 0;
  int iterations = 0;
};

// Projected-gradient minimization of J_lambda over the box, polished by
// Newton once the active set stays empty. Throws OnBoundary when the
// minimizer sits on a face and NonConvergence when neither phase settles.
BoxMinResult minimize_box(const Graph& g, const ModelParams& params,
                          const BarrierSpec& spec, const NewtonConfig& cfg = {});

struct WarmStart {
  double lambda_prev = 0;
  VertexFunction u_prev;
};

// Sub/super-solution box for the local-minimum construction. Cold boxes use
// the ln(1/2) face; warm boxes reuse a solution at a smaller |lambda| shifted
// by ln(lambda_prev / lambda). All faces are validated pointwise.
BarrierSpec barrier_from_lemma(const Graph& g, const ModelParams& params,
                               const std::optional<WarmStart>& warm = {});

struct SolutionSet {
  std::vector<VertexFunction> solutions;  // sorted lexicographically
  std::vector<double> residual_norms;
  std::vector<int> jacobian_signs;  // in {-1, 0, +1}; 0 = numerically singular
  double dedup_tol = 1e-6;

  std::size_t size() const { return solutions.size(); }
  bool empty() const { return solutions.empty(); }
};

// Deduplicated Newton solutions from low-discrepancy seeds in the
// certificate box (plus constant seeds at scalar-reduction roots and a
// soft-mode refinement pass around each find).
SolutionSet multi_start_solve(const Graph& g, const ModelParams& params,
                              const AprioriCertificate& box, int n_starts,
                              const NewtonConfig& cfg = {}, double dedup_tol = 1e-6,
                              std::uint64_t seed = 0);

enum class ContinuationStatus { Complete, TurningPoint, NonConvergence };

struct ContinuationPoint {
  double param;
  VertexFunction u;
};

struct ContinuationResult {
  ContinuationStatus status = ContinuationStatus::NonConvergence;
  std::vector<ContinuationPoint> path;  // every entry satisfies the tolerance
  double last_good_param = 0;
};

// Predictor-corrector continuation along a one-parameter family.
// `family` maps path time theta in [0,1] to (reported parameter, model).
// Steps halve on corrector failure, down to 1e-4 of the parameter range;
// exhausting that reports TurningPoint with the last good parameter.
ContinuationResult continuation_path(
    const Graph& g,
    const std::function<std::pair<double, ModelParams>(double)>& family,
    const VertexFunction& u_start, int n_steps, const NewtonConfig& cfg = {});

}  // namespace gcsh
