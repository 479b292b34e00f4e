#pragma once

/// @file param.hpp
/// @brief Exact solving of perturbed inclusions b in Ax + (subdifferential
///        at x), a seeded sensitivity experiment around a degenerate anchor,
///        and accessibility witness sequences for graph points.

#include <cstdint>
#include <string>
#include <vector>

#include "subjetlab/rng.hpp"
#include "subjetlab/subdiff.hpp"

namespace subjetlab {

// Solution set of b in Ax + v over a graph piece: the piece's product
// polyhedron intersected with the affine constraint Ax + v = b. Pieces
// enter through their closures.
struct SolveOutcome {
  std::size_t piece = 0;
  VRep set;  // nonempty solution set inside the piece, points (x, v)
  int dim = kDimEmpty;
};

struct SolveReport {
  std::vector<SolveOutcome> outcomes;
  bool empty = false;         // no piece meets the constraint
  bool any_infinite = false;  // some outcome has positive dimension
  bool finite = false;        // nonempty and every outcome is a single point
  std::vector<RatVec> points;  // deduped isolated solutions (x, v)
};

// Requires product pieces; throws otherwise.
SolveReport solve_inclusion(const std::vector<GraphPiece>& graph,
                            const std::vector<RatVec>& A, const RatVec& b);

// Perturbs (A, b) over a uniform grid in a max-norm box scaled so the full
// perturbation vector stays within delta in Euclidean norm, solves each
// trial exactly, and reports how often the solution set is finite with a
// solution near the anchor pair. Near events ask for a solution whose
// subgradient part lies within eps of the anchor subgradient in the max
// norm; joint events additionally ask the same of the point part.
struct SensitivityReport {
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  Rational eps;
  Rational delta;
  Rational grid_step;        // per-entry grid spacing of the perturbation
  std::string anchor_class;  // "empty", "finite", or "infinite" at the anchor itself
  std::size_t count_empty = 0;
  std::size_t count_infinite = 0;
  std::size_t count_finite = 0;
  std::size_t count_near_subgradient = 0;
  std::size_t count_joint_ball = 0;
  double frac_infinite = 0.0;
  double frac_near_subgradient = 0.0;
  double frac_joint_ball = 0.0;
};

SensitivityReport sensitivity_experiment(const std::vector<GraphPiece>& graph,
                                         const std::vector<RatVec>& Abar, const RatVec& bbar,
                                         const RatVec& xbar, const RatVec& vbar,
                                         const Rational& eps, const Rational& delta,
                                         std::size_t trials, std::uint64_t seed);

// Accessibility of a limiting-graph point (xbar, vbar) by pairs
// (x_i, v_i) with v_i a regular subgradient at x_i and x_i != xbar,
// converging to the target with strictly decreasing triple distance
// (point, value, subgradient). Routes:
//   proximal  - vbar is a regular subgradient on the boundary of the
//               pointwise subdifferential: tilt targets slightly outside
//               and minimize f(x) - y.x + 2m|x - xbar|^2 exactly over
//               every cell face, with multiplier schedule m_i = 2^i;
//   piece     - the graph over xbar is lower-dimensional or vbar sits on
//               the boundary: walk into the relative interior of a
//               regular-graph piece whose closure holds the target;
//   refused   - interior target of a full-dimensional subdifferential, or
//               the target pair is not in the limiting graph.
// Every witness is re-verified through the subdifferential engine.
enum class AccessRoute { proximal, piece, refused };

struct AccessWitness {
  RatVec x;
  Rational fx;
  RatVec v;
  Rational dist_sq;  // squared triple distance to (xbar, f(xbar), vbar)
};

struct AccessReport {
  AccessRoute route = AccessRoute::refused;
  std::string explanation;
  bool limiting_member = false;
  bool frechet_member = false;
  bool on_boundary = false;   // vbar on the boundary of the pointwise subdifferential
  int fiber_dim = kDimEmpty;  // max dimension of the subdifferential union at xbar
  std::vector<AccessWitness> witnesses;
  bool distances_decreasing = false;
  bool success = false;
  Rational final_dist_sq;  // meaningful when witnesses are nonempty
};

AccessReport access_point(const PiecewiseFunction& f, const RatVec& xbar, const RatVec& vbar,
                          std::size_t steps, const Rational& tol_sq);

}  // namespace subjetlab
