#ifndef HVMAG_OPTIMIZER_HPP
#define HVMAG_OPTIMIZER_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "hvmag/indicators.hpp"
#include "hvmag/problems.hpp"
#include "hvmag/types.hpp"

namespace hvmag {

/// J^T g normalized to unit Euclidean length, or the zero vector when
/// J^T g = 0.
std::vector<double> pullback_direction(const Matrix& jacobian,
                                       const std::vector<double>& objective_gradient);

/// Orthogonal projection onto the plane of zero component sum:
/// g - mean(g) * (1, 1, 1).
std::vector<double> simplex_tangent_project(const std::vector<double>& g);

/// Euclidean projection onto the unit simplex {z >= 0, sum z = 1}
/// (sorting-based).
std::vector<double> project_simplex(const std::vector<double>& p);

/// Componentwise clamp to [lower, upper].
std::vector<double> project_box(const std::vector<double>& p, const std::vector<double>& lower,
                                const std::vector<double>& upper);

struct LineSearchStep {
    bool accepted = false;
    double eta = 0.0;
    double value = 0.0;
};

using PopulationEvaluator = std::function<double(const std::vector<std::vector<double>>&)>;

/// Improvement threshold for an accepted backtracking step.
inline constexpr double kLineSearchImprovement = 1e-14;

/// Returns the largest eta in {eta0 * shrink^k, k = 0..max_halvings} whose
/// step strictly increases the evaluated indicator by more than the
/// acceptance threshold; otherwise reports rejection.
LineSearchStep backtracking_line_search(const PopulationEvaluator& evaluate,
                                        const std::vector<std::vector<double>>& population,
                                        const std::vector<std::vector<double>>& directions,
                                        double eta0, double shrink, int max_halvings);

enum class Schedule { geometric, backtracking };

enum class Termination { max_iterations, stationary, no_improving_step, step_below_min };

/// Population of decision vectors.
struct Population {
    std::vector<std::vector<double>> members;
};

struct AscentConfig {
    Indicator indicator = Indicator::hv;
    int max_iters = 5000;
    double step_init = 0.08;
    Schedule schedule = Schedule::geometric;
    double decay = 0.9995;  // geometric schedule
    double shrink = 0.5;    // backtracking schedule
    int max_halvings = 45;
    std::uint64_t seed = 0;
    double step_min = 0.0;
    double grad_min = 1e-12;
    // Unit-normalize each pulled-back direction. The first problem's
    // reference runs use the raw pull-back, so this is configurable.
    bool normalize = true;
};

struct AscentIterate {
    int iter = 0;
    std::vector<std::vector<double>> population;
    double value = 0.0;
};

struct AscentTrajectory {
    std::vector<AscentIterate> iterations;
    AscentIterate terminal;
    int accepted_steps = 0;
    Termination termination = Termination::max_iterations;
};

/// Projected set-gradient ascent: map to objective space, translate by the
/// anchor, filter duplicates and dominated points, compute the tie-shared
/// indicator subgradient, pull back per point, step and project. Inactive
/// members receive a zero direction for that iteration.
AscentTrajectory run_ascent(const ProblemHandle& problem, const Population& start,
                            const AscentConfig& config);

}  // namespace hvmag

#endif  // HVMAG_OPTIMIZER_HPP
