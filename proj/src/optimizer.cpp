#include "hvmag/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "hvmag/geometry.hpp"
#include "hvmag/subgradients.hpp"

namespace hvmag {

namespace {

// Squares are summed in value order so the norm is invariant under
// component relabeling down to the last bit.
double norm2(const std::vector<double>& v) {
    std::vector<double> sq(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) sq[i] = v[i] * v[i];
    std::sort(sq.begin(), sq.end());
    double s = 0.0;
    for (double c : sq) s += c;
    return std::sqrt(s);
}

double indicator_value(Indicator indicator, const ApproximationSet& active) {
    if (indicator == Indicator::hv)
        return active.dimension() == 2 ? hv_2d(active).value : hv_3d(active).value;
    return active.dimension() == 2 ? planar_zero_anchored_magnitude(active).value
                                   : magnitude_projection(active).value;
}

SetGradient indicator_subgradient(Indicator indicator, const ApproximationSet& active) {
    return indicator == Indicator::hv ? hv_subgradient_tie_shared(active)
                                      : mag_subgradient(active);
}

// Translated objective vectors, clamped at the anchor plane: a member whose
// objective falls below the anchor in some coordinate is treated as lying on
// the corresponding boundary face.
std::vector<ObjectiveVector> translated_objectives(const ProblemHandle& problem,
                                                   const std::vector<std::vector<double>>& members,
                                                   std::vector<Matrix>* jacobians) {
    std::vector<ObjectiveVector> out(members.size());
    if (jacobians) jacobians->assign(members.size(), Matrix());
    ObjectiveVector f;
    Matrix jac;
    for (std::size_t i = 0; i < members.size(); ++i) {
        problem.evaluate(members[i], f, jac);
        ObjectiveVector y(f.size());
        for (std::size_t c = 0; c < f.size(); ++c)
            y[c] = std::max(f[c] - problem.anchor[c], 0.0);
        out[i] = std::move(y);
        if (jacobians) (*jacobians)[i] = jac;
    }
    return out;
}

double population_value(const ProblemHandle& problem, Indicator indicator,
                        const std::vector<std::vector<double>>& members) {
    const auto objectives = translated_objectives(problem, members, nullptr);
    const auto active = active_indices(objectives);
    ApproximationSet set(problem.objective_dim);
    for (std::size_t i : active) set.add(objectives[i]);
    return indicator_value(indicator, set);
}

}  // namespace

std::vector<double> pullback_direction(const Matrix& jacobian,
                                       const std::vector<double>& objective_gradient) {
    if (jacobian.rows != objective_gradient.size())
        throw DimensionMismatch("Jacobian rows must match gradient dimension");
    std::vector<double> u(jacobian.cols, 0.0);
    for (std::size_t r = 0; r < jacobian.rows; ++r)
        for (std::size_t c = 0; c < jacobian.cols; ++c)
            u[c] += jacobian(r, c) * objective_gradient[r];
    const double n = norm2(u);
    if (n == 0.0) return u;
    for (double& c : u) c /= n;
    return u;
}

std::vector<double> simplex_tangent_project(const std::vector<double>& g) {
    // a vector with equal components projects to exactly zero
    bool all_equal = true;
    for (double c : g)
        if (c != g.front()) all_equal = false;
    if (all_equal) return std::vector<double>(g.size(), 0.0);
    std::vector<double> sorted = g;
    std::sort(sorted.begin(), sorted.end());
    const double mean =
        std::accumulate(sorted.begin(), sorted.end(), 0.0) / static_cast<double>(g.size());
    std::vector<double> out(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) out[i] = g[i] - mean;
    return out;
}

std::vector<double> project_simplex(const std::vector<double>& p) {
    // sorting-based Euclidean projection onto {z >= 0, sum z = 1}
    std::vector<double> u = p;
    std::sort(u.begin(), u.end(), std::greater<double>());
    double cumulative = 0.0;
    double theta = 0.0;
    for (std::size_t j = 0; j < u.size(); ++j) {
        cumulative += u[j];
        const double candidate = (cumulative - 1.0) / static_cast<double>(j + 1);
        if (u[j] - candidate > 0.0) theta = candidate;
    }
    std::vector<double> out(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) out[i] = std::max(p[i] - theta, 0.0);
    return out;
}

std::vector<double> project_box(const std::vector<double>& p, const std::vector<double>& lower,
                                const std::vector<double>& upper) {
    if (lower.size() != p.size() || upper.size() != p.size())
        throw InvalidBounds("bound dimensions must match the point");
    std::vector<double> out(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (lower[i] > upper[i]) throw InvalidBounds("lower bound exceeds upper bound");
        out[i] = std::clamp(p[i], lower[i], upper[i]);
    }
    return out;
}

LineSearchStep backtracking_line_search(const PopulationEvaluator& evaluate,
                                        const std::vector<std::vector<double>>& population,
                                        const std::vector<std::vector<double>>& directions,
                                        double eta0, double shrink, int max_halvings) {
    if (eta0 <= 0.0) throw InvalidArgument("initial step must be positive");
    const double base = evaluate(population);
    double eta = eta0;
    std::vector<std::vector<double>> candidate(population.size());
    for (int k = 0; k <= max_halvings; ++k) {
        for (std::size_t i = 0; i < population.size(); ++i) {
            candidate[i] = population[i];
            for (std::size_t c = 0; c < population[i].size(); ++c)
                candidate[i][c] += eta * directions[i][c];
        }
        const double value = evaluate(candidate);
        if (value > base + kLineSearchImprovement) return {true, eta, value};
        eta *= shrink;
    }
    return {false, 0.0, base};
}

AscentTrajectory run_ascent(const ProblemHandle& problem, const Population& start,
                            const AscentConfig& config) {
    if (start.members.empty()) throw InfeasibleStart("population is empty");
    for (const auto& z : start.members) {
        if (z.size() != problem.decision_dim)
            throw InfeasibleStart("member dimension does not match the problem");
        if (!problem.contains(z)) throw InfeasibleStart("population member outside feasible region");
    }

    std::vector<std::vector<double>> pop(start.members.size());
    for (std::size_t i = 0; i < start.members.size(); ++i)
        pop[i] = problem.ascent_project(start.members[i]);

    AscentTrajectory traj;
    traj.termination = Termination::max_iterations;
    double eta = config.step_init;
    std::vector<Matrix> jacobians;
    std::vector<std::vector<double>> directions(pop.size());

    const PopulationEvaluator evaluate = [&](const std::vector<std::vector<double>>& raw) {
        std::vector<std::vector<double>> projected(raw.size());
        for (std::size_t i = 0; i < raw.size(); ++i) projected[i] = problem.ascent_project(raw[i]);
        return population_value(problem, config.indicator, projected);
    };

    int iter = 0;
    for (; iter < config.max_iters; ++iter) {
        const auto objectives = translated_objectives(problem, pop, &jacobians);
        const auto active = active_indices(objectives);
        ApproximationSet active_set(problem.objective_dim);
        for (std::size_t i : active) active_set.add(objectives[i]);
        const double value = indicator_value(config.indicator, active_set);
        traj.iterations.push_back({iter, pop, value});

        const SetGradient grad = indicator_subgradient(config.indicator, active_set);
        for (auto& dir : directions) dir.assign(problem.decision_dim, 0.0);
        double max_norm = 0.0;
        for (std::size_t k = 0; k < active.size(); ++k) {
            const std::size_t i = active[k];
            std::vector<double> dir(problem.decision_dim, 0.0);
            const Matrix& jac = jacobians[i];
            for (std::size_t r = 0; r < jac.rows; ++r)
                for (std::size_t c = 0; c < jac.cols; ++c)
                    dir[c] += jac(r, c) * grad.per_point[k][r];
            if (problem.simplex) dir = simplex_tangent_project(dir);
            const double n = norm2(dir);
            max_norm = std::max(max_norm, n);
            if (config.normalize) {
                if (n == 0.0)
                    dir.assign(problem.decision_dim, 0.0);
                else
                    for (double& c : dir) c /= n;
            }
            directions[i] = std::move(dir);
        }
        if (max_norm < config.grad_min) {
            traj.termination = Termination::stationary;
            break;
        }

        if (config.schedule == Schedule::geometric) {
            if (config.step_min > 0.0 && eta < config.step_min) {
                traj.termination = Termination::step_below_min;
                break;
            }
            for (std::size_t i = 0; i < pop.size(); ++i) {
                for (std::size_t c = 0; c < problem.decision_dim; ++c)
                    pop[i][c] += eta * directions[i][c];
                pop[i] = problem.ascent_project(pop[i]);
            }
            ++traj.accepted_steps;
            eta *= config.decay;
        } else {
            const LineSearchStep step = backtracking_line_search(
                evaluate, pop, directions, config.step_init, config.shrink, config.max_halvings);
            if (!step.accepted) {
                traj.termination = Termination::no_improving_step;
                break;
            }
            for (std::size_t i = 0; i < pop.size(); ++i) {
                for (std::size_t c = 0; c < problem.decision_dim; ++c)
                    pop[i][c] += step.eta * directions[i][c];
                pop[i] = problem.ascent_project(pop[i]);
            }
            ++traj.accepted_steps;
        }
    }

    traj.terminal = {iter, pop, population_value(problem, config.indicator, pop)};
    return traj;
}

}  // namespace hvmag
