#include "hvmag/problems.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "hvmag/geometry.hpp"
#include "hvmag/optimizer.hpp"

namespace hvmag {

namespace {

constexpr double kFrontUpper = 4.0;

void require_sorted_front(const FrontParameterVector& t) {
    if (t.empty()) throw UnsortedParameters("front parameter vector is empty");
    double prev = 0.0;
    for (double v : t) {
        if (v < prev) throw UnsortedParameters("front parameters must be sorted and >= 0");
        prev = v;
    }
    if (t.back() > kFrontUpper)
        throw UnsortedParameters("front parameters must lie in [0, 4]");
}

}  // namespace

ProblemHandle ProblemHandle::make(ProblemName name) {
    ProblemHandle p;
    p.name = name;
    switch (name) {
        case ProblemName::parabola:
            p.decision_dim = 2;
            p.objective_dim = 2;
            p.anchor = {-3.0, 0.0};
            p.box_lower = {-2.0, -2.0};
            p.box_upper = {2.0, 2.0};
            // representative branch x in [0, 2]; y is neutral
            p.ascent_lower = {0.0, -2.0};
            p.ascent_upper = {2.0, 2.0};
            break;
        case ProblemName::quadratic:
            p.decision_dim = 2;
            p.objective_dim = 2;
            p.anchor = {-4.0, -4.0};
            p.box_lower = {-2.0, -2.0};
            p.box_upper = {2.0, 2.0};
            p.ascent_lower = p.box_lower;
            p.ascent_upper = p.box_upper;
            break;
        case ProblemName::simplex3d:
            p.decision_dim = 3;
            p.objective_dim = 3;
            p.anchor = {0.0, 0.0, 0.0};
            p.simplex = true;
            break;
    }
    return p;
}

void ProblemHandle::evaluate(const std::vector<double>& z, ObjectiveVector& objectives,
                             Matrix& jacobian) const {
    if (z.size() != decision_dim)
        throw DimensionMismatch("decision vector dimension does not match the problem");
    if (!contains(z)) throw InfeasiblePoint("decision vector outside the feasible region");
    objectives.assign(objective_dim, 0.0);
    jacobian = Matrix(objective_dim, decision_dim);
    switch (name) {
        case ProblemName::parabola: {
            const double x = z[0];
            objectives[0] = 1.0 - x * x;
            objectives[1] = x * x;
            jacobian(0, 0) = -2.0 * x;
            jacobian(1, 0) = 2.0 * x;
            break;
        }
        case ProblemName::quadratic: {
            const double x = z[0];
            const double y = z[1];
            objectives[0] = 1.0 - (x - 1.0) * (x - 1.0) - y * y;
            objectives[1] = 1.0 - (x + 1.0) * (x + 1.0) - y * y;
            jacobian(0, 0) = -2.0 * (x - 1.0);
            jacobian(0, 1) = -2.0 * y;
            jacobian(1, 0) = -2.0 * (x + 1.0);
            jacobian(1, 1) = -2.0 * y;
            break;
        }
        case ProblemName::simplex3d: {
            objectives = z;
            for (std::size_t i = 0; i < 3; ++i) jacobian(i, i) = 1.0;
            break;
        }
    }
    for (double v : objectives)
        if (!std::isfinite(v)) throw NonFiniteObjective("objective evaluation is not finite");
}

bool ProblemHandle::contains(const std::vector<double>& z, double tol) const {
    if (z.size() != decision_dim) return false;
    if (simplex) {
        double sum = 0.0;
        for (double c : z) {
            if (c < -tol) return false;
            sum += c;
        }
        return std::fabs(sum - 1.0) <= tol;
    }
    for (std::size_t i = 0; i < z.size(); ++i)
        if (z[i] < box_lower[i] - tol || z[i] > box_upper[i] + tol) return false;
    return true;
}

std::vector<double> ProblemHandle::ascent_project(const std::vector<double>& z) const {
    if (simplex) return project_simplex(z);
    return project_box(z, ascent_lower, ascent_upper);
}

double front_hv(const FrontParameterVector& t) {
    require_sorted_front(t);
    double hv = 0.0;
    double prev = 0.0;
    for (double v : t) {
        hv += (v - prev) * (kFrontUpper - v);
        prev = v;
    }
    return hv;
}

std::vector<double> front_hv_gradient(const FrontParameterVector& t) {
    require_sorted_front(t);
    const std::size_t mu = t.size();
    std::vector<double> g(mu, 0.0);
    for (std::size_t i = 0; i + 1 < mu; ++i) {
        const double below = (i == 0) ? 0.0 : t[i - 1];
        g[i] = below + t[i + 1] - 2.0 * t[i];
    }
    const double below = (mu == 1) ? 0.0 : t[mu - 2];
    g[mu - 1] = kFrontUpper - 2.0 * t[mu - 1] + below;
    return g;
}

double front_mag(const FrontParameterVector& t) {
    return 1.0 + 0.5 * (kFrontUpper - t.front() + t.back()) + 0.25 * front_hv(t);
}

std::vector<double> front_mag_gradient(const FrontParameterVector& t) {
    std::vector<double> g = front_hv_gradient(t);
    for (double& v : g) v *= 0.25;
    g.front() -= 0.5;
    g.back() += 0.5;
    return g;
}

std::vector<double> box_tangent_project(const std::vector<double>& gradient,
                                        const std::vector<double>& t, double lower, double upper) {
    std::vector<double> out = gradient;
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (t[i] <= lower && out[i] < 0.0) out[i] = 0.0;
        if (t[i] >= upper && out[i] > 0.0) out[i] = 0.0;
    }
    return out;
}

FrontParameterVector optimal_distribution(Indicator indicator, int mu) {
    if (mu < 1) throw InvalidMu("population size must be >= 1");
    FrontParameterVector t(static_cast<std::size_t>(mu));
    if (indicator == Indicator::hv) {
        for (int i = 1; i <= mu; ++i)
            t[static_cast<std::size_t>(i - 1)] = kFrontUpper * i / (mu + 1.0);
    } else {
        if (mu < 2) throw InvalidMu("the magnitude optimum needs mu >= 2 (both extremes)");
        for (int i = 1; i <= mu; ++i)
            t[static_cast<std::size_t>(i - 1)] = kFrontUpper * (i - 1.0) / (mu - 1.0);
    }
    return t;
}

ApproximationSet orbit_points(double u, double v, double w) {
    if (!(u >= v && v >= w && w >= -1e-15))
        throw InvalidTriple("orbit triple must satisfy u >= v >= w >= 0");
    if (std::fabs(u + v + w - 1.0) > 1e-9)
        throw InvalidTriple("orbit triple must sum to 1");
    w = std::max(w, 0.0);
    ApproximationSet out(3);
    out.add({u, v, w});
    out.add({u, w, v});
    out.add({v, u, w});
    out.add({v, w, u});
    out.add({w, u, v});
    out.add({w, v, u});
    return out;
}

double orbit_hv(double u, double v, double w) {
    orbit_points(u, v, w);  // validates
    return 6.0 * u * v * w - 3.0 * u * w * w - 3.0 * v * v * w + w * w * w;
}

double orbit_mag(double u, double v, double w) {
    return 1.0 + 1.5 * u + 0.75 * (2.0 * u * v - v * v) + orbit_hv(u, v, w) / 8.0;
}

std::array<double, 3> hv_optimal_orbit_triple() {
    const double r = std::sqrt(13.0);
    return {(62.0 + 5.0 * r) / 153.0, (43.0 + r) / 153.0, (48.0 - 6.0 * r) / 153.0};
}

std::array<double, 3> mag_optimal_orbit_triple() { return {7.0 / 9.0, 2.0 / 9.0, 0.0}; }

double das_dennis_closed_form_mag(int level) {
    if (level < 1) throw InvalidLevel("grid level must be >= 1");
    const double h = static_cast<double>(level);
    return 2.5 + 3.0 * (h - 1.0) / (8.0 * h) + (h - 1.0) * (h - 2.0) / (48.0 * h * h);
}

double das_dennis_closed_form_hv(int level) {
    if (level < 1) throw InvalidLevel("grid level must be >= 1");
    if (level < 3) return 0.0;
    const double h = static_cast<double>(level);
    return (h - 1.0) * (h - 2.0) / (6.0 * h * h);
}

ProbeReport stationarity_probe(int level, const ObjectiveVector& point,
                               const std::vector<double>& direction,
                               const std::vector<double>& eps_list) {
    const ApproximationSet grid = das_dennis_grid(level);
    if (point.size() != 3 || direction.size() != 3)
        throw InvalidArgument("probe point and direction must be 3-vectors");
    std::size_t index = grid.size();
    for (std::size_t i = 0; i < grid.size(); ++i)
        if (duplicate_within_tolerance(grid[i], point)) index = i;
    if (index == grid.size()) throw InvalidArgument("probe point is not a grid point");
    const double dir_sum = std::accumulate(direction.begin(), direction.end(), 0.0);
    if (std::fabs(dir_sum) > 1e-12)
        throw InvalidArgument("probe direction must be tangent (components sum to 0)");
    if (eps_list.empty()) throw InvalidArgument("eps list is empty");

    const double base = mag_incl_excl(grid).value;
    ProbeReport report;
    report.samples.reserve(eps_list.size());
    for (double eps : eps_list) {
        if (eps <= 0.0) throw InvalidArgument("eps values must be positive");
        ObjectiveVector moved(3);
        for (std::size_t c = 0; c < 3; ++c) {
            moved[c] = grid[index][c] + eps * direction[c];
            if (moved[c] < -1e-15)
                throw PerturbationLeavesSimplex("perturbed point leaves the simplex at eps " +
                                                std::to_string(eps));
            moved[c] = std::max(moved[c], 0.0);
        }
        ApproximationSet perturbed(3);
        for (std::size_t i = 0; i < grid.size(); ++i)
            perturbed.add(i == index ? moved : grid[i]);
        report.samples.push_back({eps, mag_incl_excl(perturbed).value - base});
    }

    // classify linear vs quadratic decay from the log-log slope, then fit
    // the leading coefficient by least squares on delta ~ c * eps^order
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    std::size_t m = 0;
    for (const auto& s : report.samples) {
        if (std::fabs(s.delta_mag) < 1e-18) continue;
        const double lx = std::log(s.eps);
        const double ly = std::log(std::fabs(s.delta_mag));
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
        ++m;
    }
    if (m >= 2) {
        const double denom = m * sxx - sx * sx;
        const double slope = denom != 0.0 ? (m * sxy - sx * sy) / denom : 0.0;
        report.fitted_order = slope < 1.5 ? 1 : 2;
        double num = 0.0, den = 0.0;
        for (const auto& s : report.samples) {
            const double basis = report.fitted_order == 1 ? s.eps : s.eps * s.eps;
            num += s.delta_mag * basis;
            den += basis * basis;
        }
        report.fitted_coeff = den != 0.0 ? num / den : 0.0;
    }
    return report;
}

}  // namespace hvmag
