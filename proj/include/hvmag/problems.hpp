#ifndef HVMAG_PROBLEMS_HPP
#define HVMAG_PROBLEMS_HPP

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "hvmag/indicators.hpp"
#include "hvmag/types.hpp"

namespace hvmag {

enum class ProblemName { parabola, quadratic, simplex3d };

/// One of the benchmark problems: objective map, Jacobian, anchor and
/// feasible region. For simplex3d the decision space is the front itself
/// (identity map on the unit simplex).
struct ProblemHandle {
    ProblemName name = ProblemName::parabola;
    std::size_t decision_dim = 0;
    std::size_t objective_dim = 0;
    AnchorPoint anchor;
    std::vector<double> box_lower;  // empty for the simplex problem
    std::vector<double> box_upper;
    std::vector<double> ascent_lower;  // branch restriction used by the ascent
    std::vector<double> ascent_upper;
    bool simplex = false;

    static ProblemHandle make(ProblemName name);

    /// Objective values and exact Jacobian at z. Throws InfeasiblePoint when
    /// z is outside the feasible region.
    void evaluate(const std::vector<double>& z, ObjectiveVector& objectives,
                  Matrix& jacobian) const;

    bool contains(const std::vector<double>& z, double tol = 1e-9) const;

    /// Projection used between ascent steps (branch box or simplex).
    std::vector<double> ascent_project(const std::vector<double>& z) const;
};

/// Sorted front parameters 0 <= t_1 <= ... <= t_mu <= 4 for the first
/// biobjective problem; the translated front point is (4 - t, t).
using FrontParameterVector = std::vector<double>;

double front_hv(const FrontParameterVector& t);
std::vector<double> front_hv_gradient(const FrontParameterVector& t);

double front_mag(const FrontParameterVector& t);
std::vector<double> front_mag_gradient(const FrontParameterVector& t);

/// Gradient with components pointing out of [0,4] at active bounds zeroed;
/// vanishes at the constrained closed-form optima.
std::vector<double> box_tangent_project(const std::vector<double>& gradient,
                                        const std::vector<double>& t, double lower, double upper);

/// Closed-form indicator-optimal front parameters: t_i = 4i/(mu+1) for
/// hypervolume, t_i = 4(i-1)/(mu-1) for magnitude.
FrontParameterVector optimal_distribution(Indicator indicator, int mu);

/// Six-permutation orbit of (u, v, w) with u >= v >= w >= 0, u+v+w = 1.
ApproximationSet orbit_points(double u, double v, double w);
double orbit_hv(double u, double v, double w);
double orbit_mag(double u, double v, double w);

/// The interior hypervolume maximizer of the symmetric orbit family,
/// evaluated at full precision from its radical form.
std::array<double, 3> hv_optimal_orbit_triple();
std::array<double, 3> mag_optimal_orbit_triple();

/// Magnitude of the dominated region of the complete level-H simplex
/// lattice: 5/2 + 3(H-1)/(8H) + (H-1)(H-2)/(48 H^2).
double das_dennis_closed_form_mag(int level);

/// Hypervolume of the same region: (H-1)(H-2)/(6 H^2).
double das_dennis_closed_form_hv(int level);

struct ProbeSample {
    double eps = 0.0;
    double delta_mag = 0.0;
};

/// fitted_order is 1 (linear) or 2 (quadratic) classified from the log-log
/// slope, or 0 when the samples do not allow classification.
struct ProbeReport {
    int fitted_order = 0;
    double fitted_coeff = 0.0;
    std::vector<ProbeSample> samples;
};

/// Replaces one grid point of G_H by its tangent perturbation point + eps *
/// direction and records the exact magnitude change for every eps, then fits
/// the leading coefficient by least squares.
ProbeReport stationarity_probe(int level, const ObjectiveVector& point,
                               const std::vector<double>& direction,
                               const std::vector<double>& eps_list);

}  // namespace hvmag

#endif  // HVMAG_PROBLEMS_HPP
