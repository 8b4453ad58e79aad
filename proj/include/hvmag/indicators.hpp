#ifndef HVMAG_INDICATORS_HPP
#define HVMAG_INDICATORS_HPP

#include <cstddef>
#include <vector>

#include "hvmag/types.hpp"

namespace hvmag {

enum class Method { sweep, inclusion_exclusion, projection, closed_form };

enum class Indicator { hv, mag };

/// Scalar result of a hypervolume or magnitude evaluation, with the method
/// that produced it.
struct IndicatorValue {
    double value = 0.0;
    Method method = Method::sweep;
    std::size_t dimension = 0;
};

/// Per-order totals of the projected measures: terms[k] is the sum of
/// HV(project(A, S)) over all size-k coordinate subsets S, with terms[0] = 1
/// for nonempty input. Sum of terms[k] / 2^k recovers the magnitude.
struct ShadowDecomposition {
    std::vector<double> terms;

    double magnitude() const;
};

/// Cap on the subset enumeration (2^n terms).
inline constexpr std::size_t kInclusionExclusionMaxPoints = 25;

/// Cap on the dense similarity solve.
inline constexpr std::size_t kFiniteSpaceMaxPoints = 2000;

/// Area of the dominated staircase union of anchored rectangles; O(n log n).
IndicatorValue hv_2d(const ApproximationSet& points);

/// Volume of the dominated union of anchored boxes, sweeping the third
/// coordinate descending and integrating the maintained 2D staircase area.
IndicatorValue hv_3d(const ApproximationSet& points);

/// Inclusion-exclusion over all nonempty subsets of points; works in any
/// dimension, n <= 25 enforced.
IndicatorValue hv_incl_excl(const ApproximationSet& points);

/// Dispatches to the sweep for d <= 3 and to inclusion-exclusion otherwise.
IndicatorValue hypervolume(const ApproximationSet& points);

/// Inclusion-exclusion magnitude: sum over nonempty J of
/// (-1)^{|J|+1} prod_r (1 + m_r(J)/2) with m(J) the componentwise minimum.
IndicatorValue mag_incl_excl(const ApproximationSet& points);

/// Magnitude as 1 + sum over nonempty coordinate subsets S of
/// 2^{-|S|} HV(project(points, S)). Sweeps per projection for d <= 3,
/// inclusion-exclusion per projection for d >= 4.
IndicatorValue magnitude_projection(const ApproximationSet& points);

/// Magnitude of a single anchored box: prod_i (1 + L_i/2).
IndicatorValue box_magnitude(const std::vector<double>& lengths);

/// Elementary-symmetric expansion of the box magnitude: terms[k] = e_k / 2^k.
std::vector<double> box_magnitude_terms(const std::vector<double>& lengths);

/// 1 + (max_k x_k + max_k y_k)/2 + hv_2d(points)/4 for zero-anchored planar
/// unions.
IndicatorValue planar_zero_anchored_magnitude(const ApproximationSet& points);

/// Shadow terms V_0..V_d for d <= 3.
ShadowDecomposition shadow_decomposition(const ApproximationSet& points);

enum class Metric { l1 };

/// Magnitude of a finite metric space: solves Z w = 1 with
/// Z_ij = exp(-d(a_i, a_j)) and returns sum w_i. Points must be pairwise
/// distinct; a failed solve signals a degenerate configuration.
IndicatorValue finite_space_magnitude(const std::vector<ObjectiveVector>& points,
                                      Metric metric = Metric::l1);

}  // namespace hvmag

#endif  // HVMAG_INDICATORS_HPP
