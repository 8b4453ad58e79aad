#ifndef HVMAG_SUBGRADIENTS_HPP
#define HVMAG_SUBGRADIENTS_HPP

#include <cstddef>
#include <vector>

#include "hvmag/indicators.hpp"
#include "hvmag/types.hpp"

namespace hvmag {

/// Per-point objective-space (sub)gradient of an indicator, aligned with the
/// input set.
struct SetGradient {
    std::vector<ObjectiveVector> per_point;
};

/// Cap on the subset enumeration used by the exact subgradients.
inline constexpr std::size_t kSubgradientMaxPoints = 20;

/// Exact tie-shared hypervolume subgradient (d in {2, 3}): each
/// inclusion-exclusion term's derivative is split equally among all tied
/// componentwise minimizers. Ties are detected by exact floating equality.
SetGradient hv_subgradient_tie_shared(const ApproximationSet& points);

/// Subgradient of the one-dimensional shadow term V_1 (sum of coordinate
/// maxima), sharing each coordinate's unit mass equally among all maximizers.
SetGradient v1_subgradient(const ApproximationSet& points);

/// Tie-shared magnitude subgradient: (1/2) grad V_1 plus, in 3D, (1/4) of the
/// three projected-area subgradients and (1/8) of the 3D hypervolume
/// subgradient; in 2D, (1/2) grad V_1 + (1/4) grad HV_2.
SetGradient mag_subgradient(const ApproximationSet& points);

/// Central finite differences of the exact indicator, used as a
/// verification oracle.
SetGradient finite_difference_gradient(Indicator indicator, const ApproximationSet& points,
                                       double h);

}  // namespace hvmag

#endif  // HVMAG_SUBGRADIENTS_HPP
