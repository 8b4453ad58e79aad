#ifndef HVMAG_GEOMETRY_HPP
#define HVMAG_GEOMETRY_HPP

#include <cstddef>
#include <vector>

#include "hvmag/types.hpp"

namespace hvmag {

/// Two points are duplicates iff all coordinates agree within this absolute
/// tolerance (gradient ascent produces near-duplicates).
inline constexpr double kDuplicateTolerance = 1e-12;

/// a weakly dominates b: a_i >= b_i for all i (maximization order).
bool weakly_dominates(const ObjectiveVector& a, const ObjectiveVector& b);

/// a strictly dominates b: a weakly dominates b and a != b.
bool strictly_dominates(const ObjectiveVector& a, const ObjectiveVector& b);

bool duplicate_within_tolerance(const ObjectiveVector& a, const ObjectiveVector& b,
                                double tol = kDuplicateTolerance);

/// Subtracts the anchor coordinate-wise so the set becomes zero-anchored.
/// Throws AnchorAbovePoint if any point lies below the anchor in some
/// coordinate (points exactly on the anchor plane are allowed).
ApproximationSet translate_to_anchor(const ApproximationSet& points, const AnchorPoint& anchor);

/// Removes strictly dominated points and collapses duplicates (within
/// kDuplicateTolerance) to one representative. Output is sorted
/// lexicographically ascending so downstream sweeps are deterministic.
ApproximationSet nondominated_filter(const ApproximationSet& points);

/// Indices of points that survive nondominated_filter, preserving the
/// original indexing: for duplicate groups the smallest index is kept.
std::vector<std::size_t> active_indices(const std::vector<ObjectiveVector>& points);

/// Restricts every point to the given coordinate subset.
ApproximationSet project(const ApproximationSet& points, const CoordinateSubset& subset);

/// Complete simplex lattice: all (i/H, j/H, k/H) with nonnegative integers
/// i+j+k = H, in lexicographic order of (i, j). Cardinality (H+1)(H+2)/2.
ApproximationSet das_dennis_grid(int level);

}  // namespace hvmag

#endif  // HVMAG_GEOMETRY_HPP
