#include "hvmag/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>

namespace hvmag {

bool weakly_dominates(const ObjectiveVector& a, const ObjectiveVector& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] < b[i]) return false;
    return true;
}

bool strictly_dominates(const ObjectiveVector& a, const ObjectiveVector& b) {
    return a != b && weakly_dominates(a, b);
}

bool duplicate_within_tolerance(const ObjectiveVector& a, const ObjectiveVector& b, double tol) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (std::fabs(a[i] - b[i]) > tol) return false;
    return true;
}

ApproximationSet translate_to_anchor(const ApproximationSet& points, const AnchorPoint& anchor) {
    if (anchor.size() != points.dimension())
        throw DimensionMismatch("anchor dimension does not match point dimension");
    ApproximationSet out(points.dimension());
    for (const auto& p : points.points()) {
        ObjectiveVector q(p.size());
        for (std::size_t c = 0; c < p.size(); ++c) {
            if (p[c] < anchor[c])
                throw AnchorAbovePoint("point coordinate " + std::to_string(c + 1) +
                                       " lies below the anchor");
            q[c] = p[c] - anchor[c];
        }
        out.add(std::move(q));
    }
    return out;
}

std::vector<std::size_t> active_indices(const std::vector<ObjectiveVector>& points) {
    const std::size_t n = points.size();
    std::vector<bool> alive(n, true);
    // collapse duplicate groups onto the smallest index
    for (std::size_t i = 0; i < n; ++i) {
        if (!alive[i]) continue;
        for (std::size_t j = i + 1; j < n; ++j) {
            if (alive[j] && duplicate_within_tolerance(points[i], points[j])) alive[j] = false;
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (!alive[i]) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (j != i && strictly_dominates(points[j], points[i])) {
                alive[i] = false;
                break;
            }
        }
    }
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < n; ++i)
        if (alive[i]) out.push_back(i);
    return out;
}

ApproximationSet nondominated_filter(const ApproximationSet& points) {
    std::vector<ObjectiveVector> pts = points.points();
    std::sort(pts.begin(), pts.end());
    const auto keep = active_indices(pts);
    ApproximationSet out(points.dimension());
    for (std::size_t i : keep) out.add(pts[i]);
    return out;
}

ApproximationSet project(const ApproximationSet& points, const CoordinateSubset& subset) {
    for (std::size_t k = 0; k < subset.size(); ++k) {
        if (subset[k] >= points.dimension())
            throw IndexOutOfRange("coordinate index " + std::to_string(subset[k]) +
                                  " out of range for dimension " +
                                  std::to_string(points.dimension()));
        if (k > 0 && subset[k] <= subset[k - 1])
            throw IndexOutOfRange("coordinate subset must be strictly increasing");
    }
    ApproximationSet out(subset.size());
    for (const auto& p : points.points()) {
        ObjectiveVector q(subset.size());
        for (std::size_t k = 0; k < subset.size(); ++k) q[k] = p[subset[k]];
        out.add(std::move(q));
    }
    return out;
}

ApproximationSet das_dennis_grid(int level) {
    if (level < 1) throw InvalidLevel("grid level must be >= 1");
    const double h = static_cast<double>(level);
    ApproximationSet out(3);
    for (int i = 0; i <= level; ++i) {
        for (int j = 0; j <= level - i; ++j) {
            const int k = level - i - j;
            out.add({i / h, j / h, k / h});
        }
    }
    return out;
}

}  // namespace hvmag
