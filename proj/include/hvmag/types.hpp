#ifndef HVMAG_TYPES_HPP
#define HVMAG_TYPES_HPP

#include <cmath>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "hvmag/errors.hpp"

namespace hvmag {

inline constexpr const char* kVersion = "1.0.0";

/// A point in objective space (maximization order). After translation to an
/// anchor point every coordinate is nonnegative.
using ObjectiveVector = std::vector<double>;

/// Common lower corner from which dominated boxes are measured.
using AnchorPoint = std::vector<double>;

/// Strictly increasing 0-based coordinate indices.
using CoordinateSubset = std::vector<std::size_t>;

/// Finite set of equal-dimension objective vectors generating a dominated
/// union of anchored boxes. May contain dominated or duplicate points;
/// filtering is an explicit operation.
class ApproximationSet {
public:
    ApproximationSet() = default;

    explicit ApproximationSet(std::size_t dimension) : dimension_(dimension) {}

    ApproximationSet(std::size_t dimension, std::vector<ObjectiveVector> points)
        : dimension_(dimension) {
        points_.reserve(points.size());
        for (auto& p : points) add(std::move(p));
    }

    void add(ObjectiveVector point) {
        if (point.size() != dimension_)
            throw DimensionMismatch("point dimension " + std::to_string(point.size()) +
                                    " does not match set dimension " + std::to_string(dimension_));
        for (double c : point)
            if (!std::isfinite(c)) throw NonFiniteCoordinate("objective coordinate is not finite");
        points_.push_back(std::move(point));
    }

    std::size_t dimension() const { return dimension_; }
    std::size_t size() const { return points_.size(); }
    bool empty() const { return points_.empty(); }
    const std::vector<ObjectiveVector>& points() const { return points_; }
    const ObjectiveVector& operator[](std::size_t i) const { return points_[i]; }

private:
    std::size_t dimension_ = 0;
    std::vector<ObjectiveVector> points_;
};

/// Dense row-major matrix, used for objective Jacobians (rows = objectives,
/// cols = decision variables).
struct Matrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> data;

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0.0) {}

    double& operator()(std::size_t r, std::size_t c) { return data[r * cols + c]; }
    double operator()(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
};

}  // namespace hvmag

#endif  // HVMAG_TYPES_HPP
