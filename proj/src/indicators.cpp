#include "hvmag/indicators.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>

#include "hvmag/geometry.hpp"

namespace hvmag {

namespace {

void require_dimension(const ApproximationSet& points, std::size_t d, const char* op) {
    if (points.dimension() != d)
        throw DimensionMismatch(std::string(op) + " requires dimension " + std::to_string(d) +
                                ", got " + std::to_string(points.dimension()));
}

void require_point_cap(std::size_t n, std::size_t cap) {
    if (n > cap)
        throw TooManyPoints("subset enumeration capped at " + std::to_string(cap) +
                            " points, got " + std::to_string(n));
}

// Nondominated 2D staircase keyed by x with strictly decreasing y. Points
// with a nonpositive coordinate span an empty rectangle and are skipped.
using Staircase = std::map<double, double>;

void stair_insert(Staircase& s, double x, double y) {
    if (x <= 0.0 || y <= 0.0) return;
    auto it = s.lower_bound(x);
    if (it != s.end() && it->second >= y) return;  // dominated by (x', y'), x' >= x
    if (it != s.end() && it->first == x) it = s.erase(it);
    while (it != s.begin()) {
        auto prev = std::prev(it);
        if (prev->second <= y)
            it = s.erase(prev);
        else
            break;
    }
    s.emplace_hint(it, x, y);
}

double stair_area(const Staircase& s) {
    double area = 0.0;
    double prev_x = 0.0;
    for (const auto& [x, y] : s) {
        area += (x - prev_x) * y;
        prev_x = x;
    }
    return area;
}

double hv_1d_value(const ApproximationSet& points, std::size_t coord) {
    double m = 0.0;
    for (const auto& p : points.points()) m = std::max(m, p[coord]);
    return m;
}

double hv_2d_value(const std::vector<ObjectiveVector>& pts, std::size_t cx, std::size_t cy) {
    Staircase s;
    for (const auto& p : pts) stair_insert(s, p[cx], p[cy]);
    return stair_area(s);
}

double hv_3d_value(const std::vector<ObjectiveVector>& pts) {
    std::vector<const ObjectiveVector*> order;
    order.reserve(pts.size());
    for (const auto& p : pts)
        if (p[2] > 0.0) order.push_back(&p);
    std::sort(order.begin(), order.end(),
              [](const ObjectiveVector* a, const ObjectiveVector* b) { return (*a)[2] > (*b)[2]; });

    Staircase s;
    double volume = 0.0;
    std::size_t i = 0;
    while (i < order.size()) {
        const double z = (*order[i])[2];
        for (; i < order.size() && (*order[i])[2] == z; ++i)
            stair_insert(s, (*order[i])[0], (*order[i])[1]);
        const double z_next = (i < order.size()) ? (*order[i])[2] : 0.0;
        volume += stair_area(s) * (z - z_next);
    }
    return volume;
}

// Clamps coordinates at zero: a box with a negative upper corner coordinate
// is empty, and clamping normalizes it to the anchor plane.
std::vector<ObjectiveVector> clamped_points(const ApproximationSet& points) {
    std::vector<ObjectiveVector> pts = points.points();
    for (auto& p : pts)
        for (auto& c : p) c = std::max(c, 0.0);
    return pts;
}

// Sum over all nonempty subsets via depth-first enumeration with a running
// componentwise minimum; term(mins) supplies the per-subset factor.
template <typename Term>
double incl_excl_sum(const std::vector<ObjectiveVector>& pts, const Term& term) {
    const std::size_t n = pts.size();
    if (n == 0) return 0.0;
    const std::size_t d = pts[0].size();
    std::vector<ObjectiveVector> mins(n + 1, ObjectiveVector(d, 0.0));
    double total = 0.0;
    auto rec = [&](auto&& self, std::size_t start, std::size_t depth) -> void {
        for (std::size_t i = start; i < n; ++i) {
            for (std::size_t c = 0; c < d; ++c)
                mins[depth + 1][c] =
                    depth == 0 ? pts[i][c] : std::min(mins[depth][c], pts[i][c]);
            const double sign = (depth % 2 == 0) ? 1.0 : -1.0;
            total += sign * term(mins[depth + 1]);
            self(self, i + 1, depth + 1);
        }
    };
    rec(rec, 0, 0);
    return total;
}

double dispatch_hv(const ApproximationSet& points) {
    switch (points.dimension()) {
        case 1:
            return std::max(0.0, hv_1d_value(points, 0));
        case 2:
            return hv_2d_value(points.points(), 0, 1);
        case 3:
            return hv_3d_value(points.points());
        default:
            return hv_incl_excl(points).value;
    }
}

}  // namespace

double ShadowDecomposition::magnitude() const {
    double total = 0.0;
    double weight = 1.0;
    for (double t : terms) {
        total += t * weight;
        weight *= 0.5;
    }
    return total;
}

IndicatorValue hv_2d(const ApproximationSet& points) {
    require_dimension(points, 2, "hv_2d");
    return {hv_2d_value(points.points(), 0, 1), Method::sweep, 2};
}

IndicatorValue hv_3d(const ApproximationSet& points) {
    require_dimension(points, 3, "hv_3d");
    return {hv_3d_value(points.points()), Method::sweep, 3};
}

IndicatorValue hv_incl_excl(const ApproximationSet& points) {
    require_point_cap(points.size(), kInclusionExclusionMaxPoints);
    const auto pts = clamped_points(points);
    const double value = incl_excl_sum(pts, [](const ObjectiveVector& m) {
        double prod = 1.0;
        for (double c : m) prod *= c;
        return prod;
    });
    return {value, Method::inclusion_exclusion, points.dimension()};
}

IndicatorValue hypervolume(const ApproximationSet& points) {
    const Method method = points.dimension() <= 3 ? Method::sweep : Method::inclusion_exclusion;
    return {dispatch_hv(points), method, points.dimension()};
}

IndicatorValue mag_incl_excl(const ApproximationSet& points) {
    require_point_cap(points.size(), kInclusionExclusionMaxPoints);
    if (points.empty()) return {0.0, Method::inclusion_exclusion, points.dimension()};
    const auto pts = clamped_points(points);
    const double value = incl_excl_sum(pts, [](const ObjectiveVector& m) {
        double prod = 1.0;
        for (double c : m) prod *= 1.0 + 0.5 * c;
        return prod;
    });
    return {value, Method::inclusion_exclusion, points.dimension()};
}

IndicatorValue magnitude_projection(const ApproximationSet& points) {
    const std::size_t d = points.dimension();
    if (points.empty()) return {0.0, Method::projection, d};
    double total = 1.0;
    const std::uint32_t full = (1u << d) - 1u;
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        CoordinateSubset subset;
        for (std::size_t c = 0; c < d; ++c)
            if (mask & (1u << c)) subset.push_back(c);
        const ApproximationSet shadow = project(points, subset);
        double hv = 0.0;
        if (d <= 3) {
            switch (subset.size()) {
                case 1:
                    hv = std::max(0.0, hv_1d_value(shadow, 0));
                    break;
                case 2:
                    hv = hv_2d_value(shadow.points(), 0, 1);
                    break;
                default:
                    hv = hv_3d_value(shadow.points());
                    break;
            }
        } else {
            hv = hv_incl_excl(shadow).value;
        }
        total += hv / static_cast<double>(1u << subset.size());
    }
    return {total, Method::projection, d};
}

IndicatorValue box_magnitude(const std::vector<double>& lengths) {
    double prod = 1.0;
    for (double len : lengths) {
        if (len < 0.0) throw NegativeLength("box side lengths must be nonnegative");
        prod *= 1.0 + 0.5 * len;
    }
    return {prod, Method::closed_form, lengths.size()};
}

std::vector<double> box_magnitude_terms(const std::vector<double>& lengths) {
    // coefficients of prod_i (1 + (L_i / 2) x); terms[k] = e_k / 2^k
    std::vector<double> terms{1.0};
    for (double len : lengths) {
        if (len < 0.0) throw NegativeLength("box side lengths must be nonnegative");
        terms.push_back(0.0);
        for (std::size_t k = terms.size() - 1; k >= 1; --k)
            terms[k] += terms[k - 1] * 0.5 * len;
    }
    return terms;
}

IndicatorValue planar_zero_anchored_magnitude(const ApproximationSet& points) {
    require_dimension(points, 2, "planar_zero_anchored_magnitude");
    if (points.empty()) return {0.0, Method::closed_form, 2};
    const double x_max = std::max(0.0, hv_1d_value(points, 0));
    const double y_max = std::max(0.0, hv_1d_value(points, 1));
    const double area = hv_2d_value(points.points(), 0, 1);
    return {1.0 + 0.5 * (x_max + y_max) + 0.25 * area, Method::closed_form, 2};
}

ShadowDecomposition shadow_decomposition(const ApproximationSet& points) {
    const std::size_t d = points.dimension();
    if (d > 3) throw DimensionMismatch("shadow_decomposition supports d <= 3");
    ShadowDecomposition out;
    out.terms.assign(d + 1, 0.0);
    if (points.empty()) return out;
    out.terms[0] = 1.0;
    const std::uint32_t full = (1u << d) - 1u;
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        CoordinateSubset subset;
        for (std::size_t c = 0; c < d; ++c)
            if (mask & (1u << c)) subset.push_back(c);
        const ApproximationSet shadow = project(points, subset);
        double hv = 0.0;
        switch (subset.size()) {
            case 1:
                hv = std::max(0.0, hv_1d_value(shadow, 0));
                break;
            case 2:
                hv = hv_2d_value(shadow.points(), 0, 1);
                break;
            default:
                hv = hv_3d_value(shadow.points());
                break;
        }
        out.terms[subset.size()] += hv;
    }
    return out;
}

IndicatorValue finite_space_magnitude(const std::vector<ObjectiveVector>& points, Metric metric) {
    (void)metric;  // only l1 is defined
    const std::size_t n = points.size();
    if (n > kFiniteSpaceMaxPoints)
        throw TooManyPoints("finite_space_magnitude capped at " +
                            std::to_string(kFiniteSpaceMaxPoints) + " points");
    if (n == 0) return {0.0, Method::closed_form, 0};
    const std::size_t d = points[0].size();
    for (const auto& p : points)
        if (p.size() != d) throw DimensionMismatch("points must share one dimension");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (points[i] == points[j])
                throw SingularSimilarityMatrix("duplicate points make the similarity matrix singular");

    Eigen::MatrixXd z(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        z(i, i) = 1.0;
        for (std::size_t j = i + 1; j < n; ++j) {
            double dist = 0.0;
            for (std::size_t c = 0; c < d; ++c) dist += std::fabs(points[i][c] - points[j][c]);
            const double sim = std::exp(-dist);
            z(i, j) = sim;
            z(j, i) = sim;
        }
    }
    const Eigen::VectorXd ones = Eigen::VectorXd::Ones(static_cast<Eigen::Index>(n));
    Eigen::LDLT<Eigen::MatrixXd> solver(z);
    if (solver.info() != Eigen::Success)
        throw SingularSimilarityMatrix("similarity matrix factorization failed");
    const Eigen::VectorXd w = solver.solve(ones);
    if (!w.allFinite() || (z * w - ones).cwiseAbs().maxCoeff() > 1e-8 * std::max(1.0, w.cwiseAbs().maxCoeff()))
        throw SingularSimilarityMatrix("similarity matrix solve failed (degenerate configuration)");
    return {w.sum(), Method::closed_form, d};
}

}  // namespace hvmag
