#include "hvmag/subgradients.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>

#include "hvmag/geometry.hpp"

namespace hvmag {

namespace {

void require_cap(std::size_t n) {
    if (n > kSubgradientMaxPoints)
        throw TooManyPoints("subgradient enumeration capped at " +
                            std::to_string(kSubgradientMaxPoints) + " points");
}

// Tie-shared inclusion-exclusion hypervolume subgradient over the given
// coordinate set. grad[i][k] accumulates d HV / d p_i[coords[k]]; ties are
// exact floating equalities. Each entry's terms are summed in value order,
// so two points related by a symmetry of the set receive bitwise-identical
// gradients regardless of their labels (symmetric populations then stay
// symmetric under the ascent).
void accumulate_tie_shared(const std::vector<ObjectiveVector>& pts,
                           const std::vector<std::size_t>& coords, double weight,
                           std::vector<ObjectiveVector>& grad) {
    const std::size_t n = pts.size();
    const std::size_t d = coords.size();
    if (n == 0) return;
    const std::uint32_t full = (1u << n) - 1u;
    std::vector<double> mins(d);
    std::vector<std::size_t> members;
    members.reserve(n);
    std::vector<std::vector<double>> terms(n * d);
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        members.clear();
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (1u << i)) members.push_back(i);
        for (std::size_t k = 0; k < d; ++k) {
            double m = pts[members[0]][coords[k]];
            for (std::size_t j = 1; j < members.size(); ++j)
                m = std::min(m, pts[members[j]][coords[k]]);
            mins[k] = m;
        }
        const double sign = (members.size() % 2 == 1) ? 1.0 : -1.0;
        for (std::size_t alpha = 0; alpha < d; ++alpha) {
            double prod = 1.0;
            for (std::size_t beta = 0; beta < d; ++beta)
                if (beta != alpha) prod *= mins[beta];
            if (prod == 0.0) continue;
            std::size_t ties = 0;
            for (std::size_t i : members)
                if (pts[i][coords[alpha]] == mins[alpha]) ++ties;
            const double share = weight * sign * prod / static_cast<double>(ties);
            for (std::size_t i : members)
                if (pts[i][coords[alpha]] == mins[alpha])
                    terms[i * d + alpha].push_back(share);
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t alpha = 0; alpha < d; ++alpha) {
            auto& list = terms[i * d + alpha];
            std::sort(list.begin(), list.end());
            double sum = 0.0;
            for (double t : list) sum += t;
            grad[i][coords[alpha]] += sum;
        }
    }
}

SetGradient zero_gradient(const ApproximationSet& points) {
    SetGradient g;
    g.per_point.assign(points.size(), ObjectiveVector(points.dimension(), 0.0));
    return g;
}

}  // namespace

SetGradient hv_subgradient_tie_shared(const ApproximationSet& points) {
    const std::size_t d = points.dimension();
    if (d != 2 && d != 3)
        throw DimensionMismatch("hv_subgradient_tie_shared supports d in {2, 3}");
    require_cap(points.size());
    SetGradient g = zero_gradient(points);
    std::vector<std::size_t> coords(d);
    for (std::size_t c = 0; c < d; ++c) coords[c] = c;
    accumulate_tie_shared(points.points(), coords, 1.0, g.per_point);
    return g;
}

SetGradient v1_subgradient(const ApproximationSet& points) {
    SetGradient g = zero_gradient(points);
    if (points.empty()) return g;
    const std::size_t d = points.dimension();
    for (std::size_t alpha = 0; alpha < d; ++alpha) {
        double best = points[0][alpha];
        for (std::size_t i = 1; i < points.size(); ++i) best = std::max(best, points[i][alpha]);
        std::size_t ties = 0;
        for (std::size_t i = 0; i < points.size(); ++i)
            if (points[i][alpha] == best) ++ties;
        const double share = 1.0 / static_cast<double>(ties);
        for (std::size_t i = 0; i < points.size(); ++i)
            if (points[i][alpha] == best) g.per_point[i][alpha] = share;
    }
    return g;
}

SetGradient mag_subgradient(const ApproximationSet& points) {
    const std::size_t d = points.dimension();
    if (d != 2 && d != 3) throw DimensionMismatch("mag_subgradient supports d in {2, 3}");
    require_cap(points.size());
    SetGradient g = zero_gradient(points);
    if (points.empty()) return g;

    const SetGradient v1 = v1_subgradient(points);
    if (d == 2) {
        auto area = zero_gradient(points).per_point;
        accumulate_tie_shared(points.points(), {0, 1}, 1.0, area);
        for (std::size_t i = 0; i < points.size(); ++i)
            for (std::size_t c = 0; c < 2; ++c)
                g.per_point[i][c] = 0.5 * v1.per_point[i][c] + 0.25 * area[i][c];
        return g;
    }

    // keep the three plane terms in separate buffers so the per-coordinate
    // combination is a plain two-term sum; this makes the result invariant
    // under coordinate relabeling down to the last bit
    auto a01 = zero_gradient(points).per_point;
    auto a02 = a01, a12 = a01, hv3 = a01;
    accumulate_tie_shared(points.points(), {0, 1}, 1.0, a01);
    accumulate_tie_shared(points.points(), {0, 2}, 1.0, a02);
    accumulate_tie_shared(points.points(), {1, 2}, 1.0, a12);
    accumulate_tie_shared(points.points(), {0, 1, 2}, 1.0, hv3);
    for (std::size_t i = 0; i < points.size(); ++i) {
        for (std::size_t c = 0; c < 3; ++c) {
            const double planes = (a01[i][c] + a02[i][c]) + a12[i][c];
            g.per_point[i][c] = 0.5 * v1.per_point[i][c] + 0.25 * planes + 0.125 * hv3[i][c];
        }
    }
    return g;
}

SetGradient finite_difference_gradient(Indicator indicator, const ApproximationSet& points,
                                       double h) {
    if (h <= 0.0) throw InvalidArgument("finite difference step must be positive");
    const auto eval = [indicator](const ApproximationSet& s) {
        return indicator == Indicator::hv ? hypervolume(s).value : magnitude_projection(s).value;
    };
    SetGradient g = zero_gradient(points);
    std::vector<ObjectiveVector> pts = points.points();
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t c = 0; c < points.dimension(); ++c) {
            const double saved = pts[i][c];
            pts[i][c] = saved + h;
            const double up = eval(ApproximationSet(points.dimension(), pts));
            pts[i][c] = saved - h;
            const double down = eval(ApproximationSet(points.dimension(), pts));
            pts[i][c] = saved;
            g.per_point[i][c] = (up - down) / (2.0 * h);
        }
    }
    return g;
}

}  // namespace hvmag
