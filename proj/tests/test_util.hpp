#ifndef HVMAG_TEST_UTIL_HPP
#define HVMAG_TEST_UTIL_HPP

#include <algorithm>
#include <cstddef>
#include <random>
#include <vector>

#include "hvmag/types.hpp"

namespace hvmag::testutil {

inline ApproximationSet random_set(std::mt19937_64& rng, std::size_t n, std::size_t d,
                                   double lo = 0.05, double hi = 1.0) {
    std::uniform_real_distribution<double> coord(lo, hi);
    ApproximationSet out(d);
    for (std::size_t i = 0; i < n; ++i) {
        ObjectiveVector p(d);
        for (auto& c : p) c = coord(rng);
        out.add(std::move(p));
    }
    return out;
}

// Independent measure oracle: decompose [0, max]^d into the grid spanned by
// all point coordinates; a cell lies in the dominated union iff its upper
// corner is weakly dominated by some generating point. Exact for unions of
// anchored boxes; exponential in d, for small inputs only.
inline double grid_measure_oracle(const ApproximationSet& set) {
    const std::size_t d = set.dimension();
    if (set.empty()) return 0.0;
    std::vector<std::vector<double>> cuts(d);
    for (std::size_t c = 0; c < d; ++c) {
        cuts[c].push_back(0.0);
        for (const auto& p : set.points())
            if (p[c] > 0.0) cuts[c].push_back(p[c]);
        std::sort(cuts[c].begin(), cuts[c].end());
        cuts[c].erase(std::unique(cuts[c].begin(), cuts[c].end()), cuts[c].end());
    }
    std::vector<std::size_t> idx(d, 1);
    double total = 0.0;
    while (true) {
        double cell = 1.0;
        ObjectiveVector upper(d);
        bool valid = true;
        for (std::size_t c = 0; c < d; ++c) {
            if (idx[c] >= cuts[c].size()) {
                valid = false;
                break;
            }
            upper[c] = cuts[c][idx[c]];
            cell *= cuts[c][idx[c]] - cuts[c][idx[c] - 1];
        }
        if (valid) {
            for (const auto& p : set.points()) {
                bool covered = true;
                for (std::size_t c = 0; c < d; ++c)
                    if (upper[c] > p[c]) {
                        covered = false;
                        break;
                    }
                if (covered) {
                    total += cell;
                    break;
                }
            }
        }
        // advance the mixed-radix cell index
        std::size_t c = 0;
        for (; c < d; ++c) {
            if (++idx[c] < cuts[c].size()) break;
            idx[c] = 1;
        }
        if (c == d) break;
    }
    return total;
}

// Measure of the S-projection of the dominated union, computed from the
// full-dimensional cell decomposition (not by projecting the points): an
// S-cell is covered iff some covered full-dimensional cell projects onto it.
inline double projected_measure_oracle(const ApproximationSet& set, const CoordinateSubset& s) {
    const std::size_t d = set.dimension();
    std::vector<std::vector<double>> cuts(d);
    for (std::size_t c = 0; c < d; ++c) {
        cuts[c].push_back(0.0);
        for (const auto& p : set.points())
            if (p[c] > 0.0) cuts[c].push_back(p[c]);
        std::sort(cuts[c].begin(), cuts[c].end());
        cuts[c].erase(std::unique(cuts[c].begin(), cuts[c].end()), cuts[c].end());
    }
    std::vector<std::size_t> idx(d, 1);
    std::vector<std::vector<std::size_t>> covered_s_cells;
    while (true) {
        ObjectiveVector upper(d);
        bool valid = true;
        for (std::size_t c = 0; c < d; ++c) {
            if (idx[c] >= cuts[c].size()) {
                valid = false;
                break;
            }
            upper[c] = cuts[c][idx[c]];
        }
        if (valid) {
            for (const auto& p : set.points()) {
                bool covered = true;
                for (std::size_t c = 0; c < d; ++c)
                    if (upper[c] > p[c]) {
                        covered = false;
                        break;
                    }
                if (covered) {
                    std::vector<std::size_t> key;
                    for (std::size_t c : s) key.push_back(idx[c]);
                    covered_s_cells.push_back(std::move(key));
                    break;
                }
            }
        }
        std::size_t c = 0;
        for (; c < d; ++c) {
            if (++idx[c] < cuts[c].size()) break;
            idx[c] = 1;
        }
        if (c == d) break;
    }
    std::sort(covered_s_cells.begin(), covered_s_cells.end());
    covered_s_cells.erase(std::unique(covered_s_cells.begin(), covered_s_cells.end()),
                          covered_s_cells.end());
    double total = 0.0;
    for (const auto& key : covered_s_cells) {
        double cell = 1.0;
        for (std::size_t k = 0; k < s.size(); ++k) {
            const auto& axis = cuts[s[k]];
            cell *= axis[key[k]] - axis[key[k] - 1];
        }
        total += cell;
    }
    return total;
}

}  // namespace hvmag::testutil

#endif  // HVMAG_TEST_UTIL_HPP
