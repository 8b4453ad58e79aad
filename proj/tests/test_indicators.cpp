#include <doctest.h>

#include <cmath>
#include <random>

#include "hvmag/geometry.hpp"
#include "hvmag/indicators.hpp"
#include "test_util.hpp"

using namespace hvmag;

TEST_CASE("hv_2d") {
    SUBCASE("three-rectangle union") {
        const ApproximationSet a(2, {{1, 3}, {3, 2}, {5, 1}});
        CHECK(hv_2d(a).value == doctest::Approx(9.0).epsilon(1e-15));
    }
    SUBCASE("single rectangle") {
        const ApproximationSet a(2, {{2, 3}});
        CHECK(hv_2d(a).value == doctest::Approx(6.0).epsilon(1e-15));
    }
    SUBCASE("dominated and duplicate points do not change the union") {
        const ApproximationSet a(2, {{1, 3}, {1, 3}, {0.5, 0.5}, {3, 2}, {5, 1}});
        CHECK(hv_2d(a).value == doctest::Approx(9.0).epsilon(1e-15));
    }
    SUBCASE("empty set and dimension errors") {
        CHECK(hv_2d(ApproximationSet(2)).value == 0.0);
        CHECK_THROWS_AS(hv_2d(ApproximationSet(3)), DimensionMismatch);
    }
    SUBCASE("matches inclusion-exclusion on random sets") {
        std::mt19937_64 rng(23);
        for (int rep = 0; rep < 50; ++rep) {
            const auto a = testutil::random_set(rng, 6, 2, 0.0, 1.0);
            CHECK(hv_2d(a).value ==
                  doctest::Approx(hv_incl_excl(a).value).epsilon(1e-12));
            CHECK(hv_2d(a).value ==
                  doctest::Approx(testutil::grid_measure_oracle(a)).epsilon(1e-12));
        }
    }
}

TEST_CASE("hv_3d") {
    SUBCASE("two overlapping boxes") {
        const ApproximationSet a(3, {{0.5, 1, 1}, {1, 0.5, 1}});
        CHECK(hv_3d(a).value == doctest::Approx(0.75).epsilon(1e-15));
    }
    SUBCASE("centroid orbit is a single cube") {
        const double c = 1.0 / 3;
        ApproximationSet a(3);
        for (int i = 0; i < 6; ++i) a.add({c, c, c});
        CHECK(hv_3d(a).value == doctest::Approx(1.0 / 27).epsilon(1e-15));
    }
    SUBCASE("matches inclusion-exclusion on random sets") {
        std::mt19937_64 rng(29);
        for (int rep = 0; rep < 50; ++rep) {
            const auto a = testutil::random_set(rng, 7, 3, 0.0, 1.0);
            CHECK(hv_3d(a).value ==
                  doctest::Approx(hv_incl_excl(a).value).epsilon(1e-12));
        }
    }
    SUBCASE("boundary points carry no volume") {
        const ApproximationSet a(3, {{1, 1, 0}});
        CHECK(hv_3d(a).value == 0.0);
    }
}

TEST_CASE("hv_incl_excl") {
    SUBCASE("single box") {
        const ApproximationSet a(3, {{2, 3, 4}});
        CHECK(hv_incl_excl(a).value == doctest::Approx(24.0).epsilon(1e-15));
    }
    SUBCASE("level-3 grid") {
        CHECK(hv_incl_excl(das_dennis_grid(3)).value ==
              doctest::Approx(1.0 / 27).epsilon(1e-12));
    }
    SUBCASE("nine-point terminal population") {
        // three vertices plus the six-point interior orbit
        const double r = std::sqrt(13.0);
        const double u = (62 + 5 * r) / 153, v = (43 + r) / 153, w = (48 - 6 * r) / 153;
        ApproximationSet a(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
        a.add({u, v, w});
        a.add({u, w, v});
        a.add({v, u, w});
        a.add({v, w, u});
        a.add({w, u, v});
        a.add({w, v, u});
        CHECK(hv_incl_excl(a).value == doctest::Approx(0.0752901021).epsilon(1e-8));
    }
    SUBCASE("point cap") {
        std::mt19937_64 rng(3);
        const auto a = testutil::random_set(rng, 26, 2);
        CHECK_THROWS_AS(hv_incl_excl(a), TooManyPoints);
    }
}

TEST_CASE("mag_incl_excl") {
    SUBCASE("single box is the product formula") {
        const ApproximationSet a(3, {{2, 2, 2}});
        CHECK(mag_incl_excl(a).value == doctest::Approx(8.0).epsilon(1e-15));
    }
    SUBCASE("level-2 grid") {
        CHECK(mag_incl_excl(das_dennis_grid(2)).value ==
              doctest::Approx(2.6875).epsilon(1e-12));
    }
    SUBCASE("level-3 grid") {
        CHECK(mag_incl_excl(das_dennis_grid(3)).value ==
              doctest::Approx(2.7546296296).epsilon(1e-9));
    }
    SUBCASE("empty set") { CHECK(mag_incl_excl(ApproximationSet(3)).value == 0.0); }
}

TEST_CASE("magnitude_projection") {
    SUBCASE("three-point planar example") {
        const ApproximationSet a(2, {{1, 3}, {3, 2}, {5, 1}});
        CHECK(magnitude_projection(a).value == doctest::Approx(29.0 / 4).epsilon(1e-14));
    }
    SUBCASE("boundary orbit") {
        const double u = 7.0 / 9, v = 2.0 / 9;
        const ApproximationSet a(3, {{u, v, 0}, {u, 0, v}, {v, u, 0}, {v, 0, u}, {0, u, v}, {0, v, u}});
        CHECK(magnitude_projection(a).value == doctest::Approx(43.0 / 18).epsilon(1e-13));
    }
    SUBCASE("level-4 grid") {
        CHECK(magnitude_projection(das_dennis_grid(4)).value ==
              doctest::Approx(2.7890625).epsilon(1e-12));
    }
    SUBCASE("agrees with inclusion-exclusion") {
        std::mt19937_64 rng(31);
        for (int rep = 0; rep < 40; ++rep) {
            const auto a2 = testutil::random_set(rng, 8, 2, 0.0, 1.0);
            const auto a3 = testutil::random_set(rng, 8, 3, 0.0, 1.0);
            CHECK(magnitude_projection(a2).value ==
                  doctest::Approx(mag_incl_excl(a2).value).epsilon(1e-10));
            CHECK(magnitude_projection(a3).value ==
                  doctest::Approx(mag_incl_excl(a3).value).epsilon(1e-10));
        }
    }
    SUBCASE("dimension four uses the oracle per projection") {
        std::mt19937_64 rng(37);
        for (int rep = 0; rep < 10; ++rep) {
            const auto a = testutil::random_set(rng, 6, 4, 0.0, 1.0);
            CHECK(magnitude_projection(a).value ==
                  doctest::Approx(mag_incl_excl(a).value).epsilon(1e-10));
        }
    }
    SUBCASE("empty set") { CHECK(magnitude_projection(ApproximationSet(3)).value == 0.0); }
}

TEST_CASE("box_magnitude") {
    CHECK(box_magnitude({4}).value == doctest::Approx(3.0).epsilon(1e-15));
    CHECK(box_magnitude({2, 2}).value == doctest::Approx(4.0).epsilon(1e-15));
    CHECK(box_magnitude({1, 2, 3}).value == doctest::Approx(7.5).epsilon(1e-15));
    CHECK(box_magnitude({}).value == 1.0);
    CHECK_THROWS_AS(box_magnitude({-1}), NegativeLength);

    SUBCASE("product law") {
        std::mt19937_64 rng(41);
        std::uniform_real_distribution<double> len(0.0, 3.0);
        for (int rep = 0; rep < 20; ++rep) {
            const std::vector<double> a{len(rng), len(rng)};
            const std::vector<double> b{len(rng), len(rng), len(rng)};
            std::vector<double> ab = a;
            ab.insert(ab.end(), b.begin(), b.end());
            CHECK(box_magnitude(ab).value ==
                  doctest::Approx(box_magnitude(a).value * box_magnitude(b).value).epsilon(1e-13));
        }
    }
    SUBCASE("elementary symmetric terms sum to the product") {
        const std::vector<double> lengths{1, 2, 3, 0.5};
        const auto terms = box_magnitude_terms(lengths);
        REQUIRE(terms.size() == 5);
        double sum = 0;
        for (double t : terms) sum += t;
        CHECK(sum == doctest::Approx(box_magnitude(lengths).value).epsilon(1e-14));
        CHECK(terms[0] == 1.0);
        // e_1 / 2 = (1 + 2 + 3 + 0.5) / 2
        CHECK(terms[1] == doctest::Approx(3.25).epsilon(1e-15));
    }
}

TEST_CASE("planar_zero_anchored_magnitude") {
    SUBCASE("worked example") {
        const ApproximationSet a(2, {{1, 3}, {3, 2}, {5, 1}});
        CHECK(planar_zero_anchored_magnitude(a).value == doctest::Approx(7.25).epsilon(1e-15));
    }
    SUBCASE("single rectangle matches the box formula") {
        const ApproximationSet a(2, {{2, 4}});
        CHECK(planar_zero_anchored_magnitude(a).value ==
              doctest::Approx(box_magnitude({2, 4}).value).epsilon(1e-15));
        CHECK(planar_zero_anchored_magnitude(a).value == doctest::Approx(6.0).epsilon(1e-15));
    }
    SUBCASE("agrees with the projection formula") {
        std::mt19937_64 rng(43);
        for (int rep = 0; rep < 20; ++rep) {
            const auto a = testutil::random_set(rng, 7, 2, 0.0, 2.0);
            CHECK(planar_zero_anchored_magnitude(a).value ==
                  doctest::Approx(magnitude_projection(a).value).epsilon(1e-12));
        }
    }
    CHECK_THROWS_AS(planar_zero_anchored_magnitude(ApproximationSet(3)), DimensionMismatch);
}

TEST_CASE("shadow_decomposition") {
    SUBCASE("level-3 grid terms") {
        const auto dec = shadow_decomposition(das_dennis_grid(3));
        REQUIRE(dec.terms.size() == 4);
        CHECK(dec.terms[0] == 1.0);
        CHECK(dec.terms[1] == doctest::Approx(3.0).epsilon(1e-12));
        CHECK(dec.terms[2] == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(dec.terms[3] == doctest::Approx(1.0 / 27).epsilon(1e-12));
    }
    SUBCASE("single planar point") {
        const auto dec = shadow_decomposition(ApproximationSet(2, {{2, 5}}));
        CHECK(dec.terms[1] == doctest::Approx(7.0).epsilon(1e-15));
        CHECK(dec.terms[2] == doctest::Approx(10.0).epsilon(1e-15));
    }
    SUBCASE("orbit face area") {
        const double u = 0.6, v = 0.3, w = 0.1;
        ApproximationSet a(3, {{u, v, w}, {u, w, v}, {v, u, w}, {v, w, u}, {w, u, v}, {w, v, u}});
        const auto dec = shadow_decomposition(a);
        CHECK(dec.terms[2] == doctest::Approx(3 * (2 * u * v - v * v)).epsilon(1e-12));
    }
    SUBCASE("consistency with the magnitude") {
        std::mt19937_64 rng(47);
        for (int rep = 0; rep < 20; ++rep) {
            const auto a = testutil::random_set(rng, 9, 3, 0.0, 1.5);
            CHECK(shadow_decomposition(a).magnitude() ==
                  doctest::Approx(magnitude_projection(a).value).epsilon(1e-10));
        }
    }
    CHECK_THROWS_AS(shadow_decomposition(ApproximationSet(4)), DimensionMismatch);
}

TEST_CASE("finite_space_magnitude") {
    SUBCASE("single point") {
        CHECK(finite_space_magnitude({{1.0, 2.0}}).value == doctest::Approx(1.0).epsilon(1e-15));
    }
    SUBCASE("two points at distance ln(3)") {
        // closed form: 2 / (1 + e^{-d})
        const double d = std::log(3.0);
        CHECK(finite_space_magnitude({{0.0}, {d}}).value == doctest::Approx(1.5).epsilon(1e-12));
    }
    SUBCASE("equispaced interval samples approach 1 + L/2 from below") {
        double prev = 0.0;
        for (std::size_t n : {25, 50, 100, 200}) {
            std::vector<ObjectiveVector> pts;
            for (std::size_t i = 0; i < n; ++i)
                pts.push_back({4.0 * static_cast<double>(i) / static_cast<double>(n - 1)});
            const double mag = finite_space_magnitude(pts).value;
            CHECK(mag > prev);
            CHECK(mag < 3.0);
            prev = mag;
        }
        CHECK(prev > 2.9);
    }
    SUBCASE("duplicates are rejected") {
        CHECK_THROWS_AS(finite_space_magnitude({{1.0, 1.0}, {1.0, 1.0}}),
                        SingularSimilarityMatrix);
    }
    SUBCASE("point cap") {
        std::vector<ObjectiveVector> pts(2001, ObjectiveVector{0.0});
        CHECK_THROWS_AS(finite_space_magnitude(pts), TooManyPoints);
    }
}

TEST_CASE("set monotonicity and Pareto compliance") {
    std::mt19937_64 rng(53);
    std::uniform_int_distribution<std::size_t> dim(2, 3);
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    SUBCASE("weak monotonicity: adding a point never decreases magnitude") {
        for (int rep = 0; rep < 50; ++rep) {
            const std::size_t d = dim(rng);
            auto a = testutil::random_set(rng, 5, d);
            const double before = magnitude_projection(a).value;
            ObjectiveVector p(d);
            for (auto& c : p) c = unit(rng);
            a.add(p);
            CHECK(magnitude_projection(a).value >= before - 1e-12);
        }
    }
    SUBCASE("strict monotonicity for non-weakly-dominated additions") {
        int done = 0;
        while (done < 50) {
            const std::size_t d = dim(rng);
            auto a = testutil::random_set(rng, 5, d, 0.05, 0.9);
            ObjectiveVector p(d);
            for (auto& c : p) c = unit(rng);
            bool dominated = false;
            for (const auto& q : a.points())
                if (weakly_dominates(q, p)) dominated = true;
            if (dominated) continue;
            const double before = magnitude_projection(a).value;
            a.add(p);
            CHECK(magnitude_projection(a).value > before);
            ++done;
        }
    }
    SUBCASE("boundary point raises magnitude but not hypervolume") {
        for (int rep = 0; rep < 20; ++rep) {
            auto a = testutil::random_set(rng, 5, 3);
            double max_x = 0;
            for (const auto& q : a.points()) max_x = std::max(max_x, q[0]);
            const double hv_before = hv_3d(a).value;
            const double mag_before = magnitude_projection(a).value;
            a.add({max_x + 0.25, 0.5, 0.0});  // outside the (1,2)-projection, on the z floor
            CHECK(hv_3d(a).value == doctest::Approx(hv_before).epsilon(1e-15));
            CHECK(magnitude_projection(a).value > mag_before + 1e-9);
        }
    }
    SUBCASE("weak and strict Pareto compliance") {
        std::uniform_real_distribution<double> shrink(0.2, 0.95);
        for (int rep = 0; rep < 50; ++rep) {
            const std::size_t d = dim(rng);
            const auto b = testutil::random_set(rng, 5, d);
            ApproximationSet a(d);
            for (const auto& q : b.points()) {
                ObjectiveVector p(q);
                for (auto& c : p) c *= shrink(rng);
                a.add(p);
            }
            const double mag_a = magnitude_projection(a).value;
            const double mag_b = magnitude_projection(b).value;
            CHECK(mag_a <= mag_b + 1e-12);
            bool strict = false;  // some b not weakly dominated by any a
            for (const auto& q : b.points()) {
                bool dominated = false;
                for (const auto& p : a.points())
                    if (weakly_dominates(p, q)) dominated = true;
                if (!dominated) strict = true;
            }
            if (strict) CHECK(mag_a < mag_b);
        }
    }
}
