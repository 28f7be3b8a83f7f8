#include <catch2/catch_amalgamated.hpp>

#include <random>

#include <toric/surface.hpp>

using namespace toric;

namespace {

LineBundle o_p2(Int a) {
    return LineBundle(projective_space(2), {a, 0, 0});
}

LineBundle fr_bundle(const Fan& fr, Int a, Int b) {
    return LineBundle(fr, {a, b, 0, 0});
}

}  // namespace

TEST_CASE("self intersections of the standard surfaces") {
    CHECK(self_intersection(o_p2(1)) == 1);
    CHECK(self_intersection(o_p2(3)) == 9);
    CHECK(self_intersection(anticanonical_bundle(del_pezzo_6())) == 6);
    for (Int r = 0; r <= 3; ++r) {
        const Fan fr = hirzebruch(r);
        for (Int a = 0; a <= 3; ++a)
            for (Int b = 0; b <= 3; ++b)
                CHECK(self_intersection(fr_bundle(fr, a, b)) == 2 * a * b - a * a * r);
    }
}

TEST_CASE("intersection product is bilinear and symmetric") {
    std::mt19937_64 rng(31);
    auto coeff = [&]() { return static_cast<Int>(rng() % 7) - 3; };
    const Fan dp6 = del_pezzo_6();
    for (int trial = 0; trial < 60; ++trial) {
        std::vector<Int> ca(6), cb(6);
        for (auto& x : ca) x = coeff();
        for (auto& x : cb) x = coeff();
        const LineBundle a(dp6, ca), b(dp6, cb);
        CHECK(intersection_product(a, b) == intersection_product(b, a));
        CHECK(self_intersection(a + b) ==
              self_intersection(a) + 2 * intersection_product(a, b) + self_intersection(b));
    }
}

TEST_CASE("self intersection agrees with twice the polytope area for nef bundles") {
    CHECK(polytope_double_area(o_p2(1)) == 1);
    CHECK(polytope_double_area(o_p2(3)) == 9);
    CHECK(polytope_double_area(anticanonical_bundle(del_pezzo_6())) == 6);

    std::mt19937_64 rng(37);
    for (const Fan& fan : {hirzebruch(0), hirzebruch(2), del_pezzo_6()}) {
        for (int trial = 0; trial < 60; ++trial) {
            std::vector<Int> c(static_cast<std::size_t>(fan.ray_count()));
            for (auto& x : c) x = static_cast<Int>(rng() % 5) - 1;
            const LineBundle bundle(fan, c);
            if (!is_nef(bundle)) continue;
            CHECK(self_intersection(bundle) == polytope_double_area(bundle));
        }
    }
}

TEST_CASE("k-reduction on the plane") {
    // below the bound: not nef, classified as the plane exception
    for (Int k = 1; k <= 3; ++k)
        for (Int a = k; a < 3 * k; ++a) {
            const auto report = k_reduction_check(o_p2(a), k);
            CHECK_FALSE(report.nef);
            CHECK(report.classification == AdjointClass::MinimalPlaneException);
            CHECK(report.violating_walls.size() == 3);
        }
    // above the bound: nef (the bound itself is the excluded -kK case)
    for (Int k = 1; k <= 3; ++k)
        for (Int a = 3 * k + 1; a <= 3 * k + 3; ++a) {
            const auto report = k_reduction_check(o_p2(a), k);
            CHECK(report.nef);
            CHECK(report.classification == AdjointClass::Nef);
        }
}

TEST_CASE("k-reduction excludes the anticanonical multiple") {
    CHECK_THROWS_AS(k_reduction_check(o_p2(3), 1), PreconditionError);
    CHECK_THROWS_AS(k_reduction_check(-2 * canonical_bundle(del_pezzo_6()), 2),
                    PreconditionError);
}

TEST_CASE("k-reduction on Hirzebruch surfaces") {
    const Fan f2 = hirzebruch(2);
    // a = 1 < 2k with k = 1; pick b so the bundle is 1-jet ample
    const auto report = k_reduction_check(fr_bundle(f2, 1, 3), 1);
    CHECK_FALSE(report.nef);
    CHECK(report.classification == AdjointClass::MinimalRuledException);

    const auto good = k_reduction_check(fr_bundle(f2, 3, 7), 1);
    CHECK(good.nef);
    CHECK(good.classification == AdjointClass::Nef);
}

TEST_CASE("k-reduction on del Pezzo 6") {
    const auto report = k_reduction_check(-2 * canonical_bundle(del_pezzo_6()), 1);
    CHECK(report.nef);
    CHECK(report.classification == AdjointClass::NonMinimal);
    CHECK(report.table == std::vector<Int>(6, 1));
}

TEST_CASE("k-reduction preconditions") {
    CHECK_THROWS_AS(k_reduction_check(LineBundle(projective_space(3), {1, 0, 0, 0}), 1),
                    DimensionError);
    CHECK_THROWS_AS(k_reduction_check(o_p2(1), 2), PreconditionError);
    CHECK_THROWS_AS(k_reduction_check(o_p2(-1), 0), PreconditionError);
}

TEST_CASE("higher adjoint bundles generate jets at fixed points") {
    const LineBundle minus_k = anticanonical_bundle(del_pezzo_6());
    CHECK(higher_adjoint_fixed_point_jets(minus_k, 1));  // K + 3L = -2K
    CHECK(higher_adjoint_simultaneous(minus_k, 1));      // K + 4L = -3K

    const LineBundle conic = o_p2(2);
    CHECK(higher_adjoint_fixed_point_jets(conic, 0));  // K + 2L = O(1)
    CHECK(higher_adjoint_simultaneous(conic, 1));      // K + 4L = O(5)

    const LineBundle f0_11 = fr_bundle(hirzebruch(0), 1, 1);
    CHECK(higher_adjoint_fixed_point_jets(f0_11, 1));
    CHECK(higher_adjoint_simultaneous(f0_11, 1));

    // K + 2L spanned on F1 for L = section + two fibers
    const LineBundle f1_12 = fr_bundle(hirzebruch(1), 1, 2);
    CHECK(higher_adjoint_fixed_point_jets(f1_12, 0));
    CHECK(higher_adjoint_simultaneous(f1_12, 0));
}

TEST_CASE("higher adjoint hypotheses are enforced") {
    const LineBundle line = o_p2(1);  // L^2 = 1 violates the squared bound
    CHECK_THROWS_AS(higher_adjoint_fixed_point_jets(line, 1), PreconditionError);
    const LineBundle spanned_only = fr_bundle(hirzebruch(1), 0, 1);
    CHECK_THROWS_AS(higher_adjoint_fixed_point_jets(spanned_only, 0), PreconditionError);
    CHECK_THROWS_AS(
        higher_adjoint_simultaneous(LineBundle(projective_space(3), {2, 0, 0, 0}), 1),
        DimensionError);
}
