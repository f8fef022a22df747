#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hc/cyclotomic.hpp"
#include "hc/lattice.hpp"

using namespace hc;

TEST_CASE("metrics on the reference quadruples") {
    // {8,-4,7,4}: the [65|65|80] minimizer
    const auto m1 = metrics({8, -4, 7, 4});
    CHECK(m1.d == 65);
    CHECK(m1.e == 65);
    CHECK(m1.f == 80);
    CHECK(m1.s == 60);

    // degenerate unit element
    const auto m2 = metrics({1, 0, 1, 0});
    CHECK(m2.s == 0);
    CHECK(m2.t == 1);
    CHECK(m2.r == 1);

    // hand-evaluated quadruple
    const auto m3 = metrics({2, 1, 2, 0});
    CHECK(m3.d == 1);
    CHECK(m3.e == 4);
    CHECK(m3.f == 5);
    CHECK(m3.s == 2);
    CHECK(m3.t == 5);
    CHECK(m3.r == 13);
}

TEST_CASE("nonobtuse predicate") {
    CHECK(is_nonobtuse({8, -4, 7, 4}));           // 65+65 >= 80
    CHECK(is_nonobtuse({1, 0, 0, 1}));            // unit right triangle
    CHECK_FALSE(is_nonobtuse({3, 0, 1, 0}));      // collinear
    CHECK_FALSE(is_nonobtuse({5, 0, 1, 0}));      // collinear, longer
    CHECK_FALSE(is_nonobtuse({10, 0, 5, 1}));     // obtuse
}

TEST_CASE("canonical form is constant on orbits and idempotent") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<i64> coord(-50, 50);
    for (int iter = 0; iter < 500; ++iter) {
        const LatticeTriangle t{coord(rng), coord(rng), coord(rng), coord(rng)};
        if (degenerate(t)) continue;
        const auto canon = canonical_form(t);
        CHECK(canonical_form(canon) == canon);
        for (const auto& rep : representations48(t)) CHECK(canonical_form(rep) == canon);
    }
}

TEST_CASE("rotation by 90 degrees preserves the canonical form") {
    const LatticeTriangle t{8, 2, 2, 8};
    const LatticeTriangle rot{-2, 8, -8, 2};
    CHECK(canonical_form(t) == canonical_form(rot));
    // a reflection shares the canonical form as well
    CHECK(canonical_form(LatticeTriangle{8, 2, 2, 8}) ==
          canonical_form(LatticeTriangle{8, -2, 2, -8}));
}

TEST_CASE("unit right triangle canonical form fixed under its dihedral images") {
    const auto canon = canonical_form({0, 1, 1, 0});
    const LatticeTriangle images[] = {{1, 0, 0, 1}, {0, -1, 1, 0}, {-1, 0, 0, 1},
                                      {0, 1, -1, 0}, {1, 0, 0, -1}};
    for (const auto& im : images) CHECK(canonical_form(im) == canon);
}

TEST_CASE("congruence splits the two d2=425 implementations") {
    // both realize [425|425|450]
    const LatticeTriangle impl1{15, 15, -5, 20};
    const LatticeTriangle impl2{21, 3, 8, 19};
    CHECK(type_of(impl1) == TriangleType{425, 425, 450});
    CHECK(type_of(impl2) == TriangleType{425, 425, 450});
    CHECK(is_r2_congruent(impl1, impl2));
    CHECK_FALSE(is_z2_congruent(impl1, impl2));

    CHECK(is_z2_congruent(impl1, impl1));
    CHECK(is_r2_congruent(impl2, impl2));

    // distinct types are congruent in neither sense
    const LatticeTriangle t65{8, -4, 7, 4};   // [65|65|80]
    const LatticeTriangle t68{8, 2, 2, 8};    // [68|68|72]
    CHECK_FALSE(is_r2_congruent(t65, t68));
    CHECK_FALSE(is_z2_congruent(t65, t68));
}

TEST_CASE("norm representations agree on random quadruples") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<i64> coord(-1000, 1000);
    for (int iter = 0; iter < 10000; ++iter) {
        const CyclotomicInt q{coord(rng), coord(rng), coord(rng), coord(rng)};
        const auto m = metrics(q);
        CHECK(norm(q) == m.r);  // norm() itself asserts the three closed forms
        CHECK(m.r == m.t * m.t - 3 * m.s * m.s);
        CHECK(m.r == m.g * m.g + m.h * m.h);
        CHECK(m.r == m.a * m.a + m.a * m.b + m.b * m.b);
    }
}

TEST_CASE("metrics invariant across the 48 images, signature swaps under the swap unit") {
    std::mt19937 rng(13);
    std::uniform_int_distribution<i64> coord(-40, 40);
    for (int iter = 0; iter < 300; ++iter) {
        const LatticeTriangle t{coord(rng), coord(rng), coord(rng), coord(rng)};
        if (degenerate(t)) continue;
        const auto base = metrics(t);
        for (const auto& rep : representations48(t)) {
            const auto m = metrics(rep);
            CHECK(m.s == base.s);
            CHECK(m.r == base.r);
            CHECK(m.a == base.a);
            CHECK(m.b == base.b);
        }
        const auto swapped = metrics(mul(t, kSwapUnit));
        CHECK(swapped.r == base.r);
        CHECK(swapped.a == base.b);
        CHECK(swapped.b == base.a);
    }
}

TEST_CASE("sublattice keys and dihedral orbits") {
    // Z^2 itself is fixed by the whole dihedral group
    CHECK(sublattice_orbit_size({1, 0}, {0, 1}) == 1);
    // the diagonal lattice likewise
    CHECK(sublattice_orbit_size({1, 1}, {1, -1}) == 1);
    // [5|5|10]: rotation-invariant but not reflection-invariant
    CHECK(sublattice_orbit_size({2, 1}, {-1, 2}) == 2);
    // a scalene minimizer has the full four-element orbit
    CHECK(sublattice_orbit_size({10, 2}, {3, 10}) == 4);
    // equal spans give equal keys regardless of the basis
    CHECK(sublattice_key({8, -4}, {7, 4}) == sublattice_key({7, 4}, {1, -8}));
}

TEST_CASE("coordinate limit is enforced") {
    CHECK_THROWS_AS(LatticePoint(i64{1} << 31, 0), OverflowError);
    CHECK_NOTHROW(LatticePoint((i64{1} << 31) - 1, 0));
}
