#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ellipt/cubic_forms.hpp"

using namespace ellipt;

TEST_CASE("triple-product forms of the projective bundles") {
    CHECK(pe_cubic_form(0) == BinaryCubicForm{0, 3, 0, 0});
    CHECK(pe_cubic_form(1) == BinaryCubicForm{0, 3, -3, 1});
    CHECK(pe_cubic_form(4) == BinaryCubicForm{0, 3, -12, 16});
    CHECK_THROWS_WITH_AS(pe_cubic_form(-1), "pe_cubic_form: n must be >= 0",
                         std::invalid_argument);
}

TEST_CASE("discriminants") {
    // disc(pe_cubic_form(n)) = -27 n^2.
    for (long n = 0; n <= 20; ++n)
        CHECK(cubic_discriminant(pe_cubic_form(n)) == Int(-27) * n * n);
    // X^3 + Y^3 has discriminant -27; XY(X+Y) has discriminant 1.
    CHECK(cubic_discriminant({1, 0, 0, 1}) == -27);
    CHECK(cubic_discriminant({0, 1, 1, 0}) == 1);
    CHECK(cubic_discriminant({1, 0, 0, 0}) == 0);
}

TEST_CASE("discriminant transforms by det^6") {
    std::mt19937_64 rng(41);
    std::uniform_int_distribution<long> coeff(-6, 6);
    for (int trial = 0; trial < 200; ++trial) {
        const BinaryCubicForm f{coeff(rng), coeff(rng), coeff(rng), coeff(rng)};
        const Int p = coeff(rng), q = coeff(rng), r = coeff(rng), s = coeff(rng);
        const Int det = p * s - q * r;
        CHECK(cubic_discriminant(substitute(f, p, q, r, s)) ==
              cubic_discriminant(f) * det * det * det * det * det * det);
    }
}

TEST_CASE("substitution composes like matrix multiplication") {
    const BinaryCubicForm f{2, -1, 3, 5};
    // (f.M1).M2 = f.(M1*M2): here [[0,1],[1,0]] * [[1,1],[0,1]] = [[0,1],[1,1]].
    const BinaryCubicForm two_steps = substitute(substitute(f, 0, 1, 1, 0), 1, 1, 0, 1);
    const BinaryCubicForm one_step = substitute(f, 0, 1, 1, 1);
    CHECK(two_steps == one_step);
    // The identity substitution is the identity.
    CHECK(substitute(f, 1, 0, 0, 1) == f);
}

TEST_CASE("GL2(Z) equivalence verdicts") {
    // Swapping the variables is an equivalence witness.
    const BinaryCubicForm f{1, 2, 3, 4};
    const BinaryCubicForm swapped{4, 3, 2, 1};
    CHECK(gl2z_equivalent(f, swapped, 1) == Gl2zVerdict::equivalent);
    // Distinct n have distinct discriminants: certified inequivalent.
    CHECK(gl2z_equivalent(pe_cubic_form(1), pe_cubic_form(2), 3) ==
          Gl2zVerdict::inequivalent);
    // pe_cubic_form(1) = Y(3X^2 - 3XY + Y^2) really is X^3 + Y^3 in disguise.
    CHECK(gl2z_equivalent(pe_cubic_form(1), BinaryCubicForm{1, 0, 0, 1}, 1) ==
          Gl2zVerdict::equivalent);
    // X^3 vs X^2 Y: equal (zero) discriminants but different root multiplicities,
    // so no witness exists and the bounded search cannot decide.
    CHECK(gl2z_equivalent(BinaryCubicForm{1, 0, 0, 0}, BinaryCubicForm{0, 1, 0, 0}, 2) ==
          Gl2zVerdict::unknown);
    CHECK_THROWS_WITH_AS(gl2z_equivalent(f, f, 0), "entry_bound must be >= 1",
                         std::invalid_argument);
}

TEST_CASE("pairwise classification of the bundles over the plane") {
    for (long n = 0; n <= 20; ++n)
        for (long m = 0; m <= 20; ++m) {
            CHECK(fn_homotopy_equivalent(n, m) == (n == m));
            CHECK(hirzebruch_diffeomorphic(n, m) == ((n - m) % 2 == 0));
            // The certified part of the search agrees with the closed-form rule.
            const Gl2zVerdict v = gl2z_equivalent(pe_cubic_form(n), pe_cubic_form(m), 2);
            if (n == m)
                CHECK(v == Gl2zVerdict::equivalent);
            else
                CHECK(v == Gl2zVerdict::inequivalent);
        }
    CHECK_THROWS_AS(fn_homotopy_equivalent(-1, 0), std::invalid_argument);
    CHECK_THROWS_AS(hirzebruch_diffeomorphic(0, -2), std::invalid_argument);
}

TEST_CASE("cohomology rings reproduce their cubic forms") {
    for (long n = 0; n <= 20; ++n) {
        const GradedRing ring = pe_cohomology_ring(n);
        CHECK(ring.top_degree() == 6);
        CHECK(ring.dim(2) == 2);
        CHECK(ring.dim(4) == 2);
        CHECK(ring.dim(6) == 1);
        CHECK(triple_product_form(ring) == pe_cubic_form(n));
    }
    // y^3 = n^2 x^2*y via y^2 = -n x*y and y * x*y = -n x^2*y.
    const GradedRing r3 = pe_cohomology_ring(3);
    const RingElement y = r3.basis_element(2, 1);
    CHECK((y * y * y).coords() == std::vector<Rat>{Rat(9)});
}

TEST_CASE("triple_product_form rejects rings of the wrong shape") {
    CHECK_THROWS_WITH_AS(
        triple_product_form(truncated_polynomial_ring(3)),
        "triple_product_form: ring must have rank-2 degree 2 and rank-1 degree 6",
        std::invalid_argument);
    CHECK_THROWS_AS(triple_product_form(smooth_quadric_ring(2)), std::invalid_argument);
}
