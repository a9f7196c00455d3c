#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "ellipt/graded_ring.hpp"
#include "ellipt/sullivan.hpp"

using namespace ellipt;

namespace {

std::multiset<long> degree_multiset(const SullivanModel& model) {
    std::multiset<long> out;
    for (const auto& g : model.generators) out.insert(g.degree);
    return out;
}

}  // namespace

TEST_CASE("projective spaces: one even and one odd generator") {
    for (long n = 1; n <= 4; ++n) {
        const GradedRing ring = truncated_polynomial_ring(n);
        const SullivanModel model = minimal_model(ring, 2 * n + 1);
        CHECK(degree_multiset(model) == std::multiset<long>{2, 2 * n + 1});
        CHECK(homotopy_ranks(model) == std::map<long, long>{{2, 1}, {2 * n + 1, 1}});
        CHECK(verify_model(ring, model));
        // The relation generator kills x^{n+1}: d(y) = x^{n+1} up to sign.
        const auto& y = model.generators.back();
        REQUIRE(y.differential.size() == 1);
        const auto& [mono, coeff] = *y.differential.begin();
        CHECK(mono == SullivanMonomial{{0, n + 1}});
        CHECK((coeff == 1 || coeff == -1));
    }
}

TEST_CASE("sphere: model stops after degree 3") {
    const GradedRing ring = truncated_polynomial_ring(1);
    const SullivanModel model = minimal_model(ring, 4);
    CHECK(homotopy_ranks(model) == std::map<long, long>{{2, 1}, {3, 1}});
}

TEST_CASE("twisted quadrics: four generators independent of the twist") {
    for (long k = 1; k <= 3; ++k)
        for (long a : {1, -1, 2}) {
            const GradedRing ring = twisted_quadric_ring(k, Rat(a));
            const SullivanModel model = minimal_model(ring, 4 * k);
            CHECK(degree_multiset(model) ==
                  std::multiset<long>{2, 2 * k, 2 * k + 1, 4 * k - 1});
            CHECK(verify_model(ring, model));
        }
}

TEST_CASE("twisted quadric k=2: differentials written out") {
    const GradedRing ring = twisted_quadric_ring(2, Rat(1));
    const SullivanModel model = minimal_model(ring, 8);
    REQUIRE(model.generators.size() == 4);
    const auto& x2 = model.generators[0];
    const auto& x4 = model.generators[1];
    const auto& y5 = model.generators[2];
    const auto& y7 = model.generators[3];
    CHECK(x2.degree == 2);
    CHECK(x4.degree == 4);
    CHECK(x2.differential.empty());
    CHECK(x4.differential.empty());
    // d(y5) = x2*x4 kills the product that is zero in the ring (hv = 0).
    CHECK(y5.degree == 5);
    CHECK(y5.differential == SullivanPolynomial{{{{0, 1}, {1, 1}}, Rat(1)}});
    // d(y7) = -x2^4 + x4^2 enforces h^4 = a v^2 with a = 1.
    CHECK(y7.degree == 7);
    CHECK(y7.differential ==
          SullivanPolynomial{{{{0, 4}}, Rat(-1)}, {{{1, 2}}, Rat(1)}});
}

TEST_CASE("relation coefficients track the twist") {
    // d(y7) = c1 x2^4 + c2 x4^2 must die under phi, and phi(x4^2) = v^2 =
    // (1/a) h^4 while phi(x2^4) = h^4; hence c1/c2 = -1/a exactly.
    for (long a : {1, -1, 2, 3}) {
        const SullivanModel model = minimal_model(twisted_quadric_ring(2, Rat(a)), 8);
        const auto& y7 = model.generators.back();
        const Rat c1 = y7.differential.at({{0, 4}});
        const Rat c2 = y7.differential.at({{1, 2}});
        Rat expected(-1, a);
        expected.canonicalize();
        CHECK(c1 / c2 == expected);
    }
}

TEST_CASE("wedge of two spheres keeps growing") {
    const GradedRing ring = wedge_two_spheres_ring();
    const SullivanModel model = minimal_model(ring, 6);
    CHECK(verify_model(ring, model));
    CHECK(homotopy_ranks(model) ==
          std::map<long, long>{{2, 2}, {3, 3}, {4, 2}, {5, 3}, {6, 6}});
}

TEST_CASE("models are prefix-stable under raising the cutoff") {
    auto check_prefix = [](const GradedRing& ring, long c_small, long c_large) {
        const SullivanModel small = minimal_model(ring, c_small);
        const SullivanModel large = minimal_model(ring, c_large);
        REQUIRE(small.generators.size() <= large.generators.size());
        for (std::size_t i = 0; i < small.generators.size(); ++i) {
            CHECK(small.generators[i].label == large.generators[i].label);
            CHECK(small.generators[i].degree == large.generators[i].degree);
            CHECK(small.generators[i].differential == large.generators[i].differential);
            CHECK(small.generators[i].phi == large.generators[i].phi);
        }
    };
    check_prefix(twisted_quadric_ring(1, Rat(2)), 5, 7);
    // The wedge genuinely grows between the two cutoffs.
    check_prefix(wedge_two_spheres_ring(), 4, 6);
}

TEST_CASE("cutoff validation") {
    const GradedRing ring = truncated_polynomial_ring(2);
    CHECK_THROWS_WITH_AS(minimal_model(ring, 3), "cutoff too small",
                         std::invalid_argument);
    const SullivanModel model = minimal_model(ring, 5);
    // The ellipticity window needs 2 * formal dimension - 1 = 7.
    CHECK_THROWS_WITH_AS(ellipticity_report(model, ring), "cutoff too small",
                         std::invalid_argument);
}

TEST_CASE("ellipticity certificates") {
    {
        const GradedRing ring = truncated_polynomial_ring(2);
        const EllipticityReport rep =
            ellipticity_report(minimal_model(ring, 10), ring);
        CHECK(rep.verdict == "elliptic at cutoff");
        CHECK(rep.total_rank == 2);
        CHECK(rep.chi_pi == 0);
    }
    {
        const GradedRing ring = twisted_quadric_ring(2, Rat(1));
        const EllipticityReport rep =
            ellipticity_report(minimal_model(ring, 15), ring);
        CHECK(rep.verdict == "elliptic at cutoff");
        CHECK(rep.total_rank == 4);
        CHECK(rep.chi_pi == 0);
    }
    {
        const GradedRing ring = wedge_two_spheres_ring();
        const EllipticityReport rep =
            ellipticity_report(minimal_model(ring, 6), ring);
        CHECK(rep.verdict == "inconclusive at cutoff");
        CHECK(rep.chi_pi > 0);
    }
}
