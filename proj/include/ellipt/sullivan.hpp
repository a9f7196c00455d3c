// Degree-by-degree construction of the minimal Sullivan model of a formal
// space from its cohomology ring (target cochain algebra = the ring with
// zero differential). Generator counts per degree are the ranks of the
// rational homotopy groups; an ellipticity certificate summarizes them.
#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ellipt/graded_ring.hpp"
#include "ellipt/rational.hpp"

namespace ellipt {

// Monomial in the free graded-commutative algebra: sorted sparse exponent
// vector over generator indices. Odd-degree generators never carry an
// exponent above 1.
using SullivanMonomial = std::vector<std::pair<std::size_t, long>>;

// Sparse polynomial with exact rational coefficients, keyed canonically.
using SullivanPolynomial = std::map<SullivanMonomial, Rat>;

struct SullivanGenerator {
    std::string label;
    long degree = 0;
    // Differential: a polynomial of degree `degree` + 1 in strictly earlier
    // generators. Empty for cocycle generators. Never has a linear term
    // (minimality).
    SullivanPolynomial differential;
    // Value of the cochain map in the ring's basis of `degree`; sized
    // ring.dim(degree), so empty in odd degrees.
    std::vector<Rat> phi;
};

struct SullivanModel {
    long cutoff = 0;
    std::vector<SullivanGenerator> generators;
};

// Builds the minimal model of (ring, 0) through the cutoff: at every degree
// q, cocycle generators realize the cokernel of H^q(model) -> H^q(ring) and
// relation generators kill the kernel of H^{q+1}(model) -> H^{q+1}(ring).
// All linear algebra is exact and canonical (RREF bases), so the result is
// deterministic. Throws std::invalid_argument("cutoff too small") when
// cutoff < ring top degree, and requires cutoff >= 2.
SullivanModel minimal_model(const GradedRing& ring, long cutoff);

// Generator count per degree = rank of pi_degree tensor Q, up to the cutoff.
std::map<long, long> homotopy_ranks(const SullivanModel& model);

// Re-checks a model against its ring: d o d = 0, minimality, and that the
// cochain map induces a degreewise cohomology isomorphism up to the cutoff.
bool verify_model(const GradedRing& ring, const SullivanModel& model);

struct EllipticityReport {
    long total_rank = 0;  // generators up to the cutoff
    long chi_pi = 0;      // even-degree generators minus odd-degree ones
    std::string verdict;  // "elliptic at cutoff" or "inconclusive at cutoff"
};

// Certificate about degrees <= cutoff only: elliptic when no generator falls
// in the trailing window (cutoff - fd, cutoff] of one formal dimension fd =
// ring top degree, and chi_pi <= 0. Requires cutoff >= 2 fd - 1
// (std::invalid_argument("cutoff too small") otherwise).
EllipticityReport ellipticity_report(const SullivanModel& model, const GradedRing& ring);

}  // namespace ellipt
