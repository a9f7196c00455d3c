// Finite evenly-graded commutative rings given by per-degree bases and an
// exact multiplication table, with construction-time associativity and
// commutativity audits. Cup products, Poincare pairing, signature and the
// homotopy-class invariants of the twisted quadrics live here.
#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ellipt/lambda_product.hpp"  // squarefree_part
#include "ellipt/rational.hpp"
#include "ellipt/rational_matrix.hpp"

namespace ellipt {

class GradedRing;

// Homogeneous element: coordinates over the basis of one (even) degree.
// Degrees above the ring's top have empty coordinate vectors, so products
// truncate naturally.
class RingElement {
public:
    RingElement(const GradedRing* ring, long degree, std::vector<Rat> coords);

    long degree() const { return degree_; }
    const std::vector<Rat>& coords() const { return coords_; }
    bool is_zero() const;

    RingElement operator+(const RingElement& other) const;
    RingElement operator-(const RingElement& other) const;
    RingElement operator*(const RingElement& other) const;
    RingElement operator*(const Rat& scalar) const;
    RingElement operator-() const;
    bool operator==(const RingElement& other) const = default;

private:
    const GradedRing* ring_;
    long degree_;
    std::vector<Rat> coords_;
};

class GradedRing {
public:
    enum class CoefficientMode { integers, rationals };

    // One product rule per unordered basis pair; pairs without a rule (and
    // pairs landing above the top degree) multiply to zero. Products with
    // the degree-0 unit are implied.
    struct ProductRule {
        long deg_a;
        std::size_t ia;
        long deg_b;
        std::size_t ib;
        std::vector<Rat> coeffs;  // in the basis of degree deg_a + deg_b
    };

    // basis_by_degree[j] = labels in degree 2j; slot 0 must be exactly {"1"}.
    // Audits (commutativity, associativity on all basis triples, coefficient
    // integrality when mode = integers) run here and throw std::logic_error
    // on failure.
    GradedRing(std::vector<std::vector<std::string>> basis_by_degree, CoefficientMode mode,
               const std::vector<ProductRule>& rules);

    long top_degree() const { return 2 * (static_cast<long>(basis_.size()) - 1); }
    std::size_t dim(long degree) const;
    const std::string& label(long degree, std::size_t i) const;
    CoefficientMode mode() const { return mode_; }

    RingElement zero(long degree) const;
    RingElement unit() const;
    RingElement basis_element(long degree, std::size_t i) const;
    // Coordinates of x_i * x_j (basis elements of the given degrees); sized
    // dim(deg_a + deg_b).
    std::vector<Rat> product(long deg_a, std::size_t ia, long deg_b, std::size_t ib) const;

    // Integral of the top basis element in geometric units, when the ring
    // carries a geometric normalization; 1 otherwise.
    Rat geometric_scale = Rat(1);

private:
    std::size_t half(long degree) const;
    std::vector<std::vector<std::string>> basis_;
    CoefficientMode mode_;
    // table_[j1][i1][j2][i2], half-degrees, full symmetric storage.
    std::vector<std::vector<std::vector<std::vector<std::vector<Rat>>>>> table_;
};

// Q[x]/(x^{n+1}), deg x = 2: the rational cohomology of P^n (n = 1 is the
// 2-sphere).
GradedRing truncated_polynomial_ring(long n);

// Z[h, y]/(h^{n+1}, h^t = d y) with y in degree n+1 (n odd) or n+2 (n even);
// rank one in every even degree <= 2n.
GradedRing twisted_projective_ring(long n, long d);

// Q[h, v]/(hv, h^{2k+1}, h^{2k} - a v^2), deg h = 2, deg v = 2k.
GradedRing twisted_quadric_ring(long k, const Rat& a);

// Z[h, l]/(h^{k+1} - 2hl, l^2 - l h^k) for even k, (h^{k+1} - 2hl, l^2) for
// odd k: the even-dimensional smooth quadric Q_{2k}.
GradedRing smooth_quadric_ring(long k);

// H^*(Q_{2k+1}, Q): rank one per even degree up to 4k+2, products induced by
// Z[h, l]/(h^{k+1} - 2l) with l^2 forced to zero by degree.
GradedRing odd_quadric_rational_ring(long k);

// Two degree-2 classes with all products zero (a wedge of two 2-spheres):
// the hyperbolic control case for the Sullivan builder.
GradedRing wedge_two_spheres_ring();

// In smooth_quadric_ring(k), sets v = 2l - h^k and verifies hv = 0 and
// h^{2k} = (-1)^k v^2.
bool quadric_vanishing_class_check(long k);

// (1/d)(1 - (1-d)^{k+1}): self-intersection of a ruling P^k inside a
// degree-d hypersurface normalization.
Rat linear_space_self_intersection(long d, long k);

// Matrix of middle-degree products in units of the top basis element.
// Throws std::domain_error("no fundamental class") unless the top degree has
// rank exactly 1.
RatMatrix poincare_pairing(const GradedRing& ring);

// Inertia (p, q, z) of the Poincare pairing on the middle degree.
RatMatrix::Inertia middle_signature(const GradedRing& ring);

// Twisted-quadric homotopy-class invariants of the twist a != 0: the sign
// classifies over R, the squarefree part classifies over Q.
int real_homotopy_class(const Rat& a);
Int rational_homotopy_class(const Rat& a);

// Verifies that rescaling y to (1/d) h^t identifies twisted_projective_ring
// (n, d) with Q[x]/(x^{n+1}) as graded rings over Q.
bool rational_iso_to_truncated(const GradedRing& ring, long n, long d);

// Verifies H^*(Q_{2k+1}, Q) is isomorphic to Q[x]/(x^{2k+2}).
bool odd_quadric_iso_check(long k);

}  // namespace ellipt
