// Binary cubic forms attached to the projective-bundle threefolds
// P(O + O(n)) over the projective plane: the triple-product form on H^2,
// its discriminant, GL_2(Z)-equivalence search, and the homotopy /
// diffeomorphism classification rules for the associated bundles.
#pragma once

#include "ellipt/graded_ring.hpp"
#include "ellipt/rational.hpp"

namespace ellipt {

// a X^3 + b X^2 Y + c X Y^2 + d Y^3 with integer coefficients.
struct BinaryCubicForm {
    Int a;
    Int b;
    Int c;
    Int d;
    bool operator==(const BinaryCubicForm&) const = default;
};

// Triple-product form of P(O + O(n)): (0, 3, -3n, n^2), i.e.
// mu(aX + bY) = 3 a^2 b - 3 n a b^2 + n^2 b^3. Requires n >= 0.
BinaryCubicForm pe_cubic_form(const Int& n);

// b^2 c^2 + 18 a b c d - 4 a c^3 - 4 b^3 d - 27 a^2 d^2.
Int cubic_discriminant(const BinaryCubicForm& f);

// F(pX + qY, rX + sY) for an arbitrary integer matrix [[p, q], [r, s]].
// The discriminant transforms by the sixth power of the determinant.
BinaryCubicForm substitute(const BinaryCubicForm& f, const Int& p, const Int& q,
                           const Int& r, const Int& s);

// Bounded search can certify equivalence (witness found) and inequivalence
// (discriminants differ) but not inequivalence at equal discriminants.
enum class Gl2zVerdict { equivalent, inequivalent, unknown };

// Searches all substitutions with |entries| <= entry_bound and determinant
// +-1. Requires entry_bound >= 1.
Gl2zVerdict gl2z_equivalent(const BinaryCubicForm& f, const BinaryCubicForm& g,
                            long entry_bound);

// The bundles over the projective plane are homotopy equivalent iff their
// cubic-form discriminants -27 n^2 agree, i.e. iff n = m.
bool fn_homotopy_equivalent(const Int& n, const Int& m);

// Hirzebruch surfaces are diffeomorphic iff n = m (mod 2).
bool hirzebruch_diffeomorphic(const Int& n, const Int& m);

// Z[x, y]/(x^3, y^2 + n x y) with x, y in degree 2: the integral cohomology
// of P(O + O(n)), basis 1; x, y; x^2, x*y; x^2*y. Requires n >= 0.
GradedRing pe_cohomology_ring(const Int& n);

// Reads the degree-2 triple products of a ring with rank-2 H^2 and rank-1
// top degree 6: (<x^3>, 3<x^2 y>, 3<x y^2>, <y^3>) in units of the top
// basis element. Throws std::invalid_argument on any other shape.
BinaryCubicForm triple_product_form(const GradedRing& ring);

}  // namespace ellipt
