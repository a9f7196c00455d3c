// Monodromy characteristic polynomials kept as formal products
// unit * prod_m (t^m - 1)^{e_m} with integer multiplicities of either sign.
// Nothing here ever expands unless explicitly asked to.
#pragma once

#include <map>

#include "ellipt/int_polynomial.hpp"
#include "ellipt/rational.hpp"

namespace ellipt {

class LambdaProduct {
public:
    // Empty product: the constant polynomial +1.
    LambdaProduct() = default;
    // factors: m -> e_m. Keys must be >= 1; zero multiplicities are pruned.
    LambdaProduct(std::map<Int, Int> factors, int unit = +1);

    // (t^m - 1)^e
    static LambdaProduct binomial(const Int& m, const Int& e = 1);

    const std::map<Int, Int>& factors() const { return factors_; }
    int unit() const { return unit_; }
    bool is_empty() const { return factors_.empty() && unit_ == 1; }

    // Degree as a rational function: sum of m * e_m. Equals the Milnor
    // number when this is a monodromy characteristic polynomial.
    Int degree() const;

    // Order of vanishing at t = 1: sum of e_m.
    Int order_at_one() const;

    // Value of the limit at t = 1: unit * prod m^{e_m}. Requires
    // order_at_one() == 0, otherwise throws std::domain_error.
    Rat value_at_one() const;

    // Evaluate factorwise at a rational point. Requires t0^m != 1 for all
    // stored m, i.e. |t0| != 1.
    Rat evaluate(const Rat& t0) const;

    // Expand into an honest integer polynomial. Throws std::domain_error
    // ("not a polynomial") when a denominator factor does not divide out and
    // ("too large") when the degree exceeds max_degree.
    IntPolynomial expand(const Int& max_degree = Int(10000)) const;

    // prod_{i=0}^{d-1} P(w^i t) over the d-th roots of unity w^i, computed
    // factorwise: each (t^m - 1)^e contributes ((-1)^{k+1} (t^{mk} - 1))^{ge}
    // with g = gcd(m, d), k = d/g.
    LambdaProduct root_of_unity_product(const Int& d) const;

    LambdaProduct operator*(const LambdaProduct& other) const;
    LambdaProduct& operator*=(const LambdaProduct& other);
    bool operator==(const LambdaProduct& other) const = default;

private:
    std::map<Int, Int> factors_;
    int unit_ = +1;
};

// The unique squarefree integer s with q = s * r^2, r rational; s carries the
// sign of q. Factoring is trial division up to trial_bound; inputs whose
// square part cannot be certified within the bound are rejected rather than
// guessed (std::domain_error). q = 0 is rejected.
Int squarefree_part(const Rat& q, unsigned long trial_bound = 1000000);

}  // namespace ellipt
