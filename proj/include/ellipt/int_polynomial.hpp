// Dense integer polynomials, lowest degree first. Only what expanding
// products of binomials t^m - 1 needs: binomial multiply, exact binomial
// divide, evaluation.
#pragma once

#include <vector>

#include "ellipt/rational.hpp"

namespace ellipt {

class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<Int> coeffs);

    static IntPolynomial one() { return IntPolynomial({Int(1)}); }

    bool is_zero() const { return coeffs_.empty(); }
    // Degree of the zero polynomial is -1.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    const std::vector<Int>& coefficients() const { return coeffs_; }
    const Int& coefficient(std::size_t i) const;

    // this * (t^m - 1)
    IntPolynomial mul_binomial(unsigned long m) const;
    // this / (t^m - 1); throws std::domain_error when the division leaves a
    // remainder.
    IntPolynomial div_binomial_exact(unsigned long m) const;

    IntPolynomial operator-() const;
    Rat evaluate(const Rat& t0) const;

    bool operator==(const IntPolynomial& other) const = default;

private:
    void trim();
    std::vector<Int> coeffs_;
};

}  // namespace ellipt
