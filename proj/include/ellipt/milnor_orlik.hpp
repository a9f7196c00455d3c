// Milnor-Orlik divisor calculus for weighted-homogeneous isolated
// singularities: rational weights in, Milnor number and monodromy
// characteristic polynomial out. Serves as the independent oracle for the
// closed-form recurrences in families.hpp.
#pragma once

#include <map>
#include <vector>

#include "ellipt/lambda_product.hpp"
#include "ellipt/rational.hpp"

namespace ellipt {

// Weights of a weighted-homogeneous germ, stored in lowest terms. Weights
// must be >= 1; a weight equal to 1 marks a variable the germ is smooth in
// (it contributes the zero divisor and kills the Milnor number).
class WeightSystem {
public:
    explicit WeightSystem(std::vector<Rat> weights);

    const std::vector<Rat>& weights() const { return weights_; }
    std::size_t size() const { return weights_.size(); }

    bool operator==(const WeightSystem& other) const = default;

private:
    std::vector<Rat> weights_;
};

// Element sum_m c_m * Lambda_m of the ring with the law
// Lambda_a * Lambda_b = gcd(a,b) * Lambda_{lcm(a,b)}. Lambda_1 is the unit.
class Divisor {
public:
    Divisor() = default;  // zero divisor
    // terms: m -> c_m. Keys must be >= 1; zero coefficients are pruned.
    explicit Divisor(std::map<Int, Rat> terms);

    static Divisor lambda(const Int& m, const Rat& coeff = Rat(1));
    static Divisor one() { return lambda(1); }

    const std::map<Int, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_integral() const;

    Divisor operator+(const Divisor& other) const;
    Divisor operator-(const Divisor& other) const;
    Divisor operator*(const Divisor& other) const;

    bool operator==(const Divisor& other) const = default;

private:
    std::map<Int, Rat> terms_;
};

// (1/v) * Lambda_u - Lambda_1 for w = u/v > 1 in lowest terms; the zero
// divisor for w = 1 (smooth direction). Rejects w < 1.
Divisor weight_divisor(const Rat& w);

// prod_m (t^m - 1)^{c_m} where sum c_m Lambda_m = prod_i weight_divisor(w_i).
// The divisor coefficients must all be integers ("non-integral divisor"
// otherwise); the result's degree equals milnor_number(ws).
LambdaProduct monodromy_char_poly(const WeightSystem& ws);

// prod_i (w_i - 1); throws "non-integral Milnor number" when the product is
// not an integer.
Int milnor_number(const WeightSystem& ws);

}  // namespace ellipt
