#include "ellipt/lambda_product.hpp"

#include <stdexcept>

namespace ellipt {

LambdaProduct::LambdaProduct(std::map<Int, Int> factors, int unit) : unit_(unit) {
    if (unit != 1 && unit != -1) throw std::invalid_argument("unit must be +1 or -1");
    for (auto& [m, e] : factors) {
        if (m < 1) throw std::invalid_argument("binomial exponent must be >= 1");
        if (e != 0) factors_.emplace(m, e);
    }
}

LambdaProduct LambdaProduct::binomial(const Int& m, const Int& e) {
    std::map<Int, Int> factors;
    factors.emplace(m, e);
    return LambdaProduct(std::move(factors));
}

Int LambdaProduct::degree() const {
    Int d(0);
    for (const auto& [m, e] : factors_) d += m * e;
    return d;
}

Int LambdaProduct::order_at_one() const {
    Int o(0);
    for (const auto& [m, e] : factors_) o += e;
    return o;
}

Rat LambdaProduct::value_at_one() const {
    if (order_at_one() != 0)
        throw std::domain_error("value_at_one: nonzero order of vanishing at t=1");
    // Each factor (t^m - 1) behaves like m * (t - 1) near t = 1; the (t - 1)
    // powers cancel since the orders sum to zero.
    Rat v(unit_);
    for (const auto& [m, e] : factors_) {
        if (!e.fits_slong_p()) throw std::domain_error("value_at_one: multiplicity too large");
        v *= rat_pow(Rat(m), e.get_si());
    }
    return v;
}

Rat LambdaProduct::evaluate(const Rat& t0) const {
    Rat v(unit_);
    for (const auto& [m, e] : factors_) {
        if (!m.fits_ulong_p() || !e.fits_slong_p())
            throw std::domain_error("evaluate: exponent too large");
        Rat base = rat_pow(t0, static_cast<long>(m.get_ui())) - 1;
        if (base == 0) throw std::domain_error("evaluate: t0 is a root of a stored binomial");
        v *= rat_pow(base, e.get_si());
    }
    return v;
}

IntPolynomial LambdaProduct::expand(const Int& max_degree) const {
    Int deg = degree();
    if (deg < 0) throw std::domain_error("not a polynomial");
    if (deg > max_degree) throw std::domain_error("too large");

    Int num_degree(0);
    for (const auto& [m, e] : factors_)
        if (e > 0) num_degree += m * e;
    // The numerator is expanded densely before denominator factors divide
    // out, so its degree needs a resource guard of its own.
    if (num_degree > 64 * max_degree + 4096) throw std::domain_error("too large");

    IntPolynomial poly = IntPolynomial::one();
    for (const auto& [m, e] : factors_) {
        if (e <= 0) continue;
        unsigned long mu = m.get_ui();
        for (Int i = 0; i < e; ++i) poly = poly.mul_binomial(mu);
    }
    for (const auto& [m, e] : factors_) {
        if (e >= 0) continue;
        unsigned long mu = m.get_ui();
        for (Int i = 0; i < -e; ++i) poly = poly.div_binomial_exact(mu);
    }
    return unit_ == 1 ? poly : -poly;
}

LambdaProduct LambdaProduct::root_of_unity_product(const Int& d) const {
    if (d < 1) throw std::invalid_argument("root_of_unity_product: d must be >= 1");
    LambdaProduct out;
    // unit^d from the d copies of the original unit.
    out.unit_ = (unit_ == -1 && mpz_odd_p(d.get_mpz_t())) ? -1 : 1;
    for (const auto& [m, e] : factors_) {
        Int g = int_gcd(m, d);
        Int k = d / g;
        Int mult = g * e;
        out.factors_[m * k] += mult;
        // ((-1)^{k+1})^{ge}: flips the sign exactly when k is even and ge odd.
        if (mpz_even_p(k.get_mpz_t()) && mpz_odd_p(mult.get_mpz_t())) out.unit_ = -out.unit_;
    }
    std::erase_if(out.factors_, [](const auto& kv) { return kv.second == 0; });
    return out;
}

LambdaProduct LambdaProduct::operator*(const LambdaProduct& other) const {
    LambdaProduct r = *this;
    r *= other;
    return r;
}

LambdaProduct& LambdaProduct::operator*=(const LambdaProduct& other) {
    unit_ *= other.unit_;
    for (const auto& [m, e] : other.factors_) {
        auto it = factors_.find(m);
        if (it == factors_.end()) {
            factors_.emplace(m, e);
        } else {
            it->second += e;
            if (it->second == 0) factors_.erase(it);
        }
    }
    return *this;
}

Int squarefree_part(const Rat& q, unsigned long trial_bound) {
    if (q == 0) throw std::domain_error("squarefree_part: q must be nonzero");
    // q = u/v = uv / v^2, so the squarefree part of q equals that of u*v.
    Int n = abs(q.get_num() * q.get_den());
    Int s(sgn(q) > 0 ? 1 : -1);
    auto strip = [&](unsigned long p) {
        unsigned long exp = 0;
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
            ++exp;
        }
        if (exp % 2 == 1) s *= static_cast<long>(p);
    };
    strip(2);
    for (unsigned long p = 3; p <= trial_bound && n > 1; p += 2) {
        if (Int(p) * p > n) {
            // all primes below p are stripped, so the remainder is prime
            s *= n;
            n = 1;
            break;
        }
        strip(p);
    }
    if (n > 1) {
        // Remainder has only prime factors above trial_bound.
        if (mpz_perfect_square_p(n.get_mpz_t())) {
            // contributes nothing
        } else if (n < Int(trial_bound) * trial_bound) {
            s *= n;  // a single prime
        } else {
            throw std::domain_error(
                "squarefree_part: square part not certifiable within trial bound");
        }
    }
    return s;
}

}  // namespace ellipt
