#include "ellipt/milnor_orlik.hpp"

#include <stdexcept>

namespace ellipt {

WeightSystem::WeightSystem(std::vector<Rat> weights) : weights_(std::move(weights)) {
    if (weights_.empty()) throw std::invalid_argument("weight system must be nonempty");
    for (auto& w : weights_) {
        w.canonicalize();
        if (w < 1) throw std::invalid_argument("weights must be >= 1");
    }
}

Divisor::Divisor(std::map<Int, Rat> terms) {
    for (auto& [m, c] : terms) {
        if (m < 1) throw std::invalid_argument("Lambda index must be >= 1");
        if (c != 0) terms_.emplace(m, c);
    }
}

Divisor Divisor::lambda(const Int& m, const Rat& coeff) {
    std::map<Int, Rat> terms;
    terms.emplace(m, coeff);
    return Divisor(std::move(terms));
}

bool Divisor::is_integral() const {
    for (const auto& [m, c] : terms_)
        if (!is_integer(c)) return false;
    return true;
}

Divisor Divisor::operator+(const Divisor& other) const {
    Divisor r = *this;
    for (const auto& [m, c] : other.terms_) {
        auto it = r.terms_.find(m);
        if (it == r.terms_.end()) {
            r.terms_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second == 0) r.terms_.erase(it);
        }
    }
    return r;
}

Divisor Divisor::operator-(const Divisor& other) const {
    Divisor neg;
    for (const auto& [m, c] : other.terms_) neg.terms_.emplace(m, -c);
    return *this + neg;
}

Divisor Divisor::operator*(const Divisor& other) const {
    // Bilinear extension of Lambda_a Lambda_b = gcd(a,b) Lambda_{lcm(a,b)}.
    Divisor r;
    for (const auto& [a, ca] : terms_) {
        for (const auto& [b, cb] : other.terms_) {
            Int g = int_gcd(a, b);
            Int l = int_lcm(a, b);
            Rat c = ca * cb * Rat(g);
            auto it = r.terms_.find(l);
            if (it == r.terms_.end()) {
                r.terms_.emplace(l, c);
            } else {
                it->second += c;
            }
        }
    }
    std::erase_if(r.terms_, [](const auto& kv) { return kv.second == 0; });
    return r;
}

Divisor weight_divisor(const Rat& w) {
    if (w < 1) throw std::invalid_argument("weight_divisor: weight must be >= 1");
    if (w == 1) return Divisor();  // smooth direction: (1/1) Lambda_1 - Lambda_1
    return Divisor::lambda(w.get_num(), Rat(1, w.get_den())) - Divisor::one();
}

LambdaProduct monodromy_char_poly(const WeightSystem& ws) {
    Divisor div = Divisor::one();
    for (const auto& w : ws.weights()) div = div * weight_divisor(w);
    if (!div.is_integral()) throw std::domain_error("non-integral divisor");
    std::map<Int, Int> factors;
    for (const auto& [m, c] : div.terms()) factors.emplace(m, c.get_num());
    return LambdaProduct(std::move(factors));
}

Int milnor_number(const WeightSystem& ws) {
    Rat mu(1);
    for (const auto& w : ws.weights()) mu *= w - 1;
    if (!is_integer(mu)) throw std::domain_error("non-integral Milnor number");
    return mu.get_num();
}

}  // namespace ellipt
