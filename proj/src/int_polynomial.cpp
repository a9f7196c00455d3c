#include "ellipt/int_polynomial.hpp"

#include <stdexcept>

namespace ellipt {

IntPolynomial::IntPolynomial(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void IntPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Int& IntPolynomial::coefficient(std::size_t i) const {
    static const Int zero(0);
    return i < coeffs_.size() ? coeffs_[i] : zero;
}

IntPolynomial IntPolynomial::mul_binomial(unsigned long m) const {
    if (is_zero()) return {};
    std::vector<Int> out(coeffs_.size() + m, Int(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        out[i + m] += coeffs_[i];
        out[i] -= coeffs_[i];
    }
    IntPolynomial r;
    r.coeffs_ = std::move(out);
    r.trim();
    return r;
}

IntPolynomial IntPolynomial::div_binomial_exact(unsigned long m) const {
    if (is_zero()) return {};
    if (coeffs_.size() <= m) throw std::domain_error("not a polynomial");
    // Long division by t^m - 1 from the top: c_i t^i = c_i t^{i-m} (t^m - 1)
    // + c_i t^{i-m}, so each top coefficient folds down m places.
    std::vector<Int> rem = coeffs_;
    std::vector<Int> quot(coeffs_.size() - m, Int(0));
    for (std::size_t i = rem.size(); i-- > m;) {
        if (rem[i] == 0) continue;
        quot[i - m] += rem[i];
        rem[i - m] += rem[i];
        rem[i] = 0;
    }
    for (std::size_t i = 0; i < m; ++i)
        if (rem[i] != 0) throw std::domain_error("not a polynomial");
    IntPolynomial r;
    r.coeffs_ = std::move(quot);
    r.trim();
    return r;
}

IntPolynomial IntPolynomial::operator-() const {
    IntPolynomial r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

Rat IntPolynomial::evaluate(const Rat& t0) const {
    Rat acc(0);
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * t0 + Rat(coeffs_[i]);
    return acc;
}

}  // namespace ellipt
