#include "ellipt/cubic_forms.hpp"

#include <stdexcept>

namespace ellipt {

BinaryCubicForm pe_cubic_form(const Int& n) {
    if (n < 0) throw std::invalid_argument("pe_cubic_form: n must be >= 0");
    return {Int(0), Int(3), Int(-3) * n, n * n};
}

Int cubic_discriminant(const BinaryCubicForm& f) {
    const Int& a = f.a;
    const Int& b = f.b;
    const Int& c = f.c;
    const Int& d = f.d;
    return b * b * c * c + 18 * a * b * c * d - 4 * a * c * c * c - 4 * b * b * b * d -
           27 * a * a * d * d;
}

BinaryCubicForm substitute(const BinaryCubicForm& f, const Int& p, const Int& q,
                           const Int& r, const Int& s) {
    const Int& a = f.a;
    const Int& b = f.b;
    const Int& c = f.c;
    const Int& d = f.d;
    BinaryCubicForm out;
    out.a = a * p * p * p + b * p * p * r + c * p * r * r + d * r * r * r;
    out.b = 3 * a * p * p * q + b * (p * p * s + 2 * p * q * r) +
            c * (2 * p * r * s + q * r * r) + 3 * d * r * r * s;
    out.c = 3 * a * p * q * q + b * (2 * p * q * s + q * q * r) +
            c * (p * s * s + 2 * q * r * s) + 3 * d * r * s * s;
    out.d = a * q * q * q + b * q * q * s + c * q * s * s + d * s * s * s;
    return out;
}

Gl2zVerdict gl2z_equivalent(const BinaryCubicForm& f, const BinaryCubicForm& g,
                            long entry_bound) {
    if (entry_bound < 1) throw std::invalid_argument("entry_bound must be >= 1");
    if (cubic_discriminant(f) != cubic_discriminant(g)) return Gl2zVerdict::inequivalent;
    for (long p = -entry_bound; p <= entry_bound; ++p)
        for (long q = -entry_bound; q <= entry_bound; ++q)
            for (long r = -entry_bound; r <= entry_bound; ++r)
                for (long s = -entry_bound; s <= entry_bound; ++s) {
                    const long det = p * s - q * r;
                    if (det != 1 && det != -1) continue;
                    if (substitute(f, Int(p), Int(q), Int(r), Int(s)) == g)
                        return Gl2zVerdict::equivalent;
                }
    return Gl2zVerdict::unknown;
}

bool fn_homotopy_equivalent(const Int& n, const Int& m) {
    if (n < 0 || m < 0) throw std::invalid_argument("n and m must be >= 0");
    return cubic_discriminant(pe_cubic_form(n)) == cubic_discriminant(pe_cubic_form(m));
}

bool hirzebruch_diffeomorphic(const Int& n, const Int& m) {
    if (n < 0 || m < 0) throw std::invalid_argument("n and m must be >= 0");
    return (n - m) % 2 == 0;
}

GradedRing pe_cohomology_ring(const Int& n) {
    if (n < 0) throw std::invalid_argument("pe_cohomology_ring: n must be >= 0");
    const Rat nn(n);
    std::vector<std::vector<std::string>> basis = {
        {"1"}, {"x", "y"}, {"x^2", "x*y"}, {"x^2*y"}};
    std::vector<GradedRing::ProductRule> rules = {
        {2, 0, 2, 0, {Rat(1), Rat(0)}},   // x * x = x^2
        {2, 0, 2, 1, {Rat(0), Rat(1)}},   // x * y = x*y
        {2, 1, 2, 1, {Rat(0), -nn}},      // y^2 = -n x*y
        {2, 0, 4, 0, {Rat(0)}},           // x * x^2 = 0
        {2, 0, 4, 1, {Rat(1)}},           // x * x*y = x^2*y
        {2, 1, 4, 0, {Rat(1)}},           // y * x^2 = x^2*y
        {2, 1, 4, 1, {-nn}},              // y * x*y = -n x^2*y
    };
    return GradedRing(std::move(basis), GradedRing::CoefficientMode::integers, rules);
}

BinaryCubicForm triple_product_form(const GradedRing& ring) {
    if (ring.top_degree() != 6 || ring.dim(6) != 1 || ring.dim(2) != 2)
        throw std::invalid_argument(
            "triple_product_form: ring must have rank-2 degree 2 and rank-1 degree 6");
    const auto top_coeff = [&](std::size_t i, std::size_t j, std::size_t k) {
        RingElement e = ring.basis_element(2, i) * ring.basis_element(2, j) *
                        ring.basis_element(2, k);
        const Rat& value = e.coords().at(0);
        if (!is_integer(value))
            throw std::invalid_argument("triple_product_form: non-integral triple product");
        return value.get_num();
    };
    BinaryCubicForm out;
    out.a = top_coeff(0, 0, 0);
    out.b = 3 * top_coeff(0, 0, 1);
    out.c = 3 * top_coeff(0, 1, 1);
    out.d = top_coeff(1, 1, 1);
    return out;
}

}  // namespace ellipt
