#include "ellipt/graded_ring.hpp"

#include <stdexcept>

namespace ellipt {

namespace {

std::string pow_label(const std::string& base, long e) {
    if (e == 0) return "1";
    if (e == 1) return base;
    return base + "^" + std::to_string(e);
}

}  // namespace

RingElement::RingElement(const GradedRing* ring, long degree, std::vector<Rat> coords)
    : ring_(ring), degree_(degree), coords_(std::move(coords)) {
    if (coords_.size() != ring->dim(degree))
        throw std::invalid_argument("RingElement: coordinate size mismatch");
}

bool RingElement::is_zero() const {
    for (const auto& c : coords_)
        if (c != 0) return false;
    return true;
}

RingElement RingElement::operator+(const RingElement& other) const {
    if (ring_ != other.ring_ || degree_ != other.degree_)
        throw std::invalid_argument("RingElement: sum of incompatible elements");
    std::vector<Rat> c = coords_;
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += other.coords_[i];
    return RingElement(ring_, degree_, std::move(c));
}

RingElement RingElement::operator-(const RingElement& other) const { return *this + (-other); }

RingElement RingElement::operator*(const RingElement& other) const {
    if (ring_ != other.ring_)
        throw std::invalid_argument("RingElement: product across different rings");
    long degree = degree_ + other.degree_;
    std::vector<Rat> c(ring_->dim(degree));
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (coords_[i] == 0) continue;
        for (std::size_t j = 0; j < other.coords_.size(); ++j) {
            if (other.coords_[j] == 0) continue;
            std::vector<Rat> p = ring_->product(degree_, i, other.degree_, j);
            Rat f = coords_[i] * other.coords_[j];
            for (std::size_t t = 0; t < c.size(); ++t) c[t] += f * p[t];
        }
    }
    return RingElement(ring_, degree, std::move(c));
}

RingElement RingElement::operator*(const Rat& scalar) const {
    std::vector<Rat> c = coords_;
    for (auto& x : c) x *= scalar;
    return RingElement(ring_, degree_, std::move(c));
}

RingElement RingElement::operator-() const { return *this * Rat(-1); }

GradedRing::GradedRing(std::vector<std::vector<std::string>> basis_by_degree, CoefficientMode mode,
                       const std::vector<ProductRule>& rules)
    : basis_(std::move(basis_by_degree)), mode_(mode) {
    if (basis_.empty() || basis_[0] != std::vector<std::string>{"1"})
        throw std::invalid_argument("degree-0 basis must be exactly {\"1\"}");

    std::size_t half_count = basis_.size();
    table_.resize(half_count);
    for (std::size_t j1 = 0; j1 < half_count; ++j1) {
        table_[j1].resize(basis_[j1].size());
        for (std::size_t i1 = 0; i1 < basis_[j1].size(); ++i1) {
            table_[j1][i1].resize(half_count);
            for (std::size_t j2 = 0; j2 < half_count; ++j2) {
                std::size_t target = j1 + j2;
                std::size_t target_dim = target < half_count ? basis_[target].size() : 0;
                table_[j1][i1][j2].assign(basis_[j2].size(), std::vector<Rat>(target_dim));
            }
        }
    }
    // Products with the unit.
    for (std::size_t j = 0; j < half_count; ++j)
        for (std::size_t i = 0; i < basis_[j].size(); ++i) {
            table_[0][0][j][i][i] = 1;
            table_[j][i][0][0][i] = 1;
        }

    for (const auto& rule : rules) {
        if (rule.deg_a == 0 || rule.deg_b == 0)
            throw std::invalid_argument("products with the unit are implied, not given");
        std::size_t j1 = half(rule.deg_a), j2 = half(rule.deg_b);
        if (j1 >= half_count || j2 >= half_count || rule.ia >= basis_[j1].size() ||
            rule.ib >= basis_[j2].size())
            throw std::invalid_argument("product rule outside the basis");
        std::size_t target_dim = j1 + j2 < half_count ? basis_[j1 + j2].size() : 0;
        if (rule.coeffs.size() != target_dim)
            throw std::invalid_argument("product rule coefficient size mismatch");
        table_[j1][rule.ia][j2][rule.ib] = rule.coeffs;
        table_[j2][rule.ib][j1][rule.ia] = rule.coeffs;  // graded-commutative, all even
    }

    if (mode_ == CoefficientMode::integers)
        for (const auto& a : table_)
            for (const auto& b : a)
                for (const auto& c : b)
                    for (const auto& d : c)
                        for (const auto& coeff : d)
                            if (!is_integer(coeff))
                                throw std::logic_error("integrality audit failed");

    // Associativity on all basis triples.
    for (long d1 = 2; d1 <= top_degree(); d1 += 2)
        for (std::size_t i1 = 0; i1 < dim(d1); ++i1)
            for (long d2 = 2; d2 <= top_degree(); d2 += 2)
                for (std::size_t i2 = 0; i2 < dim(d2); ++i2)
                    for (long d3 = 2; d3 <= top_degree(); d3 += 2)
                        for (std::size_t i3 = 0; i3 < dim(d3); ++i3) {
                            RingElement x1 = basis_element(d1, i1);
                            RingElement x2 = basis_element(d2, i2);
                            RingElement x3 = basis_element(d3, i3);
                            if (!((x1 * x2) * x3 == x1 * (x2 * x3)))
                                throw std::logic_error("associativity audit failed at " +
                                                       label(d1, i1) + " * " + label(d2, i2) +
                                                       " * " + label(d3, i3));
                        }
}

std::size_t GradedRing::half(long degree) const {
    if (degree < 0 || degree % 2 != 0) throw std::invalid_argument("degrees must be even and >= 0");
    return static_cast<std::size_t>(degree / 2);
}

std::size_t GradedRing::dim(long degree) const {
    if (degree < 0 || degree % 2 != 0) return 0;
    std::size_t j = static_cast<std::size_t>(degree / 2);
    return j < basis_.size() ? basis_[j].size() : 0;
}

const std::string& GradedRing::label(long degree, std::size_t i) const {
    if (i >= dim(degree)) throw std::out_of_range("no such basis element");
    return basis_[half(degree)][i];
}

RingElement GradedRing::zero(long degree) const {
    return RingElement(this, degree, std::vector<Rat>(dim(degree)));
}

RingElement GradedRing::unit() const { return basis_element(0, 0); }

RingElement GradedRing::basis_element(long degree, std::size_t i) const {
    std::vector<Rat> c(dim(degree));
    if (i >= c.size()) throw std::out_of_range("no such basis element");
    c[i] = 1;
    return RingElement(this, degree, std::move(c));
}

std::vector<Rat> GradedRing::product(long deg_a, std::size_t ia, long deg_b, std::size_t ib) const {
    std::size_t j1 = half(deg_a), j2 = half(deg_b);
    if (j1 >= basis_.size() || j2 >= basis_.size() || ia >= basis_[j1].size() ||
        ib >= basis_[j2].size())
        throw std::out_of_range("product outside the basis");
    return table_[j1][ia][j2][ib];
}

GradedRing truncated_polynomial_ring(long n) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    std::vector<std::vector<std::string>> basis;
    for (long j = 0; j <= n; ++j) basis.push_back({pow_label("x", j)});
    std::vector<GradedRing::ProductRule> rules;
    for (long i = 1; i <= n; ++i)
        for (long j = i; i + j <= n; ++j)
            rules.push_back({2 * i, 0, 2 * j, 0, {Rat(1)}});
    return GradedRing(std::move(basis), GradedRing::CoefficientMode::integers, rules);
}

GradedRing twisted_projective_ring(long n, long d) {
    if (n < 2) throw std::invalid_argument("n must be >= 2");
    if (d < 1) throw std::invalid_argument("d must be >= 1");
    long t = n % 2 == 1 ? (n + 1) / 2 : n / 2 + 1;  // h^t = d*y, deg y = 2t

    std::vector<std::vector<std::string>> basis;
    for (long j = 0; j <= n; ++j) {
        if (j < t)
            basis.push_back({pow_label("h", j)});
        else if (j == t)
            basis.push_back({"y"});
        else
            basis.push_back({"y*" + pow_label("h", j - t)});
    }
    std::vector<GradedRing::ProductRule> rules;
    for (long j1 = 1; j1 <= n; ++j1)
        for (long j2 = j1; j1 + j2 <= n; ++j2) {
            long s = j1 + j2;
            Rat c;
            if (j1 < t && j2 < t)
                c = s < t ? Rat(1) : Rat(d);  // h^s, or h^s = d * (y h^{s-t})
            else if (j1 >= t && j2 >= t)
                continue;  // y^2 h^{..}: lands above the top degree
            else
                c = 1;  // h^{j1} * (y h^{j2-t}) = y h^{s-t}
            rules.push_back({2 * j1, 0, 2 * j2, 0, {c}});
        }
    return GradedRing(std::move(basis), GradedRing::CoefficientMode::integers, rules);
}

GradedRing twisted_quadric_ring(long k, const Rat& a) {
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    if (a == 0) throw std::invalid_argument("twist a must be nonzero");

    std::vector<std::vector<std::string>> basis;
    for (long j = 0; j <= 2 * k; ++j) {
        if (j == k)
            basis.push_back({pow_label("h", k), "v"});
        else
            basis.push_back({pow_label("h", j)});
    }
    auto h_slot = [&](long j) -> std::vector<Rat> {
        // Coordinates of h^j in the degree-2j basis.
        std::vector<Rat> c(j == k ? 2 : 1);
        c[0] = 1;
        return c;
    };
    std::vector<GradedRing::ProductRule> rules;
    for (long j1 = 1; j1 <= 2 * k; ++j1)
        for (long j2 = j1; j1 + j2 <= 2 * k; ++j2)
            rules.push_back({2 * j1, 0, 2 * j2, 0, h_slot(j1 + j2)});
    // h^j * v = 0 for j >= 1 (no rule); v * v = (1/a) h^{2k}.
    rules.push_back({2 * k, 1, 2 * k, 1, {1 / a}});
    return GradedRing(std::move(basis), GradedRing::CoefficientMode::rationals, rules);
}

GradedRing smooth_quadric_ring(long k) {
    if (k < 1) throw std::invalid_argument("k must be >= 1");

    std::vector<std::vector<std::string>> basis;
    for (long j = 0; j <= 2 * k; ++j) {
        if (j < k)
            basis.push_back({pow_label("h", j)});
        else if (j == k)
            basis.push_back({pow_label("h", k), "l"});
        else
            basis.push_back({pow_label("h", j - k) + "*l"});
    }
    auto power_slot = [&](long s) -> std::vector<Rat> {
        std::vector<Rat> c(s == k ? 2 : 1);
        c[0] = 1;
        return c;
    };
    std::vector<GradedRing::ProductRule> rules;
    // h^p * h^q (p, q <= k): h^s for s <= k, 2 h^{s-k} l beyond (relation
    // h^{k+1} = 2hl).
    for (long p = 1; p <= k; ++p)
        for (long q = p; q <= k; ++q) {
            long s = p + q;
            rules.push_back(
                {2 * p, 0, 2 * q, 0, s <= k ? power_slot(s) : std::vector<Rat>{Rat(2)}});
        }
    // h^p * (h^q l) = h^{p+q} l while p+q <= k; above that the degree passes
    // the top.
    for (long p = 1; p <= k; ++p)
        for (long q = 0; p + q <= k; ++q) {
            long lhs_deg = 2 * (q + k);
            std::size_t lhs_idx = q == 0 ? 1 : 0;
            rules.push_back({2 * p, 0, lhs_deg, lhs_idx, {Rat(1)}});
        }
    // l * l = l h^k (k even) or 0 (k odd).
    if (k % 2 == 0) rules.push_back({2 * k, 1, 2 * k, 1, {Rat(1)}});
    return GradedRing(std::move(basis), GradedRing::CoefficientMode::integers, rules);
}

GradedRing odd_quadric_rational_ring(long k) {
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    std::vector<std::vector<std::string>> basis;
    for (long j = 0; j <= 2 * k + 1; ++j) {
        if (j <= k)
            basis.push_back({pow_label("h", j)});
        else if (j == k + 1)
            basis.push_back({"l"});
        else
            basis.push_back({pow_label("h", j - k - 1) + "*l"});
    }
    std::vector<GradedRing::ProductRule> rules;
    for (long i = 1; i <= 2 * k + 1; ++i)
        for (long j = i; i + j <= 2 * k + 1; ++j) {
            // b_i b_j with b_i = h^i for i <= k and h^{i-k-1} l = h^i / 2
            // beyond (relation h^{k+1} = 2l).
            Rat c = (i <= k && j <= k && i + j >= k + 1) ? Rat(2) : Rat(1);
            rules.push_back({2 * i, 0, 2 * j, 0, {c}});
        }
    return GradedRing(std::move(basis), GradedRing::CoefficientMode::integers, rules);
}

GradedRing wedge_two_spheres_ring() {
    return GradedRing({{"1"}, {"a", "b"}}, GradedRing::CoefficientMode::integers, {});
}

bool quadric_vanishing_class_check(long k) {
    GradedRing ring = smooth_quadric_ring(k);
    RingElement h = ring.basis_element(2, 0);
    RingElement hk = ring.unit();
    for (long i = 0; i < k; ++i) hk = hk * h;
    RingElement l = ring.basis_element(2 * k, 1);
    RingElement v = l * Rat(2) - hk;

    if (!(h * v).is_zero()) return false;
    RingElement h2k = hk * hk;
    RingElement v2 = v * v;
    return h2k == (k % 2 == 0 ? v2 : -v2);
}

Rat linear_space_self_intersection(long d, long k) {
    if (d < 1) throw std::invalid_argument("d must be >= 1");
    if (k < 0) throw std::invalid_argument("k must be >= 0");
    Rat r = (Rat(1) - rat_pow(Rat(1 - d), k + 1)) / d;
    r.canonicalize();
    return r;
}

RatMatrix poincare_pairing(const GradedRing& ring) {
    if (ring.dim(ring.top_degree()) != 1) throw std::domain_error("no fundamental class");
    long middle = ring.top_degree() / 2;
    std::size_t n = ring.dim(middle);
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m.at(i, j) = ring.product(middle, i, middle, j)[0];
    return m;
}

RatMatrix::Inertia middle_signature(const GradedRing& ring) {
    return poincare_pairing(ring).symmetric_inertia();
}

int real_homotopy_class(const Rat& a) {
    if (a == 0) throw std::invalid_argument("twist a must be nonzero");
    return a > 0 ? +1 : -1;
}

Int rational_homotopy_class(const Rat& a) { return squarefree_part(a); }

bool rational_iso_to_truncated(const GradedRing& ring, long n, long d) {
    if (ring.top_degree() != 2 * n) return false;
    for (long deg = 0; deg <= 2 * n; deg += 2)
        if (ring.dim(deg) != 1) return false;

    long t = n % 2 == 1 ? (n + 1) / 2 : n / 2 + 1;
    RingElement h = ring.basis_element(2, 0);
    RingElement p = ring.unit();
    for (long j = 1; j <= n; ++j) {
        p = p * h;
        if (p.is_zero()) return false;  // x -> h must stay injective per degree
        if (j == t && p.coords()[0] != d) return false;  // h^t = d*y
    }
    return true;
}

bool odd_quadric_iso_check(long k) {
    GradedRing ring = odd_quadric_rational_ring(k);
    for (long deg = 0; deg <= 4 * k + 2; deg += 2)
        if (ring.dim(deg) != 1) return false;
    RingElement h = ring.basis_element(2, 0);
    RingElement p = ring.unit();
    for (long j = 1; j <= 2 * k + 1; ++j) {
        p = p * h;
        if (p.is_zero()) return false;
    }
    return true;
}

}  // namespace ellipt
