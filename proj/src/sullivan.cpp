#include "ellipt/sullivan.hpp"

#include <algorithm>
#include <stdexcept>

#include "ellipt/rational_matrix.hpp"

namespace ellipt {

namespace {

// Working view of the model under construction.
struct Builder {
    const GradedRing* ring = nullptr;
    std::vector<SullivanGenerator> gens;

    bool odd(std::size_t g) const { return gens[g].degree % 2 != 0; }

    // Graded-commutative product of two canonical monomials. Returns the
    // Koszul sign (0 when an odd generator squares to zero) and the merged
    // monomial. The sign counts odd-odd transpositions needed to interleave
    // the right factor into the left one.
    std::pair<int, SullivanMonomial> mono_mul(const SullivanMonomial& a,
                                              const SullivanMonomial& b) const {
        // Koszul sign: one transposition per out-of-order pair of odd letters.
        long inversions = 0;
        for (const auto& [gb, eb] : b) {
            if (!odd(gb)) continue;
            for (const auto& [ga, ea] : a)
                if (odd(ga) && ga > gb) ++inversions;
        }
        SullivanMonomial merged;
        std::size_t i = 0;
        std::size_t j = 0;
        while (i < a.size() || j < b.size()) {
            if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
                merged.push_back(a[i++]);
            } else if (i == a.size() || b[j].first < a[i].first) {
                merged.push_back(b[j++]);
            } else {
                if (odd(a[i].first)) return {0, {}};
                merged.emplace_back(a[i].first, a[i].second + b[j].second);
                ++i;
                ++j;
            }
        }
        return {inversions % 2 == 0 ? 1 : -1, std::move(merged)};
    }

    long mono_degree(const SullivanMonomial& m) const {
        long d = 0;
        for (const auto& [g, e] : m) d += gens[g].degree * e;
        return d;
    }

    // Leibniz rule on a canonical monomial, expanded letter by letter.
    SullivanPolynomial d_mono(const SullivanMonomial& m) const {
        std::vector<std::size_t> letters;
        for (const auto& [g, e] : m)
            for (long k = 0; k < e; ++k) letters.push_back(g);
        SullivanPolynomial out;
        long prefix_degree = 0;
        for (std::size_t p = 0; p < letters.size(); ++p) {
            const std::size_t g = letters[p];
            const SullivanPolynomial& dg = gens[g].differential;
            if (!dg.empty()) {
                // The differential of this letter lands in its original slot,
                // between the prefix and suffix of the word.
                SullivanMonomial prefix;
                SullivanMonomial suffix;
                for (std::size_t q = 0; q < p; ++q) {
                    if (!prefix.empty() && prefix.back().first == letters[q])
                        ++prefix.back().second;
                    else
                        prefix.emplace_back(letters[q], 1);
                }
                for (std::size_t q = p + 1; q < letters.size(); ++q) {
                    if (!suffix.empty() && suffix.back().first == letters[q])
                        ++suffix.back().second;
                    else
                        suffix.emplace_back(letters[q], 1);
                }
                const int prefix_sign = prefix_degree % 2 == 0 ? 1 : -1;
                for (const auto& [u, c] : dg) {
                    auto [s1, m1] = mono_mul(prefix, u);
                    if (s1 == 0) continue;
                    auto [s2, m2] = mono_mul(m1, suffix);
                    if (s2 == 0) continue;
                    Rat& slot = out[m2];
                    slot += c * Rat(prefix_sign * s1 * s2);
                    if (slot == 0) out.erase(m2);
                }
            }
            prefix_degree += gens[g].degree;
        }
        return out;
    }

    // All canonical monomials of the given total degree, in a fixed order.
    std::vector<SullivanMonomial> monomials(long degree) const {
        std::vector<SullivanMonomial> out;
        SullivanMonomial current;
        enumerate(0, degree, current, out);
        return out;
    }

    void enumerate(std::size_t g, long remaining, SullivanMonomial& current,
                   std::vector<SullivanMonomial>& out) const {
        if (remaining == 0) {
            out.push_back(current);
            return;
        }
        if (g == gens.size()) return;
        const long dg = gens[g].degree;
        const long max_exp = odd(g) ? std::min<long>(1, remaining / dg) : remaining / dg;
        for (long e = 0; e <= max_exp; ++e) {
            if (e > 0) {
                if (e == 1)
                    current.emplace_back(g, 1);
                else
                    current.back().second = e;
            }
            enumerate(g + 1, remaining - e * dg, current, out);
        }
        if (max_exp > 0) current.pop_back();
    }

    // Value of the cochain map on a monomial, as coordinates in the ring's
    // basis of the monomial's degree (empty vector = zero).
    std::vector<Rat> phi_mono(const SullivanMonomial& m) const {
        RingElement value = ring->unit();
        for (const auto& [g, e] : m) {
            const auto& coords = gens[g].phi;
            RingElement factor = coords.empty() ? ring->zero(gens[g].degree)
                                                : RingElement(ring, gens[g].degree, coords);
            for (long k = 0; k < e; ++k) {
                value = value * factor;
                if (value.is_zero()) return {};
            }
        }
        if (value.is_zero()) return {};
        return value.coords();
    }

    // Differential as a matrix from monomials(q) to monomials(q + 1).
    RatMatrix diff_matrix(const std::vector<SullivanMonomial>& source,
                          const std::vector<SullivanMonomial>& target) const {
        std::map<SullivanMonomial, std::size_t> index;
        for (std::size_t i = 0; i < target.size(); ++i) index.emplace(target[i], i);
        RatMatrix m(target.size(), source.size());
        for (std::size_t j = 0; j < source.size(); ++j) {
            for (const auto& [mono, coeff] : d_mono(source[j])) {
                const auto it = index.find(mono);
                if (it == index.end())
                    throw std::logic_error("differential left the monomial basis");
                m.at(it->second, j) = coeff;
            }
        }
        return m;
    }

    // Cochain map as a matrix from monomials(q) to the ring's basis of q.
    RatMatrix phi_matrix(long degree, const std::vector<SullivanMonomial>& source) const {
        const std::size_t rows = ring->dim(degree);
        RatMatrix m(rows, source.size());
        for (std::size_t j = 0; j < source.size(); ++j) {
            const std::vector<Rat> coords = phi_mono(source[j]);
            for (std::size_t i = 0; i < coords.size(); ++i) m.at(i, j) = coords[i];
        }
        return m;
    }
};

// Rows spanning the cocycles of the given degree, in monomial coordinates.
std::vector<std::vector<Rat>> cocycle_basis(const Builder& b,
                                            const std::vector<SullivanMonomial>& here,
                                            const std::vector<SullivanMonomial>& above) {
    if (here.empty()) return {};
    return b.diff_matrix(here, above).nullspace();
}

// Rows spanning the coboundaries of degree q + 1 (images of d from q).
std::vector<std::vector<Rat>> coboundary_basis(const Builder& b,
                                               const std::vector<SullivanMonomial>& below,
                                               const std::vector<SullivanMonomial>& here) {
    std::vector<std::vector<Rat>> images;
    if (below.empty() || here.empty()) return images;
    const RatMatrix d = b.diff_matrix(below, here);
    for (std::size_t j = 0; j < below.size(); ++j) {
        std::vector<Rat> column(here.size());
        bool nonzero = false;
        for (std::size_t i = 0; i < here.size(); ++i) {
            column[i] = d.at(i, j);
            if (column[i] != 0) nonzero = true;
        }
        if (nonzero) images.push_back(std::move(column));
    }
    return row_space_basis(images, here.size());
}

// Intersection of span(rows) with the kernel of the map given by `to_ring`:
// solve on coefficients of the row combination.
std::vector<std::vector<Rat>> intersect_with_kernel(
    const std::vector<std::vector<Rat>>& rows, const RatMatrix& to_ring) {
    if (rows.empty()) return {};
    const std::size_t ambient = rows[0].size();
    if (to_ring.rows() == 0) return rows;
    // Matrix of phi applied to each spanning row; kernel coefficients pick
    // the combinations that die in the ring.
    RatMatrix composed(to_ring.rows(), rows.size());
    for (std::size_t j = 0; j < rows.size(); ++j)
        for (std::size_t i = 0; i < to_ring.rows(); ++i) {
            Rat sum = 0;
            for (std::size_t k = 0; k < ambient; ++k) sum += to_ring.at(i, k) * rows[j][k];
            composed.at(i, j) = sum;
        }
    std::vector<std::vector<Rat>> out;
    for (const auto& coeffs : composed.nullspace()) {
        std::vector<Rat> v(ambient, Rat(0));
        for (std::size_t j = 0; j < rows.size(); ++j)
            for (std::size_t k = 0; k < ambient; ++k) v[k] += coeffs[j] * rows[j][k];
        out.push_back(std::move(v));
    }
    return row_space_basis(out, ambient);
}

std::size_t rank_of(const std::vector<std::vector<Rat>>& rows, std::size_t ambient) {
    return row_space_basis(rows, ambient).size();
}

}  // namespace

SullivanModel minimal_model(const GradedRing& ring, long cutoff) {
    if (cutoff < 2) throw std::invalid_argument("cutoff must be >= 2");
    if (cutoff < ring.top_degree()) throw std::invalid_argument("cutoff too small");

    Builder b;
    b.ring = &ring;

    for (long q = 2; q <= cutoff; ++q) {
        // Cocycle generators: realize the cokernel of H^q(model) -> H^q(ring).
        const std::size_t need = ring.dim(q);
        if (need > 0) {
            const auto here = b.monomials(q);
            const auto above = b.monomials(q + 1);
            const auto cocycles = cocycle_basis(b, here, above);
            const RatMatrix phi = b.phi_matrix(q, here);
            std::vector<std::vector<Rat>> image;
            for (const auto& z : cocycles) {
                std::vector<Rat> value(need, Rat(0));
                for (std::size_t i = 0; i < need; ++i) {
                    Rat sum = 0;
                    for (std::size_t k = 0; k < here.size(); ++k)
                        sum += phi.at(i, k) * z[k];
                    value[i] = sum;
                }
                image.push_back(std::move(value));
            }
            std::vector<std::vector<Rat>> whole;
            for (std::size_t i = 0; i < need; ++i) {
                std::vector<Rat> e(need, Rat(0));
                e[i] = 1;
                whole.push_back(std::move(e));
            }
            long index = 0;
            for (auto& missing : complement_in_span(image, whole, need)) {
                SullivanGenerator g;
                g.label = "x" + std::to_string(q) + "." + std::to_string(index++);
                g.degree = q;
                g.phi = std::move(missing);
                b.gens.push_back(std::move(g));
            }
        }

        // Relation generators: kill the kernel of H^{q+1}(model) -> H^{q+1}(ring).
        const auto here = b.monomials(q + 1);
        if (!here.empty()) {
            const auto above = b.monomials(q + 2);
            const auto below = b.monomials(q);
            const auto cocycles = cocycle_basis(b, here, above);
            const auto boundaries = coboundary_basis(b, below, here);
            const RatMatrix phi = b.phi_matrix(q + 1, here);
            const auto doomed = intersect_with_kernel(cocycles, phi);
            long index = 0;
            for (auto& target : complement_in_span(boundaries, doomed, here.size())) {
                SullivanGenerator g;
                g.label = "y" + std::to_string(q) + "." + std::to_string(index++);
                g.degree = q;
                for (std::size_t k = 0; k < here.size(); ++k)
                    if (target[k] != 0) g.differential.emplace(here[k], target[k]);
                if (ring.dim(q) > 0) g.phi.assign(ring.dim(q), Rat(0));
                b.gens.push_back(std::move(g));
            }
        }
    }

    SullivanModel model;
    model.cutoff = cutoff;
    model.generators = std::move(b.gens);
    if (!verify_model(ring, model))
        throw std::logic_error("minimal model failed self-verification");
    return model;
}

std::map<long, long> homotopy_ranks(const SullivanModel& model) {
    std::map<long, long> ranks;
    for (const auto& g : model.generators) ++ranks[g.degree];
    return ranks;
}

bool verify_model(const GradedRing& ring, const SullivanModel& model) {
    Builder b;
    b.ring = &ring;
    b.gens = model.generators;

    for (std::size_t i = 0; i < b.gens.size(); ++i) {
        const auto& g = b.gens[i];
        if (g.degree < 2) return false;
        if (!g.phi.empty() && g.phi.size() != ring.dim(g.degree)) return false;
        SullivanPolynomial dd;
        for (const auto& [mono, coeff] : g.differential) {
            if (coeff == 0) return false;
            // Differentials only involve earlier generators and carry no
            // linear term (minimality).
            long letters = 0;
            for (const auto& [idx, exp] : mono) {
                if (idx >= i) return false;
                letters += exp;
            }
            if (letters < 2) return false;
            if (b.mono_degree(mono) != g.degree + 1) return false;
            for (const auto& [mono2, coeff2] : b.d_mono(mono)) {
                Rat& slot = dd[mono2];
                slot += coeff * coeff2;
                if (slot == 0) dd.erase(mono2);
            }
        }
        if (!dd.empty()) return false;  // d o d != 0

        // The cochain map must intertwine d with the zero differential:
        // phi(dg) = 0 for every generator.
        if (!g.differential.empty()) {
            std::vector<Rat> image(ring.dim(g.degree + 1), Rat(0));
            for (const auto& [mono, coeff] : g.differential) {
                const auto value = b.phi_mono(mono);
                for (std::size_t k = 0; k < value.size(); ++k) image[k] += coeff * value[k];
            }
            for (const auto& c : image)
                if (c != 0) return false;
        }
    }

    // Degreewise cohomology comparison up to the cutoff.
    for (long q = 2; q <= model.cutoff; ++q) {
        const auto here = b.monomials(q);
        const auto above = b.monomials(q + 1);
        const auto below = b.monomials(q - 1);
        const auto cocycles = cocycle_basis(b, here, above);
        const auto boundaries = coboundary_basis(b, below, here);
        const RatMatrix phi = b.phi_matrix(q, here);
        const auto dead = intersect_with_kernel(cocycles, phi);
        // Injectivity: every cocycle killed by phi must already be a boundary.
        if (rank_of(dead, here.size()) != rank_of(boundaries, here.size())) return false;
        // Surjectivity: the image of the cocycles spans the ring's degree q.
        std::size_t image_rank = 0;
        {
            std::vector<std::vector<Rat>> image;
            for (const auto& z : cocycles) {
                std::vector<Rat> value(ring.dim(q), Rat(0));
                for (std::size_t i = 0; i < ring.dim(q); ++i) {
                    Rat sum = 0;
                    for (std::size_t k = 0; k < here.size(); ++k)
                        sum += phi.at(i, k) * z[k];
                    value[i] = sum;
                }
                image.push_back(std::move(value));
            }
            image_rank = row_space_basis(image, ring.dim(q)).size();
        }
        if (image_rank != ring.dim(q)) return false;
    }
    return true;
}

EllipticityReport ellipticity_report(const SullivanModel& model, const GradedRing& ring) {
    const long fd = ring.top_degree();
    if (model.cutoff < 2 * fd - 1) throw std::invalid_argument("cutoff too small");
    EllipticityReport report;
    bool window_clear = true;
    for (const auto& g : model.generators) {
        ++report.total_rank;
        report.chi_pi += g.degree % 2 == 0 ? 1 : -1;
        if (g.degree > model.cutoff - fd && g.degree <= model.cutoff) window_clear = false;
    }
    report.verdict = (window_clear && report.chi_pi <= 0) ? "elliptic at cutoff"
                                                          : "inconclusive at cutoff";
    return report;
}

}  // namespace ellipt
