#include "ellipt/catalog.hpp"

#include <future>
#include <random>
#include <set>
#include <sstream>

#include "ellipt/cubic_forms.hpp"
#include "ellipt/graded_ring.hpp"
#include "ellipt/json_io.hpp"
#include "ellipt/sullivan.hpp"

namespace ellipt {

namespace {

using nlohmann::json;

json vw_record(const FamilyInstance& inst, long max_expand_degree) {
    const long n = inst.n;
    const long d = inst.d;
    const bool is_w = inst.family == Family::W;
    json rec;
    rec["instance"] = to_json(inst);
    const WeightSystem ws =
        is_w ? w_singularity_weights(n, d) : v_singularity_weights(n, d);
    rec["weights"] = to_json(ws);
    rec["milnor_number"] = json_int(is_w ? milnor_number_W(n, d) : milnor_number_V(n, d));
    const LambdaProduct cp = monodromy_char_poly(ws);
    rec["char_poly"] = to_json(cp);
    rec["char_poly_degree"] = json_int(cp.degree());
    rec["value_at_1"] =
        cp.order_at_one() == 0 ? json_rat(cp.value_at_one()) : json(nullptr);

    const BettiNumbers betti = betti_numbers(inst);
    rec["betti"] = to_json(betti);
    std::vector<std::string> flags = betti.flags;

    // Expansion cross-check, skipped (and flagged) above the degree cap.
    if (cp.degree() <= max_expand_degree) {
        const IntPolynomial expanded = cp.expand(Int(max_expand_degree));
        if (Int(expanded.degree()) != cp.degree())
            throw std::logic_error("catalog: expansion degree mismatch");
        if (cp.order_at_one() == 0 && expanded.evaluate(Rat(1)) != cp.value_at_one())
            throw std::logic_error("catalog: expansion value-at-1 mismatch");
    } else {
        flags.push_back("skipped: degree cap");
    }

    // The real-homotopy classification of W applies in the even/even regime.
    if (is_w && n >= 2 && n % 2 == 0 && d % 2 == 0) {
        const long k = n / 2;
        const Rat a = k % 2 == 0 ? Rat(1) : Rat(-1);
        rec["homotopy"] = {{"real_class", real_homotopy_class(a)},
                           {"rational_class", "not computed"}};
    }
    if (n >= 1) rec["canonical_self_intersection"] = to_json(canonical_self_intersection(n, d));
    rec["flags"] = flags;
    return rec;
}

json h_record(const FamilyInstance& inst) {
    json rec;
    rec["instance"] = to_json(inst);
    const KollarSolution sol = kollar_weight_system(inst.a);
    rec["kollar"] = to_json(sol);
    json weights = json::array();
    for (const auto& w : sol.weights) weights.push_back(json_rat(w));
    rec["weights"] = weights;
    const BettiNumbers betti = betti_numbers(inst);
    rec["betti"] = to_json(betti);
    std::vector<std::string> flags = betti.flags;
    if (!sol.admissible) flags.push_back("admissible=false");
    rec["canonical_self_intersection"] =
        to_json(canonical_self_intersection(inst.dimension(), sol.d));
    rec["flags"] = flags;
    return rec;
}

}  // namespace

json catalog_record(const FamilyInstance& inst, long max_expand_degree) {
    if (inst.family == Family::H) return h_record(inst);
    return vw_record(inst, max_expand_degree);
}

std::vector<json> catalog_grid(Family family, const std::vector<long>& ns,
                               const std::vector<long>& ds, long max_expand_degree) {
    if (family == Family::H)
        throw std::invalid_argument("catalog_grid: H instances are given by exponent "
                                    "vectors, not an (n, d) grid");
    std::vector<std::future<json>> cells;
    for (long n : ns)
        for (long d : ds) {
            const FamilyInstance inst =
                family == Family::W ? FamilyInstance::w(n, d) : FamilyInstance::v(n, d);
            cells.push_back(std::async(std::launch::async, [inst, max_expand_degree] {
                return catalog_record(inst, max_expand_degree);
            }));
        }
    std::vector<json> records;
    records.reserve(cells.size());
    for (auto& cell : cells) records.push_back(cell.get());
    return records;
}

std::string catalog_lines(const std::vector<json>& records) {
    std::ostringstream out;
    for (const auto& rec : records) out << rec.dump() << "\n";
    return out.str();
}

std::string catalog_pretty(const std::vector<json>& records) {
    return json(records).dump(2) + "\n";
}

bool VerificationReport::all_passed() const {
    for (const auto& suite : suites)
        if (!suite.passed()) return false;
    return true;
}

json VerificationReport::to_json() const {
    json out;
    json suite_list = json::array();
    for (const auto& suite : suites)
        suite_list.push_back({{"name", suite.name},
                              {"checks", suite.checks},
                              {"passed", suite.passed()},
                              {"failures", suite.failures}});
    out["suites"] = suite_list;
    out["warnings"] = warnings;
    out["all_passed"] = all_passed();
    return out;
}

namespace {

struct Suite {
    SuiteResult result;
    explicit Suite(std::string name) { result.name = std::move(name); }
    void check(bool ok, const std::string& location) {
        ++result.checks;
        if (!ok) result.failures.push_back(location);
    }
};

std::string at(long n, long d) {
    return "n=" + std::to_string(n) + " d=" + std::to_string(d);
}

void suite_oracle(VerificationReport& report, long max_n, long max_d, bool perturb) {
    Suite s("oracle equivalence");
    bool perturbed_once = false;
    for (long n = 0; n <= max_n; n += 2)
        for (long d = 2; d <= max_d; ++d) {
            LambdaProduct closed = phi_closed_form(n, d);
            if (perturb && !perturbed_once) {
                closed *= LambdaProduct::binomial(closed.factors().empty()
                                                      ? Int(2)
                                                      : closed.factors().begin()->first);
                perturbed_once = true;
            }
            s.check(closed == monodromy_char_poly(w_singularity_weights(n, d)),
                    "Phi closed form vs Milnor-Orlik weights at " + at(n, d));
        }
    for (long n = 1; n <= max_n; ++n)
        for (long d = 2; d <= max_d; ++d)
            s.check(delta_closed_form(n, d) ==
                        monodromy_char_poly(v_singularity_weights(n, d)),
                    "Delta closed form vs Milnor-Orlik weights at " + at(n, d));
    report.suites.push_back(s.result);
}

void suite_degrees(VerificationReport& report, long max_n, long max_d) {
    Suite s("degree formulas");
    for (long d = 2; d <= max_d; ++d) {
        for (long n = 0; n <= max_n; n += 2) {
            const Int expected =
                (int_pow(Int(d - 1), static_cast<unsigned long>(n) + 2) - 1) / d;
            s.check(phi_closed_form(n, d).degree() == expected,
                    "deg Phi = ((d-1)^{n+2} - 1)/d at " + at(n, d));
            s.check(milnor_number_W(n, d) == expected, "mu_W = deg Phi at " + at(n, d));
        }
        for (long n = 1; n <= max_n; ++n) {
            const Int sign = n % 2 == 0 ? 1 : -1;
            const Int expected =
                (int_pow(Int(d - 1), static_cast<unsigned long>(n) + 2) +
                 sign * (d - 1)) /
                d;
            s.check(delta_closed_form(n, d).degree() == expected,
                    "deg Delta = ((d-1)^{n+2} + (-1)^n (d-1))/d at " + at(n, d));
            s.check(milnor_number_V(n, d) == expected, "mu_V = deg Delta at " + at(n, d));
        }
    }
    report.suites.push_back(s.result);
}

void suite_value_at_one(VerificationReport& report, long max_n, long max_d) {
    Suite s("value at one");
    for (long m = 0; 2 * m <= max_n; ++m)
        for (long d = 2; d <= max_d; ++d)
            s.check(phi_closed_form(2 * m, d).value_at_one() ==
                        Rat(int_pow(Int(d - 1), static_cast<unsigned long>(m) + 1)),
                    "Phi_{2m}(1) = (d-1)^{m+1} at m=" + std::to_string(m) +
                        " d=" + std::to_string(d));
    report.suites.push_back(s.result);
}

void suite_thom_sebastiani(VerificationReport& report, long max_n, long max_d) {
    Suite s("thom-sebastiani");
    for (long n = 0; n <= std::min<long>(max_n, 6); n += 2)
        for (long d = 2; d <= std::min<long>(max_d, 5); ++d)
            s.check(verify_ts_identity(n, d),
                    "Delta_{n+1} Phi_n = root-of-unity product at " + at(n, d));
    report.suites.push_back(s.result);
}

void suite_expansion(VerificationReport& report, long max_n, long max_d,
                     long max_expand_degree) {
    Suite s("expansion spot checks");
    if (max_n >= 2 && max_d >= 3) {
        const IntPolynomial p = phi_closed_form(2, 3).expand();
        const IntPolynomial expected(std::vector<Int>{1, 1, 0, 0, 1, 1});
        s.check(p == expected, "Phi_2^3 = t^5 + t^4 + t + 1");
    }
    std::mt19937_64 rng(20240826);
    std::uniform_int_distribution<long> num(-20, 20);
    std::uniform_int_distribution<long> den(1, 10);
    const auto spot_check = [&](const LambdaProduct& lp, const std::string& what) {
        if (lp.degree() > max_expand_degree) return;
        const IntPolynomial p = lp.expand(Int(max_expand_degree));
        for (int trial = 0; trial < 20; ++trial) {
            Rat t0;
            do {
                t0 = Rat(num(rng), den(rng));
                t0.canonicalize();
            } while (t0 == 1 || t0 == -1);  // rational roots of unity
            s.check(p.evaluate(t0) == lp.evaluate(t0),
                    what + " expansion agrees at t=" + to_string(t0));
        }
    };
    for (long d = 2; d <= max_d; ++d) {
        for (long n = 0; n <= max_n; n += 2)
            spot_check(phi_closed_form(n, d), "Phi at " + at(n, d));
        for (long n = 1; n <= max_n; ++n)
            spot_check(delta_closed_form(n, d), "Delta at " + at(n, d));
    }
    report.suites.push_back(s.result);
}

void suite_betti(VerificationReport& report, long max_n, long max_d) {
    Suite s("betti numbers");
    for (long n = 2; n <= max_n; n += 2)
        for (long d = 2; d <= max_d; d += 2) {
            const BettiNumbers betti = betti_numbers(FamilyInstance::w(n, d));
            bool ok = betti.b.size() == static_cast<std::size_t>(2 * n + 1);
            for (long i = 0; ok && i <= 2 * n; ++i) {
                const Int expected = i == n ? Int(2) : Int(i % 2 == 0 ? 1 : 0);
                ok = betti.b[static_cast<std::size_t>(i)] == expected;
            }
            s.check(ok, "W homology quadric pattern at " + at(n, d));
        }
    for (long n = 1; n <= max_n; ++n)
        for (long d = 2; d <= max_d; ++d) {
            const BettiNumbers betti = betti_numbers(FamilyInstance::v(n, d));
            bool ok = betti.b.size() == static_cast<std::size_t>(2 * n + 1);
            for (long i = 0; ok && i <= 2 * n; ++i)
                ok = betti.b[static_cast<std::size_t>(i)] == Int(i % 2 == 0 ? 1 : 0);
            s.check(ok, "V projective space pattern at " + at(n, d));
        }
    for (const auto& a : std::vector<std::vector<Int>>{
             {1, 1, 1, 1, 1}, {2, 2, 2, 2, 2}, {1, 2, 1, 2, 1}}) {
        const BettiNumbers betti = betti_numbers(FamilyInstance::h(a));
        bool ok = betti.b.size() == 7;
        for (long i = 0; ok && i <= 6; ++i)
            ok = betti.b[static_cast<std::size_t>(i)] == Int(i % 2 == 0 ? 1 : 0);
        s.check(ok, "H projective space pattern (n=3)");
    }
    report.suites.push_back(s.result);
}

void suite_signature(VerificationReport& report) {
    Suite s("signatures");
    for (long k = 1; k <= 4; ++k) {
        const Rat a = k % 2 == 0 ? Rat(1) : Rat(-1);
        const auto twisted = middle_signature(twisted_quadric_ring(k, a));
        const auto smooth = middle_signature(smooth_quadric_ring(k));
        s.check(twisted == smooth,
                "twisted (-1)^k signature = smooth quadric signature at k=" +
                    std::to_string(k));
        s.check(quadric_vanishing_class_check(k),
                "v = 2l - h^k satisfies hv=0, h^2k=(-1)^k v^2 at k=" + std::to_string(k));
        for (const Rat& tw : {Rat(1), Rat(2), Rat(3), Rat(-1), Rat(-2), Rat(-3)}) {
            const auto inertia = middle_signature(twisted_quadric_ring(k, tw));
            const RatMatrix::Inertia expected =
                tw > 0 ? RatMatrix::Inertia{2, 0, 0} : RatMatrix::Inertia{1, 1, 0};
            s.check(inertia == expected, "twist sign decides inertia at k=" +
                                             std::to_string(k) + " a=" + to_string(tw));
        }
    }
    report.suites.push_back(s.result);
}

void suite_self_intersection(VerificationReport& report) {
    Suite s("quadric self-intersections");
    for (long k = 0; k <= 6; ++k)
        s.check(linear_space_self_intersection(2, k) == Rat(k % 2 == 0 ? 1 : 0),
                "ruling self-intersection in a quadric at k=" + std::to_string(k));
    report.suites.push_back(s.result);
}

void suite_homotopy_classes(VerificationReport& report) {
    Suite s("homotopy classes");
    std::mt19937_64 rng(20240827);
    std::uniform_int_distribution<long> pick(-60, 60);
    std::uniform_int_distribution<long> scale(1, 30);
    for (int trial = 0; trial < 200; ++trial) {
        long an = pick(rng);
        if (an == 0) an = 7;
        Rat a(an, scale(rng));
        a.canonicalize();
        long rn = pick(rng);
        if (rn == 0) rn = 3;
        Rat r(rn, scale(rng));
        r.canonicalize();
        s.check(real_homotopy_class(a * r * r) == real_homotopy_class(a),
                "real class invariant under a -> a r^2 (trial " + std::to_string(trial) +
                    ")");
        s.check(rational_homotopy_class(a * r * r) == rational_homotopy_class(a),
                "rational class invariant under a -> a r^2 (trial " +
                    std::to_string(trial) + ")");
    }
    std::set<Int> classes;
    for (long a : {1, 2, 3, 5, 6}) classes.insert(rational_homotopy_class(Rat(a)));
    s.check(classes.size() == 5, "rational classes of {1,2,3,5,6} pairwise distinct");
    s.check(squarefree_part(Rat(-4, 9)) == -1, "squarefree_part(-4/9) = -1");
    report.suites.push_back(s.result);
}

void suite_kollar(VerificationReport& report) {
    Suite s("kollar weight system");
    {
        const KollarSolution sol = kollar_weight_system({2, 2, 2, 2, 2});
        bool ok = sol.d == 33 && sol.weights.size() == 5 && !sol.admissible &&
                  sol.integral && sol.w_star == 11;
        for (const auto& w : sol.weights) ok = ok && w == 11;
        s.check(ok, "a=(2,2,2,2,2): d=33, w=(11,...,11), admissible=false");
    }
    std::mt19937_64 rng(20240828);
    std::uniform_int_distribution<long> entry(1, 5);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<Int> a;
        for (int i = 0; i < 5; ++i) a.emplace_back(entry(rng));
        const KollarSolution sol = kollar_weight_system(a);
        bool ok = true;
        const std::size_t len = a.size();
        for (std::size_t i = 0; i < len; ++i) {
            const std::size_t prev = (i + len - 1) % len;
            if (sol.weights[i] + Rat(a[prev]) * sol.weights[prev] != Rat(sol.d))
                ok = false;
        }
        s.check(ok, "cyclic system residual zero (trial " + std::to_string(trial) + ")");
    }
    report.suites.push_back(s.result);
}

void suite_sullivan(VerificationReport& report) {
    Suite s("sullivan models");
    for (long n = 1; n <= 3; ++n) {
        const GradedRing ring = truncated_polynomial_ring(n);
        const SullivanModel model = minimal_model(ring, 2 * n + 1);
        auto ranks = homotopy_ranks(model);
        s.check(ranks == std::map<long, long>{{2, 1}, {2 * n + 1, 1}},
                "P^n generators {2, 2n+1} at n=" + std::to_string(n));
        s.check(verify_model(ring, model), "P^n model verifies at n=" + std::to_string(n));
    }
    for (long k = 1; k <= 2; ++k)
        for (const Rat& a : {Rat(1), Rat(-1), Rat(2)}) {
            const GradedRing ring = twisted_quadric_ring(k, a);
            const SullivanModel model = minimal_model(ring, 4 * k);
            std::map<long, long> expected;
            ++expected[2];
            ++expected[2 * k];
            ++expected[2 * k + 1];
            ++expected[4 * k - 1];
            s.check(homotopy_ranks(model) == expected,
                    "twisted quadric generators {2, 2k, 2k+1, 4k-1} at k=" +
                        std::to_string(k) + " a=" + to_string(a));
        }
    {
        const GradedRing ring = wedge_two_spheres_ring();
        const SullivanModel model = minimal_model(ring, 6);
        const EllipticityReport rep = ellipticity_report(model, ring);
        s.check(rep.verdict == "inconclusive at cutoff", "wedge control stays inconclusive");
    }
    report.suites.push_back(s.result);
}

void suite_threefold_cubic_forms(VerificationReport& report) {
    Suite s("threefold cubic forms");
    for (long n = 0; n <= 20; ++n) {
        s.check(cubic_discriminant(pe_cubic_form(n)) == Int(-27) * n * n,
                "discriminant -27 n^2 at n=" + std::to_string(n));
        s.check(triple_product_form(pe_cohomology_ring(n)) == pe_cubic_form(n),
                "triple-product form matches at n=" + std::to_string(n));
    }
    for (long n = 0; n <= 20; ++n)
        for (long m = 0; m <= 20; ++m) {
            s.check(fn_homotopy_equivalent(n, m) == (n == m),
                    "homotopy equivalence iff n=m at n=" + std::to_string(n) +
                        " m=" + std::to_string(m));
            s.check(hirzebruch_diffeomorphic(n, m) == ((n - m) % 2 == 0),
                    "diffeomorphism iff parity at n=" + std::to_string(n) +
                        " m=" + std::to_string(m));
        }
    s.check(gl2z_equivalent(pe_cubic_form(1), pe_cubic_form(2), 5) ==
                Gl2zVerdict::inequivalent,
            "discriminants separate pe forms 1 and 2");
    report.suites.push_back(s.result);
}

}  // namespace

VerificationReport run_verification(long max_n, long max_d, bool perturb) {
    VerificationReport report;
    if (max_n < 0 || max_d < 2) {
        report.warnings.push_back("empty parameter range: nothing verified");
        return report;
    }
    suite_oracle(report, max_n, max_d, perturb);
    suite_degrees(report, max_n, max_d);
    suite_value_at_one(report, std::min<long>(max_n, 8), max_d);
    suite_thom_sebastiani(report, max_n, max_d);
    suite_expansion(report, max_n, max_d, 10000);
    suite_betti(report, max_n, max_d);
    suite_signature(report);
    suite_self_intersection(report);
    suite_homotopy_classes(report);
    suite_kollar(report);
    suite_sullivan(report);
    suite_threefold_cubic_forms(report);
    return report;
}

}  // namespace ellipt
