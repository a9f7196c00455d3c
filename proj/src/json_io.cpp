#include "ellipt/json_io.hpp"

namespace ellipt {

using nlohmann::json;

json json_int(const Int& value) {
    if (value.fits_slong_p()) return json(static_cast<std::int64_t>(value.get_si()));
    return json(value.get_str());
}

json json_rat(const Rat& value) {
    Rat canonical = value;
    canonical.canonicalize();
    if (canonical.get_den() == 1) return json_int(canonical.get_num());
    return json(to_string(canonical));
}

json to_json(const LambdaProduct& lp) {
    json factors = json::array();
    for (const auto& [m, e] : lp.factors())
        factors.push_back(json::array({json_int(m), json_int(e)}));
    return {{"unit", lp.unit()}, {"factors", factors}};
}

json to_json(const IntPolynomial& p) {
    json coeffs = json::array();
    for (const auto& c : p.coefficients()) coeffs.push_back(json_int(c));
    return coeffs;
}

json to_json(const Divisor& divisor) {
    json out = json::array();
    for (const auto& [m, c] : divisor.terms())
        out.push_back(json::array({json_int(m), json_int(c.get_num()), json_int(c.get_den())}));
    return out;
}

json to_json(const WeightSystem& ws) {
    json out = json::array();
    for (const auto& w : ws.weights()) out.push_back(json_rat(w));
    return out;
}

json to_json(const FamilyInstance& inst) {
    json out = {{"family", family_name(inst.family)}};
    if (inst.family == Family::H) {
        json a = json::array();
        for (const auto& ai : inst.a) a.push_back(json_int(ai));
        out["a"] = a;
    } else {
        out["n"] = inst.n;
        out["d"] = inst.d;
    }
    return out;
}

json to_json(const KollarSolution& sol) {
    json weights = json::array();
    for (const auto& w : sol.weights) weights.push_back(json_rat(w));
    return {{"d", json_int(sol.d)},
            {"weights", weights},
            {"integral", sol.integral},
            {"w_star", json_int(sol.w_star)},
            {"admissible", sol.admissible},
            {"quasi_smoothness_checked", sol.quasi_smoothness_checked}};
}

json to_json(const BettiNumbers& betti) {
    json b = json::array();
    for (const auto& bi : betti.b) b.push_back(json_int(bi));
    return {{"b", b}, {"flags", betti.flags}};
}

json to_json(const SelfIntersection& k) {
    return {{"value", json_int(k.value)}, {"sign", k.sign}, {"convention", k.convention}};
}

json to_json(const GradedRing& ring) {
    json basis = json::array();
    std::vector<std::pair<long, std::size_t>> flat;  // flat index -> (degree, i)
    for (long degree = 0; degree <= ring.top_degree(); degree += 2)
        for (std::size_t i = 0; i < ring.dim(degree); ++i) {
            basis.push_back({{"label", ring.label(degree, i)}, {"degree", degree}});
            flat.emplace_back(degree, i);
        }
    json table = json::array();
    for (std::size_t i = 1; i < flat.size(); ++i)
        for (std::size_t j = i; j < flat.size(); ++j) {
            const auto [da, ia] = flat[i];
            const auto [db, ib] = flat[j];
            if (da + db > ring.top_degree()) continue;
            const auto coeffs = ring.product(da, ia, db, ib);
            bool nonzero = false;
            for (const auto& c : coeffs)
                if (c != 0) nonzero = true;
            if (!nonzero) continue;
            json row = json::array();
            for (const auto& c : coeffs) row.push_back(json_rat(c));
            table.push_back(json::array({i, j, row}));
        }
    return {{"mode", ring.mode() == GradedRing::CoefficientMode::integers ? "integers"
                                                                          : "rationals"},
            {"top_degree", ring.top_degree()},
            {"basis", basis},
            {"table", table}};
}

json to_json(const RatMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(json_rat(m.at(i, j)));
        rows.push_back(row);
    }
    return rows;
}

json to_json(const RatMatrix::Inertia& inertia) {
    return {{"positive", inertia.positive},
            {"negative", inertia.negative},
            {"zero", inertia.zero}};
}

json to_json(const SullivanModel& model) {
    json generators = json::array();
    for (const auto& g : model.generators) {
        json phi = json::array();
        for (const auto& c : g.phi) phi.push_back(json_rat(c));
        json differential = json::array();
        for (const auto& [mono, coeff] : g.differential) {
            json exps = json::array();
            for (const auto& [idx, e] : mono) exps.push_back(json::array({idx, e}));
            differential.push_back({{"coefficient", json_rat(coeff)}, {"monomial", exps}});
        }
        generators.push_back({{"label", g.label},
                              {"degree", g.degree},
                              {"phi", phi},
                              {"differential", differential}});
    }
    return {{"cutoff", model.cutoff}, {"generators", generators}};
}

json to_json(const EllipticityReport& report) {
    return {{"total_rank", report.total_rank},
            {"chi_pi", report.chi_pi},
            {"verdict", report.verdict}};
}

json to_json(const BinaryCubicForm& f) {
    return {{"a", json_int(f.a)}, {"b", json_int(f.b)}, {"c", json_int(f.c)},
            {"d", json_int(f.d)}};
}

std::string verdict_string(Gl2zVerdict verdict) {
    switch (verdict) {
        case Gl2zVerdict::equivalent: return "true";
        case Gl2zVerdict::inequivalent: return "false";
        case Gl2zVerdict::unknown: return "unknown";
    }
    throw std::logic_error("unreachable");
}

}  // namespace ellipt
