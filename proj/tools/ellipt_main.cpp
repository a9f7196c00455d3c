// Command-line front end: singularity invariants, ring reports, Sullivan
// models, threefold classification, catalog generation, and the one-shot
// verification suite. Exit codes: 0 success, 1 verification/internal
// failure, 2 usage error.
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ellipt/catalog.hpp"
#include "ellipt/cubic_forms.hpp"
#include "ellipt/families.hpp"
#include "ellipt/graded_ring.hpp"
#include "ellipt/json_io.hpp"
#include "ellipt/milnor_orlik.hpp"
#include "ellipt/sullivan.hpp"

namespace {

using ellipt::Family;
using ellipt::FamilyInstance;
using ellipt::GradedRing;
using ellipt::Int;
using ellipt::Rat;
using nlohmann::json;

long parse_long(const std::string& text) {
    std::size_t used = 0;
    long value = 0;
    try {
        value = std::stol(text, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument("not an integer: '" + text + "'");
    }
    if (used != text.size()) throw std::invalid_argument("not an integer: '" + text + "'");
    return value;
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::string piece;
    std::istringstream in(text);
    while (std::getline(in, piece, sep)) parts.push_back(piece);
    return parts;
}

std::vector<long> parse_long_list(const std::string& text) {
    std::vector<long> out;
    for (const auto& piece : split(text, ',')) out.push_back(parse_long(piece));
    if (out.empty()) throw std::invalid_argument("empty list: '" + text + "'");
    return out;
}

std::vector<Rat> parse_rational_list(const std::string& text) {
    std::vector<Rat> out;
    for (const auto& piece : split(text, ',')) out.push_back(ellipt::parse_rational(piece));
    if (out.empty()) throw std::invalid_argument("empty list: '" + text + "'");
    return out;
}

std::vector<Int> parse_int_vector(const std::string& text) {
    std::vector<Int> out;
    for (const auto& piece : split(text, ',')) out.emplace_back(parse_long(piece));
    if (out.empty()) throw std::invalid_argument("empty list: '" + text + "'");
    return out;
}

Family parse_family(const std::string& name) {
    if (name == "H" || name == "h") return Family::H;
    if (name == "V" || name == "v") return Family::V;
    if (name == "W" || name == "w") return Family::W;
    throw std::invalid_argument("unknown family '" + name + "' (expected H, V, or W)");
}

// pn:N | s2 | twisted-projective:N:D | twisted-quadric:K:A | smooth-quadric:K
// | odd-quadric:K | wedge-s2 | pe:N
GradedRing parse_ring_spec(const std::string& spec) {
    const auto parts = split(spec, ':');
    const std::string& head = parts.at(0);
    const auto arity = [&](std::size_t want) {
        if (parts.size() != want)
            throw std::invalid_argument("ring spec '" + spec + "' has wrong arity");
    };
    if (head == "pn") {
        arity(2);
        return ellipt::truncated_polynomial_ring(parse_long(parts[1]));
    }
    if (head == "s2") {
        arity(1);
        return ellipt::truncated_polynomial_ring(1);
    }
    if (head == "twisted-projective") {
        arity(3);
        return ellipt::twisted_projective_ring(parse_long(parts[1]), parse_long(parts[2]));
    }
    if (head == "twisted-quadric") {
        arity(3);
        return ellipt::twisted_quadric_ring(parse_long(parts[1]),
                                            ellipt::parse_rational(parts[2]));
    }
    if (head == "smooth-quadric") {
        arity(2);
        return ellipt::smooth_quadric_ring(parse_long(parts[1]));
    }
    if (head == "odd-quadric") {
        arity(2);
        return ellipt::odd_quadric_rational_ring(parse_long(parts[1]));
    }
    if (head == "wedge-s2") {
        arity(1);
        return ellipt::wedge_two_spheres_ring();
    }
    if (head == "pe") {
        arity(2);
        return ellipt::pe_cohomology_ring(Int(parse_long(parts[1])));
    }
    throw std::invalid_argument(
        "unknown ring spec '" + spec +
        "' (expected pn:N, s2, twisted-projective:N:D, twisted-quadric:K:A, "
        "smooth-quadric:K, odd-quadric:K, wedge-s2, or pe:N)");
}

int emit_text(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream file(out_path, std::ios::binary);
    if (!file) {
        std::cerr << "error: cannot open '" << out_path << "'\n";
        return 1;
    }
    file << text;
    file.flush();
    if (!file) {
        std::cerr << "error: write failed for '" << out_path << "'\n";
        return 1;
    }
    return 0;
}

int emit(const json& doc, const std::string& out_path, bool pretty) {
    return emit_text(pretty ? doc.dump(2) + "\n" : doc.dump() + "\n", out_path);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact invariants of three families of singular hypersurfaces: "
                 "monodromy, Milnor numbers, Betti numbers, cohomology rings, "
                 "Sullivan models, and threefold classification."};
    app.require_subcommand(1);

    std::string family_str;
    std::string weights_str;
    std::string a_str;
    std::string ring_spec;
    std::string n_list_str;
    std::string d_list_str;
    std::string out_path;
    std::string twist_str;
    long n = -1;
    long d = -1;
    long m = -1;
    long cutoff = -1;
    long max_n = 8;
    long max_d = 8;
    long max_expand_degree = 10000;
    long entry_bound = 5;
    bool pretty = false;
    bool perturb = false;

    auto* monodromy = app.add_subcommand(
        "monodromy", "Monodromy characteristic polynomial of a singularity");
    monodromy->add_option("--family", family_str, "V or W");
    monodromy->add_option("-n", n, "Dimension parameter");
    monodromy->add_option("-d", d, "Degree parameter");
    monodromy->add_option("--weights", weights_str,
                          "Comma-separated rational weights (oracle path)");
    monodromy->add_flag("--pretty", pretty, "Indented output");
    monodromy->add_option("--out", out_path, "Write to file instead of stdout");

    auto* weights_cmd =
        app.add_subcommand("weights", "Singularity weight system of a V or W instance");
    weights_cmd->add_option("--family", family_str, "V or W")->required();
    weights_cmd->add_option("-n", n, "Dimension parameter")->required();
    weights_cmd->add_option("-d", d, "Degree parameter")->required();
    weights_cmd->add_flag("--pretty", pretty, "Indented output");
    weights_cmd->add_option("--out", out_path, "Write to file instead of stdout");

    auto* kollar = app.add_subcommand(
        "kollar", "Solve the cyclic weight system of an H instance");
    kollar->add_option("--a", a_str, "Comma-separated exponents a_0..a_{n+1}")->required();
    kollar->add_flag("--pretty", pretty, "Indented output");
    kollar->add_option("--out", out_path, "Write to file instead of stdout");

    auto* betti = app.add_subcommand("betti", "Betti numbers of an instance");
    betti->add_option("--family", family_str, "H, V, or W")->required();
    betti->add_option("-n", n, "Dimension parameter (V, W)");
    betti->add_option("-d", d, "Degree parameter (V, W)");
    betti->add_option("--a", a_str, "Exponent vector (H)");
    betti->add_flag("--pretty", pretty, "Indented output");
    betti->add_option("--out", out_path, "Write to file instead of stdout");

    auto* ring = app.add_subcommand("ring", "Graded ring presentation report");
    ring->add_option("--ring", ring_spec, "Ring spec, e.g. pn:3 or twisted-quadric:2:1")
        ->required();
    ring->add_flag("--pretty", pretty, "Indented output");
    ring->add_option("--out", out_path, "Write to file instead of stdout");

    auto* signature =
        app.add_subcommand("signature", "Poincare pairing and middle signature");
    signature->add_option("--ring", ring_spec, "Ring spec")->required();
    signature->add_flag("--pretty", pretty, "Indented output");
    signature->add_option("--out", out_path, "Write to file instead of stdout");

    auto* homotopy = app.add_subcommand(
        "homotopy-class", "Real and rational homotopy class of a twist a");
    homotopy->add_option("-a,--twist", twist_str, "Nonzero rational twist")->required();
    homotopy->add_flag("--pretty", pretty, "Indented output");
    homotopy->add_option("--out", out_path, "Write to file instead of stdout");

    auto* model = app.add_subcommand(
        "model", "Minimal Sullivan model of a formal space with the given ring");
    model->add_option("--ring", ring_spec, "Ring spec")->required();
    model->add_option("--cutoff", cutoff, "Construction cutoff degree")->required();
    model->add_flag("--pretty", pretty, "Indented output");
    model->add_option("--out", out_path, "Write to file instead of stdout");

    auto* threefolds = app.add_subcommand(
        "threefolds", "Projective-bundle threefold cubic-form classification");
    threefolds->add_option("-n", n, "Bundle twist n of the first threefold")->required();
    threefolds->add_option("-m", m, "Optional second twist to compare against");
    threefolds->add_option("--entry-bound", entry_bound,
                           "Search bound for GL2(Z) witnesses");
    threefolds->add_flag("--pretty", pretty, "Indented output");
    threefolds->add_option("--out", out_path, "Write to file instead of stdout");

    auto* catalog = app.add_subcommand(
        "catalog", "Deterministic JSON-lines catalog over a parameter grid");
    catalog->add_option("--family", family_str, "H, V, or W")->required();
    catalog->add_option("-n", n_list_str, "Comma-separated n values (V, W)");
    catalog->add_option("-d", d_list_str, "Comma-separated d values (V, W)");
    catalog->add_option("--max-n", max_n, "Use n = 0..max-n instead of a list");
    catalog->add_option("--max-d", max_d, "Use d = 2..max-d instead of a list");
    catalog->add_option("--a", a_str, "Exponent vector (H family)");
    catalog->add_option("--max-expand-degree", max_expand_degree,
                        "Skip expansion cross-checks above this degree");
    catalog->add_flag("--pretty", pretty, "Single indented document");
    catalog->add_option("--out", out_path, "Write to file instead of stdout");

    auto* verify = app.add_subcommand(
        "verify", "Run every identity suite; exit 0 iff all pass");
    verify->add_option("--max-n", max_n, "Dimension cap (default 8)");
    verify->add_option("--max-d", max_d, "Degree cap (default 8)");
    verify->add_flag("--perturb", perturb,
                     "Self-test: flip one exponent to demonstrate failure location");
    verify->add_flag("--pretty", pretty, "Indented output");
    verify->add_option("--out", out_path, "Write to file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*monodromy) {
            ellipt::WeightSystem ws({Rat(1)});
            json rec;
            if (!weights_str.empty()) {
                ws = ellipt::WeightSystem(parse_rational_list(weights_str));
            } else {
                const Family family = parse_family(family_str);
                if (family == Family::H)
                    throw std::invalid_argument(
                        "monodromy: --family must be V or W, or pass --weights");
                if (n < 0 || d < 0)
                    throw std::invalid_argument("monodromy: -n and -d are required");
                ws = family == Family::W ? ellipt::w_singularity_weights(n, d)
                                         : ellipt::v_singularity_weights(n, d);
            }
            const ellipt::LambdaProduct cp = ellipt::monodromy_char_poly(ws);
            rec["weights"] = ellipt::to_json(ws);
            rec["char_poly"] = ellipt::to_json(cp);
            rec["degree"] = ellipt::json_int(cp.degree());
            rec["value_at_1"] = cp.order_at_one() == 0 ? ellipt::json_rat(cp.value_at_one())
                                                       : json(nullptr);
            rec["milnor_number"] = ellipt::json_int(ellipt::milnor_number(ws));
            return emit(rec, out_path, pretty);
        }
        if (*weights_cmd) {
            const Family family = parse_family(family_str);
            if (family == Family::H)
                throw std::invalid_argument("weights: use the kollar subcommand for H");
            const ellipt::WeightSystem ws = family == Family::W
                                                ? ellipt::w_singularity_weights(n, d)
                                                : ellipt::v_singularity_weights(n, d);
            json rec;
            rec["weights"] = ellipt::to_json(ws);
            rec["milnor_number"] =
                ellipt::json_int(family == Family::W ? ellipt::milnor_number_W(n, d)
                                                     : ellipt::milnor_number_V(n, d));
            return emit(rec, out_path, pretty);
        }
        if (*kollar)
            return emit(ellipt::to_json(ellipt::kollar_weight_system(parse_int_vector(a_str))),
                        out_path, pretty);
        if (*betti) {
            const Family family = parse_family(family_str);
            FamilyInstance inst = FamilyInstance::v(1, 2);
            if (family == Family::H) {
                if (a_str.empty())
                    throw std::invalid_argument("betti: --a is required for family H");
                inst = FamilyInstance::h(parse_int_vector(a_str));
            } else {
                if (n < 0 || d < 0)
                    throw std::invalid_argument("betti: -n and -d are required");
                inst = family == Family::W ? FamilyInstance::w(n, d)
                                           : FamilyInstance::v(n, d);
            }
            return emit(ellipt::to_json(ellipt::betti_numbers(inst)), out_path, pretty);
        }
        if (*ring) return emit(ellipt::to_json(parse_ring_spec(ring_spec)), out_path, pretty);
        if (*signature) {
            const GradedRing r = parse_ring_spec(ring_spec);
            json rec;
            rec["pairing"] = ellipt::to_json(ellipt::poincare_pairing(r));
            rec["inertia"] = ellipt::to_json(ellipt::middle_signature(r));
            return emit(rec, out_path, pretty);
        }
        if (*homotopy) {
            const Rat a = ellipt::parse_rational(twist_str);
            json rec;
            rec["real_class"] = ellipt::real_homotopy_class(a);
            rec["rational_class"] = ellipt::json_int(ellipt::rational_homotopy_class(a));
            return emit(rec, out_path, pretty);
        }
        if (*model) {
            const GradedRing r = parse_ring_spec(ring_spec);
            const ellipt::SullivanModel mod = ellipt::minimal_model(r, cutoff);
            json rec;
            rec["model"] = ellipt::to_json(mod);
            json ranks;
            for (const auto& [degree, count] : ellipt::homotopy_ranks(mod))
                ranks[std::to_string(degree)] = count;
            rec["homotopy_ranks"] = ranks;
            if (cutoff >= 2 * r.top_degree() - 1)
                rec["ellipticity"] = ellipt::to_json(ellipt::ellipticity_report(mod, r));
            else
                rec["ellipticity"] = {
                    {"verdict", "not certified: cutoff below 2*formal_dimension-1"}};
            return emit(rec, out_path, pretty);
        }
        if (*threefolds) {
            const auto describe = [&](long twist) {
                const ellipt::BinaryCubicForm f = ellipt::pe_cubic_form(Int(twist));
                json rec;
                rec["n"] = twist;
                rec["cubic_form"] = ellipt::to_json(f);
                rec["discriminant"] = ellipt::json_int(ellipt::cubic_discriminant(f));
                rec["ring"] = ellipt::to_json(ellipt::pe_cohomology_ring(Int(twist)));
                rec["w2"] = "not computed";
                rec["p1_mod_48"] = "not computed";
                return rec;
            };
            json rec;
            rec["first"] = describe(n);
            if (m >= 0) {
                rec["second"] = describe(m);
                rec["homotopy_equivalent"] = ellipt::fn_homotopy_equivalent(Int(n), Int(m));
                rec["hirzebruch_surfaces_diffeomorphic"] =
                    ellipt::hirzebruch_diffeomorphic(Int(n), Int(m));
                rec["gl2z_equivalent"] = ellipt::verdict_string(ellipt::gl2z_equivalent(
                    ellipt::pe_cubic_form(Int(n)), ellipt::pe_cubic_form(Int(m)),
                    entry_bound));
            }
            return emit(rec, out_path, pretty);
        }
        if (*catalog) {
            const Family family = parse_family(family_str);
            std::vector<json> records;
            if (family == Family::H) {
                if (a_str.empty())
                    throw std::invalid_argument("catalog: --a is required for family H");
                records.push_back(ellipt::catalog_record(
                    FamilyInstance::h(parse_int_vector(a_str)), max_expand_degree));
            } else {
                std::vector<long> ns;
                std::vector<long> ds;
                if (!n_list_str.empty())
                    ns = parse_long_list(n_list_str);
                else
                    for (long i = 0; i <= max_n; ++i) ns.push_back(i);
                if (!d_list_str.empty())
                    ds = parse_long_list(d_list_str);
                else
                    for (long i = 2; i <= max_d; ++i) ds.push_back(i);
                records = ellipt::catalog_grid(family, ns, ds, max_expand_degree);
            }
            return emit_text(pretty ? ellipt::catalog_pretty(records)
                                    : ellipt::catalog_lines(records),
                             out_path);
        }
        if (*verify) {
            const ellipt::VerificationReport report =
                ellipt::run_verification(max_n, max_d, perturb);
            for (const auto& warning : report.warnings)
                std::cerr << "warning: " << warning << "\n";
            const int io = emit(report.to_json(), out_path, pretty);
            if (io != 0) return io;
            return report.all_passed() ? 0 : 1;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
