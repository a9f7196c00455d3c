#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "ellipt/catalog.hpp"
#include "ellipt/json_io.hpp"
#include "ellipt/sullivan.hpp"

using namespace ellipt;
using nlohmann::json;

TEST_CASE("integers render as numbers within 64 bits and strings beyond") {
    CHECK(json_int(Int(-5)) == json(-5));
    CHECK(json_int(Int("9223372036854775807")) == json(9223372036854775807LL));
    const json big = json_int(Int("9223372036854775808"));
    CHECK(big.is_string());
    CHECK(big == json("9223372036854775808"));
    CHECK(json_int(Int("-123456789012345678901234567890")) ==
          json("-123456789012345678901234567890"));
}

TEST_CASE("rationals follow the integer rule when the denominator is 1") {
    CHECK(json_rat(Rat(7)) == json(7));
    CHECK(json_rat(Rat(3, 4)) == json("3/4"));
    CHECK(json_rat(Rat(-3, 4)) == json("-3/4"));
    CHECK(json_rat(Rat(8, 2)) == json(4));
}

TEST_CASE("domain serializers against frozen shapes") {
    CHECK(to_json(LambdaProduct::binomial(2) * LambdaProduct::binomial(1, -1)) ==
          json::parse(R"({"unit": 1, "factors": [[1, -1], [2, 1]]})"));
    CHECK(to_json(IntPolynomial(std::vector<Int>{-1, 0, 1})) == json::parse("[-1, 0, 1]"));
    CHECK(to_json(weight_divisor(Rat(8, 3))) == json::parse("[[1, -1, 1], [8, 1, 3]]"));
    CHECK(to_json(w_singularity_weights(2, 3)) == json::parse(R"([2, 4, "8/3"])"));
    CHECK(to_json(FamilyInstance::w(2, 3)) ==
          json::parse(R"({"family": "W", "n": 2, "d": 3})"));
    CHECK(to_json(FamilyInstance::h({1, 1, 1, 1, 1}))["a"] ==
          json::parse("[1, 1, 1, 1, 1]"));
    CHECK(to_json(kollar_weight_system({2, 2, 2, 2, 2})) == json::parse(R"({
        "d": 33, "weights": [11, 11, 11, 11, 11], "integral": true,
        "w_star": 11, "admissible": false, "quasi_smoothness_checked": false})"));
    CHECK(to_json(BinaryCubicForm{0, 3, -3, 1}) ==
          json::parse(R"({"a": 0, "b": 3, "c": -3, "d": 1})"));
    CHECK(to_json(RatMatrix::Inertia{1, 1, 0}) ==
          json::parse(R"({"positive": 1, "negative": 1, "zero": 0})"));
    CHECK(to_json(RatMatrix::from_rows({{Rat(2), Rat(1)}, {Rat(1), Rat(1, 2)}})) ==
          json::parse(R"([[2, 1], [1, "1/2"]])"));
    CHECK(to_json(canonical_self_intersection(2, 4))["sign"] == json("zero"));
}

TEST_CASE("graded ring serialization: flat indices, unit row implied") {
    CHECK(to_json(truncated_polynomial_ring(2)) == json::parse(R"({
        "mode": "integers",
        "top_degree": 4,
        "basis": [{"label": "1", "degree": 0},
                  {"label": "x", "degree": 2},
                  {"label": "x^2", "degree": 4}],
        "table": [[1, 1, [1]]]})"));
    // Zero products are omitted: hv = 0 leaves no (h, v) entry.
    const json tq = to_json(twisted_quadric_ring(1, Rat(2)));
    for (const auto& entry : tq["table"])
        CHECK_FALSE((entry[0] == 1 && entry[1] == 2));
}

TEST_CASE("Sullivan model serialization") {
    const GradedRing ring = truncated_polynomial_ring(1);
    const json model = to_json(minimal_model(ring, 4));
    CHECK(model["cutoff"] == 4);
    REQUIRE(model["generators"].size() == 2);
    CHECK(model["generators"][0] == json::parse(R"({
        "label": "x2.0", "degree": 2, "phi": [1], "differential": []})"));
    CHECK(model["generators"][1] == json::parse(R"({
        "label": "y3.0", "degree": 3, "phi": [],
        "differential": [{"coefficient": 1, "monomial": [[0, 2]]}]})"));
}

TEST_CASE("verdict strings") {
    CHECK(verdict_string(Gl2zVerdict::equivalent) == "true");
    CHECK(verdict_string(Gl2zVerdict::inequivalent) == "false");
    CHECK(verdict_string(Gl2zVerdict::unknown) == "unknown");
}

TEST_CASE("catalog record for V(3, 5)") {
    const json rec = catalog_record(FamilyInstance::v(3, 5));
    CHECK(rec["instance"] == json::parse(R"({"family": "V", "n": 3, "d": 5})"));
    CHECK(rec["weights"] == json::parse(R"([5, 4, "16/3", "64/13"])"));
    CHECK(rec["milnor_number"] == 204);
    CHECK(rec["char_poly_degree"] == 204);
    CHECK(rec["betti"]["b"] == json::parse("[1, 0, 1, 0, 1, 0, 1]"));
    CHECK(rec["betti"]["flags"].empty());
    CHECK(rec["flags"].empty());
    CHECK(rec["canonical_self_intersection"]["sign"] == "zero");
    CHECK(!rec.contains("homotopy"));
}

TEST_CASE("catalog record flags a skipped expansion") {
    const json rec = catalog_record(FamilyInstance::w(2, 3), 3);
    CHECK(rec["milnor_number"] == 5);
    CHECK(rec["flags"] ==
          json::parse(R"(["outside theorem hypotheses", "skipped: degree cap"])"));
    CHECK(!rec.contains("homotopy"));
}

TEST_CASE("catalog record homotopy classes in the even/even regime") {
    const json w24 = catalog_record(FamilyInstance::w(2, 4));
    CHECK(w24["homotopy"] ==
          json::parse(R"({"real_class": -1, "rational_class": "not computed"})"));
    const json w44 = catalog_record(FamilyInstance::w(4, 4));
    CHECK(w44["homotopy"]["real_class"] == 1);
    CHECK(w44["betti"]["b"][4] == 2);
}

TEST_CASE("catalog record for an H instance") {
    const json rec = catalog_record(FamilyInstance::h({2, 2, 2, 2, 2}));
    CHECK(rec["kollar"]["d"] == 33);
    CHECK(rec["weights"] == json::parse("[11, 11, 11, 11, 11]"));
    const auto& flags = rec["flags"];
    CHECK(flags == json::parse(R"(["quasi-smoothness unchecked",
        "outside theorem hypotheses: weight system not admissible",
        "admissible=false"])"));
    CHECK(rec["canonical_self_intersection"]["value"] == 33 * 28 * 28 * 28);
}

TEST_CASE("catalog output is deterministic") {
    const json once = catalog_record(FamilyInstance::v(2, 3));
    const json twice = catalog_record(FamilyInstance::v(2, 3));
    CHECK(once.dump() == twice.dump());

    const std::vector<long> ns = {0, 1, 2};
    const std::vector<long> ds = {2, 3};
    const auto grid_a = catalog_grid(Family::W, ns, ds);
    const auto grid_b = catalog_grid(Family::W, ns, ds);
    CHECK(catalog_lines(grid_a) == catalog_lines(grid_b));

    // Concurrent cells aggregate in (n, d) order.
    std::size_t cell = 0;
    for (long n : ns)
        for (long d : ds)
            CHECK(grid_a[cell++] == catalog_record(FamilyInstance::w(n, d)));

    CHECK_THROWS_AS(catalog_grid(Family::H, ns, ds), std::invalid_argument);
}

TEST_CASE("catalog formats") {
    const auto records = catalog_grid(Family::V, {1}, {2, 3});
    const std::string lines = catalog_lines(records);
    CHECK(lines.back() == '\n');
    CHECK(std::count(lines.begin(), lines.end(), '\n') == 2);
    CHECK(json::parse(lines.substr(0, lines.find('\n'))) == records[0]);
    const std::string pretty = catalog_pretty(records);
    CHECK(json::parse(pretty) == json(records));
    CHECK(pretty.back() == '\n');
}

TEST_CASE("verification report") {
    const VerificationReport report = run_verification(4, 4);
    CHECK(report.all_passed());
    CHECK(report.warnings.empty());
    CHECK(report.suites.size() >= 10);
    for (const auto& suite : report.suites) {
        CHECK(suite.checks > 0);
        CHECK(suite.passed());
    }
    const json doc = report.to_json();
    CHECK(doc["all_passed"] == true);
    CHECK(doc["suites"].size() == report.suites.size());
}

TEST_CASE("perturbed verification fails with a located identity") {
    const VerificationReport report = run_verification(2, 3, true);
    CHECK_FALSE(report.all_passed());
    bool found = false;
    for (const auto& suite : report.suites)
        for (const auto& failure : suite.failures)
            if (failure.find("Phi closed form vs Milnor-Orlik weights") != std::string::npos)
                found = true;
    CHECK(found);
}

TEST_CASE("empty verification range warns and passes vacuously") {
    const VerificationReport report = run_verification(-1, 3);
    CHECK(report.all_passed());
    CHECK(report.warnings ==
          std::vector<std::string>{"empty parameter range: nothing verified"});
}
