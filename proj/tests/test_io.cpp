#include <doctest.h>

#include "qolimits/io.hpp"
#include "support/generators.hpp"

using namespace qolimits;
using namespace qolimits::testing;

namespace {

void check_error(const std::string& text, std::size_t line, std::size_t column, const std::string& fragment) {
    try {
        parse_branch(text);
        FAIL("expected a parse error for: " << text);
    } catch (const ParseError& e) {
        CHECK(e.line() == line);
        CHECK(e.column() == column);
        CHECK_MESSAGE(std::string(e.what()).find(fragment) != std::string::npos, e.what());
    }
}

bool same_spec(const BranchSpec& a, const BranchSpec& b) {
    if (a.variables != b.variables || a.monomials.size() != b.monomials.size()) return false;
    for (std::size_t i = 0; i < a.monomials.size(); ++i)
        if (!(a.monomials[i].exponents == b.monomials[i].exponents) || a.monomials[i].coeff != b.monomials[i].coeff)
            return false;
    return true;
}

Report report_for(const BranchSpec& spec) { return analyze(structure_of(spec)); }

}  // namespace

TEST_CASE("parse_branch examples") {
    const auto one = parse_branch("vars x1\nmonomial 1 : x1^1/2");
    CHECK(same_spec(one, catalog_a()));
    CHECK(same_spec(parse_branch("vars x1 x2\nmonomial 1 : x1^1/2\nmonomial 1 : x1^1/2 x2^3/2"), catalog_b()));
    const auto commented = parse_branch("# header\n\nvars x1   x2 # two\nmonomial -3/2:x1^2/3 x2^2/3\r\n");
    CHECK(commented.monomials.front().coeff == R(-3, 2));
    CHECK(commented.monomials.front().exponents == ExponentVector{{"x1", R(2, 3)}, {"x2", R(2, 3)}});
}

TEST_CASE("parse errors carry line and column") {
    check_error("monomial 1 : x1^1/2", 1, 1, "vars line required before monomials");
    check_error("vars x1\nmonomial 1 : x2^1/2", 2, 14, "unknown variable x2");
    check_error("vars x1\nmonomial 1 : x1^1/2 x1^1", 2, 21, "duplicate variable x1");
    check_error("vars x1\nmonomial 0 : x1^1/2", 2, 10, "zero coefficient");
    check_error("vars x1\nmonomial 1 x1^1/2", 2, 12, "expected ':'");
    check_error("vars x1\nmonomial 1 : x1^0", 2, 17, "exponent must be positive");
    check_error("vars x1\nmonomial 1 : x1^1.5", 2, 17, "expected a rational");
    check_error("vars x1\nmonomial 1 : x1", 2, 14, "expected <variable>^<exponent>");
    check_error("vars x1\nvars x2", 2, 1, "duplicate vars line");
    check_error("vars x1 x1", 1, 9, "declared twice");
    check_error("vars x1\n", 2, 1, "at least one monomial");
    check_error("", 1, 1, "vars line required");
    check_error("vars x1\nmonomials 1 : x1^1", 2, 1, "expected 'vars' or 'monomial'");
}

TEST_CASE("parse and render round-trip on generated specs") {
    std::mt19937_64 rng(8);
    const Case cases[] = {Case::LessThanOne, Case::EqualOne, Case::GreaterThanOne};
    for (int i = 0; i < 200; ++i) {
        auto spec = random_branch(rng, cases[i % 3], {}, i % 2 == 0);
        std::shuffle(spec.variables.begin(), spec.variables.end(), rng);
        const auto text = render_branch(spec);
        CHECK(same_spec(parse_branch(text), spec));
        CHECK(render_branch(parse_branch(text)) == text);
    }
}

TEST_CASE("equation text") {
    const auto rd = report_for(catalog_d());
    const auto& q = rd.structure;
    CHECK(component_equations(q, rd.decomposition.components[0]) == "4*xi_x1*xi_x2 - eta^2 = 0");
    CHECK(tangent_cone_equation(q, rd.tangent_cone) == "y^2 - x1*x2 = 0");

    const auto ra = report_for(catalog_a());
    CHECK(component_equations(ra.structure, ra.decomposition.components[0]) == "eta = 0");
    CHECK(tangent_cone_equation(ra.structure, ra.tangent_cone) == "x1 = 0");

    const auto rb = report_for(catalog_b());
    CHECK(component_equations(rb.structure, rb.decomposition.components[0]) == "eta = 0, xi_x2 = 0");
    CHECK(halo_equations(rb.structure, rb.tangent_cone, rb.halo.cones[0]) == "x1 = 0");

    const auto rc = report_for(catalog_c());
    CHECK(halo_equations(rc.structure, rc.tangent_cone, rc.halo.cones[0]) == "y = 0, x2 = 0");

    // Odd total: prod xi^c = -4 eta^3 with fresh (1/3, 2/3), lambda = 3.
    const auto odd = report_for(make_spec({"x1", "x2"}, {{{{"x1", R(1, 3)}, {"x2", R(2, 3)}}, R(3)}}));
    CHECK(component_equations(odd.structure, odd.decomposition.components[0]) == "xi_x1*xi_x2^2 + 4*eta^3 = 0");
    CHECK(tangent_cone_equation(odd.structure, odd.tangent_cone) == "y^3 - 27*x1*x2^2 = 0");
}

TEST_CASE("report JSON fields") {
    const auto trivial = report_json(report_for(make_spec({"x1"}, {{{{"x1", R(2)}}, R(1)}})));
    CHECK(trivial["trivial"] == true);
    CHECK(trivial["components"].size() == 1);

    const auto d = report_json(report_for(catalog_d()));
    CHECK(d["case"]["tag"] == "EQUAL_ONE");
    CHECK(d["case"]["witness"] == "1");
    CHECK(d["components"][0]["cone"]["constant"] == "1/4");
    CHECK(d["components"][0]["cone"]["c"] == nlohmann::ordered_json::array({1, 1}));
    CHECK(d["tangent_cone"]["equation"] == "y^2 - x1*x2 = 0");

    const auto a = report_json(report_for(catalog_a()));
    CHECK(a["components"].dump() == R"([{"J":[],"vanishing":["eta"]}])");
    CHECK_FALSE(a.contains("certification"));

    std::vector<std::string> keys;
    for (const auto& [k, v] : a.items()) keys.push_back(k);
    CHECK(keys == std::vector<std::string>{"case", "components", "tangent_cone", "halo", "trivial"});

    const auto b = report_json(report_for(catalog_b()));
    CHECK(b["components"][0]["J"].dump() == "[[2,1]]");
    CHECK(b["halo"][0]["vanishing"].dump() == R"(["x1"])");
}

TEST_CASE("report JSON is deterministic and carries the certification") {
    const auto q = structure_of(catalog_c());
    auto r = analyze(q);
    r.certification = certify(q, r.decomposition, {.trials = 100, .samples = 10, .seed = 5});
    const auto first = report_json(r).dump(2);
    auto again = analyze(q);
    again.certification = certify(q, again.decomposition, {.trials = 100, .samples = 10, .seed = 5});
    CHECK(report_json(again).dump(2) == first);
    const auto j = report_json(r);
    CHECK(j["certification"]["seed"] == 5);
    CHECK(j["certification"]["membership_failures"] == 0);
    CHECK(j["certification"]["coverage"] == nlohmann::ordered_json::array({true, true}));
    CHECK(report_text(r).find("verdict: PASS") != std::string::npos);
}
