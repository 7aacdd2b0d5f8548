// qolimits: limits of tangents of a quasi-ordinary branch from its special monomials.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "qolimits/io.hpp"
#include "qolimits/oracle.hpp"
#include "qolimits/solvers.hpp"

namespace {

using namespace qolimits;

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitCertification = 2;

struct InputError {
    std::string message;
};

std::string read_source(const std::string& path) {
    if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
    std::ifstream in(path);
    if (!in) throw InputError{path + ": cannot open file"};
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

QOStructure load(const std::string& path, bool drop_inert) {
    const std::string text = read_source(path);
    BranchSpec spec;
    try {
        spec = parse_branch(text);
    } catch (const ParseError& e) {
        throw InputError{(path == "-" ? "<stdin>" : path) + ":" + e.what()};
    }
    auto result = validate(spec, {.drop_inert = drop_inert});
    for (const auto& n : result.notices) std::cerr << "notice: " << n << "\n";
    if (!result.ok()) {
        std::string msg;
        for (const auto& e : result.errors) msg += (msg.empty() ? "" : "\n") + std::string("error: ") + e;
        throw InputError{msg};
    }
    return derive_structure(*result.branch);
}

std::vector<Rational> parse_rationals(const std::vector<std::string>& args) {
    std::vector<Rational> out;
    for (const auto& a : args) {
        try {
            out.push_back(Rational::parse(a));
        } catch (const std::exception& e) {
            throw InputError{e.what()};
        }
    }
    return out;
}

std::string tuple(const std::vector<Rational>& values) {
    std::string out = "(";
    for (std::size_t i = 0; i < values.size(); ++i) out += (i ? ", " : "") + values[i].str();
    return out + ")";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Limits of tangents of quasi-ordinary hypersurface branches"};
    app.require_subcommand(1);

    std::string file;
    bool json = false;
    bool drop_inert = false;
    CertifyOptions cert;
    std::size_t component = 0;
    std::string system;
    std::vector<std::string> numbers;

    auto add_file = [&](CLI::App* cmd) {
        cmd->add_option("file", file, "Branch file, or - for stdin")->required();
        cmd->add_flag("--drop-inert", drop_inert, "Drop declared variables that no monomial uses");
    };

    auto* analyze_cmd = app.add_subcommand("analyze", "Compute components, tangent cone, halo and certify them");
    add_file(analyze_cmd);
    analyze_cmd->add_flag("--json", json, "Emit the JSON report");
    analyze_cmd->add_option("--trials", cert.trials, "Random arcs for certification")->capture_default_str();
    analyze_cmd->add_option("--samples", cert.samples, "Samples per component")->capture_default_str();
    analyze_cmd->add_option("--seed", cert.seed, "Generator seed")->capture_default_str();

    auto* verify_cmd = app.add_subcommand("verify", "Certify the decomposition with the curve oracle");
    add_file(verify_cmd);
    verify_cmd->add_flag("--json", json, "Emit the JSON report");
    verify_cmd->add_option("--trials", cert.trials, "Random arcs")->capture_default_str();
    verify_cmd->add_option("--samples", cert.samples, "Samples per component")->capture_default_str();
    verify_cmd->add_option("--seed", cert.seed, "Generator seed")->capture_default_str();

    auto* sample_cmd = app.add_subcommand("sample", "Sample limits of tangents on one component");
    add_file(sample_cmd);
    sample_cmd->add_option("--component", component, "Component index as listed by analyze")->required();
    sample_cmd->add_option("--trials", cert.trials, "Number of samples")->capture_default_str();
    sample_cmd->add_option("--seed", cert.seed, "Generator seed")->capture_default_str();

    auto* solve_cmd = app.add_subcommand("solve-system", "Solve a_k*sum(c) {<,>,=} c_k");
    solve_cmd->add_option("kind", system, "less | greater | eq")
        ->required()
        ->check(CLI::IsMember({"less", "greater", "eq"}));
    solve_cmd->add_option("a", numbers, "Positive rationals")->required();

    auto* det_cmd = app.add_subcommand("det", "Determinant of (l_i - delta_ij)");
    det_cmd->add_option("l", numbers, "Rationals")->required();

    auto* trivial_cmd = app.add_subcommand("is-trivial", "Is the set of limits of tangents trivial?");
    add_file(trivial_cmd);

    CLI11_PARSE(app, argc, argv);

    try {
        if (analyze_cmd->parsed() || verify_cmd->parsed()) {
            const auto q = load(file, drop_inert);
            Report report = analyze(q);
            report.certification = certify(q, report.decomposition, cert);
            if (json)
                std::cout << report_json(report).dump(2) << "\n";
            else
                std::cout << report_text(report);
            return report.certification->passed() ? kExitOk : kExitCertification;
        }
        if (sample_cmd->parsed()) {
            const auto q = load(file, drop_inert);
            const auto d = decompose(q);
            if (component >= d.components.size())
                throw InputError{"component index out of range (" + std::to_string(d.components.size()) +
                                 " components)"};
            const auto points = sample_component(q, d.components[component].j, cert.trials, cert.seed);
            bool ok = true;
            for (const auto& p : points) {
                const auto members = membership(p, q, d);
                const bool hit = std::find(members.begin(), members.end(), component) != members.end();
                ok = ok && hit;
                std::cout << p.str(q.variables()) << "  components:";
                for (auto m : members) std::cout << " " << m;
                std::cout << (hit ? "" : "  MISS") << "\n";
            }
            return ok ? kExitOk : kExitCertification;
        }
        if (solve_cmd->parsed()) {
            const auto a = parse_rationals(numbers);
            const auto sol = system == "less"      ? solve_strict_less(a)
                           : system == "greater" ? solve_strict_greater(a)
                                                  : solve_equality(a);
            std::vector<Rational> ints;
            for (const auto& x : sol.cleared()) ints.emplace_back(x, Integer(1));
            std::cout << "c = " << tuple(sol.c) << "\n";
            std::cout << "cleared = " << tuple(ints) << "\n";
            std::cout << "check: " << (sol.satisfies(a) ? "ok" : "FAILED") << "\n";
            return kExitOk;
        }
        if (det_cmd->parsed()) {
            std::cout << det_lambda_minus_delta(parse_rationals(numbers)) << "\n";
            return kExitOk;
        }
        if (trivial_cmd->parsed()) {
            std::cout << (is_trivial(load(file, drop_inert)) ? "true" : "false") << "\n";
            return kExitOk;
        }
    } catch (const InputError& e) {
        std::cerr << e.message << "\n";
        return kExitInvalid;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const std::length_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    }
    return kExitOk;
}
