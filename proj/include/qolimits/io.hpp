#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "qolimits/branch.hpp"
#include "qolimits/certify.hpp"
#include "qolimits/limits.hpp"

namespace qolimits {

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& message);
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

// Line-oriented branch format:
//
//   # comment
//   vars x1 x2
//   monomial 1 : x1^1/2
//   monomial -3/2 : x1^1/2 x2^3/2
//
// Throws ParseError (1-based line and column) on the first problem.
BranchSpec parse_branch(std::string_view text);

// Inverse of parse_branch: parse_branch(render_branch(s)) == s.
std::string render_branch(const BranchSpec& spec);

// Everything the analyzer computes for one branch.
struct Report {
    QOStructure structure;
    LimitsDecomposition decomposition;
    TangentCone tangent_cone;
    Halo halo;
    bool trivial = false;
    std::optional<CertificationReport> certification;
};

Report analyze(const QOStructure& q);

// Equation text, e.g. "4*xi_x1*xi_x2 - eta^2 = 0"; integer coefficients,
// leading monomial positive.
std::string component_equations(const QOStructure& q, const Component& c);
std::string tangent_cone_equation(const QOStructure& q, const TangentCone& tc);
std::string halo_equations(const QOStructure& q, const TangentCone& tc, const HaloCone& cone);

// Fixed key order: case, components, tangent_cone, halo, trivial, certification.
nlohmann::ordered_json report_json(const Report& report);
std::string report_text(const Report& report);

}  // namespace qolimits
