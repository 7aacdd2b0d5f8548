#include "qolimits/io.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace qolimits {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

namespace {

struct Token {
    std::string text;
    std::size_t column;  // 1-based
};

// Whitespace-separated tokens with ':' split out; '#' ends the line.
std::vector<Token> tokenize(std::string_view line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        const char ch = line[i];
        if (ch == '#') break;
        if (std::isspace(static_cast<unsigned char>(ch))) {
            ++i;
            continue;
        }
        if (ch == ':') {
            out.push_back({":", i + 1});
            ++i;
            continue;
        }
        const std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])) && line[i] != ':' &&
               line[i] != '#')
            ++i;
        out.push_back({std::string(line.substr(start, i - start)), start + 1});
    }
    return out;
}

bool is_identifier(std::string_view s) {
    if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
    return std::all_of(s.begin(), s.end(),
                       [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

Rational parse_rational_at(const Token& tok, std::string_view text, std::size_t offset, std::size_t line) {
    try {
        return Rational::parse(text);
    } catch (const std::exception&) {
        throw ParseError(line, tok.column + offset, "expected a rational p/q or integer, got '" + std::string(text) + "'");
    }
}

}  // namespace

BranchSpec parse_branch(std::string_view text) {
    BranchSpec spec;
    bool have_vars = false;
    std::set<VarId> declared;

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t end = std::min(text.find('\n', pos), text.size());
        std::string_view line = text.substr(pos, end - pos);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        pos = end + 1;
        ++line_no;

        const auto tokens = tokenize(line);
        if (tokens.empty()) continue;
        const auto& head = tokens.front();

        if (head.text == "vars") {
            if (have_vars) throw ParseError(line_no, head.column, "duplicate vars line");
            if (tokens.size() < 2) throw ParseError(line_no, head.column, "vars line needs at least one variable");
            for (std::size_t i = 1; i < tokens.size(); ++i) {
                const auto& t = tokens[i];
                if (!is_identifier(t.text)) throw ParseError(line_no, t.column, "invalid variable name '" + t.text + "'");
                if (!declared.insert(t.text).second)
                    throw ParseError(line_no, t.column, "variable " + t.text + " declared twice");
                spec.variables.push_back(t.text);
            }
            have_vars = true;
        } else if (head.text == "monomial") {
            if (!have_vars) throw ParseError(line_no, head.column, "vars line required before monomials");
            if (tokens.size() < 2) throw ParseError(line_no, head.column + head.text.size(), "missing coefficient");
            Term term;
            term.coeff = parse_rational_at(tokens[1], tokens[1].text, 0, line_no);
            if (term.coeff.is_zero()) throw ParseError(line_no, tokens[1].column, "zero coefficient");
            if (tokens.size() < 3 || tokens[2].text != ":")
                throw ParseError(line_no, tokens.size() < 3 ? tokens[1].column + tokens[1].text.size() : tokens[2].column,
                                 "expected ':' after the coefficient");
            if (tokens.size() < 4) throw ParseError(line_no, tokens[2].column + 1, "monomial needs at least one factor");
            for (std::size_t i = 3; i < tokens.size(); ++i) {
                const auto& t = tokens[i];
                const auto caret = t.text.find('^');
                if (caret == std::string::npos)
                    throw ParseError(line_no, t.column, "expected <variable>^<exponent>, got '" + t.text + "'");
                const std::string var = t.text.substr(0, caret);
                if (!is_identifier(var)) throw ParseError(line_no, t.column, "invalid variable name '" + var + "'");
                if (!declared.contains(var)) throw ParseError(line_no, t.column, "unknown variable " + var);
                if (term.exponents.contains(var))
                    throw ParseError(line_no, t.column, "duplicate variable " + var + " in monomial");
                const Rational e = parse_rational_at(t, std::string_view(t.text).substr(caret + 1), caret + 1, line_no);
                if (e.sign() <= 0) throw ParseError(line_no, t.column + caret + 1, "exponent must be positive");
                term.exponents.set(var, e);
            }
            spec.monomials.push_back(std::move(term));
        } else {
            throw ParseError(line_no, head.column, "expected 'vars' or 'monomial', got '" + head.text + "'");
        }
    }
    if (!have_vars) throw ParseError(line_no, 1, "vars line required");
    if (spec.monomials.empty()) throw ParseError(line_no, 1, "at least one monomial line required");
    return spec;
}

std::string render_branch(const BranchSpec& spec) {
    std::string out = "vars";
    for (const auto& v : spec.variables) out += " " + v;
    out += "\n";
    for (const auto& term : spec.monomials) {
        out += "monomial " + term.coeff.str() + " :";
        for (const auto& v : spec.variables)
            if (term.exponents.contains(v)) out += " " + v + "^" + term.exponents.get(v).str();
        out += "\n";
    }
    return out;
}

Report analyze(const QOStructure& q) {
    Report r;
    r.structure = q;
    r.decomposition = decompose(q);
    r.tangent_cone = tangent_cone(q);
    r.halo = halo(q, r.decomposition);
    r.trivial = is_trivial(q);
    return r;
}

namespace {

std::string power(const std::string& base, const Integer& e) {
    return e == 1 ? base : base + "^" + e.get_str();
}

std::string product(const std::vector<std::string>& factors) {
    std::string out;
    for (const auto& f : factors) out += (out.empty() ? "" : "*") + f;
    return out;
}

// lead_den * lead - rhs * tail, rhs = p/q rendered as q*lead - p*tail.
std::string binomial(const std::string& lead, const Rational& rhs, const std::string& tail) {
    const Integer q = rhs.den();
    const Integer p = rhs.num();
    std::string out = (q == 1 ? "" : q.get_str() + "*") + lead;
    if (p == 0) return out + " = 0";
    const Integer mag = abs(p);
    out += p > 0 ? " - " : " + ";
    out += (mag == 1 ? "" : mag.get_str() + "*") + tail;
    return out + " = 0";
}

std::string xi_name(const VarId& v) { return "xi_" + v; }

std::string slot_list(const Subset& j) {
    std::string out = "{";
    for (std::size_t i = 0; i < j.size(); ++i)
        out += (i ? ", " : "") + std::string("(") + std::to_string(j[i].block + 1) + "," +
               std::to_string(j[i].index + 1) + ")";
    return out + "}";
}

nlohmann::ordered_json slots_json(const Subset& j) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& s : j) arr.push_back({s.block + 1, s.index + 1});
    return arr;
}

std::vector<std::string> vanishing_names(const QOStructure& q, const Component& c) {
    std::vector<std::string> out;
    if (c.eta_vanishes) out.emplace_back("eta");
    for (const auto& s : c.xi_vanishing) out.push_back(xi_name(q.var(s)));
    return out;
}

std::vector<std::string> halo_vanishing(const HaloCone& cone) {
    std::vector<std::string> out;
    if (cone.y_vanishes) out.emplace_back("y");
    out.insert(out.end(), cone.x_vanishing.begin(), cone.x_vanishing.end());
    return out;
}

std::string cone_text(const QOStructure& q, const ConeEquation& cone) {
    std::vector<std::string> lead;
    for (std::size_t j = 0; j < cone.c.size(); ++j) lead.push_back(power(xi_name(q.blocks[0][j]), cone.c[j]));
    return binomial(product(lead), Rational(cone.sign) * cone.constant, power("eta", cone.total));
}

}  // namespace

std::string component_equations(const QOStructure& q, const Component& c) {
    std::vector<std::string> eqs;
    for (const auto& name : vanishing_names(q, c)) eqs.push_back(name + " = 0");
    if (c.cone) eqs.push_back(cone_text(q, *c.cone));
    std::string out;
    for (const auto& e : eqs) out += (out.empty() ? "" : ", ") + e;
    return out;
}

std::string tangent_cone_equation(const QOStructure& q, const TangentCone& tc) {
    switch (tc.kind) {
        case TangentCone::Kind::CoordinateProduct:
            return product(tc.product) + " = 0";
        case TangentCone::Kind::Hyperplane:
            return "y = 0";
        case TangentCone::Kind::Binomial: {
            std::vector<std::string> tail;
            for (std::size_t i = 0; i < tc.d.size(); ++i) tail.push_back(power(q.blocks[0][i], tc.d[i]));
            return binomial(power("y", tc.c), tc.coefficient, product(tail));
        }
    }
    return {};
}

std::string halo_equations(const QOStructure& q, const TangentCone& tc, const HaloCone& cone) {
    std::string out;
    for (const auto& name : halo_vanishing(cone)) out += (out.empty() ? "" : ", ") + name + " = 0";
    if (cone.binomial) out += (out.empty() ? "" : ", ") + tangent_cone_equation(q, tc);
    return out;
}

nlohmann::ordered_json report_json(const Report& r) {
    using json = nlohmann::ordered_json;
    const auto& q = r.structure;
    json out;
    out["case"] = {{"tag", case_name(r.decomposition.case_tag.tag)},
                   {"witness", r.decomposition.case_tag.witness.str()}};

    json comps = json::array();
    for (const auto& c : r.decomposition.components) {
        json item;
        item["J"] = slots_json(c.j);
        item["vanishing"] = vanishing_names(q, c);
        if (c.cone) {
            json cs = json::array();
            for (const auto& x : c.cone->c) cs.push_back(to_long(x));
            item["cone"] = {{"c", cs},
                            {"total", to_long(c.cone->total)},
                            {"sign", c.cone->sign},
                            {"constant", c.cone->constant.str()}};
        }
        comps.push_back(std::move(item));
    }
    out["components"] = std::move(comps);

    json tc;
    const auto& t = r.tangent_cone;
    switch (t.kind) {
        case TangentCone::Kind::CoordinateProduct:
            tc["kind"] = "coordinate_product";
            tc["variables"] = t.product;
            break;
        case TangentCone::Kind::Hyperplane:
            tc["kind"] = "hyperplane";
            break;
        case TangentCone::Kind::Binomial: {
            tc["kind"] = "binomial";
            tc["c"] = to_long(t.c);
            json ds = json::array();
            for (const auto& x : t.d) ds.push_back(to_long(x));
            tc["d"] = ds;
            tc["coefficient"] = t.coefficient.str();
            break;
        }
    }
    tc["equation"] = tangent_cone_equation(q, t);
    out["tangent_cone"] = std::move(tc);

    json halo = json::array();
    for (const auto& cone : r.halo.cones)
        halo.push_back({{"J", slots_json(cone.j)},
                        {"vanishing", halo_vanishing(cone)},
                        {"tangent_cone_equation", cone.binomial}});
    out["halo"] = std::move(halo);
    out["trivial"] = r.trivial;

    if (r.certification) {
        const auto& c = *r.certification;
        out["certification"] = {{"seed", c.seed},
                                {"trials", c.trials},
                                {"membership_failures", c.membership_failures},
                                {"coverage", c.coverage}};
    }
    return out;
}

std::string report_text(const Report& r) {
    const auto& q = r.structure;
    std::ostringstream os;
    os << "case: " << case_name(r.decomposition.case_tag.tag)
       << " (first block exponent sum " << r.decomposition.case_tag.witness << ")\n";
    os << "very special monomials: " << q.g() << "\n";
    os << "components of the limits of tangents:\n";
    for (std::size_t i = 0; i < r.decomposition.components.size(); ++i) {
        const auto& c = r.decomposition.components[i];
        os << "  [" << i << "] J = " << slot_list(c.j) << ": " << component_equations(q, c) << "\n";
    }
    os << "tangent cone: " << tangent_cone_equation(q, r.tangent_cone) << "\n";
    os << "halo:\n";
    for (std::size_t i = 0; i < r.halo.cones.size(); ++i)
        os << "  [" << i << "] J = " << slot_list(r.halo.cones[i].j) << ": "
           << halo_equations(q, r.tangent_cone, r.halo.cones[i]) << "\n";
    os << "trivial: " << (r.trivial ? "true" : "false") << "\n";
    if (r.certification) {
        const auto& c = *r.certification;
        os << "certification: seed " << c.seed << ", " << c.trials << " arcs, " << c.samples
           << " samples per component, " << c.membership_failures << " membership failures\n";
        for (std::size_t i = 0; i < c.coverage.size(); ++i)
            os << "  [" << i << "] " << (c.coverage[i] ? "attained" : "NOT attained") << " ("
               << c.curve_hits[i] << " random arcs)\n";
        for (const auto& f : c.failures) os << "  failure: " << f << "\n";
        os << "verdict: " << (c.passed() ? "PASS" : "FAIL") << "\n";
    }
    return os.str();
}

}  // namespace qolimits
