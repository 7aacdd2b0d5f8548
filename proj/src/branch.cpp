#include "qolimits/branch.hpp"

#include <algorithm>
#include <set>

namespace qolimits {

namespace {

std::string join(const std::vector<std::string>& items, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i) out += (i ? sep : "") + items[i];
    return out;
}

}  // namespace

ValidationError::ValidationError(std::vector<std::string> errors)
    : std::runtime_error("invalid branch: " + join(errors, "; ")), errors_(std::move(errors)) {}

ValidationResult validate(const BranchSpec& input, ValidationOptions options) {
    ValidationResult result;
    BranchSpec spec = input;
    auto& errors = result.errors;

    if (spec.monomials.empty()) errors.emplace_back("empty monomial list");

    std::set<VarId> declared;
    for (const auto& v : spec.variables)
        if (!declared.insert(v).second) errors.push_back("duplicate variable " + v);

    std::set<VarId> used;
    for (std::size_t i = 0; i < spec.monomials.size(); ++i) {
        const auto& term = spec.monomials[i];
        const std::string at = " at index " + std::to_string(i + 1);
        if (term.coeff.is_zero()) errors.push_back("zero coefficient" + at);
        for (const auto& [var, e] : term.exponents.entries()) {
            used.insert(var);
            if (!declared.contains(var)) errors.push_back("unknown variable " + var + at);
        }
        if (term.exponents.empty()) errors.push_back("empty monomial" + at);
        if (i == 0) continue;
        const auto& prev = spec.monomials[i - 1].exponents;
        if (!exp_vec_divides(prev, term.exponents)) {
            for (const auto& [var, e] : prev.entries())
                if (e > term.exponents.get(var))
                    errors.push_back("chain violation" + at + " on variable " + var);
        } else if (prev == term.exponents) {
            errors.push_back("repeated monomial" + at);
        }
    }

    std::vector<VarId> inert;
    for (const auto& v : spec.variables)
        if (!used.contains(v)) inert.push_back(v);
    if (!inert.empty()) {
        if (options.drop_inert) {
            for (const auto& v : inert) result.notices.push_back("dropped inert variable " + v);
            std::erase_if(spec.variables, [&](const VarId& v) { return !used.contains(v); });
        } else {
            for (const auto& v : inert) errors.push_back("inert variable " + v);
        }
    }

    if (!errors.empty()) return result;

    std::size_t previous_support = 0;
    for (std::size_t i = 0; i < spec.monomials.size(); ++i) {
        const std::size_t support = spec.monomials[i].exponents.size();
        if (i > 0 && support == previous_support)
            result.notices.push_back("coefficient at index " + std::to_string(i + 1) +
                                     " ignored (monomial is not very special)");
        previous_support = support;
    }

    result.branch = ValidatedBranch(std::move(spec));
    return result;
}

ValidatedBranch validate_or_throw(const BranchSpec& spec, ValidationOptions options) {
    auto result = validate(spec, options);
    if (!result.ok()) throw ValidationError(std::move(result.errors));
    return std::move(*result.branch);
}

std::vector<VarId> QOStructure::variables() const {
    std::vector<VarId> out;
    for (const auto& block : blocks) out.insert(out.end(), block.begin(), block.end());
    return out;
}

std::vector<Slot> QOStructure::slots() const {
    std::vector<Slot> out;
    for (std::size_t k = 0; k < blocks.size(); ++k)
        for (std::size_t j = 0; j < blocks[k].size(); ++j) out.push_back({k, j});
    return out;
}

std::optional<Slot> QOStructure::slot_of(const VarId& var) const {
    for (std::size_t k = 0; k < blocks.size(); ++k)
        for (std::size_t j = 0; j < blocks[k].size(); ++j)
            if (blocks[k][j] == var) return Slot{k, j};
    return std::nullopt;
}

QOStructure derive_structure(const ValidatedBranch& branch) {
    const BranchSpec& spec = branch.spec();
    QOStructure q;
    std::set<VarId> seen;
    for (const auto& term : spec.monomials) {
        q.special.push_back(term.exponents);
        // Along a divisibility chain the support can only grow, so a new
        // support variable is exactly what makes a monomial very special.
        std::vector<VarId> block;
        for (const auto& v : spec.variables)
            if (term.exponents.contains(v) && !seen.contains(v)) block.push_back(v);
        if (block.empty()) continue;
        seen.insert(block.begin(), block.end());
        std::vector<Rational> fresh;
        for (const auto& v : block) fresh.push_back(term.exponents.get(v));
        q.blocks.push_back(std::move(block));
        q.fresh.push_back(std::move(fresh));
        q.very_special.push_back({term.exponents, term.coeff});
    }
    return q;
}

BranchSpec to_branch_spec(const QOStructure& q) {
    BranchSpec spec;
    spec.variables = q.variables();
    for (const auto& vs : q.very_special) spec.monomials.push_back({vs.monomial, vs.coeff});
    return spec;
}

CaseTag classify(const QOStructure& q) {
    Rational sum;
    for (const auto& a : q.fresh.front()) sum += a;
    const Case tag = sum < Rational(1) ? Case::LessThanOne
                   : sum == Rational(1) ? Case::EqualOne
                                        : Case::GreaterThanOne;
    return {tag, sum};
}

std::string case_name(Case c) {
    switch (c) {
        case Case::LessThanOne: return "LESS_THAN_ONE";
        case Case::EqualOne: return "EQUAL_ONE";
        case Case::GreaterThanOne: return "GREATER_THAN_ONE";
    }
    return "?";
}

}  // namespace qolimits
