#pragma once

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qolimits/monomial.hpp"

namespace qolimits {

struct Term {
    ExponentVector exponents;
    Rational coeff;

    friend bool operator==(const Term&, const Term&) = default;
};

// Raw user input: declared variables and the special monomials N_1..N_m with
// the constant terms of their units.
struct BranchSpec {
    std::vector<VarId> variables;
    std::vector<Term> monomials;

    friend bool operator==(const BranchSpec&, const BranchSpec&) = default;
};

struct ValidationOptions {
    bool drop_inert = false;
};

struct ValidationResult;

class ValidatedBranch {
public:
    const BranchSpec& spec() const { return spec_; }

private:
    explicit ValidatedBranch(BranchSpec spec) : spec_(std::move(spec)) {}
    friend struct ValidationResult;
    friend ValidationResult validate(const BranchSpec&, ValidationOptions);

    BranchSpec spec_;
};

struct ValidationResult {
    std::optional<ValidatedBranch> branch;
    std::vector<std::string> errors;
    std::vector<std::string> notices;

    bool ok() const { return branch.has_value(); }
};

class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(std::vector<std::string> errors);
    const std::vector<std::string>& errors() const { return errors_; }

private:
    std::vector<std::string> errors_;
};

// Checks every BranchSpec invariant and reports all violations, indices 1-based.
ValidationResult validate(const BranchSpec& spec, ValidationOptions options = {});
ValidatedBranch validate_or_throw(const BranchSpec& spec, ValidationOptions options = {});

// Position of a variable: block k (0-based) and index j within the block (0-based).
struct Slot {
    std::size_t block = 0;
    std::size_t index = 0;

    friend auto operator<=>(const Slot&, const Slot&) = default;
};

struct VerySpecial {
    ExponentVector monomial;
    Rational coeff;

    friend bool operator==(const VerySpecial&, const VerySpecial&) = default;
};

// Normal form of a validated branch: very special monomials M_1..M_g, the
// variable blocks they introduce, and the fresh exponents a_kkj.
struct QOStructure {
    std::vector<std::vector<VarId>> blocks;
    std::vector<VerySpecial> very_special;
    std::vector<std::vector<Rational>> fresh;
    // Every input monomial, very special or not.
    std::vector<ExponentVector> special;

    std::size_t g() const { return very_special.size(); }
    const VarId& var(Slot s) const { return blocks[s.block][s.index]; }
    std::vector<VarId> variables() const;
    std::vector<Slot> slots() const;
    std::optional<Slot> slot_of(const VarId& var) const;

    // Compares the normal form; `special` is provenance, not structure.
    friend bool operator==(const QOStructure& a, const QOStructure& b) {
        return a.blocks == b.blocks && a.very_special == b.very_special && a.fresh == b.fresh;
    }
};

QOStructure derive_structure(const ValidatedBranch& branch);

// Very special monomials only, block variables in block order.
BranchSpec to_branch_spec(const QOStructure& q);

enum class Case { LessThanOne, EqualOne, GreaterThanOne };

struct CaseTag {
    Case tag;
    Rational witness;
};

CaseTag classify(const QOStructure& q);
std::string case_name(Case c);

}  // namespace qolimits
