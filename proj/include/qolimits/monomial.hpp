#pragma once

#include <map>
#include <string>
#include <vector>

#include "qolimits/rational.hpp"

namespace qolimits {

using VarId = std::string;

// Exponents of a ramified monomial, stored support-only: every entry is > 0.
class ExponentVector {
public:
    ExponentVector() = default;
    ExponentVector(std::initializer_list<std::pair<const VarId, Rational>> entries);

    // Throws if exponent <= 0. Overwrites an existing entry.
    void set(const VarId& var, const Rational& exponent);
    Rational get(const VarId& var) const;
    bool contains(const VarId& var) const { return entries_.contains(var); }

    const std::map<VarId, Rational>& entries() const { return entries_; }
    std::vector<VarId> support() const;
    bool empty() const { return entries_.empty(); }
    std::size_t size() const { return entries_.size(); }

    // Componentwise sum, i.e. the exponent vector of the product monomial.
    ExponentVector operator*(const ExponentVector& other) const;

    friend bool operator==(const ExponentVector&, const ExponentVector&) = default;

private:
    std::map<VarId, Rational> entries_;
};

// Divisibility in the ramified ring: componentwise a <= b.
bool exp_vec_divides(const ExponentVector& a, const ExponentVector& b);

// Sum of exponent * weight over the support. Throws if a support variable has no weight.
Rational weighted_valuation(const ExponentVector& m, const std::map<VarId, Rational>& weights);

// Homogeneous coordinates (xi_v : ... : eta) on the projectivized cotangent fiber.
struct ProjectivePoint {
    std::map<VarId, Rational> xi;
    Rational eta;

    bool is_zero() const;
    std::string str(const std::vector<VarId>& order) const;
};

// True iff q is a nonzero rational multiple of p. Missing xi entries count as 0.
bool projective_eq(const ProjectivePoint& p, const ProjectivePoint& q);

}  // namespace qolimits
