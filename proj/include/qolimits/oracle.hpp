#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "qolimits/branch.hpp"
#include "qolimits/limits.hpp"
#include "qolimits/solvers.hpp"

namespace qolimits {

// Monomial arc x_v = eps_v t^{alpha_v}. Scales are given on the ramified
// coordinate: scale rho_v means eps_v = rho_v^{d_v}, d_v = ramification(q, v),
// which fixes a branch of every root and keeps eps_v^{a} rational.
struct WeightedCurve {
    std::map<VarId, Rational> weights;
    std::map<VarId, Rational> scales;
};

// Finite ramified Laurent series as (valuation, coefficient) pairs.
class ThetaSeries {
public:
    ThetaSeries() = default;
    // Merges equal valuations and drops zero sums.
    static ThetaSeries from_terms(std::vector<std::pair<Rational, Rational>> terms);

    const std::vector<std::pair<Rational, Rational>>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    const std::pair<Rational, Rational>& leading() const { return terms_.front(); }

private:
    std::vector<std::pair<Rational, Rational>> terms_;
};

// Least common denominator of the exponents of `var` in the very special monomials.
Integer ramification(const QOStructure& q, const VarId& var);

// d(phi)/d(x_slot) along the curve, phi = sum_k lambda_k M_k.
ThetaSeries theta_series(const QOStructure& q, const WeightedCurve& curve, Slot slot);

// Limit of the Gauss map (df/dx : df/dy) = (-dphi/dx : 1) as t -> 0.
ProjectivePoint curve_limit(const QOStructure& q, const WeightedCurve& curve);

// Indices of the components whose equations p satisfies exactly.
std::vector<std::size_t> membership(const ProjectivePoint& p, const QOStructure& q,
                                    const LimitsDecomposition& d);

// Random arc for certification: weights p/q with 1 <= p, q <= 16 and scales
// in [-9, 9] \ {0}, drawn from a generator keyed by (seed, trial).
WeightedCurve random_curve(const QOStructure& q, std::uint64_t seed, std::uint64_t trial);

// Arc with the given weights and random scales keyed by (seed, trial).
WeightedCurve random_scaled_curve(const QOStructure& q, const std::map<Slot, Rational>& weights,
                                  std::uint64_t seed, std::uint64_t trial);

// Limits along arcs built from weight_construction for component J.
std::vector<ProjectivePoint> sample_component(const QOStructure& q, const Subset& j, std::size_t trials,
                                              std::uint64_t seed);

}  // namespace qolimits
