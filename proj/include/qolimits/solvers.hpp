#pragma once

#include <map>
#include <span>
#include <vector>

#include "qolimits/branch.hpp"
#include "qolimits/transversal.hpp"

namespace qolimits {

enum class SystemKind { StrictLess, StrictGreater, Equality };

// Witness c for one of the exponent systems a_k * sum(c) {<,>,=} c_k.
struct ExponentSystemSolution {
    SystemKind kind;
    std::vector<Rational> c;

    // Does c satisfy its system against a, exactly?
    bool satisfies(std::span<const Rational> a) const;
    // Positive integer multiple of c with gcd 1.
    std::vector<Integer> cleared() const;
};

// Interval recursion l_s < c_s < u_s with c_1 = 1 and midpoint picks.
// Requires all a_j > 0 and sum(a) < 1.
ExponentSystemSolution solve_strict_less(std::span<const Rational> a);

// Same recursion with the bounds swapped; u_s is unbounded while the tail sum
// is >= 1, in which case c_s = l_s + 1. Requires sum(a) > 1.
ExponentSystemSolution solve_strict_greater(std::span<const Rational> a);

// c_s = (a_s / a_{s-1}) c_{s-1} from the seed c_1; requires sum(a) == 1.
// The returned c is the seed-independent gcd-1 integer tuple.
ExponentSystemSolution solve_equality(std::span<const Rational> a, const Rational& seed = Rational(1));

// Curve weights realizing a prescribed component: every slot outside J gets
// valuation v0 in the Gauss map, every slot in J strictly more.
struct WeightAssignment {
    std::map<Slot, Rational> alpha;
    Rational v0;
    // Per block: weight on slots outside J (defined even when the block lies
    // inside J) and on slots in J (zero when J misses the block).
    std::vector<Rational> block_alpha;
    std::vector<Rational> block_beta;
};

// Throws std::invalid_argument if J is not a transversal of the case's family.
WeightAssignment weight_construction(const QOStructure& q, const Subset& j, const CaseTag& c,
                                     const Rational& seed = Rational(1));

// det(lambda_i - delta_ij) via (-1)^n (1 - sum lambda).
Rational det_lambda_minus_delta(std::span<const Rational> lambda);

}  // namespace qolimits
