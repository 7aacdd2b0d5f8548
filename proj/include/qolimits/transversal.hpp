#pragma once

#include <vector>

#include "qolimits/branch.hpp"

namespace qolimits {

// Exact enumeration is guaranteed up to this many ground elements.
inline constexpr std::size_t kMaxGroundSize = 24;

using Subset = std::vector<Slot>;  // sorted

struct GroundSet {
    std::vector<Slot> elements;  // lexicographic by (block, index)
};

// Minimal members only; hitting every minimal member hits the upward closure.
struct SubsetFamily {
    GroundSet ground;
    std::vector<Subset> members;
};

struct TransversalSet {
    GroundSet ground;
    std::vector<Subset> transversals;  // antichain, lexicographic order
};

// Blocks 2..g for LESS_THAN_ONE / EQUAL_ONE, blocks 1..g for GREATER_THAN_ONE.
GroundSet ground_set(const QOStructure& q, Case c);
// Blocks (0-based) that contribute to the ground set.
std::vector<std::size_t> ground_blocks(const QOStructure& q, Case c);

// Per included block, the minimal subsets whose fresh exponents sum to >= 1.
SubsetFamily threshold_family(const QOStructure& q, const CaseTag& c);

// All minimal hitting sets; {{}} for an empty family.
TransversalSet minimal_transversals(const SubsetFamily& family);

// Independent route: minimal J whose blockwise complement sums stay < 1.
TransversalSet transversals_by_complement(const QOStructure& q, const CaseTag& c);

}  // namespace qolimits
