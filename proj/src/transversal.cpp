#include "qolimits/transversal.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <stdexcept>

namespace qolimits {

namespace {

using Mask = std::uint32_t;

void check_size(std::size_t n) {
    if (n > kMaxGroundSize)
        throw std::length_error("ground set of size " + std::to_string(n) +
                                " exceeds the exact enumeration limit of " +
                                std::to_string(kMaxGroundSize));
}

// Minimal index sets I of `weights` with sum >= 1, by depth-first search that
// stops descending once the threshold is reached.
std::vector<std::vector<std::size_t>> minimal_heavy_sets(const std::vector<Rational>& weights) {
    const std::size_t n = weights.size();
    std::vector<Rational> suffix(n + 1);
    for (std::size_t i = n; i-- > 0;) suffix[i] = suffix[i + 1] + weights[i];

    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> chosen;
    const Rational one(1);
    std::function<void(std::size_t, const Rational&)> dfs = [&](std::size_t i, const Rational& sum) {
        if (sum >= one) {
            Rational smallest = weights[chosen.front()];
            for (auto c : chosen) smallest = std::min(smallest, weights[c]);
            if (sum - smallest < one) out.push_back(chosen);
            return;
        }
        if (i == n || sum + suffix[i] < one) return;
        chosen.push_back(i);
        dfs(i + 1, sum + weights[i]);
        chosen.pop_back();
        dfs(i + 1, sum);
    };
    dfs(0, Rational(0));
    return out;
}

// Maximal index sets C with sum < 1 (the complements of minimal blockers).
std::vector<std::vector<std::size_t>> maximal_light_sets(const std::vector<Rational>& weights) {
    const std::size_t n = weights.size();
    std::vector<Rational> suffix(n + 1);
    for (std::size_t i = n; i-- > 0;) suffix[i] = suffix[i + 1] + weights[i];

    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> chosen;
    std::vector<std::size_t> skipped;
    const Rational one(1);
    std::function<void(std::size_t, const Rational&)> dfs = [&](std::size_t i, const Rational& sum) {
        if (i == n || sum + suffix[i] < one) {
            // Everything left fits: the only maximal completion takes it all.
            std::vector<std::size_t> full = chosen;
            for (std::size_t r = i; r < n; ++r) full.push_back(r);
            const Rational total = sum + suffix[i];
            for (auto s : skipped)
                if (total + weights[s] < one) return;
            out.push_back(std::move(full));
            return;
        }
        if (sum + weights[i] < one) {
            chosen.push_back(i);
            dfs(i + 1, sum + weights[i]);
            chosen.pop_back();
        }
        skipped.push_back(i);
        dfs(i + 1, sum);
        skipped.pop_back();
    };
    dfs(0, Rational(0));
    return out;
}

bool lex_less(const Subset& a, const Subset& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

void sort_subsets(std::vector<Subset>& sets) {
    for (auto& s : sets) std::sort(s.begin(), s.end());
    std::sort(sets.begin(), sets.end(), lex_less);
}

}  // namespace

std::vector<std::size_t> ground_blocks(const QOStructure& q, Case c) {
    std::vector<std::size_t> out;
    for (std::size_t k = (c == Case::GreaterThanOne ? 0 : 1); k < q.g(); ++k) out.push_back(k);
    return out;
}

GroundSet ground_set(const QOStructure& q, Case c) {
    GroundSet ground;
    for (auto k : ground_blocks(q, c))
        for (std::size_t j = 0; j < q.blocks[k].size(); ++j) ground.elements.push_back({k, j});
    return ground;
}

SubsetFamily threshold_family(const QOStructure& q, const CaseTag& c) {
    SubsetFamily family{ground_set(q, c.tag), {}};
    check_size(family.ground.elements.size());
    for (auto k : ground_blocks(q, c.tag)) {
        for (const auto& idx : minimal_heavy_sets(q.fresh[k])) {
            Subset member;
            for (auto j : idx) member.push_back({k, j});
            family.members.push_back(std::move(member));
        }
    }
    sort_subsets(family.members);
    return family;
}

TransversalSet minimal_transversals(const SubsetFamily& family) {
    const auto& elements = family.ground.elements;
    check_size(elements.size());
    auto position = [&](const Slot& s) {
        auto it = std::find(elements.begin(), elements.end(), s);
        if (it == elements.end()) throw std::invalid_argument("family member outside the ground set");
        return static_cast<std::size_t>(it - elements.begin());
    };

    // Berge's incremental scheme: extend the minimal transversals of the first
    // i edges to the first i+1 edges, then discard non-minimal results.
    std::vector<Mask> current{0};
    for (const auto& member : family.members) {
        Mask edge = 0;
        for (const auto& s : member) edge |= Mask{1} << position(s);
        std::vector<Mask> next;
        for (Mask t : current) {
            if (t & edge) {
                next.push_back(t);
                continue;
            }
            for (Mask bit = edge; bit; bit &= bit - 1) next.push_back(t | (bit & -bit));
        }
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        std::vector<Mask> minimal;
        for (Mask t : next) {
            bool dominated = false;
            for (Mask u : next)
                if (u != t && (u & t) == u) {
                    dominated = true;
                    break;
                }
            if (!dominated) minimal.push_back(t);
        }
        current = std::move(minimal);
    }

    TransversalSet out{family.ground, {}};
    for (Mask t : current) {
        Subset j;
        for (std::size_t i = 0; i < elements.size(); ++i)
            if (t >> i & 1) j.push_back(elements[i]);
        out.transversals.push_back(std::move(j));
    }
    sort_subsets(out.transversals);
    return out;
}

TransversalSet transversals_by_complement(const QOStructure& q, const CaseTag& c) {
    TransversalSet out{ground_set(q, c.tag), {}};
    check_size(out.ground.elements.size());

    std::vector<Subset> partial{{}};
    for (auto k : ground_blocks(q, c.tag)) {
        const auto& block = q.fresh[k];
        std::vector<Subset> per_block;
        for (const auto& light : maximal_light_sets(block)) {
            Subset j;
            for (std::size_t i = 0; i < block.size(); ++i)
                if (!std::binary_search(light.begin(), light.end(), i)) j.push_back({k, i});
            per_block.push_back(std::move(j));
        }
        std::vector<Subset> combined;
        for (const auto& prefix : partial)
            for (const auto& tail : per_block) {
                Subset j = prefix;
                j.insert(j.end(), tail.begin(), tail.end());
                combined.push_back(std::move(j));
            }
        partial = std::move(combined);
    }
    out.transversals = std::move(partial);
    sort_subsets(out.transversals);
    return out;
}

}  // namespace qolimits
