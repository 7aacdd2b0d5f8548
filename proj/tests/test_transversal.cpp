#include <doctest.h>

#include "qolimits/transversal.hpp"
#include "support/generators.hpp"

using namespace qolimits;
using namespace qolimits::testing;

namespace {

// Single-block structure with the given fresh exponents.
QOStructure block_structure(std::vector<Rational> a) {
    QOStructure q;
    std::vector<VarId> block;
    ExponentVector m;
    for (std::size_t j = 0; j < a.size(); ++j) {
        block.push_back("x" + std::to_string(j + 1));
        m.set(block.back(), a[j]);
    }
    q.blocks = {block};
    q.fresh = {a};
    q.very_special = {{m, R(1)}};
    return q;
}

// Appends a block to q with the given fresh exponents on top of the last monomial.
void add_block(QOStructure& q, std::vector<Rational> a) {
    ExponentVector m = q.very_special.back().monomial;
    std::vector<VarId> block;
    const auto base = q.variables().size();
    for (std::size_t j = 0; j < a.size(); ++j) {
        block.push_back("x" + std::to_string(base + j + 1));
        m.set(block.back(), a[j]);
    }
    q.blocks.push_back(block);
    q.fresh.push_back(a);
    q.very_special.push_back({m, R(1)});
}

Subset S(std::initializer_list<std::pair<std::size_t, std::size_t>> one_based) {
    Subset s;
    for (auto [k, j] : one_based) s.push_back({k - 1, j - 1});
    return s;
}

}  // namespace

TEST_CASE("threshold_family examples") {
    const auto half = block_structure({R(1, 2)});
    const auto fam0 = threshold_family(half, classify(half));
    CHECK(fam0.ground.elements.empty());
    CHECK(fam0.members.empty());

    const auto q = block_structure({R(2, 3), R(2, 3)});
    const auto fam = threshold_family(q, classify(q));
    CHECK(fam.members == std::vector<Subset>{S({{1, 1}, {1, 2}})});

    const auto q3 = block_structure({R(3, 5), R(3, 5), R(3, 5)});
    const auto fam3 = threshold_family(q3, classify(q3));
    CHECK(fam3.members == std::vector<Subset>{S({{1, 1}, {1, 2}}), S({{1, 1}, {1, 3}}), S({{1, 2}, {1, 3}})});
}

TEST_CASE("sum exactly one counts as heavy") {
    auto q = block_structure({R(1, 2)});
    add_block(q, {R(1, 2), R(1, 2), R(1, 4)});
    const auto fam = threshold_family(q, classify(q));
    CHECK(fam.members == std::vector<Subset>{S({{2, 1}, {2, 2}})});
}

TEST_CASE("minimal_transversals examples") {
    SubsetFamily empty;
    CHECK(minimal_transversals(empty).transversals == std::vector<Subset>{Subset{}});

    SubsetFamily pair{{S({{1, 1}, {1, 2}})}, {S({{1, 1}, {1, 2}})}};
    CHECK(minimal_transversals(pair).transversals == std::vector<Subset>{S({{1, 1}}), S({{1, 2}})});

    // Brute force over all 8 subsets of {1,2,3}: the hitting sets of the three
    // pairs are the 2- and 3-element sets; the minimal ones are the pairs.
    SubsetFamily pairs{{S({{1, 1}, {1, 2}, {1, 3}})},
                       {S({{1, 1}, {1, 2}}), S({{1, 1}, {1, 3}}), S({{1, 2}, {1, 3}})}};
    CHECK(minimal_transversals(pairs).transversals ==
          std::vector<Subset>{S({{1, 1}, {1, 2}}), S({{1, 1}, {1, 3}}), S({{1, 2}, {1, 3}})});
}

TEST_CASE("transversals_by_complement examples") {
    auto heavy = block_structure({R(3, 2)});
    CHECK(transversals_by_complement(heavy, classify(heavy)).transversals == std::vector<Subset>{S({{1, 1}})});

    // A lone light block contributes the empty set.
    auto light = block_structure({R(1, 4)});
    add_block(light, {R(1, 2)});
    CHECK(transversals_by_complement(light, classify(light)).transversals == std::vector<Subset>{Subset{}});

    auto two = block_structure({R(3, 2)});
    add_block(two, {R(3, 5), R(3, 5), R(3, 5)});
    const auto t = transversals_by_complement(two, classify(two)).transversals;
    CHECK(t == std::vector<Subset>{S({{1, 1}, {2, 1}, {2, 2}}), S({{1, 1}, {2, 1}, {2, 3}}),
                                   S({{1, 1}, {2, 2}, {2, 3}})});
}

TEST_CASE("oversized ground sets are refused") {
    std::vector<Rational> a(kMaxGroundSize + 1, R(1, 10));
    auto q = block_structure({R(2)});
    add_block(q, a);
    CHECK_THROWS_AS(threshold_family(q, classify(q)), std::length_error);
    CHECK_THROWS_AS(transversals_by_complement(q, classify(q)), std::length_error);
}

TEST_CASE("a 24-element ground set is enumerated exactly") {
    auto q = block_structure({R(1, 2)});
    add_block(q, std::vector<Rational>(12, R(1, 3)));
    add_block(q, std::vector<Rational>(12, R(1, 2)));
    const auto c = classify(q);
    const auto t = minimal_transversals(threshold_family(q, c));
    // Block 2: complements of size <= 2, so J_2 has 10 elements (66 ways);
    // block 3: complement of size 1 (12 ways).
    CHECK(t.transversals.size() == 66 * 12);
    CHECK(t.transversals == transversals_by_complement(q, c).transversals);
}

namespace {

// Random structure where only fresh exponents matter; total size bounded.
QOStructure random_structure(std::mt19937_64& rng, std::size_t max_ground) {
    const auto pool = fraction_pool(6);
    while (true) {
        auto q = block_structure({pick(rng, pool)});
        const long g = uniform(rng, 1, 4);
        std::size_t size = 1;
        for (long k = 1; k < g; ++k) {
            std::vector<Rational> a(static_cast<std::size_t>(uniform(rng, 1, 6)));
            for (auto& x : a) x = pick(rng, pool);
            size += a.size();
            add_block(q, a);
        }
        // Occasionally a wider first block.
        if (uniform(rng, 0, 3) == 0) {
            q.fresh[0].push_back(pick(rng, pool));
            q.blocks[0].push_back("y0");
            size += 1;
        }
        if (size <= max_ground + 6) return q;
    }
}

}  // namespace

TEST_CASE("Berge enumeration, blockwise complements and brute force agree") {
    std::mt19937_64 rng(2024);
    int brute_checked = 0;
    for (int iter = 0; iter < 400; ++iter) {
        const auto q = random_structure(rng, 12);
        for (Case tag : {Case::LessThanOne, Case::GreaterThanOne}) {
            const CaseTag c{tag, R(0)};
            const auto ground = ground_set(q, tag).elements;
            if (ground.size() > 12) continue;
            const auto berge = minimal_transversals(threshold_family(q, c));
            const auto blockwise = transversals_by_complement(q, c);
            REQUIRE(berge.transversals == blockwise.transversals);
            if (ground.size() <= 10) {
                CHECK(berge.transversals == brute_transversals(q, ground));
                ++brute_checked;
            }

            const auto family = threshold_family(q, c);
            for (const auto& j : berge.transversals) {
                // Every element is needed: dropping it leaves some member unhit.
                for (std::size_t drop = 0; drop < j.size(); ++drop) {
                    Subset smaller = j;
                    smaller.erase(smaller.begin() + static_cast<long>(drop));
                    const bool still_hits = std::all_of(family.members.begin(), family.members.end(), [&](const Subset& m) {
                        return std::any_of(m.begin(), m.end(), [&](const Slot& s) {
                            return std::binary_search(smaller.begin(), smaller.end(), s);
                        });
                    });
                    CHECK_FALSE(still_hits);
                }
            }
            // Antichain.
            for (const auto& a : berge.transversals)
                for (const auto& b : berge.transversals)
                    if (a != b) CHECK_FALSE(std::includes(b.begin(), b.end(), a.begin(), a.end()));
        }
    }
    CHECK(brute_checked > 200);
}

TEST_CASE("transversal output is deterministic and sorted") {
    auto q = block_structure({R(2, 3), R(1, 2), R(2, 3)});
    add_block(q, {R(1, 2), R(1, 2), R(1, 3), R(2, 3)});
    const auto c = classify(q);
    const auto first = minimal_transversals(threshold_family(q, c)).transversals;
    for (int i = 0; i < 3; ++i) CHECK(minimal_transversals(threshold_family(q, c)).transversals == first);
    CHECK(std::is_sorted(first.begin(), first.end()));
}
