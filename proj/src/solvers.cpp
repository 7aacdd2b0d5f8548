#include "qolimits/solvers.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace qolimits {

namespace {

Rational sum_of(std::span<const Rational> values) {
    return std::accumulate(values.begin(), values.end(), Rational(0));
}

void require_positive(std::span<const Rational> a) {
    if (a.empty()) throw std::invalid_argument("empty exponent list");
    for (const auto& x : a)
        if (x.sign() <= 0) throw std::invalid_argument("exponents must be positive");
}

}  // namespace

bool ExponentSystemSolution::satisfies(std::span<const Rational> a) const {
    if (a.size() != c.size()) return false;
    const Rational total = sum_of(c);
    for (std::size_t k = 0; k < a.size(); ++k) {
        if (c[k].sign() <= 0) return false;
        const Rational lhs = a[k] * total;
        const bool ok = kind == SystemKind::StrictLess      ? lhs < c[k]
                      : kind == SystemKind::StrictGreater ? lhs > c[k]
                                                           : lhs == c[k];
        if (!ok) return false;
    }
    return true;
}

std::vector<Integer> ExponentSystemSolution::cleared() const {
    Integer common = 1;
    for (const auto& x : c) common = lcm(common, x.den());
    std::vector<Integer> out;
    Integer g = 0;
    for (const auto& x : c) {
        out.push_back(x.num() * (common / x.den()));
        g = gcd(g, out.back());
    }
    if (g > 1)
        for (auto& x : out) x /= g;
    return out;
}

ExponentSystemSolution solve_strict_less(std::span<const Rational> a) {
    require_positive(a);
    if (sum_of(a) >= Rational(1)) throw std::invalid_argument("strict-less system needs sum(a) < 1");

    ExponentSystemSolution sol{SystemKind::StrictLess, {Rational(1)}};
    Rational prefix = 1;
    Rational tail = sum_of(a);
    for (std::size_t s = 1; s < a.size(); ++s) {
        tail -= a[s - 1];
        const Rational lower = a[s] * prefix / (Rational(1) - tail);
        const Rational upper = a[s] / a[s - 1] * sol.c[s - 1];
        sol.c.push_back((lower + upper) / Rational(2));
        prefix += sol.c.back();
    }
    return sol;
}

ExponentSystemSolution solve_strict_greater(std::span<const Rational> a) {
    require_positive(a);
    if (sum_of(a) <= Rational(1)) throw std::invalid_argument("strict-greater system needs sum(a) > 1");

    ExponentSystemSolution sol{SystemKind::StrictGreater, {Rational(1)}};
    Rational prefix = 1;
    Rational tail = sum_of(a);
    for (std::size_t s = 1; s < a.size(); ++s) {
        tail -= a[s - 1];
        const Rational lower = a[s] / a[s - 1] * sol.c[s - 1];
        if (tail < Rational(1)) {
            const Rational upper = a[s] * prefix / (Rational(1) - tail);
            sol.c.push_back((lower + upper) / Rational(2));
        } else {
            sol.c.push_back(lower + Rational(1));
        }
        prefix += sol.c.back();
    }
    return sol;
}

ExponentSystemSolution solve_equality(std::span<const Rational> a, const Rational& seed) {
    require_positive(a);
    if (sum_of(a) != Rational(1)) throw std::invalid_argument("equality system needs sum(a) == 1");
    if (seed.sign() <= 0) throw std::invalid_argument("seed must be positive");

    ExponentSystemSolution sol{SystemKind::Equality, {seed}};
    for (std::size_t s = 1; s < a.size(); ++s) sol.c.push_back(a[s] / a[s - 1] * sol.c[s - 1]);
    std::vector<Rational> integral;
    for (const auto& x : sol.cleared()) integral.emplace_back(x, Integer(1));
    sol.c = std::move(integral);
    return sol;
}

WeightAssignment weight_construction(const QOStructure& q, const Subset& j, const CaseTag& c,
                                     const Rational& seed) {
    if (seed.sign() <= 0) throw std::invalid_argument("seed weight must be positive");
    const std::size_t g = q.g();

    const auto blocks = ground_blocks(q, c.tag);
    std::vector<std::vector<bool>> in_j(g);
    for (std::size_t k = 0; k < g; ++k) in_j[k].assign(q.blocks[k].size(), false);
    for (const auto& s : j) {
        if (std::find(blocks.begin(), blocks.end(), s.block) == blocks.end() ||
            s.index >= q.blocks[s.block].size())
            throw std::invalid_argument("malformed J: element outside the ground set");
        if (in_j[s.block][s.index]) throw std::invalid_argument("malformed J: repeated element");
        in_j[s.block][s.index] = true;
    }

    std::vector<Rational> outside(g), inside(g);
    for (std::size_t k = 0; k < g; ++k)
        for (std::size_t i = 0; i < q.blocks[k].size(); ++i)
            (in_j[k][i] ? inside : outside)[k] += q.fresh[k][i];
    for (auto k : blocks)
        if (outside[k] >= Rational(1))
            throw std::invalid_argument("malformed J: misses a subset of block " +
                                        std::to_string(k + 1) + " with exponent sum >= 1");

    WeightAssignment w;
    w.block_alpha.resize(g);
    w.block_beta.resize(g);
    auto weight_of = [&](std::size_t k, std::size_t i) {
        return in_j[k][i] ? w.block_beta[k] : w.block_alpha[k];
    };

    w.block_alpha[0] = seed;
    if (c.tag == Case::GreaterThanOne) {
        // Pins v(M_1) = alpha_1, so the slots outside J sit at valuation 0 with eta.
        w.block_beta[0] = (Rational(1) - outside[0]) / inside[0] * seed;
        w.v0 = 0;
    } else {
        w.v0 = seed * (c.witness - Rational(1));
    }

    for (std::size_t k = 1; k < g; ++k) {
        const auto& prev = q.very_special[k - 1].monomial;
        const auto& cur = q.very_special[k].monomial;
        Rational numer = w.block_alpha[k - 1];
        for (std::size_t b = 0; b < k; ++b)
            for (std::size_t i = 0; i < q.blocks[b].size(); ++i) {
                const auto& v = q.blocks[b][i];
                numer += (cur.get(v) - prev.get(v)) * weight_of(b, i);
            }
        const Rational denom = Rational(1) - outside[k];
        const Rational threshold = numer / denom;
        if (inside[k].sign() > 0) w.block_beta[k] = threshold / Rational(2);
        w.block_alpha[k] = threshold + inside[k] * w.block_beta[k] / denom;
    }

    for (std::size_t k = 0; k < g; ++k)
        for (std::size_t i = 0; i < q.blocks[k].size(); ++i) w.alpha[{k, i}] = weight_of(k, i);
    return w;
}

Rational det_lambda_minus_delta(std::span<const Rational> lambda) {
    const Rational base = Rational(1) - sum_of(lambda);
    return lambda.size() % 2 == 0 ? base : -base;
}

}  // namespace qolimits
