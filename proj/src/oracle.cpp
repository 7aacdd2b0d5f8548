#include "qolimits/oracle.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace qolimits {

ThetaSeries ThetaSeries::from_terms(std::vector<std::pair<Rational, Rational>> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    ThetaSeries s;
    for (auto& [v, coeff] : terms) {
        if (!s.terms_.empty() && s.terms_.back().first == v)
            s.terms_.back().second += coeff;
        else
            s.terms_.emplace_back(v, std::move(coeff));
        if (s.terms_.back().second.is_zero()) s.terms_.pop_back();
    }
    return s;
}

Integer ramification(const QOStructure& q, const VarId& var) {
    Integer d = 1;
    for (const auto& vs : q.very_special)
        if (vs.monomial.contains(var)) d = lcm(d, vs.monomial.get(var).den());
    return d;
}

namespace {

void check_curve(const QOStructure& q, const WeightedCurve& curve) {
    for (const auto& v : q.variables()) {
        auto w = curve.weights.find(v);
        auto s = curve.scales.find(v);
        if (w == curve.weights.end() || s == curve.scales.end())
            throw std::invalid_argument("curve does not weight and scale variable " + v);
        if (w->second.sign() <= 0) throw std::invalid_argument("non-positive weight on " + v);
        if (s->second.is_zero()) throw std::invalid_argument("zero scale on " + v);
    }
}

// eps^a for eps = rho^d: the exponent a*d is an integer by choice of d.
Rational scale_power(const Rational& rho, const Rational& a, const Integer& d) {
    const Rational e = a * Rational(d, Integer(1));
    return rho.pow(to_long(e.num()));
}

struct MonomialOnCurve {
    Rational valuation;
    Rational value;  // hat M: the monomial evaluated at the scales
};

MonomialOnCurve evaluate(const ExponentVector& m, const WeightedCurve& curve,
                         const std::map<VarId, Integer>& ram) {
    MonomialOnCurve out{weighted_valuation(m, curve.weights), Rational(1)};
    for (const auto& [var, e] : m.entries())
        out.value *= scale_power(curve.scales.at(var), e, ram.at(var));
    return out;
}

std::map<VarId, Integer> ramifications(const QOStructure& q) {
    std::map<VarId, Integer> out;
    for (const auto& v : q.variables()) out[v] = ramification(q, v);
    return out;
}

ThetaSeries theta_with(const QOStructure& q, const WeightedCurve& curve, Slot slot,
                       const std::vector<MonomialOnCurve>& on_curve, const std::map<VarId, Integer>& ram) {
    const VarId& var = q.var(slot);
    const Rational alpha = curve.weights.at(var);
    const Rational eps = curve.scales.at(var).pow(to_long(ram.at(var)));
    std::vector<std::pair<Rational, Rational>> terms;
    for (std::size_t u = slot.block; u < q.g(); ++u) {
        const auto& vs = q.very_special[u];
        if (!vs.monomial.contains(var)) continue;
        terms.emplace_back(on_curve[u].valuation - alpha,
                           vs.coeff * vs.monomial.get(var) * on_curve[u].value / eps);
    }
    return ThetaSeries::from_terms(std::move(terms));
}

std::mt19937_64 trial_engine(std::uint64_t seed, std::uint64_t trial, std::uint64_t stream) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32),
                      static_cast<std::uint32_t>(stream)};
    return std::mt19937_64(seq);
}

Rational random_scale(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> pick(-9, 8);
    const long r = pick(rng);
    return Rational(r >= 0 ? r + 1 : r);
}

}  // namespace

ThetaSeries theta_series(const QOStructure& q, const WeightedCurve& curve, Slot slot) {
    check_curve(q, curve);
    const auto ram = ramifications(q);
    std::vector<MonomialOnCurve> on_curve;
    for (const auto& vs : q.very_special) on_curve.push_back(evaluate(vs.monomial, curve, ram));
    return theta_with(q, curve, slot, on_curve, ram);
}

ProjectivePoint curve_limit(const QOStructure& q, const WeightedCurve& curve) {
    check_curve(q, curve);
    const auto ram = ramifications(q);
    std::vector<MonomialOnCurve> on_curve;
    for (const auto& vs : q.very_special) on_curve.push_back(evaluate(vs.monomial, curve, ram));

    std::vector<std::pair<Slot, ThetaSeries>> thetas;
    Rational v_min = 0;  // theta_0 = 1 in the eta slot
    for (const auto& slot : q.slots()) {
        auto series = theta_with(q, curve, slot, on_curve, ram);
        if (!series.is_zero()) v_min = std::min(v_min, series.leading().first);
        thetas.emplace_back(slot, std::move(series));
    }

    ProjectivePoint p;
    p.eta = v_min.is_zero() ? Rational(1) : Rational(0);
    for (const auto& [slot, series] : thetas) {
        const bool survives = !series.is_zero() && series.leading().first == v_min;
        p.xi[q.var(slot)] = survives ? -series.leading().second : Rational(0);
    }
    return p;
}

std::vector<std::size_t> membership(const ProjectivePoint& p, const QOStructure& q,
                                    const LimitsDecomposition& d) {
    if (p.is_zero()) throw std::invalid_argument("zero vector is not a projective point");
    auto xi = [&](Slot s) {
        auto it = p.xi.find(q.var(s));
        return it == p.xi.end() ? Rational(0) : it->second;
    };

    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < d.components.size(); ++i) {
        const auto& comp = d.components[i];
        if (comp.eta_vanishes && !p.eta.is_zero()) continue;
        if (std::any_of(comp.xi_vanishing.begin(), comp.xi_vanishing.end(),
                        [&](Slot s) { return !xi(s).is_zero(); }))
            continue;
        if (comp.cone) {
            const auto& cone = *comp.cone;
            Rational lhs = 1;
            for (std::size_t j = 0; j < cone.c.size(); ++j) lhs *= xi({0, j}).pow(to_long(cone.c[j]));
            const Rational rhs = Rational(cone.sign) * cone.constant * p.eta.pow(to_long(cone.total));
            if (lhs != rhs) continue;
        }
        out.push_back(i);
    }
    return out;
}

WeightedCurve random_curve(const QOStructure& q, std::uint64_t seed, std::uint64_t trial) {
    auto rng = trial_engine(seed, trial, 0);
    std::uniform_int_distribution<long> part(1, 16);
    WeightedCurve curve;
    for (const auto& v : q.variables()) {
        const long num = part(rng);
        const long den = part(rng);
        curve.weights[v] = Rational(num, den);
        curve.scales[v] = random_scale(rng);
    }
    return curve;
}

WeightedCurve random_scaled_curve(const QOStructure& q, const std::map<Slot, Rational>& weights,
                                  std::uint64_t seed, std::uint64_t trial) {
    auto rng = trial_engine(seed, trial, 1);
    WeightedCurve curve;
    for (const auto& slot : q.slots()) {
        const auto& v = q.var(slot);
        curve.weights[v] = weights.at(slot);
        curve.scales[v] = random_scale(rng);
    }
    return curve;
}

std::vector<ProjectivePoint> sample_component(const QOStructure& q, const Subset& j, std::size_t trials,
                                              std::uint64_t seed) {
    const auto w = weight_construction(q, j, classify(q));
    std::vector<ProjectivePoint> out;
    out.reserve(trials);
    for (std::size_t t = 0; t < trials; ++t) out.push_back(curve_limit(q, random_scaled_curve(q, w.alpha, seed, t)));
    return out;
}

}  // namespace qolimits
