#include "qolimits/monomial.hpp"

#include <set>
#include <stdexcept>

namespace qolimits {

ExponentVector::ExponentVector(std::initializer_list<std::pair<const VarId, Rational>> entries) {
    for (const auto& [var, e] : entries) set(var, e);
}

void ExponentVector::set(const VarId& var, const Rational& exponent) {
    if (exponent.sign() <= 0)
        throw std::invalid_argument("non-positive exponent for variable " + var);
    entries_[var] = exponent;
}

Rational ExponentVector::get(const VarId& var) const {
    auto it = entries_.find(var);
    return it == entries_.end() ? Rational(0) : it->second;
}

std::vector<VarId> ExponentVector::support() const {
    std::vector<VarId> out;
    out.reserve(entries_.size());
    for (const auto& [var, e] : entries_) out.push_back(var);
    return out;
}

ExponentVector ExponentVector::operator*(const ExponentVector& other) const {
    ExponentVector out = *this;
    for (const auto& [var, e] : other.entries_) out.entries_[var] = get(var) + e;
    return out;
}

bool exp_vec_divides(const ExponentVector& a, const ExponentVector& b) {
    for (const auto& [var, e] : a.entries())
        if (e > b.get(var)) return false;
    return true;
}

Rational weighted_valuation(const ExponentVector& m, const std::map<VarId, Rational>& weights) {
    Rational total;
    for (const auto& [var, e] : m.entries()) {
        auto it = weights.find(var);
        if (it == weights.end()) throw std::invalid_argument("unweighted variable " + var);
        total += e * it->second;
    }
    return total;
}

bool ProjectivePoint::is_zero() const {
    if (!eta.is_zero()) return false;
    for (const auto& [var, x] : xi)
        if (!x.is_zero()) return false;
    return true;
}

std::string ProjectivePoint::str(const std::vector<VarId>& order) const {
    std::string out = "(";
    for (const auto& var : order) {
        auto it = xi.find(var);
        out += (it == xi.end() ? std::string("0") : it->second.str()) + " : ";
    }
    return out + eta.str() + ")";
}

bool projective_eq(const ProjectivePoint& p, const ProjectivePoint& q) {
    if (p.is_zero() || q.is_zero()) throw std::invalid_argument("zero vector is not a projective point");

    std::vector<std::pair<Rational, Rational>> coords;
    std::set<VarId> keys;
    for (const auto& [v, x] : p.xi) keys.insert(v);
    for (const auto& [v, x] : q.xi) keys.insert(v);
    auto lookup = [](const ProjectivePoint& pt, const VarId& v) {
        auto it = pt.xi.find(v);
        return it == pt.xi.end() ? Rational(0) : it->second;
    };
    for (const auto& v : keys) coords.emplace_back(lookup(p, v), lookup(q, v));
    coords.emplace_back(p.eta, q.eta);

    // Cross-multiplication on every pair: p_i q_j == p_j q_i.
    for (std::size_t i = 0; i < coords.size(); ++i)
        for (std::size_t j = i + 1; j < coords.size(); ++j)
            if (coords[i].first * coords[j].second != coords[j].first * coords[i].second)
                return false;
    return true;
}

}  // namespace qolimits
