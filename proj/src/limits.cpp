#include "qolimits/limits.hpp"

#include <algorithm>
#include <stdexcept>

namespace qolimits {

LimitsDecomposition decompose(const QOStructure& q) {
    LimitsDecomposition d{classify(q), {}};
    const auto transversals = minimal_transversals(threshold_family(q, d.case_tag));
    std::optional<ConeEquation> cone;
    if (d.case_tag.tag == Case::EqualOne) cone = cone_equation(q);

    for (const auto& j : transversals.transversals) {
        Component comp;
        comp.j = j;
        comp.eta_vanishes = d.case_tag.tag == Case::LessThanOne;
        comp.xi_vanishing = j;
        comp.cone = cone;
        d.components.push_back(std::move(comp));
    }
    return d;
}

ConeEquation cone_equation(const QOStructure& q) {
    const auto tag = classify(q);
    if (tag.tag != Case::EqualOne)
        throw std::invalid_argument("cone equation requires EQUAL_ONE, got " + case_name(tag.tag));

    ConeEquation eq;
    const auto& a = q.fresh.front();
    eq.total = 1;
    for (const auto& x : a) eq.total = lcm(eq.total, x.den());
    for (const auto& x : a) eq.c.push_back(x.num() * (eq.total / x.den()));

    const long total = to_long(eq.total);
    eq.sign = total % 2 == 0 ? 1 : -1;
    eq.constant = q.very_special.front().coeff.pow(total);
    for (std::size_t i = 0; i < a.size(); ++i) eq.constant *= a[i].pow(to_long(eq.c[i]));
    return eq;
}

TangentCone tangent_cone(const QOStructure& q) {
    const auto tag = classify(q);
    TangentCone cone{};
    switch (tag.tag) {
        case Case::LessThanOne:
            cone.kind = TangentCone::Kind::CoordinateProduct;
            cone.product = q.blocks.front();
            break;
        case Case::GreaterThanOne:
            cone.kind = TangentCone::Kind::Hyperplane;
            break;
        case Case::EqualOne: {
            cone.kind = TangentCone::Kind::Binomial;
            cone.c = 1;
            for (const auto& x : q.fresh.front()) cone.c = lcm(cone.c, x.den());
            for (const auto& x : q.fresh.front()) cone.d.push_back(x.num() * (cone.c / x.den()));
            cone.coefficient = q.very_special.front().coeff.pow(to_long(cone.c));
            break;
        }
    }
    return cone;
}

Halo halo(const QOStructure& q, const LimitsDecomposition& d) {
    const auto tag = classify(q);
    if (tag.tag != d.case_tag.tag || tag.witness != d.case_tag.witness)
        throw std::invalid_argument("decomposition does not belong to this structure");
    const auto ground = ground_set(q, tag.tag).elements;

    Halo h;
    for (const auto& comp : d.components) {
        for (const auto& s : comp.j)
            if (!std::binary_search(ground.begin(), ground.end(), s))
                throw std::invalid_argument("component index outside the ground set");
        HaloCone cone;
        cone.j = comp.j;
        switch (tag.tag) {
            case Case::LessThanOne:
                cone.x_vanishing = q.blocks.front();
                break;
            case Case::GreaterThanOne:
                cone.y_vanishes = true;
                break;
            case Case::EqualOne:
                cone.binomial = true;
                break;
        }
        for (const auto& s : ground)
            if (!std::binary_search(comp.j.begin(), comp.j.end(), s)) cone.x_vanishing.push_back(q.var(s));
        h.cones.push_back(std::move(cone));
    }
    return h;
}

bool is_trivial(const QOStructure& q) {
    for (const auto& m : q.special)
        for (const auto& [var, e] : m.entries())
            if (e < Rational(1)) return false;
    return true;
}

long projective_dimension(const QOStructure& q, const Component& component) {
    long dim = static_cast<long>(q.variables().size());
    dim -= static_cast<long>(component.xi_vanishing.size());
    if (component.eta_vanishes) --dim;
    if (component.cone) --dim;
    return dim;
}

}  // namespace qolimits
