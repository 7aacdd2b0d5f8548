#pragma once

#include <optional>
#include <vector>

#include "qolimits/branch.hpp"
#include "qolimits/transversal.hpp"

namespace qolimits {

// prod_j xi_{1j}^{c_j} - sign * constant * eta^{total} = 0, indices over block 1.
struct ConeEquation {
    std::vector<Integer> c;
    Integer total;
    Rational constant;
    int sign = 1;
};

struct Component {
    Subset j;
    bool eta_vanishes = false;
    std::vector<Slot> xi_vanishing;  // sorted
    std::optional<ConeEquation> cone;
};

struct LimitsDecomposition {
    CaseTag case_tag;
    std::vector<Component> components;
};

struct TangentCone {
    enum class Kind { CoordinateProduct, Hyperplane, Binomial };
    Kind kind;
    std::vector<VarId> product;  // CoordinateProduct: block-1 variables
    // Binomial: y^c - coefficient * prod x_{1i}^{d_i}, coefficient = lambda_1^c.
    Integer c;
    std::vector<Integer> d;
    Rational coefficient;
};

// One cone V_J of the halo: affine coordinates set to zero, plus optionally
// the tangent-cone binomial.
struct HaloCone {
    Subset j;
    bool y_vanishes = false;
    std::vector<VarId> x_vanishing;  // structure order
    bool binomial = false;
};

struct Halo {
    std::vector<HaloCone> cones;
};

LimitsDecomposition decompose(const QOStructure& q);

// Throws std::invalid_argument unless the first block's exponents sum to 1.
ConeEquation cone_equation(const QOStructure& q);

TangentCone tangent_cone(const QOStructure& q);

// Throws std::invalid_argument if d was not produced from q.
Halo halo(const QOStructure& q, const LimitsDecomposition& d);

// Every exponent of every input special monomial is >= 1.
bool is_trivial(const QOStructure& q);

// Dimension of a component inside P^{n}, n = number of variables.
long projective_dimension(const QOStructure& q, const Component& component);

}  // namespace qolimits
