#include <doctest.h>

#include <random>

#include "qolimits/monomial.hpp"
#include "support/generators.hpp"

using namespace qolimits;
using qolimits::testing::R;
using qolimits::testing::random_rational;
using qolimits::testing::uniform;

TEST_CASE("rational parsing and rendering") {
    CHECK(Rational::parse("3/6") == R(1, 2));
    CHECK(Rational::parse("-4") == R(-4));
    CHECK(Rational::parse("+2/4").str() == "1/2");
    CHECK(R(6, -4).str() == "-3/2");
    CHECK(R(0, 7).str() == "0");
    CHECK(R(0, 7).den() == 1);
    CHECK_THROWS(Rational::parse("1.5"));
    CHECK_THROWS(Rational::parse("1/0"));
    CHECK_THROWS(Rational::parse("1/"));
    CHECK_THROWS(Rational::parse("x"));
    CHECK_THROWS(R(1) / R(0));
}

TEST_CASE("rational arithmetic is a field on random values") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 300; ++i) {
        const Rational a = random_rational(rng, 50);
        const Rational b = random_rational(rng, 50);
        const Rational c = random_rational(rng, 50);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a - a == R(0));
        if (!a.is_zero()) CHECK(a * a.inverse() == R(1));
        CHECK(gcd(a.num(), a.den()) == 1);
        CHECK(a.den() > 0);
    }
}

TEST_CASE("big integers do not overflow") {
    const Rational big = R(3, 2).pow(200);
    CHECK(big.num() == Integer(3) * Rational(3).pow(199).num());
    CHECK((big / R(3, 2).pow(199)) == R(3, 2));
}

TEST_CASE("exp_vec_divides examples") {
    CHECK(exp_vec_divides({}, {{"x1", R(1, 2)}}));
    CHECK(exp_vec_divides({{"x1", R(1, 2)}}, {{"x1", R(1, 2)}, {"x2", R(3, 2)}}));
    CHECK_FALSE(exp_vec_divides({{"x1", R(2, 3)}}, {{"x1", R(1, 2)}, {"x2", R(1)}}));
}

TEST_CASE("exponent vectors keep only positive entries") {
    ExponentVector m;
    CHECK_THROWS_AS(m.set("x1", R(0)), std::invalid_argument);
    CHECK_THROWS_AS(m.set("x1", R(-1, 2)), std::invalid_argument);
    m.set("x1", R(1, 3));
    CHECK(m.support() == std::vector<VarId>{"x1"});
    CHECK(m.get("x2") == R(0));
}

namespace {

ExponentVector random_monomial(std::mt19937_64& rng) {
    ExponentVector m;
    for (const char* v : {"x1", "x2", "x3"})
        if (uniform(rng, 0, 2) != 0) m.set(v, R(uniform(rng, 1, 4), uniform(rng, 1, 3)));
    return m;
}

}  // namespace

TEST_CASE("exp_vec_divides is a partial order") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 400; ++i) {
        const auto a = random_monomial(rng);
        const auto b = random_monomial(rng);
        const auto c = random_monomial(rng);
        CHECK(exp_vec_divides(a, a));
        if (exp_vec_divides(a, b) && exp_vec_divides(b, a)) CHECK(a == b);
        if (exp_vec_divides(a, b) && exp_vec_divides(b, c)) CHECK(exp_vec_divides(a, c));
        CHECK(exp_vec_divides(a, a * b));
    }
}

TEST_CASE("weighted_valuation examples") {
    const std::map<VarId, Rational> ones{{"x1", R(1)}, {"x2", R(1)}};
    CHECK(weighted_valuation({}, ones) == R(0));
    CHECK(weighted_valuation({{"x1", R(1, 2)}, {"x2", R(3, 2)}}, ones) == R(2));
    CHECK(weighted_valuation({{"x1", R(2, 3)}, {"x2", R(2, 3)}}, {{"x1", R(1)}, {"x2", R(1, 4)}}) == R(5, 6));
    CHECK_THROWS_WITH_AS(weighted_valuation({{"x3", R(1)}}, ones), "unweighted variable x3", std::invalid_argument);
}

TEST_CASE("weighted_valuation is additive over products") {
    std::mt19937_64 rng(9);
    for (int i = 0; i < 300; ++i) {
        const auto a = random_monomial(rng);
        const auto b = random_monomial(rng);
        std::map<VarId, Rational> w;
        for (const char* v : {"x1", "x2", "x3"}) w[v] = R(uniform(rng, 1, 16), uniform(rng, 1, 16));
        CHECK(weighted_valuation(a * b, w) == weighted_valuation(a, w) + weighted_valuation(b, w));
    }
}

namespace {

ProjectivePoint point(std::initializer_list<long> xi, long eta) {
    ProjectivePoint p;
    int i = 1;
    for (long x : xi) p.xi["x" + std::to_string(i++)] = R(x);
    p.eta = R(eta);
    return p;
}

}  // namespace

TEST_CASE("projective_eq examples") {
    CHECK(projective_eq(point({1, 0}, 0), point({2, 0}, 0)));
    CHECK_FALSE(projective_eq(point({1, 0}, 1), point({1, 0}, 2)));
    CHECK(projective_eq(point({0, 3}, 6), point({0, 1}, 2)));
    CHECK_THROWS_AS(projective_eq(point({0, 0}, 0), point({1, 0}, 0)), std::invalid_argument);
}

TEST_CASE("projective_eq is an equivalence invariant under scaling") {
    std::mt19937_64 rng(21);
    for (int i = 0; i < 200; ++i) {
        ProjectivePoint p;
        for (const char* v : {"x1", "x2"}) p.xi[v] = random_rational(rng, 3);
        p.eta = random_rational(rng, 3);
        if (p.is_zero()) continue;
        Rational lambda = random_rational(rng, 9);
        if (lambda.is_zero()) lambda = R(-7, 3);
        ProjectivePoint q = p;
        for (auto& [v, x] : q.xi) x *= lambda;
        q.eta *= lambda;
        CHECK(projective_eq(p, p));
        CHECK(projective_eq(p, q));
        CHECK(projective_eq(q, p));

        ProjectivePoint r;
        for (const char* v : {"x1", "x2"}) r.xi[v] = random_rational(rng, 3);
        r.eta = random_rational(rng, 3);
        if (r.is_zero()) continue;
        if (projective_eq(p, r)) CHECK(projective_eq(q, r));
    }
}
