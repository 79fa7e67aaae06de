#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "prodcanon/poly.hpp"

using namespace prodcanon;

namespace {

const VarLayout kLay{1, 2};  // kappa1, q1, q2, x, t1, t2

MultiPoly X() { return MultiPoly::var(kLay, kLay.x()); }
MultiPoly T(unsigned i) { return MultiPoly::var(kLay, kLay.t(i)); }
MultiPoly Q(unsigned i) { return MultiPoly::var(kLay, kLay.q(i)); }
MultiPoly K() { return MultiPoly::var(kLay, kLay.kappa(0)); }
MultiPoly C(long n) { return MultiPoly::constant(kLay, Rational(n)); }

MultiPoly rand_poly(std::mt19937_64& rng, int nterms, unsigned maxdeg) {
    std::uniform_int_distribution<long> coef(-9, 9);
    std::uniform_int_distribution<unsigned> deg(0, maxdeg);
    MultiPoly p(kLay);
    for (int i = 0; i < nterms; ++i) {
        Monomial m(kLay.nvars(), 0);
        m[kLay.x()] = deg(rng);
        m[kLay.t(0)] = deg(rng) / 2;
        m[kLay.kappa(0)] = deg(rng) / 2;
        MultiPoly::TermMap tm;
        tm[m] = Rational(coef(rng));
        p = p.add(MultiPoly::from_terms(kLay, tm));
    }
    return p;
}

}  // namespace

TEST_CASE("arithmetic basics") {
    MultiPoly p = X().add(C(1)).mul(X().add(C(2)));  // (x+1)(x+2)
    MultiPoly expect = X().pow(2).add(X().mul_scalar(Rational(3))).add(C(2));
    CHECK(p == expect);
    CHECK(p.degree(kLay.x()) == 2);
    CHECK(p.str() == "x^2 + 3*x + 2");
}

TEST_CASE("content discipline") {
    CycloRadical s13 = CycloRadical::radical_of(Rational(13), 2);
    MultiPoly a = X().mul_gamma(s13);
    MultiPoly b = MultiPoly::gamma_constant(kLay, s13);
    MultiPoly sum = a.add(b);  // sqrt(13)*(x+1)
    CHECK(sum == X().add(C(1)).mul_gamma(s13));

    MultiPoly c = X().mul_scalar(Rational(7));
    CHECK_THROWS_AS(a.add(c), Error);

    // sqrt(13)*x * sqrt(13)*x = 13*x^2: content collapses to rational
    MultiPoly sq = a.mul(a);
    CHECK(sq == X().pow(2).mul_scalar(Rational(13)));
    CHECK(sq.content().is_one());
}

TEST_CASE("divide exact") {
    MultiPoly p = X().add(C(1)).mul(T(0).add(C(2))).mul(K().add(C(3)));
    auto q = p.divide(T(0).add(C(2)));
    REQUIRE(q.has_value());
    CHECK(*q == X().add(C(1)).mul(K().add(C(3))));
    CHECK(!p.divide(X().add(C(5))).has_value());
}

TEST_CASE("gcd pinned examples") {
    // gcd(x^2+3x+2, x+2) = x+2
    MultiPoly a = X().pow(2).add(X().mul_scalar(Rational(3))).add(C(2));
    CHECK(gcd_poly(a, X().add(C(2))) == X().add(C(2)));

    // gcd(f, 0) = normalized f
    MultiPoly f = X().mul_scalar(Rational(-4)).add(C(-8));
    CHECK(gcd_poly(f, MultiPoly(kLay)) == X().add(C(2)));

    // gcd(t1+x, t1+x+1) = 1
    CHECK(gcd_poly(T(0).add(X()), T(0).add(X()).add(C(1))) == C(1));
}

TEST_CASE("gcd multiplicative property on random instances") {
    std::mt19937_64 rng(3);
    for (int it = 0; it < 60; ++it) {
        MultiPoly a = rand_poly(rng, 3, 3);
        MultiPoly b = rand_poly(rng, 3, 3);
        MultiPoly g = rand_poly(rng, 2, 2);
        if (a.is_zero() || b.is_zero() || g.is_zero()) continue;
        MultiPoly lhs = gcd_poly(a.mul(g), b.mul(g));
        MultiPoly rhs = gcd_poly(a, b).mul(g.normalized().primitive).normalized().primitive;
        // norm(g) * gcd(a, b) divides gcd(a g, b g)
        CHECK(lhs.divide(rhs).has_value());
    }
}

TEST_CASE("normalized") {
    MultiPoly p = X().mul_scalar(Rational(-6, 4)).add(C(-3));  // -3/2 x - 3
    auto n = p.normalized();
    CHECK(n.scale == Rational(-3, 2));
    CHECK(n.primitive == X().add(C(2)));
    CHECK(n.primitive.mul_scalar(n.scale) == p);
}

TEST_CASE("substitute and eval") {
    // p = x*t1 + 1 evaluated at n=3 with t1 -> q1^3
    MultiPoly p = X().mul(T(0)).add(C(1));
    MultiPoly e = p.eval_at(3);
    MultiPoly expect = Q(0).pow(3).mul_scalar(Rational(3)).add(C(1));
    CHECK(e == expect);
    CHECK(e.eval_params({Rational(0)}, {Rational(2), Rational(3)}) == Rational(25));

    // substitute x -> x + 2
    MultiPoly sh = p.substitute(kLay.x(), X().add(C(2)));
    CHECK(sh == X().add(C(2)).mul(T(0)).add(C(1)));
}

TEST_CASE("ratfunc normalization and arithmetic") {
    RatFunc r(X().add(C(1)), X().pow(2).add(X()));  // (x+1)/(x^2+x) = 1/x
    CHECK(r.num() == C(1));
    CHECK(r.den() == X());

    RatFunc a(C(1), X());
    RatFunc b(C(1), X().add(C(1)));
    RatFunc s = a.sub(b);  // 1/(x(x+1))
    CHECK(s == RatFunc(C(1), X().mul(X().add(C(1)))));

    // denominator normalization: content moves to numerator
    CycloRadical s13 = CycloRadical::radical_of(Rational(13), 2);
    RatFunc c(C(1), MultiPoly::gamma_constant(kLay, s13));
    CHECK(c.den() == C(1));
    CHECK(c.num() == MultiPoly::gamma_constant(kLay, s13.inverse()));

    CHECK(a.pow(-2) == RatFunc(X().pow(2), C(1)));
}

TEST_CASE("ratfunc field ops on random instances") {
    std::mt19937_64 rng(9);
    for (int it = 0; it < 40; ++it) {
        MultiPoly pa = rand_poly(rng, 2, 2), pb = rand_poly(rng, 2, 2), pc = rand_poly(rng, 2, 2);
        if (pb.is_zero() || pc.is_zero()) continue;
        RatFunc a(pa, pb), b(pb, pc), c(pc, C(1));
        CHECK(a.add(b).add(c) == a.add(b.add(c)));
        CHECK(a.mul(b).mul(c) == a.mul(b.mul(c)));
        CHECK(a.mul(b.add(c)) == a.mul(b).add(a.mul(c)));
        if (!a.is_zero()) CHECK(a.mul(a.inverse()).is_one());
    }
}
