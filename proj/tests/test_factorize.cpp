#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "prodcanon/polyfactor.hpp"

using namespace prodcanon;

namespace {

const VarLayout kLay{1, 2};

MultiPoly X() { return MultiPoly::var(kLay, kLay.x()); }
MultiPoly T(unsigned i) { return MultiPoly::var(kLay, kLay.t(i)); }
MultiPoly K() { return MultiPoly::var(kLay, kLay.kappa(0)); }
MultiPoly C(long n) { return MultiPoly::constant(kLay, Rational(n)); }

// Brute-force irreducibility for integer-primitive univariate f of degree <= 4:
// no factor of degree 1..deg/2 exists. Degree-1 candidates come from rational
// roots, degree-2 from integer (a, b) with b | f(0) and root-bound |a|.
bool brute_irreducible_univ(const MultiPoly& f, unsigned v) {
    long d = f.degree(v);
    REQUIRE(d >= 1);
    REQUIRE(d <= 4);
    std::vector<Integer> c(static_cast<std::size_t>(d) + 1);
    for (long k = 0; k <= d; ++k) {
        MultiPoly ck = f.coeff_of(v, static_cast<unsigned>(k));
        if (ck.is_zero()) continue;
        Rational r = ck.rational_value();
        REQUIRE(r.is_integer());
        c[static_cast<std::size_t>(k)] = r.num();
    }
    if (c[0] == 0) return d == 1;  // x divides
    if (d == 1) return true;       // linear is always irreducible
    auto divisors = [](const Integer& n) {
        std::vector<Integer> ds;
        Integer an = ::abs(n);
        for (Integer i(1); i * i <= an; ++i) {
            if (an % i == 0) {
                ds.push_back(i);
                ds.push_back(-i);
                ds.push_back(an / i);
                ds.push_back(-(an / i));
            }
        }
        return ds;
    };
    // degree-1 factors: rational roots p/q, p | c0, q | cd
    for (const auto& p : divisors(c[0])) {
        for (const auto& q : divisors(c.back())) {
            if (q <= 0) continue;
            Rational root(p, q);
            Rational val(0);
            for (long k = d; k >= 0; --k) val = val * root + Rational(c[static_cast<std::size_t>(k)]);
            if (val.is_zero()) return false;
        }
    }
    if (d < 4) return true;
    // quadratic factors e*v^2 + a*v + b of a quartic: root bound M on |roots|
    // implies |a/e| <= 2M, |b/e| <= M^2; enumerate integer candidates with
    // e | c4, b | c0.
    Rational M(1);
    for (long k = 0; k < d; ++k) {
        Rational q = Rational(c[static_cast<std::size_t>(k)]) / Rational(c.back());
        Rational cand = q.abs() + Rational(1);
        if (cand > M) M = cand;
    }
    long Ml = M.num().get_si() / std::max<long>(1, M.den().get_si()) + 1;
    for (const auto& e : divisors(c.back())) {
        if (e <= 0) continue;
        for (const auto& b : divisors(c[0])) {
            for (long a = -2 * Ml * e.get_si(); a <= 2 * Ml * e.get_si(); ++a) {
                MultiPoly cand = MultiPoly::var(kLay, v, 2)
                                     .mul_scalar(Rational(e))
                                     .add(MultiPoly::var(kLay, v).mul_scalar(Rational(a)))
                                     .add(MultiPoly::constant(kLay, Rational(b)));
                if (f.divide(cand).has_value()) return false;
            }
        }
    }
    return true;
}

}  // namespace

TEST_CASE("factorize pinned multivariate example") {
    // 169*(x t1 t2 + t2 + x t1 + 1) = 169 * (x t1 + 1) * (t2 + 1)
    MultiPoly p = X().mul(T(0)).mul(T(1)).add(T(1)).add(X().mul(T(0))).add(C(1)).mul_scalar(
        Rational(169));
    auto f = factor_multipoly(p);
    CHECK(f.scale == Rational(169));
    CHECK(f.gamma.is_one());
    REQUIRE(f.factors.size() == 2);
    CHECK(f.factors[0].first == T(1).add(C(1)));
    CHECK(f.factors[1].first == X().mul(T(0)).add(C(1)));
}

TEST_CASE("factorize rational function with content") {
    // -784 (kappa+1)^2 x / (13 sqrt(-13) (i+sqrt 3)^4 kappa (x+2)^2)
    CycloRadical s13n = CycloRadical::radical_of(Rational(-13), 2);
    CycloRadical ipr3 = CycloRadical::from_rational(Rational(2)).mul(CycloRadical::root_of_unity(12, 1));
    CycloRadical den_gamma = CycloRadical::from_rational(Rational(13)).mul(s13n).mul(ipr3.pow(4));

    MultiPoly num = X().mul(K().add(C(1)).pow(2)).mul_scalar(Rational(-784));
    MultiPoly den = K().mul(X().add(C(2)).pow(2)).mul_gamma(den_gamma);
    RatFunc h(num, den);

    auto ff = factorize(h);
    // content gamma: -784 / (13 sqrt(-13) (i+sqrt3)^4) = zeta_12^11 * 7^2 * 13^(-3/2)
    CycloRadical expect = CycloRadical::root_of_unity(12, 11)
                              .mul(CycloRadical::prime_power(Integer(7), Rational(2)))
                              .mul(CycloRadical::prime_power(Integer(13), Rational(-3, 2)));
    CHECK(ff.gamma == expect);
    CHECK(ff.param_content == RatFunc(K().add(C(1)).pow(2), K()));
    REQUIRE(ff.factors.size() == 2);
    CHECK(ff.factors[0] == std::pair<MultiPoly, long>(X(), 1));
    CHECK(ff.factors[1] == std::pair<MultiPoly, long>(X().add(C(2)), -2));
    CHECK(ff.assemble() == h);
}

TEST_CASE("factorize unity") {
    RatFunc one = RatFunc::constant(kLay, Rational(1));
    auto ff = factorize(one);
    CHECK(ff.gamma.is_one());
    CHECK(ff.param_content.is_one());
    CHECK(ff.factors.empty());
}

TEST_CASE("univariate factorization with repeated and high-degree factors") {
    // (x^2+1)^2 (x-3) (2x+1)
    MultiPoly p = X().pow(2).add(C(1)).pow(2).mul(X().sub(C(3))).mul(
        X().mul_scalar(Rational(2)).add(C(1)));
    auto f = factor_multipoly(p);
    REQUIRE(f.factors.size() == 3);
    bool saw_sq = false;
    for (const auto& [g, m] : f.factors) {
        if (g == X().pow(2).add(C(1))) {
            saw_sq = true;
            CHECK(m == 2);
        } else {
            CHECK(m == 1);
        }
    }
    CHECK(saw_sq);

    // irreducible quartic stays whole
    MultiPoly q = X().pow(4).add(X()).add(C(1));
    auto fq = factor_multipoly(q);
    CHECK(fq.factors.size() == 1);
    CHECK(fq.factors[0].second == 1);
}

TEST_CASE("factor round trip on random assemblies") {
    std::mt19937_64 rng(13);
    std::uniform_int_distribution<long> coef(-5, 5);
    std::uniform_int_distribution<int> pick(0, 4);
    for (int it = 0; it < 50; ++it) {
        // assemble from a pool of small factors across variables
        std::vector<MultiPoly> pool = {
            X().add(C(coef(rng))),
            X().pow(2).add(C(std::abs(coef(rng)) + 1)),
            T(0).mul(X()).add(C(1)),
            K().add(C(std::abs(coef(rng)) + 1)),
            T(1).add(K()),
        };
        MultiPoly h = C(coef(rng) == 0 ? 3 : coef(rng));
        for (int j = 0; j < 3; ++j) h = h.mul(pool[static_cast<std::size_t>(pick(rng))]);
        if (h.is_zero() || h.is_constant()) continue;
        auto f = factor_multipoly(h);
        MultiPoly back = MultiPoly::constant(kLay, f.scale).mul_gamma(f.gamma);
        for (const auto& [g, m] : f.factors) back = back.mul(g.pow(m));
        CHECK(back == h);
        for (const auto& [g, m] : f.factors) CHECK(is_irreducible(g));
    }
}

TEST_CASE("irreducibility agrees with brute force up to degree 4") {
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<long> coef(-6, 6);
    std::uniform_int_distribution<int> dd(1, 4);
    int checked = 0;
    for (int it = 0; it < 200 && checked < 120; ++it) {
        int d = dd(rng);
        MultiPoly p(kLay);
        for (int k = 0; k <= d; ++k) {
            long ck = (k == d) ? (std::abs(coef(rng)) + 1) : coef(rng);
            p = p.add(MultiPoly::var(kLay, kLay.x(), static_cast<unsigned>(k)).mul_scalar(Rational(ck)));
        }
        p = p.normalized().primitive;
        if (p.degree(kLay.x()) < 1) continue;
        ++checked;
        CHECK(is_irreducible(p) == brute_irreducible_univ(p, kLay.x()));
    }
    CHECK(checked >= 100);
}
