#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "prodcanon/intfactor.hpp"
#include "prodcanon/lattice.hpp"
#include "prodcanon/rational.hpp"

using namespace prodcanon;

namespace {

Rational rand_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-50, 50);
    std::uniform_int_distribution<long> den(1, 20);
    return Rational(num(rng), den(rng));
}

// Brute-force kernel membership over a small box; the oracle for
// lattice_kernel spans.
std::vector<std::vector<Integer>> box_kernel(const IntMatrix& m, long bound) {
    std::vector<std::vector<Integer>> found;
    std::vector<long> v(m.cols(), -bound);
    while (true) {
        std::vector<Integer> iv(v.begin(), v.end());
        bool zero = true;
        for (const auto& x : m.mul(iv))
            if (x != 0) zero = false;
        bool trivial = true;
        for (long x : v)
            if (x != 0) trivial = false;
        if (zero && !trivial) found.push_back(iv);
        std::size_t i = 0;
        for (; i < v.size(); ++i) {
            if (v[i] < bound) {
                ++v[i];
                break;
            }
            v[i] = -bound;
        }
        if (i == v.size()) break;
    }
    return found;
}

}  // namespace

TEST_CASE("rational basics and parse") {
    CHECK(Rational(6, 4) == Rational(3, 2));
    CHECK(Rational(-6, -4) == Rational(3, 2));
    CHECK(Rational(6, -4).den() == 2);
    CHECK(Rational::parse("-13/4") == Rational(-13, 4));
    CHECK(Rational::parse("7") == Rational(7));
    CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
    CHECK_THROWS_AS(Rational(1, 0), Error);
}

TEST_CASE("rational field axioms on random samples") {
    std::mt19937_64 rng(7);
    for (int it = 0; it < 300; ++it) {
        Rational a = rand_rational(rng), b = rand_rational(rng), c = rand_rational(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + (-a) == Rational(0));
        if (!a.is_zero()) CHECK(a * a.inverse() == Rational(1));
    }
}

TEST_CASE("factor_rational on the pinned examples") {
    // 784 = 2^4 * 7^2
    PrimeExponents pe = factor_rational(Rational(784));
    CHECK(pe.sign == 1);
    CHECK(pe.exps == std::map<Integer, Rational>{{Integer(2), Rational(4)}, {Integer(7), Rational(2)}});
    CHECK(pe.assemble() == Rational(784));

    pe = factor_rational(Rational(1));
    CHECK(pe.sign == 1);
    CHECK(pe.exps.empty());

    pe = factor_rational(Rational(-13, 4));
    CHECK(pe.sign == -1);
    CHECK(pe.exps == std::map<Integer, Rational>{{Integer(2), Rational(-2)}, {Integer(13), Rational(1)}});
    CHECK(pe.assemble() == Rational(-13, 4));

    CHECK_THROWS_AS(factor_rational(Rational(0)), Error);
}

TEST_CASE("factor_rational round trip on random inputs") {
    std::mt19937_64 rng(11);
    for (int it = 0; it < 200; ++it) {
        Rational r = rand_rational(rng);
        if (r.is_zero()) continue;
        CHECK(factor_rational(r).assemble() == r);
    }
    // Beyond the sieve: force the Pollard path with a semiprime.
    Integer p("1000003"), q("1000033");
    auto f = factor_integer(p * q);
    CHECK(f == std::map<Integer, unsigned long>{{p, 1}, {q, 1}});
}

TEST_CASE("integer_root") {
    CHECK(integer_root(Rational(169), 2) == Rational(13));
    CHECK(!integer_root(Rational(2), 2).has_value());
    CHECK(integer_root(Rational(16807), 5) == Rational(7));
    CHECK(integer_root(Rational(-8), 3) == Rational(-2));
    CHECK(!integer_root(Rational(-4), 2).has_value());
    CHECK(integer_root(Rational(9, 4), 2) == Rational(3, 2));
}

TEST_CASE("lattice_kernel pinned examples") {
    // [2 -1] -> basis {(1, 2)}
    IntMatrix m = IntMatrix::from_rows({{Integer(2), Integer(-1)}});
    auto b = lattice_kernel(m);
    REQUIRE(b.size() == 1);
    CHECK(b[0] == std::vector<Integer>{Integer(1), Integer(2)});

    // identity -> empty basis
    IntMatrix id = IntMatrix::from_rows({{Integer(1), Integer(0)}, {Integer(0), Integer(1)}});
    CHECK(lattice_kernel(id).empty());

    // [0] -> {(1)}
    IntMatrix z = IntMatrix::from_rows({{Integer(0)}});
    auto bz = lattice_kernel(z);
    REQUIRE(bz.size() == 1);
    CHECK(bz[0] == std::vector<Integer>{Integer(1)});
}

TEST_CASE("lattice_kernel is a Z-basis, not just a Q-basis") {
    // 2x + y + z = 0 has (-1, 1, 1) in the kernel; denominator-cleared
    // Q-elimination alone misses it.
    IntMatrix m = IntMatrix::from_rows({{Integer(2), Integer(1), Integer(1)}});
    auto basis = lattice_kernel(m);
    REQUIRE(basis.size() == 2);
    std::vector<Integer> v{Integer(-1), Integer(1), Integer(1)};
    CHECK(in_span(basis, v).has_value());
}

TEST_CASE("lattice_kernel against brute-force box oracle") {
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<long> dim(1, 4);
    std::uniform_int_distribution<long> ent(-4, 4);
    for (int it = 0; it < 150; ++it) {
        std::size_t r = dim(rng), c = dim(rng);
        IntMatrix m(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) m.at(i, j) = Integer(ent(rng));
        auto basis = lattice_kernel(m);
        for (const auto& v : basis) {
            for (const auto& x : m.mul(v)) CHECK(x == 0);
        }
        for (const auto& v : box_kernel(m, 3)) {
            CHECK(in_span(basis, v).has_value());
        }
        // Random integer combinations stay in the kernel.
        for (int t = 0; t < 5 && !basis.empty(); ++t) {
            std::vector<Integer> w(c, Integer(0));
            for (const auto& v : basis) {
                long coef = ent(rng);
                for (std::size_t j = 0; j < c; ++j) w[j] += coef * v[j];
            }
            for (const auto& x : m.mul(w)) CHECK(x == 0);
        }
    }
}
