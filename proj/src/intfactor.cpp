#include "prodcanon/intfactor.hpp"

#include <algorithm>
#include <vector>

namespace prodcanon {

namespace {

constexpr unsigned long kSieveLimit = 1000000;

const std::vector<unsigned long>& small_primes() {
    static const std::vector<unsigned long> primes = [] {
        std::vector<bool> composite(kSieveLimit + 1, false);
        std::vector<unsigned long> ps;
        for (unsigned long i = 2; i <= kSieveLimit; ++i) {
            if (composite[i]) continue;
            ps.push_back(i);
            for (unsigned long j = i * i; j <= kSieveLimit; j += i) composite[j] = true;
        }
        return ps;
    }();
    return primes;
}

Integer pollard_rho(const Integer& n) {
    // n odd composite, not divisible by sieve primes.
    gmp_randclass rng(gmp_randinit_default);
    rng.seed(0xC0FFEEul);
    while (true) {
        Integer c = rng.get_z_range(n - 3) + 1;
        Integer x = rng.get_z_range(n - 2) + 2;
        Integer y = x, d = 1;
        while (d == 1) {
            x = (x * x + c) % n;
            y = (y * y + c) % n;
            y = (y * y + c) % n;
            d = int_gcd(x - y, n);
        }
        if (d != n) return d;
    }
}

void factor_rec(const Integer& n, std::map<Integer, unsigned long>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        out[n] += 1;
        return;
    }
    Integer d = pollard_rho(n);
    factor_rec(d, out);
    factor_rec(n / d, out);
}

}  // namespace

bool is_prime(const Integer& n) {
    if (n < 2) return false;
    return mpz_probab_prime_p(n.get_mpz_t(), 32) != 0;
}

std::map<Integer, unsigned long> factor_integer(const Integer& n) {
    if (n == 0) fail(ErrorKind::ZeroInput, "factor_integer(0)");
    Integer m = ::abs(n);
    std::map<Integer, unsigned long> out;
    for (unsigned long p : small_primes()) {
        if (m == 1) break;
        if (Integer(p) * p > m) break;
        while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            out[Integer(p)] += 1;
            m /= p;
        }
    }
    if (m != 1) factor_rec(m, out);
    return out;
}

PrimeExponents factor_rational(const Rational& r) {
    if (r.is_zero()) fail(ErrorKind::ZeroInput, "factor_rational(0)");
    PrimeExponents pe;
    pe.sign = r.sign();
    for (const auto& [p, e] : factor_integer(r.num())) pe.exps[p] += Rational(static_cast<long>(e));
    for (const auto& [p, e] : factor_integer(r.den())) pe.exps[p] -= Rational(static_cast<long>(e));
    std::erase_if(pe.exps, [](const auto& kv) { return kv.second.is_zero(); });
    return pe;
}

Rational PrimeExponents::assemble() const {
    Rational v(sign);
    for (const auto& [p, e] : exps) {
        if (!e.is_integer()) fail(ErrorKind::DomainError, "assemble: non-integer exponent");
        v *= Rational(p).pow(e.num().get_si());
    }
    return v;
}

std::optional<Rational> integer_root(const Rational& r, unsigned long d) {
    if (d == 0) fail(ErrorKind::DomainError, "integer_root: d must be >= 1");
    if (d == 1) return r;
    if (r.is_zero()) return Rational(0);
    if (r.sign() < 0 && d % 2 == 0) return std::nullopt;
    Integer n = ::abs(r.num()), den = r.den();
    Integer rn, rd;
    bool exact_n = mpz_root(rn.get_mpz_t(), n.get_mpz_t(), d) != 0;
    bool exact_d = mpz_root(rd.get_mpz_t(), den.get_mpz_t(), d) != 0;
    if (!exact_n || !exact_d) return std::nullopt;
    Rational root(rn, rd);
    return r.sign() < 0 ? -root : root;
}

}  // namespace prodcanon
