#ifndef PRODCANON_INTFACTOR_HPP
#define PRODCANON_INTFACTOR_HPP

#include <map>
#include <optional>
#include <vector>

#include "prodcanon/rational.hpp"

namespace prodcanon {

/// sign * prod p^{e_p} with all keys prime and no zero exponents.
/// Exponents are rational so the same container can carry radicals
/// (e.g. 13^{1/2}); factor_rational always returns integer exponents.
struct PrimeExponents {
    int sign = 1;  // +1 or -1
    std::map<Integer, Rational> exps;

    bool operator==(const PrimeExponents& o) const {
        return sign == o.sign && exps == o.exps;
    }

    /// Multiplies the represented value back together; all exponents must be
    /// integers.
    Rational assemble() const;
};

/// Prime factorization of |n|, n != 0. Trial division over a sieve up to
/// 10^6, Pollard rho beyond.
std::map<Integer, unsigned long> factor_integer(const Integer& n);

/// Exact prime-exponent form of a nonzero rational.
PrimeExponents factor_rational(const Rational& r);

/// Rational d-th root if one exists (d >= 1).
std::optional<Rational> integer_root(const Rational& r, unsigned long d);

bool is_prime(const Integer& n);

}  // namespace prodcanon

#endif
