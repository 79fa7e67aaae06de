#ifndef PRODCANON_SHIFT_HPP
#define PRODCANON_SHIFT_HPP

#include <optional>

#include "prodcanon/poly.hpp"

namespace prodcanon {

/// The tower spec is the variable layout: x carries sigma(x) = x + 1 and each
/// t_i carries sigma(t_i) = q_i t_i; kappa and q are constants.
using TowerSpec = VarLayout;

/// Witness of shift equivalence: sigma^k(f) = unit * g with the unit free of
/// the factors' main variable. `unique` is false only for the pure generator
/// pair f = g = t_i, where every k works.
struct ShiftWitness {
    long k = 0;
    RatFunc unit;
    bool unique = true;
};

/// sigma^k applied to a polynomial: x -> x + k, t_i -> q_i^k t_i. The result
/// is num / den with den a q-monomial (nontrivial only for k < 0).
std::pair<MultiPoly, MultiPoly> shift_poly(const MultiPoly& p, long k);

RatFunc apply_shift(const RatFunc& f, long k);

/// Decides f ~_sigma g for normalized irreducible polynomials with the same
/// main variable. LevelMismatch if the main variables differ.
std::optional<ShiftWitness> shift_equivalent(const MultiPoly& f, const MultiPoly& g);

/// Shift co-primality: gcd(f, sigma^k(g)) = 1 for all integers k. Reducible
/// inputs are compared factor by factor.
bool shp(const MultiPoly& f, const MultiPoly& g);

/// Cofactor c with g = (sigma(c)/c) * f * (element free of the main
/// variable), built from the witness product formula. InvalidWitness if the
/// witness does not check out.
RatFunc cofactor(const MultiPoly& f, const MultiPoly& g, const ShiftWitness& w);

/// Z(p) = 1 + max{ k in N : p(k, q^k) = 0 }, 0 when the set is empty.
/// Exact for transcendental q: a zero at k requires either all grouped
/// coefficients to vanish at k or a q-monomial collision at k.
unsigned long z_bound(const MultiPoly& p);

/// max(Z(num), Z(den)).
unsigned long z_bound_ratfunc(const RatFunc& f);

}  // namespace prodcanon

#endif
