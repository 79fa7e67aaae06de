#ifndef PRODCANON_CYCLORADICAL_HPP
#define PRODCANON_CYCLORADICAL_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "prodcanon/intfactor.hpp"
#include "prodcanon/rational.hpp"

namespace prodcanon {

/// Element of the multiplicative group
///   Gamma = { zeta_N^m * prod p^{e_p} : p prime, e_p rational }:
/// a root of unity times a positive real radical of a rational. Never zero.
///
/// Normal form: gcd(m, N) = 1 (with m = 0 forcing N = 1), no zero exponents
/// in the radical map. Two values are equal iff their fields are equal.
class CycloRadical {
public:
    CycloRadical() = default;  // the unit 1

    static CycloRadical one() { return CycloRadical(); }
    static CycloRadical from_rational(const Rational& r);
    /// zeta_N^m
    static CycloRadical root_of_unity(unsigned long N, long m);
    /// p^(num/den) for prime p
    static CycloRadical prime_power(const Integer& p, const Rational& e);
    /// |r|^(1/d) times the root of unity carrying sign(r) (d-th root of the
    /// sign: only d = 1, 2 supported for negative r; sqrt(-r) maps to
    /// zeta_4 * |r|^{1/2}).
    static CycloRadical radical_of(const Rational& r, unsigned long d);

    unsigned long root_order() const { return N_; }
    unsigned long root_exp() const { return m_; }
    const std::map<Integer, Rational>& radical() const { return rad_; }

    bool is_one() const { return N_ == 1 && rad_.empty(); }
    bool is_root_of_unity() const { return rad_.empty(); }
    bool is_positive_radical() const { return N_ == 1; }
    /// Multiplicative order of the root-of-unity part (1 if none).
    unsigned long unit_order() const { return N_; }
    bool is_rational() const;
    /// The represented value if it is rational, else nullopt.
    std::optional<Rational> as_rational() const;

    CycloRadical mul(const CycloRadical& o) const;
    CycloRadical div(const CycloRadical& o) const;
    CycloRadical pow(long k) const;
    CycloRadical inverse() const { return pow(-1); }

    /// (unit, norm): unit a pure root of unity, norm a pure positive radical,
    /// value = unit * norm.
    std::pair<CycloRadical, CycloRadical> split() const;

    /// Rewrites the value as q * c with q rational and c normalized so that
    /// every radical exponent lies in (0, 1) and the root-of-unity part has
    /// order > 2. Returns (q, c).
    std::pair<Rational, CycloRadical> extract_rational() const;

    bool operator==(const CycloRadical& o) const { return N_ == o.N_ && m_ == o.m_ && rad_ == o.rad_; }
    bool operator!=(const CycloRadical& o) const { return !(*this == o); }
    bool operator<(const CycloRadical& o) const;

    /// Text in the constant grammar; parse(str()) reproduces the value.
    std::string str() const;

private:
    unsigned long N_ = 1;  // root order
    unsigned long m_ = 0;  // root exponent, 0 <= m < N, gcd(m, N) = 1
    std::map<Integer, Rational> rad_;

    void set_root(unsigned long N, long m);
};

struct ConstantDecomposition {
    CycloRadical zeta;                   // pure root of unity of order lambda
    unsigned long lambda = 1;            // its order
    std::vector<CycloRadical> alphas;    // pure positive radicals, independent
    struct PerInput {
        unsigned long mu = 0;            // in [0, lambda)
        std::vector<long> exps;          // over alphas
    };
    std::vector<PerInput> per_input;
};

struct OrbitModuleBasis {
    std::vector<std::vector<Integer>> vectors;
};

/// (unit, norm) split of a Gamma element.
std::pair<CycloRadical, CycloRadical> extract_root_of_unity(const CycloRadical& g);

/// Common root of unity zeta of order lcm of the input orders, with
/// zeta^{exps[i]} = units[i]. All inputs must be pure roots of unity.
std::pair<CycloRadical, std::vector<unsigned long>> common_root_of_unity(
    const std::vector<CycloRadical>& units);

/// Basis of all integer relations prod alphas[i]^{v_i} = 1.
OrbitModuleBasis solve_orbit(const std::vector<CycloRadical>& alphas);

/// Decomposition per the constant-field construction: zeta of order
/// lcm(unit orders) and prime radicals p^{1/d_p} with d_p the lcm of the
/// denominators of the p-exponents across the inputs.
ConstantDecomposition decompose_constants(const std::vector<CycloRadical>& gammas);

}  // namespace prodcanon

#endif
