#ifndef PRODCANON_POLY_HPP
#define PRODCANON_POLY_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "prodcanon/cycloradical.hpp"
#include "prodcanon/rational.hpp"

namespace prodcanon {

/// Variable order of the tower: kappa_1..kappa_u, q_1..q_e, x, t_1..t_e.
/// x is the shift variable (sigma(x) = x + 1), t_i the base generators
/// (sigma(t_i) = q_i t_i); kappa and q are constants.
struct VarLayout {
    unsigned num_params = 0;  // u
    unsigned num_bases = 0;   // e

    unsigned nvars() const { return num_params + 2 * num_bases + 1; }
    unsigned kappa(unsigned i) const { return i; }
    unsigned q(unsigned i) const { return num_params + i; }
    unsigned x() const { return num_params + num_bases; }
    unsigned t(unsigned i) const { return num_params + num_bases + 1 + i; }

    bool is_q(unsigned v) const { return v >= num_params && v < num_params + num_bases; }
    bool is_t(unsigned v) const { return v > x(); }
    bool is_param(unsigned v) const { return v < x(); }
    /// tower level of a variable: t_i -> i+1, x -> 0, params -> none
    std::optional<unsigned> level_of(unsigned v) const {
        if (v == x()) return 0u;
        if (is_t(v)) return v - x();
        return std::nullopt;
    }

    std::string var_name(unsigned v) const;

    bool operator==(const VarLayout& o) const {
        return num_params == o.num_params && num_bases == o.num_bases;
    }
};

using Monomial = std::vector<unsigned>;

/// Reverse-position lexicographic order: the innermost tower variable (t_e)
/// is most significant, kappa_1 least.
struct MonoLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        for (std::size_t i = a.size(); i-- > 0;) {
            if (a[i] != b[i]) return a[i] < b[i];
        }
        return false;
    }
};

/// Polynomial in the tower variables over Q, carrying one multiplicative
/// constant from the group Gamma as content. All coefficients of one
/// polynomial live in Q * content; addition across different contents is a
/// MixedContent error. The zero polynomial has trivial content.
class MultiPoly {
public:
    using TermMap = std::map<Monomial, Rational, MonoLess>;

    explicit MultiPoly(const VarLayout& lay) : lay_(lay) {}
    MultiPoly(const VarLayout& lay, const Rational& c);

    static MultiPoly constant(const VarLayout& lay, const Rational& c) { return MultiPoly(lay, c); }
    /// Embeds a Gamma element: rational part into the coefficient, the
    /// irrational remainder into the content.
    static MultiPoly gamma_constant(const VarLayout& lay, const CycloRadical& g);
    static MultiPoly var(const VarLayout& lay, unsigned v, unsigned exp = 1);
    static MultiPoly from_terms(const VarLayout& lay, TermMap terms,
                                const CycloRadical& content = CycloRadical::one());

    const VarLayout& layout() const { return lay_; }
    const TermMap& terms() const { return terms_; }
    const CycloRadical& content() const { return content_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;  // no variables
    bool is_param_only() const;
    bool is_rational_constant() const;
    /// The value as a Rational (requires is_rational_constant()).
    Rational rational_value() const;
    /// The value as a Gamma element (requires a single constant term, nonzero).
    CycloRadical gamma_value() const;

    long degree(unsigned v) const;       // -1 for the zero polynomial
    unsigned total_degree() const;       // 0 for zero
    bool depends_on(unsigned v) const;
    /// Highest tower variable present: t_i -> level i, x -> 0, none -> nullopt.
    std::optional<unsigned> level() const;
    /// Variable index realizing level() (x or some t_i).
    std::optional<unsigned> main_var() const;

    MultiPoly operator-() const;
    MultiPoly add(const MultiPoly& o) const;
    MultiPoly sub(const MultiPoly& o) const { return add(-o); }
    MultiPoly mul(const MultiPoly& o) const;
    MultiPoly mul_scalar(const Rational& c) const;
    MultiPoly mul_gamma(const CycloRadical& g) const;
    MultiPoly pow(unsigned k) const;

    /// Exact division; nullopt if o does not divide this. Contents divide.
    std::optional<MultiPoly> divide(const MultiPoly& o) const;

    /// Coefficient of v^k, a polynomial free of v.
    MultiPoly coeff_of(unsigned v, unsigned k) const;
    /// Leading coefficient with respect to v.
    MultiPoly leading_coeff(unsigned v) const { return coeff_of(v, degree_nonneg(v)); }
    MultiPoly derivative(unsigned v) const;

    /// Strips content and rational scale: *this = gamma * scale * primitive
    /// with primitive integer-coefficient, coefficient gcd 1, positive
    /// leading coefficient in the term order.
    struct Normalized;
    Normalized normalized() const;

    /// Substitutes another polynomial for variable v (exact, expands powers).
    MultiPoly substitute(unsigned v, const MultiPoly& value) const;
    /// Substitutes x -> n, t_i -> q_i^n: a parameter-only polynomial.
    MultiPoly eval_at(unsigned long n) const;
    /// Substitutes rationals for all parameters; requires a parameter-only
    /// polynomial.
    Rational eval_params(const std::vector<Rational>& kappa_vals,
                         const std::vector<Rational>& q_vals) const;

    bool operator==(const MultiPoly& o) const {
        return content_ == o.content_ && terms_ == o.terms_;
    }
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }
    /// Deterministic total order (used for canonical representative choice).
    bool operator<(const MultiPoly& o) const;

    std::string str() const;  // debug form, x and t_i by name

private:
    unsigned degree_nonneg(unsigned v) const {
        long d = degree(v);
        return d < 0 ? 0 : static_cast<unsigned>(d);
    }
    void prune();

    VarLayout lay_;
    CycloRadical content_;
    TermMap terms_;
};

struct MultiPoly::Normalized {
    CycloRadical gamma;
    Rational scale;
    MultiPoly primitive;
};

/// Quotient of tower polynomials. Canonical form: gcd(num, den) = 1, the
/// denominator content-free, integer-primitive with positive leading
/// coefficient; the Gamma content rides on the numerator.
class RatFunc {
public:
    explicit RatFunc(const VarLayout& lay)
        : num_(MultiPoly(lay)), den_(MultiPoly::constant(lay, Rational(1))) {}
    RatFunc(MultiPoly num, MultiPoly den);
    explicit RatFunc(const MultiPoly& p) : RatFunc(p, MultiPoly::constant(p.layout(), Rational(1))) {}

    static RatFunc constant(const VarLayout& lay, const Rational& c) {
        return RatFunc(MultiPoly::constant(lay, c));
    }

    const MultiPoly& num() const { return num_; }
    const MultiPoly& den() const { return den_; }
    const VarLayout& layout() const { return num_.layout(); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const;
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    bool is_param_only() const { return num_.is_param_only() && den_.is_param_only(); }

    RatFunc operator-() const;
    RatFunc add(const RatFunc& o) const;
    RatFunc sub(const RatFunc& o) const { return add(-o); }
    RatFunc mul(const RatFunc& o) const;
    RatFunc div(const RatFunc& o) const;
    RatFunc inverse() const;
    RatFunc pow(long k) const;

    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFunc& o) const { return !(*this == o); }
    bool operator<(const RatFunc& o) const {
        if (num_ < o.num_) return true;
        if (o.num_ < num_) return false;
        return den_ < o.den_;
    }

    std::string str() const;

private:
    MultiPoly num_, den_;
};

/// Monic gcd (integer-primitive, positive lead, trivial content) via
/// primitive-part pseudo-remainder recursion over the variable order.
/// gcd(f, 0) is the normalized f; gcd(0, 0) = 0.
MultiPoly gcd_poly(const MultiPoly& a, const MultiPoly& b);

/// Content of p with respect to variable v: gcd of the v-coefficients.
MultiPoly poly_content(const MultiPoly& p, unsigned v);

}  // namespace prodcanon

#endif
