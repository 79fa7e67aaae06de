#ifndef PRODCANON_POLYFACTOR_HPP
#define PRODCANON_POLYFACTOR_HPP

#include <utility>
#include <vector>

#include "prodcanon/poly.hpp"

namespace prodcanon {

/// content * prod factors[i].first ^ factors[i].second reproduces the input
/// exactly. Factors are normalized irreducible polynomials involving x or
/// t-variables; everything free of those goes into the content.
struct FactoredForm {
    CycloRadical gamma;      // constant-group content
    RatFunc param_content;   // rational function in kappa/q only
    std::vector<std::pair<MultiPoly, long>> factors;

    explicit FactoredForm(const VarLayout& lay) : param_content(RatFunc::constant(lay, Rational(1))) {}

    RatFunc assemble() const;
};

/// Irreducible factorization of a nonzero polynomial (any variables):
/// p = gamma * scale * prod f_i^{m_i} with f_i normalized (integer-primitive,
/// positive lead, content-free) irreducible.
struct PolyFactors {
    CycloRadical gamma;
    Rational scale;
    std::vector<std::pair<MultiPoly, unsigned>> factors;
};
PolyFactors factor_multipoly(const MultiPoly& p);

/// Content/primitive decomposition of a rational function with the primitive
/// part split into irreducible x/t-level factors.
FactoredForm factorize(const RatFunc& h);

bool is_irreducible(const MultiPoly& p);

}  // namespace prodcanon

#endif
