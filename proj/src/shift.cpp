#include "prodcanon/shift.hpp"

#include <algorithm>
#include <set>

#include "prodcanon/errors.hpp"
#include "prodcanon/polyfactor.hpp"

namespace prodcanon {

namespace {

long q_degree(const MultiPoly& p, unsigned i) {
    const VarLayout& lay = p.layout();
    long d = -1;
    for (const auto& [m, c] : p.terms()) d = std::max(d, static_cast<long>(m[lay.q(i)]));
    return d;
}

}  // namespace

std::pair<MultiPoly, MultiPoly> shift_poly(const MultiPoly& p, long k) {
    const VarLayout& lay = p.layout();
    MultiPoly den = MultiPoly::constant(lay, Rational(1));
    if (k == 0 || p.is_zero()) return {p, den};

    // x -> x + k
    MultiPoly xk = MultiPoly::var(lay, lay.x()).add(MultiPoly::constant(lay, Rational(k)));
    MultiPoly shifted = p.substitute(lay.x(), xk);

    // t_i -> q_i^k t_i; for k < 0 clear denominators with one q-monomial.
    std::vector<unsigned> maxd(lay.num_bases, 0);
    for (const auto& [m, c] : shifted.terms())
        for (unsigned i = 0; i < lay.num_bases; ++i) maxd[i] = std::max(maxd[i], m[lay.t(i)]);

    MultiPoly::TermMap out;
    unsigned ka = static_cast<unsigned>(k < 0 ? -k : k);
    for (const auto& [m, c] : shifted.terms()) {
        Monomial mm = m;
        for (unsigned i = 0; i < lay.num_bases; ++i) {
            unsigned d = m[lay.t(i)];
            mm[lay.q(i)] += ka * (k > 0 ? d : maxd[i] - d);
        }
        out[mm] = c;
    }
    Monomial dm(lay.nvars(), 0);
    if (k < 0)
        for (unsigned i = 0; i < lay.num_bases; ++i) dm[lay.q(i)] = ka * maxd[i];
    MultiPoly::TermMap dt;
    dt[dm] = Rational(1);
    return {MultiPoly::from_terms(lay, std::move(out), shifted.content()),
            MultiPoly::from_terms(lay, std::move(dt))};
}

RatFunc apply_shift(const RatFunc& f, long k) {
    auto [n1, d1] = shift_poly(f.num(), k);
    auto [n2, d2] = shift_poly(f.den(), k);
    return RatFunc(n1.mul(d2), n2.mul(d1));
}

std::optional<ShiftWitness> shift_equivalent(const MultiPoly& f, const MultiPoly& g) {
    const VarLayout& lay = f.layout();
    auto mf = f.main_var(), mg = g.main_var();
    if (!mf || !mg) fail(ErrorKind::LevelMismatch, "shift_equivalent: constant input");
    if (*mf != *mg)
        fail(ErrorKind::LevelMismatch, "shift_equivalent: factors at different tower levels");
    unsigned v = *mf;
    long d = f.degree(v);
    if (d != g.degree(v)) return std::nullopt;

    auto verify = [&](long k) -> std::optional<ShiftWitness> {
        auto [n, den] = shift_poly(f, k);
        MultiPoly lcn = n.leading_coeff(v);
        MultiPoly lcg = g.leading_coeff(v);
        if (n.mul(lcg) != g.mul(lcn)) return std::nullopt;
        return ShiftWitness{k, RatFunc(lcn, lcg.mul(den)), true};
    };

    if (v == lay.x()) {
        // x^(d-1) coefficients of u f(x+k) = g force k = (b/v' - a/u')/d.
        MultiPoly fa = f.coeff_of(v, static_cast<unsigned>(d));
        MultiPoly fb = f.coeff_of(v, static_cast<unsigned>(d - 1));
        MultiPoly ga = g.coeff_of(v, static_cast<unsigned>(d));
        MultiPoly gb = g.coeff_of(v, static_cast<unsigned>(d - 1));
        MultiPoly r = gb.mul(fa).sub(fb.mul(ga));
        MultiPoly s = fa.mul(ga).mul_scalar(Rational(d));
        if (r.is_zero()) return verify(0);
        auto q = r.divide(s);
        if (!q || !q->is_rational_constant()) return std::nullopt;
        Rational kr = q->rational_value();
        if (!kr.is_integer() || !kr.num().fits_slong_p()) return std::nullopt;
        return verify(kr.num().get_si());
    }

    // t-level: supports must agree; the q_i-degrees of one coefficient pair
    // pin k uniquely.
    unsigned qi = *lay.level_of(v) - 1;
    std::set<unsigned> sf, sg;
    for (const auto& [m, c] : f.terms()) sf.insert(m[v]);
    for (const auto& [m, c] : g.terms()) sg.insert(m[v]);
    if (sf != sg) return std::nullopt;

    if (sf.size() == 1) {
        MultiPoly tvar = MultiPoly::var(lay, v);
        if (f == tvar && g == tvar) {
            // Pi-generator pair: every k works (Lemma on uniqueness fails here).
            return ShiftWitness{0, RatFunc::constant(lay, Rational(1)), false};
        }
        return verify(0);
    }

    auto it = sf.rbegin();
    unsigned j0 = *it;
    ++it;
    unsigned j1 = *it;
    long lhs = q_degree(g.coeff_of(v, j1), qi) - q_degree(g.coeff_of(v, j0), qi) -
               q_degree(f.coeff_of(v, j1), qi) + q_degree(f.coeff_of(v, j0), qi);
    long denom = static_cast<long>(j1) - static_cast<long>(j0);
    if (lhs % denom != 0) return std::nullopt;
    return verify(lhs / denom);
}

bool shp(const MultiPoly& f, const MultiPoly& g) {
    if (f.is_zero() || g.is_zero()) fail(ErrorKind::ZeroInput, "shp of zero polynomial");
    if (f.is_constant() || g.is_constant()) return true;
    auto ff = factor_multipoly(f);
    auto fg = factor_multipoly(g);
    for (const auto& [pf, mf] : ff.factors) {
        if (pf.is_param_only()) continue;
        for (const auto& [pg, mg] : fg.factors) {
            if (pg.is_param_only()) continue;
            if (pf.main_var() != pg.main_var()) continue;
            if (shift_equivalent(pf, pg).has_value()) return false;
        }
    }
    return true;
}

RatFunc cofactor(const MultiPoly& f, const MultiPoly& g, const ShiftWitness& w) {
    const VarLayout& lay = f.layout();
    {
        auto [n, den] = shift_poly(f, w.k);
        MultiPoly lcn = n.leading_coeff(*f.main_var());
        MultiPoly lcg = g.leading_coeff(*g.main_var());
        if (n.mul(lcg) != g.mul(lcn)) fail(ErrorKind::InvalidWitness, "cofactor: bad witness");
    }
    unsigned v = *f.main_var();
    bool x_level = (v == lay.x());
    unsigned m = static_cast<unsigned>(f.degree(v));
    // prod sigma^i(f / t^m); the t^m twist is dropped at the x-level where
    // the leading unit is forced to 1.
    RatFunc c = RatFunc::constant(lay, Rational(1));
    if (w.k >= 0) {
        RatFunc base = x_level ? RatFunc(f) : RatFunc(f, MultiPoly::var(lay, v, m));
        for (long i = 0; i < w.k; ++i) c = c.mul(apply_shift(base, i));
    } else {
        RatFunc base = x_level ? RatFunc(f).inverse() : RatFunc(MultiPoly::var(lay, v, m), f);
        for (long i = 1; i <= -w.k; ++i) c = c.mul(apply_shift(base, -i));
    }
    return c;
}

namespace {

// Nonnegative integers k with p(k) = 0 as an identity in the parameters;
// p involves x but no t variables.
std::vector<unsigned long> nonneg_integer_roots(const MultiPoly& p) {
    const VarLayout& lay = p.layout();
    std::vector<unsigned long> roots;
    if (!p.depends_on(lay.x())) return roots;

    for (long offset = 0; offset < 64; ++offset) {
        std::vector<Rational> kv, qv;
        for (unsigned i = 0; i < lay.num_params; ++i)
            kv.push_back(Rational(2 + offset + static_cast<long>(i)));
        for (unsigned i = 0; i < lay.num_bases; ++i)
            qv.push_back(Rational(3 + offset + static_cast<long>(lay.num_params + i)));

        long d = p.degree(lay.x());
        std::vector<Rational> co(static_cast<std::size_t>(d) + 1, Rational(0));
        for (long j = 0; j <= d; ++j) {
            MultiPoly cj = p.coeff_of(lay.x(), static_cast<unsigned>(j));
            if (cj.is_zero()) continue;
            cj = MultiPoly::from_terms(lay, cj.terms());  // drop Gamma content
            co[static_cast<std::size_t>(j)] = cj.eval_params(kv, qv);
        }
        if (std::all_of(co.begin(), co.end(), [](const Rational& r) { return r.is_zero(); }))
            continue;  // unlucky specialization, retry

        // Any integer root of p is a root of the specialization and hence
        // divides its trailing coefficient (after clearing denominators).
        std::size_t low = 0;
        while (co[low].is_zero()) ++low;
        Integer lden(1);
        for (const auto& c : co) lden = int_lcm(lden, c.den());
        Integer c0 = ::abs(co[low].num() * (lden / co[low].den()));
        std::set<unsigned long> cand{0};
        for (Integer i(1); i * i <= c0; ++i) {
            if (c0 % i == 0) {
                if (i.fits_ulong_p()) cand.insert(i.get_ui());
                Integer j = c0 / i;
                if (j.fits_ulong_p()) cand.insert(j.get_ui());
            }
        }
        for (unsigned long k : cand)
            if (p.eval_at(k).is_zero()) roots.push_back(k);
        std::sort(roots.begin(), roots.end());
        return roots;
    }
    fail(ErrorKind::DomainError, "no usable parameter specialization found");
}

}  // namespace

unsigned long z_bound(const MultiPoly& p) {
    if (p.is_zero()) fail(ErrorKind::ZeroInput, "z_bound(0)");
    const VarLayout& lay = p.layout();

    bool has_t = false;
    for (unsigned i = 0; i < lay.num_bases; ++i)
        if (p.depends_on(lay.t(i))) has_t = true;

    long best = -1;
    if (!has_t) {
        if (!p.depends_on(lay.x())) return 0;  // nonzero constant in k
        for (unsigned long r : nonneg_integer_roots(p)) best = std::max(best, static_cast<long>(r));
        return static_cast<unsigned long>(best + 1);
    }

    // Mixed case: group terms by their (q, t) exponent pairs; with q
    // transcendental, p(k, q^k) = 0 needs every group to vanish at k unless
    // two groups collide at that k.
    using Key = std::pair<std::vector<unsigned>, std::vector<unsigned>>;
    std::map<Key, MultiPoly::TermMap> groups;
    for (const auto& [m, c] : p.terms()) {
        std::vector<unsigned> qe(lay.num_bases), te(lay.num_bases);
        for (unsigned i = 0; i < lay.num_bases; ++i) {
            qe[i] = m[lay.q(i)];
            te[i] = m[lay.t(i)];
        }
        Monomial mm = m;
        for (unsigned i = 0; i < lay.num_bases; ++i) {
            mm[lay.q(i)] = 0;
            mm[lay.t(i)] = 0;
        }
        groups[{qe, te}][mm] = c;
    }

    std::optional<std::vector<unsigned long>> common;
    for (const auto& [key, tm] : groups) {
        std::vector<unsigned long> rs;
        MultiPoly cj = MultiPoly::from_terms(lay, MultiPoly::TermMap(tm));
        if (cj.depends_on(lay.x())) rs = nonneg_integer_roots(cj);
        if (!common) {
            common = rs;
        } else {
            std::vector<unsigned long> inter;
            std::set_intersection(common->begin(), common->end(), rs.begin(), rs.end(),
                                  std::back_inserter(inter));
            common = inter;
        }
        if (common->empty()) break;
    }
    if (common)
        for (unsigned long r : *common) best = std::max(best, static_cast<long>(r));

    std::set<unsigned long> collisions;
    std::vector<Key> keys;
    keys.reserve(groups.size());
    for (const auto& [key, tm] : groups) keys.push_back(key);
    for (std::size_t a = 0; a < keys.size(); ++a) {
        for (std::size_t b = a + 1; b < keys.size(); ++b) {
            std::optional<long> k;
            bool consistent = true;
            for (unsigned i = 0; i < lay.num_bases && consistent; ++i) {
                long db = static_cast<long>(keys[a].first[i]) - static_cast<long>(keys[b].first[i]);
                long dd = static_cast<long>(keys[b].second[i]) - static_cast<long>(keys[a].second[i]);
                if (dd == 0) {
                    if (db != 0) consistent = false;
                } else if (db % dd != 0) {
                    consistent = false;
                } else if (k && *k != db / dd) {
                    consistent = false;
                } else {
                    k = db / dd;
                }
            }
            if (consistent && k && *k >= 0) collisions.insert(static_cast<unsigned long>(*k));
        }
    }
    for (unsigned long k : collisions)
        if (p.eval_at(k).is_zero()) best = std::max(best, static_cast<long>(k));

    return static_cast<unsigned long>(best + 1);
}

unsigned long z_bound_ratfunc(const RatFunc& f) {
    return std::max(z_bound(f.num()), z_bound(f.den()));
}

}  // namespace prodcanon
