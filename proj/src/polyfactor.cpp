#include "prodcanon/polyfactor.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>

#include "prodcanon/errors.hpp"
#include "prodcanon/intfactor.hpp"

namespace prodcanon {

namespace {

// ---- dense univariate polynomials over Z ------------------------------------

using ZPoly = std::vector<Integer>;  // coefficient of y^i at index i

void ztrim(ZPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

long zdeg(const ZPoly& f) { return static_cast<long>(f.size()) - 1; }

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly c(a.size() + b.size() - 1, Integer(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    return c;
}

ZPoly zderiv(const ZPoly& f) {
    ZPoly d;
    for (std::size_t i = 1; i < f.size(); ++i) d.push_back(f[i] * static_cast<long>(i));
    ztrim(d);
    return d;
}

Integer zcontent(const ZPoly& f) {
    Integer g(0);
    for (const auto& c : f) g = int_gcd(g, c);
    return g;
}

void zprimitive(ZPoly& f) {
    Integer g = zcontent(f);
    if (g == 0) return;
    if (f.back() < 0) g = -g;
    for (auto& c : f) c /= g;
}

// Exact division over Q, result must be integral; nullopt otherwise.
std::optional<ZPoly> zdivide(const ZPoly& a, const ZPoly& b) {
    if (b.empty()) fail(ErrorKind::ZeroInput, "zdivide by zero");
    ZPoly r = a, q;
    if (zdeg(a) < zdeg(b)) return a.empty() ? std::optional<ZPoly>(ZPoly{}) : std::nullopt;
    q.assign(a.size() - b.size() + 1, Integer(0));
    for (long i = zdeg(r); i >= zdeg(b); --i) {
        if (r.size() <= static_cast<std::size_t>(i) || r[i] == 0) continue;
        Integer c = r[i];
        if (!mpz_divisible_p(c.get_mpz_t(), b.back().get_mpz_t())) return std::nullopt;
        c /= b.back();
        q[i - zdeg(b)] = c;
        for (long j = 0; j <= zdeg(b); ++j) r[i - zdeg(b) + j] -= c * b[j];
    }
    ztrim(r);
    if (!r.empty()) return std::nullopt;
    return q;
}

// Primitive gcd over Z[y] via pseudo-remainders.
ZPoly zgcd(ZPoly a, ZPoly b) {
    ztrim(a);
    ztrim(b);
    zprimitive(a);
    zprimitive(b);
    if (a.empty()) return b;
    if (b.empty()) return a;
    if (zdeg(a) < zdeg(b)) std::swap(a, b);
    while (!b.empty()) {
        // pseudo remainder of a by b
        ZPoly r = a;
        long db = zdeg(b);
        while (!r.empty() && zdeg(r) >= db) {
            long dr = zdeg(r);
            Integer lr = r.back(), lb = b.back();
            ZPoly rn(std::max(r.size(), b.size() + static_cast<std::size_t>(dr - db)), Integer(0));
            for (std::size_t i = 0; i < r.size(); ++i) rn[i] = r[i] * lb;
            for (long j = 0; j <= db; ++j) rn[dr - db + j] -= lr * b[j];
            r = rn;
            ztrim(r);
        }
        a = b;
        b = r;
        zprimitive(b);
    }
    zprimitive(a);
    return a;
}

// ---- arithmetic mod m (m a word-size or big modulus) -------------------------

using MPoly = std::vector<Integer>;  // mod-m coefficients in [0, m)

Integer imod(const Integer& a, const Integer& m) {
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

void mtrim(MPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

MPoly mreduce(const ZPoly& f, const Integer& m) {
    MPoly g(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) g[i] = imod(f[i], m);
    mtrim(g);
    return g;
}

MPoly madd(const MPoly& a, const MPoly& b, const Integer& m) {
    MPoly c(std::max(a.size(), b.size()), Integer(0));
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) c[i] = imod(c[i] + b[i], m);
    mtrim(c);
    return c;
}

MPoly msub(const MPoly& a, const MPoly& b, const Integer& m) {
    MPoly c(std::max(a.size(), b.size()), Integer(0));
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) c[i] = imod(c[i] - b[i], m);
    mtrim(c);
    return c;
}

MPoly mmul(const MPoly& a, const MPoly& b, const Integer& m) {
    if (a.empty() || b.empty()) return {};
    MPoly c(a.size() + b.size() - 1, Integer(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    }
    for (auto& x : c) x = imod(x, m);
    mtrim(c);
    return c;
}

Integer minv(const Integer& a, const Integer& m) {
    Integer r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
        fail(ErrorKind::DomainError, "modular inverse does not exist");
    return r;
}

// divrem with b monic-leading-invertible mod m
std::pair<MPoly, MPoly> mdivrem(const MPoly& a, const MPoly& b, const Integer& m) {
    MPoly r = a, q;
    if (b.empty()) fail(ErrorKind::ZeroInput, "mdivrem by zero");
    Integer li = minv(b.back(), m);
    if (zdeg(r) < zdeg(b)) return {MPoly{}, r};
    q.assign(r.size() - b.size() + 1, Integer(0));
    for (long i = static_cast<long>(r.size()) - 1; i >= zdeg(b); --i) {
        Integer c = imod(r[i] * li, m);
        if (c == 0) continue;
        q[i - zdeg(b)] = c;
        for (long j = 0; j <= zdeg(b); ++j) r[i - zdeg(b) + j] = imod(r[i - zdeg(b) + j] - c * b[j], m);
    }
    mtrim(r);
    mtrim(q);
    return {q, r};
}

MPoly mmod(const MPoly& a, const MPoly& b, const Integer& m) { return mdivrem(a, b, m).second; }

MPoly mgcd(MPoly a, MPoly b, const Integer& p) {
    while (!b.empty()) {
        MPoly r = mmod(a, b, p);
        a = b;
        b = r;
    }
    if (!a.empty()) {
        Integer li = minv(a.back(), p);
        for (auto& c : a) c = imod(c * li, p);
    }
    return a;
}

MPoly mpowmod(MPoly base, Integer e, const MPoly& f, const Integer& p) {
    MPoly r{Integer(1)};
    base = mmod(base, f, p);
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) r = mmod(mmul(r, base, p), f, p);
        e >>= 1;
        if (e > 0) base = mmod(mmul(base, base, p), f, p);
    }
    return r;
}

// extended gcd: s a + t b = 1 mod p (a, b coprime mod p)
void mbezout(const MPoly& a, const MPoly& b, const Integer& p, MPoly& s, MPoly& t) {
    MPoly r0 = a, r1 = b;
    MPoly s0{Integer(1)}, s1{}, t0{}, t1{Integer(1)};
    while (!r1.empty()) {
        auto [q, r2] = mdivrem(r0, r1, p);
        MPoly s2 = msub(s0, mmul(q, s1, p), p);
        MPoly t2 = msub(t0, mmul(q, t1, p), p);
        r0 = r1;
        r1 = r2;
        s0 = s1;
        s1 = s2;
        t0 = t1;
        t1 = t2;
    }
    if (zdeg(r0) != 0) fail(ErrorKind::DomainError, "bezout: inputs not coprime");
    Integer li = minv(r0[0], p);
    s = s0;
    t = t0;
    for (auto& c : s) c = imod(c * li, p);
    for (auto& c : t) c = imod(c * li, p);
}

// ---- Cantor-Zassenhaus factorization mod an odd prime ------------------------

void equal_degree_split(const MPoly& f, long d, const Integer& p, std::mt19937_64& rng,
                        std::vector<MPoly>& out) {
    if (zdeg(f) == d) {
        out.push_back(f);
        return;
    }
    Integer pd;
    mpz_pow_ui(pd.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(d));
    Integer e = (pd - 1) / 2;
    while (true) {
        MPoly a(static_cast<std::size_t>(zdeg(f)), Integer(0));
        for (auto& c : a) c = Integer(static_cast<unsigned long>(rng() % 1000003)) % p;
        mtrim(a);
        if (a.empty()) continue;
        MPoly b = mpowmod(a, e, f, p);
        b = msub(b, MPoly{Integer(1)}, p);
        MPoly g = mgcd(f, b, p);
        if (g.empty() || zdeg(g) == 0 || zdeg(g) == zdeg(f)) continue;
        auto [h, r] = mdivrem(f, g, p);
        equal_degree_split(g, d, p, rng, out);
        equal_degree_split(h, d, p, rng, out);
        return;
    }
}

// f monic squarefree mod p; returns monic irreducible factors.
std::vector<MPoly> factor_mod_p(MPoly f, const Integer& p) {
    std::vector<MPoly> out;
    std::mt19937_64 rng(0x5EEDF00Dull + static_cast<unsigned long>(zdeg(f)));
    MPoly x{Integer(0), Integer(1)};
    MPoly h = x;
    long d = 0;
    while (zdeg(f) > 0) {
        ++d;
        if (2 * d > zdeg(f)) {
            out.push_back(f);
            break;
        }
        h = mpowmod(h, p, f, p);  // h = x^(p^d) mod f
        MPoly g = mgcd(f, msub(h, x, p), p);
        if (!g.empty() && zdeg(g) > 0) {
            equal_degree_split(g, d, p, rng, out);
            auto [q, r] = mdivrem(f, g, p);
            f = q;
            h = mmod(h, f, p);
        }
    }
    return out;
}

// ---- Hensel lifting ----------------------------------------------------------

// One Hensel step: f = g h mod m, s g + t h = 1 mod m, h monic ->
// same data mod m^2.
void hensel_step(const ZPoly& f, MPoly& g, MPoly& h, MPoly& s, MPoly& t, const Integer& m) {
    Integer m2 = m * m;
    MPoly fm = mreduce(f, m2);
    MPoly e = msub(fm, mmul(g, h, m2), m2);
    auto [q, r] = mdivrem(mmul(s, e, m2), h, m2);
    MPoly g1 = madd(g, madd(mmul(t, e, m2), mmul(q, g, m2), m2), m2);
    MPoly h1 = madd(h, r, m2);
    MPoly b = msub(madd(mmul(s, g1, m2), mmul(t, h1, m2), m2), MPoly{Integer(1)}, m2);
    auto [c, d] = mdivrem(mmul(s, b, m2), h1, m2);
    MPoly s1 = msub(s, d, m2);
    MPoly t1 = msub(t, madd(mmul(t, b, m2), mmul(c, g1, m2), m2), m2);
    g = g1;
    h = h1;
    s = s1;
    t = t1;
}

// Lifts the factorization f = lc * prod(factors) from mod p to mod p^(2^j) >= bound.
// factors are monic mod p and pairwise coprime; result entries are monic mod
// the returned modulus.
void hensel_lift_tree(const ZPoly& f, std::vector<MPoly>& factors, const Integer& p,
                      const Integer& bound, Integer& modulus) {
    // number of doubling steps
    Integer m = p;
    unsigned steps = 0;
    while (m < bound) {
        m = m * m;
        ++steps;
    }
    modulus = m;

    struct Node {
        ZPoly f;  // integer polynomial to factor at this node (lc arbitrary)
        std::size_t lo, hi;
    };

    std::function<void(const ZPoly&, std::size_t, std::size_t)> go =
        [&](const ZPoly& fnode, std::size_t lo, std::size_t hi) {
            if (hi - lo == 1) {
                // monicize mod modulus
                MPoly w = mreduce(fnode, modulus);
                Integer li = minv(w.back(), modulus);
                for (auto& c : w) c = imod(c * li, modulus);
                factors[lo] = w;
                return;
            }
            std::size_t mid = lo + (hi - lo) / 2;
            // initial split mod p: g0 = lc(fnode) * prod[lo,mid), h0 = prod[mid,hi) monic
            MPoly g0{imod(fnode.back(), p)};
            for (std::size_t i = lo; i < mid; ++i) g0 = mmul(g0, factors[i], p);
            MPoly h0{Integer(1)};
            for (std::size_t i = mid; i < hi; ++i) h0 = mmul(h0, factors[i], p);
            MPoly s, t;
            mbezout(g0, h0, p, s, t);
            Integer m_cur = p;
            MPoly g = g0, h = h0;
            for (unsigned k = 0; k < steps; ++k) {
                hensel_step(fnode, g, h, s, t, m_cur);
                m_cur = m_cur * m_cur;
            }
            // centered lift of g and h to Z
            auto center = [&](const MPoly& w) {
                ZPoly z(w.size());
                for (std::size_t i = 0; i < w.size(); ++i) {
                    Integer c = w[i];
                    if (c * 2 > m_cur) c -= m_cur;
                    z[i] = c;
                }
                ztrim(z);
                return z;
            };
            go(center(g), lo, mid);
            go(center(h), mid, hi);
        };
    go(f, 0, factors.size());
}

// ---- Zassenhaus --------------------------------------------------------------

Integer coeff_bound(const ZPoly& f) {
    // Landau-Mignotte style: (d+1) * 2^d * max|c| * |lc|
    Integer mx(0);
    for (const auto& c : f) {
        Integer a = ::abs(c);
        if (a > mx) mx = a;
    }
    Integer b = mx * ::abs(f.back()) * static_cast<long>(f.size());
    mpz_mul_2exp(b.get_mpz_t(), b.get_mpz_t(), f.size());
    return b;
}

// f primitive squarefree, deg >= 1; returns primitive irreducible factors.
std::vector<ZPoly> zassenhaus(ZPoly f) {
    zprimitive(f);
    std::vector<ZPoly> out;
    if (zdeg(f) == 1) {
        out.push_back(f);
        return out;
    }

    // prime with squarefree reduction and preserved degree
    Integer p(3);
    while (true) {
        if (imod(f.back(), p) != 0) {
            MPoly fp = mreduce(f, p);
            Integer li = minv(fp.back(), p);
            for (auto& c : fp) c = imod(c * li, p);
            MPoly g = mgcd(fp, mreduce(zderiv(f), p), p);
            if (zdeg(g) == 0) break;
        }
        mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
    }

    MPoly fp = mreduce(f, p);
    Integer li = minv(fp.back(), p);
    for (auto& c : fp) c = imod(c * li, p);
    std::vector<MPoly> modular = factor_mod_p(fp, p);
    if (modular.size() == 1) {
        out.push_back(f);
        return out;
    }

    Integer bound = coeff_bound(f) * 2 + 1;
    Integer modulus;
    hensel_lift_tree(f, modular, p, bound, modulus);

    // subset recombination
    ZPoly rest = f;
    std::vector<MPoly> pool = modular;
    std::size_t card = 1;
    while (2 * card <= pool.size()) {
        bool found = false;
        std::vector<std::size_t> idx(card);
        // iterate over cardinality-card subsets of pool
        std::function<bool(std::size_t, std::size_t)> iter = [&](std::size_t start,
                                                                 std::size_t k) -> bool {
            if (k == card) {
                MPoly prod{imod(rest.back(), modulus)};
                for (std::size_t j : idx) prod = mmul(prod, pool[j], modulus);
                ZPoly cand(prod.size());
                for (std::size_t i = 0; i < prod.size(); ++i) {
                    Integer c = prod[i];
                    if (c * 2 > modulus) c -= modulus;
                    cand[i] = c;
                }
                ztrim(cand);
                zprimitive(cand);
                if (auto q = zdivide(rest, cand)) {
                    out.push_back(cand);
                    rest = *q;
                    std::vector<MPoly> np;
                    for (std::size_t j = 0; j < pool.size(); ++j)
                        if (std::find(idx.begin(), idx.end(), j) == idx.end())
                            np.push_back(pool[j]);
                    pool = np;
                    return true;
                }
                return false;
            }
            for (std::size_t i = start; i + (card - k) <= pool.size(); ++i) {
                idx[k] = i;
                if (iter(i + 1, k + 1)) return true;
            }
            return false;
        };
        found = iter(0, 0);
        if (!found) ++card;
    }
    if (zdeg(rest) >= 1) {
        zprimitive(rest);
        out.push_back(rest);
    }
    return out;
}

// Yun squarefree decomposition of a primitive polynomial: f = prod out[i]^(i+1).
std::vector<ZPoly> yun_squarefree(const ZPoly& f) {
    std::vector<ZPoly> out;
    ZPoly df = zderiv(f);
    ZPoly g = zgcd(f, df);
    if (zdeg(g) == 0) {
        out.push_back(f);
        return out;
    }
    ZPoly w = *zdivide(f, g);
    ZPoly y = *zdivide(df, g);
    while (true) {
        ZPoly wd = zderiv(w);
        ZPoly z = y;
        {
            // z = y - w'
            ZPoly t(std::max(z.size(), wd.size()), Integer(0));
            for (std::size_t i = 0; i < z.size(); ++i) t[i] = z[i];
            for (std::size_t i = 0; i < wd.size(); ++i) t[i] -= wd[i];
            ztrim(t);
            z = t;
        }
        if (z.empty()) {
            out.push_back(w);
            break;
        }
        ZPoly a = zgcd(w, z);
        out.push_back(a);
        w = *zdivide(w, a);
        y = *zdivide(z, a);
    }
    return out;
}

// ---- Kronecker bridge --------------------------------------------------------

std::vector<unsigned> present_vars(const MultiPoly& p) {
    std::vector<unsigned> vs;
    for (unsigned v = 0; v < p.layout().nvars(); ++v)
        if (p.depends_on(v)) vs.push_back(v);
    return vs;
}

// Packs a (content-free, integer) polynomial into Z[y] with strides derived
// from per-variable degree bounds.
ZPoly kronecker_pack(const MultiPoly& p, const std::vector<unsigned>& vs,
                     const std::vector<unsigned long>& strides) {
    unsigned long dmax = 0;
    for (const auto& [m, c] : p.terms()) {
        unsigned long idx = 0;
        for (std::size_t j = 0; j < vs.size(); ++j) idx += m[vs[j]] * strides[j];
        dmax = std::max(dmax, idx);
    }
    ZPoly f(dmax + 1, Integer(0));
    for (const auto& [m, c] : p.terms()) {
        unsigned long idx = 0;
        for (std::size_t j = 0; j < vs.size(); ++j) idx += m[vs[j]] * strides[j];
        if (!c.is_integer()) fail(ErrorKind::DomainError, "kronecker: non-integer coefficient");
        f[idx] += c.num();
    }
    ztrim(f);
    return f;
}

// Unpacks a univariate candidate back to the tower variables; nullopt when a
// coefficient index overflows the digit bases (impossible for true factors).
std::optional<MultiPoly> kronecker_unpack(const ZPoly& f, const VarLayout& lay,
                                          const std::vector<unsigned>& vs,
                                          const std::vector<unsigned long>& bases) {
    MultiPoly::TermMap terms;
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (f[i] == 0) continue;
        Monomial m(lay.nvars(), 0);
        unsigned long rem = i;
        for (std::size_t j = 0; j < vs.size(); ++j) {
            m[vs[j]] = static_cast<unsigned>(rem % bases[j]);
            rem /= bases[j];
        }
        if (rem != 0) return std::nullopt;
        terms[m] = Rational(f[i]);
    }
    return MultiPoly::from_terms(lay, std::move(terms));
}

// Irreducible factorization of a normalized (integer-primitive, content-free,
// positive-lead) squarefree polynomial with at least one variable.
std::vector<MultiPoly> factor_squarefree_primitive(const MultiPoly& p) {
    const VarLayout& lay = p.layout();
    std::vector<unsigned> vs = present_vars(p);
    std::vector<unsigned long> bases, strides;
    unsigned long s = 1;
    for (unsigned v : vs) {
        unsigned long b = static_cast<unsigned long>(p.degree(v)) + 1;
        bases.push_back(b);
        strides.push_back(s);
        s *= b;
    }
    ZPoly packed = kronecker_pack(p, vs, strides);
    std::vector<ZPoly> uni = zassenhaus(packed);
    if (uni.size() == 1) return {p};

    std::vector<MultiPoly> out;
    MultiPoly rest = p;
    std::vector<ZPoly> pool = uni;
    std::size_t card = 1;
    while (card <= pool.size()) {
        bool found = false;
        std::vector<std::size_t> idx(card);
        std::function<bool(std::size_t, std::size_t)> iter = [&](std::size_t start,
                                                                 std::size_t k) -> bool {
            if (k == card) {
                ZPoly prod{Integer(1)};
                for (std::size_t j : idx) prod = zmul(prod, pool[j]);
                auto cand = kronecker_unpack(prod, lay, vs, bases);
                if (cand && !cand->is_constant()) {
                    MultiPoly c = cand->normalized().primitive;
                    if (auto q = rest.divide(c)) {
                        out.push_back(c);
                        rest = *q;
                        std::vector<ZPoly> np;
                        for (std::size_t j = 0; j < pool.size(); ++j)
                            if (std::find(idx.begin(), idx.end(), j) == idx.end())
                                np.push_back(pool[j]);
                        pool = np;
                        return true;
                    }
                }
                return false;
            }
            for (std::size_t i = start; i + (card - k) <= pool.size(); ++i) {
                idx[k] = i;
                if (iter(i + 1, k + 1)) return true;
            }
            return false;
        };
        found = iter(0, 0);
        if (!found) ++card;
        if (rest.is_constant()) break;
        if (pool.empty()) break;
    }
    if (!rest.is_constant()) out.push_back(rest.normalized().primitive);
    return out;
}

void factor_normalized_rec(const MultiPoly& p, std::vector<std::pair<MultiPoly, unsigned>>& acc,
                           unsigned mult);

void push_factor(std::vector<std::pair<MultiPoly, unsigned>>& acc, const MultiPoly& f,
                 unsigned mult) {
    for (auto& [g, m] : acc) {
        if (g == f) {
            m += mult;
            return;
        }
    }
    acc.emplace_back(f, mult);
}

// p normalized, non-constant. Splits off square parts via gcd with the
// main-variable derivative, then factors squarefree primitives.
void factor_normalized_rec(const MultiPoly& p, std::vector<std::pair<MultiPoly, unsigned>>& acc,
                           unsigned mult) {
    std::vector<unsigned> vs = present_vars(p);
    if (vs.empty()) return;  // unit
    unsigned v = vs.back();

    MultiPoly cont = poly_content(p, v);
    MultiPoly prim = *p.divide(cont);
    if (!cont.is_constant()) factor_normalized_rec(cont.normalized().primitive, acc, mult);

    prim = prim.normalized().primitive;
    if (prim.is_constant()) return;

    if (vs.size() == 1 && prim.depends_on(v) && present_vars(prim).size() == 1) {
        // Univariate: Yun squarefree decomposition, then Zassenhaus per part.
        std::vector<unsigned long> strides{1};
        ZPoly f = kronecker_pack(prim, {v}, strides);
        std::vector<unsigned long> bases{static_cast<unsigned long>(zdeg(f)) + 1};
        auto parts = yun_squarefree(f);
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (zdeg(parts[i]) < 1) continue;
            for (const auto& zf : zassenhaus(parts[i])) {
                auto m = kronecker_unpack(zf, p.layout(), {v}, bases);
                push_factor(acc, m->normalized().primitive, mult * static_cast<unsigned>(i + 1));
            }
        }
        return;
    }

    MultiPoly g = gcd_poly(prim, prim.derivative(v));
    if (g.is_constant()) {
        for (const auto& f : factor_squarefree_primitive(prim)) push_factor(acc, f, mult);
        return;
    }
    MultiPoly h = *prim.divide(g);
    factor_normalized_rec(g.normalized().primitive, acc, mult);
    factor_normalized_rec(h.normalized().primitive, acc, mult);
}

}  // namespace

PolyFactors factor_multipoly(const MultiPoly& p) {
    if (p.is_zero()) fail(ErrorKind::ZeroInput, "factor_multipoly(0)");
    auto n = p.normalized();
    PolyFactors out;
    out.gamma = n.gamma;
    out.scale = n.scale;
    if (n.primitive.is_constant()) return out;
    factor_normalized_rec(n.primitive, out.factors, 1);

    // Deterministic order and exactness check.
    std::sort(out.factors.begin(), out.factors.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    MultiPoly check = MultiPoly::constant(p.layout(), out.scale).mul_gamma(out.gamma);
    for (const auto& [f, m] : out.factors) check = check.mul(f.pow(m));
    if (check != p) fail(ErrorKind::DomainError, "factorization self-check failed");
    return out;
}

bool is_irreducible(const MultiPoly& p) {
    if (p.is_zero() || p.is_constant()) return false;
    auto fs = factor_multipoly(p);
    return fs.factors.size() == 1 && fs.factors[0].second == 1;
}

RatFunc FactoredForm::assemble() const {
    RatFunc acc = param_content;
    const VarLayout& lay = acc.layout();
    acc = acc.mul(RatFunc(MultiPoly::gamma_constant(lay, gamma)));
    for (const auto& [f, m] : factors) acc = acc.mul(RatFunc(f).pow(m));
    return acc;
}

FactoredForm factorize(const RatFunc& h) {
    if (h.is_zero()) fail(ErrorKind::ZeroInput, "factorize(0)");
    const VarLayout& lay = h.layout();
    PolyFactors fn = factor_multipoly(h.num());
    PolyFactors fd = factor_multipoly(h.den());

    FactoredForm out(lay);
    out.gamma = fn.gamma.div(fd.gamma).mul(CycloRadical::from_rational(fn.scale / fd.scale));
    MultiPoly pnum = MultiPoly::constant(lay, Rational(1));
    MultiPoly pden = MultiPoly::constant(lay, Rational(1));
    std::vector<std::pair<MultiPoly, long>> xs;
    for (const auto& [f, m] : fn.factors) {
        if (f.is_param_only())
            pnum = pnum.mul(f.pow(m));
        else
            xs.emplace_back(f, static_cast<long>(m));
    }
    for (const auto& [f, m] : fd.factors) {
        if (f.is_param_only()) {
            pden = pden.mul(f.pow(m));
        } else {
            bool merged = false;
            for (auto& [g, e] : xs) {
                if (g == f) {
                    e -= static_cast<long>(m);
                    merged = true;
                    break;
                }
            }
            if (!merged) xs.emplace_back(f, -static_cast<long>(m));
        }
    }
    std::erase_if(xs, [](const auto& fm) { return fm.second == 0; });
    out.param_content = RatFunc(pnum, pden);
    out.factors = std::move(xs);
    return out;
}

}  // namespace prodcanon
