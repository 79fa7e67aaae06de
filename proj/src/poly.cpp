#include "prodcanon/poly.hpp"

#include <algorithm>
#include <sstream>

#include "prodcanon/errors.hpp"

namespace prodcanon {

std::string VarLayout::var_name(unsigned v) const {
    std::ostringstream os;
    if (v < num_params) {
        os << "kappa" << (v + 1);
    } else if (v < num_params + num_bases) {
        os << "q" << (v - num_params + 1);
    } else if (v == x()) {
        os << "x";
    } else {
        os << "t" << (v - x());
    }
    return os.str();
}

MultiPoly::MultiPoly(const VarLayout& lay, const Rational& c) : lay_(lay) {
    if (!c.is_zero()) terms_[Monomial(lay.nvars(), 0)] = c;
}

MultiPoly MultiPoly::gamma_constant(const VarLayout& lay, const CycloRadical& g) {
    auto [spill, c] = g.extract_rational();
    MultiPoly p(lay);
    p.terms_[Monomial(lay.nvars(), 0)] = spill;
    p.content_ = c;
    p.prune();
    return p;
}

MultiPoly MultiPoly::var(const VarLayout& lay, unsigned v, unsigned exp) {
    MultiPoly p(lay);
    Monomial m(lay.nvars(), 0);
    m[v] = exp;
    p.terms_[m] = Rational(1);
    return p;
}

MultiPoly MultiPoly::from_terms(const VarLayout& lay, TermMap terms, const CycloRadical& content) {
    MultiPoly p(lay);
    auto [spill, c] = content.extract_rational();
    p.content_ = c;
    for (auto& [m, coef] : terms) {
        Rational v = coef * spill;
        if (!v.is_zero()) p.terms_[m] = v;
    }
    p.prune();
    return p;
}

void MultiPoly::prune() {
    std::erase_if(terms_, [](const auto& kv) { return kv.second.is_zero(); });
    if (terms_.empty()) content_ = CycloRadical::one();
}

bool MultiPoly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    const Monomial& m = terms_.begin()->first;
    return std::all_of(m.begin(), m.end(), [](unsigned e) { return e == 0; });
}

bool MultiPoly::is_param_only() const {
    for (const auto& [m, c] : terms_)
        for (unsigned v = lay_.x(); v < lay_.nvars(); ++v)
            if (m[v] != 0) return false;
    return true;
}

bool MultiPoly::is_rational_constant() const { return is_constant() && content_.is_one(); }

Rational MultiPoly::rational_value() const {
    if (!is_rational_constant()) fail(ErrorKind::DomainError, "not a rational constant");
    return terms_.empty() ? Rational(0) : terms_.begin()->second;
}

CycloRadical MultiPoly::gamma_value() const {
    if (!is_constant() || is_zero()) fail(ErrorKind::DomainError, "not a nonzero constant");
    return content_.mul(CycloRadical::from_rational(terms_.begin()->second));
}

long MultiPoly::degree(unsigned v) const {
    long d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, static_cast<long>(m[v]));
    return d;
}

unsigned MultiPoly::total_degree() const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) {
        unsigned s = 0;
        for (unsigned e : m) s += e;
        d = std::max(d, s);
    }
    return d;
}

bool MultiPoly::depends_on(unsigned v) const {
    for (const auto& [m, c] : terms_)
        if (m[v] != 0) return true;
    return false;
}

std::optional<unsigned> MultiPoly::level() const {
    auto mv = main_var();
    if (!mv) return std::nullopt;
    return lay_.level_of(*mv);
}

std::optional<unsigned> MultiPoly::main_var() const {
    for (unsigned v = lay_.nvars(); v-- > lay_.x();) {
        if (depends_on(v)) return v;
    }
    return std::nullopt;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly p(lay_);
    p.content_ = content_;
    for (const auto& [m, c] : terms_) p.terms_[m] = -c;
    return p;
}

MultiPoly MultiPoly::add(const MultiPoly& o) const {
    if (!(lay_ == o.lay_)) fail(ErrorKind::DomainError, "layout mismatch");
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    if (content_ != o.content_)
        fail(ErrorKind::MixedContent,
             "cannot add coefficients with different constant monomials: " + content_.str() +
                 " vs " + o.content_.str());
    MultiPoly p = *this;
    for (const auto& [m, c] : o.terms_) {
        auto it = p.terms_.find(m);
        if (it == p.terms_.end()) {
            p.terms_[m] = c;
        } else {
            it->second += c;
        }
    }
    p.prune();
    return p;
}

MultiPoly MultiPoly::mul(const MultiPoly& o) const {
    if (!(lay_ == o.lay_)) fail(ErrorKind::DomainError, "layout mismatch");
    MultiPoly p(lay_);
    if (is_zero() || o.is_zero()) return p;
    auto [spill, c] = content_.mul(o.content_).extract_rational();
    p.content_ = c;
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : o.terms_) {
            Monomial m(lay_.nvars());
            for (unsigned i = 0; i < lay_.nvars(); ++i) m[i] = ma[i] + mb[i];
            Rational v = ca * cb * spill;
            auto it = p.terms_.find(m);
            if (it == p.terms_.end()) {
                p.terms_[m] = v;
            } else {
                it->second += v;
            }
        }
    }
    p.prune();
    return p;
}

MultiPoly MultiPoly::mul_scalar(const Rational& c) const {
    MultiPoly p(lay_);
    if (c.is_zero()) return p;
    p.content_ = content_;
    for (const auto& [m, v] : terms_) p.terms_[m] = v * c;
    return p;
}

MultiPoly MultiPoly::mul_gamma(const CycloRadical& g) const {
    if (is_zero()) return *this;
    auto [spill, c] = content_.mul(g).extract_rational();
    MultiPoly p(lay_);
    p.content_ = c;
    for (const auto& [m, v] : terms_) p.terms_[m] = v * spill;
    p.prune();
    return p;
}

MultiPoly MultiPoly::pow(unsigned k) const {
    MultiPoly r = MultiPoly::constant(lay_, Rational(1));
    MultiPoly base = *this;
    while (k) {
        if (k & 1) r = r.mul(base);
        k >>= 1;
        if (k) base = base.mul(base);
    }
    return r;
}

std::optional<MultiPoly> MultiPoly::divide(const MultiPoly& o) const {
    if (o.is_zero()) fail(ErrorKind::ZeroInput, "division by zero polynomial");
    MultiPoly q(lay_);
    if (is_zero()) return q;
    auto [spill, c] = content_.div(o.content_).extract_rational();
    q.content_ = c;
    MultiPoly r = *this;
    const auto lead_b = *o.terms_.rbegin();
    while (!r.terms_.empty()) {
        const auto lead_r = *r.terms_.rbegin();
        Monomial m(lay_.nvars());
        for (unsigned i = 0; i < lay_.nvars(); ++i) {
            if (lead_r.first[i] < lead_b.first[i]) return std::nullopt;
            m[i] = lead_r.first[i] - lead_b.first[i];
        }
        Rational coef = lead_r.second / lead_b.second;
        q.terms_[m] = coef * spill;
        // r -= coef * x^m * o  on the raw term maps
        for (const auto& [mb, cb] : o.terms_) {
            Monomial mm(lay_.nvars());
            for (unsigned i = 0; i < lay_.nvars(); ++i) mm[i] = m[i] + mb[i];
            auto it = r.terms_.find(mm);
            Rational delta = coef * cb;
            if (it == r.terms_.end()) {
                if (!delta.is_zero()) r.terms_[mm] = -delta;
            } else {
                it->second -= delta;
                if (it->second.is_zero()) r.terms_.erase(it);
            }
        }
    }
    q.prune();
    return q;
}

MultiPoly MultiPoly::coeff_of(unsigned v, unsigned k) const {
    MultiPoly p(lay_);
    p.content_ = content_;
    for (const auto& [m, c] : terms_) {
        if (m[v] != k) continue;
        Monomial mm = m;
        mm[v] = 0;
        p.terms_[mm] = c;
    }
    p.prune();
    return p;
}

MultiPoly MultiPoly::derivative(unsigned v) const {
    MultiPoly p(lay_);
    p.content_ = content_;
    for (const auto& [m, c] : terms_) {
        if (m[v] == 0) continue;
        Monomial mm = m;
        mm[v] -= 1;
        p.terms_[mm] = c * Rational(static_cast<long>(m[v]));
    }
    p.prune();
    return p;
}

MultiPoly::Normalized MultiPoly::normalized() const {
    Normalized out{content_, Rational(1), MultiPoly(lay_)};
    if (is_zero()) {
        out.gamma = CycloRadical::one();
        out.scale = Rational(0);
        return out;
    }
    Integer gnum(0), lden(1);
    for (const auto& [m, c] : terms_) {
        gnum = int_gcd(gnum, c.num());
        lden = int_lcm(lden, c.den());
    }
    Rational scale(gnum, lden);
    if (terms_.rbegin()->second.sign() < 0) scale = -scale;
    out.scale = scale;
    for (const auto& [m, c] : terms_) out.primitive.terms_[m] = c / scale;
    return out;
}

MultiPoly MultiPoly::substitute(unsigned v, const MultiPoly& value) const {
    if (!depends_on(v)) return *this;
    long d = degree(v);
    std::vector<MultiPoly> coeffs;
    for (long k = 0; k <= d; ++k) coeffs.push_back(coeff_of(v, static_cast<unsigned>(k)));
    MultiPoly acc = coeffs.back();
    for (long k = d - 1; k >= 0; --k) acc = acc.mul(value).add(coeffs[static_cast<std::size_t>(k)]);
    return acc;
}

MultiPoly MultiPoly::eval_at(unsigned long n) const {
    MultiPoly p(lay_);
    p.content_ = content_;
    Rational nr(static_cast<long>(n));
    for (const auto& [m, c] : terms_) {
        Monomial mm = m;
        Rational coef = c;
        unsigned xe = mm[lay_.x()];
        if (xe) coef *= nr.pow(static_cast<long>(xe));
        mm[lay_.x()] = 0;
        for (unsigned i = 0; i < lay_.num_bases; ++i) {
            unsigned te = mm[lay_.t(i)];
            if (te) {
                mm[lay_.q(i)] += static_cast<unsigned>(n) * te;
                mm[lay_.t(i)] = 0;
            }
        }
        if (coef.is_zero()) continue;
        auto it = p.terms_.find(mm);
        if (it == p.terms_.end()) {
            p.terms_[mm] = coef;
        } else {
            it->second += coef;
        }
    }
    p.prune();
    return p;
}

Rational MultiPoly::eval_params(const std::vector<Rational>& kappa_vals,
                                const std::vector<Rational>& q_vals) const {
    if (!is_param_only()) fail(ErrorKind::DomainError, "eval_params: tower variables present");
    if (!content_.is_one()) fail(ErrorKind::DomainError, "eval_params: nontrivial constant content");
    if (kappa_vals.size() < lay_.num_params || q_vals.size() < lay_.num_bases)
        fail(ErrorKind::DomainError, "eval_params: missing assignment");
    Rational acc(0);
    for (const auto& [m, c] : terms_) {
        Rational t = c;
        for (unsigned i = 0; i < lay_.num_params; ++i)
            if (m[lay_.kappa(i)]) t *= kappa_vals[i].pow(m[lay_.kappa(i)]);
        for (unsigned i = 0; i < lay_.num_bases; ++i)
            if (m[lay_.q(i)]) t *= q_vals[i].pow(m[lay_.q(i)]);
        acc += t;
    }
    return acc;
}

bool MultiPoly::operator<(const MultiPoly& o) const {
    if (content_ != o.content_) return content_ < o.content_;
    return terms_ < o.terms_;
}

std::string MultiPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        Rational ac = c.abs();
        if (first) {
            if (c.sign() < 0) os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        std::vector<std::string> factors;
        if (!content_.is_one()) factors.push_back(content_.str());
        bool any_var = false;
        for (unsigned v = 0; v < lay_.nvars(); ++v) {
            if (m[v] == 0) continue;
            any_var = true;
            std::ostringstream f;
            f << lay_.var_name(v);
            if (m[v] > 1) f << "^" << m[v];
            factors.push_back(f.str());
        }
        if (!ac.is_one() || (!any_var && content_.is_one()))
            factors.insert(factors.begin(), ac.str());
        for (std::size_t i = 0; i < factors.size(); ++i) {
            if (i) os << "*";
            os << factors[i];
        }
    }
    return os.str();
}

// ---- gcd -------------------------------------------------------------------

namespace {

// Pseudo-remainder of a by b with respect to v; content-free inputs.
MultiPoly prem(const MultiPoly& a, const MultiPoly& b, unsigned v) {
    MultiPoly r = a;
    long db = b.degree(v);
    MultiPoly lcb = b.leading_coeff(v);
    while (!r.is_zero() && r.degree(v) >= db) {
        long dr = r.degree(v);
        MultiPoly lcr = r.leading_coeff(v);
        MultiPoly shift = MultiPoly::var(r.layout(), v, static_cast<unsigned>(dr - db));
        r = r.mul(lcb).sub(b.mul(lcr).mul(shift));
        if (!r.is_zero() && r.degree(v) == dr)
            fail(ErrorKind::DomainError, "prem: leading term did not cancel");
    }
    return r;
}

MultiPoly gcd_rec(MultiPoly a, MultiPoly b) {
    if (a.is_zero()) return b.normalized().primitive;
    if (b.is_zero()) return a.normalized().primitive;
    a = a.normalized().primitive;
    b = b.normalized().primitive;

    std::optional<unsigned> mv;
    for (unsigned v = a.layout().nvars(); v-- > 0;) {
        if (a.depends_on(v) || b.depends_on(v)) {
            mv = v;
            break;
        }
    }
    if (!mv) return MultiPoly::constant(a.layout(), Rational(1));

    unsigned v = *mv;
    MultiPoly ca = poly_content(a, v), cb = poly_content(b, v);
    MultiPoly pa = *a.divide(ca), pb = *b.divide(cb);
    MultiPoly cg = gcd_rec(ca, cb);

    if (pa.degree(v) < pb.degree(v)) std::swap(pa, pb);
    while (!pb.is_zero()) {
        MultiPoly r = prem(pa, pb, v);
        pa = pb;
        if (r.is_zero()) {
            pb = r;
        } else {
            pb = (*r.divide(poly_content(r, v))).normalized().primitive;
        }
    }
    return cg.mul(pa.normalized().primitive).normalized().primitive;
}

}  // namespace

MultiPoly poly_content(const MultiPoly& p, unsigned v) {
    long d = p.degree(v);
    if (d < 0) return MultiPoly(p.layout());
    MultiPoly g(p.layout());
    for (long k = 0; k <= d; ++k) {
        MultiPoly c = p.coeff_of(v, static_cast<unsigned>(k));
        if (c.is_zero()) continue;
        g = gcd_rec(g, c);
        if (g.is_constant() && !g.is_zero()) break;
    }
    return g.is_zero() ? MultiPoly::constant(p.layout(), Rational(1)) : g;
}

MultiPoly gcd_poly(const MultiPoly& a, const MultiPoly& b) { return gcd_rec(a, b); }

// ---- RatFunc -----------------------------------------------------------------

RatFunc::RatFunc(MultiPoly num, MultiPoly den) : num_(num.layout()), den_(num.layout()) {
    if (den.is_zero()) fail(ErrorKind::ZeroInput, "zero denominator");
    if (num.is_zero()) {
        den_ = MultiPoly::constant(num.layout(), Rational(1));
        return;
    }
    MultiPoly g = gcd_poly(num, den);
    if (!g.is_constant()) {
        num = *num.divide(g);
        den = *den.divide(g);
    }
    auto nn = num.normalized();
    auto dn = den.normalized();
    CycloRadical gamma = nn.gamma.div(dn.gamma);
    Rational scale = nn.scale / dn.scale;
    num_ = nn.primitive.mul_scalar(scale).mul_gamma(gamma);
    den_ = dn.primitive;
}

bool RatFunc::is_one() const {
    return num_ == MultiPoly::constant(layout(), Rational(1)) &&
           den_ == MultiPoly::constant(layout(), Rational(1));
}

RatFunc RatFunc::operator-() const {
    RatFunc r(layout());
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

RatFunc RatFunc::add(const RatFunc& o) const {
    return RatFunc(num_.mul(o.den_).add(o.num_.mul(den_)), den_.mul(o.den_));
}

RatFunc RatFunc::mul(const RatFunc& o) const { return RatFunc(num_.mul(o.num_), den_.mul(o.den_)); }

RatFunc RatFunc::div(const RatFunc& o) const {
    if (o.is_zero()) fail(ErrorKind::ZeroInput, "division by zero rational function");
    return RatFunc(num_.mul(o.den_), den_.mul(o.num_));
}

RatFunc RatFunc::inverse() const {
    if (is_zero()) fail(ErrorKind::ZeroInput, "inverse of zero");
    return RatFunc(den_, num_);
}

RatFunc RatFunc::pow(long k) const {
    if (k == 0) return RatFunc::constant(layout(), Rational(1));
    bool inv = k < 0;
    unsigned e = static_cast<unsigned>(inv ? -k : k);
    RatFunc r(num_.pow(e), den_.pow(e));
    return inv ? r.inverse() : r;
}

std::string RatFunc::str() const {
    if (den_ == MultiPoly::constant(layout(), Rational(1))) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

}  // namespace prodcanon
