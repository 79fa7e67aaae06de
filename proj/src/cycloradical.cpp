#include "prodcanon/cycloradical.hpp"

#include <numeric>
#include <sstream>

#include "prodcanon/lattice.hpp"

namespace prodcanon {

void CycloRadical::set_root(unsigned long N, long m) {
    if (N == 0) fail(ErrorKind::DomainError, "root order must be positive");
    long mm = m % static_cast<long>(N);
    if (mm < 0) mm += static_cast<long>(N);
    unsigned long um = static_cast<unsigned long>(mm);
    if (um == 0) {
        N_ = 1;
        m_ = 0;
        return;
    }
    unsigned long g = std::gcd(um, N);
    N_ = N / g;
    m_ = um / g;
}

CycloRadical CycloRadical::from_rational(const Rational& r) {
    if (r.is_zero()) fail(ErrorKind::ZeroInput, "zero is not in the constant group");
    PrimeExponents pe = factor_rational(r);
    CycloRadical g;
    if (pe.sign < 0) g.set_root(2, 1);
    g.rad_ = std::move(pe.exps);
    return g;
}

CycloRadical CycloRadical::root_of_unity(unsigned long N, long m) {
    CycloRadical g;
    g.set_root(N, m);
    return g;
}

CycloRadical CycloRadical::prime_power(const Integer& p, const Rational& e) {
    if (!is_prime(p)) fail(ErrorKind::DomainError, "prime_power: not a prime");
    CycloRadical g;
    if (!e.is_zero()) g.rad_[p] = e;
    return g;
}

CycloRadical CycloRadical::radical_of(const Rational& r, unsigned long d) {
    if (r.is_zero()) fail(ErrorKind::ZeroInput, "radical of zero");
    if (d == 0) fail(ErrorKind::DomainError, "radical: d must be >= 1");
    if (r.sign() < 0 && d > 2)
        fail(ErrorKind::UnsupportedCoefficients, "root(r, d) requires r > 0 for d > 2");
    PrimeExponents pe = factor_rational(r);
    CycloRadical g;
    if (pe.sign < 0) g.set_root(d == 1 ? 2 : 4, 1);  // sqrt(-1) = zeta_4
    Rational inv_d(1, static_cast<long>(d));
    for (const auto& [p, e] : pe.exps) {
        Rational q = e * inv_d;
        if (!q.is_zero()) g.rad_[p] = q;
    }
    return g;
}

bool CycloRadical::is_rational() const {
    if (N_ > 2) return false;
    for (const auto& [p, e] : rad_)
        if (!e.is_integer()) return false;
    return true;
}

std::optional<Rational> CycloRadical::as_rational() const {
    if (!is_rational()) return std::nullopt;
    Rational v(1);
    for (const auto& [p, e] : rad_) v *= Rational(p).pow(e.num().get_si());
    if (N_ == 2) v = -v;
    return v;
}

CycloRadical CycloRadical::mul(const CycloRadical& o) const {
    CycloRadical g;
    unsigned long L = std::lcm(N_, o.N_);
    // zeta_L^(m * L/N + m' * L/N')
    unsigned long e = (m_ * (L / N_) + o.m_ * (L / o.N_)) % L;
    g.set_root(L, static_cast<long>(e));
    g.rad_ = rad_;
    for (const auto& [p, ex] : o.rad_) {
        Rational s = g.rad_.count(p) ? g.rad_[p] + ex : ex;
        if (s.is_zero())
            g.rad_.erase(p);
        else
            g.rad_[p] = s;
    }
    return g;
}

CycloRadical CycloRadical::div(const CycloRadical& o) const { return mul(o.pow(-1)); }

CycloRadical CycloRadical::pow(long k) const {
    CycloRadical g;
    if (k == 0) return g;
    long km = (static_cast<long>(m_) % static_cast<long>(N_)) * (k % static_cast<long>(N_));
    g.set_root(N_, km);
    for (const auto& [p, e] : rad_) {
        Rational s = e * Rational(k);
        if (!s.is_zero()) g.rad_[p] = s;
    }
    return g;
}

std::pair<CycloRadical, CycloRadical> CycloRadical::split() const {
    CycloRadical unit, norm;
    unit.set_root(N_, static_cast<long>(m_));
    norm.rad_ = rad_;
    return {unit, norm};
}

std::pair<Rational, CycloRadical> CycloRadical::extract_rational() const {
    Rational q(1);
    CycloRadical c;
    // Even-order roots with m >= N/2 carry a -1: fold it into the rational
    // part so that (q, c) is a canonical split.
    if (N_ % 2 == 0 && m_ >= N_ / 2) {
        q = Rational(-1);
        c.set_root(N_, static_cast<long>(m_ - N_ / 2));
    } else {
        c.N_ = N_;
        c.m_ = m_;
    }
    for (const auto& [p, e] : rad_) {
        // e = floor(e) + frac, frac in [0, 1)
        Integer fl = int_fdiv(e.num(), e.den());
        Rational frac = e - Rational(fl);
        if (fl != 0) {
            if (!fl.fits_slong_p()) fail(ErrorKind::DomainError, "radical exponent too large");
            q *= Rational(p).pow(fl.get_si());
        }
        if (!frac.is_zero()) c.rad_[p] = frac;
    }
    return {q, c};
}

bool CycloRadical::operator<(const CycloRadical& o) const {
    if (N_ != o.N_) return N_ < o.N_;
    if (m_ != o.m_) return m_ < o.m_;
    return rad_ < o.rad_;
}

std::string CycloRadical::str() const {
    std::vector<std::string> parts;
    if (N_ > 1) {
        std::ostringstream os;
        os << "zeta(" << N_ << "," << m_ << ")";
        parts.push_back(os.str());
    }
    for (const auto& [p, e] : rad_) {
        std::ostringstream os;
        Integer num = e.num(), den = e.den();
        if (den == 1) {
            os << p.get_str();
            if (num != 1) os << "^" << (num > 0 ? "" : "(") << num.get_str() << (num > 0 ? "" : ")");
        } else {
            os << "root(" << p.get_str() << "," << den.get_str() << ")";
            if (num != 1) os << "^" << (num > 0 ? "" : "(") << num.get_str() << (num > 0 ? "" : ")");
        }
        parts.push_back(os.str());
    }
    if (parts.empty()) return "1";
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += "*";
        out += parts[i];
    }
    return out;
}

std::pair<CycloRadical, CycloRadical> extract_root_of_unity(const CycloRadical& g) {
    return g.split();
}

std::pair<CycloRadical, std::vector<unsigned long>> common_root_of_unity(
    const std::vector<CycloRadical>& units) {
    unsigned long lambda = 1;
    for (const auto& u : units) {
        if (!u.is_root_of_unity())
            fail(ErrorKind::DomainError, "common_root_of_unity: input is not a root of unity");
        lambda = std::lcm(lambda, u.root_order());
    }
    CycloRadical zeta = CycloRadical::root_of_unity(lambda, 1);
    std::vector<unsigned long> exps;
    exps.reserve(units.size());
    for (const auto& u : units) {
        // zeta^(m * lambda / N) = zeta_N^m
        exps.push_back((u.root_exp() * (lambda / u.root_order())) % lambda);
    }
    return {zeta, exps};
}

OrbitModuleBasis solve_orbit(const std::vector<CycloRadical>& alphas) {
    const std::size_t w = alphas.size();
    OrbitModuleBasis out;
    if (w == 0) return out;

    // Common root of unity for the unit parts.
    std::vector<CycloRadical> units;
    units.reserve(w);
    for (const auto& a : alphas) units.push_back(a.split().first);
    auto [zeta, mu] = common_root_of_unity(units);
    unsigned long lambda = zeta.root_order();

    // Occurring primes.
    std::vector<Integer> primes;
    for (const auto& a : alphas)
        for (const auto& [p, e] : a.radical())
            if (std::find(primes.begin(), primes.end(), p) == primes.end()) primes.push_back(p);
    std::sort(primes.begin(), primes.end());

    // One row per prime (denominators cleared), one congruence row for the
    // root-of-unity exponents with an auxiliary column carrying the modulus.
    std::vector<std::vector<Integer>> rows;
    for (const auto& p : primes) {
        Integer den(1);
        for (const auto& a : alphas) {
            auto it = a.radical().find(p);
            if (it != a.radical().end()) den = int_lcm(den, it->second.den());
        }
        std::vector<Integer> row(w + 1, Integer(0));
        for (std::size_t i = 0; i < w; ++i) {
            auto it = alphas[i].radical().find(p);
            if (it != alphas[i].radical().end())
                row[i] = it->second.num() * (den / it->second.den());
        }
        rows.push_back(std::move(row));
    }
    {
        std::vector<Integer> row(w + 1, Integer(0));
        for (std::size_t i = 0; i < w; ++i) row[i] = Integer(mu[i]);
        row[w] = Integer(lambda);
        rows.push_back(std::move(row));
    }

    auto kernel = lattice_kernel(IntMatrix::from_rows(rows));
    for (auto& v : kernel) {
        v.pop_back();  // drop the auxiliary modulus coordinate
        bool zero = true;
        for (const auto& x : v)
            if (x != 0) zero = false;
        if (!zero) out.vectors.push_back(std::move(v));
    }
    return out;
}

ConstantDecomposition decompose_constants(const std::vector<CycloRadical>& gammas) {
    ConstantDecomposition out;
    std::vector<CycloRadical> units;
    units.reserve(gammas.size());
    for (const auto& g : gammas) units.push_back(g.split().first);
    auto [zeta, mus] = common_root_of_unity(units);
    out.zeta = zeta;
    out.lambda = zeta.root_order();

    // d_p = lcm of the denominators of the p-exponent across all inputs.
    // Primes are listed in order of first appearance across the inputs.
    std::map<Integer, Integer> dp;
    std::vector<Integer> primes;
    for (const auto& g : gammas)
        for (const auto& [p, e] : g.radical()) {
            auto it = dp.find(p);
            if (it == dp.end()) {
                dp[p] = e.den();
                primes.push_back(p);
            } else {
                it->second = int_lcm(it->second, e.den());
            }
        }

    for (const auto& p : primes) {
        Rational e(Integer(1), dp[p]);
        out.alphas.push_back(CycloRadical::prime_power(p, e));
    }

    for (std::size_t i = 0; i < gammas.size(); ++i) {
        ConstantDecomposition::PerInput pi;
        pi.mu = mus[i];
        pi.exps.resize(primes.size(), 0);
        for (std::size_t j = 0; j < primes.size(); ++j) {
            auto it = gammas[i].radical().find(primes[j]);
            if (it == gammas[i].radical().end()) continue;
            Rational u = it->second * Rational(dp[primes[j]]);
            if (!u.is_integer()) fail(ErrorKind::DomainError, "exponent clearing failed");
            pi.exps[j] = u.num().get_si();
        }
        out.per_input.push_back(std::move(pi));
    }
    return out;
}

}  // namespace prodcanon
