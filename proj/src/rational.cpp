#include "prodcanon/rational.hpp"

#include <ostream>

namespace prodcanon {

Rational Rational::parse(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            return Rational(Integer(text));
        }
        Integer n(text.substr(0, slash));
        Integer d(text.substr(slash + 1));
        return Rational(n, d);
    } catch (const std::invalid_argument&) {
        fail(ErrorKind::SyntaxError, "bad rational literal: " + text);
    }
}

Rational Rational::pow(long k) const {
    if (k == 0) return Rational(1);
    bool inv = k < 0;
    unsigned long e = inv ? static_cast<unsigned long>(-(k + 1)) + 1ul : static_cast<unsigned long>(k);
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), v_.get_num().get_mpz_t(), e);
    mpz_pow_ui(d.get_mpz_t(), v_.get_den().get_mpz_t(), e);
    Rational r(n, d);
    return inv ? r.inverse() : r;
}

std::string Rational::str() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Integer int_gcd(const Integer& a, const Integer& b) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

Integer int_lcm(const Integer& a, const Integer& b) {
    Integer l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

Integer int_fdiv(const Integer& a, const Integer& b) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

}  // namespace prodcanon
