#include "gcover/polynomial.hpp"

#include <set>
#include <sstream>

namespace gcover {

Rational inv(const Rational& a)
{
    if (is_zero(a)) throw std::domain_error("division by zero");
    Rational r;
    mpq_inv(r.get_mpq_t(), a.get_mpq_t());
    return r;
}

std::string to_string(const Rational& a) { return a.get_str(); }

Rational parse_rational(std::string_view s)
{
    Rational r;
    if (r.set_str(std::string(s), 10) != 0) throw std::invalid_argument("bad rational '" + std::string(s) + "'");
    if (r.get_den() == 0) throw std::invalid_argument("zero denominator");
    r.canonicalize();
    return r;
}

QPoly qvar(const RingPtr& r, int i) { return QPoly::monomial(r, Monomial::var(i), Rational(1)); }
QPoly qconst(const RingPtr& r, const Rational& c) { return QPoly::constant(r, c); }
QPoly qone(const RingPtr& r) { return QPoly::constant(r, Rational(1)); }

QPoly make_monic(const QPoly& p)
{
    if (p.is_zero() || p.lc() == 1) return p;
    return p.scaled(inv(p.lc()));
}

QPoly make_primitive(const QPoly& p)
{
    if (p.is_zero()) return p;
    Integer l = 1, g = 0;
    for (const auto& t : p) {
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.c.get_den_mpz_t());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.c.get_num_mpz_t());
    }
    Rational s(l, g);
    if (p.lc() < 0) s = -s;
    return p.scaled(s);
}

Rational evaluate(const QPoly& p, const std::vector<Rational>& point)
{
    Rational acc = 0;
    for (const auto& t : p) {
        Rational v = t.c;
        for (int i = 0; i < p.ring()->nvars(); ++i) {
            int e = t.m[i];
            if (!e) continue;
            Rational b = point.at(i);
            Rational pw;
            mpz_pow_ui(pw.get_num_mpz_t(), b.get_num_mpz_t(), e);
            mpz_pow_ui(pw.get_den_mpz_t(), b.get_den_mpz_t(), e);
            v *= pw;
        }
        acc += v;
    }
    return acc;
}

QPoly derivative(const QPoly& p, int var)
{
    std::vector<Term<Rational>> ts;
    for (const auto& t : p) {
        int e = t.m[var];
        if (!e) continue;
        Monomial m = t.m;
        m.set(var, e - 1);
        ts.push_back({m, Rational(t.c * e)});
    }
    return QPoly::from_terms(p.ring(), std::move(ts));
}

QPoly pow(const QPoly& p, int k)
{
    QPoly r = qone(p.ring());
    QPoly b = p;
    while (k > 0) {
        if (k & 1) r = r * b;
        k >>= 1;
        if (k) b = b * b;
    }
    return r;
}

QPoly substitute(const QPoly& p, const std::vector<Rational>& vals, const std::vector<bool>& has)
{
    std::vector<Term<Rational>> ts;
    ts.reserve(p.size());
    const int n = p.ring()->nvars();
    for (const auto& t : p) {
        Rational c = t.c;
        Monomial m = t.m;
        for (int i = 0; i < n; ++i) {
            if (!has[i] || !m[i]) continue;
            Rational pw;
            mpz_pow_ui(pw.get_num_mpz_t(), vals[i].get_num_mpz_t(), m[i]);
            mpz_pow_ui(pw.get_den_mpz_t(), vals[i].get_den_mpz_t(), m[i]);
            c *= pw;
            m.set(i, 0);
        }
        ts.push_back({m, c});
    }
    return QPoly::from_terms(p.ring(), std::move(ts));
}

QPoly remap(const QPoly& p, const RingPtr& to, const std::vector<int>& map)
{
    std::vector<Term<Rational>> ts;
    ts.reserve(p.size());
    const int n = p.ring() ? p.ring()->nvars() : 0;
    for (const auto& t : p) {
        Monomial m;
        for (int i = 0; i < n; ++i) {
            if (!t.m[i]) continue;
            if (map[i] < 0) throw std::invalid_argument("remap: variable has no image");
            m.set(map[i], m[map[i]] + t.m[i]);
        }
        ts.push_back({m, t.c});
    }
    return QPoly::from_terms(to, std::move(ts));
}

QPoly reorder(const QPoly& p, const RingPtr& to)
{
    std::vector<Term<Rational>> ts(p.terms().begin(), p.terms().end());
    return QPoly::from_terms(to, std::move(ts));
}

std::vector<int> support_vars(const QPoly& p)
{
    std::vector<int> out;
    if (!p.ring()) return out;
    for (int i = 0; i < p.ring()->nvars(); ++i)
        for (const auto& t : p)
            if (t.m[i]) {
                out.push_back(i);
                break;
            }
    return out;
}

std::string to_string(const QPoly& p)
{
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : p) {
        Rational c = t.c;
        bool neg = c < 0;
        if (neg) c = -c;
        if (first)
            os << (neg ? "-" : "");
        else
            os << (neg ? " - " : " + ");
        first = false;
        if (t.m.is_one()) {
            os << c.get_str();
        } else {
            if (c != 1) os << c.get_str() << "*";
            os << monomial_string(t.m, *p.ring());
        }
    }
    return os.str();
}

bool canonical_less(const QPoly& a, const QPoly& b)
{
    std::string sa = to_string(a), sb = to_string(b);
    if (sa.size() != sb.size()) return sa.size() < sb.size();
    return sa < sb;
}

}  // namespace gcover
