#include "gcover/factor.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>

#include "gcover/ideal.hpp"

namespace gcover {

// ---------------------------------------------------------------- Z[y]

void zu_trim(ZUPoly& f)
{
    while (!f.empty() && f.back() == 0) f.pop_back();
}

int zu_degree(const ZUPoly& f) { return static_cast<int>(f.size()) - 1; }

ZUPoly zu_mul(const ZUPoly& a, const ZUPoly& b)
{
    if (a.empty() || b.empty()) return {};
    ZUPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    zu_trim(r);
    return r;
}

static Integer zu_content(const ZUPoly& f)
{
    Integer g = 0;
    for (const auto& c : f) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

ZUPoly zu_primitive(const ZUPoly& f)
{
    ZUPoly r = f;
    zu_trim(r);
    if (r.empty()) return r;
    Integer g = zu_content(r);
    if (r.back() < 0) g = -g;
    for (auto& c : r) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    return r;
}

static ZUPoly zu_derivative(const ZUPoly& f)
{
    ZUPoly r;
    for (size_t i = 1; i < f.size(); ++i) r.push_back(f[i] * static_cast<unsigned long>(i));
    zu_trim(r);
    return r;
}

// Exact division over Q; false if b does not divide a in Z[y].
static bool zu_divides(const ZUPoly& a, const ZUPoly& b, ZUPoly& q)
{
    if (b.empty()) return false;
    if (a.empty()) {
        q.clear();
        return true;
    }
    int da = zu_degree(a), db = zu_degree(b);
    if (da < db) return false;
    std::vector<Rational> r(a.begin(), a.end());
    std::vector<Rational> qq(da - db + 1);
    Rational lb(b.back());
    for (int i = da - db; i >= 0; --i) {
        Rational c = r[i + db] / lb;
        qq[i] = c;
        if (c == 0) continue;
        for (int j = 0; j <= db; ++j) r[i + j] -= c * b[j];
    }
    for (const auto& x : r)
        if (x != 0) return false;
    q.clear();
    for (const auto& c : qq) {
        if (c.get_den() != 1) return false;
        q.push_back(c.get_num());
    }
    zu_trim(q);
    return true;
}

// Primitive gcd over Z[y] via Euclid over Q.
static ZUPoly zu_gcd(const ZUPoly& a0, const ZUPoly& b0)
{
    std::vector<Rational> a(a0.begin(), a0.end()), b(b0.begin(), b0.end());
    auto trim = [](std::vector<Rational>& v) {
        while (!v.empty() && v.back() == 0) v.pop_back();
    };
    trim(a);
    trim(b);
    while (!b.empty()) {
        while (a.size() >= b.size() && !a.empty()) {
            Rational c = a.back() / b.back();
            size_t sh = a.size() - b.size();
            for (size_t j = 0; j < b.size(); ++j) a[sh + j] -= c * b[j];
            trim(a);
        }
        std::swap(a, b);
    }
    Integer l = 1;
    for (const auto& c : a) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    ZUPoly out;
    for (const auto& c : a) {
        Rational v = c * l;
        out.push_back(v.get_num());
    }
    return zu_primitive(out);
}

// ---------------------------------------------------------------- Z_p[y]

namespace {

using i64 = long;

struct ModP {
    i64 p;

    i64 norm(i64 a) const
    {
        a %= p;
        return a < 0 ? a + p : a;
    }
    i64 mul(i64 a, i64 b) const { return static_cast<i64>((__int128)a * b % p); }
    i64 powm(i64 a, i64 e) const
    {
        i64 r = 1;
        a = norm(a);
        while (e > 0) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    i64 inv(i64 a) const { return powm(a, p - 2); }
};

using PP = std::vector<i64>;

void ptrim(PP& f)
{
    while (!f.empty() && f.back() == 0) f.pop_back();
}

PP padd(const ModP& F, const PP& a, const PP& b)
{
    PP r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] = F.norm(r[i] + b[i]);
    ptrim(r);
    return r;
}

PP psub(const ModP& F, const PP& a, const PP& b)
{
    PP r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] = F.norm(r[i] - b[i]);
    ptrim(r);
    return r;
}

PP pmul(const ModP& F, const PP& a, const PP& b)
{
    if (a.empty() || b.empty()) return {};
    std::vector<unsigned __int128> acc(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) acc[i + j] += (unsigned __int128)a[i] * b[j];
    PP r(acc.size());
    for (size_t i = 0; i < acc.size(); ++i) r[i] = static_cast<i64>(acc[i] % (unsigned __int128)F.p);
    ptrim(r);
    return r;
}

void pdivmod(const ModP& F, const PP& a, const PP& b, PP& q, PP& r)
{
    r = a;
    ptrim(r);
    q.assign(r.size() >= b.size() ? r.size() - b.size() + 1 : 0, 0);
    i64 li = F.inv(b.back());
    while (r.size() >= b.size() && !r.empty()) {
        size_t sh = r.size() - b.size();
        i64 c = F.mul(r.back(), li);
        q[sh] = c;
        for (size_t j = 0; j < b.size(); ++j) r[sh + j] = F.norm(r[sh + j] - F.mul(c, b[j]));
        ptrim(r);
    }
    ptrim(q);
}

PP pmod(const ModP& F, const PP& a, const PP& b)
{
    PP q, r;
    pdivmod(F, a, b, q, r);
    return r;
}

PP pmonic(const ModP& F, const PP& a)
{
    if (a.empty()) return a;
    i64 li = F.inv(a.back());
    PP r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = F.mul(a[i], li);
    return r;
}

PP pgcd(const ModP& F, PP a, PP b)
{
    ptrim(a);
    ptrim(b);
    while (!b.empty()) {
        PP r = pmod(F, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return pmonic(F, a);
}

// s*a + t*b = 1 (a, b coprime)
void pext_gcd(const ModP& F, const PP& a, const PP& b, PP& s, PP& t)
{
    PP r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
    while (!r1.empty()) {
        PP q, r;
        pdivmod(F, r0, r1, q, r);
        PP s2 = psub(F, s0, pmul(F, q, s1));
        PP t2 = psub(F, t0, pmul(F, q, t1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    // r0 is a nonzero constant
    i64 ci = F.inv(r0[0]);
    s = pmul(F, s0, PP{ci});
    t = pmul(F, t0, PP{ci});
}

PP ppowmod(const ModP& F, PP base, const Integer& e, const PP& mod)
{
    PP r{1};
    base = pmod(F, base, mod);
    size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (size_t i = bits; i-- > 0;) {
        r = pmod(F, pmul(F, r, r), mod);
        if (mpz_tstbit(e.get_mpz_t(), i)) r = pmod(F, pmul(F, r, base), mod);
    }
    return r;
}

PP to_pp(const ModP& F, const ZUPoly& f)
{
    PP r(f.size());
    Integer pz(F.p);
    for (size_t i = 0; i < f.size(); ++i) {
        Integer m;
        mpz_mod(m.get_mpz_t(), f[i].get_mpz_t(), pz.get_mpz_t());
        r[i] = m.get_si();
    }
    ptrim(r);
    return r;
}

// Monic irreducible factors of a squarefree monic polynomial mod p (p odd).
std::vector<PP> factor_mod_p(const ModP& F, const PP& f0, std::mt19937_64& rng)
{
    std::vector<std::pair<PP, int>> ddf;
    PP f = f0;
    PP x{0, 1};
    PP h = x;
    for (int d = 1; 2 * d <= static_cast<int>(f.size()) - 1; ++d) {
        h = ppowmod(F, h, Integer(F.p), f);
        PP g = pgcd(F, psub(F, h, x), f);
        if (g.size() > 1) {
            ddf.push_back({g, d});
            PP q, r;
            pdivmod(F, f, g, q, r);
            f = q;
            h = pmod(F, h, f);
        }
    }
    if (f.size() > 1) ddf.push_back({pmonic(F, f), static_cast<int>(f.size()) - 1});

    std::vector<PP> out;
    std::function<void(const PP&, int)> edf = [&](const PP& g, int d) {
        int n = static_cast<int>(g.size()) - 1;
        if (n == d) {
            out.push_back(pmonic(F, g));
            return;
        }
        Integer e;
        mpz_ui_pow_ui(e.get_mpz_t(), F.p, d);
        e = (e - 1) / 2;
        std::uniform_int_distribution<i64> dist(0, F.p - 1);
        for (;;) {
            PP a(n);
            for (auto& c : a) c = dist(rng);
            ptrim(a);
            if (a.size() < 2) continue;
            PP b = psub(F, ppowmod(F, a, e, g), PP{1});
            PP hh = pgcd(F, b, g);
            int dh = static_cast<int>(hh.size()) - 1;
            if (dh > 0 && dh < n) {
                PP q, r;
                pdivmod(F, g, hh, q, r);
                edf(hh, d);
                edf(q, d);
                return;
            }
        }
    };
    for (auto& [g, d] : ddf) edf(g, d);
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------- Hensel lifting

ZUPoly zmod(const ZUPoly& f, const Integer& m)
{
    ZUPoly r(f.size());
    for (size_t i = 0; i < f.size(); ++i) mpz_mod(r[i].get_mpz_t(), f[i].get_mpz_t(), m.get_mpz_t());
    zu_trim(r);
    return r;
}

ZUPoly from_pp(const PP& f)
{
    ZUPoly r;
    for (auto c : f) r.push_back(Integer(static_cast<long>(c)));
    return r;
}

ZUPoly zsub(const ZUPoly& a, const ZUPoly& b)
{
    ZUPoly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    zu_trim(r);
    return r;
}

// Lift f ≡ g h (mod p), g monic, lc(h) = lc(f), to modulus p^k.
void hensel_pair(const ZUPoly& f, ZUPoly& g, ZUPoly& h, i64 p, int k)
{
    ModP F{p};
    PP s, t;
    pext_gcd(F, to_pp(F, g), to_pp(F, h), s, t);
    Integer m = p;
    Integer pz = p;
    for (int j = 1; j < k; ++j) {
        ZUPoly diff = zsub(f, zu_mul(g, h));
        for (auto& c : diff) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
        PP e = to_pp(F, diff);
        PP q, r;
        pdivmod(F, pmul(F, t, e), to_pp(F, g), q, r);
        PP dg = r;
        PP dh = padd(F, pmul(F, s, e), pmul(F, q, to_pp(F, h)));
        ZUPoly DG = from_pp(dg), DH = from_pp(dh);
        g.resize(std::max(g.size(), DG.size()), 0);
        h.resize(std::max(h.size(), DH.size()), 0);
        for (size_t i = 0; i < DG.size(); ++i) g[i] += m * DG[i];
        for (size_t i = 0; i < DH.size(); ++i) h[i] += m * DH[i];
        m *= pz;
        Integer lc_h = f.back();
        g = zmod(g, m);
        g.resize(f.size() - h.size() + 1, 0);
        g.back() = 1;
        ZUPoly hr = zmod(h, m);
        hr.resize(h.size(), 0);
        hr.back() = lc_h;
        h = hr;
    }
}

std::vector<ZUPoly> hensel_multi(const ZUPoly& f, const std::vector<PP>& facs, i64 p, int k, const Integer& pk)
{
    ModP F{p};
    if (facs.size() == 1) {
        Integer li;
        Integer lcm = f.back();
        mpz_mod(lcm.get_mpz_t(), lcm.get_mpz_t(), pk.get_mpz_t());
        mpz_invert(li.get_mpz_t(), lcm.get_mpz_t(), pk.get_mpz_t());
        ZUPoly r(f.size());
        for (size_t i = 0; i < f.size(); ++i) r[i] = f[i] * li;
        r = zmod(r, pk);
        r.resize(f.size(), 0);
        r.back() = 1;
        return {r};
    }
    size_t half = facs.size() / 2;
    std::vector<PP> A(facs.begin(), facs.begin() + half), B(facs.begin() + half, facs.end());
    PP ga{1}, hb{1};
    for (const auto& a : A) ga = pmul(F, ga, a);
    for (const auto& b : B) hb = pmul(F, hb, b);
    hb = pmul(F, hb, PP{F.norm(to_pp(F, ZUPoly{f.back()}).empty() ? 0 : to_pp(F, ZUPoly{f.back()})[0])});
    ZUPoly g = from_pp(ga), h = from_pp(hb);
    h.back() = f.back();
    hensel_pair(f, g, h, p, k);
    auto ra = hensel_multi(g, A, p, k, pk);
    auto rb = hensel_multi(h, B, p, k, pk);
    ra.insert(ra.end(), rb.begin(), rb.end());
    return ra;
}

ZUPoly symmetric(const ZUPoly& f, const Integer& m)
{
    ZUPoly r = zmod(f, m);
    Integer half = m / 2;
    for (auto& c : r)
        if (c > half) c -= m;
    zu_trim(r);
    return r;
}

bool is_prime_small(i64 n)
{
    if (n < 2) return false;
    for (i64 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// f primitive, squarefree, deg >= 1, positive lc
std::vector<ZUPoly> factor_squarefree(const ZUPoly& f)
{
    int n = zu_degree(f);
    if (n <= 1) return {f};
    // choose the prime with the fewest modular factors among a few good ones
    std::mt19937_64 rng(12345);
    i64 best_p = 0;
    std::vector<PP> best;
    int good = 0;
    ZUPoly df = zu_derivative(f);
    for (i64 p = 3; good < 5 && p < 100000; p += 2) {
        if (!is_prime_small(p)) continue;
        ModP F{p};
        PP fp = to_pp(F, f);
        if (static_cast<int>(fp.size()) - 1 != n) continue;
        if (pgcd(F, fp, to_pp(F, df)).size() != 1) continue;
        ++good;
        auto facs = factor_mod_p(F, pmonic(F, fp), rng);
        if (best_p == 0 || facs.size() < best.size()) {
            best_p = p;
            best = facs;
        }
        if (best.size() == 1) break;
    }
    if (best.size() <= 1) return {f};

    Integer maxc = 0;
    for (const auto& c : f) maxc = std::max(maxc, Integer(abs(c)));
    Integer bound = maxc * (n + 1);
    mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), n);
    bound *= abs(f.back());
    bound *= 2;
    int k = 1;
    Integer pk = best_p;
    while (pk <= bound) {
        pk *= best_p;
        ++k;
    }
    std::vector<ZUPoly> lifted = hensel_multi(f, best, best_p, k, pk);

    std::vector<ZUPoly> out;
    ZUPoly g = f;
    std::vector<ZUPoly> rest = lifted;
    size_t s = 1;
    while (2 * s <= rest.size()) {
        bool found = false;
        std::vector<int> sel(s);
        std::iota(sel.begin(), sel.end(), 0);
        const int r = static_cast<int>(rest.size());
        for (;;) {
            ZUPoly cand{g.back()};
            for (int i : sel) cand = zmod(zu_mul(cand, rest[i]), pk);
            cand = zu_primitive(symmetric(cand, pk));
            ZUPoly q;
            if (zu_degree(cand) > 0 && zu_divides(g, cand, q)) {
                out.push_back(cand);
                g = zu_primitive(q);
                std::vector<ZUPoly> nr;
                for (int i = 0; i < r; ++i)
                    if (std::find(sel.begin(), sel.end(), i) == sel.end()) nr.push_back(rest[i]);
                rest = std::move(nr);
                found = true;
                break;
            }
            // next combination
            int i = static_cast<int>(s) - 1;
            while (i >= 0 && sel[i] == r - static_cast<int>(s) + i) --i;
            if (i < 0) break;
            ++sel[i];
            for (size_t j = i + 1; j < s; ++j) sel[j] = sel[j - 1] + 1;
        }
        if (!found) ++s;
    }
    if (zu_degree(g) > 0) out.push_back(zu_primitive(g));
    return out;
}

}  // namespace

std::vector<std::pair<ZUPoly, int>> factor_zx(const ZUPoly& f0)
{
    ZUPoly f = zu_primitive(f0);
    std::vector<std::pair<ZUPoly, int>> out;
    if (f.empty()) return out;
    int low = 0;
    while (low < static_cast<int>(f.size()) && f[low] == 0) ++low;
    if (low > 0) {
        out.push_back({ZUPoly{0, 1}, low});
        f.erase(f.begin(), f.begin() + low);
    }
    // Yun squarefree decomposition
    std::vector<std::pair<ZUPoly, int>> sqf;
    if (zu_degree(f) > 0) {
        ZUPoly a = f;
        ZUPoly b = zu_derivative(a);
        ZUPoly c = zu_gcd(a, b);
        ZUPoly w, y;
        zu_divides(a, c, w);
        zu_divides(b, c, y);
        int i = 1;
        for (;;) {
            ZUPoly wd = zu_derivative(w);
            ZUPoly ymw = y;
            // y - w'
            ymw.resize(std::max(y.size(), wd.size()), 0);
            for (size_t j = 0; j < wd.size(); ++j) ymw[j] -= wd[j];
            zu_trim(ymw);
            if (ymw.empty()) {
                if (zu_degree(w) > 0) sqf.push_back({zu_primitive(w), i});
                break;
            }
            ZUPoly z = zu_gcd(w, ymw);
            if (zu_degree(z) > 0) sqf.push_back({z, i});
            ZUPoly nw, ny;
            zu_divides(w, z, nw);
            zu_divides(ymw, z, ny);
            w = nw;
            y = ny;
            ++i;
            if (zu_degree(w) <= 0) break;
        }
    }
    for (auto& [g, e] : sqf)
        for (auto& h : factor_squarefree(zu_primitive(g))) out.push_back({h, e});
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------- multivariate gcd

namespace {

// Coefficients of f as a polynomial in variable v (index k holds the coefficient of v^k).
std::vector<QPoly> coeffs_in(const QPoly& f, int v)
{
    int d = f.degree_in(v);
    std::vector<std::vector<Term<Rational>>> buckets(std::max(d, 0) + 1);
    for (const auto& t : f) {
        Monomial m = t.m;
        int e = m[v];
        m.set(v, 0);
        buckets[e].push_back({m, t.c});
    }
    std::vector<QPoly> out;
    for (auto& b : buckets) out.push_back(QPoly::from_terms(f.ring(), std::move(b)));
    return out;
}

QPoly lc_in(const QPoly& f, int v)
{
    int d = f.degree_in(v);
    std::vector<Term<Rational>> ts;
    for (const auto& t : f)
        if (t.m[v] == d) {
            Monomial m = t.m;
            m.set(v, 0);
            ts.push_back({m, t.c});
        }
    return QPoly::from_terms(f.ring(), std::move(ts));
}

QPoly exact_quo(const QPoly& a, const QPoly& b)
{
    QPoly q;
    if (!exact_divide(a, b, q)) throw std::logic_error("gcd: inexact division");
    return q;
}

}  // namespace

QPoly content_in(const QPoly& f, int v)
{
    QPoly g(f.ring());
    for (const auto& c : coeffs_in(f, v)) {
        if (c.is_zero()) continue;
        g = poly_gcd(g, c);
        if (g.is_constant()) break;
    }
    return g;
}

namespace {

// Dense univariate polynomials over Q, index k holds x^k.
using UQ = std::vector<Rational>;

void uq_trim(UQ& f)
{
    while (!f.empty() && f.back() == 0) f.pop_back();
}

UQ uq_mul(const UQ& a, const UQ& b)
{
    if (a.empty() || b.empty()) return {};
    UQ c(a.size() + b.size() - 1, Rational(0));
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0)
            for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    uq_trim(c);
    return c;
}

UQ uq_sub(const UQ& a, const UQ& b)
{
    UQ c(std::max(a.size(), b.size()), Rational(0));
    for (size_t i = 0; i < a.size(); ++i) c[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) c[i] -= b[i];
    uq_trim(c);
    return c;
}

void uq_divmod(const UQ& a, const UQ& b, UQ& q, UQ& r)
{
    r = a;
    uq_trim(r);
    q.clear();
    if (r.size() < b.size()) return;
    q.assign(r.size() - b.size() + 1, Rational(0));
    const Rational li = 1 / b.back();
    while (!r.empty() && r.size() >= b.size()) {
        size_t k = r.size() - b.size();
        Rational c = r.back() * li;
        q[k] = c;
        for (size_t i = 0; i < b.size(); ++i) r[i + k] -= c * b[i];
        r.pop_back();
        uq_trim(r);
    }
    uq_trim(q);
}

// s*a + t*b = 1 for coprime a, b.
void uq_ext_gcd(const UQ& a, const UQ& b, UQ& s, UQ& t)
{
    UQ r0 = a, r1 = b, s0{Rational(1)}, s1, t0, t1{Rational(1)};
    while (!r1.empty()) {
        UQ q, r;
        uq_divmod(r0, r1, q, r);
        UQ sn = uq_sub(s0, uq_mul(q, s1)), tn = uq_sub(t0, uq_mul(q, t1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(sn);
        t0 = std::move(t1);
        t1 = std::move(tn);
    }
    if (r0.size() != 1) throw std::logic_error("factor: images not coprime");
    Rational ci = 1 / r0[0];
    for (auto& c : s0) c *= ci;
    for (auto& c : t0) c *= ci;
    s = s0;
    t = t0;
}

UQ to_uq(const QPoly& f, int x)
{
    UQ u(std::max(f.degree_in(x), 0) + 1, Rational(0));
    for (const auto& t : f) u[t.m[x]] += t.c;
    uq_trim(u);
    return u;
}

QPoly from_uq(const UQ& u, int x, const RingPtr& r)
{
    std::vector<Term<Rational>> ts;
    for (size_t k = 0; k < u.size(); ++k)
        if (u[k] != 0) ts.push_back({Monomial::var(x, static_cast<int>(k)), u[k]});
    return QPoly::from_terms(r, std::move(ts));
}

// p(y + a) for the variables flagged in `has`.
QPoly shift(const QPoly& p, const std::vector<Rational>& a, const std::vector<bool>& has)
{
    const RingPtr& r = p.ring();
    const int n = r->nvars();
    std::vector<QPoly> base(n);
    for (int i = 0; i < n; ++i)
        if (has[i]) base[i] = qvar(r, i) + qconst(r, a[i]);
    QPoly out(r);
    for (const auto& t : p) {
        Monomial keep = t.m;
        QPoly acc = qconst(r, t.c);
        for (int i = 0; i < n; ++i)
            if (has[i] && t.m[i]) {
                keep.set(i, 0);
                acc = acc * pow(base[i], t.m[i]);
            }
        out += acc.mul_term(keep, Rational(1));
    }
    return out;
}

int ydegree(const Monomial& m, int x, int n)
{
    int d = 0;
    for (int i = 0; i < n; ++i)
        if (i != x) d += m[i];
    return d;
}

// Lift s(x, a) = g0 * h0 to a true factor of s with the leading coefficient trick;
// returns a primitive factor or zero.
QPoly lift_split(const QPoly& s, int x, const std::vector<Rational>& a, const std::vector<bool>& has,
                 const UQ& g0in, const UQ& h0in)
{
    const RingPtr& r = s.ring();
    const int n = r->nvars();
    const QPoly L = lc_in(s, x);
    const Rational La = evaluate(L, a);
    const QPoly Lsh = shift(L, a, has);
    const QPoly sp = shift(L * s, a, has);
    UQ G0 = g0in, H0 = h0in;
    {
        Rational cg = La / G0.back(), ch = La / H0.back();
        for (auto& c : G0) c *= cg;
        for (auto& c : H0) c *= ch;
    }
    const int dg = static_cast<int>(G0.size()) - 1, dh = static_cast<int>(H0.size()) - 1;
    UQ sg, th;
    uq_ext_gcd(G0, H0, sg, th);
    UQ G0low = G0, H0low = H0;
    G0low.back() = 0;
    H0low.back() = 0;
    uq_trim(G0low);
    uq_trim(H0low);
    QPoly G = from_uq(G0low, x, r) + Lsh.mul_term(Monomial::var(x, dg), Rational(1));
    QPoly H = from_uq(H0low, x, r) + Lsh.mul_term(Monomial::var(x, dh), Rational(1));
    int N = 0;
    for (const auto& t : sp) N = std::max(N, ydegree(t.m, x, n));
    for (int k = 1; k <= N; ++k) {
        QPoly e = sp - G * H;
        if (e.is_zero()) break;
        std::map<Monomial, UQ, std::function<bool(const Monomial&, const Monomial&)>> comp(
            [](const Monomial& p, const Monomial& q) { return p.e < q.e; });
        for (const auto& t : e) {
            int d = ydegree(t.m, x, n);
            if (d < k) return QPoly(r);
            if (d > k) continue;
            Monomial m = t.m;
            int ex = m[x];
            m.set(x, 0);
            UQ& u = comp[m];
            if (static_cast<int>(u.size()) <= ex) u.resize(ex + 1, Rational(0));
            u[ex] += t.c;
        }
        for (auto& [m, ek] : comp) {
            uq_trim(ek);
            if (ek.empty()) continue;
            if (static_cast<int>(ek.size()) > dg + dh) return QPoly(r);
            UQ q, A, B, rem;
            uq_divmod(uq_mul(ek, th), G0, q, A);
            uq_divmod(uq_sub(ek, uq_mul(A, H0)), G0, B, rem);
            if (!rem.empty()) return QPoly(r);
            G += from_uq(A, x, r).mul_term(m, Rational(1));
            H += from_uq(B, x, r).mul_term(m, Rational(1));
        }
    }
    if (!(sp - G * H).is_zero()) return QPoly(r);
    std::vector<Rational> neg(a.size());
    for (size_t i = 0; i < a.size(); ++i) neg[i] = -a[i];
    QPoly Gb = shift(G, neg, has);
    QPoly g = make_primitive(exact_quo(Gb, content_in(Gb, x)));
    QPoly q;
    if (g.is_constant() || !exact_divide(s, g, q)) return QPoly(r);
    return g;
}

}  // namespace

namespace {

UQ uq_gcd(UQ a, UQ b)
{
    while (!b.empty()) {
        UQ q, r;
        uq_divmod(a, b, q, r);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        Rational li = 1 / a.back();
        for (auto& c : a) c *= li;
    }
    return a;
}

// gcd of a and b, both primitive in x with positive x-degree.
QPoly gcd_primitive(const QPoly& a, const QPoly& b, int x)
{
    const RingPtr& r = a.ring();
    const int n = r->nvars();
    std::vector<bool> has(n, false);
    for (int v : support_vars(a * b))
        if (v != x) has[v] = true;
    const QPoly la = lc_in(a, x), lb = lc_in(b, x);
    std::mt19937_64 rng(0x9cd + static_cast<unsigned>(a.degree_in(x) + 31 * b.degree_in(x)));
    for (int attempt = 0; attempt < 60; ++attempt) {
        const long bound = 3 + 2 * attempt;
        std::uniform_int_distribution<long> dist(-bound, bound);
        std::vector<Rational> pt(n, Rational(0));
        for (int i = 0; i < n; ++i)
            if (has[i]) pt[i] = Rational(dist(rng));
        if (evaluate(la, pt) == 0 || evaluate(lb, pt) == 0) continue;
        UQ ai = to_uq(substitute(a, pt, has), x), bi = to_uq(substitute(b, pt, has), x);
        UQ g0 = uq_gcd(ai, bi);
        const int d = static_cast<int>(g0.size()) - 1;
        if (d == 0) return qone(r);
        QPoly q;
        if (d == a.degree_in(x)) {
            if (exact_divide(b, a, q)) return make_primitive(a);
            continue;
        }
        if (d == b.degree_in(x)) {
            if (exact_divide(a, b, q)) return make_primitive(b);
            continue;
        }
        // lift from a + k b, whose image cofactor is coprime to g0
        for (int k = 0; k < 4; ++k) {
            QPoly s = a + b.scaled(Rational(k));
            if (s.degree_in(x) != std::max(a.degree_in(x), b.degree_in(x)) || evaluate(lc_in(s, x), pt) == 0) continue;
            UQ si = to_uq(substitute(s, pt, has), x);
            UQ h0, rem;
            uq_divmod(si, g0, h0, rem);
            if (!rem.empty() || uq_gcd(g0, h0).size() != 1) continue;
            QPoly g = lift_split(s, x, pt, has, g0, h0);
            if (g.is_zero() || g.degree_in(x) != d) break;
            if (exact_divide(a, g, q) && exact_divide(b, g, q)) return g;
            break;
        }
    }
    throw std::runtime_error("gcd: no lucky evaluation point");
}

}  // namespace

QPoly poly_gcd(const QPoly& a, const QPoly& b)
{
    if (a.is_zero()) return make_primitive(b);
    if (b.is_zero()) return make_primitive(a);
    const RingPtr& r = a.ring();
    if (a.is_constant() || b.is_constant()) return qone(r);
    // a variable present in only one argument is removed through contents
    int x = -1;
    for (int v : support_vars(a)) {
        if (b.degree_in(v) <= 0) return poly_gcd(content_in(a, v), b);
        if (x < 0 || std::min(a.degree_in(v), b.degree_in(v)) < std::min(a.degree_in(x), b.degree_in(x))) x = v;
    }
    for (int v : support_vars(b))
        if (a.degree_in(v) <= 0) return poly_gcd(a, content_in(b, v));
    QPoly ca = content_in(a, x), cb = content_in(b, x);
    QPoly c = poly_gcd(ca, cb);
    QPoly pa = make_primitive(exact_quo(a, ca)), pb = make_primitive(exact_quo(b, cb));
    QPoly g = gcd_primitive(pa, pb, x);
    return make_primitive(c * g);
}

QPoly squarefree_part(const QPoly& f)
{
    if (f.is_zero() || f.is_constant()) return make_primitive(f);
    QPoly g = f;
    for (int v : support_vars(f)) {
        g = poly_gcd(g, derivative(f, v));
        if (g.is_constant()) break;
    }
    return make_primitive(exact_quo(f, g));
}

// ---------------------------------------------------------------- multivariate factor

namespace {

void factor_rec(const QPoly& s, std::vector<QPoly>& out);

// s squarefree, primitive in x of x-degree >= 2, at least two variables.
void factor_main(QPoly s, int x, std::vector<QPoly>& out)
{
    const RingPtr& r = s.ring();
    const int n = r->nvars();
    const int dx = s.degree_in(x);
    std::vector<bool> has(n, false);
    for (int v : support_vars(s))
        if (v != x) has[v] = true;
    const QPoly L = lc_in(s, x);
    std::mt19937_64 rng(0x5eed + static_cast<unsigned>(dx));
    std::vector<Rational> best_a;
    std::vector<ZUPoly> best;
    int found = 0;
    for (int attempt = 0; attempt < 200 && found < 3; ++attempt) {
        const long bound = 2 + attempt / 8;
        std::uniform_int_distribution<long> dist(-bound, bound);
        std::vector<Rational> a(n, Rational(0));
        for (int i = 0; i < n; ++i)
            if (has[i]) a[i] = Rational(dist(rng));
        if (evaluate(L, a) == 0) continue;
        QPoly img = substitute(s, a, has);
        UQ u = to_uq(img, x);
        if (static_cast<int>(u.size()) - 1 != dx) continue;
        Integer den = 1;
        for (const auto& c : u) den = lcm(den, Integer(c.get_den()));
        ZUPoly z(u.size());
        for (size_t i = 0; i < u.size(); ++i) z[i] = Integer(u[i] * den);
        auto fz = factor_zx(z);
        bool sq = true;
        for (const auto& [g, e] : fz)
            if (e != 1) sq = false;
        if (!sq) continue;
        ++found;
        if (best.empty() || fz.size() < best.size()) {
            best.clear();
            for (auto& [g, e] : fz) best.push_back(g);
            best_a = a;
        }
        if (best.size() == 1) break;
    }
    if (found == 0) throw std::runtime_error("factor: no admissible evaluation point");
    if (best.size() == 1) {
        out.push_back(make_primitive(s));
        return;
    }
    std::vector<UQ> facs;
    for (const auto& g : best) {
        UQ u;
        for (const auto& c : g) u.push_back(Rational(c));
        facs.push_back(u);
    }
    size_t size = 1;
    while (2 * size <= facs.size()) {
        bool split = false;
        std::vector<size_t> idx(size);
        for (size_t i = 0; i < size; ++i) idx[i] = i;
        for (;;) {
            if (!(2 * size == facs.size() && idx[0] != 0)) {
                UQ g0{Rational(1)}, h0{Rational(1)};
                std::vector<char> in(facs.size(), 0);
                for (size_t i : idx) in[i] = 1;
                for (size_t i = 0; i < facs.size(); ++i) (in[i] ? g0 : h0) = uq_mul(in[i] ? g0 : h0, facs[i]);
                QPoly g = lift_split(s, x, best_a, has, g0, h0);
                if (!g.is_zero()) {
                    out.push_back(g);
                    s = make_primitive(exact_quo(s, g));
                    std::vector<UQ> rest;
                    for (size_t i = 0; i < facs.size(); ++i)
                        if (!in[i]) rest.push_back(facs[i]);
                    facs = std::move(rest);
                    split = true;
                    break;
                }
            }
            // next combination
            int i = static_cast<int>(size) - 1;
            while (i >= 0 && idx[i] == facs.size() - size + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (size_t j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
        }
        if (!split) ++size;
    }
    if (!s.is_constant()) out.push_back(make_primitive(s));
}

void factor_rec(const QPoly& s0, std::vector<QPoly>& out)
{
    QPoly s = make_primitive(s0);
    if (s.is_constant()) return;
    const RingPtr& r = s.ring();
    auto vars = support_vars(s);
    if (vars.size() == 1) {
        int v = vars[0];
        ZUPoly u(s.degree_in(v) + 1, 0);
        for (const auto& t : s) u[t.m[v]] = t.c.get_num();
        for (auto& [g, e] : factor_zx(u)) {
            std::vector<Term<Rational>> ts;
            for (size_t k = 0; k < g.size(); ++k)
                if (g[k] != 0) ts.push_back({Monomial::var(v, static_cast<int>(k)), Rational(g[k])});
            out.push_back(make_primitive(QPoly::from_terms(r, std::move(ts))));
        }
        return;
    }
    int x = vars[0];
    for (int v : vars)
        if (s.degree_in(v) < s.degree_in(x)) x = v;
    QPoly c = content_in(s, x);
    if (!c.is_constant()) {
        factor_rec(c, out);
        factor_rec(exact_quo(s, c), out);
        return;
    }
    if (s.degree_in(x) == 1) {
        out.push_back(s);
        return;
    }
    factor_main(s, x, out);
}

// s squarefree, primitive, no monomial factor. Irreducible factors over Q.
std::vector<QPoly> factor_sqfree_multi(const QPoly& s)
{
    std::vector<QPoly> out;
    factor_rec(s, out);
    return out;
}

}  // namespace

QPoly Factorization::expand(const RingPtr& r) const
{
    QPoly acc = qconst(r, unit);
    for (const auto& [f, e] : factors) acc = acc * pow(f, e);
    return acc;
}

Factorization factor(const QPoly& f)
{
    if (f.is_zero()) throw std::domain_error("factor of zero");
    Factorization out;
    const RingPtr r = f.ring();
    QPoly s = make_primitive(f);
    // monomial content
    Monomial mono = s.terms().front().m;
    for (const auto& t : s) mono = Monomial::gcd(mono, t.m);
    for (int v = 0; v < r->nvars(); ++v)
        if (mono[v]) out.factors.push_back({qvar(r, v), mono[v]});
    s = s.div_monomial(mono);
    if (!s.is_constant()) {
        QPoly sq = squarefree_part(s);
        for (auto& g : factor_sqfree_multi(sq)) {
            int mult = 0;
            QPoly q;
            while (exact_divide(s, g, q)) {
                s = q;
                ++mult;
            }
            out.factors.push_back({g, mult});
        }
    }
    std::sort(out.factors.begin(), out.factors.end(),
              [](const auto& a, const auto& b) { return canonical_less(a.first, b.first); });
    QPoly prod = qone(r);
    for (const auto& [g, e] : out.factors) prod = prod * pow(g, e);
    out.unit = f.lc() / prod.lc();
    return out;
}

bool is_irreducible(const QPoly& f)
{
    if (f.is_zero() || f.is_constant()) return false;
    auto fz = factor(f);
    return fz.factors.size() == 1 && fz.factors[0].second == 1;
}

std::vector<Rational> rational_roots(const QPoly& f, int var)
{
    std::vector<Rational> roots;
    if (f.is_zero()) return roots;
    for (auto& [g, e] : factor(f).factors) {
        if (g.degree_in(var) != 1 || g.total_degree() != 1) continue;
        // g = a*var + b
        Rational a = 0, b = 0;
        for (const auto& t : g)
            if (t.m.is_one())
                b = t.c;
            else
                a = t.c;
        roots.push_back(-b / a);
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

}  // namespace gcover
