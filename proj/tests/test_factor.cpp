#include <gtest/gtest.h>

#include <random>

#include "gcover/factor.hpp"
#include "gcover/ideal.hpp"
#include "gcover/parse.hpp"

using namespace gcover;

namespace {

RingPtr uring(int n)
{
    std::vector<std::string> names;
    for (int i = 1; i <= n; ++i) names.push_back("u" + std::to_string(i));
    return make_ring(names, OrderKind::Grevlex);
}

// Exhaustive search for a nontrivial divisor with small integer coefficients and support
// inside the Newton box of f (brute force oracle, tiny inputs only).
bool has_small_divisor(const QPoly& f, int coef_bound)
{
    const RingPtr& r = f.ring();
    std::vector<Monomial> box;
    std::vector<int> degs;
    for (int v = 0; v < r->nvars(); ++v) degs.push_back(std::max(0, f.degree_in(v)));
    std::vector<int> e(r->nvars(), 0);
    for (;;) {
        Monomial m;
        for (int v = 0; v < r->nvars(); ++v) m.set(v, e[v]);
        if (2 * m.degree() <= f.total_degree()) box.push_back(m);
        int i = 0;
        while (i < r->nvars() && e[i] == degs[i]) e[i++] = 0;
        if (i == r->nvars()) break;
        ++e[i];
    }
    const int span = 2 * coef_bound + 1;
    long total = 1;
    for (size_t i = 0; i < box.size(); ++i) {
        total *= span;
        if (total > 2000000) return false;  // outside the oracle's budget
    }
    for (long code = 0; code < total; ++code) {
        std::vector<Term<Rational>> ts;
        long c = code;
        for (const auto& m : box) {
            int v = int(c % span) - coef_bound;
            c /= span;
            if (v) ts.push_back({m, Rational(v)});
        }
        QPoly g = QPoly::from_terms(r, ts);
        if (g.is_zero() || g.is_constant()) continue;
        QPoly q;
        if (exact_divide(f, g, q) && !q.is_constant()) return true;
    }
    return false;
}

}  // namespace

TEST(SquarefreePart, Examples)
{
    auto r = uring(1);
    EXPECT_EQ(squarefree_part(parse_poly("(u1-1)^2*(u1+1)", r)), parse_poly("u1^2-1", r));
    EXPECT_EQ(squarefree_part(parse_poly("u1^2-1", r)), parse_poly("u1^2-1", r));
    EXPECT_EQ(squarefree_part(parse_poly("u1^3", r)), parse_poly("u1", r));
}

TEST(Factor, DifferenceOfSquaresSplits)
{
    auto r = uring(2);
    auto f = factor(parse_poly("u2^2-1", r));
    ASSERT_EQ(f.factors.size(), 2u);
    EXPECT_EQ(f.expand(r), parse_poly("u2^2-1", r));
    for (auto& [g, e] : f.factors) EXPECT_EQ(g.total_degree(), 1);
}

TEST(Factor, QuadricIsIrreducible)
{
    auto r = uring(4);
    QPoly q = parse_poly("u2*u3 - u4*u1", r);
    EXPECT_TRUE(is_irreducible(q));
    EXPECT_FALSE(has_small_divisor(q, 1));
}

TEST(Factor, ContentAndRepeatedFactor)
{
    auto r = uring(1);
    auto f = factor(parse_poly("6*u1^2", r));
    EXPECT_EQ(f.unit, 6);
    ASSERT_EQ(f.factors.size(), 1u);
    EXPECT_EQ(f.factors[0].second, 2);
}

TEST(Factor, UnivariateZassenhaus)
{
    ZUPoly f = {Integer(-1), 0, 0, 0, 0, 0, 0, 0, Integer(1)};  // y^8 - 1
    auto fz = factor_zx(f);
    ASSERT_EQ(fz.size(), 4u);  // (y-1)(y+1)(y^2+1)(y^4+1)
    ZUPoly prod{1};
    for (auto& [g, e] : fz) prod = zu_mul(prod, g);
    EXPECT_EQ(prod, f);
    // Swinnerton-Dyer style: x^4 - 10x^2 + 1 is irreducible but splits mod every prime
    ZUPoly sd = {Integer(1), 0, Integer(-10), 0, Integer(1)};
    EXPECT_EQ(factor_zx(sd).size(), 1u);
}

TEST(Factor, RandomProductsReexpand)
{
    std::mt19937_64 rng(3);
    auto r = uring(3);
    auto rnd = [&]() {
        std::vector<Term<Rational>> ts;
        int n = 1 + rng() % 3;
        for (int i = 0; i < n; ++i) {
            Monomial m;
            m.set(rng() % 3, 1 + rng() % 2);
            if (rng() % 2) m.set(rng() % 3, 1);
            ts.push_back({m, Rational(long(rng() % 7) - 3)});
        }
        ts.push_back({Monomial{}, Rational(long(rng() % 5) + 1)});
        return QPoly::from_terms(r, ts);
    };
    for (int it = 0; it < 40; ++it) {
        QPoly a = rnd(), b = rnd(), c = rnd();
        QPoly f = a * b * c;
        if (f.is_zero()) continue;
        auto fz = factor(f);
        EXPECT_EQ(fz.expand(r), f);
        for (auto& [g, e] : fz.factors) {
            if (g.total_degree() <= 2 && support_vars(g).size() <= 2) EXPECT_FALSE(has_small_divisor(g, 2)) << to_string(g);
        }
    }
}

TEST(Gcd, Multivariate)
{
    auto r = uring(3);
    QPoly a = parse_poly("(u1*u2 - u3)*(u1 + 2*u3)^2", r);
    QPoly b = parse_poly("(u1*u2 - u3)*(u1 - u3)*(u1 + 2*u3)", r);
    EXPECT_EQ(poly_gcd(a, b), make_primitive(parse_poly("(u1*u2 - u3)*(u1 + 2*u3)", r)));
    EXPECT_TRUE(poly_gcd(parse_poly("u1+1", r), parse_poly("u2", r)).is_constant());
}

TEST(RationalRoots, Quadratic)
{
    auto r = uring(1);
    auto roots = rational_roots(parse_poly("6*u1^2 - u1 - 1", r), 0);
    ASSERT_EQ(roots.size(), 2u);
    EXPECT_EQ(roots[0], Rational(-1, 3));
    EXPECT_EQ(roots[1], Rational(1, 2));
    EXPECT_TRUE(rational_roots(parse_poly("u1^2+1", r), 0).empty());
}

TEST(Factor, ThreeMinorsOfTwoByThree)
{
    auto r = uring(6);
    QPoly m1 = parse_poly("u1*u4-u2*u3", r), m2 = parse_poly("u1*u6-u3*u5", r), m3 = parse_poly("u2*u6-u4*u5", r);
    auto fz = factor(m1 * m2 * m3);
    ASSERT_EQ(fz.factors.size(), 3u);
    EXPECT_EQ(fz.expand(r), m1 * m2 * m3);
    for (auto& [g, e] : fz.factors) {
        EXPECT_EQ(e, 1);
        EXPECT_EQ(g.total_degree(), 2);
    }
}

TEST(Factor, MixedMultiplicitiesSixVariables)
{
    auto r = uring(6);
    QPoly f = parse_poly("(u1*u2+u3*u4+u5*u6)^2*(u1+u2+u3+u4+u5+u6+1)*(u1^2*u6-3)", r);
    auto fz = factor(f);
    ASSERT_EQ(fz.factors.size(), 3u);
    EXPECT_EQ(fz.expand(r), f);
    int mult_sum = 0;
    for (auto& [g, e] : fz.factors) mult_sum += e;
    EXPECT_EQ(mult_sum, 4);
}

TEST(Gcd, RandomCommonFactor)
{
    std::mt19937_64 rng(11);
    auto r = uring(4);
    auto rnd = [&]() {
        std::vector<Term<Rational>> ts;
        int n = 2 + rng() % 3;
        for (int i = 0; i < n; ++i) {
            Monomial m;
            m.set(rng() % 4, 1 + rng() % 2);
            m.set(rng() % 4, rng() % 2);
            ts.push_back({m, Rational(long(rng() % 9) - 4)});
        }
        ts.push_back({Monomial{}, Rational(long(rng() % 5) + 1)});
        return QPoly::from_terms(r, ts);
    };
    for (int it = 0; it < 30; ++it) {
        QPoly a = rnd(), b = rnd(), c = rnd();
        QPoly g = poly_gcd(a * c, b * c);
        QPoly q;
        EXPECT_TRUE(exact_divide(a * c, g, q));
        EXPECT_TRUE(exact_divide(b * c, g, q));
        EXPECT_TRUE(exact_divide(g, make_primitive(c), q)) << to_string(g) << " vs " << to_string(c);
        // cofactors share nothing further
        QPoly ca, cb;
        exact_divide(a * c, g, ca);
        exact_divide(b * c, g, cb);
        EXPECT_TRUE(poly_gcd(ca, cb).is_constant());
    }
}
