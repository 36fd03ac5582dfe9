#include <gtest/gtest.h>

#include <random>

#include "gcover/parse.hpp"

using namespace gcover;

namespace {

RingPtr xy_ring(OrderKind k) { return make_ring({"x", "y"}, k); }

Monomial mono(std::initializer_list<int> e)
{
    Monomial m;
    int i = 0;
    for (int v : e) m.set(i++, v);
    return m;
}

}  // namespace

TEST(Compare, GrevlexSquareBeatsMixed)
{
    auto r = xy_ring(OrderKind::Grevlex);
    EXPECT_GT(r->order.cmp(mono({2, 0}), mono({1, 1})), 0);
}

TEST(Compare, Reflexive)
{
    for (auto k : {OrderKind::Lex, OrderKind::Grlex, OrderKind::Grevlex}) {
        auto r = xy_ring(k);
        EXPECT_EQ(r->order.cmp(mono({3, 1}), mono({3, 1})), 0);
    }
}

TEST(Compare, ProductBlockDominance)
{
    // x-block then u-block
    auto ord = TermOrder::blocks({{0, 1, OrderKind::Grevlex}, {1, 1, OrderKind::Grevlex}});
    EXPECT_GT(ord.cmp(mono({1, 0}), mono({0, 5})), 0);
}

TEST(Compare, GrevlexVsGrlexDiffer)
{
    // x*z^2 vs y^3 in three variables: grlex has xz^2 > y^3, grevlex has y^3 > xz^2
    auto gl = TermOrder::simple(OrderKind::Grlex, 3);
    auto gr = TermOrder::simple(OrderKind::Grevlex, 3);
    EXPECT_GT(gl.cmp(mono({1, 0, 2}), mono({0, 3, 0})), 0);
    EXPECT_LT(gr.cmp(mono({1, 0, 2}), mono({0, 3, 0})), 0);
}

TEST(Compare, MultiplicativeAndOneMinimal)
{
    std::mt19937_64 rng(1);
    std::uniform_int_distribution<int> d(0, 4);
    std::vector<TermOrder> orders = {TermOrder::simple(OrderKind::Lex, 3), TermOrder::simple(OrderKind::Grlex, 3),
                                     TermOrder::simple(OrderKind::Grevlex, 3),
                                     TermOrder::blocks({{0, 2, OrderKind::Lex}, {2, 1, OrderKind::Grevlex}})};
    for (const auto& ord : orders) {
        for (int it = 0; it < 1000; ++it) {
            Monomial s = mono({d(rng), d(rng), d(rng)});
            Monomial t = mono({d(rng), d(rng), d(rng)});
            Monomial u = mono({d(rng), d(rng), d(rng)});
            int c = ord.cmp(t, u);
            EXPECT_EQ(ord.cmp(s * t, s * u), c);
            EXPECT_GE(ord.cmp(t, Monomial{}), 0);
        }
    }
}

TEST(LeadingData, ParamCoefficientUnderBlockOrder)
{
    // joint ring x | u1 u2
    auto r = make_ring({"x", "u1", "u2"},
                       TermOrder::blocks({{0, 1, OrderKind::Grevlex}, {1, 2, OrderKind::Grevlex}}));
    QPoly p = parse_poly("u1*x^2 + u2*x", r);
    EXPECT_EQ(p.lt(), mono({2, 1, 0}));
    EXPECT_EQ(p.lc(), 1);
}

TEST(LeadingData, Constant)
{
    auto r = xy_ring(OrderKind::Grevlex);
    QPoly p = parse_poly("7", r);
    EXPECT_TRUE(p.lt().is_one());
    EXPECT_EQ(p.lc(), 7);
}

TEST(LeadingData, ZeroPolynomialThrows)
{
    auto r = xy_ring(OrderKind::Grevlex);
    QPoly z(r);
    EXPECT_THROW(z.lt(), std::domain_error);
    EXPECT_THROW(z.lc(), std::domain_error);
}

TEST(Arith, DifferenceOfSquares)
{
    auto r = xy_ring(OrderKind::Grevlex);
    EXPECT_EQ(parse_poly("(x+1)*(x-1)", r), parse_poly("x^2-1", r));
}

TEST(Arith, AdditiveInverse)
{
    auto r = xy_ring(OrderKind::Grevlex);
    QPoly p = parse_poly("3/2*x*y - y^2 + 5", r);
    EXPECT_TRUE((p + (-p)).is_zero());
}

TEST(Arith, ExactDivideByTerm)
{
    auto r = make_ring({"x", "u1"}, OrderKind::Grevlex);
    QPoly p = parse_poly("u1*x^2 + u1*x", r);
    EXPECT_EQ(p.div_monomial(mono({1, 0})), parse_poly("u1*x + u1", r));
    EXPECT_THROW(p.div_monomial(mono({2, 0})), std::domain_error);
}

TEST(Arith, MismatchedRingsRejected)
{
    auto a = xy_ring(OrderKind::Grevlex);
    auto b = xy_ring(OrderKind::Lex);
    EXPECT_THROW(parse_poly("x", a) + parse_poly("y", b), std::invalid_argument);
}

TEST(Parse, ReportsColumn)
{
    auto r = xy_ring(OrderKind::Grevlex);
    try {
        parse_poly("x + z", r, 3);
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 3);
        EXPECT_EQ(e.column(), 5);
    }
    EXPECT_THROW(parse_poly("x / y", r), ParseError);
    EXPECT_THROW(parse_poly("(x + 1", r), ParseError);
}

TEST(Parse, RationalCoefficients)
{
    auto r = make_ring({"x", "u1", "u2"}, OrderKind::Grevlex);
    QPoly p = parse_poly("u1*x^2 + (3/2)*u2*x - 1", r);
    EXPECT_EQ(to_string(p), "x^2*u1 + 3/2*x*u2 - 1");
}

TEST(Parse, RoundTripRandom)
{
    std::mt19937_64 rng(7);
    for (auto k : {OrderKind::Lex, OrderKind::Grlex, OrderKind::Grevlex}) {
        auto r = make_ring({"x", "y", "u"}, k);
        for (int it = 0; it < 200; ++it) {
            std::vector<Term<Rational>> ts;
            int n = rng() % 6;
            for (int i = 0; i < n; ++i) {
                Monomial m = mono({int(rng() % 4), int(rng() % 3), int(rng() % 3)});
                Rational c(long(rng() % 41) - 20, long(rng() % 7) + 1);
                c.canonicalize();
                ts.push_back({m, c});
            }
            QPoly p = QPoly::from_terms(r, ts);
            EXPECT_EQ(parse_poly(to_string(p), r), p) << to_string(p);
        }
    }
}

TEST(Properties, SupportAndLeadingTermOfProduct)
{
    std::mt19937_64 rng(11);
    auto r = make_ring({"x", "y"}, OrderKind::Grevlex);
    auto rnd = [&]() {
        std::vector<Term<Rational>> ts;
        int n = 1 + rng() % 4;
        for (int i = 0; i < n; ++i)
            ts.push_back({mono({int(rng() % 4), int(rng() % 4)}), Rational(long(rng() % 9) - 4)});
        return QPoly::from_terms(r, ts);
    };
    for (int it = 0; it < 300; ++it) {
        QPoly p = rnd(), q = rnd();
        QPoly s = p + q;
        for (const auto& t : s) EXPECT_TRUE(p.coef_ptr(t.m) || q.coef_ptr(t.m));
        if (!p.is_zero() && !q.is_zero()) EXPECT_EQ((p * q).lt(), p.lt() * q.lt());
    }
}
