#include <gtest/gtest.h>

#include <random>

#include "gcover/decompose.hpp"
#include "gcover/parse.hpp"

using namespace gcover;

namespace {

RingPtr uring(int n)
{
    std::vector<std::string> names;
    for (int i = 1; i <= n; ++i) names.push_back("u" + std::to_string(i));
    return make_ring(names, OrderKind::Grevlex);
}

Gens gens(const RingPtr& r, std::initializer_list<const char*> src)
{
    Gens g;
    for (const char* s : src) g.push_back(parse_poly(s, r));
    return g;
}

std::vector<std::string> keys(const std::vector<PrimeComponent>& ps)
{
    std::vector<std::string> k;
    for (const auto& p : ps) k.push_back(ideal_key(p.gb));
    std::sort(k.begin(), k.end());
    return k;
}

std::vector<std::string> keys_of(const RingPtr& r, std::vector<std::vector<const char*>> ideals)
{
    std::vector<std::string> k;
    for (auto& i : ideals) {
        Gens g;
        for (const char* s : i) g.push_back(parse_poly(s, r));
        k.push_back(ideal_key(groebner(g, r)));
    }
    std::sort(k.begin(), k.end());
    return k;
}

// √I = ∩ p and the p are pairwise incomparable.
void check_decomposition(const Gens& I, const RingPtr& r, const std::vector<PrimeComponent>& ps)
{
    for (const auto& p : ps) EXPECT_TRUE(ideal_subset(I, p.gb)) << ideal_key(p.gb);
    EXPECT_TRUE(radical_subset(union_ideal(ps, r), I, r));
    for (size_t i = 0; i < ps.size(); ++i)
        for (size_t j = 0; j < ps.size(); ++j)
            if (i != j) EXPECT_FALSE(ideal_subset(ps[i].gb, ps[j].gb));
}

}  // namespace

TEST(MinimalPrimes, FactorThenSplit)
{
    auto r = uring(2);
    Gens I = gens(r, {"u1*(u2^2-1)"});
    auto ps = minimal_primes(I, r);
    EXPECT_EQ(keys(ps), keys_of(r, {{"u1"}, {"u2-1"}, {"u2+1"}}));
    for (const auto& p : ps) EXPECT_TRUE(p.certified);
    check_decomposition(I, r, ps);
}

TEST(MinimalPrimes, RadicalOfNonReducedIdeal)
{
    auto r = uring(2);
    Gens I = gens(r, {"u1^2", "u1*u2"});
    auto ps = minimal_primes(I, r);
    EXPECT_EQ(keys(ps), keys_of(r, {{"u1"}}));
    check_decomposition(I, r, ps);
}

TEST(MinimalPrimes, ZeroAndUnit)
{
    auto r = uring(1);
    auto ps = minimal_primes({}, r);
    ASSERT_EQ(ps.size(), 1u);
    EXPECT_TRUE(ps[0].gb.empty());
    EXPECT_TRUE(ps[0].certified);
    EXPECT_TRUE(minimal_primes(gens(r, {"u1", "u1-1"}), r).empty());
}

TEST(MinimalPrimes, LinesAndPlanes)
{
    auto r = uring(3);
    Gens I = gens(r, {"u1*u2", "u1*u3"});
    auto ps = minimal_primes(I, r);
    EXPECT_EQ(keys(ps), keys_of(r, {{"u1"}, {"u2", "u3"}}));
    check_decomposition(I, r, ps);
}

TEST(MinimalPrimes, TwistedCubicIsCertifiedPrime)
{
    auto r = uring(3);
    Gens I = gens(r, {"u2-u1^2", "u3-u1^3"});
    auto ps = minimal_primes(I, r);
    ASSERT_EQ(ps.size(), 1u);
    EXPECT_TRUE(ps[0].certified);
    // projective-style presentation, not generated by a linear substitution
    Gens J = gens(r, {"u1*u3-u2^2", "u1^2*u2-u3", "u1^3-u2"});
    auto qs = minimal_primes(J, r);
    check_decomposition(J, r, qs);
    for (const auto& q : qs) EXPECT_TRUE(q.certified) << ideal_key(q.gb);
}

TEST(MinimalPrimes, TwoPointsOverQ)
{
    auto r = uring(2);
    Gens I = gens(r, {"u1^2-2", "u2-u1"});  // irreducible: one closed point of Spec
    auto ps = minimal_primes(I, r);
    ASSERT_EQ(ps.size(), 1u);
    EXPECT_TRUE(ps[0].certified);
    Gens J = gens(r, {"u1^2-1", "u2^2-1"});
    auto qs = minimal_primes(J, r);
    EXPECT_EQ(qs.size(), 4u);
    check_decomposition(J, r, qs);
}

TEST(MinimalPrimes, DeterminantalIdealTwoByThree)
{
    auto r = uring(6);
    Gens I = gens(r, {"u1*u4-u2*u3", "u1*u6-u3*u5", "u2*u6-u4*u5"});
    auto ps = minimal_primes(I, r);
    ASSERT_EQ(ps.size(), 1u);
    check_decomposition(I, r, ps);
    EXPECT_TRUE(ps[0].certified);
}

TEST(MinimalPrimes, EmbeddedComponentDropped)
{
    auto r = uring(2);
    Gens I = gens(r, {"u1^2", "u1*u2^2"});
    auto ps = minimal_primes(I, r);
    EXPECT_EQ(keys(ps), keys_of(r, {{"u1"}}));
}

TEST(MinimalPrimes, SingularCurveAndPoint)
{
    auto r = uring(2);
    // cusp union an isolated point off it
    Gens I = intersection(gens(r, {"u2^2-u1^3"}), gens(r, {"u1-1", "u2-2"}), r);
    auto ps = minimal_primes(I, r);
    EXPECT_EQ(keys(ps), keys_of(r, {{"u2^2-u1^3"}, {"u1-1", "u2-2"}}));
    check_decomposition(I, r, ps);
}

TEST(SetOps, EmptinessAndClosure)
{
    auto r = uring(2);
    EXPECT_TRUE(ConstructibleSet::locally_closed(r, gens(r, {"u1"}), gens(r, {"u1"})).is_empty());
    auto C = ConstructibleSet::locally_closed(r, gens(r, {"u1*(u2^2-1)"}), gens(r, {"u1"}));
    EXPECT_EQ(keys(C.closure()), keys_of(r, {{"u2-1"}, {"u2+1"}}));
    auto S = ConstructibleSet::whole(r);
    auto lo = largest_open_inside(S, S);
    EXPECT_TRUE(lo.equals(S));
}

TEST(SetOps, LargestOpenInside)
{
    auto r = uring(2);
    // Z = V(u1), L = Spec minus the point (0,1): the open part of Z inside L is Z minus that point
    auto Z = ConstructibleSet::closed_set(r, gens(r, {"u1"}));
    auto L = ConstructibleSet::whole(r).minus(ConstructibleSet::closed_set(r, gens(r, {"u1", "u2-1"})));
    auto lo = largest_open_inside(Z, L);
    EXPECT_TRUE(lo.equals(ConstructibleSet::locally_closed(r, gens(r, {"u1"}), gens(r, {"u2-1"}))));
    // L meeting Z only in a point: nothing open of Z lies inside
    auto L2 = ConstructibleSet::closed_set(r, gens(r, {"u1", "u2"}));
    EXPECT_TRUE(largest_open_inside(Z, L2).is_empty());
}

TEST(SetOps, LocallyClosedCertificate)
{
    auto r = uring(2);
    auto M = ConstructibleSet::locally_closed(r, gens(r, {"u1"}), gens(r, {"u2"}));
    EXPECT_TRUE(is_locally_closed(M));
    // plane minus a line, plus a point on that line: constructible, not locally closed
    auto N = ConstructibleSet::locally_closed(r, {}, gens(r, {"u1"}))
                 .unite(ConstructibleSet::closed_set(r, gens(r, {"u1", "u2"})));
    EXPECT_FALSE(is_locally_closed(N));
}

// Set operations agree with pointwise semantics on a grid and at generic points.
TEST(SetOps, PointSamplingOracle)
{
    auto r = uring(3);
    std::vector<Gens> pool = {gens(r, {"u1"}),           gens(r, {"u2-1"}),         gens(r, {"u2+1", "u3"}),
                              gens(r, {"u1*u2"}),        gens(r, {"u1-u2"}),        gens(r, {"u1^2-u3"}),
                              gens(r, {"u3"}),           gens(r, {"u1", "u2"}),     gens(r, {"u2^2-1"}),
                              {},                        gens(r, {"u1+u2+u3-1"}),   gens(r, {"u1*u3-u2"})};
    std::vector<std::vector<Rational>> grid;
    for (int a = -2; a <= 2; ++a)
        for (int b = -2; b <= 2; ++b)
            for (int c = -2; c <= 2; ++c) grid.push_back({Rational(a), Rational(b), Rational(c)});
    ASSERT_GE(grid.size(), 50u);
    std::mt19937_64 rng(7);
    auto rnd_set = [&]() {
        ConstructibleSet s(r);
        int k = 1 + rng() % 2;
        for (int i = 0; i < k; ++i) {
            const Gens& a = pool[rng() % pool.size()];
            Gens b = pool[rng() % pool.size()];
            if (b.empty()) b = {qone(r)};
            s.add_piece(a, b);
        }
        return s;
    };
    auto gen_in = [&](const ConstructibleSet& s, const Gens& q) {
        for (const auto& p : s.pieces())
            if (ideal_subset(p.closed, q) && !ideal_subset(p.open, q)) return true;
        return false;
    };
    std::vector<Gens> primes_pool;
    for (const auto& g : pool) primes_pool.push_back(groebner(g, r));
    for (int it = 0; it < 25; ++it) {
        ConstructibleSet A = rnd_set(), B = rnd_set();
        ConstructibleSet U = A.unite(B), D = A.minus(B), X = A.intersect(B);
        auto cl = A.closure();
        ConstructibleSet K = from_primes(r, cl);
        for (const auto& pt : grid) {
            bool a = A.contains_point(pt), b = B.contains_point(pt);
            EXPECT_EQ(U.contains_point(pt), a || b);
            EXPECT_EQ(D.contains_point(pt), a && !b);
            EXPECT_EQ(X.contains_point(pt), a && b);
            if (a) EXPECT_TRUE(K.contains_point(pt));
        }
        for (const auto& q : primes_pool) {
            if (q.empty() || minimal_primes(q, r).size() != 1) continue;
            bool a = gen_in(A, q), b = gen_in(B, q);
            EXPECT_EQ(gen_in(D, q), a && !b) << ideal_key(q);
            EXPECT_EQ(gen_in(U, q), a || b) << ideal_key(q);
        }
        // closure idempotence
        EXPECT_EQ(keys(K.closure()), keys(cl));
        EXPECT_TRUE(A.subset_of(K));
    }
}
