#pragma once

#include <algorithm>
#include <set>
#include <tuple>
#include <vector>

#include "gcover/polynomial.hpp"

namespace gcover {

template <class C>
struct DivisionResult {
    std::vector<Poly<C>> quotients;
    Poly<C> remainder;
};

// Full division: f = sum q_i g_i + r, no term of r divisible by any lt(g_i).
// Coefficients must form a field (uses inv).
template <class C>
DivisionResult<C> divide(const Poly<C>& f, const std::vector<Poly<C>>& G)
{
    DivisionResult<C> out;
    out.quotients.assign(G.size(), Poly<C>(f.ring()));
    out.remainder = Poly<C>(f.ring());
    Poly<C> p = f;
    std::vector<C> lcinv;
    lcinv.reserve(G.size());
    for (const auto& g : G) lcinv.push_back(inv(g.lc()));
    auto& rt = out.remainder.mutable_terms();
    while (!p.is_zero()) {
        const Monomial t = p.lt();
        size_t k = 0;
        while (k < G.size() && !G[k].lt().divides(t)) ++k;
        if (k == G.size()) {
            rt.push_back(p.terms().front());
            p.mutable_terms().erase(p.mutable_terms().begin());
            continue;
        }
        C c = p.lc() * lcinv[k];
        Monomial m = t / G[k].lt();
        out.quotients[k] += Poly<C>::monomial(f.ring(), m, c);
        p = p.sub_mul(c, m, G[k]);
    }
    return out;
}

namespace detail {

// Reduce p (and its shadow) completely by G; G entries monic.
template <class C>
void reduce_full(Poly<C>& p, Poly<C>* shadow, const std::vector<Poly<C>>& G,
                 const std::vector<Poly<C>>* Gshadow, size_t skip = size_t(-1))
{
    Poly<C> r(p.ring());
    auto& rt = r.mutable_terms();
    while (!p.is_zero()) {
        const Monomial t = p.lt();
        size_t k = 0;
        for (; k < G.size(); ++k)
            if (k != skip && !G[k].is_zero() && G[k].lt().divides(t)) break;
        if (k == G.size()) {
            rt.push_back(p.terms().front());
            p.mutable_terms().erase(p.mutable_terms().begin());
            continue;
        }
        C c = p.lc();
        Monomial m = t / G[k].lt();
        p = p.sub_mul(c, m, G[k]);
        if (shadow) *shadow = shadow->sub_mul(c, m, (*Gshadow)[k]);
    }
    p = std::move(r);
}

}  // namespace detail

template <class C>
Poly<C> normal_form(const Poly<C>& f, const std::vector<Poly<C>>& G)
{
    std::vector<Poly<C>> monic;
    monic.reserve(G.size());
    for (const auto& g : G) monic.push_back(g.scaled(inv(g.lc())));
    Poly<C> p = f;
    detail::reduce_full<C>(p, nullptr, monic, nullptr);
    return p;
}

struct GBStats {
    long pairs_total = 0;
    long pairs_coprime = 0;
    long pairs_chain = 0;
    long zero_reductions = 0;
};

// Reduced Groebner basis; `shadows`, when non-null, is carried through every linear
// combination (shadows[i] belongs to gens[i]) and returned aligned with the result.
template <class C>
std::vector<Poly<C>> buchberger(const std::vector<Poly<C>>& gens, std::vector<Poly<C>>* shadows = nullptr,
                                GBStats* stats = nullptr)
{
    const bool track = shadows != nullptr;
    std::vector<Poly<C>> G, S;
    RingPtr ring;
    for (size_t i = 0; i < gens.size(); ++i) {
        if (gens[i].is_zero()) continue;
        ring = gens[i].ring();
        C li = inv(gens[i].lc());
        G.push_back(gens[i].scaled(li));
        S.push_back(track ? (*shadows)[i].scaled(li) : Poly<C>());
    }
    if (G.empty()) {
        if (track) shadows->clear();
        return {};
    }
    const TermOrder& ord = ring->order;

    struct Pair {
        int deg;
        Monomial lcm;
        size_t i, j;
    };
    auto pair_less = [&ord](const Pair& a, const Pair& b) {
        if (a.deg != b.deg) return a.deg < b.deg;
        int c = ord.cmp(a.lcm, b.lcm);
        if (c) return c < 0;
        return std::tie(a.i, a.j) < std::tie(b.i, b.j);
    };
    std::set<Pair, decltype(pair_less)> queue(pair_less);
    std::vector<std::vector<char>> pending;

    auto add_pairs_for = [&](size_t k) {
        pending.resize(G.size());
        for (auto& row : pending) row.resize(G.size(), 0);
        for (size_t i = 0; i < k; ++i) {
            if (G[i].is_zero()) continue;
            Monomial l = Monomial::lcm(G[i].lt(), G[k].lt());
            queue.insert(Pair{l.degree(), l, i, k});
            pending[i][k] = pending[k][i] = 1;
        }
    };
    for (size_t k = 0; k < G.size(); ++k) add_pairs_for(k);

    while (!queue.empty()) {
        Pair pr = *queue.begin();
        queue.erase(queue.begin());
        pending[pr.i][pr.j] = pending[pr.j][pr.i] = 0;
        if (stats) ++stats->pairs_total;
        const Poly<C>& a = G[pr.i];
        const Poly<C>& b = G[pr.j];
        if (Monomial::coprime(a.lt(), b.lt())) {
            if (stats) ++stats->pairs_coprime;
            continue;
        }
        bool chain = false;
        for (size_t k = 0; k < G.size() && !chain; ++k) {
            if (k == pr.i || k == pr.j || G[k].is_zero()) continue;
            if (!G[k].lt().divides(pr.lcm)) continue;
            if (!pending[pr.i][k] && !pending[pr.j][k]) chain = true;
        }
        if (chain) {
            if (stats) ++stats->pairs_chain;
            continue;
        }
        Monomial ma = pr.lcm / a.lt(), mb = pr.lcm / b.lt();
        C one = a.lc();
        Poly<C> s = a.mul_term(ma, one) - b.mul_term(mb, one);
        Poly<C> sh;
        if (track) sh = S[pr.i].mul_term(ma, one) - S[pr.j].mul_term(mb, one);
        detail::reduce_full<C>(s, track ? &sh : nullptr, G, &S);
        if (s.is_zero()) {
            if (stats) ++stats->zero_reductions;
            continue;
        }
        C li = inv(s.lc());
        G.push_back(s.scaled(li));
        S.push_back(track ? sh.scaled(li) : Poly<C>());
        add_pairs_for(G.size() - 1);
    }

    // minimalize: drop elements whose lt is divisible by an earlier-kept or another lt
    std::vector<char> keep(G.size(), 1);
    for (size_t i = 0; i < G.size(); ++i) {
        for (size_t j = 0; j < G.size() && keep[i]; ++j) {
            if (i == j || !keep[j]) continue;
            if (G[j].lt().divides(G[i].lt()) && (G[j].lt() != G[i].lt() || j < i)) keep[i] = 0;
        }
    }
    std::vector<Poly<C>> M, MS;
    for (size_t i = 0; i < G.size(); ++i)
        if (keep[i]) {
            M.push_back(G[i]);
            MS.push_back(S[i]);
        }
    // tail-reduce each element against the others; heads survive since lt's are pairwise non-dividing
    for (size_t i = 0; i < M.size(); ++i)
        detail::reduce_full<C>(M[i], track ? &MS[i] : nullptr, M, &MS, i);
    std::vector<size_t> idx(M.size());
    for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](size_t x, size_t y) { return ord.cmp(M[x].lt(), M[y].lt()) > 0; });
    std::vector<Poly<C>> out;
    std::vector<Poly<C>> outS;
    for (size_t k : idx) {
        out.push_back(M[k]);
        outS.push_back(MS[k]);
    }
    if (track) *shadows = std::move(outS);
    return out;
}

// Element-wise identity of two reduced bases (same order assumed).
template <class C>
bool same_basis(const std::vector<Poly<C>>& a, const std::vector<Poly<C>>& b)
{
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return false;
    return true;
}

// Minimal generators of the monomial ideal spanned by the leading terms of a basis.
template <class C>
std::vector<Monomial> minimal_leading_terms(const std::vector<Poly<C>>& G)
{
    std::vector<Monomial> lts;
    for (const auto& g : G)
        if (!g.is_zero()) lts.push_back(g.lt());
    std::vector<Monomial> out;
    for (size_t i = 0; i < lts.size(); ++i) {
        bool redundant = false;
        for (size_t j = 0; j < lts.size() && !redundant; ++j) {
            if (i == j) continue;
            if (lts[j].divides(lts[i]) && (lts[j] != lts[i] || j < i)) redundant = true;
        }
        if (!redundant) out.push_back(lts[i]);
    }
    return out;
}

}  // namespace gcover
