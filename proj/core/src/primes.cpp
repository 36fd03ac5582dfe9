#include <algorithm>
#include <bit>
#include <deque>
#include <set>

#include "gcover/decompose.hpp"
#include "gcover/factor.hpp"

namespace gcover {

std::vector<std::string> ideal_strings(const Gens& gb)
{
    std::vector<std::string> out;
    for (const auto& g : gb) out.push_back(to_string(g));
    std::sort(out.begin(), out.end(), [](const std::string& a, const std::string& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return out;
}

std::string ideal_key(const Gens& gb)
{
    std::string k = "<";
    bool first = true;
    for (const auto& s : ideal_strings(gb)) {
        if (!first) k += ", ";
        k += s;
        first = false;
    }
    return k + ">";
}

namespace {

Gens with(const Gens& a, const QPoly& f)
{
    Gens g = a;
    g.push_back(f);
    return g;
}

// Largest set of variables (as a mask) free of every leading term's support.
std::vector<char> independent_set(const Gens& gb, const RingPtr& ring)
{
    const int n = ring->nvars();
    std::vector<int> sv;
    std::vector<char> used(n, 0);
    for (const auto& g : gb)
        for (const auto& t : g)
            for (int i = 0; i < n; ++i)
                if (t.m[i]) used[i] = 1;
    for (int i = 0; i < n; ++i)
        if (used[i]) sv.push_back(i);
    std::vector<uint32_t> lt_masks;
    for (const auto& g : gb) {
        uint32_t m = 0;
        for (size_t j = 0; j < sv.size(); ++j)
            if (g.lt()[sv[j]]) m |= 1u << j;
        lt_masks.push_back(m);
    }
    const int s = static_cast<int>(sv.size());
    uint32_t best = 0;
    int best_size = -1;
    if (s <= 20) {
        for (uint32_t mask = 0; mask < (1u << s); ++mask) {
            int c = std::popcount(mask);
            if (c <= best_size) continue;
            bool ok = true;
            for (uint32_t lm : lt_masks)
                if ((lm & ~mask) == 0) {
                    ok = false;
                    break;
                }
            if (ok) {
                best = mask;
                best_size = c;
            }
        }
    } else {
        for (int j = 0; j < s; ++j) {
            uint32_t m = best | (1u << j);
            bool ok = true;
            for (uint32_t lm : lt_masks)
                if ((lm & ~m) == 0) ok = false;
            if (ok) best = m;
        }
    }
    std::vector<char> inU(n, 1);
    for (int j = 0; j < s; ++j)
        if (!(best >> j & 1u)) inU[sv[j]] = 0;
    return inU;
}

struct ShapeOutcome {
    enum Kind { Certified, Split, Unknown } kind = Unknown;
    std::vector<Gens> parts;   // for Split
    std::vector<QPoly> lcs;    // leading coefficients seen, splitting candidates
};

// Primality over the fraction field of an independent set U, then descent by saturation.
ShapeOutcome localized_shape_test(const Gens& gb, const RingPtr& ring)
{
    ShapeOutcome out;
    const int n = ring->nvars();
    std::vector<char> inU = independent_set(gb, ring);
    std::vector<int> W, U;
    for (int i = 0; i < n; ++i) (inU[i] ? U : W).push_back(i);
    const int k = static_cast<int>(W.size());
    if (k == 0) return out;
    for (int li = 0; li < k; ++li) {
        const int wl = W[li];
        std::vector<int> perm;
        for (int w : W)
            if (w != wl) perm.push_back(w);
        perm.push_back(wl);
        for (int u : U) perm.push_back(u);
        std::vector<int> to(n), back(n);
        std::vector<std::string> names;
        for (int j = 0; j < n; ++j) {
            to[perm[j]] = j;
            back[j] = perm[j];
            names.push_back(ring->names[perm[j]]);
        }
        std::vector<OrderBlock> blocks{OrderBlock{0, k, OrderKind::Lex}};
        if (n > k) blocks.push_back(OrderBlock{k, n - k, OrderKind::Grevlex});
        RingPtr br = make_ring(names, TermOrder::blocks(blocks));
        Gens g2;
        for (const auto& g : gb) g2.push_back(remap(g, br, to));
        Gens bg = groebner(g2);

        auto wpart = [&](const Monomial& m) {
            Monomial w;
            for (int j = 0; j < k; ++j) w.set(j, m[j]);
            return w;
        };
        struct Elem {
            Monomial w;
            QPoly lcw;
            size_t idx;
        };
        std::vector<Elem> elems;
        for (size_t i = 0; i < bg.size(); ++i) {
            Monomial w = wpart(bg[i].lt());
            std::vector<Term<Rational>> ts;
            for (const auto& t : bg[i])
                if (wpart(t.m) == w) ts.push_back({t.m / w, t.c});
            elems.push_back({w, remap(QPoly::from_terms(br, ts), ring, back), i});
        }
        std::vector<Elem> minimal;
        for (size_t i = 0; i < elems.size(); ++i) {
            bool red = false;
            for (size_t j = 0; j < elems.size() && !red; ++j) {
                if (i == j || !elems[j].w.divides(elems[i].w)) continue;
                if (elems[j].w != elems[i].w || j < i) red = true;
            }
            if (!red) minimal.push_back(elems[i]);
        }
        for (const auto& e : minimal)
            if (!e.lcw.is_constant()) out.lcs.push_back(e.lcw);
        if (static_cast<int>(minimal.size()) != k) continue;
        bool shape = true;
        const Elem* hel = nullptr;
        std::vector<char> seen(k, 0);
        for (const auto& e : minimal) {
            int var = -1, cnt = 0;
            for (int j = 0; j < k; ++j)
                if (e.w[j]) {
                    var = j;
                    ++cnt;
                }
            if (cnt != 1 || seen[var]) {
                shape = false;
                break;
            }
            seen[var] = 1;
            if (var == k - 1)
                hel = &e;
            else if (e.w[var] != 1)
                shape = false;
        }
        if (!shape || !hel) continue;
        QPoly hp = remap(bg[hel->idx], ring, back);
        QPoly c = content_in(hp, wl);
        if (hp.degree_in(wl) > 1) {
            QPoly pp;
            exact_divide(hp, c, pp);
            auto fz = factor(pp);
            if (fz.factors.size() > 1 || fz.factors[0].second > 1) {
                out.kind = ShapeOutcome::Split;
                if (!c.is_constant()) out.parts.push_back(with(gb, c));
                for (const auto& [f, e] : fz.factors) out.parts.push_back(with(gb, f));
                return out;
            }
        }
        QPoly h = qone(ring);
        for (const auto& e : minimal) h = h * e.lcw;
        if (h.is_constant()) {
            out.kind = ShapeOutcome::Certified;
            return out;
        }
        Gens sat = saturation(gb, h, ring);
        if (ideal_subset(sat, gb)) {
            out.kind = ShapeOutcome::Certified;
            return out;
        }
        out.kind = ShapeOutcome::Split;
        out.parts = {sat, with(gb, h)};
        return out;
    }
    return out;
}

std::vector<PrimeComponent> raw_primes(const Gens& I, const RingPtr& ring);

}  // namespace

std::vector<PrimeComponent> minimize_primes(std::vector<PrimeComponent> raw)
{
    std::vector<PrimeComponent> uniq;
    std::set<std::string> keys;
    std::sort(raw.begin(), raw.end(), [](const auto& a, const auto& b) { return a.certified > b.certified; });
    for (auto& p : raw)
        if (keys.insert(ideal_key(p.gb)).second) uniq.push_back(std::move(p));
    std::vector<PrimeComponent> out;
    for (size_t i = 0; i < uniq.size(); ++i) {
        bool redundant = false;
        for (size_t j = 0; j < uniq.size() && !redundant; ++j)
            if (i != j && ideal_subset(uniq[j].gb, uniq[i].gb)) redundant = true;  // p_j ⊊ p_i (keys differ)
        if (!redundant) out.push_back(uniq[i]);
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        auto ka = ideal_key(a.gb), kb = ideal_key(b.gb);
        if (ka.size() != kb.size()) return ka.size() < kb.size();
        return ka < kb;
    });
    return out;
}

namespace {

std::vector<PrimeComponent> raw_primes(const Gens& I, const RingPtr& ring)
{
    std::vector<PrimeComponent> raw;
    std::deque<Gens> work{I};
    std::set<std::string> seen;
    while (!work.empty()) {
        Gens G = groebner(work.front(), ring);
        work.pop_front();
        if (is_unit(G)) continue;
        if (!seen.insert(ideal_key(G)).second) continue;
        if (G.empty()) {
            raw.push_back({G, true});
            continue;
        }
        // split on a reducible generator
        bool split = false;
        for (const auto& g : G) {
            if (g.is_constant()) continue;
            auto fz = factor(g);
            if (fz.factors.size() > 1 || fz.factors[0].second > 1) {
                for (const auto& [f, e] : fz.factors) work.push_back(with(G, f));
                split = true;
                break;
            }
        }
        if (split) continue;
        // elements w - r with a variable as leading term eliminate w
        Gens lin, rest;
        for (const auto& g : G) (g.lt().degree() == 1 ? lin : rest).push_back(g);
        if (!lin.empty()) {
            if (rest.empty()) {
                raw.push_back({G, true});
            } else {
                for (auto& c : minimal_primes(rest, ring)) {
                    Gens merged = c.gb;
                    merged.insert(merged.end(), lin.begin(), lin.end());
                    raw.push_back({groebner(merged, ring), c.certified});
                }
            }
            continue;
        }
        if (G.size() == 1) {
            raw.push_back({G, true});
            continue;
        }
        ShapeOutcome so = localized_shape_test(G, ring);
        if (so.kind == ShapeOutcome::Certified) {
            raw.push_back({G, true});
            continue;
        }
        if (so.kind == ShapeOutcome::Split) {
            for (auto& p : so.parts) work.push_back(std::move(p));
            continue;
        }
        // zero divisors among variables and leading coefficients
        std::vector<QPoly> cands;
        for (int v : [&] {
                 std::set<int> s;
                 for (const auto& g : G)
                     for (int x : support_vars(g)) s.insert(x);
                 return std::vector<int>(s.begin(), s.end());
             }())
            cands.push_back(qvar(ring, v));
        for (const auto& l : so.lcs)
            for (const auto& [f, e] : factor(l).factors) cands.push_back(f);
        for (const auto& f : cands) {
            if (member(f, G)) continue;
            Gens sat = saturation(G, f, ring);
            if (!ideal_subset(sat, G)) {
                work.push_back(sat);
                work.push_back(with(G, f));
                split = true;
                break;
            }
        }
        if (split) continue;
        raw.push_back({G, false});
    }
    return raw;
}

}  // namespace

std::vector<PrimeComponent> minimal_primes(const Gens& I, const RingPtr& ring)
{
    return minimize_primes(raw_primes(I, ring));
}

}  // namespace gcover
