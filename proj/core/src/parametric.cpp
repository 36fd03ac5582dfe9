#include "gcover/parametric.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "gcover/factor.hpp"

namespace gcover {

namespace {

struct MonoLess {
    bool operator()(const Monomial& a, const Monomial& b) const { return a.e < b.e; }
};

Rational rpow(const Rational& b, int e)
{
    Rational r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
}

}  // namespace

ContextPtr make_context(std::vector<std::string> params, std::vector<std::string> vars, OrderKind xorder)
{
    auto c = std::make_shared<ParamContext>();
    std::set<std::string> seen;
    for (const auto& s : params)
        if (!seen.insert(s).second) throw std::invalid_argument("duplicate name '" + s + "'");
    for (const auto& s : vars)
        if (!seen.insert(s).second) throw std::invalid_argument("duplicate name '" + s + "'");
    if (params.size() + vars.size() > static_cast<size_t>(kMaxVars))
        throw std::invalid_argument("too many variables (limit " + std::to_string(kMaxVars) + ")");
    c->params = std::move(params);
    c->vars = std::move(vars);
    const int n = c->n(), m = c->m();
    c->u = make_ring(c->params, OrderKind::Grevlex);
    c->x = make_ring(c->vars, xorder);
    std::vector<std::string> names = c->vars;
    names.insert(names.end(), c->params.begin(), c->params.end());
    std::vector<OrderBlock> blocks;
    if (n) blocks.push_back(OrderBlock{0, n, xorder});
    if (m) blocks.push_back(OrderBlock{n, m, OrderKind::Grevlex});
    c->joint = make_ring(std::move(names), TermOrder::blocks(std::move(blocks)));
    return c;
}

QPoly ParamContext::u_to_joint(const QPoly& f) const
{
    std::vector<int> map(m());
    for (int i = 0; i < m(); ++i) map[i] = n() + i;
    QPoly g = f;
    if (!g.ring()) g.set_ring(u);
    return remap(g, joint, map);
}

QPoly ParamContext::x_to_joint(const QPoly& f) const
{
    std::vector<int> map(n());
    for (int i = 0; i < n(); ++i) map[i] = i;
    QPoly g = f;
    if (!g.ring()) g.set_ring(x);
    return remap(g, joint, map);
}

QPoly ParamContext::joint_to_u(const QPoly& f) const
{
    std::vector<int> map(n() + m(), -1);
    for (int i = 0; i < m(); ++i) map[n() + i] = i;
    for (const auto& t : f)
        for (int i = 0; i < n(); ++i)
            if (t.m[i]) throw std::invalid_argument("polynomial involves variables: " + to_string(f));
    QPoly g = f;
    if (!g.ring()) g.set_ring(joint);
    return remap(g, u, map);
}

Monomial ParamContext::x_part(const Monomial& mo) const
{
    Monomial r;
    for (int i = 0; i < n(); ++i) r.set(i, mo[i]);
    return r;
}

Monomial ParamContext::u_part(const Monomial& mo) const
{
    Monomial r;
    for (int i = 0; i < m(); ++i) r.set(i, mo[n() + i]);
    return r;
}

XPoly ParamContext::to_x(const QPoly& f) const
{
    std::map<Monomial, std::vector<Term<Rational>>, MonoLess> buckets;
    for (const auto& t : f) buckets[x_part(t.m)].push_back({u_part(t.m), t.c});
    std::vector<Term<QPoly>> ts;
    for (auto& [xm, us] : buckets) ts.push_back({xm, QPoly::from_terms(u, std::move(us))});
    return XPoly::from_terms(x, std::move(ts));
}

QPoly ParamContext::from_x(const XPoly& f) const
{
    std::vector<Term<Rational>> ts;
    for (const auto& t : f)
        for (const auto& c : t.c) {
            Monomial mo = t.m;
            for (int i = 0; i < m(); ++i) mo.set(n() + i, c.m[i]);
            ts.push_back({mo, c.c});
        }
    return QPoly::from_terms(joint, std::move(ts));
}

// ---------------------------------------------------------------- specialization

QPoly specialize(const ParamContext& ctx, const QPoly& f, const std::vector<Rational>& point)
{
    if (static_cast<int>(point.size()) != ctx.m()) throw std::invalid_argument("point dimension does not match the parameters");
    std::vector<Term<Rational>> ts;
    for (const auto& t : f) {
        Rational c = t.c;
        for (int i = 0; i < ctx.m() && c != 0; ++i)
            if (t.m[ctx.n() + i]) c *= rpow(point[i], t.m[ctx.n() + i]);
        if (c != 0) ts.push_back({ctx.x_part(t.m), c});
    }
    return QPoly::from_terms(ctx.x, std::move(ts));
}

Gens specialize(const ParamContext& ctx, const Gens& I, const std::vector<Rational>& point)
{
    Gens out;
    for (const auto& f : I) out.push_back(specialize(ctx, f, point));
    return out;
}

std::vector<FPoly> generic_specialize(const ParamContext& ctx, const Gens& I, const DomainPtr& dom)
{
    std::vector<FPoly> out;
    for (const auto& f : I) {
        XPoly xf = ctx.to_x(f);
        out.push_back(xf.map_coeffs<FracElem>(ctx.x, [&](const QPoly& c) { return FracElem(dom, c); }));
    }
    return out;
}

std::vector<FPoly> generic_gb(const ParamContext& ctx, const Gens& I, const DomainPtr& dom)
{
    return buchberger<FracElem>(generic_specialize(ctx, I, dom));
}

// ---------------------------------------------------------------- pseudo-division

XPoly nf_coeffs(const XPoly& f, const Gens& modulus_gb)
{
    if (modulus_gb.empty()) return f;
    return f.map_coeffs<QPoly>(f.ring(), [&](const QPoly& c) { return reduce(c, modulus_gb); });
}

PseudoDivision pseudo_divide(const XPoly& f0, const std::vector<XPoly>& G0, const Gens& mod)
{
    RingPtr xr = f0.ring(), ur;
    for (const auto& t : f0) ur = t.c.ring();
    for (const auto& g : G0) {
        if (!xr) xr = g.ring();
        for (const auto& t : g) ur = t.c.ring();
    }
    if (!ur && !mod.empty()) ur = mod[0].ring();
    std::vector<XPoly> G;
    for (const auto& g : G0) {
        G.push_back(nf_coeffs(g, mod));
        if (G.back().is_zero()) throw std::invalid_argument("pseudo-division by a polynomial that vanishes modulo the ideal");
    }
    PseudoDivision out;
    out.c = QPoly::constant(ur, Rational(1));
    out.quotients.assign(G.size(), XPoly(xr));
    XPoly p = nf_coeffs(f0, mod);
    for (;;) {
        size_t j = G.size();
        Monomial t;
        QPoly a;
        for (const auto& term : p) {
            for (size_t k = 0; k < G.size(); ++k)
                if (G[k].lt().divides(term.m)) {
                    j = k;
                    break;
                }
            if (j < G.size()) {
                t = term.m;
                a = term.c;
                break;
            }
        }
        if (j == G.size()) break;
        const QPoly& L = G[j].lc();
        Monomial mm = t / G[j].lt();
        p = nf_coeffs(p.scaled(L) - G[j].mul_term(mm, a), mod);
        for (auto& q : out.quotients) q = nf_coeffs(q.scaled(L), mod);
        out.quotients[j] += XPoly::monomial(xr, mm, a);
        out.c = mod.empty() ? out.c * L : reduce(out.c * L, mod);
    }
    out.remainder = std::move(p);
    return out;
}

// ---------------------------------------------------------------- ring GB

RingGB ring_gb(const ParamContext& ctx, const Gens& I, const Gens& a, bool track_lifts)
{
    RingGB out;
    out.modulus = groebner(a, ctx.u);
    if (is_unit(out.modulus)) {
        out.zero_ring = true;
        return out;
    }
    Gens gens, shadows;
    for (const auto& f : I) {
        gens.push_back(reorder(f, ctx.joint));
        shadows.push_back(gens.back());
    }
    for (const auto& g : out.modulus) {
        gens.push_back(ctx.u_to_joint(g));
        shadows.push_back(QPoly(ctx.joint));
    }
    Gens G = track_lifts ? buchberger<Rational>(gens, &shadows) : buchberger<Rational>(gens);
    for (size_t i = 0; i < G.size(); ++i) {
        const QPoly& g = G[i];
        Monomial lx = ctx.x_part(g.lt());
        std::vector<Term<Rational>> ts;
        for (const auto& t : g)
            if (ctx.x_part(t.m) == lx) ts.push_back({ctx.u_part(t.m), t.c});
        QPoly lc = reduce(QPoly::from_terms(ctx.u, std::move(ts)), out.modulus);
        if (lc.is_zero()) continue;
        out.elems.push_back(g);
        if (track_lifts) out.lifts.push_back(shadows[i]);
        out.lt_x.push_back(lx);
        out.lc_x.push_back(lc);
    }
    return out;
}

std::vector<Monomial> leading_terms(const ParamContext& ctx, const RingGB& rgb)
{
    std::vector<Monomial> out;
    for (size_t i = 0; i < rgb.lt_x.size(); ++i) {
        bool red = false;
        for (size_t j = 0; j < rgb.lt_x.size() && !red; ++j) {
            if (i == j || !rgb.lt_x[j].divides(rgb.lt_x[i])) continue;
            if (rgb.lt_x[j] != rgb.lt_x[i] || j < i) red = true;
        }
        if (!red) out.push_back(rgb.lt_x[i]);
    }
    std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) { return ctx.x->order.cmp(a, b) > 0; });
    return out;
}

Gens lc_ideal(const RingGB& rgb, const Monomial& t)
{
    Gens out;
    for (size_t i = 0; i < rgb.lt_x.size(); ++i)
        if (rgb.lt_x[i].divides(t)) out.push_back(rgb.lc_x[i]);
    return out;
}

namespace {

// Generators of (b + a)/a as normal forms mod a, reduced.
Gens compact_mod(const Gens& b, const Gens& a_gb, const RingPtr& u)
{
    Gens all = b;
    all.insert(all.end(), a_gb.begin(), a_gb.end());
    Gens out;
    for (const auto& g : groebner(all, u)) {
        QPoly r = reduce(g, a_gb);
        if (!r.is_zero()) out.push_back(make_monic(r));
    }
    return out;
}

}  // namespace

Gens singular_ideal(const ParamContext& ctx, const RingGB& rgb)
{
    if (rgb.zero_ring) return {qone(ctx.u)};
    Gens J{qone(ctx.u)};
    for (const auto& t : leading_terms(ctx, rgb)) {
        Gens l = compact_mod(lc_ideal(rgb, t), rgb.modulus, ctx.u);
        Gens prod;
        for (const auto& p : product(J, l)) {
            QPoly r = reduce(p, rgb.modulus);
            if (!r.is_zero()) prod.push_back(make_monic(r));
        }
        J = compact_mod(prod, rgb.modulus, ctx.u);
    }
    return J;
}

Gens singular_ideal(const ParamContext& ctx, const Gens& I, const Gens& a)
{
    return singular_ideal(ctx, ring_gb(ctx, I, a));
}

bool is_lucky(const ParamContext& ctx, const Gens& I, const Gens& a, const Gens& p)
{
    Gens J = singular_ideal(ctx, I, a);
    return !ideal_subset(J, groebner(p, ctx.u));
}

// ---------------------------------------------------------------- z_gen

namespace {

std::vector<Monomial> generic_leading_terms(const ParamContext& ctx, const std::vector<FPoly>& gb)
{
    std::vector<Monomial> lts = minimal_leading_terms(gb);
    std::sort(lts.begin(), lts.end(), [&](const Monomial& a, const Monomial& b) { return ctx.x->order.cmp(a, b) > 0; });
    return lts;
}

bool same_chart(const Chart& a, const Chart& b)
{
    if (a.den != b.den || a.lift_den != b.lift_den || a.nums.size() != b.nums.size()) return false;
    for (size_t i = 0; i < a.nums.size(); ++i)
        if (a.nums[i].first != b.nums[i].first || a.nums[i].second != b.nums[i].second) return false;
    return true;
}

// Chart from a remainder whose coefficients are normal forms mod p.
Chart make_chart(const XPoly& r, const Gens& p, const QPoly& lift)
{
    Chart c;
    QPoly den = r.lc();
    std::vector<std::pair<Monomial, QPoly>> nums;
    for (const auto& t : r) nums.push_back({t.m, t.c});
    QPoly g = den;
    for (const auto& [m, a] : nums) {
        if (g.is_constant()) break;
        g = poly_gcd(g, a);
    }
    if (!g.is_constant()) {
        QPoly q;
        exact_divide(den, g, q);
        den = reduce(q, p);
        for (auto& [m, a] : nums) {
            exact_divide(a, g, q);
            a = reduce(q, p);
        }
    }
    Rational s = make_primitive(den).lc() / den.lc();
    c.den = den.scaled(s);
    for (auto& [m, a] : nums)
        if (!a.is_zero()) c.nums.push_back({m, a.scaled(s)});
    c.lift = lift;
    c.lift_den = r.lc();
    return c;
}

// Index tuples (one per slot) in order of increasing rank sum, at most `cap` of them.
std::vector<std::vector<int>> combinations(const std::vector<int>& sizes, int cap)
{
    std::vector<std::vector<int>> out;
    int max_sum = 0;
    for (int s : sizes) max_sum += s - 1;
    std::vector<int> cur(sizes.size(), 0);
    std::function<void(size_t, int)> rec = [&](size_t k, int left) {
        if (static_cast<int>(out.size()) >= cap) return;
        if (k == sizes.size()) {
            if (left == 0) out.push_back(cur);
            return;
        }
        for (int v = 0; v < sizes[k] && v <= left; ++v) {
            cur[k] = v;
            rec(k + 1, left - v);
        }
    };
    for (int s = 0; s <= max_sum && static_cast<int>(out.size()) < cap; ++s) rec(0, s);
    return out;
}

}  // namespace

std::optional<Stratum> z_gen(const ParamContext& ctx, const Gens& I, const PrimeComponent& pc, const ZGenOptions& opt)
{
    const Gens& p = pc.gb;
    RingGB rgb = ring_gb(ctx, I, p, true);
    if (rgb.zero_ring) return std::nullopt;
    std::vector<Monomial> T = leading_terms(ctx, rgb);

    DomainPtr dom = make_domain(ctx.u, p);
    auto ggb = generic_gb(ctx, I, dom);
    if (generic_leading_terms(ctx, ggb) != T)
        throw ConsistencyError("leading terms over the residue field disagree with the ring Groebner basis");

    Stratum st;
    st.prime = p;
    st.presumed = !pc.certified;
    st.lts = T;
    Gens J = singular_ideal(ctx, rgb);
    // piece V(p) ∖ V(J + p)
    st.open = J;
    if (piece_empty(p, J, ctx.u)) return std::nullopt;
    if (T.empty()) return st;

    std::vector<std::vector<size_t>> cands(T.size());
    for (size_t i = 0; i < T.size(); ++i) {
        for (size_t k = 0; k < rgb.elems.size(); ++k)
            if (rgb.lt_x[k] == T[i]) cands[i].push_back(k);
        std::stable_sort(cands[i].begin(), cands[i].end(), [&](size_t a, size_t b) {
            int da = rgb.lc_x[a].total_degree(), db = rgb.lc_x[b].total_degree();
            if (da != db) return da < db;
            return canonical_less(rgb.lc_x[a], rgb.lc_x[b]);
        });
        if (opt.descending) std::reverse(cands[i].begin(), cands[i].end());
        if (cands[i].empty()) throw ConsistencyError("no ring Groebner basis element for a leading term");
    }
    std::vector<int> sizes;
    for (const auto& c : cands) sizes.push_back(static_cast<int>(c.size()));

    st.gb.resize(T.size());
    std::vector<char> covered(T.size(), 0);
    std::vector<XPoly> xs(rgb.elems.size());
    for (size_t k = 0; k < rgb.elems.size(); ++k) xs[k] = nf_coeffs(ctx.to_x(rgb.elems[k]), p);
    Gens Jp = J;
    for (const auto& combo : combinations(sizes, opt.max_combinations)) {
        for (size_t i = 0; i < T.size(); ++i) {
            if (covered[i]) continue;
            size_t Pi = cands[i][combo[i]];
            std::vector<XPoly> others;
            std::vector<size_t> other_idx;
            for (size_t j = 0; j < T.size(); ++j)
                if (j != i) {
                    others.push_back(xs[cands[j][combo[j]]]);
                    other_idx.push_back(cands[j][combo[j]]);
                }
            PseudoDivision pd = pseudo_divide(xs[Pi], others, p);
            if (pd.remainder.is_zero() || pd.remainder.lt() != T[i])
                throw ConsistencyError("pseudo-reduction lost the leading term");
            QPoly lift = ctx.u_to_joint(pd.c) * rgb.lifts[Pi];
            for (size_t j = 0; j < others.size(); ++j) lift -= ctx.from_x(pd.quotients[j]) * rgb.lifts[other_idx[j]];
            Chart ch = make_chart(pd.remainder, p, lift);
            auto& charts = st.gb[i].charts;
            bool dup = false;
            for (const auto& c : charts)
                if (same_chart(c, ch)) dup = true;
            if (dup) continue;
            charts.push_back(std::move(ch));
            Gens hp = p;
            for (const auto& c : charts) hp.push_back(c.lift_den);
            if (radical_subset(J, hp, ctx.u)) covered[i] = 1;
        }
        if (std::all_of(covered.begin(), covered.end(), [](char c) { return c != 0; })) break;
    }
    for (size_t i = 0; i < T.size(); ++i) {
        if (!covered[i]) throw ConsistencyError("chart denominators do not cover Z_gen");
        st.gb[i].lt = T[i];
    }
    return st;
}

bool is_parametric(const ParamContext& ctx, const Gens& I, const ConstructibleSet& Y)
{
    auto primes = Y.closure();
    if (primes.empty()) return true;
    Gens a = primes[0].gb;
    for (size_t i = 1; i < primes.size(); ++i) a = intersection(a, primes[i].gb, ctx.u);
    Gens J = singular_ideal(ctx, I, a);
    return Y.intersect(ConstructibleSet::closed_set(ctx.u, J)).is_empty();
}

FracElem section_value(const Chart& c, const Monomial& t, const DomainPtr& dom)
{
    for (const auto& [m, a] : c.nums)
        if (m == t) return FracElem(dom, a, c.den);
    return FracElem(dom, QPoly(dom->ring()), c.den);
}

std::optional<QPoly> evaluate_section(const ParamContext& ctx, const SectionPoly& s, const std::vector<Rational>& pt,
                                      bool* charts_agree)
{
    std::optional<QPoly> first;
    if (charts_agree) *charts_agree = true;
    for (const auto& c : s.charts) {
        Rational d = evaluate(c.den, pt);
        if (d == 0) continue;
        std::vector<Term<Rational>> ts;
        for (const auto& [m, a] : c.nums) ts.push_back({m, evaluate(a, pt) / d});
        QPoly v = QPoly::from_terms(ctx.x, std::move(ts));
        if (!first)
            first = v;
        else if (*first != v && charts_agree)
            *charts_agree = false;
    }
    return first;
}

// ---------------------------------------------------------------- Weispfenning

std::vector<WeispfenningIdeal> weispfenning_ideals(const ParamContext& ctx, const Gens& I)
{
    DomainPtr dom = make_domain(ctx.u, {});
    std::vector<WeispfenningIdeal> out;
    for (const auto& g : generic_gb(ctx, I, dom)) {
        QPoly L = qone(ctx.u);
        for (const auto& t : g) {
            QPoly d = t.c.is_rational() ? qone(ctx.u) : t.c.den();
            QPoly q;
            exact_divide(L * d, poly_gcd(L, d), q);
            L = q;
        }
        std::vector<Term<QPoly>> ts;
        for (const auto& t : g) {
            QPoly num = t.c.is_rational() ? qconst(ctx.u, t.c.rational()) : t.c.num();
            QPoly den = t.c.is_rational() ? qone(ctx.u) : t.c.den();
            QPoly f;
            exact_divide(L, den, f);
            ts.push_back({t.m, num * f});
        }
        XPoly gx = XPoly::from_terms(ctx.x, std::move(ts));
        QPoly content;
        for (const auto& t : gx) content = poly_gcd(content, t.c);
        gx = gx.map_coeffs<QPoly>(ctx.x, [&](const QPoly& c) {
            QPoly q;
            exact_divide(c, content, q);
            return q;
        });
        QPoly cleared = ctx.from_x(gx);
        QPoly d = gx.lc();
        Gens quo = quotient(I, Gens{cleared}, ctx.joint);
        Gens elim;
        for (const auto& q : quo) {
            bool has_x = false;
            for (const auto& t : q)
                for (int i = 0; i < ctx.n(); ++i)
                    if (t.m[i]) has_x = true;
            if (!has_x) elim.push_back(ctx.joint_to_u(q));
        }
        out.push_back({g, cleared, groebner(product(Gens{d}, elim), ctx.u)});
    }
    return out;
}

// ---------------------------------------------------------------- printing

std::string to_string(const ParamContext& ctx, const XPoly& f)
{
    if (f.is_zero()) return "0";
    std::string s;
    bool first = true;
    for (const auto& t : f) {
        if (!first) s += " + ";
        first = false;
        std::string c = to_string(t.c);
        if (t.m.is_one()) {
            s += t.c.size() > 1 ? "(" + c + ")" : c;
            continue;
        }
        std::string mo = monomial_string(t.m, *ctx.x);
        if (c == "1")
            s += mo;
        else
            s += (t.c.size() > 1 || c[0] == '-' ? "(" + c + ")" : c) + "*" + mo;
    }
    return s;
}

std::string to_string(const FPoly& f)
{
    if (f.is_zero()) return "0";
    std::string s;
    bool first = true;
    for (const auto& t : f) {
        std::string c = to_string(t.c);
        bool neg = !c.empty() && c[0] == '-' && c.find(' ') == std::string::npos;
        if (neg) c = c.substr(1);
        if (first)
            s += neg ? "-" : "";
        else
            s += neg ? " - " : " + ";
        first = false;
        bool compound = c.find(' ') != std::string::npos;
        if (t.m.is_one()) {
            s += compound ? "(" + c + ")" : c;
            continue;
        }
        std::string mo = monomial_string(t.m, *f.ring());
        if (c == "1")
            s += mo;
        else
            s += (compound ? "(" + c + ")" : c) + "*" + mo;
    }
    return s;
}

}  // namespace gcover
