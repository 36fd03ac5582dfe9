#include "gcover/cover.hpp"

#include <algorithm>
#include <set>

namespace gcover {

namespace {

// Y open in V(p), written as V(p)∖V(b); nullopt when empty.
std::optional<Gens> open_part(const Gens& p, const ConstructibleSet& Y, const RingPtr& u)
{
    ConstructibleSet Z = ConstructibleSet::closed_set(u, p);
    ConstructibleSet rest = Z.minus(Y);
    Gens b = rest.is_empty() ? Gens{qone(u)} : union_ideal(rest.closure(), u);
    auto lc = ConstructibleSet::locally_closed(u, p, b);
    if (lc.is_empty()) return std::nullopt;
    return lc.pieces()[0].open;
}

std::set<std::string> keys_of(const std::vector<PrimeComponent>& ps)
{
    std::set<std::string> k;
    for (const auto& p : ps) k.insert(ideal_key(p.gb));
    return k;
}

ConstructibleSet expected_piece(const ParamContext& ctx, const Gens& I, const PrimeComponent& pc,
                                const ConstructibleSet& L, const ZGenOptions& zopt, std::optional<Stratum>& st)
{
    st = z_gen(ctx, I, pc, zopt);
    if (!st) return ConstructibleSet(ctx.u);
    auto lo = largest_open_inside(ConstructibleSet::closed_set(ctx.u, pc.gb), L);
    return st->piece(ctx.u).intersect(lo);
}

}  // namespace

GroebnerCover canonical_cover(const ContextPtr& ctx, const Gens& I, const ConstructibleSet& L, const CoverOptions& opt)
{
    GroebnerCover cv{ctx, {}, L, {}, {}, {}};
    for (const auto& f : I) cv.I.push_back(reorder(f, ctx->joint));
    const RingPtr& u = ctx->u;
    ConstructibleSet C = L;
    std::vector<PrimeComponent> prev;
    for (int i = 1; !C.is_empty(); ++i) {
        auto primes = C.closure();
        if (opt.reverse_prime_order) std::reverse(primes.begin(), primes.end());
        if (i > 1) {
            bool shrinks = keys_of(primes) != keys_of(prev);
            for (const auto& q : primes) {
                bool inside = false;
                for (const auto& p : prev)
                    if (ideal_subset(p.gb, q.gb)) inside = true;
                shrinks = shrinks && inside;
            }
            if (!shrinks) throw ConsistencyError("closure did not shrink in round " + std::to_string(i));
        }
        ConstructibleSet removed(u);
        std::vector<Stratum> round;
        for (size_t j = 0; j < primes.size(); ++j) {
            std::optional<Stratum> st;
            ConstructibleSet Y = expected_piece(*ctx, cv.I, primes[j], L, opt.zgen, st);
            if (Y.is_empty()) continue;
            auto open = open_part(primes[j].gb, Y, u);
            if (!open) continue;
            st->open = *open;
            st->index = {i, static_cast<int>(j) + 1};
            removed = removed.unite(Y);
            round.push_back(std::move(*st));
        }
        std::sort(round.begin(), round.end(), [](const Stratum& a, const Stratum& b) {
            auto ka = ideal_key(a.prime), kb = ideal_key(b.prime);
            if (ka.size() != kb.size()) return ka.size() < kb.size();
            return ka < kb;
        });
        for (auto& s : round) cv.strata.push_back(std::move(s));
        C = C.minus(removed);
        prev = std::move(primes);
    }
    if (opt.certify) {
        Certificate cert = certify_cover(*ctx, cv.strata, cv.I, L, false);
        cv.flags = cert.flags;
        cv.report = cert.violations;
        cv.flags.canonical = cv.flags.coverage && cv.flags.irreducible && cv.flags.small && cv.flags.locally_maximal;
        if (cv.flags.any_presumed) cv.report.push_back("uniqueness conditional on primality of presumed ideals");
    }
    return cv;
}

GroebnerCover canonical_cover(const ContextPtr& ctx, const Gens& I)
{
    return canonical_cover(ctx, I, ConstructibleSet::whole(ctx->u));
}

bool same_stratum(const ParamContext& ctx, const Stratum& a, const Stratum& b)
{
    if (ideal_key(a.prime) != ideal_key(b.prime) || a.lts != b.lts || a.gb.size() != b.gb.size()) return false;
    if (!a.piece(ctx.u).equals(b.piece(ctx.u))) return false;
    DomainPtr dom = make_domain(ctx.u, a.prime);
    for (size_t i = 0; i < a.gb.size(); ++i) {
        if (a.gb[i].lt != b.gb[i].lt || a.gb[i].charts.empty() || b.gb[i].charts.empty()) return false;
        std::set<Monomial, bool (*)(const Monomial&, const Monomial&)> terms(
            [](const Monomial& x, const Monomial& y) { return x.e < y.e; });
        for (const auto* s : {&a.gb[i], &b.gb[i]})
            for (const auto& c : s->charts)
                for (const auto& [m, n] : c.nums) terms.insert(m);
        for (const auto& ca : a.gb[i].charts)
            for (const auto& cb : b.gb[i].charts)
                for (const auto& t : terms)
                    if (section_value(ca, t, dom) != section_value(cb, t, dom)) return false;
    }
    return true;
}

bool same_strata(const ParamContext& ctx, const std::vector<Stratum>& a, const std::vector<Stratum>& b)
{
    if (a.size() != b.size()) return false;
    std::vector<char> used(b.size(), 0);
    for (const auto& s : a) {
        bool found = false;
        for (size_t j = 0; j < b.size() && !found; ++j)
            if (!used[j] && same_stratum(ctx, s, b[j])) used[j] = found = true;
        if (!found) return false;
    }
    return true;
}

Certificate certify_cover(const ParamContext& ctx, const std::vector<Stratum>& strata, const Gens& I,
                          const ConstructibleSet& L, bool check_canonical)
{
    Certificate c;
    auto& f = c.flags;
    const RingPtr& u = ctx.u;
    auto name = [&](size_t k) {
        const auto& s = strata[k];
        return "stratum (" + std::to_string(s.index.first) + "," + std::to_string(s.index.second) + ") " +
               ideal_key(s.prime);
    };
    std::vector<ConstructibleSet> pieces;
    for (const auto& s : strata) pieces.push_back(s.piece(u));

    ConstructibleSet uni(u);
    for (const auto& p : pieces) uni = uni.unite(p);
    f.coverage = uni.equals(L);
    if (!f.coverage) c.violations.push_back("coverage: union of strata differs from the target set");

    f.irreducible = true;
    for (size_t k = 0; k < strata.size(); ++k) {
        f.any_presumed = f.any_presumed || strata[k].presumed;
        auto cl = pieces[k].closure();
        if (cl.size() != 1 || ideal_key(cl[0].gb) != ideal_key(groebner(strata[k].prime, u))) {
            f.irreducible = false;
            c.violations.push_back("irreducible: closure of " + name(k) + " is not V(prime)");
        }
    }

    f.small = true;
    for (size_t a = 0; a < strata.size(); ++a)
        for (size_t b = 0; b < strata.size(); ++b) {
            if (a == b || !ideal_subset(strata[b].prime, groebner(strata[a].prime, u))) continue;
            if (!pieces[a].intersect(pieces[b]).is_empty()) {
                f.small = false;
                c.violations.push_back("small: " + name(a) + " meets " + name(b) + " inside its closure");
            }
        }

    f.locally_maximal = true;
    f.parametric = true;
    for (size_t k = 0; k < strata.size(); ++k) {
        PrimeComponent pc{groebner(strata[k].prime, u), !strata[k].presumed};
        std::optional<Stratum> st;
        ConstructibleSet expect = expected_piece(ctx, I, pc, L, {}, st);
        if (!expect.equals(pieces[k])) {
            f.locally_maximal = false;
            c.violations.push_back("locally maximal: " + name(k) + " differs from Z_gen ∩ open part of L");
        }
        if (pieces[k].is_empty() || !is_parametric(ctx, I, pieces[k])) {
            f.parametric = false;
            c.violations.push_back("parametric: " + name(k) + " meets the singular locus");
        }
    }

    if (check_canonical) {
        CoverOptions o;
        o.certify = false;
        auto ctxp = std::make_shared<ParamContext>(ctx);
        GroebnerCover fresh = canonical_cover(ctxp, I, L, o);
        f.canonical = same_strata(ctx, strata, fresh.strata);
        if (!f.canonical) c.violations.push_back("canonical: strata differ from the recomputed canonical cover");
    }
    return c;
}

bool is_x_homogeneous(const ParamContext& ctx, const QPoly& f)
{
    int d = -1;
    for (const auto& t : f) {
        int e = ctx.x_part(t.m).degree();
        if (d >= 0 && e != d) return false;
        d = e;
    }
    return true;
}

HomogeneousCover homogeneous_cover(const ContextPtr& ctx, const Gens& I, const ConstructibleSet& L,
                                   const CoverOptions& opt)
{
    for (const auto& f : I)
        if (!is_x_homogeneous(*ctx, reorder(f, ctx->joint)))
            throw std::invalid_argument("generator is not homogeneous in the variables: " + to_string(f));
    HomogeneousCover hc{canonical_cover(ctx, I, L, opt), {}};
    const auto& strata = hc.cover.strata;
    for (size_t k = 0; k < strata.size(); ++k) {
        auto it = std::find_if(hc.classes.begin(), hc.classes.end(),
                               [&](const LtClass& c) { return c.lts == strata[k].lts; });
        if (it == hc.classes.end()) {
            hc.classes.push_back(LtClass{strata[k].lts, ConstructibleSet(ctx->u), {}, false});
            it = hc.classes.end() - 1;
        }
        it->set = it->set.unite(strata[k].piece(ctx->u));
        it->members.push_back(k);
    }
    for (auto& c : hc.classes) {
        c.locally_closed = is_locally_closed(c.set);
        if (!c.locally_closed) throw ConsistencyError("leading-term class is not locally closed");
    }
    return hc;
}

Gens comprehensive_gb(const GroebnerCover& cover)
{
    Gens Igb = groebner(cover.I, cover.ctx->joint);
    Gens out;
    std::set<std::string> seen;
    for (const auto& s : cover.strata)
        for (const auto& sec : s.gb)
            for (const auto& c : sec.charts) {
                if (c.lift.is_zero()) throw ConsistencyError("zero chart lift");
                if (!member(c.lift, Igb)) throw ConsistencyError("chart lift is not in I: " + to_string(c.lift));
                QPoly p = make_primitive(c.lift);
                if (seen.insert(to_string(p)).second) out.push_back(p);
            }
    std::sort(out.begin(), out.end(), canonical_less);
    return out;
}

}  // namespace gcover
