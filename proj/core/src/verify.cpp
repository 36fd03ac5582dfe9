#include "gcover/verify.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "gcover/factor.hpp"

namespace gcover {

namespace {

std::string join(const Gens& g)
{
    std::string s = "{";
    for (size_t i = 0; i < g.size(); ++i) s += (i ? ", " : "") + to_string(g[i]);
    return s + "}";
}

Rational random_coord(std::mt19937_64& rng, int bound)
{
    long n = static_cast<long>(rng() % (2 * bound + 1)) - bound;
    long d = rng() % 4 == 0 ? 1 + static_cast<long>(rng() % 3) : 1;
    Rational q(n, d);
    q.canonicalize();
    return q;
}

template <class P>
void sort_desc(const ParamContext& ctx, std::vector<P>& g)
{
    std::sort(g.begin(), g.end(), [&](const P& a, const P& b) { return ctx.x->order.cmp(a.lt(), b.lt()) > 0; });
}

}  // namespace

std::string point_string(const Point& p)
{
    std::string s = "(";
    for (size_t i = 0; i < p.size(); ++i) s += (i ? ", " : "") + p[i].get_str();
    return s + ")";
}

std::string lts_string(const ParamContext& ctx, const std::vector<Monomial>& lts)
{
    std::string s = "{";
    for (size_t i = 0; i < lts.size(); ++i) s += (i ? ", " : "") + monomial_string(lts[i], *ctx.x);
    return s + "}";
}

SampleResult sample_points(const RingPtr& u, const Gens& closed, const Gens& open, const SamplePlan& plan,
                           std::mt19937_64& rng)
{
    SampleResult out;
    const int m = u->nvars();
    RingPtr lr = make_ring(u->names, OrderKind::Lex);
    Gens G = groebner(closed, lr);
    if (is_unit(G)) {
        out.generic_only = true;
        return out;
    }
    std::set<std::string> seen;
    for (int attempt = 0; attempt < plan.budget && static_cast<int>(out.points.size()) < plan.points; ++attempt) {
        Point pt(m);
        bool ok = true;
        for (int k = m - 1; k >= 0 && ok; --k) {
            std::vector<bool> has(m, false);
            for (int j = k + 1; j < m; ++j) has[j] = true;
            QPoly g;
            bool any = false;
            for (const auto& e : G) {
                auto sv = support_vars(e);
                if (sv.empty() || sv.front() != k) continue;
                QPoly r = substitute(e, pt, has);
                if (r.is_zero()) continue;
                g = any ? poly_gcd(g, r) : r;
                any = true;
            }
            if (!any) {
                pt[k] = random_coord(rng, plan.bound);
                continue;
            }
            auto roots = g.is_constant() ? std::vector<Rational>{} : rational_roots(g, k);
            if (roots.empty())
                ok = false;
            else
                pt[k] = roots[rng() % roots.size()];
        }
        if (!ok) continue;
        bool on = std::all_of(closed.begin(), closed.end(), [&](const QPoly& f) { return evaluate(f, pt) == 0; });
        bool off = std::any_of(open.begin(), open.end(), [&](const QPoly& f) { return evaluate(f, pt) != 0; });
        if (on && off && seen.insert(point_string(pt)).second) out.points.push_back(pt);
    }
    out.generic_only = out.points.empty();
    return out;
}

StratumReport check_stratum(const ParamContext& ctx, const Gens& I, const Stratum& s, const SamplePlan& plan,
                            std::mt19937_64& rng)
{
    StratumReport rep;
    rep.index = s.index;
    rep.prime = ideal_key(s.prime);
    rep.presumed = s.presumed;
    auto sp = sample_points(ctx.u, s.prime, s.open, plan, rng);
    rep.generic_only = sp.generic_only;
    rep.points = sp.points;
    for (const auto& pt : sp.points) {
        Gens expect = groebner(specialize(ctx, I, pt), ctx.x);
        sort_desc(ctx, expect);
        Gens got;
        for (const auto& sec : s.gb) {
            bool agree = true;
            auto v = evaluate_section(ctx, sec, pt, &agree);
            if (!v) {
                rep.mismatches.push_back({pt, "no chart applies", "", monomial_string(sec.lt, *ctx.x)});
                continue;
            }
            if (!agree) rep.mismatches.push_back({pt, "charts disagree", "", to_string(*v)});
            got.push_back(*v);
        }
        sort_desc(ctx, got);
        if (join(got) != join(expect)) rep.mismatches.push_back({pt, "reduced Groebner basis", join(expect), join(got)});
        std::vector<Monomial> lts;
        for (const auto& g : expect) lts.push_back(g.lt());
        if (lts != s.lts)
            rep.mismatches.push_back({pt, "leading terms", lts_string(ctx, lts), lts_string(ctx, s.lts)});
    }
    try {
        DomainPtr dom = make_domain(ctx.u, s.prime);
        auto gg = generic_gb(ctx, I, dom);
        sort_desc(ctx, gg);
        std::vector<Monomial> lts;
        for (const auto& g : gg) lts.push_back(g.lt());
        if (lts != s.lts) rep.mismatches.push_back({{}, "generic leading terms", lts_string(ctx, lts), lts_string(ctx, s.lts)});
        for (size_t i = 0; i < gg.size() && i < s.gb.size(); ++i)
            for (const auto& c : s.gb[i].charts) {
                std::vector<Term<FracElem>> ts;
                for (const auto& [t, n] : c.nums) ts.push_back({t, section_value(c, t, dom)});
                FPoly chart = FPoly::from_terms(ctx.x, std::move(ts));
                if (!(chart - gg[i]).is_zero())
                    rep.mismatches.push_back({{}, "generic fibre", to_string(gg[i]), to_string(chart)});
            }
    } catch (const std::exception& e) {
        rep.mismatches.push_back({{}, "generic fibre", "", e.what()});
    }
    return rep;
}

bool CoverReport::pass() const
{
    for (const auto& s : strata)
        if (!s.pass()) return false;
    const auto& f = certificate.flags;
    return f.coverage && f.irreducible && f.small && f.locally_maximal && f.parametric && f.canonical;
}

CoverReport verify_cover(const ParamContext& ctx, const Gens& I, const std::vector<Stratum>& strata,
                         const ConstructibleSet& L, const SamplePlan& plan)
{
    CoverReport r;
    std::mt19937_64 rng(plan.seed);
    for (const auto& s : strata) r.strata.push_back(check_stratum(ctx, I, s, plan, rng));
    r.certificate = certify_cover(ctx, strata, I, L, true);
    return r;
}

std::vector<LtPointClass> brute_force_lt_classes(const ParamContext& ctx, const Gens& I,
                                                 const std::vector<Rational>& axis)
{
    const int m = ctx.m();
    if (m > 4) throw std::invalid_argument("brute-force grid supports at most 4 parameters");
    std::vector<LtPointClass> out;
    std::vector<size_t> idx(m, 0);
    for (;;) {
        Point pt(m);
        for (int k = 0; k < m; ++k) pt[k] = axis[idx[k]];
        Gens gb = groebner(specialize(ctx, I, pt), ctx.x);
        sort_desc(ctx, gb);
        std::vector<Monomial> lts;
        for (const auto& g : gb) lts.push_back(g.lt());
        auto it = std::find_if(out.begin(), out.end(), [&](const LtPointClass& c) { return c.lts == lts; });
        if (it == out.end()) {
            out.push_back({lts, {}});
            it = out.end() - 1;
        }
        it->points.push_back(pt);
        int k = m - 1;
        while (k >= 0 && ++idx[k] == axis.size()) idx[k--] = 0;
        if (k < 0) break;
    }
    return out;
}

std::string to_text(const CoverReport& r)
{
    std::ostringstream os;
    for (const auto& s : r.strata) {
        os << "stratum (" << s.index.first << "," << s.index.second << ") " << s.prime;
        if (s.presumed) os << " [presumed prime]";
        os << ": " << (s.pass() ? "PASS" : "FAIL") << ", ";
        if (s.generic_only)
            os << "generic-only (no rational point found)";
        else
            os << s.points.size() << " points";
        os << "\n";
        for (const auto& m : s.mismatches) {
            os << "  mismatch";
            if (!m.point.empty()) os << " at " << point_string(m.point);
            os << ": " << m.what;
            if (!m.expected.empty()) os << "; expected " << m.expected;
            if (!m.got.empty()) os << "; got " << m.got;
            os << "\n";
        }
    }
    const auto& f = r.certificate.flags;
    auto yn = [](bool b) { return b ? "yes" : "no"; };
    os << "certificate: coverage=" << yn(f.coverage) << " irreducible=" << yn(f.irreducible) << " small=" << yn(f.small)
       << " locally_maximal=" << yn(f.locally_maximal) << " parametric=" << yn(f.parametric)
       << " canonical=" << yn(f.canonical) << "\n";
    if (f.any_presumed) os << "note: uniqueness conditional on primality of presumed ideals\n";
    for (const auto& v : r.certificate.violations) os << "violation: " << v << "\n";
    os << (r.pass() ? "PASS" : "FAIL") << "\n";
    return os.str();
}

}  // namespace gcover
