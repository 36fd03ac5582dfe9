#include "commands.hpp"

#include <sstream>

namespace gcover::cli {

namespace {

std::string gens_text(const Gens& g)
{
    std::string s = "<";
    for (size_t i = 0; i < g.size(); ++i) s += (i ? ", " : "") + to_string(g[i]);
    return s + ">";
}

Json gens_json(const Gens& g)
{
    Json a = Json::array();
    for (const auto& p : g) a.push_back(to_string(p));
    return a;
}

std::string chart_text(const ParamContext& ctx, const Chart& c)
{
    std::string s;
    bool unit = c.den.is_constant() && !c.den.is_zero() && c.den.lc() == 1;
    for (size_t i = 0; i < c.nums.size(); ++i) {
        const auto& [m, n] = c.nums[i];
        std::string coef = to_string(n);
        if (n == c.den) coef = "1";
        else if (!unit) coef = "(" + coef + ")/(" + to_string(c.den) + ")";
        else if (n.size() > 1) coef = "(" + coef + ")";
        std::string mono = monomial_string(m, *ctx.x);
        if (i) s += " + ";
        if (m.is_one())
            s += coef;
        else if (coef == "1")
            s += mono;
        else
            s += coef + "*" + mono;
    }
    return s.empty() ? "0" : s;
}

Json piece_json(const Piece& pc)
{
    return Json{{"closed_gens", gens_json(pc.closed)}, {"open_gens", gens_json(pc.open)}};
}

Json header(const char* command)
{
    Json j;
    j["schema"] = 1;
    j["command"] = command;
    return j;
}

std::string flags_text(const CoverFlags& f)
{
    auto yn = [](bool b) { return b ? "yes" : "no"; };
    std::ostringstream os;
    os << "certificate: coverage=" << yn(f.coverage) << " irreducible=" << yn(f.irreducible) << " small=" << yn(f.small)
       << " locally_maximal=" << yn(f.locally_maximal) << " parametric=" << yn(f.parametric)
       << " canonical=" << yn(f.canonical) << "\n";
    if (f.any_presumed) os << "note: uniqueness conditional on primality of presumed ideals\n";
    return os.str();
}

bool certified(const CoverFlags& f)
{
    return f.coverage && f.irreducible && f.small && f.locally_maximal && f.parametric && f.canonical;
}

PrimeComponent checked_prime(const Problem& p)
{
    if (!p.prime || p.prime->empty()) return PrimeComponent{{}, true};
    Gens gb = groebner(*p.prime, p.ctx->u);
    auto mp = minimal_primes(gb, p.ctx->u);
    if (mp.size() != 1 || ideal_key(mp[0].gb) != ideal_key(gb))
        throw std::invalid_argument("'prime' is not a prime ideal: " + ideal_key(gb));
    return mp[0];
}

}  // namespace

std::string stratum_text(const ParamContext& ctx, const Stratum& s)
{
    std::ostringstream os;
    os << "stratum (" << s.index.first << "," << s.index.second << "): V" << gens_text(s.prime) << " \\ V"
       << gens_text(s.open);
    if (s.presumed) os << "  [presumed prime]";
    os << "\n  lt: " << lts_string(ctx, s.lts) << "\n";
    if (s.gb.empty()) os << "  gb: {}\n";
    for (size_t e = 0; e < s.gb.size(); ++e)
        for (size_t k = 0; k < s.gb[e].charts.size(); ++k)
            os << "  g" << e + 1 << (s.gb[e].charts.size() > 1 ? "." + std::to_string(k + 1) : std::string())
               << " = " << chart_text(ctx, s.gb[e].charts[k]) << "\n";
    return os.str();
}

Output cmd_cover(const Problem& p)
{
    Output out;
    auto cv = canonical_cover(p.ctx, p.I, p.target());
    std::ostringstream os;
    os << cv.strata.size() << " strata\n";
    for (const auto& s : cv.strata) os << stratum_text(*p.ctx, s);
    os << flags_text(cv.flags);
    for (const auto& r : cv.report) os << "warning: " << r << "\n";
    Gens cgb = comprehensive_gb(cv);
    os << "comprehensive Groebner basis: {";
    for (size_t i = 0; i < cgb.size(); ++i) os << (i ? ", " : "") << to_string(cgb[i]);
    os << "}\n";
    out.text = os.str();
    out.json = cover_json(p, cv);
    out.json["comprehensive_gb"] = gens_json(cgb);
    out.code = certified(cv.flags) ? kOk : kCertificateFailure;
    return out;
}

Output cmd_hcover(const Problem& p)
{
    Output out;
    auto hc = homogeneous_cover(p.ctx, p.I, p.target());
    std::ostringstream os;
    for (const auto& s : hc.cover.strata) os << stratum_text(*p.ctx, s);
    os << flags_text(hc.cover.flags);
    os << hc.classes.size() << " leading-term classes\n";
    Json classes = Json::array();
    bool closed_ok = true;
    for (const auto& c : hc.classes) {
        os << "class " << lts_string(*p.ctx, c.lts) << ": strata";
        Json members = Json::array();
        for (auto i : c.members) {
            const auto& s = hc.cover.strata[i];
            os << " (" << s.index.first << "," << s.index.second << ")";
            members.push_back({s.index.first, s.index.second});
        }
        os << (c.locally_closed ? ", locally closed\n" : ", NOT locally closed\n");
        closed_ok = closed_ok && c.locally_closed;
        Json pieces = Json::array();
        for (const auto& pc : c.set.pieces()) {
            os << "  V" << gens_text(pc.closed) << " \\ V" << gens_text(pc.open) << "\n";
            pieces.push_back(piece_json(pc));
        }
        Json lts = Json::array();
        for (const auto& t : c.lts) lts.push_back(monomial_string(t, *p.ctx->x));
        classes.push_back(
            {{"leading_terms", lts}, {"members", members}, {"pieces", pieces}, {"locally_closed", c.locally_closed}});
    }
    out.text = os.str();
    out.json = cover_json(p, hc.cover);
    out.json["command"] = "hcover";
    out.json["classes"] = classes;
    out.code = certified(hc.cover.flags) && closed_ok ? kOk : kCertificateFailure;
    return out;
}

Output cmd_jideal(const Problem& p)
{
    Output out;
    const auto& ctx = *p.ctx;
    auto rgb = ring_gb(ctx, p.I, p.modulus);
    auto lts = leading_terms(ctx, rgb);
    std::ostringstream os;
    if (!p.modulus.empty()) os << "modulo " << gens_text(groebner(p.modulus, ctx.u)) << "\n";
    os << "lt: " << lts_string(ctx, lts) << "\n";
    Json lcs = Json::array();
    for (const auto& t : lts) {
        Gens lc = lc_ideal(rgb, t);
        os << "lc(I, " << monomial_string(t, *ctx.x) << ") = " << gens_text(lc) << "\n";
        lcs.push_back({{"term", monomial_string(t, *ctx.x)}, {"gens", gens_json(lc)}});
    }
    Gens J = singular_ideal(ctx, rgb);
    auto comps = minimal_primes(groebner(J, ctx.u), ctx.u);
    os << "J = " << gens_text(J) << "\n";
    os << "V(J) components:";
    if (comps.empty()) os << " none";
    Json cj = Json::array();
    for (const auto& c : comps) {
        os << " V" << gens_text(c.gb) << (c.certified ? "" : "[presumed]");
        cj.push_back({{"gens", gens_json(c.gb)}, {"presumed", !c.certified}});
    }
    os << "\n";
    out.text = os.str();
    out.json = header("jideal");
    out.json["problem"] = problem_json(p);
    out.json["modulus"] = gens_json(p.modulus);
    Json lj = Json::array();
    for (const auto& t : lts) lj.push_back(monomial_string(t, *ctx.x));
    out.json["leading_terms"] = lj;
    out.json["lc_ideals"] = lcs;
    out.json["singular_ideal"] = gens_json(J);
    out.json["components"] = cj;
    return out;
}

Output cmd_zgen(const Problem& p)
{
    Output out;
    PrimeComponent pc = checked_prime(p);
    auto s = z_gen(*p.ctx, p.I, pc);
    out.json = header("zgen");
    out.json["problem"] = problem_json(p);
    out.json["prime"] = gens_json(pc.gb);
    if (s) {
        out.text = stratum_text(*p.ctx, *s);
        out.json["stratum"] = stratum_json(*p.ctx, *s);
    } else {
        out.text = "Z_gen is empty\n";
        out.json["stratum"] = nullptr;
    }
    return out;
}

Output cmd_pseudodiv(const Problem& p)
{
    if (!p.dividend || !p.divisors) throw std::invalid_argument("pseudodiv needs 'dividend' and 'divisors'");
    const auto& ctx = *p.ctx;
    std::vector<XPoly> G;
    for (const auto& g : *p.divisors) G.push_back(ctx.to_x(g));
    Gens mod = groebner(p.modulus, ctx.u);
    auto pd = pseudo_divide(ctx.to_x(*p.dividend), G, mod);
    Output out;
    std::ostringstream os;
    os << "c = " << to_string(pd.c) << "\n";
    Json q = Json::array();
    for (size_t i = 0; i < pd.quotients.size(); ++i) {
        os << "q" << i + 1 << " = " << to_string(ctx, pd.quotients[i]) << "\n";
        q.push_back(to_string(ctx, pd.quotients[i]));
    }
    os << "r = " << to_string(ctx, pd.remainder) << "\n";
    out.text = os.str();
    out.json = header("pseudodiv");
    out.json["problem"] = problem_json(p);
    out.json["c"] = to_string(pd.c);
    out.json["quotients"] = q;
    out.json["remainder"] = to_string(ctx, pd.remainder);
    return out;
}

Output cmd_specialize(const Problem& p)
{
    if (!p.point) throw std::invalid_argument("specialize needs 'point'");
    const auto& ctx = *p.ctx;
    Gens sp = specialize(ctx, p.I, *p.point);
    Gens gb = groebner(sp, ctx.x);
    std::sort(gb.begin(), gb.end(), [&](const QPoly& a, const QPoly& b) { return ctx.x->order.cmp(a.lt(), b.lt()) > 0; });
    std::vector<Monomial> lts;
    for (const auto& g : gb) lts.push_back(g.lt());
    Output out;
    std::ostringstream os;
    os << "point " << point_string(*p.point) << "\n";
    os << "specialized: " << gens_text(sp) << "\n";
    os << "reduced GB: " << gens_text(gb) << "\n";
    os << "lt: " << lts_string(ctx, lts) << "\n";
    out.text = os.str();
    out.json = header("specialize");
    out.json["problem"] = problem_json(p);
    out.json["point"] = point_string(*p.point);
    out.json["specialized"] = gens_json(sp);
    out.json["gb"] = gens_json(gb);
    Json lj = Json::array();
    for (const auto& t : lts) lj.push_back(monomial_string(t, *ctx.x));
    out.json["leading_terms"] = lj;
    return out;
}

Output cmd_verify(const std::string& text, const Options& opt)
{
    Problem p;
    std::vector<Stratum> strata;
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
        Json j = Json::parse(text);
        if (j.value("schema", 0) != 1) throw std::invalid_argument("unsupported JSON schema");
        p = problem_from_json(j.at("problem"));
        for (const auto& s : j.at("strata")) strata.push_back(stratum_from_json(*p.ctx, s));
    } else {
        p = parse_problem(text, opt.order);
        strata = canonical_cover(p.ctx, p.I, p.target()).strata;
    }
    SamplePlan plan;
    plan.seed = opt.seed;
    auto r = verify_cover(*p.ctx, p.I, strata, p.target(), plan);
    Output out;
    out.text = to_text(r);
    out.json = header("verify");
    out.json["seed"] = opt.seed;
    out.json["problem"] = problem_json(p);
    out.json["report"] = report_json(r);
    out.code = r.pass() ? kOk : kCertificateFailure;
    return out;
}

Output run_command(const std::string& command, const std::string& path, const Options& opt)
{
    std::string text = read_file(path);
    if (command == "verify") return cmd_verify(text, opt);
    Problem p = parse_problem(text, opt.order);
    if (command == "cover") return cmd_cover(p);
    if (command == "hcover") return cmd_hcover(p);
    if (command == "jideal") return cmd_jideal(p);
    if (command == "zgen") return cmd_zgen(p);
    if (command == "pseudodiv") return cmd_pseudodiv(p);
    if (command == "specialize") return cmd_specialize(p);
    throw std::invalid_argument("unknown command '" + command + "'");
}

}  // namespace gcover::cli
