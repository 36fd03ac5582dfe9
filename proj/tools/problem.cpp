#include "problem.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

#include "gcover/parse.hpp"

namespace gcover::cli {

namespace {

struct Item {
    std::string text;
    int line = 0, col = 1;
};

struct Segment {
    std::string text;
    int line, col;
};

struct Entry {
    int line = 0;
    std::vector<Segment> segs;
    std::vector<Item> items;
};

const std::vector<std::string> kKeys = {"parameters", "variables", "order",    "generators", "target_closed", "target_open",
                                        "modulus",    "dividend",  "divisors", "point",      "prime"};

std::string trim(const std::string& s)
{
    size_t a = s.find_first_not_of(" \t\r"), b = s.find_last_not_of(" \t\r");
    return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
}

// Split the joined segments at commas outside parentheses, remembering where each item starts.
std::vector<Item> split_items(const std::vector<Segment>& segs)
{
    std::vector<Item> out;
    Item cur;
    bool started = false;
    int depth = 0;
    auto finish = [&](int line, int col) {
        std::string t = trim(cur.text);
        if (t.empty()) throw ParseError(line, col, "empty list item");
        cur.text = t;
        out.push_back(cur);
        cur = Item{};
        started = false;
    };
    bool any = false;
    for (const auto& s : segs)
        for (char ch : s.text)
            if (!std::isspace(static_cast<unsigned char>(ch))) any = true;
    if (!any) return out;
    for (const auto& s : segs) {
        for (size_t i = 0; i < s.text.size(); ++i) {
            char ch = s.text[i];
            int col = s.col + static_cast<int>(i);
            if (ch == '(') ++depth;
            if (ch == ')') --depth;
            if (ch == ',' && depth == 0) {
                finish(s.line, col);
                continue;
            }
            if (!started && !std::isspace(static_cast<unsigned char>(ch))) {
                started = true;
                cur.line = s.line;
                cur.col = col;
            }
            if (started) cur.text += ch;
        }
        if (started) cur.text += ' ';
    }
    const auto& last = segs.back();
    finish(last.line, last.col + static_cast<int>(last.text.size()));
    return out;
}

bool is_identifier(const std::string& s)
{
    if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
    for (char c : s)
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
    return true;
}

std::vector<std::string> names_of(const Entry* e)
{
    std::vector<std::string> out;
    if (!e) return out;
    for (const auto& it : e->items) {
        if (!is_identifier(it.text)) throw ParseError(it.line, it.col, "not a name: '" + it.text + "'");
        out.push_back(it.text);
    }
    return out;
}

Gens polys(const Entry* e, const RingPtr& r)
{
    Gens g;
    if (!e) return g;
    for (const auto& it : e->items) g.push_back(parse_poly(it.text, r, it.line, it.col));
    return g;
}

}  // namespace

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot read '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

Problem parse_problem(std::string_view text, const std::optional<std::string>& order_override)
{
    std::map<std::string, Entry> entries;
    std::string cur;
    std::istringstream in{std::string(text)};
    std::string line;
    for (int ln = 1; std::getline(in, line); ++ln) {
        if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
        if (trim(line).empty()) continue;
        if (std::isspace(static_cast<unsigned char>(line[0]))) {
            if (cur.empty()) throw ParseError(ln, 1, "continuation line without a key");
            entries[cur].segs.push_back({line, ln, 1});
            continue;
        }
        auto colon = line.find(':');
        if (colon == std::string::npos) throw ParseError(ln, 1, "expected 'key: value'");
        std::string key = trim(line.substr(0, colon));
        if (std::find(kKeys.begin(), kKeys.end(), key) == kKeys.end())
            throw ParseError(ln, 1, "unknown key '" + key + "'");
        if (entries.count(key)) throw ParseError(ln, 1, "duplicate key '" + key + "'");
        cur = key;
        entries[key].line = ln;
        entries[key].segs.push_back({line.substr(colon + 1), ln, static_cast<int>(colon) + 2});
    }
    for (auto& [k, e] : entries) e.items = split_items(e.segs);
    auto get = [&](const char* k) -> const Entry* {
        auto it = entries.find(k);
        return it == entries.end() ? nullptr : &it->second;
    };

    Problem p;
    const Entry* vars = get("variables");
    if (!vars || vars->items.empty()) throw ParseError(vars ? vars->line : 0, 1, "missing 'variables'");
    auto params = names_of(get("parameters"));
    auto xs = names_of(vars);
    if (const Entry* o = get("order")) {
        if (o->items.size() != 1) throw ParseError(o->line, 1, "'order' takes one value");
        p.order = o->items[0].text;
    }
    if (order_override) p.order = *order_override;
    OrderKind kind;
    try {
        kind = parse_order_kind(p.order);
    } catch (const std::invalid_argument& e) {
        const Entry* o = get("order");
        throw ParseError(o ? o->line : 0, 1, e.what());
    }
    try {
        p.ctx = make_context(params, xs, kind);
    } catch (const std::invalid_argument& e) {
        throw ParseError(vars->line, 1, e.what());
    }
    p.I = polys(get("generators"), p.ctx->joint);
    p.target_closed = polys(get("target_closed"), p.ctx->u);
    p.target_open = get("target_open") ? polys(get("target_open"), p.ctx->u) : Gens{qone(p.ctx->u)};
    p.modulus = polys(get("modulus"), p.ctx->u);
    if (const Entry* d = get("dividend")) {
        if (d->items.size() != 1) throw ParseError(d->line, 1, "'dividend' takes one polynomial");
        p.dividend = parse_poly(d->items[0].text, p.ctx->joint, d->items[0].line, d->items[0].col);
    }
    if (get("divisors")) p.divisors = polys(get("divisors"), p.ctx->joint);
    if (get("prime")) p.prime = polys(get("prime"), p.ctx->u);
    if (const Entry* e = get("point")) {
        RingPtr none = make_ring({}, OrderKind::Lex);
        Point pt;
        for (const auto& it : e->items) {
            QPoly c = parse_poly(it.text, none, it.line, it.col);
            pt.push_back(c.is_zero() ? Rational(0) : c.lc());
        }
        if (static_cast<int>(pt.size()) != p.ctx->m())
            throw ParseError(e->line, 1, "point has " + std::to_string(pt.size()) + " coordinates, expected " +
                                             std::to_string(p.ctx->m()));
        p.point = pt;
    }
    return p;
}

Problem load_problem(const std::string& path, const std::optional<std::string>& order_override)
{
    return parse_problem(read_file(path), order_override);
}

// ---------------------------------------------------------------- JSON

namespace {

Json strings(const Gens& g)
{
    Json a = Json::array();
    for (const auto& p : g) a.push_back(to_string(p));
    return a;
}

std::string list_line(const char* key, const Json& a)
{
    std::string s = std::string(key) + ":";
    for (size_t i = 0; i < a.size(); ++i) s += (i ? ",\n  " : " ") + a[i].get<std::string>();
    return s + "\n";
}

Gens parse_list(const Json& a, const RingPtr& r)
{
    Gens g;
    for (const auto& s : a) g.push_back(parse_poly(s.get<std::string>(), r));
    return g;
}

Monomial parse_term(const std::string& s, const RingPtr& x)
{
    QPoly t = parse_poly(s, x);
    if (t.size() != 1) throw std::invalid_argument("not a term: '" + s + "'");
    return t.lt();
}

}  // namespace

Json problem_json(const Problem& p)
{
    Json j;
    j["parameters"] = p.ctx->params;
    j["variables"] = p.ctx->vars;
    j["order"] = p.order;
    j["generators"] = strings(p.I);
    j["target_closed"] = strings(p.target_closed);
    j["target_open"] = strings(p.target_open);
    return j;
}

Problem problem_from_json(const Json& j)
{
    std::string text;
    text += "parameters: ";
    for (size_t i = 0; i < j.at("parameters").size(); ++i) text += (i ? ", " : "") + j["parameters"][i].get<std::string>();
    text += "\nvariables: ";
    for (size_t i = 0; i < j.at("variables").size(); ++i) text += (i ? ", " : "") + j["variables"][i].get<std::string>();
    text += "\norder: " + j.at("order").get<std::string>() + "\n";
    text += list_line("generators", j.at("generators"));
    text += list_line("target_closed", j.at("target_closed"));
    text += list_line("target_open", j.at("target_open"));
    return parse_problem(text);
}

Json stratum_json(const ParamContext& ctx, const Stratum& s)
{
    Json j;
    j["index"] = {s.index.first, s.index.second};
    j["closed_gens"] = strings(s.prime);
    j["open_gens"] = strings(s.open);
    Json lts = Json::array();
    for (const auto& t : s.lts) lts.push_back(monomial_string(t, *ctx.x));
    j["leading_terms"] = lts;
    Json gb = Json::array(), lifts = Json::array();
    for (const auto& sec : s.gb) {
        std::vector<Monomial> terms;
        for (const auto& c : sec.charts)
            for (const auto& [m, n] : c.nums)
                if (std::find(terms.begin(), terms.end(), m) == terms.end()) terms.push_back(m);
        std::sort(terms.begin(), terms.end(),
                  [&](const Monomial& a, const Monomial& b) { return ctx.x->order.cmp(a, b) > 0; });
        Json el;
        for (const auto& t : terms) {
            Json charts = Json::array();
            for (const auto& c : sec.charts) {
                std::string num = "0";
                for (const auto& [m, n] : c.nums)
                    if (m == t) num = to_string(n);
                charts.push_back({{"num", num}, {"den", to_string(c.den)}});
            }
            el[monomial_string(t, *ctx.x)] = charts;
        }
        gb.push_back(el);
        Json ls = Json::array();
        for (const auto& c : sec.charts) ls.push_back(to_string(c.lift));
        lifts.push_back(ls);
    }
    j["gb"] = gb;
    j["lifts"] = lifts;
    j["presumed_primes"] = s.presumed ? Json::array({ideal_key(s.prime)}) : Json::array();
    return j;
}

Stratum stratum_from_json(const ParamContext& ctx, const Json& j)
{
    Stratum s;
    s.index = {j.at("index").at(0).get<int>(), j.at("index").at(1).get<int>()};
    s.prime = groebner(parse_list(j.at("closed_gens"), ctx.u), ctx.u);
    s.open = parse_list(j.at("open_gens"), ctx.u);
    for (const auto& t : j.at("leading_terms")) s.lts.push_back(parse_term(t.get<std::string>(), ctx.x));
    s.presumed = !j.value("presumed_primes", Json::array()).empty();
    const Json& gb = j.at("gb");
    for (size_t e = 0; e < gb.size(); ++e) {
        SectionPoly sec;
        size_t ncharts = 0;
        for (auto it = gb[e].begin(); it != gb[e].end(); ++it) ncharts = std::max(ncharts, it.value().size());
        sec.charts.resize(ncharts);
        bool first = true;
        for (auto it = gb[e].begin(); it != gb[e].end(); ++it) {
            Monomial t = parse_term(it.key(), ctx.x);
            if (first || ctx.x->order.cmp(t, sec.lt) > 0) sec.lt = t;
            first = false;
            for (size_t k = 0; k < it.value().size(); ++k) {
                auto& c = sec.charts[k];
                c.den = parse_poly(it.value()[k].at("den").get<std::string>(), ctx.u);
                QPoly n = parse_poly(it.value()[k].at("num").get<std::string>(), ctx.u);
                if (!n.is_zero()) c.nums.push_back({t, n});
            }
        }
        for (auto& c : sec.charts) {
            std::sort(c.nums.begin(), c.nums.end(),
                      [&](const auto& a, const auto& b) { return ctx.x->order.cmp(a.first, b.first) > 0; });
            c.lift_den = c.den;
        }
        if (j.contains("lifts") && e < j["lifts"].size())
            for (size_t k = 0; k < j["lifts"][e].size() && k < ncharts; ++k)
                sec.charts[k].lift = parse_poly(j["lifts"][e][k].get<std::string>(), ctx.joint);
        s.gb.push_back(std::move(sec));
    }
    return s;
}

Json flags_json(const CoverFlags& f)
{
    return Json{{"coverage", f.coverage},           {"irreducible", f.irreducible}, {"small", f.small},
                {"locally_maximal", f.locally_maximal}, {"parametric", f.parametric},   {"canonical", f.canonical},
                {"any_presumed", f.any_presumed}};
}

Json cover_json(const Problem& p, const GroebnerCover& cv)
{
    Json j;
    j["schema"] = 1;
    j["command"] = "cover";
    j["problem"] = problem_json(p);
    Json st = Json::array();
    for (const auto& s : cv.strata) st.push_back(stratum_json(*p.ctx, s));
    j["strata"] = st;
    j["flags"] = flags_json(cv.flags);
    j["report"] = cv.report;
    return j;
}

Json report_json(const CoverReport& r)
{
    Json j;
    Json st = Json::array();
    for (const auto& s : r.strata) {
        Json e;
        e["index"] = {s.index.first, s.index.second};
        e["prime"] = s.prime;
        e["presumed"] = s.presumed;
        e["generic_only"] = s.generic_only;
        Json pts = Json::array();
        for (const auto& p : s.points) pts.push_back(point_string(p));
        e["points"] = pts;
        Json mm = Json::array();
        for (const auto& m : s.mismatches)
            mm.push_back({{"point", m.point.empty() ? "generic" : point_string(m.point)},
                          {"what", m.what},
                          {"expected", m.expected},
                          {"got", m.got}});
        e["mismatches"] = mm;
        e["pass"] = s.pass();
        st.push_back(e);
    }
    j["strata"] = st;
    j["certificate"] = {{"flags", flags_json(r.certificate.flags)}, {"violations", r.certificate.violations}};
    j["pass"] = r.pass();
    return j;
}

}  // namespace gcover::cli
