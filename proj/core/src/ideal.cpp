#include "gcover/ideal.hpp"

namespace gcover {

Gens groebner(const Gens& gens) { return buchberger<Rational>(gens); }

Gens groebner(const Gens& gens, const RingPtr& ring)
{
    Gens g;
    g.reserve(gens.size());
    for (const auto& p : gens) g.push_back(reorder(p, ring));
    return buchberger<Rational>(g);
}

bool is_unit(const Gens& gb) { return gb.size() == 1 && gb[0].is_constant() && !gb[0].is_zero(); }

QPoly reduce(const QPoly& f, const Gens& gb)
{
    if (gb.empty()) return f;
    QPoly p = f;
    detail::reduce_full<Rational>(p, nullptr, gb, nullptr);
    return p;
}

bool member(const QPoly& f, const Gens& gb)
{
    if (f.is_zero()) return true;
    return reduce(f, gb).is_zero();
}

bool ideal_subset(const Gens& a, const Gens& b_gb)
{
    for (const auto& f : a)
        if (!member(f, b_gb)) return false;
    return true;
}

bool ideal_equal(const Gens& a, const Gens& b) { return same_basis(groebner(a), groebner(b)); }

RingPtr ring_with_front_vars(const RingPtr& r, const std::vector<std::string>& extra)
{
    std::vector<std::string> names = extra;
    names.insert(names.end(), r->names.begin(), r->names.end());
    const int k = static_cast<int>(extra.size());
    std::vector<OrderBlock> blocks{OrderBlock{0, k, OrderKind::Grevlex}};
    for (const auto& b : r->order.block_list()) blocks.push_back(OrderBlock{b.start + k, b.len, b.kind});
    return make_ring(std::move(names), TermOrder::blocks(std::move(blocks)));
}

QPoly lift_front(const QPoly& p, const RingPtr& ext, int nextra)
{
    std::vector<int> map(p.ring() ? p.ring()->nvars() : 0);
    for (size_t i = 0; i < map.size(); ++i) map[i] = static_cast<int>(i) + nextra;
    return remap(p, ext, map);
}

QPoly drop_front(const QPoly& p, const RingPtr& base, int nextra)
{
    std::vector<int> map(p.ring()->nvars(), -1);
    for (int i = nextra; i < p.ring()->nvars(); ++i) map[i] = i - nextra;
    return remap(p, base, map);
}

static std::vector<std::string> fresh_names(const RingPtr& r, int k)
{
    std::vector<std::string> out;
    for (int i = 0; static_cast<int>(out.size()) < k; ++i) {
        std::string n = "_t" + std::to_string(i);
        if (r->index_of(n) < 0) out.push_back(n);
    }
    return out;
}

static bool uses_front(const QPoly& p, int nextra)
{
    for (const auto& t : p)
        for (int i = 0; i < nextra; ++i)
            if (t.m[i]) return true;
    return false;
}

// GB in `ext` (front block eliminated), keeping elements free of the front variables.
static Gens eliminate_front(const Gens& gens_ext, const RingPtr& base, int nextra)
{
    Gens gb = groebner(gens_ext);
    Gens out;
    for (const auto& g : gb)
        if (!uses_front(g, nextra)) out.push_back(drop_front(g, base, nextra));
    return out;
}

Gens elimination_ideal(const Gens& I, const std::vector<int>& elim, const RingPtr& ring)
{
    const int n = ring->nvars();
    std::vector<char> is_elim(n, 0);
    for (int v : elim) is_elim[v] = 1;
    std::vector<std::string> names;
    std::vector<int> to(n);
    int k = 0;
    for (int i = 0; i < n; ++i)
        if (is_elim[i]) {
            to[i] = k++;
            names.push_back(ring->names[i]);
        }
    const int ne = k;
    for (int i = 0; i < n; ++i)
        if (!is_elim[i]) {
            to[i] = k++;
            names.push_back(ring->names[i]);
        }
    RingPtr ext = make_ring(names, TermOrder::blocks({OrderBlock{0, ne, OrderKind::Grevlex},
                                                      OrderBlock{ne, n - ne, OrderKind::Grevlex}}));
    Gens g;
    for (const auto& p : I) g.push_back(remap(p, ext, to));
    Gens gb = groebner(g);
    std::vector<int> back(n, -1);
    for (int i = 0; i < n; ++i) back[to[i]] = i;
    Gens out;
    for (const auto& p : gb)
        if (!uses_front(p, ne)) out.push_back(remap(p, ring, back));
    return out;
}

Gens saturation(const Gens& I, const QPoly& f, const RingPtr& ring)
{
    auto names = fresh_names(ring, 1);
    RingPtr ext = ring_with_front_vars(ring, names);
    Gens g;
    for (const auto& p : I) g.push_back(lift_front(p, ext, 1));
    g.push_back(qone(ext) - qvar(ext, 0) * lift_front(f, ext, 1));
    return eliminate_front(g, ring, 1);
}

Gens intersection(const Gens& I, const Gens& J, const RingPtr& ring)
{
    auto names = fresh_names(ring, 1);
    RingPtr ext = ring_with_front_vars(ring, names);
    QPoly t = qvar(ext, 0);
    QPoly omt = qone(ext) - t;
    Gens g;
    for (const auto& p : I) g.push_back(t * lift_front(p, ext, 1));
    for (const auto& p : J) g.push_back(omt * lift_front(p, ext, 1));
    return eliminate_front(g, ring, 1);
}

bool exact_divide(const QPoly& f, const QPoly& g, QPoly& q)
{
    if (g.is_zero()) throw std::domain_error("division by zero polynomial");
    auto dr = divide<Rational>(f, Gens{g});
    if (!dr.remainder.is_zero()) return false;
    q = dr.quotients[0];
    return true;
}

Gens quotient(const Gens& I, const Gens& J, const RingPtr& ring)
{
    Gens acc{qone(ring)};
    bool first = true;
    for (const auto& h : J) {
        if (h.is_zero()) continue;
        Gens inter = intersection(I, Gens{h}, ring);
        Gens q;
        for (const auto& p : inter) {
            QPoly r;
            if (!exact_divide(p, h, r)) throw std::logic_error("quotient: intersection element not divisible");
            q.push_back(r);
        }
        acc = first ? groebner(q) : groebner(intersection(acc, q, ring));
        first = false;
    }
    return acc;
}

Gens product(const Gens& I, const Gens& J)
{
    Gens out;
    for (const auto& a : I)
        for (const auto& b : J) {
            QPoly p = a * b;
            if (!p.is_zero()) out.push_back(make_monic(p));
        }
    std::sort(out.begin(), out.end(), canonical_less);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool radical_member(const QPoly& f, const Gens& I, const RingPtr& ring)
{
    if (f.is_zero()) return true;
    auto names = fresh_names(ring, 1);
    RingPtr ext = ring_with_front_vars(ring, names);
    Gens g;
    for (const auto& p : I) g.push_back(lift_front(p, ext, 1));
    g.push_back(qone(ext) - qvar(ext, 0) * lift_front(f, ext, 1));
    return is_unit(groebner(g));
}

bool radical_subset(const Gens& a, const Gens& b, const RingPtr& ring)
{
    for (const auto& f : a)
        if (!radical_member(f, b, ring)) return false;
    return true;
}

bool radical_equal(const Gens& a, const Gens& b, const RingPtr& ring)
{
    return radical_subset(a, b, ring) && radical_subset(b, a, ring);
}

}  // namespace gcover
