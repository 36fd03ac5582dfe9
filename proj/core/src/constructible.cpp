#include <algorithm>
#include <set>

#include "gcover/decompose.hpp"

namespace gcover {

namespace {

Gens product_gens(const Gens& a, const Gens& b)
{
    Gens out;
    std::set<std::string> keys;
    for (const auto& x : a)
        for (const auto& y : b) {
            QPoly p = x * y;
            if (p.is_zero()) continue;
            p = make_monic(p);
            if (keys.insert(to_string(p)).second) out.push_back(p);
        }
    std::sort(out.begin(), out.end(), canonical_less);
    return out;
}

Gens concat(const Gens& a, const Gens& b)
{
    Gens g = a;
    g.insert(g.end(), b.begin(), b.end());
    return g;
}

bool has_nonzero_constant(const Gens& g)
{
    for (const auto& p : g)
        if (p.is_constant() && !p.is_zero()) return true;
    return false;
}

}  // namespace

bool piece_empty(const Gens& a, const Gens& b, const RingPtr& ring)
{
    Gens A = groebner(a, ring);
    if (is_unit(A)) return true;
    return radical_subset(b, A, ring);
}

ConstructibleSet ConstructibleSet::whole(const RingPtr& ring)
{
    ConstructibleSet c(ring);
    c.add_piece({}, {qone(ring)});
    return c;
}

ConstructibleSet ConstructibleSet::closed_set(const RingPtr& ring, const Gens& a)
{
    ConstructibleSet c(ring);
    c.add_piece(a, {qone(ring)});
    return c;
}

ConstructibleSet ConstructibleSet::locally_closed(const RingPtr& ring, const Gens& a, const Gens& b)
{
    ConstructibleSet c(ring);
    c.add_piece(a, b);
    return c;
}

void ConstructibleSet::add_piece(const Gens& a, const Gens& b)
{
    Gens A = groebner(a, ring_);
    if (is_unit(A)) return;
    Gens B;
    std::set<std::string> keys;
    bool whole_open = false;
    for (const auto& g : b) {
        QPoly r = reduce(reorder(g, ring_), A);
        if (r.is_zero()) continue;
        if (r.is_constant()) {
            whole_open = true;
            break;
        }
        if (radical_member(r, A, ring_)) continue;
        r = make_monic(r);
        if (keys.insert(to_string(r)).second) B.push_back(r);
    }
    if (whole_open) B = {qone(ring_)};
    if (B.empty()) return;
    std::sort(B.begin(), B.end(), canonical_less);
    for (const auto& p : pieces_)
        if (same_basis(p.closed, A) && p.open.size() == B.size() && std::equal(B.begin(), B.end(), p.open.begin()))
            return;
    pieces_.push_back(Piece{std::move(A), std::move(B)});
}

ConstructibleSet ConstructibleSet::unite(const ConstructibleSet& o) const
{
    ConstructibleSet r = *this;
    for (const auto& p : o.pieces_) r.add_piece(p.closed, p.open);
    return r;
}

ConstructibleSet ConstructibleSet::minus(const ConstructibleSet& o) const
{
    ConstructibleSet cur = *this;
    for (const auto& q : o.pieces_) {
        ConstructibleSet next(ring_);
        for (const auto& p : cur.pieces_) {
            // V(a)∖V(b) minus V(c)∖V(d) = V(a)∖V(b·c) ∪ V(a+d)∖V(b)
            next.add_piece(p.closed, has_nonzero_constant(p.open) ? q.closed : product_gens(p.open, q.closed));
            next.add_piece(concat(p.closed, q.open), p.open);
        }
        cur = std::move(next);
        if (cur.is_empty()) break;
    }
    return cur;
}

ConstructibleSet ConstructibleSet::intersect(const ConstructibleSet& o) const
{
    ConstructibleSet r(ring_);
    for (const auto& p : pieces_)
        for (const auto& q : o.pieces_) r.add_piece(concat(p.closed, q.closed), product_gens(p.open, q.open));
    return r;
}

std::vector<PrimeComponent> ConstructibleSet::closure() const
{
    std::vector<PrimeComponent> all;
    for (const auto& p : pieces_)
        for (auto& c : minimal_primes(p.closed, ring_))
            if (!ideal_subset(p.open, c.gb)) all.push_back(std::move(c));
    return minimize_primes(std::move(all));
}

bool ConstructibleSet::contains_point(const std::vector<Rational>& pt) const
{
    for (const auto& p : pieces_) {
        bool on = true;
        for (const auto& g : p.closed)
            if (evaluate(g, pt) != 0) {
                on = false;
                break;
            }
        if (!on) continue;
        for (const auto& g : p.open)
            if (evaluate(g, pt) != 0) return true;
    }
    return false;
}

ConstructibleSet from_primes(const RingPtr& ring, const std::vector<PrimeComponent>& ps)
{
    ConstructibleSet c(ring);
    for (const auto& p : ps) c.add_piece(p.gb, {qone(ring)});
    return c;
}

Gens union_ideal(const std::vector<PrimeComponent>& ps, const RingPtr& ring)
{
    Gens acc{qone(ring)};
    for (const auto& p : ps) acc = product_gens(acc, p.gb);
    return acc;
}

ConstructibleSet largest_open_inside(const ConstructibleSet& Z, const ConstructibleSet& L)
{
    ConstructibleSet bad = Z.minus(L);
    if (bad.is_empty()) return Z;
    return Z.minus(from_primes(Z.ring(), bad.closure()));
}

bool is_locally_closed(const ConstructibleSet& M)
{
    ConstructibleSet K = from_primes(M.ring(), M.closure());
    ConstructibleSet rest = K.minus(M);
    ConstructibleSet open_part = K.minus(from_primes(M.ring(), rest.closure()));
    return open_part.equals(M);
}

}  // namespace gcover
