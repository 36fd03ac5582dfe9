#pragma once

#include <string>
#include <vector>

#include "gcover/ideal.hpp"

namespace gcover {

// Canonical text key of an ideal (its reduced GB, generators sorted).
std::string ideal_key(const Gens& gb);
std::vector<std::string> ideal_strings(const Gens& gb);

struct PrimeComponent {
    Gens gb;                 // reduced GB; empty for the zero ideal
    bool certified = true;   // false: primality presumed, not proven
};

// Minimal primes of I in `ring`; the unit ideal gives an empty list.
// Pairwise incomparable and sorted by ideal_key.
std::vector<PrimeComponent> minimal_primes(const Gens& I, const RingPtr& ring);
// Dedupe (certified wins), drop primes containing another, sort.
std::vector<PrimeComponent> minimize_primes(std::vector<PrimeComponent> ps);

// V(closed) minus V(open). An empty `open` list is the zero ideal (the piece is empty);
// the whole closed set is represented with open = {1}.
struct Piece {
    Gens closed;  // reduced GB
    Gens open;
};

class ConstructibleSet {
public:
    explicit ConstructibleSet(RingPtr ring) : ring_(std::move(ring)) {}
    static ConstructibleSet whole(const RingPtr& ring);
    static ConstructibleSet closed_set(const RingPtr& ring, const Gens& a);
    static ConstructibleSet locally_closed(const RingPtr& ring, const Gens& a, const Gens& b);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Piece>& pieces() const { return pieces_; }
    bool is_empty() const { return pieces_.empty(); }

    // Adds V(a)∖V(b), simplified; dropped when empty.
    void add_piece(const Gens& a, const Gens& b);

    ConstructibleSet unite(const ConstructibleSet& o) const;
    ConstructibleSet minus(const ConstructibleSet& o) const;
    ConstructibleSet intersect(const ConstructibleSet& o) const;
    // Irreducible components of the Zariski closure.
    std::vector<PrimeComponent> closure() const;
    bool contains_point(const std::vector<Rational>& pt) const;
    bool subset_of(const ConstructibleSet& o) const { return minus(o).is_empty(); }
    bool equals(const ConstructibleSet& o) const { return subset_of(o) && o.subset_of(*this); }

private:
    RingPtr ring_;
    std::vector<Piece> pieces_;
};

bool piece_empty(const Gens& a, const Gens& b, const RingPtr& ring);

// Closed set given by a list of primes, as a constructible set.
ConstructibleSet from_primes(const RingPtr& ring, const std::vector<PrimeComponent>& ps);

// Ideal whose zero set is the union of the V(p) (product of generator lists, reduced).
Gens union_ideal(const std::vector<PrimeComponent>& ps, const RingPtr& ring);

// Z ∖ closure(Z ∖ L): the union of all open subsets of Z contained in L.
ConstructibleSet largest_open_inside(const ConstructibleSet& Z, const ConstructibleSet& L);

// M is locally closed iff M = closure(M) ∖ closure(closure(M) ∖ M).
bool is_locally_closed(const ConstructibleSet& M);

}  // namespace gcover
