#pragma once

#include <vector>

#include "gcover/groebner.hpp"
#include "gcover/polynomial.hpp"

namespace gcover {

// Ideals over Q are plain generator lists; functions taking a `ring` accept an empty list.
using Gens = std::vector<QPoly>;

Gens groebner(const Gens& gens);
Gens groebner(const Gens& gens, const RingPtr& ring);  // re-expressed in `ring` first
bool is_unit(const Gens& gb);
bool member(const QPoly& f, const Gens& gb);
QPoly reduce(const QPoly& f, const Gens& gb);

bool ideal_subset(const Gens& a, const Gens& b_gb);  // a ⊆ <b>, b given as a GB
bool ideal_equal(const Gens& a, const Gens& b);

// Ring with an extra leading variable block (eliminated first).
RingPtr ring_with_front_vars(const RingPtr& r, const std::vector<std::string>& extra);
QPoly lift_front(const QPoly& p, const RingPtr& ext, int nextra);
QPoly drop_front(const QPoly& p, const RingPtr& base, int nextra);

// I ∩ Q[vars ∖ elim], expressed in the original ring.
Gens elimination_ideal(const Gens& I, const std::vector<int>& elim, const RingPtr& ring);
Gens saturation(const Gens& I, const QPoly& f, const RingPtr& ring);
Gens intersection(const Gens& I, const Gens& J, const RingPtr& ring);
Gens quotient(const Gens& I, const Gens& J, const RingPtr& ring);
Gens product(const Gens& I, const Gens& J);

// f ∈ √I via 1 ∈ I + <1 - t f>
bool radical_member(const QPoly& f, const Gens& I, const RingPtr& ring);
bool radical_subset(const Gens& a, const Gens& b, const RingPtr& ring);
bool radical_equal(const Gens& a, const Gens& b, const RingPtr& ring);

// Exact quotient f / g, or false if g does not divide f.
bool exact_divide(const QPoly& f, const QPoly& g, QPoly& q);

}  // namespace gcover
