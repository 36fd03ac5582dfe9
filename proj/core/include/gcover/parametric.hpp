#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gcover/decompose.hpp"
#include "gcover/residue.hpp"

namespace gcover {

// Raised when a step that theory guarantees cannot fail does fail (CLI exit code 3).
class ConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Polynomials in x with coefficients in Q[u] or Frac(Q[u]/p).
using XPoly = Poly<QPoly>;
using FPoly = Poly<FracElem>;

// Rings of a parametric problem: u (parameters, grevlex), x (variables, user order) and
// the joint ring [x.., u..] with the block order x >> u.
struct ParamContext {
    std::vector<std::string> params, vars;
    RingPtr u, x, joint;
    int n() const { return static_cast<int>(vars.size()); }
    int m() const { return static_cast<int>(params.size()); }

    QPoly u_to_joint(const QPoly& f) const;
    QPoly x_to_joint(const QPoly& f) const;
    // f must be free of x
    QPoly joint_to_u(const QPoly& f) const;
    XPoly to_x(const QPoly& joint_poly) const;
    QPoly from_x(const XPoly& f) const;
    Monomial x_part(const Monomial& m) const;
    Monomial u_part(const Monomial& m) const;  // in u-ring indices
};

using ContextPtr = std::shared_ptr<const ParamContext>;
ContextPtr make_context(std::vector<std::string> params, std::vector<std::string> vars, OrderKind xorder);

// ---- specialization

QPoly specialize(const ParamContext& ctx, const QPoly& f, const std::vector<Rational>& point);
Gens specialize(const ParamContext& ctx, const Gens& I, const std::vector<Rational>& point);
std::vector<FPoly> generic_specialize(const ParamContext& ctx, const Gens& I, const DomainPtr& dom);
std::vector<FPoly> generic_gb(const ParamContext& ctx, const Gens& I, const DomainPtr& dom);

// ---- pseudo-division

struct PseudoDivision {
    QPoly c;
    std::vector<XPoly> quotients;
    XPoly remainder;
};

// c·f = Σ q_j g_j + r with coefficients reduced modulo `modulus_gb` (a GB in the u-ring; empty = exact).
PseudoDivision pseudo_divide(const XPoly& f, const std::vector<XPoly>& G, const Gens& modulus_gb = {});
XPoly nf_coeffs(const XPoly& f, const Gens& modulus_gb);

// ---- Groebner data over A/a

struct RingGB {
    Gens modulus;                 // reduced GB of a in the u-ring
    std::vector<QPoly> elems;     // joint-ring GB elements of I + a with lc_x not in a
    std::vector<QPoly> lifts;     // elements of I congruent to elems[i] modulo a (when tracked)
    std::vector<Monomial> lt_x;   // x-ring monomials
    std::vector<QPoly> lc_x;      // u-ring, normal forms mod a
    bool zero_ring = false;       // a is the unit ideal
};

RingGB ring_gb(const ParamContext& ctx, const Gens& I, const Gens& a, bool track_lifts = false);
// Minimal generators of lt(Ī), descending.
std::vector<Monomial> leading_terms(const ParamContext& ctx, const RingGB& rgb);
Gens lc_ideal(const RingGB& rgb, const Monomial& t);
// Product of lc(Ī, t) over the minimal generators t; <1> when Ī = 0.
Gens singular_ideal(const ParamContext& ctx, const RingGB& rgb);
Gens singular_ideal(const ParamContext& ctx, const Gens& I, const Gens& a);
bool is_lucky(const ParamContext& ctx, const Gens& I, const Gens& a, const Gens& p);

// ---- strata

struct Chart {
    QPoly den;                                  // u-ring, not in p
    std::vector<std::pair<Monomial, QPoly>> nums;  // x-term -> numerator (u-ring), descending
    QPoly lift;                                 // joint-ring element of I whose class gives this chart
    QPoly lift_den;                             // x-leading coefficient of lift mod p (den times a common factor)
};

// A monic polynomial over the stratum with leading term lt; each chart gives all coefficients.
struct SectionPoly {
    Monomial lt;
    std::vector<Chart> charts;
};

struct Stratum {
    std::pair<int, int> index{0, 0};
    Gens prime;            // reduced GB in the u-ring
    bool presumed = false;
    Gens open;             // piece = V(prime) ∖ V(open)
    std::vector<Monomial> lts;
    std::vector<SectionPoly> gb;

    ConstructibleSet piece(const RingPtr& u) const { return ConstructibleSet::locally_closed(u, prime, open); }
};

struct ZGenOptions {
    int max_combinations = 64;
    bool descending = false;  // try candidates with the largest lc degree first
};

// Z_gen of V(p) with its reduced GB as chart sections; nullopt when Z_gen is empty.
std::optional<Stratum> z_gen(const ParamContext& ctx, const Gens& I, const PrimeComponent& p,
                             const ZGenOptions& opt = {});

// Y ∩ V(J) = ∅ for J the singular ideal over the radical ideal of closure(Y).
bool is_parametric(const ParamContext& ctx, const Gens& I, const ConstructibleSet& Y);

// Value of a section coefficient at the generic point (any chart).
FracElem section_value(const Chart& c, const Monomial& t, const DomainPtr& dom);
// Evaluate a stratum element at a rational point; nullopt when no chart applies.
std::optional<QPoly> evaluate_section(const ParamContext& ctx, const SectionPoly& s, const std::vector<Rational>& pt,
                                      bool* charts_agree = nullptr);

// ---- Weispfenning's ideals for a = 0

struct WeispfenningIdeal {
    FPoly g;          // generic GB element
    QPoly cleared;    // primitive in Q[u][x], joint ring
    Gens Jg;          // {a : a·g ∈ I}
};
std::vector<WeispfenningIdeal> weispfenning_ideals(const ParamContext& ctx, const Gens& I);

std::string to_string(const ParamContext& ctx, const XPoly& f);
std::string to_string(const FPoly& f);

}  // namespace gcover
