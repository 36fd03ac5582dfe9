#pragma once

#include <string>
#include <vector>

#include "gcover/parametric.hpp"

namespace gcover {

struct CoverFlags {
    bool coverage = false;
    bool irreducible = false;
    bool small = false;
    bool locally_maximal = false;
    bool parametric = false;
    bool canonical = false;
    bool any_presumed = false;
};

struct GroebnerCover {
    ContextPtr ctx;
    Gens I;
    ConstructibleSet target;
    std::vector<Stratum> strata;
    CoverFlags flags;
    std::vector<std::string> report;  // violated certificates, warnings
};

struct CoverOptions {
    bool reverse_prime_order = false;
    bool certify = true;
    ZGenOptions zgen;
};

// Boxed recursion: C_1 = L, Y_ij = Z_ij,gen ∩ (largest open of Z_ij inside L), C_{i+1} = C_i ∖ ∪ Y_ij.
GroebnerCover canonical_cover(const ContextPtr& ctx, const Gens& I, const ConstructibleSet& L,
                              const CoverOptions& opt = {});
GroebnerCover canonical_cover(const ContextPtr& ctx, const Gens& I);

struct Certificate {
    CoverFlags flags;
    std::vector<std::string> violations;
};

// Checks coverage, irreducibility, smallness (pairwise), local maximality (per-stratum recomputation),
// parametricity and, when requested, equality with a freshly computed canonical cover.
Certificate certify_cover(const ParamContext& ctx, const std::vector<Stratum>& strata, const Gens& I,
                          const ConstructibleSet& L, bool check_canonical = true);

// Same pieces (up to radical), leading terms and sections, as sets.
bool same_strata(const ParamContext& ctx, const std::vector<Stratum>& a, const std::vector<Stratum>& b);
bool same_stratum(const ParamContext& ctx, const Stratum& a, const Stratum& b);

bool is_x_homogeneous(const ParamContext& ctx, const QPoly& f);

struct LtClass {
    std::vector<Monomial> lts;
    ConstructibleSet set;
    std::vector<size_t> members;  // indices into the underlying cover's strata
    bool locally_closed = false;
};

struct HomogeneousCover {
    GroebnerCover cover;
    std::vector<LtClass> classes;
};

// Throws std::invalid_argument on non-homogeneous input, ConsistencyError if a merged class is not locally closed.
HomogeneousCover homogeneous_cover(const ContextPtr& ctx, const Gens& I, const ConstructibleSet& L,
                                   const CoverOptions& opt = {});

// Lifts of all chart sections, each verified to lie in I; primitive, sorted, deduplicated.
Gens comprehensive_gb(const GroebnerCover& cover);

}  // namespace gcover
