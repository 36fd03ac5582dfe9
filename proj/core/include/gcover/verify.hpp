#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "gcover/cover.hpp"

namespace gcover {

using Point = std::vector<Rational>;

struct SamplePlan {
    int points = 10;
    int bound = 20;        // |numerator| of random coordinates
    std::uint64_t seed = 0;
    int budget = 400;      // attempts per stratum
};

struct SampleResult {
    std::vector<Point> points;
    bool generic_only = false;  // no rational point found within the budget
};

// Points of V(closed)∖V(open): free coordinates are random, the rest solved triangularly from a lex GB.
SampleResult sample_points(const RingPtr& u, const Gens& closed, const Gens& open, const SamplePlan& plan,
                           std::mt19937_64& rng);

struct Mismatch {
    Point point;           // empty for the generic-point check
    std::string what;
    std::string expected;
    std::string got;
};

struct StratumReport {
    std::pair<int, int> index{0, 0};
    std::string prime;
    bool presumed = false;
    bool generic_only = false;
    std::vector<Point> points;
    std::vector<Mismatch> mismatches;
    bool pass() const { return mismatches.empty(); }
};

// Compares chart values against fresh Groebner bases of specialized ideals and the generic fibre.
StratumReport check_stratum(const ParamContext& ctx, const Gens& I, const Stratum& s, const SamplePlan& plan,
                            std::mt19937_64& rng);

struct CoverReport {
    std::vector<StratumReport> strata;
    Certificate certificate;
    bool pass() const;
};

CoverReport verify_cover(const ParamContext& ctx, const Gens& I, const std::vector<Stratum>& strata,
                         const ConstructibleSet& L, const SamplePlan& plan = {});

struct LtPointClass {
    std::vector<Monomial> lts;  // minimal generators, descending
    std::vector<Point> points;
};

// lt of the specialized ideal at every grid point (values per axis), grouped in order of first appearance.
std::vector<LtPointClass> brute_force_lt_classes(const ParamContext& ctx, const Gens& I,
                                                 const std::vector<Rational>& axis_values);

std::string point_string(const Point& p);
std::string lts_string(const ParamContext& ctx, const std::vector<Monomial>& lts);
std::string to_text(const CoverReport& r);

}  // namespace gcover
