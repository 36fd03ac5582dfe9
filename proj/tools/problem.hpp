#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"

#include "gcover/verify.hpp"

namespace gcover::cli {

using Json = nlohmann::ordered_json;

// Line-oriented `key: value` file; `#` starts a comment, indented lines continue the previous key,
// list values are separated by commas outside parentheses.
struct Problem {
    ContextPtr ctx;
    std::string order = "lex";
    Gens I;                       // joint ring
    Gens target_closed;           // u-ring
    Gens target_open;             // u-ring, {1} when absent
    Gens modulus;                 // u-ring
    std::optional<QPoly> dividend;
    std::optional<Gens> divisors;
    std::optional<Point> point;
    std::optional<Gens> prime;

    ConstructibleSet target() const
    {
        return ConstructibleSet::locally_closed(ctx->u, target_closed, target_open);
    }
};

Problem parse_problem(std::string_view text, const std::optional<std::string>& order_override = {});
Problem load_problem(const std::string& path, const std::optional<std::string>& order_override = {});
std::string read_file(const std::string& path);

Json problem_json(const Problem& p);
Problem problem_from_json(const Json& j);

Json stratum_json(const ParamContext& ctx, const Stratum& s);
Stratum stratum_from_json(const ParamContext& ctx, const Json& j);
Json flags_json(const CoverFlags& f);
Json cover_json(const Problem& p, const GroebnerCover& cv);
Json report_json(const CoverReport& r);

}  // namespace gcover::cli
