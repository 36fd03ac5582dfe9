#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "problem.hpp"

namespace gcover::cli {

enum ExitCode { kOk = 0, kCertificateFailure = 1, kInputError = 2, kConsistencyError = 3 };

struct Options {
    std::optional<std::string> order;
    std::uint64_t seed = 0;
};

struct Output {
    std::string text;
    Json json;
    int code = kOk;
};

// Commands: cover, hcover, jideal, zgen, pseudodiv, specialize, verify.
// Errors propagate as exceptions (see main for the exit-code mapping).
Output run_command(const std::string& command, const std::string& path, const Options& opt);

Output cmd_cover(const Problem& p);
Output cmd_hcover(const Problem& p);
Output cmd_jideal(const Problem& p);
Output cmd_zgen(const Problem& p);
Output cmd_pseudodiv(const Problem& p);
Output cmd_specialize(const Problem& p);
// Input is a problem file or the JSON written by `cover`.
Output cmd_verify(const std::string& text, const Options& opt);

std::string stratum_text(const ParamContext& ctx, const Stratum& s);

}  // namespace gcover::cli
