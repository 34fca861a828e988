#pragma once

#include <cstdint>
#include <string>

#include "ceva/chains.hpp"

namespace ceva {

/// A full run description: the chain plus domain, grid and tolerance
/// settings. Parsed from the line-oriented text format documented in the
/// README.
struct RunConfig {
    ChainSpec chain;
    double s_max = 8.0;
    double t_max = 8.0;
    int resolution = 512;
    double tol_zero = 1e-9;
    double tol_bisect = 1e-6;
    double tol_ck = 1e-9;
    std::uint64_t seed = 1;
};

/// Throws ConfigError (or SyntaxError from the expression parser) on any
/// malformed input, missing or superfluous parameter function.
RunConfig parse_config(const std::string& text);

RunConfig load_config(const std::string& path);

} // namespace ceva
