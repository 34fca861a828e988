#pragma once

#include <string>

#include "ceva/config.hpp"
#include "ceva/partition.hpp"

namespace ceva {

/// The three worked chains: text of their run configurations and the parsed
/// result. example_config(1) is the M1 chain with g(s)=4s-16,
/// f(s)=4s^2-24s+32, h(s)=1/(s+1); example_config(2) the M2 chain with
/// phi(s)=s^2-8s+13, psi(s)=s^2-5, a=10; example_config(3) the M3 chain with
/// the piecewise eta, vartheta, kappa, phi1, phi2 tables.
std::string example_config_text(int which);
RunConfig example_config(int which);

struct ExampleReport {
    bool pass = false;
    std::string detail; // human-readable findings, one line per mismatch
};

/// Compare the computed s-partition (and for 2/3 the two-time behaviour)
/// against the embedded expected tables.
ExampleReport check_example1(const RunConfig& cfg);
ExampleReport check_example2(const RunConfig& cfg);
ExampleReport check_example3(const RunConfig& cfg);

ExampleReport check_example(int which, const RunConfig& cfg);

} // namespace ceva
