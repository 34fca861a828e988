#pragma once

#include <cstdint>
#include <optional>

#include "ceva/algebra.hpp"
#include "ceva/canonical.hpp"

namespace ceva {

struct IsoSearchReport {
    bool found = false;
    std::optional<BasisChange> witness;
    double residual = 0.0;
    int restarts_used = 0;
    std::uint64_t seed = 0;
};

/// Check that p carries m onto canonical_matrix(label): returns the max
/// relative residual of the nine natural-basis equations. Throws
/// SingularWitness when |det p| <= tol.
double verify_witness(const StructureMatrix& m, const BasisChange& p, CanonicalLabel label,
                     double tol = 1e-12);

/// Multistart damped least-squares search for a basis change carrying source
/// onto target. Deterministic for a given seed; restarts are numbered from 0
/// and the report carries the first that succeeded. `warm_start`, when given,
/// is tried as restart 0 before any random initialization.
IsoSearchReport iso_search(const StructureMatrix& source, const StructureMatrix& target,
                           int restarts, double tol, std::uint64_t seed,
                           const BasisChange* warm_start = nullptr);

} // namespace ceva
