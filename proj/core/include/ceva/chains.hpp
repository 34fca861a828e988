#pragma once

#include "ceva/classifier.hpp"
#include "ceva/expr.hpp"

namespace ceva {

enum class Family { M1, M2, M3 };

/// One of the three chain families together with its parameter functions.
/// Only the functions of the selected family are consulted.
struct ChainSpec {
    Family family = Family::M1;

    // M1
    PiecewiseFunction h, f, g;

    // M2
    PiecewiseFunction phi, psi;
    double a = 0.0;

    // M3
    PiecewiseFunction eta, vartheta, kappa, phi1, phi2;
};

/// Structural constants of the chain algebra at times (s, t), 0 <= s <= t.
StructureMatrix chain_matrix(const ChainSpec& c, double s, double t);

struct CkResult {
    double residual; // max-abs entry of M[s,t] - M[s,tau]*M[tau,t]
    double scale;    // max-abs entry across the three matrices
};

/// Chapman-Kolmogorov check at s < tau < t.
CkResult verify_ck(const ChainSpec& c, double s, double tau, double t);

/// Classify the chain algebra at (s, t) by dispatching the family's reduced
/// parameters to the matching lemma classifier.
Classification chain_classify(const ChainSpec& c, double s, double t, double tol = 1e-9);

} // namespace ceva
