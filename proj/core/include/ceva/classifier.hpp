#pragma once

#include <optional>
#include <string>

#include "ceva/algebra.hpp"
#include "ceva/canonical.hpp"

namespace ceva {

/// Result of classifying a structure matrix against the canonical catalogue.
/// The witness is a basis change taking the input to canonical_matrix(label);
/// it is absent only for E0. `branch` names the decision-table case that
/// fired, `residual` is the verified error of the witness equations.
struct Classification {
    CanonicalLabel label;
    std::optional<BasisChange> witness;
    std::string branch;
    double residual = 0.0;
};

/// Matrix with rows (l,l,l), (m,m,m), (g,g,g).
struct EqualRowsParams {
    double lambda, mu, gamma;

    StructureMatrix matrix() const {
        return StructureMatrix{Mat3::from_rows({lambda, lambda, lambda}, {mu, mu, mu},
                                               {gamma, gamma, gamma})};
    }
};

/// Matrix with rows (a,b,g), l*(a,b,g), m*(a,b,g).
struct ProportionalRowsParams {
    double alpha, beta, gamma, lambda, mu;

    StructureMatrix matrix() const {
        Vec3 r{alpha, beta, gamma};
        return StructureMatrix{Mat3::from_rows(r, lambda * r, mu * r)};
    }
};

/// Equal-rows classification; requires lambda+mu+gamma away from zero.
/// Labels range over E4..E9. Throws OutOfLemmaScope when the row sum
/// vanishes, AllZeroError when all three parameters vanish.
Classification classify_equal_rows(const EqualRowsParams& p, double tol = 1e-9);

/// Equal-rows matrix with parameters ((1+a)/2, (1-b)/2, (b-a)/2); the row sum
/// is 1, so this is always in scope.
Classification classify_lemma2(double a, double b, double tol = 1e-9);

/// Proportional-rows classification; total on finite inputs, labels range
/// over the whole catalogue including E0.
Classification classify_proportional_rows(const ProportionalRowsParams& p, double tol = 1e-9);

/// Shape detection + dispatch for a raw structure matrix. Throws
/// UnsupportedShape when the matrix fits neither family (up to basis
/// permutation), OutOfLemmaScope for an equal-rows matrix with vanishing row
/// sum that no permutation rescues.
Classification classify_general(const StructureMatrix& m, double tol = 1e-9);

} // namespace ceva
