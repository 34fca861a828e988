#pragma once

#include "ceva/mat3.hpp"

namespace ceva {

/// Structural constants of a 3-dimensional evolution algebra:
/// row i holds the coordinates of e_i * e_i in the basis (e_1, e_2, e_3),
/// and distinct basis elements multiply to zero.
struct StructureMatrix {
    Mat3 a;

    double operator()(std::size_t i, std::size_t j) const { return a(i, j); }
};

/// Change of basis. Row i holds the coordinates of the new basis vector
/// e_i' in the old basis.
struct BasisChange {
    Mat3 p;
};

inline BasisChange compose(const BasisChange& outer, const BasisChange& inner) {
    // rows of (outer.p * inner.p) express the outer new basis directly in the
    // original coordinates
    return BasisChange{outer.p * inner.p};
}

/// Relative-zero test: q vanishes iff |q| <= tol * max(1, scale), where scale
/// is the magnitude of the data q was computed from.
inline bool vanishes(double q, double tol, double scale = 1.0) {
    return std::fabs(q) <= tol * std::max(1.0, std::fabs(scale));
}

inline int sign_of(double q, double tol, double scale = 1.0) {
    if (vanishes(q, tol, scale))
        return 0;
    return q > 0 ? 1 : -1;
}

/// Product of elements x = sum x_k e_k and y = sum y_k e_k:
/// (xy)_l = sum_k x_k y_k a[k][l].
Vec3 multiply(const Vec3& x, const Vec3& y, const StructureMatrix& m);

/// Change of basis for the structural matrix. Checks that the rows of p form
/// a natural basis (all pairwise products vanish relative to tol) and returns
/// the structural matrix in the new basis. Throws NotNaturalBasis or
/// SingularBasis.
StructureMatrix transform(const StructureMatrix& m, const BasisChange& p, double tol = 1e-9);

/// Numerical rank of the structural matrix; equals dim(E^2).
int derived_dim(const StructureMatrix& m, double tol = 1e-9);

/// Residual of the natural-basis change equations: how far transforming m by
/// p is from producing target. Max over the six product equations (three
/// off-diagonal products against zero, three squares against the target rows
/// mapped back to the old basis) of the equation's max-abs error divided by
/// max(1, magnitude of its summands). Does not check det(p).
double basis_change_residual(const StructureMatrix& m, const BasisChange& p,
                             const StructureMatrix& target);

} // namespace ceva
