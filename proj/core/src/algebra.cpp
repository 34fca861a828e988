#include "ceva/algebra.hpp"

#include <algorithm>
#include <cmath>

namespace ceva {

Vec3 multiply(const Vec3& x, const Vec3& y, const StructureMatrix& m) {
    Vec3 r{};
    for (std::size_t k = 0; k < 3; ++k) {
        double c = x[k] * y[k];
        for (std::size_t l = 0; l < 3; ++l)
            r[l] += c * m.a(k, l);
    }
    return r;
}

StructureMatrix transform(const StructureMatrix& m, const BasisChange& p, double tol) {
    double d = det(p.p);
    double pscale = max_abs(p.p);
    if (std::fabs(d) <= tol * std::max(1.0, pscale * pscale * pscale))
        throw SingularBasis("basis change is singular");

    // e_i' e_j' = sum_k p_ik p_jk (e_k e_k); must vanish for i != j
    std::array<Vec3, 3> squares;
    double mscale = max_abs(m.a);
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = i; j < 3; ++j) {
            Vec3 prod{};
            double summand_scale = 0.0;
            for (std::size_t k = 0; k < 3; ++k) {
                double c = p.p(i, k) * p.p(j, k);
                summand_scale = std::max(summand_scale, std::fabs(c) * mscale);
                for (std::size_t l = 0; l < 3; ++l)
                    prod[l] += c * m.a(k, l);
            }
            if (i == j) {
                squares[i] = prod;
            } else if (max_abs(prod) > tol * std::max(1.0, summand_scale)) {
                throw NotNaturalBasis("off-diagonal product e" + std::to_string(i + 1) + "'e" +
                                      std::to_string(j + 1) + "' does not vanish");
            }
        }
    }

    Mat3 pinv = inverse(p.p, tol);
    StructureMatrix out;
    for (std::size_t i = 0; i < 3; ++i)
        out.a.rows[i] = row_times(squares[i], pinv);
    return out;
}

double basis_change_residual(const StructureMatrix& m, const BasisChange& p,
                             const StructureMatrix& target) {
    double mscale = max_abs(m.a);
    double worst = 0.0;
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = i; j < 3; ++j) {
            Vec3 err{};
            double scale = 0.0;
            for (std::size_t k = 0; k < 3; ++k) {
                double c = p.p(i, k) * p.p(j, k);
                scale = std::max(scale, std::fabs(c) * mscale);
                for (std::size_t l = 0; l < 3; ++l)
                    err[l] += c * m.a(k, l);
            }
            if (i == j) {
                // subtract the target square expressed in old coordinates:
                // e_i'e_i' should equal sum_l target(i,l) e_l'
                for (std::size_t l = 0; l < 3; ++l) {
                    double c = target.a(i, l);
                    scale = std::max(scale, std::fabs(c) * max_abs(p.p.rows[l]));
                    err = err - c * p.p.rows[l];
                }
            }
            worst = std::max(worst, max_abs(err) / std::max(1.0, scale));
        }
    }
    return worst;
}

int derived_dim(const StructureMatrix& m, double tol) {
    // Gaussian elimination with partial pivoting on a copy; rank at relative
    // tolerance
    Mat3 w = m.a;
    double scale = std::max(1.0, max_abs(w));
    int rank = 0;
    std::size_t row = 0;
    for (std::size_t col = 0; col < 3 && row < 3; ++col) {
        std::size_t piv = row;
        for (std::size_t r = row + 1; r < 3; ++r)
            if (std::fabs(w(r, col)) > std::fabs(w(piv, col)))
                piv = r;
        if (std::fabs(w(piv, col)) <= tol * scale)
            continue;
        std::swap(w.rows[piv], w.rows[row]);
        for (std::size_t r = row + 1; r < 3; ++r) {
            double f = w(r, col) / w(row, col);
            for (std::size_t c = col; c < 3; ++c)
                w(r, c) -= f * w(row, c);
        }
        ++rank;
        ++row;
    }
    return rank;
}

} // namespace ceva
