#include "ceva/oracle.hpp"

#include <array>
#include <cmath>

namespace ceva {

double verify_witness(const StructureMatrix& m, const BasisChange& p, CanonicalLabel label,
                      double tol) {
    if (std::fabs(det(p.p)) <= tol)
        throw SingularWitness("witness determinant vanishes");
    return basis_change_residual(m, p, canonical_matrix(label));
}

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

double uniform_pm2(std::uint64_t& state) {
    return (double(splitmix64(state) >> 11) / double(1ull << 53)) * 4.0 - 2.0;
}

// residual of the natural-basis system, 18 components:
// 3 off-diagonal product vectors (target zero) + 3 diagonal vectors
// (square of e_i' minus the target row mapped to old coordinates)
void residual_vec(const Mat3& p, const Mat3& m, const Mat3& target, std::array<double, 18>& r) {
    int idx = 0;
    for (int i = 0; i < 3; ++i) {
        for (int j = i; j < 3; ++j) {
            Vec3 v{};
            for (int k = 0; k < 3; ++k) {
                double c = p(i, k) * p(j, k);
                for (int l = 0; l < 3; ++l)
                    v[l] += c * m(k, l);
            }
            if (i == j)
                for (int l = 0; l < 3; ++l)
                    v = v - target(i, l) * p.rows[l];
            for (int l = 0; l < 3; ++l)
                r[idx++] = v[l];
        }
    }
}

void jacobian(const Mat3& p, const Mat3& m, const Mat3& target, double J[18][9]) {
    for (int e = 0; e < 18; ++e)
        for (int u = 0; u < 9; ++u)
            J[e][u] = 0.0;
    int idx = 0;
    for (int i = 0; i < 3; ++i) {
        for (int j = i; j < 3; ++j) {
            for (int l = 0; l < 3; ++l, ++idx) {
                for (int b = 0; b < 3; ++b) {
                    if (i == j) {
                        J[idx][3 * i + b] += 2.0 * p(i, b) * m(b, l);
                    } else {
                        J[idx][3 * i + b] += p(j, b) * m(b, l);
                        J[idx][3 * j + b] += p(i, b) * m(b, l);
                    }
                }
                if (i == j)
                    for (int a = 0; a < 3; ++a)
                        J[idx][3 * a + l] -= target(i, a);
            }
        }
    }
}

// dense 9x9 solve with partial pivoting; returns false when singular
bool solve9(double A[9][9], double b[9], double x[9]) {
    int perm[9];
    for (int i = 0; i < 9; ++i)
        perm[i] = i;
    for (int col = 0; col < 9; ++col) {
        int piv = col;
        for (int r = col + 1; r < 9; ++r)
            if (std::fabs(A[r][col]) > std::fabs(A[piv][col]))
                piv = r;
        if (std::fabs(A[piv][col]) < 1e-300)
            return false;
        if (piv != col) {
            for (int c = 0; c < 9; ++c)
                std::swap(A[piv][c], A[col][c]);
            std::swap(b[piv], b[col]);
        }
        for (int r = col + 1; r < 9; ++r) {
            double f = A[r][col] / A[col][col];
            b[r] -= f * b[col];
            for (int c = col; c < 9; ++c)
                A[r][c] -= f * A[col][c];
        }
    }
    for (int r = 8; r >= 0; --r) {
        double s = b[r];
        for (int c = r + 1; c < 9; ++c)
            s -= A[r][c] * x[c];
        x[r] = s / A[r][r];
    }
    return true;
}

double sumsq(const std::array<double, 18>& r) {
    double s = 0.0;
    for (double v : r)
        s += v * v;
    return s;
}

bool refine(Mat3& p, const Mat3& m, const Mat3& target) {
    std::array<double, 18> r;
    residual_vec(p, m, target, r);
    double cost = sumsq(r);
    double lambda = 1e-3;
    for (int iter = 0; iter < 200; ++iter) {
        double J[18][9];
        jacobian(p, m, target, J);
        double A[9][9], g[9];
        for (int u = 0; u < 9; ++u) {
            g[u] = 0.0;
            for (int v = 0; v < 9; ++v)
                A[u][v] = 0.0;
        }
        for (int e = 0; e < 18; ++e) {
            for (int u = 0; u < 9; ++u) {
                g[u] += J[e][u] * r[e];
                for (int v = u; v < 9; ++v)
                    A[u][v] += J[e][u] * J[e][v];
            }
        }
        for (int u = 0; u < 9; ++u)
            for (int v = 0; v < u; ++v)
                A[u][v] = A[v][u];

        bool stepped = false;
        for (int attempt = 0; attempt < 12 && !stepped; ++attempt) {
            double As[9][9], bs[9], dx[9];
            for (int u = 0; u < 9; ++u) {
                bs[u] = -g[u];
                for (int v = 0; v < 9; ++v)
                    As[u][v] = A[u][v];
                As[u][u] += lambda * (1.0 + A[u][u]);
            }
            if (!solve9(As, bs, dx)) {
                lambda *= 10.0;
                continue;
            }
            Mat3 trial = p;
            for (int u = 0; u < 9; ++u)
                trial(u / 3, u % 3) += dx[u];
            std::array<double, 18> rt;
            residual_vec(trial, m, target, rt);
            double ct = sumsq(rt);
            if (ct < cost) {
                p = trial;
                r = rt;
                cost = ct;
                lambda = std::max(lambda / 3.0, 1e-12);
                stepped = true;
            } else {
                lambda *= 4.0;
            }
        }
        if (!stepped)
            return cost < 1e-24;
        if (cost < 1e-28)
            return true;
    }
    return true;
}

} // namespace

IsoSearchReport iso_search(const StructureMatrix& source, const StructureMatrix& target,
                           int restarts, double tol, std::uint64_t seed,
                           const BasisChange* warm_start) {
    IsoSearchReport report;
    report.seed = seed;

    if (derived_dim(source) != derived_dim(target)) {
        report.restarts_used = 0;
        return report;
    }

    for (int restart = 0; restart < restarts; ++restart) {
        Mat3 p;
        if (restart == 0 && warm_start) {
            p = warm_start->p;
        } else {
            std::uint64_t state = seed ^ (0x51ed2701ull * std::uint64_t(restart + 1));
            for (int u = 0; u < 9; ++u)
                p(u / 3, u % 3) = uniform_pm2(state);
        }
        refine(p, source.a, target.a);
        if (std::fabs(det(p)) < 1e-8)
            continue;
        double res = basis_change_residual(source, BasisChange{p}, target);
        if (res <= tol) {
            report.found = true;
            report.witness = BasisChange{p};
            report.residual = res;
            report.restarts_used = restart;
            return report;
        }
    }
    report.restarts_used = restarts;
    return report;
}

} // namespace ceva
