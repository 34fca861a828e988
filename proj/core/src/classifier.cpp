#include "ceva/classifier.hpp"

#include <cmath>

namespace ceva {

namespace {

const Mat3 kSwap12 = Mat3::from_rows({0, 1, 0}, {1, 0, 0}, {0, 0, 1});
const Mat3 kSwap13 = Mat3::from_rows({0, 0, 1}, {0, 1, 0}, {1, 0, 0});
const Mat3 kSwap23 = Mat3::from_rows({1, 0, 0}, {0, 0, 1}, {0, 1, 0});
// cyclic shift (e1',e2',e3') = (e2,e3,e1), used to move a zero first row out
// of the way in Lemma 3 branch III
const Mat3 kCycle = Mat3::from_rows({0, 1, 0}, {0, 0, 1}, {1, 0, 0});

Classification finish(const StructureMatrix& input, CanonicalLabel label, const Mat3& w,
                      std::string branch) {
    Classification c;
    c.label = label;
    c.witness = BasisChange{w};
    c.branch = std::move(branch);
    c.residual = basis_change_residual(input, *c.witness, canonical_matrix(label));
    return c;
}

// ---- Lemma 1 witnesses ----------------------------------------------------

// (l,0,0) -> E4
Mat3 l1_single(double l) {
    return Mat3::from_rows({1 / l, 1 / l, 1 / l}, {0, 1, 0}, {0, 0, 1});
}

// (0,mu,gamma) with mu*gamma != 0 -> E5 (same signs) or E6 (opposite signs)
Mat3 l1_pair(double mu, double gamma, bool same_sign) {
    double d = mu + gamma;
    double r2 = same_sign ? gamma / mu : -gamma / mu;
    double r3 = same_sign ? mu / gamma : -mu / gamma;
    // the sign of the last entry is forced by naturality of e1'e3'
    double z3 = same_sign ? -std::sqrt(r3) : std::sqrt(r3);
    return Mat3::from_rows({1 / d, 1 / d, 1 / d}, {1, 0, 0}, {0, std::sqrt(r2) / d, z3 / d});
}

// mu = -l, l*(l+g) > 0 -> E8
Mat3 l1_opposite_pos(double l, double g) {
    double q = std::sqrt(l * (l + g));
    double r = std::sqrt(l / (l + g));
    return Mat3::from_rows({1 / g, 1 / g, 1 / g}, {1 / q, 0, -(l / g) / q},
                           {r / g, (l + g) / (l * g) * r, r / g});
}

// mu = -l, l*(l+g) < 0 -> E8
Mat3 l1_opposite_neg(double l, double g) {
    double r = std::sqrt(-l / (l + g));
    double q = std::sqrt(-l * (l + g));
    return Mat3::from_rows({1 / g, 1 / g, 1 / g}, {r / g, (l + g) / (l * g) * r, r / g},
                           {1 / q, 0, -(l / g) / q});
}

// mu = -l, g = -l -> E8
Mat3 l1_opposite_balanced(double l) {
    double s2 = std::sqrt(2.0);
    return Mat3::from_rows({-1 / l, -1 / l, -1 / l}, {0, 1 / (s2 * l), -1 / (s2 * l)},
                           {s2 / l, 1 / (s2 * l), 1 / (s2 * l)});
}

// all of l, mu, g and l+mu nonzero -> E7/E8/E9 depending on the sign tests
Mat3 l1_generic(double l, double mu, double g, bool swap_rows) {
    double s2 = l + mu;
    double s3 = l + mu + g;
    double u = std::sqrt(std::fabs(mu / (l * s2 * s3)));
    double v = std::sqrt(std::fabs(l / (mu * s2 * s3)));
    double w = std::sqrt(std::fabs(g / s2));
    double r = std::sqrt(std::fabs(s2 / g));
    double us = (l * mu > 0) ? -u : u;
    double zs = (g * s2 > 0) ? -1.0 : 1.0;
    Vec3 e1{1 / s3, 1 / s3, 1 / s3};
    Vec3 uv{us, v, 0};
    Vec3 wr{w / s3, w / s3, zs * r / s3};
    return swap_rows ? Mat3::from_rows(e1, wr, uv) : Mat3::from_rows(e1, uv, wr);
}

// ---- Lemma 3 helpers ------------------------------------------------------

// Matrix with rows (c1,0,0),(c2,0,0),(c3,0,0), c1 nonzero: rescale (and swap
// e2,e3 when needed) into one of E4..E9.
struct NormResult {
    CanonicalLabel label;
    Mat3 p;
};

// The zero flags come from the caller: the entries have heterogeneous
// scales, so re-testing them against a common tolerance here would misfire.
NormResult normalize_column(double c1, double c2, double c3, bool z2, bool z3) {
    int s2 = z2 ? 0 : (c2 * c1 > 0 ? 1 : -1);
    int s3 = z3 ? 0 : (c3 * c1 > 0 ? 1 : -1);
    if ((s2 != 0 && s3 == 0) || (s2 < 0 && s3 > 0)) {
        NormResult inner = normalize_column(c1, c3, c2, z3, z2);
        return {inner.label, inner.p * kSwap23};
    }
    Mat3 p = Mat3::diag(1 / c1, s2 == 0 ? 1.0 : 1 / std::sqrt(std::fabs(c2 * c1)),
                        s3 == 0 ? 1.0 : 1 / std::sqrt(std::fabs(c3 * c1)));
    CanonicalLabel label;
    if (s2 == 0 && s3 == 0)
        label = CanonicalLabel::E4;
    else if (s2 == 0)
        label = s3 > 0 ? CanonicalLabel::E5 : CanonicalLabel::E6;
    else if (s2 > 0)
        label = s3 > 0 ? CanonicalLabel::E7 : CanonicalLabel::E8;
    else
        label = CanonicalLabel::E9;
    return {label, p};
}

Mat3 l3_diag_scaling(double a, double b, double g) {
    return Mat3::diag(1 / a, b / (a * a), g / (a * a));
}

// alpha != 0, lambda = 0, mu != 0: lands in E5/E6 depending on sign of mu
Mat3 l3_122(double a, double b, double g, double mu) {
    double d = a * a + mu * g * g;
    Mat3 p1 = Mat3::from_rows({1 / a, b / (a * a), g / (a * a)}, {0, 1, 0}, {-g * mu / a, 1, 1});
    return Mat3::diag(a * a / d, 1, a / (std::sqrt(std::fabs(mu)) * d)) * p1;
}

std::string label_branch_II(CanonicalLabel l) {
    switch (l) {
    case CanonicalLabel::E7:
        return "L3.g";
    case CanonicalLabel::E8:
        return "L3.h";
    default:
        return "L3.i";
    }
}

std::string label_branch_III(CanonicalLabel l) {
    switch (l) {
    case CanonicalLabel::E7:
        return "L3.n";
    case CanonicalLabel::E8:
        return "L3.o";
    default:
        return "L3.p";
    }
}

} // namespace

Classification classify_equal_rows(const EqualRowsParams& p, double tol) {
    double l = p.lambda, m = p.mu, g = p.gamma;
    double scale = std::max({std::fabs(l), std::fabs(m), std::fabs(g)});
    bool zl = vanishes(l, tol, scale);
    bool zm = vanishes(m, tol, scale);
    bool zg = vanishes(g, tol, scale);
    if (zl && zm && zg)
        throw AllZeroError("all equal-rows parameters vanish; the algebra is E0");
    double sum = l + m + g;
    if (vanishes(sum, tol, scale))
        throw OutOfLemmaScope("equal-rows matrix with vanishing row sum");

    StructureMatrix input = p.matrix();
    int zeros = int(zl) + int(zm) + int(zg);

    if (zeros == 2) {
        if (!zl)
            return finish(input, CanonicalLabel::E4, l1_single(l), "L1.a1");
        if (!zm)
            return finish(input, CanonicalLabel::E4, l1_single(m) * kSwap12, "L1.a2");
        return finish(input, CanonicalLabel::E4, l1_single(g) * kSwap13, "L1.a3");
    }

    if (zeros == 1) {
        if (zl) {
            bool same = m * g > 0;
            return finish(input, same ? CanonicalLabel::E5 : CanonicalLabel::E6,
                          l1_pair(m, g, same), same ? "L1.b1" : "L1.c1");
        }
        if (zm) {
            bool same = l * g > 0;
            return finish(input, same ? CanonicalLabel::E5 : CanonicalLabel::E6,
                          l1_pair(l, g, same) * kSwap12, same ? "L1.b2" : "L1.c2");
        }
        bool same = l * m > 0;
        return finish(input, same ? CanonicalLabel::E5 : CanonicalLabel::E6,
                      l1_pair(m, l, same) * kSwap13, same ? "L1.b3" : "L1.c3");
    }

    double s2 = l + m;
    if (vanishes(s2, tol, scale)) {
        // mu = -lambda; the sum forces gamma != 0
        if (vanishes(l + g, tol, scale))
            return finish(input, CanonicalLabel::E8, l1_opposite_balanced(l), "L1.e3.3");
        if (l * (l + g) > 0)
            return finish(input, CanonicalLabel::E8, l1_opposite_pos(l, g), "L1.e3.1");
        return finish(input, CanonicalLabel::E8, l1_opposite_neg(l, g), "L1.e3.2");
    }

    double s3 = sum;
    bool a_pos = l * m * s2 * s3 > 0;
    bool b_pos = g * s2 > 0;
    if (a_pos && b_pos)
        return finish(input, CanonicalLabel::E7, l1_generic(l, m, g, false), "L1.d");
    if (a_pos)
        return finish(input, CanonicalLabel::E8, l1_generic(l, m, g, false), "L1.e1");
    if (b_pos)
        return finish(input, CanonicalLabel::E8, l1_generic(l, m, g, true), "L1.e2");
    return finish(input, CanonicalLabel::E9, l1_generic(l, m, g, false), "L1.f");
}

Classification classify_lemma2(double a, double b, double tol) {
    Classification c =
        classify_equal_rows(EqualRowsParams{(1 + a) / 2, (1 - b) / 2, (b - a) / 2}, tol);
    if (c.branch.rfind("L1.", 0) == 0)
        c.branch = "L2." + c.branch.substr(3);
    return c;
}

Classification classify_proportional_rows(const ProportionalRowsParams& p, double tol) {
    double a = p.alpha, b = p.beta, g = p.gamma, l = p.lambda, m = p.mu;
    double s_row = std::max({std::fabs(a), std::fabs(b), std::fabs(g)});
    double s_lm = std::max(std::fabs(l), std::fabs(m));
    bool za = vanishes(a, tol, s_row);
    bool zb = vanishes(b, tol, s_row);
    bool zg = vanishes(g, tol, s_row);
    bool zl = vanishes(l, tol, s_lm);
    bool zm = vanishes(m, tol, s_lm);
    StructureMatrix input = p.matrix();

    if (za && zb && zg) {
        Classification c;
        c.label = CanonicalLabel::E0;
        c.branch = "L3.zero";
        c.residual = max_abs(input.a) / std::max(1.0, s_row);
        return c;
    }

    if (!za) {
        double d0 = a * a + l * b * b + m * g * g;
        double s_d0 = std::max({a * a, std::fabs(l) * b * b, std::fabs(m) * g * g});
        if (vanishes(d0, tol, s_d0)) {
            // branch I: the square of e1 is isotropic
            if (zm && !zl && !zb && !zg) {
                Mat3 p2 = Mat3::from_rows({0, -1, 0}, {-1, 0, -1}, {0, 0, 1});
                return finish(input, CanonicalLabel::E1, p2 * l3_diag_scaling(a, b, g), "L3.a1");
            }
            if (zl && !zm && !zb && !zg) {
                Mat3 p2 = Mat3::from_rows({0, 0, -1}, {-1, -1, 0}, {0, 1, 0});
                return finish(input, CanonicalLabel::E1, p2 * l3_diag_scaling(a, b, g), "L3.a2");
            }
            if (zg && zm && !zl && !zb)
                return finish(input, CanonicalLabel::E1, Mat3::diag(1 / a, b / (a * a), 1),
                              "L3.a3");
            if (zb && zl && !zg && !zm)
                return finish(input, CanonicalLabel::E1,
                              Mat3::diag(1 / a, g / (a * a), 1) * kSwap23, "L3.a4");
            if (zg && !zl && !zb && !zm) {
                Mat3 w = Mat3::diag(1 / a, b / (a * a), 1 / (a * std::sqrt(std::fabs(m))));
                return finish(input, m > 0 ? CanonicalLabel::E2 : CanonicalLabel::E3, w,
                              m > 0 ? "L3.b1" : "L3.c1");
            }
            if (zb && !zl && !zg && !zm) {
                Mat3 w =
                    Mat3::diag(1 / a, g / (a * a), 1 / (a * std::sqrt(std::fabs(l)))) * kSwap23;
                return finish(input, l > 0 ? CanonicalLabel::E2 : CanonicalLabel::E3, w,
                              l > 0 ? "L3.b2" : "L3.c2");
            }
            if (!zl && !zb && !zg && !zm) {
                double M = m * g * g / (a * a);
                if (vanishes(M * (1 + M), tol, std::max(std::fabs(M), M * M)))
                    throw OutOfLemmaScope("degenerate isotropic case: singular witness");
                double K = M * (1 + M) * (1 + M);
                double d = 2 * (1 + M);
                Mat3 p2 = Mat3::from_rows({(K + 1) / d, (K - 1) / d, (K + 1) / d},
                                          {(K - 1) / d, (K + 1) / d, (K - 1) / d}, {-M, 0, 1});
                return finish(input, CanonicalLabel::E2, p2 * l3_diag_scaling(a, b, g), "L3.b3");
            }
            // tolerance collision (e.g. both multipliers flagged zero while
            // d0 still registers as vanishing): fall through to branch II
            // logic, which handles every remaining combination
        }
        // branch II
        std::string fb = vanishes(d0, tol, s_d0) ? "L3.I-II:" : "";
        if (zl && zm) {
            Mat3 w = Mat3::from_rows({1 / a, b / (a * a), g / (a * a)}, {0, 1, -1}, {0, 4, 1});
            return finish(input, CanonicalLabel::E4, w, fb + "L3.d");
        }
        if (zl) {
            Mat3 w = l3_122(a, b, g, m);
            return finish(input, m > 0 ? CanonicalLabel::E5 : CanonicalLabel::E6, w,
                          fb + (m > 0 ? "L3.e1" : "L3.f1"));
        }
        if (zm) {
            Mat3 w = l3_122(a, g, b, l) * kSwap23;
            return finish(input, l > 0 ? CanonicalLabel::E5 : CanonicalLabel::E6, w,
                          fb + (l > 0 ? "L3.e2" : "L3.f2"));
        }
        double d1 = a * a + l * b * b;
        double s_d1 = std::max(a * a, std::fabs(l) * b * b);
        if (vanishes(d1, tol, s_d1)) {
            Mat3 p1 = Mat3::from_rows(
                {1 / a, b / (a * a), g / (a * a)}, {-m / (2 * a), b * m / (2 * a * a), 1 / g},
                {(2 * a * a - m * g * g) / (2 * a * a * a),
                 b * (2 * a * a + m * g * g) / (2 * a * a * a * a), g / (a * a)});
            Mat3 w = Mat3::diag(a * a / (m * g * g), 1 / m, -a * a / (m * g * g)) * p1;
            return finish(input, CanonicalLabel::E8, w, fb + "L3.h6");
        }
        Mat3 p1 = Mat3::from_rows({1 / a, b / (a * a), g / (a * a)}, {-l * b / a, 1, 0},
                                  {-m * g / d1, -b * m * g / (a * d1), 1 / a});
        NormResult nr = normalize_column(d0 / (a * a), l * d1, m * d0 / d1, false, !fb.empty());
        return finish(input, nr.label, nr.p * p1, fb + label_branch_II(nr.label));
    }

    // branch III: alpha = 0
    if (zb) {
        // move the nonzero third coordinate into beta's slot
        Classification inner =
            classify_proportional_rows(ProportionalRowsParams{a, g, b, m, l}, tol);
        if (inner.witness)
            return finish(input, inner.label, inner.witness->p * kSwap23,
                          inner.branch + "+swap23");
        return inner;
    }
    if (zl) {
        if (zm) {
            Mat3 w = Mat3::from_rows({0, b, g}, {0, 0, 1 / b}, {1, 0, 0});
            return finish(input, CanonicalLabel::E10, w, "L3.q");
        }
        if (zg) {
            if (m > 0) {
                Mat3 w = Mat3::from_rows({0, b, 0}, {1, 0, 0}, {0, 0, 1 / std::sqrt(m)});
                return finish(input, CanonicalLabel::E11, w, "L3.r");
            }
            Mat3 w = Mat3::from_rows({0, b, 0}, {1, 0, 0}, {0, 0, 1 / std::sqrt(-m)});
            return finish(input, CanonicalLabel::E12, w, "L3.s");
        }
        Mat3 q = Mat3::from_rows({m * g, m * b, 0}, {0, 1, 0}, {0, 0, m});
        Mat3 w = Mat3::diag(1 / (m * m * g * g), 1,
                            1 / (std::sqrt(std::fabs(m)) * std::fabs(m * g))) *
                 q * kSwap13;
        return finish(input, m > 0 ? CanonicalLabel::E5 : CanonicalLabel::E6, w,
                      m > 0 ? "L3.l2" : "L3.m2");
    }
    if (zm) {
        Mat3 p1 = Mat3::from_rows({1 / (l * b), g / (l * b * b), 0}, {0, 1, 0},
                                  {0, 0, std::sqrt(std::fabs(l)) / (l * b)});
        return finish(input, l > 0 ? CanonicalLabel::E5 : CanonicalLabel::E6, p1 * kCycle,
                      l > 0 ? "L3.l1" : "L3.m1");
    }
    if (zg) {
        NormResult nr = normalize_column(l * b, m * b, b, false, false);
        return finish(input, nr.label, nr.p * kCycle, label_branch_III(nr.label));
    }
    double e = l * b * b + m * g * g;
    double s_e = std::max(std::fabs(l) * b * b, std::fabs(m) * g * g);
    if (vanishes(e, tol, s_e)) {
        Mat3 w = Mat3::diag(1 / (l * b), g / (l * b * b), 1 / (std::sqrt(std::fabs(l)) * b)) *
                 kCycle;
        return finish(input, l > 0 ? CanonicalLabel::E2 : CanonicalLabel::E3, w,
                      l > 0 ? "L3.j" : "L3.k");
    }
    Mat3 q = Mat3::from_rows({1, g / (l * b * b), 0}, {-m * g, 1, 0}, {0, 0, 1});
    NormResult nr = normalize_column(e / (l * b * b), m * e, l * b * b, false, false);
    Mat3 w = nr.p * q * Mat3::diag(1 / (l * b), 1, 1) * kCycle;
    return finish(input, nr.label, w, label_branch_III(nr.label));
}

namespace {

bool rows_proportional(const Mat3& a, double tol, ProportionalRowsParams& out) {
    const Vec3& r1 = a.rows[0];
    double n1 = dot(r1, r1);
    double scale = max_abs(a);
    if (max_abs(r1) <= tol * std::max(1.0, scale))
        return false;
    double ratio[2];
    for (int i = 1; i <= 2; ++i) {
        const Vec3& r = a.rows[i];
        double c = dot(r, r1) / n1;
        Vec3 res = r - c * r1;
        double rscale = std::max(max_abs(r), std::fabs(c) * max_abs(r1));
        if (max_abs(res) > tol * std::max(1.0, rscale))
            return false;
        ratio[i - 1] = c;
    }
    out = ProportionalRowsParams{r1[0], r1[1], r1[2], ratio[0], ratio[1]};
    return true;
}

Mat3 permutation_matrix(const int* sigma) {
    Mat3 p;
    for (int i = 0; i < 3; ++i)
        p(i, sigma[i]) = 1.0;
    return p;
}

} // namespace

Classification classify_general(const StructureMatrix& m, double tol) {
    double scale = max_abs(m.a);
    if (scale <= tol) {
        Classification c;
        c.label = CanonicalLabel::E0;
        c.branch = "G.zero";
        c.residual = scale;
        return c;
    }

    // equal-rows shape: every row is a constant vector
    bool equal_rows = true;
    double means[3];
    for (int i = 0; i < 3 && equal_rows; ++i) {
        const Vec3& r = m.a.rows[i];
        double mean = (r[0] + r[1] + r[2]) / 3.0;
        for (int j = 0; j < 3; ++j)
            if (std::fabs(r[j] - mean) > tol * std::max(1.0, scale))
                equal_rows = false;
        means[i] = mean;
    }
    if (equal_rows &&
        !vanishes(means[0] + means[1] + means[2], tol,
                  std::max({std::fabs(means[0]), std::fabs(means[1]), std::fabs(means[2])})))
        return classify_equal_rows(EqualRowsParams{means[0], means[1], means[2]}, tol);

    static const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                    {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    for (const auto& sigma : perms) {
        Mat3 pm;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                pm(i, j) = m.a(sigma[i], sigma[j]);
        ProportionalRowsParams params{};
        if (!rows_proportional(pm, tol, params))
            continue;
        Classification inner = classify_proportional_rows(params, tol);
        bool identity = sigma[0] == 0 && sigma[1] == 1 && sigma[2] == 2;
        if (identity || !inner.witness)
            return inner;
        return finish(m, inner.label, inner.witness->p * permutation_matrix(sigma),
                      inner.branch + "+perm");
    }

    if (equal_rows)
        throw OutOfLemmaScope("equal-rows matrix with vanishing row sum");
    throw UnsupportedShape("matrix fits neither the equal-rows nor the proportional-rows family");
}

} // namespace ceva
