#include "ceva/chains.hpp"

#include <cmath>

namespace ceva {

namespace {

double h_at(const ChainSpec& c, double x) {
    double v = c.h.eval(x);
    if (v == 0.0)
        throw DomainError("h vanishes at " + std::to_string(x));
    return v;
}

double theta_at(const ChainSpec& c, double s) {
    double d = c.eta.eval(s) + c.phi1.eval(s) * c.vartheta.eval(s) +
               c.phi2.eval(s) * c.kappa.eval(s);
    if (d == 0.0)
        throw DomainError("theta denominator vanishes at s = " + std::to_string(s));
    return 1.0 / d;
}

EqualRowsParams m1_params(const ChainSpec& c, double s, double t) {
    double hs = h_at(c, s);
    double ht2 = c.h.eval(t) / 2.0;
    double fs = c.f.eval(s);
    double gs = c.g.eval(s);
    return EqualRowsParams{ht2 * (1 / hs + fs), ht2 * (1 / hs - gs), ht2 * (gs - fs)};
}

} // namespace

StructureMatrix chain_matrix(const ChainSpec& c, double s, double t) {
    switch (c.family) {
    case Family::M1:
        return m1_params(c, s, t).matrix();
    case Family::M2: {
        if (t >= c.a)
            return StructureMatrix{Mat3::zero()};
        double ps = c.psi.eval(s);
        double fs = c.phi.eval(s);
        return EqualRowsParams{(1 + ps) / 2, (1 - fs) / 2, (fs - ps) / 2}.matrix();
    }
    case Family::M3: {
        double th = theta_at(c, s);
        Vec3 col{1.0, c.phi1.eval(s), c.phi2.eval(s)};
        Vec3 row{c.eta.eval(t), c.vartheta.eval(t), c.kappa.eval(t)};
        Mat3 m;
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j)
                m(i, j) = th * col[i] * row[j];
        return StructureMatrix{m};
    }
    }
    throw DomainError("corrupt chain family tag");
}

CkResult verify_ck(const ChainSpec& c, double s, double tau, double t) {
    StructureMatrix whole = chain_matrix(c, s, t);
    StructureMatrix left = chain_matrix(c, s, tau);
    StructureMatrix right = chain_matrix(c, tau, t);
    Mat3 diff = whole.a - left.a * right.a;
    double scale = std::max({max_abs(whole.a), max_abs(left.a), max_abs(right.a)});
    return CkResult{max_abs(diff), scale};
}

Classification chain_classify(const ChainSpec& c, double s, double t, double tol) {
    switch (c.family) {
    case Family::M1: {
        double ratio = c.h.eval(t) / h_at(c, s);
        if (std::fabs(ratio) <= tol)
            throw DomainError("h(t)/h(s) vanishes; the row sum leaves Lemma 1's scope");
        return classify_equal_rows(m1_params(c, s, t), tol);
    }
    case Family::M2: {
        if (t >= c.a) {
            Classification r;
            r.label = CanonicalLabel::E0;
            r.branch = "T2.zero";
            r.residual = 0.0;
            return r;
        }
        return classify_lemma2(c.psi.eval(s), c.phi.eval(s), tol);
    }
    case Family::M3: {
        double th = theta_at(c, s);
        return classify_proportional_rows(
            ProportionalRowsParams{th * c.eta.eval(t), th * c.vartheta.eval(t),
                                   th * c.kappa.eval(t), c.phi1.eval(s), c.phi2.eval(s)},
            tol);
    }
    }
    throw DomainError("corrupt chain family tag");
}

} // namespace ceva
