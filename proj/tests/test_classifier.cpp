#include <doctest.h>

#include <cmath>
#include <random>

#include "ceva/classifier.hpp"
#include "ceva/oracle.hpp"

using namespace ceva;

namespace {

// Independent condition table for the equal-rows family, coded straight from
// the sign predicates rather than the decision tree the classifier walks.
CanonicalLabel equal_rows_oracle(double l, double m, double g) {
    int zeros = (l == 0) + (m == 0) + (g == 0);
    if (zeros >= 2)
        return CanonicalLabel::E4;
    if (zeros == 1) {
        double prod = l == 0 ? m * g : (m == 0 ? l * g : l * m);
        return prod > 0 ? CanonicalLabel::E5 : CanonicalLabel::E6;
    }
    if (l + m == 0)
        return CanonicalLabel::E8;
    double A = l * m * (l + m) * (l + m + g);
    double B = g * (l + m);
    if (A > 0 && B > 0)
        return CanonicalLabel::E7;
    if (A < 0 && B < 0)
        return CanonicalLabel::E9;
    return CanonicalLabel::E8;
}

void check_witness(const Classification& c, const StructureMatrix& m, double tol = 1e-9) {
    REQUIRE(c.witness.has_value());
    double r = verify_witness(m, *c.witness, c.label);
    CHECK_MESSAGE(r <= tol, c.branch << " residual " << r);
}

} // namespace

TEST_CASE("equal rows: catalogue of simple parameter triples") {
    struct Row {
        double l, m, g;
        CanonicalLabel want;
    };
    const Row rows[] = {
        {1, 0, 0, CanonicalLabel::E4},   {0, -2, 0, CanonicalLabel::E4},
        {0, 0, 0.5, CanonicalLabel::E4}, {0, 1, 1, CanonicalLabel::E5},
        {1, 0, 2, CanonicalLabel::E5},   {2, 3, 0, CanonicalLabel::E5},
        {0, 1, -3, CanonicalLabel::E6},  {-1, 0, 2, CanonicalLabel::E6},
        {1, -2, 0, CanonicalLabel::E6},  {1, 1, 1, CanonicalLabel::E7},
        {1, -1, 1, CanonicalLabel::E8},  {1, 1, -1, CanonicalLabel::E8},
        {-1, -1, -1, CanonicalLabel::E7}, {1, 1, -3, CanonicalLabel::E9},
    };
    for (const Row& r : rows) {
        EqualRowsParams p{r.l, r.m, r.g};
        Classification c = classify_equal_rows(p);
        CHECK_MESSAGE(c.label == r.want,
                      "(" << r.l << "," << r.m << "," << r.g << ") got " << to_string(c.label));
        check_witness(c, p.matrix());
    }
}

TEST_CASE("equal rows: witness for the single-parameter case") {
    EqualRowsParams p{1, 0, 0};
    Classification c = classify_equal_rows(p);
    CHECK(c.label == CanonicalLabel::E4);
    REQUIRE(c.witness.has_value());
    Mat3 expect = Mat3::from_rows({1, 1, 1}, {0, 1, 0}, {0, 0, 1});
    CHECK(max_abs(c.witness->p - expect) <= 1e-12);
}

TEST_CASE("equal rows: scope errors") {
    CHECK_THROWS_AS(classify_equal_rows({0, 0, 0}), AllZeroError);
    CHECK_THROWS_AS(classify_equal_rows({1, -2, 1}), OutOfLemmaScope);
    CHECK_THROWS_AS(classify_equal_rows({1, 1, -2}), OutOfLemmaScope);
}

TEST_CASE("equal rows: random agreement with the condition table") {
    std::mt19937_64 rng(101);
    std::uniform_real_distribution<double> u(-4, 4);
    std::uniform_int_distribution<int> zero_mask(0, 7);
    int done = 0;
    while (done < 4000) {
        int mask = zero_mask(rng);
        double l = (mask & 1) ? 0.0 : u(rng);
        double m = (mask & 2) ? 0.0 : u(rng);
        double g = (mask & 4) ? 0.0 : u(rng);
        if (std::abs(l + m + g) < 1e-3 || std::abs(l) + std::abs(m) + std::abs(g) < 1e-3)
            continue;
        // keep away from the interior decision surfaces so that the exact
        // sign predicates and the toleranced classifier must agree
        if (std::abs(l + m) < 1e-3 && l != 0 && l + m != 0)
            continue;
        if (std::abs(l * m * (l + m) * (l + m + g)) < 1e-3 && l * m * g != 0 && l + m != 0)
            continue;
        ++done;
        EqualRowsParams p{l, m, g};
        Classification c = classify_equal_rows(p);
        CHECK_MESSAGE(c.label == equal_rows_oracle(l, m, g),
                      "(" << l << "," << m << "," << g << ") " << c.branch);
        check_witness(c, p.matrix());
    }
}

TEST_CASE("lemma 2 parameterization") {
    CHECK(classify_lemma2(1, 1).label == CanonicalLabel::E4);
    CHECK(classify_lemma2(-1, -1).label == CanonicalLabel::E4);
    CHECK(classify_lemma2(-1, 1).label == CanonicalLabel::E4);
    CHECK(classify_lemma2(0, 0).label == CanonicalLabel::E5);
    CHECK(classify_lemma2(-1, 3).label == CanonicalLabel::E6);
    CHECK(classify_lemma2(0.5, -0.5).label == CanonicalLabel::E8);

    Classification c = classify_lemma2(0.25, -0.75);
    CHECK(c.branch.rfind("L2.", 0) == 0);
    EqualRowsParams p{(1 + 0.25) / 2, (1 - (-0.75)) / 2, (-0.75 - 0.25) / 2};
    check_witness(c, p.matrix());
}

TEST_CASE("proportional rows: worked inputs across the branches") {
    struct Row {
        ProportionalRowsParams p;
        CanonicalLabel want;
    };
    const Row rows[] = {
        {{1, 1, 1, -1, 0}, CanonicalLabel::E1},   // alpha^2 + l*beta^2 + m*g^2 = 0
        {{1, 0, 0, 0, 0}, CanonicalLabel::E4},
        {{1, 1, 1, 1, 1}, CanonicalLabel::E7},
        {{1, 1, 1, 1, -3}, CanonicalLabel::E9},
        {{0, 1, 0, 0, -1}, CanonicalLabel::E12},
        {{0, 1, 0, 0, 1}, CanonicalLabel::E11},
        {{0, 1, 1, 0, 0}, CanonicalLabel::E10},
        {{0, 0, 0, 0, 0}, CanonicalLabel::E0},
    };
    for (const Row& r : rows) {
        Classification c = classify_proportional_rows(r.p);
        CHECK_MESSAGE(c.label == r.want, "(" << r.p.alpha << "," << r.p.beta << "," << r.p.gamma
                                             << ";" << r.p.lambda << "," << r.p.mu << ") got "
                                             << to_string(c.label) << " via " << c.branch);
        if (r.want != CanonicalLabel::E0)
            check_witness(c, r.p.matrix());
        else
            CHECK(!c.witness.has_value());
    }

    // degenerate row sum with both factors nonzero lands in the nilpotent
    // trio; the witness certifies whichever of E2/E3 is produced
    ProportionalRowsParams deg{1, 1, 1, -2, 1};
    Classification cd = classify_proportional_rows(deg);
    CHECK((cd.label == CanonicalLabel::E2 || cd.label == CanonicalLabel::E3));
    check_witness(cd, deg.matrix());
}

TEST_CASE("proportional rows: witnesses over a randomized sweep") {
    std::mt19937_64 rng(202);
    std::uniform_real_distribution<double> u(-3, 3);
    std::uniform_int_distribution<int> zero_mask(0, 31);
    for (int rep = 0; rep < 6000; ++rep) {
        int mask = zero_mask(rng);
        ProportionalRowsParams p{(mask & 1) ? 0.0 : u(rng), (mask & 2) ? 0.0 : u(rng),
                                 (mask & 4) ? 0.0 : u(rng), (mask & 8) ? 0.0 : u(rng),
                                 (mask & 16) ? 0.0 : u(rng)};
        Classification c = classify_proportional_rows(p);
        if (c.label == CanonicalLabel::E0) {
            CHECK(max_abs(p.matrix().a) <= 1e-9 * 10);
            continue;
        }
        check_witness(c, p.matrix(), 1e-8);
    }
}

TEST_CASE("scaling invariance of the equal-rows label") {
    std::mt19937_64 rng(303);
    std::uniform_real_distribution<double> u(-4, 4);
    std::uniform_real_distribution<double> cdist(0.1, 10);
    for (int rep = 0; rep < 2000; ++rep) {
        double l = u(rng), m = u(rng), g = u(rng);
        if (std::abs(l + m + g) < 1e-3)
            continue;
        double c = cdist(rng);
        Classification base = classify_equal_rows({l, m, g});
        Classification scaled = classify_equal_rows({c * l, c * m, c * g});
        CHECK(base.label == scaled.label);
    }
}

TEST_CASE("cross-family agreement on common inputs") {
    // equal rows (l,l,l),(m,m,m),(g,g,g) with l != 0 is also proportional
    // with base row (l,l,l) and factors m/l, g/l
    std::mt19937_64 rng(404);
    std::uniform_real_distribution<double> u(-3, 3);
    for (int rep = 0; rep < 1500; ++rep) {
        double l = u(rng), m = u(rng), g = u(rng);
        if (std::abs(l) < 0.05 || std::abs(l + m + g) < 1e-2)
            continue;
        Classification a = classify_equal_rows({l, m, g});
        Classification b = classify_proportional_rows({l, l, l, m / l, g / l});
        CHECK_MESSAGE(a.label == b.label, "(" << l << "," << m << "," << g << ") "
                                              << to_string(a.label) << " vs " << to_string(b.label)
                                              << " via " << b.branch);
    }
}

TEST_CASE("proportional rows: no uncovered branch over a large sweep") {
    std::mt19937_64 rng(505);
    std::uniform_real_distribution<double> u(-5, 5);
    std::uniform_int_distribution<int> zero_mask(0, 31);
    for (int rep = 0; rep < 1000000; ++rep) {
        int mask = zero_mask(rng);
        ProportionalRowsParams p{(mask & 1) ? 0.0 : u(rng), (mask & 2) ? 0.0 : u(rng),
                                 (mask & 4) ? 0.0 : u(rng), (mask & 8) ? 0.0 : u(rng),
                                 (mask & 16) ? 0.0 : u(rng)};
        try {
            Classification c = classify_proportional_rows(p);
            if (c.label != CanonicalLabel::E0)
                REQUIRE(c.witness.has_value());
        } catch (const OutOfLemmaScope& e) {
            FAIL("uncovered branch for (" << p.alpha << "," << p.beta << "," << p.gamma << ";"
                                          << p.lambda << "," << p.mu << "): " << e.what());
        }
    }
}

TEST_CASE("general classifier: shape detection") {
    CHECK(classify_general(StructureMatrix{Mat3::zero()}).label == CanonicalLabel::E0);

    StructureMatrix er{Mat3::from_rows({1, 1, 1}, {-1, -1, -1}, {1, 1, 1})};
    Classification c = classify_general(er);
    CHECK(c.label == classify_equal_rows({1, -1, 1}).label);
    check_witness(c, er);

    // canonical matrices themselves are proportional-rows shaped (possibly
    // after a permutation) and must classify to their own label
    for (int i = 1; i < kNumLabels; ++i) {
        CanonicalLabel want = label_from_index(i);
        StructureMatrix m = canonical_matrix(want);
        Classification g = classify_general(m);
        CHECK_MESSAGE(g.label == want, to_string(want) << " got " << to_string(g.label) << " via "
                                                       << g.branch);
        check_witness(g, m);
    }

    StructureMatrix bad{Mat3::from_rows({1, 0, 0}, {0, 1, 0}, {0, 0, 1})};
    CHECK_THROWS_AS(classify_general(bad), UnsupportedShape);
}

TEST_CASE("general classifier: permutation fallback") {
    // a zero first row blocks the direct proportionality fit; reordering the
    // basis vectors exposes the shape
    Vec3 r{2, 1, 0};
    StructureMatrix m{Mat3::from_rows({0, 0, 0}, r, -1.0 * r)};
    Classification c = classify_general(m);
    CHECK(c.branch.find("perm") != std::string::npos);
    check_witness(c, m);
}
