#include <doctest.h>

#include <cmath>

#include "ceva/classifier.hpp"
#include "ceva/oracle.hpp"

using namespace ceva;

namespace {

StructureMatrix equal_rows(double l, double m, double g) {
    return StructureMatrix{Mat3::from_rows({l, l, l}, {m, m, m}, {g, g, g})};
}

} // namespace

TEST_CASE("witness verification") {
    StructureMatrix e4 = canonical_matrix(CanonicalLabel::E4);
    CHECK(verify_witness(e4, BasisChange{Mat3::identity()}, CanonicalLabel::E4) == 0);

    // pair case with one vanishing parameter
    StructureMatrix m = equal_rows(0, 1, 1);
    Classification c = classify_equal_rows({0, 1, 1});
    REQUIRE(c.witness.has_value());
    CHECK(verify_witness(m, *c.witness, CanonicalLabel::E5) <= 1e-12);

    StructureMatrix m7 = equal_rows(1, 1, 1);
    Classification c7 = classify_equal_rows({1, 1, 1});
    REQUIRE(c7.witness.has_value());
    CHECK(verify_witness(m7, *c7.witness, CanonicalLabel::E7) <= 1e-12);

    // wrong target gives a visible residual
    CHECK(verify_witness(m7, *c7.witness, CanonicalLabel::E9) > 0.1);

    BasisChange degenerate{Mat3::from_rows({1, 0, 0}, {2, 0, 0}, {0, 0, 1})};
    CHECK_THROWS_AS(verify_witness(e4, degenerate, CanonicalLabel::E4), SingularWitness);
}

TEST_CASE("search finds the identity when source equals target") {
    StructureMatrix e7 = canonical_matrix(CanonicalLabel::E7);
    IsoSearchReport r = iso_search(e7, e7, 32, 1e-9, 5);
    REQUIRE(r.found);
    CHECK(verify_witness(e7, *r.witness, CanonicalLabel::E7) <= 1e-9);
}

TEST_CASE("search rediscovers a lemma witness") {
    StructureMatrix src = equal_rows(1, 1, 1);
    StructureMatrix tgt = canonical_matrix(CanonicalLabel::E7);
    IsoSearchReport r = iso_search(src, tgt, 64, 1e-9, 7);
    REQUIRE(r.found);
    CHECK(r.residual <= 1e-9);
    CHECK(verify_witness(src, *r.witness, CanonicalLabel::E7) <= 1e-9);
}

TEST_CASE("search accepts a warm start") {
    StructureMatrix src = equal_rows(2, 1, -0.5);
    Classification c = classify_equal_rows({2, 1, -0.5});
    REQUIRE(c.witness.has_value());
    StructureMatrix tgt = canonical_matrix(c.label);
    IsoSearchReport r = iso_search(src, tgt, 64, 1e-9, 1, &*c.witness);
    REQUIRE(r.found);
    CHECK(r.restarts_used == 0);
}

TEST_CASE("search refuses rank-incompatible pairs") {
    StructureMatrix e4 = canonical_matrix(CanonicalLabel::E4);
    StructureMatrix e0 = canonical_matrix(CanonicalLabel::E0);
    IsoSearchReport r = iso_search(e4, e0, 16, 1e-9, 3);
    CHECK(!r.found);
    CHECK(!iso_search(e0, e4, 16, 1e-9, 3).found);
}

TEST_CASE("search fails cleanly on non-isomorphic same-rank pairs") {
    // E5 and E6 both have one-dimensional derived algebras but differ by the
    // sign obstruction, so no real basis change exists
    StructureMatrix e5 = canonical_matrix(CanonicalLabel::E5);
    StructureMatrix e6 = canonical_matrix(CanonicalLabel::E6);
    IsoSearchReport r = iso_search(e5, e6, 24, 1e-9, 11);
    CHECK(!r.found);
}

TEST_CASE("search is deterministic for a fixed seed") {
    StructureMatrix src = equal_rows(1, 2, 3);
    Classification c = classify_equal_rows({1, 2, 3});
    StructureMatrix tgt = canonical_matrix(c.label);
    IsoSearchReport a = iso_search(src, tgt, 64, 1e-9, 42);
    IsoSearchReport b = iso_search(src, tgt, 64, 1e-9, 42);
    REQUIRE(a.found);
    REQUIRE(b.found);
    CHECK(a.restarts_used == b.restarts_used);
    CHECK(max_abs(a.witness->p - b.witness->p) == 0);
}
