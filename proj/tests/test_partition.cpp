#include <doctest.h>

#include <cmath>

#include "ceva/examples.hpp"
#include "ceva/partition.hpp"

using namespace ceva;

namespace {

Labeler step_at(double x0) {
    return [x0](double x) {
        return PointLabel{x < x0 ? CanonicalLabel::E7 : CanonicalLabel::E9};
    };
}

} // namespace

TEST_CASE("breakpoint refinement converges with a bounded call count") {
    for (double x0 : {0.3, 1.0 / 3.0, 0.9999}) {
        int calls = 0;
        double found = refine_breakpoint(step_at(x0), 0, 1, 1e-8, &calls);
        CHECK(std::abs(found - x0) <= 1e-8);
        // two endpoint labelings plus one per bisection of [0,1] down to 1e-8
        int budget = 2 + (int)std::ceil(std::log2(1.0 / 1e-8)) + 1;
        CHECK(calls <= budget);
    }
}

TEST_CASE("refinement requires differing endpoint labels") {
    CHECK_THROWS_AS(refine_breakpoint(step_at(5.0), 0, 1, 1e-6), NoChangeFound);
}

TEST_CASE("chain breakpoints land on the analytic roots") {
    RunConfig c1 = example_config(1);
    // f - g = 4(s-2)(s-4) vanishes at 4; 2/h + f - g = 2s+2+4(s-2)(s-4)
    CHECK(refine_breakpoint(c1.chain, 2.7, 2.8, 's', 0, 1e-9) ==
          doctest::Approx(2.75).epsilon(1e-7));
    CHECK(refine_breakpoint(c1.chain, 5.6, 5.7, 's', 0, 1e-9) ==
          doctest::Approx(17.0 / 3.0).epsilon(1e-7));
    CHECK(refine_breakpoint(c1.chain, 3.9, 4.1, 's', 0, 1e-9) ==
          doctest::Approx(4.0).epsilon(1e-7));

    RunConfig c2 = example_config(2);
    CHECK(refine_breakpoint(c2.chain, 5.9, 6.1, 's', 0, 1e-9) ==
          doctest::Approx(6.0).epsilon(1e-7));

    RunConfig c3 = example_config(3);
    // t-axis change at fixed s = 0.5: E8 to E9 across t = 3. The branch
    // quantity vanishes quadratically there, so the labeled boundary is only
    // located to about the square root of the zero tolerance.
    CHECK(refine_breakpoint(c3.chain, 2.5, 3.5, 't', 0.5, 1e-9) ==
          doctest::Approx(3.0).epsilon(1e-4));
}

TEST_CASE("1-d scan structure") {
    RunConfig cfg = example_config(1);
    Partition p = scan_1d(cfg.chain, 0, 8, 1024, cfg.tol_zero, cfg.tol_bisect);
    CHECK(!p.two_d);
    REQUIRE(!p.cells.empty());
    CHECK(p.cells.front().lo == 0);
    CHECK(p.cells.back().hi == 8);
    for (size_t i = 0; i + 1 < p.cells.size(); ++i) {
        CHECK(p.cells[i].hi == doctest::Approx(p.cells[i + 1].lo));
        CHECK(p.cells[i].label != p.cells[i + 1].label);
    }
    CHECK(p.breakpoints.size() == p.cells.size() - 1);
    for (const PartitionBreakpoint& b : p.breakpoints)
        CHECK(b.width <= 2 * cfg.tol_bisect);
    CHECK(p.grid.size() >= 1024);
}

TEST_CASE("scan is stable under grid refinement") {
    RunConfig cfg = example_config(2);
    Partition coarse = scan_1d(cfg.chain, 0, 12, 512, cfg.tol_zero, cfg.tol_bisect);
    Partition fine = scan_1d(cfg.chain, 0, 12, 2048, cfg.tol_zero, cfg.tol_bisect);
    REQUIRE(coarse.cells.size() == fine.cells.size());
    for (size_t i = 0; i < coarse.cells.size(); ++i) {
        CHECK(coarse.cells[i].label == fine.cells[i].label);
        CHECK(std::abs(coarse.cells[i].lo - fine.cells[i].lo) <= 1e-5);
    }
}

TEST_CASE("constant chain gives a single cell") {
    ChainSpec c;
    c.family = Family::M1;
    c.h = PiecewiseFunction::total(parse("1", "s"));
    c.f = PiecewiseFunction::total(parse("0", "s"));
    c.g = PiecewiseFunction::total(parse("0", "s"));
    Partition p = scan_1d(c, 0, 5, 256, 1e-9, 1e-6);
    REQUIRE(p.cells.size() == 1);
    CHECK(p.breakpoints.empty());
    CHECK(p.cells[0].label == PointLabel{CanonicalLabel::E5});
}

TEST_CASE("2-d scan covers the triangle") {
    RunConfig cfg = example_config(3);
    int res = 64;
    Partition p = scan_2d(cfg.chain, cfg.t_max, res, cfg.tol_zero);
    CHECK(p.two_d);
    REQUIRE(!p.rects.empty());
    // every grid point must be covered by a rectangle carrying its label
    // (rectangles share edges, so a boundary point may touch several)
    for (const GridPoint& g : p.grid) {
        bool covered = false;
        for (const PartitionRect& r : p.rects)
            if (g.s >= r.s_lo - 1e-12 && g.s <= r.s_hi + 1e-12 && g.t >= r.t_lo - 1e-12 &&
                g.t <= r.t_hi + 1e-12 && r.label == g.label) {
                covered = true;
                break;
            }
        CHECK(covered);
    }
}

TEST_CASE("serialization formats") {
    RunConfig cfg = example_config(1);
    Partition p = scan_1d(cfg.chain, 0, 8, 256, cfg.tol_zero, cfg.tol_bisect);

    std::string js = partition_to_json(p);
    CHECK(js.find("\"cells\"") != std::string::npos);
    CHECK(js.find("\"breakpoints\"") != std::string::npos);

    std::string grid = grid_to_csv(p);
    CHECK(grid.find("s,t,label") == 0);
    size_t lines = 0;
    for (char ch : grid)
        lines += ch == '\n';
    CHECK(lines == p.grid.size() + 1);

    std::string bps = breakpoints_to_csv(p);
    CHECK(bps.find("location,width,point_label") == 0);
}
