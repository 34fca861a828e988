#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ceva/chains.hpp"

namespace ceva {

/// Label of a scan point; empty when chain evaluation raised a domain error.
using PointLabel = std::optional<CanonicalLabel>;

struct PartitionCell {
    double lo, hi;
    PointLabel label;
    std::string branch; // representative branch id of the run
};

struct PartitionBreakpoint {
    double location;
    double width;          // achieved bracket width
    PointLabel point_label; // set when the label exactly at the breakpoint
                            // differs from both neighbouring cells
};

struct GridPoint {
    double s, t;
    PointLabel label;
};

struct PartitionRect {
    double s_lo, s_hi, t_lo, t_hi;
    PointLabel label;
};

/// Decomposition of a 1-D s-interval or of the triangle {0 <= s <= t <= t_max}
/// into constant-label cells, plus the refined cell boundaries.
struct Partition {
    bool two_d = false;
    std::vector<PartitionCell> cells;            // 1-D
    std::vector<PartitionBreakpoint> breakpoints; // 1-D
    std::vector<PartitionRect> rects;             // 2-D
    std::vector<GridPoint> grid;                  // raw scan data
};

using Labeler = std::function<PointLabel(double)>;

/// Bisect [lo, hi] down to a bracket of width <= tol_x around a label change
/// and return its midpoint. `calls` (optional) counts labeler invocations.
/// Throws NoChangeFound when the endpoint labels agree.
double refine_breakpoint(const Labeler& label_at, double lo, double hi, double tol_x,
                         int* calls = nullptr);

/// Chain version; axis is 's' or 't', the other coordinate is held fixed.
double refine_breakpoint(const ChainSpec& c, double lo, double hi, char axis,
                         double fixed_other, double tol_x, double tol_zero = 1e-9);

/// 1-D scan along s with t = s: classify on a uniform grid of `resolution`
/// points, merge equal-label runs, refine every label change, and classify
/// exactly at each refined breakpoint (with the zero tolerance widened to the
/// bisection precision) to catch single-point labels.
Partition scan_1d(const ChainSpec& c, double lo, double hi, int resolution, double tol_zero,
                  double tol_bisect);

/// Triangular 2-D scan of {0 <= s <= t <= t_max} on a resolution x resolution
/// grid; per-column runs in t are merged into axis-aligned rectangles.
Partition scan_2d(const ChainSpec& c, double t_max, int resolution, double tol_zero);

std::string partition_to_json(const Partition& p);
std::string grid_to_csv(const Partition& p);
std::string breakpoints_to_csv(const Partition& p);

} // namespace ceva
