#include "ceva/partition.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace ceva {

namespace {

PointLabel safe_label(const ChainSpec& c, double s, double t, double tol) {
    try {
        return chain_classify(c, s, t, tol).label;
    } catch (const Error&) {
        return std::nullopt;
    }
}

std::string label_text(const PointLabel& l) { return l ? to_string(*l) : "undefined"; }

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

} // namespace

double refine_breakpoint(const Labeler& label_at, double lo, double hi, double tol_x,
                         int* calls) {
    int n = 0;
    PointLabel llo = label_at(lo);
    PointLabel lhi = label_at(hi);
    n += 2;
    if (llo == lhi) {
        if (calls)
            *calls = n;
        throw NoChangeFound("labels agree at both bracket endpoints");
    }
    while (hi - lo > tol_x) {
        double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi)
            break; // bracket at floating-point resolution
        PointLabel lm = label_at(mid);
        ++n;
        if (lm == llo) {
            lo = mid;
        } else {
            hi = mid;
            lhi = lm;
        }
    }
    if (calls)
        *calls = n;
    return 0.5 * (lo + hi);
}

double refine_breakpoint(const ChainSpec& c, double lo, double hi, char axis,
                         double fixed_other, double tol_x, double tol_zero) {
    Labeler at;
    if (axis == 's')
        at = [&](double x) { return safe_label(c, x, std::max(x, fixed_other), tol_zero); };
    else
        at = [&](double x) { return safe_label(c, fixed_other, x, tol_zero); };
    return refine_breakpoint(at, lo, hi, tol_x);
}

Partition scan_1d(const ChainSpec& c, double lo, double hi, int resolution, double tol_zero,
                  double tol_bisect) {
    if (resolution < 2)
        throw ConfigError("scan resolution must be at least 2");
    Partition part;
    part.two_d = false;

    double step = (hi - lo) / (resolution - 1);
    std::vector<double> xs(resolution);
    std::vector<PointLabel> labels(resolution);
    std::vector<std::string> branches(resolution);
    for (int i = 0; i < resolution; ++i) {
        double x = lo + i * step;
        xs[i] = x;
        try {
            Classification cl = chain_classify(c, x, x, tol_zero);
            labels[i] = cl.label;
            branches[i] = cl.branch;
        } catch (const Error&) {
            labels[i] = std::nullopt;
            branches[i] = "undefined";
        }
        part.grid.push_back(GridPoint{x, x, labels[i]});
    }

    Labeler at = [&](double x) { return safe_label(c, x, x, tol_zero); };
    double point_tol = std::max(tol_zero, 10.0 * tol_bisect);

    double cell_lo = lo;
    int run_start = 0;
    for (int i = 1; i < resolution; ++i) {
        if (labels[i] == labels[i - 1])
            continue;
        double bp;
        try {
            bp = refine_breakpoint(at, xs[i - 1], xs[i], tol_bisect);
        } catch (const NoChangeFound&) {
            bp = 0.5 * (xs[i - 1] + xs[i]); // tolerance collision; keep coarse
        }
        part.cells.push_back(PartitionCell{cell_lo, bp, labels[run_start], branches[run_start]});
        PartitionBreakpoint b;
        b.location = bp;
        b.width = tol_bisect;
        PointLabel exact = safe_label(c, bp, bp, point_tol);
        if (exact != labels[i - 1] && exact != labels[i])
            b.point_label = exact ? exact : PointLabel{};
        part.breakpoints.push_back(b);
        cell_lo = bp;
        run_start = i;
    }
    part.cells.push_back(PartitionCell{cell_lo, hi, labels[run_start], branches[run_start]});
    return part;
}

Partition scan_2d(const ChainSpec& c, double t_max, int resolution, double tol_zero) {
    if (resolution < 2)
        throw ConfigError("scan resolution must be at least 2");
    Partition part;
    part.two_d = true;

    double step = t_max / (resolution - 1);
    // per-column runs, then horizontal merge of identical neighbouring runs
    struct Run {
        double t_lo, t_hi;
        PointLabel label;
    };
    std::vector<std::vector<Run>> columns(resolution);
    for (int i = 0; i < resolution; ++i) {
        double s = i * step;
        std::vector<Run>& runs = columns[i];
        for (int j = i; j < resolution; ++j) {
            double t = j * step;
            PointLabel l = safe_label(c, s, t, tol_zero);
            part.grid.push_back(GridPoint{s, t, l});
            if (!runs.empty() && runs.back().label == l)
                runs.back().t_hi = t;
            else
                runs.push_back(Run{t, t, l});
        }
    }
    for (int i = 0; i < resolution; ++i) {
        double s_lo = i * step;
        double s_hi = std::min((i + 1) * step, t_max);
        for (const Run& r : columns[i]) {
            bool merged = false;
            for (PartitionRect& rect : part.rects) {
                if (rect.s_hi == s_lo && rect.t_lo == r.t_lo && rect.t_hi == r.t_hi &&
                    rect.label == r.label) {
                    rect.s_hi = s_hi;
                    merged = true;
                    break;
                }
            }
            if (!merged)
                part.rects.push_back(PartitionRect{s_lo, s_hi, r.t_lo, r.t_hi, r.label});
        }
    }
    return part;
}

std::string partition_to_json(const Partition& p) {
    nlohmann::json j;
    j["dimension"] = p.two_d ? 2 : 1;
    j["cells"] = nlohmann::json::array();
    for (const PartitionCell& c : p.cells) {
        j["cells"].push_back({{"lo", c.lo},
                              {"hi", c.hi},
                              {"label", label_text(c.label)},
                              {"branch", c.branch}});
    }
    j["breakpoints"] = nlohmann::json::array();
    for (const PartitionBreakpoint& b : p.breakpoints) {
        nlohmann::json e = {{"location", b.location}, {"width", b.width}};
        if (b.point_label)
            e["point_label"] = to_string(*b.point_label);
        j["breakpoints"].push_back(e);
    }
    j["rects"] = nlohmann::json::array();
    for (const PartitionRect& r : p.rects) {
        j["rects"].push_back({{"s_lo", r.s_lo},
                              {"s_hi", r.s_hi},
                              {"t_lo", r.t_lo},
                              {"t_hi", r.t_hi},
                              {"label", label_text(r.label)}});
    }
    return j.dump(2);
}

std::string grid_to_csv(const Partition& p) {
    std::ostringstream out;
    out << "s,t,label\n";
    for (const GridPoint& g : p.grid)
        out << fmt(g.s) << ',' << fmt(g.t) << ',' << label_text(g.label) << '\n';
    return out.str();
}

std::string breakpoints_to_csv(const Partition& p) {
    std::ostringstream out;
    out << "location,width,point_label\n";
    for (const PartitionBreakpoint& b : p.breakpoints) {
        out << fmt(b.location) << ',' << fmt(b.width) << ','
            << (b.point_label ? to_string(*b.point_label) : "") << '\n';
    }
    return out.str();
}

} // namespace ceva
