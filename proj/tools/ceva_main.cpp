#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ceva/config.hpp"
#include "ceva/examples.hpp"
#include "ceva/oracle.hpp"
#include "ceva/partition.hpp"

namespace {

using namespace ceva;

struct Overrides {
    std::optional<int> resolution;
    std::optional<double> tol_zero, tol_bisect, tol_ck;
    std::optional<std::uint64_t> seed;

    void apply(RunConfig& cfg) const {
        if (resolution)
            cfg.resolution = *resolution;
        if (tol_zero)
            cfg.tol_zero = *tol_zero;
        if (tol_bisect)
            cfg.tol_bisect = *tol_bisect;
        if (tol_ck)
            cfg.tol_ck = *tol_ck;
        if (seed)
            cfg.seed = *seed;
    }
};

void add_override_flags(CLI::App* cmd, Overrides& ov) {
    cmd->add_option("--resolution", ov.resolution, "grid resolution (points per axis)");
    cmd->add_option("--tol-zero", ov.tol_zero, "relative zero tolerance for branch tests");
    cmd->add_option("--tol-bisect", ov.tol_bisect, "breakpoint bisection tolerance");
    cmd->add_option("--tol-ck", ov.tol_ck, "Chapman-Kolmogorov residual tolerance");
    cmd->add_option("--seed", ov.seed, "random seed");
}

void write_file(const std::string& dir, const std::string& name, const std::string& content) {
    std::string path = dir + "/" + name;
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw ConfigError("cannot write " + path);
    out << content;
}

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

nlohmann::json classification_json(const Classification& c) {
    nlohmann::json j;
    j["label"] = to_string(c.label);
    j["branch"] = c.branch;
    j["residual"] = c.residual;
    if (c.witness) {
        nlohmann::json w = nlohmann::json::array();
        for (int i = 0; i < 3; ++i)
            for (int k = 0; k < 3; ++k)
                w.push_back(c.witness->p(i, k));
        j["witness"] = w;
    }
    return j;
}

int cmd_classify(const RunConfig& cfg, double s, double t, const std::string& out_dir) {
    Classification c = chain_classify(cfg.chain, s, t, cfg.tol_zero);
    std::cout << to_string(c.label) << " branch=" << c.branch
              << " residual=" << fmt17(c.residual) << '\n';
    if (!out_dir.empty())
        write_file(out_dir, "report.json", classification_json(c).dump(2) + "\n");
    return 0;
}

int cmd_ck_check(const RunConfig& cfg, int triples) {
    std::mt19937_64 rng(cfg.seed);
    std::uniform_real_distribution<double> u(0.0, cfg.t_max);
    double worst = 0.0;
    int done = 0, attempts = 0;
    while (done < triples && attempts < 100 * triples) {
        ++attempts;
        double a = u(rng), b = u(rng), c = u(rng);
        double s = std::min({a, b, c});
        double t = std::max({a, b, c});
        double tau = a + b + c - s - t;
        if (!(s < tau && tau < t))
            continue;
        try {
            CkResult r = verify_ck(cfg.chain, s, tau, t);
            worst = std::max(worst, r.residual / std::max(1.0, r.scale));
            ++done;
        } catch (const DomainError&) {
            // triple hits a singularity of the parameter functions; resample
        }
    }
    std::cout << "triples=" << done << " max-relative-residual=" << fmt17(worst) << '\n';
    return worst <= cfg.tol_ck ? 0 : 1;
}

int cmd_partition(const RunConfig& cfg, const std::string& out_dir) {
    Partition p1 = scan_1d(cfg.chain, 0.0, cfg.s_max, cfg.resolution, cfg.tol_zero,
                           cfg.tol_bisect);
    int res2 = std::min(cfg.resolution, 256);
    Partition p2 = scan_2d(cfg.chain, cfg.t_max, res2, cfg.tol_zero);

    Partition merged = p1;
    merged.rects = p2.rects;
    write_file(out_dir, "partition.json", partition_to_json(merged) + "\n");
    write_file(out_dir, "grid.csv", grid_to_csv(p2));
    write_file(out_dir, "breakpoints.csv", breakpoints_to_csv(p1));
    std::cout << "cells=" << p1.cells.size() << " breakpoints=" << p1.breakpoints.size()
              << " rects=" << p2.rects.size() << '\n';
    return 0;
}

int cmd_examples(const Overrides& ov) {
    bool all = true;
    std::string line;
    for (int i = 1; i <= 3; ++i) {
        RunConfig cfg = example_config(i);
        ov.apply(cfg);
        ExampleReport r = check_example(i, cfg);
        all = all && r.pass;
        line += (line.empty() ? "" : " ") + ("example" + std::to_string(i)) +
                (r.pass ? " PASS" : " FAIL");
        if (!r.pass)
            std::cerr << "example" << i << " mismatches:\n" << r.detail;
    }
    std::cout << line << '\n';
    return all ? 0 : 1;
}

int cmd_iso_search(const RunConfig& cfg, double s, double t, const std::string& target_label,
                   int restarts, const std::string& out_dir) {
    StructureMatrix source = chain_matrix(cfg.chain, s, t);
    CanonicalLabel target;
    if (target_label.empty())
        target = chain_classify(cfg.chain, s, t, cfg.tol_zero).label;
    else
        target = label_from_string(target_label);

    IsoSearchReport r =
        iso_search(source, canonical_matrix(target), restarts, cfg.tol_zero, cfg.seed);
    std::cout << (r.found ? "found" : "not-found") << " target=" << to_string(target)
              << " residual=" << fmt17(r.residual) << " restarts=" << r.restarts_used << '\n';
    if (!out_dir.empty()) {
        nlohmann::json j;
        j["found"] = r.found;
        j["target"] = to_string(target);
        j["residual"] = r.residual;
        j["restarts_used"] = r.restarts_used;
        j["seed"] = r.seed;
        if (r.witness) {
            nlohmann::json w = nlohmann::json::array();
            for (int i = 0; i < 3; ++i)
                for (int k = 0; k < 3; ++k)
                    w.push_back(r.witness->p(i, k));
            j["witness"] = w;
        }
        write_file(out_dir, "report.json", j.dump(2) + "\n");
    }
    return r.found ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"chains of three-dimensional evolution algebras: classification, "
                 "Chapman-Kolmogorov checks and time-set partitions"};
    app.require_subcommand(1);

    std::string config_path, out_dir;
    double s = 0.0, t = 0.0;
    int triples = 1000;
    int restarts = 64;
    std::string target_label;
    Overrides ov;

    auto* classify = app.add_subcommand("classify", "classify the chain algebra at (s,t)");
    classify->add_option("--config", config_path, "run configuration file")->required();
    classify->add_option("--s", s, "left time")->required();
    classify->add_option("--t", t, "right time")->required();
    classify->add_option("--out", out_dir, "directory for report.json");
    add_override_flags(classify, ov);

    auto* ck = app.add_subcommand("ck-check", "verify the Chapman-Kolmogorov equation");
    ck->add_option("--config", config_path)->required();
    ck->add_option("--triples", triples, "number of random (s,tau,t) triples");
    add_override_flags(ck, ov);

    auto* part = app.add_subcommand("partition", "compute the time-set partition");
    part->add_option("--config", config_path)->required();
    part->add_option("--out", out_dir, "output directory")->required();
    add_override_flags(part, ov);

    auto* ex = app.add_subcommand("examples", "reproduce the three built-in worked examples");
    add_override_flags(ex, ov);

    auto* iso = app.add_subcommand("iso-search", "numerically search for an isomorphism witness");
    iso->add_option("--config", config_path)->required();
    iso->add_option("--s", s)->required();
    iso->add_option("--t", t)->required();
    iso->add_option("--target", target_label, "target canonical label (default: classifier's)");
    iso->add_option("--restarts", restarts);
    iso->add_option("--out", out_dir, "directory for report.json");
    add_override_flags(iso, ov);

    CLI11_PARSE(app, argc, argv);

    try {
        RunConfig cfg;
        if (!config_path.empty()) {
            cfg = load_config(config_path);
            ov.apply(cfg);
        }
        if (classify->parsed())
            return cmd_classify(cfg, s, t, out_dir);
        if (ck->parsed())
            return cmd_ck_check(cfg, triples);
        if (part->parsed())
            return cmd_partition(cfg, out_dir);
        if (ex->parsed())
            return cmd_examples(ov);
        if (iso->parsed())
            return cmd_iso_search(cfg, s, t, target_label, restarts, out_dir);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    } catch (const SyntaxError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return 2;
    } catch (const GapQueryError& e) {
        std::cerr << "domain error: " << e.what() << '\n';
        return 3;
    } catch (const DomainError& e) {
        std::cerr << "domain error: " << e.what() << '\n';
        return 3;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 1;
}
