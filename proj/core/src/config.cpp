#include "ceva/config.hpp"

#include <cstdlib>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>
#include <vector>

namespace ceva {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos)
        return "";
    std::size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

double parse_number(const std::string& s, const std::string& what) {
    if (s == "inf")
        return std::numeric_limits<double>::infinity();
    if (s == "-inf")
        return -std::numeric_limits<double>::infinity();
    const char* begin = s.c_str();
    char* end = nullptr;
    double v = std::strtod(begin, &end);
    if (end == begin || *end != '\0')
        throw ConfigError("bad number '" + s + "' for " + what);
    return v;
}

struct FunctionDef {
    std::string var = "s";
    std::vector<Piece> pieces;
    bool has_expr = false;
};

// "piece [LO, HI): EXPR"
void parse_piece_line(const std::string& body, FunctionDef& def) {
    std::size_t lb = body.find('[');
    std::size_t comma = body.find(',', lb);
    std::size_t rb = body.find(')', comma);
    std::size_t colon = body.find(':', rb);
    if (lb == std::string::npos || comma == std::string::npos || rb == std::string::npos ||
        colon == std::string::npos)
        throw ConfigError("malformed piece line '" + body + "'");
    double lo = parse_number(trim(body.substr(lb + 1, comma - lb - 1)), "piece lower bound");
    double hi = parse_number(trim(body.substr(comma + 1, rb - comma - 1)), "piece upper bound");
    std::string expr_text = trim(body.substr(colon + 1));
    def.pieces.push_back(Piece{lo, hi, parse(expr_text, def.var)});
}

PiecewiseFunction build_function(const std::string& name,
                                 const std::map<std::string, FunctionDef>& defs) {
    auto it = defs.find(name);
    if (it == defs.end())
        throw ConfigError("missing [function " + name + "] section");
    if (it->second.pieces.empty())
        throw ConfigError("[function " + name + "] defines no expression");
    return PiecewiseFunction(it->second.pieces);
}

} // namespace

RunConfig parse_config(const std::string& text) {
    RunConfig cfg;
    std::map<std::string, std::string> top;
    std::map<std::string, FunctionDef> funcs;
    std::string current; // empty = top-level

    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        if (std::size_t hash = raw.find('#'); hash != std::string::npos)
            raw.erase(hash);
        std::string line = trim(raw);
        if (line.empty())
            continue;
        if (line.front() == '[') {
            if (line.back() != ']' || line.rfind("[function ", 0) != 0)
                throw ConfigError("line " + std::to_string(lineno) + ": bad section header '" +
                                  line + "'");
            current = trim(line.substr(10, line.size() - 11));
            if (current.empty() || funcs.count(current))
                throw ConfigError("line " + std::to_string(lineno) +
                                  ": bad or duplicate function name");
            funcs[current];
            continue;
        }
        if (current.empty()) {
            std::size_t eq = line.find('=');
            if (eq == std::string::npos)
                throw ConfigError("line " + std::to_string(lineno) + ": expected key = value");
            std::string key = trim(line.substr(0, eq));
            std::string val = trim(line.substr(eq + 1));
            if (top.count(key))
                throw ConfigError("line " + std::to_string(lineno) + ": duplicate key '" + key +
                                  "'");
            top[key] = val;
            continue;
        }
        FunctionDef& def = funcs[current];
        if (line.rfind("piece", 0) == 0) {
            parse_piece_line(line.substr(5), def);
            continue;
        }
        std::size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("line " + std::to_string(lineno) + ": expected key = value");
        std::string key = trim(line.substr(0, eq));
        std::string val = trim(line.substr(eq + 1));
        if (key == "var") {
            if (!def.pieces.empty() || def.has_expr)
                throw ConfigError("line " + std::to_string(lineno) +
                                  ": var must precede the expressions");
            def.var = val;
        } else if (key == "expr") {
            if (def.has_expr || !def.pieces.empty())
                throw ConfigError("line " + std::to_string(lineno) +
                                  ": expr conflicts with earlier definitions");
            def.has_expr = true;
            def.pieces.push_back(Piece{-std::numeric_limits<double>::infinity(),
                                       std::numeric_limits<double>::infinity(),
                                       parse(val, def.var)});
        } else {
            throw ConfigError("line " + std::to_string(lineno) + ": unknown key '" + key +
                              "' in function section");
        }
    }

    auto take = [&](const std::string& key) -> std::string {
        auto it = top.find(key);
        if (it == top.end())
            return "";
        std::string v = it->second;
        top.erase(it);
        return v;
    };

    std::string family = take("family");
    if (family == "M1")
        cfg.chain.family = Family::M1;
    else if (family == "M2")
        cfg.chain.family = Family::M2;
    else if (family == "M3")
        cfg.chain.family = Family::M3;
    else
        throw ConfigError("family must be one of M1, M2, M3");

    if (std::string v = take("s-max"); !v.empty())
        cfg.s_max = parse_number(v, "s-max");
    if (std::string v = take("t-max"); !v.empty())
        cfg.t_max = parse_number(v, "t-max");
    if (std::string v = take("resolution"); !v.empty()) {
        cfg.resolution = int(parse_number(v, "resolution"));
        if (cfg.resolution < 2)
            throw ConfigError("resolution must be at least 2");
    }
    if (std::string v = take("tol-zero"); !v.empty())
        cfg.tol_zero = parse_number(v, "tol-zero");
    if (std::string v = take("tol-bisect"); !v.empty())
        cfg.tol_bisect = parse_number(v, "tol-bisect");
    if (std::string v = take("tol-ck"); !v.empty())
        cfg.tol_ck = parse_number(v, "tol-ck");
    if (std::string v = take("seed"); !v.empty())
        cfg.seed = std::uint64_t(std::strtoull(v.c_str(), nullptr, 10));

    std::vector<std::string> required;
    if (cfg.chain.family == Family::M1) {
        required = {"h", "f", "g"};
    } else if (cfg.chain.family == Family::M2) {
        std::string v = take("a");
        if (v.empty())
            throw ConfigError("family M2 requires a threshold 'a'");
        cfg.chain.a = parse_number(v, "a");
        if (!(cfg.chain.a > 0))
            throw ConfigError("threshold a must be positive");
        required = {"phi", "psi"};
    } else {
        required = {"eta", "vartheta", "kappa", "phi1", "phi2"};
    }

    if (!top.empty())
        throw ConfigError("unknown key '" + top.begin()->first + "'");

    for (const auto& [name, def] : funcs) {
        (void)def;
        bool ok = false;
        for (const std::string& r : required)
            ok = ok || r == name;
        if (!ok)
            throw ConfigError("function '" + name + "' is not used by family " + family);
    }

    if (cfg.chain.family == Family::M1) {
        cfg.chain.h = build_function("h", funcs);
        cfg.chain.f = build_function("f", funcs);
        cfg.chain.g = build_function("g", funcs);
    } else if (cfg.chain.family == Family::M2) {
        cfg.chain.phi = build_function("phi", funcs);
        cfg.chain.psi = build_function("psi", funcs);
    } else {
        cfg.chain.eta = build_function("eta", funcs);
        cfg.chain.vartheta = build_function("vartheta", funcs);
        cfg.chain.kappa = build_function("kappa", funcs);
        cfg.chain.phi1 = build_function("phi1", funcs);
        cfg.chain.phi2 = build_function("phi2", funcs);
    }

    return cfg;
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot open config file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

} // namespace ceva
