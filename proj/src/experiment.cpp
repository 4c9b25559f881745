#include "limset/experiment.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "json.hpp"

#include "limset/errors.hpp"
#include "limset/pressure.hpp"
#include "limset/version.hpp"

namespace limset {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string fmt17(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return std::string(buf);
}

void validate_name(const std::string& name) {
    if (name.empty()) throw ConfigError("experiment name must not be empty");
    for (char c : name)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != '-' && c != '.')
            throw ConfigError("experiment name '" + name + "' contains '" + std::string(1, c) +
                              "'; use letters, digits, '-', '_', '.'");
}

std::string config_stem(const std::string& display) {
    const std::string stem = std::filesystem::path(display).stem().string();
    return stem.empty() ? "experiment" : stem;
}

std::string kind_name(GroupKind k) {
    switch (k) {
        case GroupKind::schottky_free: return "schottky-free";
        case GroupKind::reflection: return "reflection";
        case GroupKind::cyclic: return "cyclic";
    }
    return "unknown";
}

std::string generator_class(const MoebiusMap& f) {
    if (f.anti) return "reflection";
    return to_string(classify(f));
}

ordered_json complex_json(const Complex& z) {
    return ordered_json::array({z.real(), z.imag()});
}

ordered_json dimension_json(const DimensionResult& d) {
    ordered_json j;
    j["value"] = d.value;
    j["lower"] = d.lower;
    j["upper"] = d.upper;
    j["error"] = d.error;
    j["method"] = d.method;
    return j;
}

ordered_json system_json(const IfsSystem& s, const std::string& type) {
    ordered_json cells = ordered_json::array();
    for (const Interval& c : s.cells()) cells.push_back(ordered_json::array({c.lo, c.hi}));
    ordered_json j;
    j["type"] = type;
    j["letters"] = s.letter_count();
    j["countable"] = s.countable();
    j["cells"] = cells;
    if (s.letter_count() > 0) {
        j["contraction"] = s.contraction_bound();
        j["two_step_contraction"] = s.two_step_contraction();
    }
    if (s.countable()) j["theta"] = s.theta_number();
    return j;
}

std::vector<Circle> circles_from(ConfigFile& cfg, const std::string& section) {
    const std::vector<double> centers = cfg.get_number_list(section, "centers");
    const std::vector<double> radii = cfg.get_number_list(section, "radii");
    if (centers.size() != radii.size())
        throw ConfigError("'centers' and 'radii' must have the same length");
    std::vector<Circle> out;
    out.reserve(centers.size());
    for (std::size_t i = 0; i < centers.size(); ++i)
        out.emplace_back(Complex(centers[i], 0.0), radii[i]);
    return out;
}

std::vector<std::pair<Circle, Circle>> circle_pairs_from(ConfigFile& cfg,
                                                         const std::string& section) {
    const std::vector<double> sc = cfg.get_number_list(section, "src_centers");
    const std::vector<double> sr = cfg.get_number_list(section, "src_radii");
    const std::vector<double> tc = cfg.get_number_list(section, "tgt_centers");
    const std::vector<double> tr = cfg.get_number_list(section, "tgt_radii");
    if (sc.size() != sr.size() || sc.size() != tc.size() || sc.size() != tr.size())
        throw ConfigError("schottky pair lists must all have the same length");
    std::vector<std::pair<Circle, Circle>> out;
    for (std::size_t i = 0; i < sc.size(); ++i)
        out.emplace_back(Circle(Complex(sc[i], 0.0), sr[i]), Circle(Complex(tc[i], 0.0), tr[i]));
    return out;
}

TailLaw tail_law_from(ConfigFile& cfg, const std::string& section, bool dyadic) {
    TailLaw law;
    law.dyadic = dyadic;
    law.k_exponent = cfg.get_number(section, "p");
    law.log_exponent = cfg.get_number_or(section, "q", 0.0);
    law.A = cfg.get_number_or(section, "a", 1.0);
    law.B = cfg.get_number_or(section, "b", law.A);
    law.multiplicity = cfg.get_int_or(section, "multiplicity", 1);
    if (dyadic) {
        law.alpha = cfg.get_number(section, "alpha");
        law.beta = cfg.get_number_or(section, "beta", law.alpha);
        law.first_index = cfg.get_int_or(section, "first_index", 0);
    } else {
        law.first_index = cfg.get_int_or(section, "first_index", 1);
    }
    return law;
}

Interval family_range(ConfigFile& cfg) {
    const double lo = cfg.get_number("family", "t_min");
    const double hi = cfg.get_number("family", "t_max");
    if (!(lo < hi)) throw ConfigError("family range needs t_min < t_max");
    return Interval(lo, hi);
}

BowenOptions solver_options(ConfigFile& cfg, const RunOptions& opts) {
    BowenOptions opt;
    opt.transfer_size = cfg.get_int_or("solver", "transfer_size", opt.transfer_size);
    opt.sigma_tol = cfg.get_number_or("solver", "sigma_tol", opt.sigma_tol);
    opt.sigma_max = cfg.get_number_or("solver", "sigma_max", opt.sigma_max);
    if (opts.tolerance > 0.0) opt.sigma_tol = opts.tolerance;
    return opt;
}

// Files are staged and written only after the whole config has been
// validated, so a bad config never leaves partial outputs behind.
struct Staging {
    std::vector<std::pair<std::string, std::string>> files;
    void add(const std::string& filename, const std::string& content) {
        files.emplace_back(filename, content);
    }
};

void run_dim(ConfigFile& cfg, const RunOptions& opts, ordered_json& out, Staging& stage,
             const std::string& name) {
    const std::string type = cfg.get_string("system", "type");
    IfsSystem s = build_system(cfg);
    const BowenOptions opt = solver_options(cfg, opts);
    const int sample_depth = cfg.get_int_or("solver", "sample_depth", 0);
    const int tail_cutoff = cfg.get_int_or("solver", "tail_cutoff", 0);
    std::vector<double> scales;
    if (cfg.has("solver", "scales")) {
        scales = cfg.get_number_list("solver", "scales");
    } else {
        for (int k = 4; k <= 11; ++k) scales.push_back(std::ldexp(1.0, -k));
    }

    out["system"] = system_json(s, type);
    const Regularity reg = regularity_check(s);
    out["regularity"] = to_string(reg);
    if (reg == Regularity::irregular) {
        out["note"] = "irregular system: the partition sum is finite at the finiteness "
                      "threshold, so the Bowen equation has no root";
    } else {
        out["dimension"] = dimension_json(bowen_dimension(s, opt));
    }

    if (sample_depth > 0) {
        const std::vector<double> pts = s.limit_set_sample(sample_depth, tail_cutoff);
        std::string csv = "x\n";
        for (double x : pts) csv += fmt17(x) + "\n";
        stage.add(name + "-limitset.csv", csv);
        const BoxDimension box = box_dimension_estimate(pts, scales);
        ordered_json bj;
        bj["depth"] = sample_depth;
        bj["points"] = pts.size();
        bj["box_dimension"] = box.value;
        bj["lower"] = box.lower;
        bj["upper"] = box.upper;
        bj["stderr"] = box.stderr_slope;
        out["sample"] = bj;
    }
}

void run_pressure(ConfigFile& cfg, const RunOptions& opts, ordered_json& out, Staging& stage,
                  const std::string& name) {
    (void)opts;
    const std::string type = cfg.get_string("system", "type");
    IfsSystem s = build_system(cfg);
    const std::string method = cfg.get_string_or("solver", "method", "direct");
    const int n_max = cfg.get_int_or("solver", "n_max", 8);
    const int size = cfg.get_int_or("solver", "transfer_size", 24);
    const double lo = cfg.get_number_or("solver", "sigma_lo", 0.2);
    const double hi = cfg.get_number_or("solver", "sigma_hi", 1.2);
    const int count = cfg.get_int_or("solver", "sigma_count", 11);
    if (count < 1 || count > 100000) throw ConfigError("sigma_count out of range");
    if (!(lo <= hi)) throw ConfigError("sigma grid needs sigma_lo <= sigma_hi");
    std::vector<double> sigmas;
    for (int i = 0; i < count; ++i)
        sigmas.push_back(count == 1 ? lo : lo + (hi - lo) * i / (count - 1));

    std::string csv = "sigma,value,lower,upper\n";
    if (method == "direct") {
        for (const PressureEstimate& p : pressure_direct_grid(s, sigmas, n_max))
            csv += fmt17(p.sigma) + "," + fmt17(p.value) + "," + fmt17(p.lower) + "," +
                   fmt17(p.upper) + "\n";
    } else if (method == "transfer") {
        for (double sigma : sigmas) {
            const TransferResult tr = transfer_eigenvalue(s, sigma, size);
            csv += fmt17(sigma) + "," + fmt17(std::log(tr.lambda)) + "," +
                   fmt17(std::log(tr.lambda_lower)) + "," + fmt17(std::log(tr.lambda_upper)) +
                   "\n";
        }
    } else {
        throw ConfigError("pressure method must be 'direct' or 'transfer'");
    }
    stage.add(name + "-pressure.csv", csv);

    out["system"] = system_json(s, type);
    out["method"] = method;
    if (method == "direct")
        out["n_max"] = n_max;
    else
        out["transfer_size"] = size;
    ordered_json grid;
    grid["sigma_lo"] = lo;
    grid["sigma_hi"] = hi;
    grid["count"] = count;
    out["sigma_grid"] = grid;
}

void run_curve(ConfigFile& cfg, const RunOptions& opts, ordered_json& out, Staging& stage,
               const std::string& name) {
    const std::string type = cfg.get_string("family", "type");
    DeformationFamily fam = build_family(cfg);
    const BowenOptions opt = solver_options(cfg, opts);
    const int m = cfg.get_int_or("solver", "curve_nodes", 16);
    const int threads = std::max(1, opts.threads);

    const DimensionCurve curve = dimension_curve(fam, m, opt, threads);
    std::string csv = "t,dim,err\n";
    for (std::size_t i = 0; i < curve.grid.size(); ++i)
        csv += fmt17(curve.grid[i]) + "," + fmt17(curve.values[i]) + "," +
               fmt17(curve.errors[i]) + "\n";
    stage.add(name + "-curve.csv", csv);

    ordered_json fj;
    fj["type"] = type;
    fj["t_range"] = ordered_json::array({fam.parameter_range().lo, fam.parameter_range().hi});
    out["family"] = fj;
    out["nodes"] = m;

    ordered_json aj;
    if (m >= 8) {
        try {
            const AnalyticityReport rep = analyticity_diagnostic(curve);
            aj["verdict"] = rep.verdict;
            aj["rho_fit"] = rep.rho_fit;
            aj["error_floor"] = rep.error_floor;
            aj["fitted_terms"] = rep.fitted_terms;
            aj["tail_below_floor"] = rep.tail_below_floor;
            ordered_json coeffs = ordered_json::array();
            for (double c : rep.coefficients) coeffs.push_back(c);
            aj["coefficients"] = coeffs;
        } catch (const ErrorFloorTooHigh& e) {
            aj["verdict"] = "unavailable";
            aj["note"] = e.what();
        }
    } else {
        aj["verdict"] = "unavailable";
        aj["note"] = "coefficient diagnostic needs at least 8 curve nodes";
    }
    out["analyticity"] = aj;
}

ordered_json group_json(const GroupPresentation& g) {
    ordered_json labels = ordered_json::array();
    for (const Generator& gen : g.generators()) labels.push_back(gen.label);
    ordered_json j;
    j["kind"] = kind_name(g.kind());
    j["generators"] = labels;
    return j;
}

void run_orbit(ConfigFile& cfg, const RunOptions& opts, ordered_json& out, Staging& stage,
               const std::string& name) {
    (void)opts;
    GroupPresentation g = build_group(cfg);
    const int max_len = cfg.get_int_or("solver", "max_len", 8);
    const double t = cfg.get_number_or("solver", "probe_exponent", 1.0);

    const OrbitBall ball = enumerate_orbit(g, max_len);
    std::string csv = "word,re,im,rho\n";
    for (const OrbitBall::Entry& e : ball.entries)
        csv += (e.label.empty() ? "e" : e.label) + "," + fmt17(e.point.real()) + "," +
               fmt17(e.point.imag()) + "," + fmt17(e.rho) + "\n";
    stage.add(name + "-orbit.csv", csv);

    out["group"] = group_json(g);
    out["max_len"] = max_len;
    out["words"] = ball.entries.size();
    ordered_json pj;
    pj["exponent"] = t;
    pj["partial_sum"] = poincare_partial_sum(ball, t);
    out["poincare"] = pj;
    try {
        out["critical_exponent"] = dimension_json(critical_exponent_estimate(ball));
    } catch (const InsufficientData& e) {
        out["critical_exponent"] = ordered_json{{"note", e.what()}};
    }
}

void run_probe(ConfigFile& cfg, const RunOptions& opts, ordered_json& out, Staging& stage,
               const std::string& name) {
    (void)opts;
    (void)stage;
    (void)name;
    GroupPresentation g = build_group(cfg);
    const int max_len = cfg.get_int_or("solver", "max_len", 10);
    const double t = cfg.get_number_or("solver", "probe_exponent", 1.0);

    const ConvergenceProbe probe = convergence_type_probe(g, max_len, t);
    out["group"] = group_json(g);
    out["max_len"] = max_len;
    out["exponent"] = probe.exponent;
    ordered_json shells = ordered_json::array();
    for (double v : probe.shell_sums) shells.push_back(v);
    ordered_json partials = ordered_json::array();
    for (double v : probe.partial_sums) partials.push_back(v);
    ordered_json ratios = ordered_json::array();
    for (double v : probe.ratios) ratios.push_back(v);
    out["shell_sums"] = shells;
    out["partial_sums"] = partials;
    out["ratios"] = ratios;
    out["verdict"] = probe.verdict;
}

ordered_json circle_json(const GroupPresentation& g, const Circle& c) {
    ordered_json j;
    j["center"] = c.center.real();
    j["radius"] = c.radius;
    try {
        const Circle disk = map_circle(g.cayley(), c);
        j["disk_center"] = complex_json(disk.center);
        j["disk_radius"] = disk.radius;
    } catch (const PoleHit&) {
        j["disk_is_line"] = true;
    }
    return j;
}

void run_schottky(ConfigFile& cfg, const RunOptions& opts, ordered_json& out, Staging& stage,
                  const std::string& name) {
    (void)opts;
    (void)stage;
    (void)name;
    GroupPresentation g = build_group(cfg);
    out["kind"] = kind_name(g.kind());
    ordered_json gens = ordered_json::array();
    for (const Generator& gen : g.generators()) {
        ordered_json j;
        j["label"] = gen.label;
        j["inverse"] = g.generators()[static_cast<std::size_t>(gen.inverse)].label;
        j["class"] = generator_class(gen.line_map);
        j["trace"] = complex_json(gen.line_map.trace());
        if (gen.source_circle >= 0) j["source_circle"] = gen.source_circle;
        if (gen.target_circle >= 0) j["target_circle"] = gen.target_circle;
        gens.push_back(j);
    }
    out["generators"] = gens;
    ordered_json circles = ordered_json::array();
    for (const Circle& c : g.circles()) circles.push_back(circle_json(g, c));
    out["circles"] = circles;
    try {
        IfsSystem s = ifs_from_schottky(g);
        out["ifs"] = system_json(s, "induced");
    } catch (const Error& e) {
        out["ifs"] = ordered_json{{"note", e.what()}};
    }
}

void run_section5(ConfigFile& cfg, const RunOptions& opts, ordered_json& out, Staging& stage,
                  const std::string& name) {
    (void)stage;
    (void)name;
    int depth = cfg.get_int_or("solver", "depth", 8);
    if (opts.depth > 0) depth = opts.depth;
    GroupPresentation g = GroupPresentation::dyadic_chain_group(depth);
    out["depth"] = depth;

    const MoebiusMap eta = g.cayley();
    ordered_json cp;
    cp["inf_to_i"] = std::abs(eta.apply(point_at_infinity()) - Complex(0.0, 1.0));
    cp["one_to_one"] = std::abs(eta.apply(Complex(1.0, 0.0)) - Complex(1.0, 0.0));
    cp["zero_to_minus_i"] = std::abs(eta.apply(Complex(0.0, 0.0)) - Complex(0.0, -1.0));
    cp["i_to_zero"] = std::abs(eta.apply(Complex(0.0, 1.0)));
    out["cayley_checkpoints"] = cp;

    ordered_json disks = ordered_json::array();
    std::vector<Circle> disk_circles;
    for (int n = 0; n < depth; ++n) {
        const Circle& line = g.circles()[static_cast<std::size_t>(n)];
        const Circle disk = map_circle(eta, line);
        disk_circles.push_back(disk);
        ordered_json j;
        j["n"] = n + 1;
        j["line_center"] = line.center.real();
        j["line_radius"] = line.radius;
        j["disk_center"] = complex_json(disk.center);
        j["disk_radius"] = disk.radius;
        j["diam_times_2n"] = 2.0 * disk.radius * std::ldexp(1.0, n + 1);
        j["dist_to_i"] = std::abs(disk.center - Complex(0.0, 1.0)) + disk.radius;
        disks.push_back(j);
    }
    out["disks"] = disks;

    // Pairwise disjointness over the whole mirrored family in the disk model
    // (tangencies allowed at the 1e-9 scale).
    std::vector<Circle> all;
    for (const Circle& c : g.circles()) all.push_back(map_circle(eta, c));
    bool disjoint = true;
    int tangencies = 0;
    for (std::size_t i = 0; i < all.size(); ++i) {
        for (std::size_t j = i + 1; j < all.size(); ++j) {
            const double dist = std::abs(all[i].center - all[j].center);
            const double rr = all[i].radius + all[j].radius;
            if (dist < rr - 1e-9) disjoint = false;
            if (std::abs(dist - rr) <= 1e-9) ++tangencies;
        }
    }
    out["disks_disjoint"] = disjoint;
    out["tangencies"] = tangencies;

    ordered_json gens = ordered_json::array();
    for (const Generator& gen : g.generators()) {
        ordered_json j;
        j["label"] = gen.label;
        j["class"] = generator_class(gen.line_map);
        j["trace"] = complex_json(gen.line_map.trace());
        gens.push_back(j);
    }
    out["generators"] = gens;
}

} // namespace

IfsSystem build_system(ConfigFile& cfg) {
    if (!cfg.has("system", "type"))
        throw ConfigError("config needs a [system] section with a 'type' key");
    const std::string type = cfg.get_string("system", "type");
    try {
        if (type == "similarity") {
            return IfsSystem::similarity(cfg.get_number_list("system", "ratios"),
                                         cfg.get_number_list("system", "offsets"));
        }
        if (type == "continued-fraction") {
            return IfsSystem::continued_fraction(cfg.get_int_list("system", "digits"));
        }
        if (type == "gauss") {
            return IfsSystem::gauss_tail(cfg.get_int_or("system", "head", 4));
        }
        if (type == "tail") {
            return IfsSystem::analytic_tail(tail_law_from(cfg, "system", false));
        }
        if (type == "dyadic-tail") {
            return IfsSystem::analytic_tail(tail_law_from(cfg, "system", true));
        }
        if (type == "reflection-circles") {
            return ifs_from_schottky(
                GroupPresentation::reflection_group(circles_from(cfg, "system")));
        }
        if (type == "schottky-pairs") {
            return ifs_from_schottky(
                GroupPresentation::schottky_group(circle_pairs_from(cfg, "system")));
        }
    } catch (const ConfigError&) {
        throw;
    } catch (const Error& e) {
        throw ConfigError("invalid system in config: " + std::string(e.what()));
    }
    throw ConfigError("unknown system type '" + type + "'");
}

DeformationFamily build_family(ConfigFile& cfg) {
    if (!cfg.has("family", "type"))
        throw ConfigError("config needs a [family] section with a 'type' key");
    const std::string type = cfg.get_string("family", "type");
    try {
        if (type == "similarity") {
            return DeformationFamily::similarity(cfg.get_poly_list("family", "ratio_polys"),
                                                 cfg.get_poly_list("family", "offset_polys"),
                                                 family_range(cfg));
        }
        if (type == "reflection-circles") {
            return DeformationFamily::reflection_circles(
                cfg.get_number_list("family", "centers"),
                cfg.get_poly_list("family", "radius_polys"), family_range(cfg));
        }
        if (type == "schottky-pair") {
            return DeformationFamily::schottky_pair(cfg.get_number("family", "center1"),
                                                    cfg.get_number("family", "center2"),
                                                    cfg.get_poly("family", "radius_poly"),
                                                    family_range(cfg));
        }
        if (type == "tail-exponent") {
            TailLaw base;
            base.dyadic = true;
            base.k_exponent = cfg.get_number("family", "p");
            base.log_exponent = cfg.get_number_or("family", "q", 0.0);
            base.A = cfg.get_number_or("family", "a", 1.0);
            base.B = cfg.get_number_or("family", "b", base.A);
            base.multiplicity = cfg.get_int_or("family", "multiplicity", 1);
            base.first_index = cfg.get_int_or("family", "first_index", 0);
            base.alpha = 1.0;
            base.beta = 1.0;
            return DeformationFamily::tail_exponent(base, cfg.get_poly("family", "alpha_poly"),
                                                    cfg.get_poly("family", "beta_poly"),
                                                    family_range(cfg));
        }
    } catch (const ConfigError&) {
        throw;
    } catch (const Error& e) {
        throw ConfigError("invalid family in config: " + std::string(e.what()));
    }
    throw ConfigError("unknown family type '" + type + "'");
}

GroupPresentation build_group(ConfigFile& cfg) {
    if (!cfg.has("group", "type"))
        throw ConfigError("config needs a [group] section with a 'type' key");
    const std::string type = cfg.get_string("group", "type");
    try {
        if (type == "reflection-circles")
            return GroupPresentation::reflection_group(circles_from(cfg, "group"));
        if (type == "schottky-pairs")
            return GroupPresentation::schottky_group(circle_pairs_from(cfg, "group"));
        if (type == "cyclic")
            return GroupPresentation::cyclic_group(cfg.get_number("group", "multiplier"));
        if (type == "dyadic-chain")
            return GroupPresentation::dyadic_chain_group(cfg.get_int("group", "depth"));
    } catch (const ConfigError&) {
        throw;
    } catch (const Error& e) {
        throw ConfigError("invalid group in config: " + std::string(e.what()));
    }
    throw ConfigError("unknown group type '" + type + "'");
}

std::vector<std::string> run_experiment(const std::string& subcommand, ConfigFile& cfg,
                                        const RunOptions& opts) {
    static const std::map<std::string, std::string> expected_kind = {
        {"dim", "dim"},           {"pressure", "pressure-curve"},
        {"curve", "dimension-curve"}, {"orbit", "orbit"},
        {"probe-type", "orbit"},  {"schottky", "schottky-build"},
        {"section5", "section5"},
    };
    const auto it = expected_kind.find(subcommand);
    if (it == expected_kind.end())
        throw ConfigError("unknown subcommand '" + subcommand + "'");

    const int schema = cfg.get_int_or("", "schema", kConfigSchema);
    if (schema != kConfigSchema)
        throw ConfigError("unsupported config schema " + std::to_string(schema) +
                          " (this build understands " + std::to_string(kConfigSchema) + ")");
    const std::string kind = cfg.get_string("", "kind");
    if (kind != it->second)
        throw ConfigError("config kind '" + kind + "' does not match subcommand '" + subcommand +
                          "' (expected kind '" + it->second + "')");
    const std::string name = cfg.get_string_or("", "name", config_stem(cfg.display_name()));
    validate_name(name);

    ordered_json out = ordered_json::object();
    Staging stage;
    if (subcommand == "dim")
        run_dim(cfg, opts, out, stage, name);
    else if (subcommand == "pressure")
        run_pressure(cfg, opts, out, stage, name);
    else if (subcommand == "curve")
        run_curve(cfg, opts, out, stage, name);
    else if (subcommand == "orbit")
        run_orbit(cfg, opts, out, stage, name);
    else if (subcommand == "probe-type")
        run_probe(cfg, opts, out, stage, name);
    else if (subcommand == "schottky")
        run_schottky(cfg, opts, out, stage, name);
    else
        run_section5(cfg, opts, out, stage, name);
    cfg.require_all_consumed();

    ordered_json record;
    record["tool"] = "limset";
    record["version"] = kVersion;
    record["kind"] = kind;
    record["subcommand"] = subcommand;
    record["name"] = name;
    record["outputs"] = out;
    ordered_json files = ordered_json::array();
    files.push_back(name + ".json");
    for (const auto& [filename, content] : stage.files) files.push_back(filename);
    record["files"] = files;
    record["config"] = cfg.raw_text();

    std::error_code ec;
    std::filesystem::create_directories(opts.out_dir, ec);
    if (ec) throw ConfigError("cannot create output directory '" + opts.out_dir + "'");
    std::vector<std::string> written;
    auto write_file = [&](const std::string& filename, const std::string& content) {
        const std::filesystem::path p = std::filesystem::path(opts.out_dir) / filename;
        std::ofstream f(p, std::ios::binary | std::ios::trunc);
        if (!f) throw ConfigError("cannot write '" + p.string() + "'");
        f << content;
        f.close();
        if (!f) throw ConfigError("short write to '" + p.string() + "'");
        written.push_back(p.string());
    };
    write_file(name + ".json", record.dump(2) + "\n");
    for (const auto& [filename, content] : stage.files) write_file(filename, content);
    return written;
}

std::vector<std::string> run_section5_default(const RunOptions& opts) {
    const int depth = opts.depth > 0 ? opts.depth : 8;
    std::ostringstream text;
    text << "schema = 1\nkind = section5\nname = section5\n\n[solver]\ndepth = " << depth << "\n";
    ConfigFile cfg = ConfigFile::parse_text(text.str(), "builtin-section5");
    return run_experiment("section5", cfg, opts);
}

} // namespace limset
