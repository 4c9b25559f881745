#include <cstdio>
#include <exception>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "limset/errors.hpp"
#include "limset/experiment.hpp"
#include "limset/version.hpp"

namespace {

struct SubArgs {
    std::string config;
    std::string out = ".";
    int threads = 1;
    double tolerance = -1.0;
    int depth = -1;
};

void add_common(CLI::App* sub, SubArgs& args, bool config_required) {
    CLI::Option* c = sub->add_option("--config", args.config, "experiment config file");
    if (config_required) c->required();
    sub->add_option("--out", args.out, "output directory (default: current)");
    sub->add_option("--threads", args.threads, "worker threads for curve evaluation")
        ->check(CLI::Range(1, 64));
    sub->add_option("--tolerance", args.tolerance,
                    "override the Bowen bisection tolerance sigma_tol");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"limit sets of conformal iterated function systems: Hausdorff dimension "
                 "via topological pressure, orbit growth, and deformation curves"};
    app.set_version_flag("--version", std::string("limset ") + limset::kVersion);
    app.require_subcommand(1);

    struct Sub {
        const char* name;
        const char* help;
        bool config_required;
    };
    const std::vector<Sub> subs = {
        {"dim", "Hausdorff dimension of a system's limit set (Bowen root)", true},
        {"pressure", "pressure curve P(sigma) over a sigma grid", true},
        {"curve", "dimension along a one-parameter deformation family", true},
        {"orbit", "orbit ball of a group presentation with growth estimates", true},
        {"probe-type", "convergence/divergence probe for the Poincare series", true},
        {"schottky", "build and validate a circle-backed group presentation", true},
        {"section5", "dyadic reflection-pair chain construction report", false},
    };

    std::vector<SubArgs> args(subs.size());
    std::vector<CLI::App*> apps;
    for (std::size_t i = 0; i < subs.size(); ++i) {
        CLI::App* sub = app.add_subcommand(subs[i].name, subs[i].help);
        add_common(sub, args[i], subs[i].config_required);
        if (std::string(subs[i].name) == "section5")
            sub->add_option("--depth", args[i].depth, "chain depth (overrides the config)")
                ->check(CLI::Range(1, 24));
        apps.push_back(sub);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    std::size_t chosen = 0;
    for (std::size_t i = 0; i < apps.size(); ++i)
        if (apps[i]->parsed()) chosen = i;
    const SubArgs& a = args[chosen];
    const std::string sub = subs[chosen].name;

    limset::RunOptions opts;
    opts.out_dir = a.out;
    opts.threads = a.threads;
    opts.tolerance = a.tolerance;
    opts.depth = a.depth;

    try {
        std::vector<std::string> written;
        if (sub == "section5" && a.config.empty()) {
            written = limset::run_section5_default(opts);
        } else {
            limset::ConfigFile cfg = limset::ConfigFile::parse_file(a.config);
            written = limset::run_experiment(sub, cfg, opts);
        }
        for (const std::string& path : written) std::printf("wrote %s\n", path.c_str());
        return 0;
    } catch (const limset::ConfigError& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return 2;
    } catch (const limset::Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    }
}
