#pragma once

#include <string>

#include "limset/config.hpp"
#include "limset/deform.hpp"
#include "limset/group.hpp"
#include "limset/ifs.hpp"

namespace limset {

struct RunOptions {
    std::string out_dir = ".";
    int threads = 1;
    double tolerance = -1.0; // < 0: use config / default
    int depth = -1;          // section5 only; < 0: use config / default
};

// Builders shared by the CLI and the test suites.  Each consumes keys from
// the named section and throws ConfigError on anything malformed.
IfsSystem build_system(ConfigFile& cfg);
DeformationFamily build_family(ConfigFile& cfg);
GroupPresentation build_group(ConfigFile& cfg);

// Runs the experiment described by `cfg` for the given CLI subcommand
// (dim, pressure, curve, orbit, probe-type, schottky, section5), writing
// CSV/JSON outputs under opts.out_dir.  Returns the list of files written.
std::vector<std::string> run_experiment(const std::string& subcommand, ConfigFile& cfg,
                                        const RunOptions& opts);

// section5 without a config file: synthesize a minimal one from opts.depth.
std::vector<std::string> run_section5_default(const RunOptions& opts);

} // namespace limset
