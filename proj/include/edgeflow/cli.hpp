#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace edgeflow::cli {

// Everything a subcommand needs, filled by the flag parser. Sentinels: empty
// string or a negative number mean "not given"; commands substitute their
// scenario defaults.
struct RunConfig {
    std::string subcommand;

    std::string graph_path;
    std::string flow_path;
    std::string truth_path;
    std::string out_dir;
    std::string recipe_path;
    std::string filter_path;
    std::string phi_path;
    std::string operator_name = "L1";

    // filter spec flags
    std::string kind;
    double alpha = -1.0;
    double beta = -1.0;
    double mu = -1.0;
    int k = -1;

    // recipe overrides
    double harmonic_weight = -1.0;
    double gradient_weight = -1.0;
    double linegraph_smooth_weight = -1.0;
    double sigma = -1.0;
    int cutoff = -1;

    std::uint64_t seed = 1;
    bool seed_given = false;
    double amplitude = -1.0;
    int num_seeds = 1;

    bool svg = false;
    bool json = false;
    int verbosity = 0;
};

int cmd_decompose(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_filter(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_spectrum(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_schematic(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_compare(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_gen(const RunConfig& cfg, std::ostream& out, std::ostream& err);

// Parses args (no program name) and dispatches. Returns the process exit
// code: 0 on success, nonzero otherwise. Library errors are reported on err
// as "error: <stable_name>: <message>".
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace edgeflow::cli
