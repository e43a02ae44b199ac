#include "edgeflow/cli.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "edgeflow/errors.hpp"
#include "edgeflow/experiments.hpp"
#include "edgeflow/filters.hpp"
#include "edgeflow/flowgen.hpp"
#include "edgeflow/graph.hpp"
#include "edgeflow/hodge.hpp"
#include "edgeflow/io.hpp"
#include "edgeflow/kernels.hpp"
#include "edgeflow/report.hpp"
#include "edgeflow/spectral.hpp"
#include "edgeflow/svg.hpp"

namespace edgeflow::cli {

namespace {

std::string fmt(double v) { return report::format_number(v); }

double diff_norm(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.size() != b.size())
        throw DimensionError("signals have different lengths");
    std::vector<double> d(a.size());
    for (std::size_t i = 0; i < d.size(); ++i) d[i] = a[i] - b[i];
    return kernels::norm2(d);
}

std::string join(const std::string& dir, const std::string& name) {
    if (dir.empty()) return name;
    if (dir.back() == '/') return dir + name;
    return dir + "/" + name;
}

void ensure_out_dir(const RunConfig& cfg) {
    if (cfg.out_dir.empty())
        throw IoError("this command requires --out <directory>");
    std::error_code ec;
    std::filesystem::create_directories(cfg.out_dir, ec);
    if (ec) throw IoError("cannot create output directory " + cfg.out_dir + ": " +
                          ec.message());
}

io::GraphFile load_graph(const RunConfig& cfg) {
    if (cfg.graph_path.empty()) throw IoError("this command requires --graph <file>");
    return io::read_graph_file(cfg.graph_path);
}

std::vector<std::array<double, 2>> layout_for(const io::GraphFile& gf) {
    if (gf.has_coords()) return gf.coords;
    return svg::spring_layout(gf.graph);
}

struct Panel {
    std::string name;  // file stem
    const EdgeSignal* signal;
};

// Writes one SVG per panel on a shared magnitude scale so panels compare.
void write_panels(const RunConfig& cfg, const io::GraphFile& gf,
                  const std::vector<Panel>& panels, std::ostream& err) {
    if (!cfg.svg) return;
    const auto coords = layout_for(gf);
    double ref = 0.0;
    for (const Panel& p : panels)
        for (double v : p.signal->values) ref = std::max(ref, std::abs(v));
    for (const Panel& p : panels) {
        svg::FlowMapOptions o;
        o.title = p.name;
        o.reference_magnitude = ref;
        const std::string path = join(cfg.out_dir, p.name + ".svg");
        svg::write_svg_file(path, svg::render_flow_map(gf.graph, coords, *p.signal, o));
        if (cfg.verbosity > 0) err << "wrote " << path << "\n";
    }
}

void write_flow(const RunConfig& cfg, const io::GraphFile& gf, const std::string& stem,
                const EdgeSignal& f, std::ostream& err) {
    const std::string path = join(cfg.out_dir, stem + ".flow");
    io::write_flow_file(path, f, gf.graph, cfg.graph_path);
    if (cfg.verbosity > 0) err << "wrote " << path << "\n";
}

void write_report_files(const RunConfig& cfg, const report::Json& doc,
                        const std::string& stem, std::ostream& err) {
    const std::string txt = join(cfg.out_dir, stem + ".txt");
    report::write_text_file(doc, txt);
    if (cfg.verbosity > 0) err << "wrote " << txt << "\n";
    if (cfg.json) {
        const std::string js = join(cfg.out_dir, stem + ".json");
        report::write_json_file(doc, js);
        if (cfg.verbosity > 0) err << "wrote " << js << "\n";
    }
}

// Recipe resolution: start from the command's default (or the --recipe file),
// then apply whichever flags were given.
flowgen::FlowRecipe resolve_recipe(const RunConfig& cfg, flowgen::FlowRecipe base) {
    if (!cfg.recipe_path.empty()) base = io::read_flow_recipe_file(cfg.recipe_path);
    if (cfg.harmonic_weight >= 0.0) base.harmonic_weight = cfg.harmonic_weight;
    if (cfg.gradient_weight >= 0.0) base.gradient_weight = cfg.gradient_weight;
    if (cfg.linegraph_smooth_weight >= 0.0)
        base.linegraph_smooth_weight = cfg.linegraph_smooth_weight;
    if (cfg.sigma >= 0.0) base.noise_sigma = cfg.sigma;
    if (cfg.cutoff >= 0) base.linegraph_cutoff = cfg.cutoff;
    if (cfg.seed_given || cfg.recipe_path.empty()) base.seed = cfg.seed;
    return base;
}

filters::FilterSpec resolve_filter_spec(const RunConfig& cfg, const Graph& g,
                                        std::optional<std::string>* phi_path_out) {
    filters::FilterSpec spec;
    std::optional<std::string> phi_path;
    if (!cfg.filter_path.empty()) {
        io::FilterSpecFile ff = io::read_filter_spec_file(cfg.filter_path);
        spec = ff.spec;
        phi_path = ff.phi_path;
    }
    if (!cfg.kind.empty()) {
        const auto k = filters::kind_from_name(cfg.kind);
        if (!k) throw InvalidFilterSpecError("unknown filter kind '" + cfg.kind + "'");
        spec.kind = *k;
    } else if (cfg.filter_path.empty()) {
        throw InvalidFilterSpecError("no filter given: use --kind or --filter <file>");
    }
    if (cfg.alpha >= 0.0) spec.alpha = cfg.alpha;
    if (cfg.beta >= 0.0) spec.beta = cfg.beta;
    if (cfg.mu >= 0.0) spec.mu = cfg.mu;
    if (cfg.k >= 0) spec.k = cfg.k;
    if (!cfg.phi_path.empty()) phi_path = cfg.phi_path;

    if (phi_path) spec.potential = io::read_node_signal_file(*phi_path, g);
    if (phi_path_out) *phi_path_out = phi_path;
    return spec;
}

EdgeSignal apply_filter(const Graph& g, const EdgeSignal& f,
                        const filters::FilterSpec& spec, filters::Notes* notes) {
    using filters::FilterKind;
    switch (spec.kind) {
        case FilterKind::node_denoise: {
            // node kinds act on the flow as node data on the line graph
            const Graph lg = line_graph(g);
            return EdgeSignal(
                filters::node_denoise(lg, NodeSignal(f.values), spec.alpha).values);
        }
        case FilterKind::node_smooth: {
            const Graph lg = line_graph(g);
            return EdgeSignal(
                filters::node_smooth(lg, NodeSignal(f.values), spec.mu, spec.k, notes)
                    .values);
        }
        case FilterKind::flow_denoise:
            return filters::flow_denoise(g, f, spec.alpha);
        case FilterKind::flow_smooth:
            return filters::flow_smooth(g, f, spec.mu, spec.k, notes);
        case FilterKind::flow_denoise_sources:
            if (!spec.potential)
                throw InvalidFilterSpecError(
                    "flow_denoise_sources requires --phi <node signal file>");
            return filters::flow_denoise_sources(g, f, spec.alpha, *spec.potential);
        case FilterKind::mixed:
            return filters::mixed_filter(g, f, spec.alpha, spec.beta);
    }
    throw InvalidFilterSpecError("unknown filter kind");
}

}  // namespace

int cmd_gen(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const io::GraphFile gf = load_graph(cfg);
    ensure_out_dir(cfg);
    const flowgen::FlowRecipe recipe = resolve_recipe(cfg, flowgen::FlowRecipe{});
    const double amplitude = cfg.amplitude >= 0.0 ? cfg.amplitude : 1.0;

    auto [f0u, fu] = flowgen::synthesize(gf.graph, recipe);
    EdgeSignal f0 = f0u, f = fu;
    for (std::size_t i = 0; i < f0.size(); ++i) {
        f0[i] = amplitude * f0u[i];
        f[i] = f0[i] + (fu[i] - f0u[i]);
    }

    write_flow(cfg, gf, "f0", f0, err);
    write_flow(cfg, gf, "f", f, err);
    io::write_flow_recipe_file(join(cfg.out_dir, "recipe.txt"), recipe);
    write_panels(cfg, gf, {{"f0", &f0}, {"f", &f}}, err);

    out << "f0_norm " << fmt(kernels::norm2(f0.values)) << "\n";
    out << "f_norm " << fmt(kernels::norm2(f.values)) << "\n";
    out << "baseline_error " << fmt(diff_norm(f0.values, f.values)) << "\n";
    return 0;
}

int cmd_decompose(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const io::GraphFile gf = load_graph(cfg);
    if (cfg.flow_path.empty()) throw IoError("decompose requires --flow <file>");
    ensure_out_dir(cfg);
    const EdgeSignal f = io::read_flow_file(cfg.flow_path, gf.graph);

    const hodge::HodgeDecomposition dec = hodge::decompose(gf.graph, f);
    write_flow(cfg, gf, "cyclic", dec.cyclic, err);
    write_flow(cfg, gf, "gradient", dec.gradient, err);
    write_panels(cfg, gf,
                 {{"input", &f}, {"cyclic", &dec.cyclic}, {"gradient", &dec.gradient}},
                 err);

    out << "energy_total " << fmt(kernels::dot(f.values, f.values)) << "\n";
    out << "energy_cyclic " << fmt(kernels::dot(dec.cyclic.values, dec.cyclic.values))
        << "\n";
    out << "energy_gradient "
        << fmt(kernels::dot(dec.gradient.values, dec.gradient.values)) << "\n";
    out << "residual_norm " << fmt(dec.residual_norm) << "\n";
    return 0;
}

int cmd_filter(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const io::GraphFile gf = load_graph(cfg);
    if (cfg.flow_path.empty()) throw IoError("filter requires --flow <file>");
    const EdgeSignal f = io::read_flow_file(cfg.flow_path, gf.graph);
    const filters::FilterSpec spec = resolve_filter_spec(cfg, gf.graph, nullptr);

    for (const std::string& note : filters::validate(spec)) err << "note: " << note << "\n";

    filters::Notes notes;
    const EdgeSignal filtered = apply_filter(gf.graph, f, spec, &notes);
    for (const std::string& note : notes) err << "note: " << note << "\n";

    if (!cfg.out_dir.empty()) {
        ensure_out_dir(cfg);
        write_flow(cfg, gf, "filtered", filtered, err);
        write_panels(cfg, gf, {{"input", &f}, {"filtered", &filtered}}, err);
    }

    out << "delta_norm " << fmt(diff_norm(f.values, filtered.values)) << "\n";
    if (!cfg.truth_path.empty()) {
        const EdgeSignal truth = io::read_flow_file(cfg.truth_path, gf.graph);
        out << "truth_error " << fmt(diff_norm(truth.values, filtered.values)) << "\n";
    }
    return 0;
}

int cmd_spectrum(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const io::GraphFile gf = load_graph(cfg);
    const auto basis = filters::basis_from_name(cfg.operator_name);
    if (!basis)
        throw InvalidFilterSpecError("unknown operator '" + cfg.operator_name +
                                     "' (expected L, L1, or LLG)");
    const spectral::EigenDecomposition eig =
        spectral::eig_sym(filters::basis_operator(gf.graph, *basis));

    report::Json j;
    j["operator"] = filters::basis_name(*basis);
    j["dimension"] = eig.dimension();
    j["cycle_dimension"] = hodge::cycle_space_dimension(gf.graph);
    j["kernel_dimension"] = spectral::kernel_dimension(eig);
    j["eigenvalues"] = eig.eigenvalues;

    if (!cfg.kind.empty() || !cfg.filter_path.empty()) {
        const filters::FilterSpec spec = resolve_filter_spec(cfg, gf.graph, nullptr);
        const filters::FrequencyResponse h =
            filters::frequency_response(eig.eigenvalues, spec);
        j["filter"] = report::Json{{"kind", filters::kind_name(spec.kind)},
                                   {"alpha", spec.alpha},
                                   {"beta", spec.beta},
                                   {"mu", spec.mu},
                                   {"k", spec.k}};
        j["response"] = h.values;
        j["lowpass"] = filters::is_lowpass(h);
    }

    if (!cfg.out_dir.empty()) {
        ensure_out_dir(cfg);
        write_report_files(cfg, j, "spectrum", err);
    } else {
        out << report::to_text(j);
    }
    return 0;
}

int cmd_schematic(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const io::GraphFile gf = load_graph(cfg);
    ensure_out_dir(cfg);
    const int e = gf.graph.num_edges();
    const flowgen::FlowRecipe recipe =
        resolve_recipe(cfg, experiments::schematic_recipe(e, cfg.seed));
    const double mu = cfg.mu >= 0.0 ? cfg.mu : experiments::schematic_mu;
    const int k = cfg.k >= 0 ? cfg.k : experiments::schematic_k;
    const double amplitude =
        cfg.amplitude >= 0.0 ? cfg.amplitude : experiments::schematic_amplitude;

    const experiments::SchematicRun run =
        experiments::run_schematic(gf.graph, recipe, mu, k, amplitude);
    write_report_files(cfg, run.report.to_json(), "report", err);
    write_flow(cfg, gf, "f0", run.f0, err);
    write_flow(cfg, gf, "f", run.f, err);
    write_flow(cfg, gf, "flow_smoothed", run.flow_smoothed, err);
    write_flow(cfg, gf, "linegraph_smoothed", run.lg_smoothed, err);
    write_flow(cfg, gf, "cyclic", run.cyclic, err);
    write_flow(cfg, gf, "gradient", run.gradient, err);
    write_panels(cfg, gf,
                 {{"f0", &run.f0},
                  {"f", &run.f},
                  {"flow_smoothed", &run.flow_smoothed},
                  {"linegraph_smoothed", &run.lg_smoothed},
                  {"cyclic", &run.cyclic},
                  {"gradient", &run.gradient}},
                 err);

    out << "baseline_error " << fmt(run.report.baseline_error) << "\n";
    out << "flow_smooth_error " << fmt(run.report.outcomes[0].error) << "\n";
    out << "linegraph_smooth_error " << fmt(run.report.outcomes[1].error) << "\n";

    if (cfg.num_seeds > 1) {
        const experiments::SchematicEnsemble ens = experiments::run_schematic_ensemble(
            gf.graph, recipe, mu, k, amplitude, cfg.num_seeds);
        write_report_files(cfg, ens.report.to_json(), "ensemble_report", err);
        out << "fraction_flow_beats_baseline " << fmt(ens.fraction_flow_beats_baseline)
            << "\n";
        out << "fraction_flow_beats_linegraph " << fmt(ens.fraction_flow_beats_lg)
            << "\n";
    }
    return 0;
}

int cmd_compare(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const io::GraphFile gf = load_graph(cfg);
    ensure_out_dir(cfg);
    const int e = gf.graph.num_edges();
    const flowgen::FlowRecipe recipe =
        resolve_recipe(cfg, experiments::comparison_recipe(e, cfg.seed));
    const double amplitude =
        cfg.amplitude >= 0.0 ? cfg.amplitude : experiments::comparison_amplitude;
    const experiments::ComparisonGrids grids = experiments::default_comparison_grids();

    const experiments::ComparisonRun run =
        experiments::run_denoising_comparison(gf.graph, recipe, grids, amplitude);
    write_report_files(cfg, run.report.to_json(), "report", err);
    write_flow(cfg, gf, "f0", run.f0, err);
    write_flow(cfg, gf, "f", run.f, err);
    write_flow(cfg, gf, "linegraph_denoised", run.lg_filtered, err);
    write_flow(cfg, gf, "flow_denoised", run.flow_filtered, err);
    write_flow(cfg, gf, "mixed_denoised", run.mixed_filtered, err);

    const hodge::HodgeDecomposition dec = hodge::decompose(gf.graph, run.f);
    write_flow(cfg, gf, "cyclic", dec.cyclic, err);
    write_flow(cfg, gf, "gradient", dec.gradient, err);
    write_panels(cfg, gf,
                 {{"f0", &run.f0},
                  {"f", &run.f},
                  {"linegraph_denoised", &run.lg_filtered},
                  {"flow_denoised", &run.flow_filtered},
                  {"mixed_denoised", &run.mixed_filtered},
                  {"cyclic", &dec.cyclic},
                  {"gradient", &dec.gradient}},
                 err);

    out << "baseline_error " << fmt(run.baseline_error) << "\n";
    out << "linegraph_error " << fmt(run.lg_error) << "\n";
    out << "flow_error " << fmt(run.flow_error) << "\n";
    out << "mixed_error " << fmt(run.mixed_error) << "\n";
    out << "ordering_holds " << (run.ordering_holds ? "true" : "false") << "\n";

    if (cfg.num_seeds > 1) {
        const experiments::ComparisonEnsemble ens =
            experiments::run_denoising_comparison_ensemble(gf.graph, recipe, grids,
                                                           amplitude, cfg.num_seeds);
        write_report_files(cfg, ens.report.to_json(), "ensemble_report", err);
        out << "fraction_full_ordering " << fmt(ens.fraction_full_ordering) << "\n";
        out << "fraction_mixed_le_flow " << fmt(ens.fraction_mixed_le_flow) << "\n";
        out << "fraction_mixed_le_linegraph " << fmt(ens.fraction_mixed_le_lg) << "\n";
    }
    return 0;
}

namespace {

struct ParsedApp {
    CLI::App app{"edgeflow: filtering, decomposition, and denoising of graph edge flows"};
    RunConfig cfg;
    CLI::App* sub_decompose = nullptr;
    CLI::App* sub_filter = nullptr;
    CLI::App* sub_spectrum = nullptr;
    CLI::App* sub_schematic = nullptr;
    CLI::App* sub_compare = nullptr;
    CLI::App* sub_gen = nullptr;

    ParsedApp() {
        app.require_subcommand(1);

        auto add_common = [this](CLI::App* s, bool needs_out) {
            s->add_option("--graph", cfg.graph_path, "graph edge-list file")->required();
            if (needs_out)
                s->add_option("--out", cfg.out_dir, "output directory")->required();
            else
                s->add_option("--out", cfg.out_dir, "output directory");
            s->add_flag("--svg", cfg.svg, "also write SVG flow maps");
            s->add_flag("--json", cfg.json, "also write machine-readable reports");
            s->add_flag("-v,--verbose", cfg.verbosity, "list written files on stderr");
        };
        auto add_filter_flags = [this](CLI::App* s) {
            s->add_option("--kind", cfg.kind,
                          "filter kind: node_denoise, node_smooth, flow_denoise, "
                          "flow_smooth, flow_denoise_sources, mixed");
            s->add_option("--alpha", cfg.alpha, "denoiser strength");
            s->add_option("--beta", cfg.beta, "mixed filter line-graph strength");
            s->add_option("--mu", cfg.mu, "smoother step size");
            s->add_option("--k", cfg.k, "smoother iterations");
            s->add_option("--phi", cfg.phi_path, "node signal file with sources/sinks");
            s->add_option("--filter", cfg.filter_path, "filter spec file (key value lines)");
        };
        auto add_recipe_flags = [this](CLI::App* s) {
            s->add_option("--recipe", cfg.recipe_path, "flow recipe file");
            s->add_option("--harmonic", cfg.harmonic_weight, "harmonic component weight");
            s->add_option("--gradient", cfg.gradient_weight, "gradient component weight");
            s->add_option("--lgsmooth", cfg.linegraph_smooth_weight,
                          "line-graph-smooth component weight");
            s->add_option("--sigma", cfg.sigma, "noise standard deviation per edge");
            s->add_option("--cutoff", cfg.cutoff,
                          "line-graph eigenvector cutoff (0 = E/10)");
            s->add_option("--seed", cfg.seed, "base RNG seed");
            s->add_option("--amplitude", cfg.amplitude, "scale of the clean flow f0");
        };

        sub_decompose = app.add_subcommand(
            "decompose", "split a flow into cyclic and gradient parts");
        add_common(sub_decompose, true);
        sub_decompose->add_option("--flow", cfg.flow_path, "flow file")->required();

        sub_filter = app.add_subcommand("filter", "apply one filter to a flow");
        add_common(sub_filter, false);
        sub_filter->add_option("--flow", cfg.flow_path, "flow file")->required();
        sub_filter->add_option("--truth", cfg.truth_path,
                               "ground-truth flow for error reporting");
        add_filter_flags(sub_filter);

        sub_spectrum = app.add_subcommand(
            "spectrum", "eigenvalues of an operator and optional filter response");
        add_common(sub_spectrum, false);
        sub_spectrum->add_option("--operator", cfg.operator_name,
                                 "operator basis: L, L1, or LLG");
        add_filter_flags(sub_spectrum);

        sub_schematic = app.add_subcommand(
            "schematic", "flow smoothing demonstration on a noisy harmonic flow");
        add_common(sub_schematic, true);
        add_recipe_flags(sub_schematic);
        sub_schematic->add_option("--mu", cfg.mu, "smoother step size");
        sub_schematic->add_option("--k", cfg.k, "smoother iterations");
        sub_schematic->add_option("--seeds", cfg.num_seeds,
                                  "ensemble size (1 = single instance)");

        sub_compare = app.add_subcommand(
            "compare", "grid-searched denoising comparison (line-graph, flow, mixed)");
        add_common(sub_compare, true);
        add_recipe_flags(sub_compare);
        sub_compare->add_option("--seeds", cfg.num_seeds,
                                "ensemble size (1 = single instance)");

        sub_gen = app.add_subcommand("gen", "synthesize a flow pair (f0, noisy f)");
        add_common(sub_gen, true);
        add_recipe_flags(sub_gen);
    }
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    ParsedApp p;
    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        p.app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << p.app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << p.app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: cli_usage: " << e.what() << "\n";
        return 2;
    }

    for (CLI::App* s : {p.sub_schematic, p.sub_compare, p.sub_gen})
        if (s->parsed() && s->count("--seed") > 0) p.cfg.seed_given = true;

    try {
        if (p.sub_decompose->parsed()) {
            p.cfg.subcommand = "decompose";
            return cmd_decompose(p.cfg, out, err);
        }
        if (p.sub_filter->parsed()) {
            p.cfg.subcommand = "filter";
            return cmd_filter(p.cfg, out, err);
        }
        if (p.sub_spectrum->parsed()) {
            p.cfg.subcommand = "spectrum";
            return cmd_spectrum(p.cfg, out, err);
        }
        if (p.sub_schematic->parsed()) {
            p.cfg.subcommand = "schematic";
            return cmd_schematic(p.cfg, out, err);
        }
        if (p.sub_compare->parsed()) {
            p.cfg.subcommand = "compare";
            return cmd_compare(p.cfg, out, err);
        }
        if (p.sub_gen->parsed()) {
            p.cfg.subcommand = "gen";
            return cmd_gen(p.cfg, out, err);
        }
        err << "error: cli_usage: no subcommand given\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.name() << ": " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: internal_error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace edgeflow::cli
