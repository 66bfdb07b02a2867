// otto_cli: batch runner for the non-Markovian quantum Otto cycle.
//
//   otto_cli kernels --config run.json [--bath hot|cold] [--out kernels.csv]
//   otto_cli stroke  --config run.json [--bath hot|cold] [--initial 1.0] [--out trace.csv]
//   otto_cli cycle   --config run.json [--format csv|json]
//   otto_cli sweep   --config run.json [--workers N] [--dynamics tcl2|markov]
//   otto_cli phase   --config run.json [--workers N]
//
// Exit code 0 on success; on failure a one-line JSON error summary goes to stderr.
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "otto/error.hpp"
#include "otto/run_config.hpp"
#include "otto/sweep.hpp"

namespace {

struct Options {
    std::string config;
    std::string out;
    std::optional<int> workers;
    std::string dynamics;
    std::string bath = "hot";
    double initial = 1.0;
    std::string format = "csv";
};

int fail(const std::string& kind, const std::string& message, int code) {
    std::cerr << nlohmann::json{{"error", {{"kind", kind}, {"message", message}}}}.dump() << '\n';
    return code;
}

otto::RunConfig load(const Options& opt) {
    auto config = otto::load_config(opt.config);
    if (opt.workers) {
        if (*opt.workers < 1) throw otto::Error(otto::ErrorKind::Config, "field 'workers': must be >= 1");
        config.workers = *opt.workers;
    }
    if (!opt.dynamics.empty()) config.dynamics = otto::parse_dynamics(opt.dynamics);
    return config;
}

template <class Write>
void emit(const Options& opt, const otto::RunConfig& config, Write&& write) {
    const std::string path = !opt.out.empty() ? opt.out : config.output.value_or("");
    if (path.empty() || path == "-") {
        write(std::cout);
        return;
    }
    std::ofstream file(path);
    if (!file) throw otto::Error(otto::ErrorKind::Config, "cannot open output file '" + path + "'");
    write(file);
}

otto::KernelGrid stroke_grid(const otto::RunConfig& config, bool hot) {
    const auto params = otto::cycle_parameters(config);
    const auto& bath = hot ? params.hot : params.cold;
    const double omega = hot ? params.omega_hot : params.omega_cold;
    const double t = hot ? *config.t_h->value : *config.t_c->value;
    return config.grid_step ? otto::build_kernel_grid(bath, omega, t, *config.grid_step)
                            : otto::build_kernel_grid(bath, omega, t);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Non-Markovian quantum Otto cycle simulator"};
    app.require_subcommand(1);
    Options opt;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--config", opt.config, "JSON run configuration")->required();
        sub->add_option("--out", opt.out, "output path (default: config 'output', else stdout)");
        sub->add_option("--workers", opt.workers, "worker threads");
        sub->add_option("--dynamics", opt.dynamics, "tcl2 or markov")->check(CLI::IsMember({"tcl2", "markov"}));
    };
    auto* kernels = app.add_subcommand("kernels", "dump D1, D2, a, b, A on the stroke grid");
    auto* stroke = app.add_subcommand("stroke", "dump the TCL2 population trace of one stroke");
    auto* cycle = app.add_subcommand("cycle", "evaluate one limit cycle");
    auto* sweep = app.add_subcommand("sweep", "sweep (t_h, t_c)");
    auto* phase = app.add_subcommand("phase", "phase diagram over (T_c/T_h, omega_c/omega_h)");
    for (auto* sub : {kernels, stroke, cycle, sweep, phase}) add_common(sub);
    for (auto* sub : {kernels, stroke}) {
        sub->add_option("--bath", opt.bath, "hot or cold")->check(CLI::IsMember({"hot", "cold"}));
    }
    stroke->add_option("--initial", opt.initial, "initial ground-state population");
    cycle->add_option("--format", opt.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        return fail("usage", e.what(), 2);
    }

    try {
        const auto config = load(opt);
        if (kernels->parsed() || stroke->parsed()) {
            otto::validate_for(config, kernels->parsed() ? otto::Command::Kernels : otto::Command::Stroke);
            const bool hot = opt.bath == "hot";
            const auto grid = stroke_grid(config, hot);
            if (kernels->parsed()) {
                emit(opt, config, [&](std::ostream& os) { otto::write_kernel_csv(os, grid); });
            } else {
                const double t = hot ? *config.t_h->value : *config.t_c->value;
                const auto trace = otto::propagate(opt.initial, grid, t);
                emit(opt, config, [&](std::ostream& os) { otto::write_trace_csv(os, trace); });
            }
        } else if (cycle->parsed()) {
            const auto report = otto::run_cycle(config);
            emit(opt, config, [&](std::ostream& os) {
                if (opt.format == "json") {
                    os << otto::report_to_json(report) << '\n';
                } else {
                    otto::write_sweep_csv(os, {otto::SweepRow{report.t_hot, report.t_cold, report, {}}});
                }
            });
        } else if (sweep->parsed()) {
            const auto table = otto::run_sweep(config);
            emit(opt, config, [&](std::ostream& os) { otto::write_sweep_csv(os, table); });
        } else if (phase->parsed()) {
            const auto diagram = otto::run_phase(config);
            emit(opt, config, [&](std::ostream& os) { otto::write_phase_csv(os, diagram); });
        }
    } catch (const otto::Error& e) {
        return fail(std::string(otto::to_string(e.kind())), e.what(), e.kind() == otto::ErrorKind::Config ? 2 : 1);
    } catch (const std::exception& e) {
        return fail("internal", e.what(), 1);
    }
    return 0;
}
