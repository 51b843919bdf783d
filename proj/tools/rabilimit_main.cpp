// Command-line front end: mean photon number from pulse parameters, signal
// traces as CSV, decoherence limits, circuit depth, and feasibility verdicts.
//
// Exit codes: 0 success / feasible, 2 usage, 3 circuit parse error,
// 4 I/O error, 5 infeasible.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "rabilimit/circuit_depth.hpp"
#include "rabilimit/constants.hpp"
#include "rabilimit/decoherence_limit.hpp"
#include "rabilimit/envelope_model.hpp"
#include "rabilimit/pulse_physics.hpp"
#include "rabilimit/rabi_series.hpp"
#include "rabilimit/trace_csv.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitParse = 3;
constexpr int kExitIo = 4;
constexpr int kExitInfeasible = 5;

using rabilimit::LimitMethod;

void print_constants_header() {
    std::printf("# h = %.17g J s, c = %.9g m/s, default tail_tol = %g\n",
                rabilimit::kPlanck, rabilimit::kSpeedOfLight,
                rabilimit::kDefaultTailTol);
}

// Pulse flags shared by every subcommand that needs a field strength.
struct PulseOpts {
    double frequency_hz = 0.0;
    double wavelength_m = 0.0;
    double duration_s = 0.0;
    double peak_power_w = 0.0;
    double photon_energy_j = 0.0;
    CLI::Option* frequency_opt = nullptr;
    CLI::Option* wavelength_opt = nullptr;
    CLI::Option* energy_opt = nullptr;
};

void add_pulse_flags(CLI::App* cmd, PulseOpts& o, bool required) {
    auto* source = cmd->add_option_group(
        "carrier", "exactly one way to give the carrier frequency");
    o.frequency_opt = source->add_option("--frequency-hz", o.frequency_hz,
                                         "carrier frequency in Hz");
    o.wavelength_opt =
        source->add_option("--wavelength-m", o.wavelength_m,
                           "carrier wavelength in m, converted via c");
    source->require_option(required ? 1 : -1);
    auto* dur = cmd->add_option("--duration-s", o.duration_s,
                                "pulse duration in seconds");
    auto* pow = cmd->add_option("--peak-power-w", o.peak_power_w,
                                "pulse peak power in watts");
    if (required) {
        dur->required();
        pow->required();
    }
    o.energy_opt = cmd->add_option(
        "--photon-energy-j", o.photon_energy_j,
        "photon energy override in J (default: h * frequency)");
}

rabilimit::CoherentPulse make_pulse(const PulseOpts& o) {
    const double freq = o.wavelength_opt->count() > 0
                            ? rabilimit::frequency_from_wavelength(o.wavelength_m)
                            : o.frequency_hz;
    std::optional<double> override_j;
    if (o.energy_opt->count() > 0) override_j = o.photon_energy_j;
    return {freq, o.duration_s, o.peak_power_w, override_j};
}

// Field-strength flags for limit/verdict: either --nbar directly or the
// full pulse description.
struct FieldOpts {
    double nbar = 0.0;
    CLI::Option* nbar_opt = nullptr;
    PulseOpts pulse;
};

void add_field_flags(CLI::App* cmd, FieldOpts& o) {
    o.nbar_opt = cmd->add_option("--nbar", o.nbar, "mean photon number")
                     ->check(CLI::PositiveNumber);
    add_pulse_flags(cmd, o.pulse, /*required=*/false);
}

// Resolves nbar from whichever flag set was given; throws CLI::ValidationError
// on a contradictory or incomplete combination so the caller exits 2.
double resolve_nbar(const FieldOpts& o) {
    const bool have_nbar = o.nbar_opt->count() > 0;
    const bool have_pulse = o.pulse.frequency_opt->count() > 0 ||
                            o.pulse.wavelength_opt->count() > 0;
    if (have_nbar && have_pulse)
        throw CLI::ValidationError(
            "field", "--nbar conflicts with the pulse flags");
    if (have_nbar) return o.nbar;
    if (!have_pulse)
        throw CLI::ValidationError(
            "field", "give --nbar or a pulse description");
    if (!(o.pulse.duration_s > 0.0) || !(o.pulse.peak_power_w > 0.0))
        throw CLI::ValidationError(
            "field", "pulse form needs --duration-s and --peak-power-w");
    return rabilimit::nbar_from_pulse(make_pulse(o.pulse));
}

struct MethodName {
    static const std::map<std::string, LimitMethod>& map() {
        static const std::map<std::string, LimitMethod> m{
            {"closed", LimitMethod::ClosedForm},
            {"literal", LimitMethod::CumulativeLiteral},
            {"envelope", LimitMethod::CumulativeEnvelope},
            {"exact", LimitMethod::ExactPeak},
            {"per-period", LimitMethod::PerPeriod},
        };
        return m;
    }
};

int run_nbar(const PulseOpts& o) {
    const rabilimit::CoherentPulse pulse = make_pulse(o);
    print_constants_header();
    if (o.wavelength_opt->count() > 0)
        std::printf("wavelength_m    = %.12g\n", o.wavelength_m);
    std::printf("frequency_hz    = %.12g\n", pulse.frequency_hz);
    std::printf("duration_s      = %.12g\n", pulse.duration_s);
    std::printf("peak_power_w    = %.12g\n", pulse.peak_power_w);
    std::printf("photon_energy_j = %.12g%s\n", rabilimit::photon_energy(pulse),
                pulse.photon_energy_override_j ? " (override)" : "");
    std::printf("nbar            = %.12g\n", rabilimit::nbar_from_pulse(pulse));
    return kExitOk;
}

int run_trace(double nbar, double tau_max, std::size_t samples,
              double tail_tol, const std::string& out_path) {
    const rabilimit::RabiTrace trace =
        rabilimit::sample_trace(nbar, tau_max, samples, tail_tol);

    std::ofstream out(out_path);
    if (!out) {
        std::fprintf(stderr, "error: cannot open '%s' for writing\n",
                     out_path.c_str());
        return kExitIo;
    }
    rabilimit::write_trace_csv(out, trace);
    out.flush();
    if (!out) {
        std::fprintf(stderr, "error: short write to '%s'\n", out_path.c_str());
        return kExitIo;
    }

    const rabilimit::PeriodCount pc =
        rabilimit::count_periods_by_zero_crossings(trace);
    print_constants_header();
    std::printf("nbar                = %.12g\n", nbar);
    std::printf("tau_max             = %.12g\n", tau_max);
    std::printf("samples             = %zu\n", samples);
    std::printf("tail_tol            = %g\n", tail_tol);
    std::printf("output              = %s\n", out_path.c_str());
    std::printf("zero_crossings      = %lld\n",
                static_cast<long long>(pc.sign_changes));
    std::printf("periods_counted     = %.12g\n", pc.periods);
    std::printf("periods_closed_form = %.12g\n",
                rabilimit::periods_in_interval(nbar, tau_max));
    if (pc.degenerate_grid)
        std::fprintf(stderr,
                     "warning: consecutive zero samples; grid may be too "
                     "coarse for a reliable period count\n");
    return kExitOk;
}

void print_limit_lines(double nbar, double p_th, LimitMethod method,
                       double tail_tol) {
    std::printf("N_closed_form        = %.12g\n",
                rabilimit::n_chi_closed_form(nbar, p_th));
    if (method != LimitMethod::ClosedForm) {
        const rabilimit::LimitEstimate e =
            rabilimit::estimate_limit(nbar, p_th, method, tail_tol);
        std::printf("N_%-18s = %lld\n", rabilimit::limit_method_name(method),
                    static_cast<long long>(e.floor_value()));
    }
}

int run_limit(const FieldOpts& field, double p_th, LimitMethod method,
              double tail_tol) {
    const double nbar = resolve_nbar(field);
    print_constants_header();
    std::printf("nbar                 = %.12g\n", nbar);
    std::printf("p_th                 = %.12g\n", p_th);
    std::printf("method               = %s\n",
                rabilimit::limit_method_name(method));
    print_limit_lines(nbar, p_th, method, tail_tol);
    return kExitOk;
}

int load_circuit(const std::string& path, rabilimit::Circuit& out) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        std::fprintf(stderr, "error: cannot read '%s'\n", path.c_str());
        return kExitIo;
    }
    const std::string text{std::istreambuf_iterator<char>(in),
                           std::istreambuf_iterator<char>()};
    if (in.bad()) {
        std::fprintf(stderr, "error: failed reading '%s'\n", path.c_str());
        return kExitIo;
    }
    try {
        out = rabilimit::parse_circuit(text);
    } catch (const rabilimit::CircuitParseError& e) {
        std::fprintf(stderr, "%s: %s\n", path.c_str(), e.what());
        return kExitParse;
    }
    return kExitOk;
}

int run_depth(const std::string& path) {
    rabilimit::Circuit circuit;
    if (int rc = load_circuit(path, circuit); rc != kExitOk) return rc;
    const rabilimit::DepthReport report = rabilimit::logical_depth(circuit);

    print_constants_header();
    std::printf("circuit = %s\n", path.c_str());
    std::printf("qubits  = %zu\n", circuit.qubit_names.size());
    std::printf("periods = %zu\n", circuit.periods.size());
    std::printf("%-8s %-16s %s\n", "period", "qubit", "ops");
    for (std::size_t p = 0; p < report.per_period_per_qubit.size(); ++p)
        for (const auto& [qubit, ops] : report.per_period_per_qubit[p])
            std::printf("%-8zu %-16s %lld\n", p, qubit.c_str(),
                        static_cast<long long>(ops));
    if (report.chi > 0)
        std::printf("chi     = %lld (period %zu, qubit %s)\n",
                    static_cast<long long>(report.chi), report.argmax_period,
                    report.argmax_qubit.c_str());
    else
        std::printf("chi     = 0\n");
    return kExitOk;
}

int run_verdict(const std::string& path, const FieldOpts& field, double p_th,
                LimitMethod method, double periods_per_gate, double tail_tol) {
    rabilimit::Circuit circuit;
    if (int rc = load_circuit(path, circuit); rc != kExitOk) return rc;
    const double nbar = resolve_nbar(field);
    const rabilimit::DepthReport depth = rabilimit::logical_depth(circuit);

    // One gate is assumed to occupy periods_per_gate Rabi periods; the
    // demand on the busiest qubit is rounded up to whole periods.
    const auto demand = static_cast<std::int64_t>(
        std::ceil(static_cast<double>(depth.chi) * periods_per_gate));

    print_constants_header();
    std::printf("circuit              = %s\n", path.c_str());
    std::printf("chi                  = %lld\n",
                static_cast<long long>(depth.chi));
    std::printf("periods_per_gate     = %.12g\n", periods_per_gate);
    std::printf("periods_demanded     = %lld\n",
                static_cast<long long>(demand));
    std::printf("nbar                 = %.12g\n", nbar);
    std::printf("p_th                 = %.12g\n", p_th);
    std::printf("method               = %s\n",
                rabilimit::limit_method_name(method));
    print_limit_lines(nbar, p_th, method, tail_tol);

    const rabilimit::LimitEstimate limit =
        rabilimit::estimate_limit(nbar, p_th, method, tail_tol);
    const std::int64_t bound = limit.floor_value();
    const bool feasible = demand <= bound;  // demand 0 is trivially feasible
    std::printf("margin               = %lld\n",
                static_cast<long long>(bound - demand));
    std::printf("verdict              = %s\n",
                feasible ? "feasible" : "infeasible");
    return feasible ? kExitOk : kExitInfeasible;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Decoherence limit on gates per error-correction period for a "
        "coherently driven qubit"};
    app.require_subcommand(1);

    auto* cmd_nbar = app.add_subcommand(
        "nbar", "mean photon number of a drive pulse");
    PulseOpts nbar_opts;
    add_pulse_flags(cmd_nbar, nbar_opts, /*required=*/true);

    auto* cmd_trace =
        app.add_subcommand("trace", "sample the Rabi signal to a CSV file");
    double tr_nbar = 0.0, tr_tau_max = 0.0, tr_tail_tol = rabilimit::kDefaultTailTol;
    std::size_t tr_samples = 0;
    std::string tr_output;
    cmd_trace->add_option("--nbar", tr_nbar, "mean photon number")
        ->required()
        ->check(CLI::PositiveNumber);
    cmd_trace->add_option("--tau-max", tr_tau_max, "end of the tau grid")
        ->required()
        ->check(CLI::PositiveNumber);
    cmd_trace->add_option("--samples", tr_samples, "number of grid points")
        ->required()
        ->check(CLI::Range(std::size_t{2}, std::size_t{100000000}));
    cmd_trace->add_option("--tail-tol", tr_tail_tol,
                          "Poisson mass allowed outside the window");
    cmd_trace->add_option("-o,--output", tr_output, "CSV output path")
        ->required();

    auto* cmd_limit = app.add_subcommand(
        "limit", "decoherence limit N for a field strength");
    FieldOpts li_field;
    double li_pth = 0.0, li_tail_tol = rabilimit::kDefaultTailTol;
    LimitMethod li_method = LimitMethod::CumulativeLiteral;
    add_field_flags(cmd_limit, li_field);
    cmd_limit->add_option("--pth", li_pth, "threshold error rate per gate")
        ->required()
        ->check(CLI::Range(0.0, 1.0));
    cmd_limit
        ->add_option("--method", li_method,
                     "closed|literal|envelope|exact|per-period")
        ->transform(CLI::CheckedTransformer(MethodName::map(), CLI::ignore_case));
    cmd_limit->add_option("--tail-tol", li_tail_tol,
                          "Poisson mass allowed outside the window");

    auto* cmd_depth = app.add_subcommand(
        "depth", "per-qubit gate counts and chi of a circuit file");
    std::string de_path;
    cmd_depth->add_option("circuit", de_path, "circuit file")->required();

    auto* cmd_verdict = app.add_subcommand(
        "verdict", "check a circuit against the decoherence limit");
    std::string ve_path;
    FieldOpts ve_field;
    double ve_pth = 0.0, ve_ppg = 1.0, ve_tail_tol = rabilimit::kDefaultTailTol;
    LimitMethod ve_method = LimitMethod::CumulativeLiteral;
    cmd_verdict->add_option("circuit", ve_path, "circuit file")->required();
    add_field_flags(cmd_verdict, ve_field);
    cmd_verdict->add_option("--pth", ve_pth, "threshold error rate per gate")
        ->required()
        ->check(CLI::Range(0.0, 1.0));
    cmd_verdict
        ->add_option("--method", ve_method,
                     "closed|literal|envelope|exact|per-period")
        ->transform(CLI::CheckedTransformer(MethodName::map(), CLI::ignore_case));
    cmd_verdict
        ->add_option("--periods-per-gate", ve_ppg,
                     "Rabi periods one gate occupies")
        ->check(CLI::PositiveNumber);
    cmd_verdict->add_option("--tail-tol", ve_tail_tol,
                            "Poisson mass allowed outside the window");

    try {
        app.parse(argc, argv);

        if (*cmd_nbar) return run_nbar(nbar_opts);
        if (*cmd_trace)
            return run_trace(tr_nbar, tr_tau_max, tr_samples, tr_tail_tol,
                             tr_output);
        if (*cmd_limit)
            return run_limit(li_field, li_pth, li_method, li_tail_tol);
        if (*cmd_depth) return run_depth(de_path);
        if (*cmd_verdict)
            return run_verdict(ve_path, ve_field, ve_pth, ve_method, ve_ppg,
                               ve_tail_tol);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitUsage;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return kExitUsage;
}
