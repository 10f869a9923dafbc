#include "cli.hpp"

#include "io.hpp"

#include <spinfloq/full_basis.hpp>
#include <spinfloq/krylov.hpp>
#include <spinfloq/scar.hpp>
#include <spinfloq/verify.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>

namespace spinfloq::cli {

using nlohmann::json;

double parse_angle(const std::string& text) {
    std::size_t consumed = 0;
    std::string body = text;
    double factor = 1.0;
    if (text.size() >= 2 && text.substr(text.size() - 2) == "pi") {
        body = text.substr(0, text.size() - 2);
        factor = std::numbers::pi;
        if (body.empty()) body = "1";
    }
    const double value = std::stod(body, &consumed);
    if (consumed != body.size())
        throw CLI::ValidationError("angle", "cannot parse angle '" + text + "'");
    return value * factor;
}

namespace {

// Model flags shared by the sector-based subcommands.
struct ModelFlags {
    std::string type = "xxz";
    int n = 21;
    int sector_2j = -1;  // default: largest sector
    std::optional<double> a, axy, az;
    double bz = 0.0;
    double bnz = 0.0;
    double omega = 1.0;
    std::string theta = "0";
    std::string theta_e, theta_n;

    void attach(CLI::App* cmd) {
        cmd->add_option("--type", type, "interaction type: ising|xx|heisenberg|xxz")
            ->check(CLI::IsMember({"ising", "xx", "heisenberg", "xxz"}));
        cmd->add_option("--n", n, "number of satellite spins N");
        cmd->add_option("--sector-2j", sector_2j,
                        "doubled sector label 2j (default: N, the largest sector)");
        cmd->add_option("--a", a, "locked coupling A = A_xy = A_z, MHz");
        cmd->add_option("--axy", axy, "transverse coupling A_xy, MHz");
        cmd->add_option("--az", az, "longitudinal coupling A_z, MHz");
        cmd->add_option("--bz", bz, "central-spin Zeeman field B_z, MHz");
        cmd->add_option("--bnz", bnz, "satellite Zeeman field B^n_z, MHz");
        cmd->add_option("--omega", omega, "drive frequency omega, MHz");
        cmd->add_option("--theta", theta, "pulse error for both spins (e.g. 0.1pi)");
        cmd->add_option("--theta-e", theta_e, "central-spin pulse error override");
        cmd->add_option("--theta-n", theta_n, "satellite pulse error override");
    }

    ModelParams resolve() const {
        ModelParams p;
        const double locked = a.value_or(0.0);
        if (type == "ising") {
            if (axy.value_or(0.0) != 0.0)
                throw CLI::ValidationError("--axy", "ising requires A_xy = 0");
            p.a_z = az.value_or(locked);
            p.a_xy = 0.0;
        } else if (type == "xx") {
            if (az.value_or(0.0) != 0.0)
                throw CLI::ValidationError("--az", "xx requires A_z = 0");
            p.a_xy = axy.value_or(locked);
            p.a_z = 0.0;
        } else if (type == "heisenberg") {
            p.a_xy = a.value_or(axy.value_or(az.value_or(0.0)));
            p.a_z = p.a_xy;
            if ((axy && *axy != p.a_xy) || (az && *az != p.a_z))
                throw CLI::ValidationError("--type", "heisenberg requires A_xy = A_z");
        } else {  // xxz
            p.a_xy = axy.value_or(locked);
            p.a_z = az.value_or(locked);
        }
        p.b_z = bz;
        p.b_nz = bnz;
        p.omega = omega;
        const double both = parse_angle(theta);
        p.theta_e = theta_e.empty() ? both : parse_angle(theta_e);
        p.theta_n = theta_n.empty() ? both : parse_angle(theta_n);
        p.validate();
        return p;
    }

    SectorBasis resolve_basis() const {
        return SectorBasis(n, sector_2j < 0 ? n : sector_2j);
    }

    json to_json(const ModelParams& p, const SectorBasis& basis) const {
        return json{{"type", type},
                    {"n_satellites", basis.n_satellites()},
                    {"sector_2j", basis.twice_j()},
                    {"a_xy", p.a_xy},
                    {"a_z", p.a_z},
                    {"b_z", p.b_z},
                    {"b_nz", p.b_nz},
                    {"omega", p.omega},
                    {"theta_e_rad", p.theta_e},
                    {"theta_n_rad", p.theta_n}};
    }
};

AxisSpec parse_axis_spec(const std::string& text) {
    // name:start:stop:count, with angle grammar on theta bounds
    std::vector<std::string> parts;
    std::size_t begin = 0;
    while (true) {
        const std::size_t colon = text.find(':', begin);
        if (colon == std::string::npos) {
            parts.push_back(text.substr(begin));
            break;
        }
        parts.push_back(text.substr(begin, colon - begin));
        begin = colon + 1;
    }
    if (parts.size() != 4)
        throw CLI::ValidationError("axis", "expected name:start:stop:count, got '" + text + "'");
    AxisSpec spec;
    spec.name = parse_axis_name(parts[0]);
    if (spec.name == AxisName::theta) {
        spec.start = parse_angle(parts[1]);
        spec.stop = parse_angle(parts[2]);
    } else {
        spec.start = std::stod(parts[1]);
        spec.stop = std::stod(parts[2]);
    }
    spec.count = std::stoi(parts[3]);
    spec.validate();
    return spec;
}

json axis_to_json(const AxisSpec& spec) {
    return json{{"name", axis_name_string(spec.name)},
                {"start", spec.start},
                {"stop", spec.stop},
                {"count", spec.count},
                {"scale", "linear"}};
}

// ---------------------------------------------------------------- evolve --

int cmd_evolve(const ModelFlags& flags, const std::string& initial,
               std::int64_t cycles, std::int64_t stride, const std::string& output) {
    const ModelParams params = flags.resolve();
    const SectorBasis basis = flags.resolve_basis();
    RunRecorder recorder("evolve", output);

    const InitialState init = parse_initial_state(initial);
    const StateVector psi0 = init.realize(basis);
    const UnitaryMatrix u_f = build_floquet(params, basis);
    const StroboscopicSeries series = evolve(u_f, psi0, cycles, stride);

    CsvWriter csv({"cycle", "magnetization", "staggered"});
    for (std::size_t i = 0; i < series.cycles.size(); ++i)
        csv.add_row({std::to_string(series.cycles[i]),
                     format_double(series.magnetization[i]),
                     format_double(series.staggered[i])});
    recorder.write_file(".csv", csv.text());

    json params_json = flags.to_json(params, basis);
    params_json["initial"] = init.to_string();
    params_json["cycles"] = cycles;
    params_json["stride"] = stride;
    recorder.set_parameters(params_json);
    recorder.finish();
    return 0;
}

// ----------------------------------------------------------------- phase --

int cmd_phase(const ModelFlags& flags, const std::string& x_spec,
              const std::string& y_spec, const std::string& initial,
              std::int64_t n_cycles, bool svg, unsigned threads,
              const std::string& output) {
    const ModelParams params = flags.resolve();
    const SectorBasis basis = flags.resolve_basis();
    const AxisSpec x = parse_axis_spec(x_spec);
    const AxisSpec y = parse_axis_spec(y_spec);
    const InitialState init = parse_initial_state(initial);
    RunRecorder recorder("phase", output);

    const PhaseGrid grid = phase_sweep(params, basis, x, y, init, n_cycles, threads);

    CsvWriter csv({"x", "y", "order_parameter"});
    const std::vector<double> xs = x.values();
    const std::vector<double> ys = y.values();
    for (std::size_t iy = 0; iy < ys.size(); ++iy)
        for (std::size_t ix = 0; ix < xs.size(); ++ix)
            csv.add_row({format_double(xs[ix]), format_double(ys[iy]),
                         format_double(grid.order_parameter(Index(iy), Index(ix)))});
    recorder.write_file(".csv", csv.text());
    if (svg) recorder.write_file(".svg", render_svg_heatmap(grid));

    json params_json = flags.to_json(params, basis);
    params_json["initial"] = init.to_string();
    params_json["n_cycles"] = n_cycles;
    params_json["x_axis"] = axis_to_json(x);
    params_json["y_axis"] = axis_to_json(y);
    recorder.set_parameters(params_json);
    for (const auto& w : grid.warnings) recorder.add_warning(w);
    recorder.finish();
    return grid.warnings.empty() ? 0 : 3;
}

// ---------------------------------------------------------------- krylov --

std::vector<std::int64_t> parse_sampler(const std::string& text) {
    if (text == "fig2") return fig2_cycle_sampler();
    if (text.rfind("stride:", 0) == 0) {
        const std::size_t comma = text.find(",max:");
        if (comma == std::string::npos)
            throw CLI::ValidationError("--sampler", "expected stride:<s>,max:<M>");
        const std::int64_t stride = std::stoll(text.substr(7, comma - 7));
        const std::int64_t max = std::stoll(text.substr(comma + 5));
        return stride_cycle_sampler(stride, max);
    }
    throw CLI::ValidationError("--sampler", "expected 'fig2' or 'stride:<s>,max:<M>'");
}

int cmd_krylov(const ModelFlags& flags, const std::string& initial,
               const std::string& sampler_spec, double threshold,
               const std::string& output) {
    const ModelParams params = flags.resolve();
    const SectorBasis basis = flags.resolve_basis();
    const InitialState init = parse_initial_state(initial);
    RunRecorder recorder("krylov", output);

    const std::vector<std::int64_t> cycles = parse_sampler(sampler_spec);
    const StateVector psi0 = init.realize(basis);
    const OverlapMap map = overlap_map(params, psi0, cycles);

    std::vector<std::string> header{"cycle"};
    for (const auto& label : map.columns) header.push_back(label_string(label));
    CsvWriter csv(header);
    for (Index r = 0; r < map.overlaps.rows(); ++r) {
        std::vector<std::string> row{std::to_string(map.sampled_cycles[std::size_t(r)])};
        for (Index c = 0; c < map.overlaps.cols(); ++c)
            row.push_back(format_double(map.overlaps(r, c)));
        csv.add_row(row);
    }
    recorder.write_file(".csv", csv.text());

    // companion census: theta = 0 Floquet-Krylov dimension per initial basis state
    ModelParams unperturbed = params;
    unperturbed.theta_e = 0.0;
    unperturbed.theta_n = 0.0;
    const UnitaryMatrix u0 = build_floquet(unperturbed, basis);
    CsvWriter census({"label", "floquet_krylov_dim"});
    for (Index i = 0; i < basis.dim(); ++i) {
        const BasisLabel label = basis.label_of(i);
        const KrylovReport report =
            krylov_subspace(u0.entries(), basis_state(basis, label.twice_m, label.sigma));
        census.add_row({label_string(label), std::to_string(report.dimension)});
    }
    recorder.write_file("_dimensions.csv", census.text());

    json params_json = flags.to_json(params, basis);
    params_json["initial"] = init.to_string();
    params_json["sampler"] = sampler_spec;
    params_json["occupation_threshold"] = threshold;
    recorder.set_parameters(params_json);
    recorder.finish();
    return 0;
}

// ------------------------------------------------------------------ scar --

int cmd_scar(const ModelFlags& flags, const std::string& output) {
    const ModelParams params = flags.resolve();
    const SectorBasis basis = flags.resolve_basis();
    if (basis.n_satellites() % 2 != 0)
        throw CLI::ValidationError(
            "--n", "scar diagnostics need even N for the equal bipartition of the "
                   "satellite spins");
    RunRecorder recorder("scar", output);

    const std::vector<ScarRecord> records = scar_scatter(params, basis);
    CsvWriter csv({"quasienergy_over_omega", "entropy_nats", "overlap_plus",
                   "overlap_minus", "degenerate_flag"});
    for (const auto& r : records)
        csv.add_row({format_double(r.quasienergy_over_omega), format_double(r.entropy),
                     format_double(r.overlap_plus), format_double(r.overlap_minus),
                     r.degenerate ? "1" : "0"});
    recorder.write_file(".csv", csv.text());

    recorder.set_parameters(flags.to_json(params, basis));
    recorder.finish();
    return 0;
}

// -------------------------------------------------------------- disorder --

int cmd_disorder(const ModelFlags& flags, double delta_axy, std::uint64_t seed,
                 int realizations, std::int64_t n_cycles, const std::string& initial,
                 bool series_mode, unsigned threads, const std::string& output) {
    const ModelParams params = flags.resolve();
    RunRecorder recorder("disorder", output);

    FullBasisModel base = FullBasisModel::homogeneous_from(params, flags.n);
    Vector psi0;
    if (initial.rfind("bits:", 0) == 0) {
        const std::string bits = initial.substr(5);
        const std::size_t comma = bits.find(',');
        if (comma == std::string::npos || comma != bits.size() - 2)
            throw CLI::ValidationError("--initial",
                                       "expected bits:<u|d x N>,<u|d> for the product state");
        psi0 = product_state(flags.n, bits.substr(0, comma), bits.back());
    } else {
        const InitialState init = parse_initial_state(initial);
        if (init.kind == InitialState::Kind::j_up)
            psi0 = product_state(flags.n, std::string(std::size_t(flags.n), 'u'), 'u');
        else if (init.kind == InitialState::Kind::j_down)
            psi0 = product_state(flags.n, std::string(std::size_t(flags.n), 'u'), 'd');
        else
            throw CLI::ValidationError("--initial",
                                       "disorder mode takes J-up, J-down, or bits:...");
    }

    DisorderSpec spec{base.a_xy.empty() ? 0.0 : base.a_xy[0], delta_axy, seed,
                      realizations};

    if (series_mode) {
        const auto couplings = sample_couplings(spec, flags.n);
        const RealVector itz = full_itz_diagonal(flags.n);
        CsvWriter csv({"realization", "cycle", "magnetization", "staggered"});
        for (int r = 0; r < realizations; ++r) {
            FullBasisModel model = base;
            model.a_xy = couplings[std::size_t(r)];
            const UnitaryMatrix u_f = full_floquet(model);
            Vector psi = psi0;
            for (std::int64_t cycle = 0; cycle <= n_cycles; ++cycle) {
                if (cycle > 0) psi = u_f.entries() * psi;
                double mag = 0.0;
                for (Index i = 0; i < psi.size(); ++i)
                    mag += itz[i] * std::norm(psi[i]);
                mag /= flags.n;
                csv.add_row({std::to_string(r), std::to_string(cycle),
                             format_double(mag),
                             format_double((cycle % 2 == 0 ? 1.0 : -1.0) * mag)});
            }
        }
        recorder.write_file(".csv", csv.text());
    } else {
        const DisorderResult result =
            disorder_order_parameter(spec, base, psi0, n_cycles, threads);
        CsvWriter csv({"realization", "seed", "delta_axy", "order_parameter"});
        for (int r = 0; r < realizations; ++r)
            csv.add_row({std::to_string(r),
                         std::to_string(derive_stream_seed(seed, std::uint64_t(r))),
                         format_double(delta_axy),
                         format_double(result.order_parameter[std::size_t(r)])});
        recorder.write_file(".csv", csv.text());
    }

    json params_json = json{{"n_satellites", flags.n},
                            {"a_xy_mean", spec.mean},
                            {"delta_axy", delta_axy},
                            {"b_z", params.b_z},
                            {"omega", params.omega},
                            {"theta_e_rad", params.theta_e},
                            {"theta_n_rad", params.theta_n},
                            {"n_cycles", n_cycles},
                            {"realizations", realizations},
                            {"initial", initial},
                            {"series_mode", series_mode}};
    recorder.set_parameters(params_json);
    recorder.set_rng(rng_identity_string, seed);
    recorder.finish();
    return 0;
}

// ---------------------------------------------------------------- verify --

int cmd_verify() {
    const VerificationReport report = run_verification();
    std::printf("%-55s %-12s %-12s %s\n", "check", "max residual", "tolerance", "status");
    for (const auto& c : report.checks)
        std::printf("%-55s %-12.3e %-12.3e %s\n", c.name.c_str(), c.max_residual,
                    c.tolerance, c.passed ? "PASS" : "FAIL");
    return report.all_passed() ? 0 : 2;
}

// config file: JSON object of long-option defaults, overridden by real flags
void apply_config_file(std::vector<std::string>& args) {
    std::string config_path;
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--config" && i + 1 < args.size()) config_path = args[i + 1];
        else if (args[i].rfind("--config=", 0) == 0) config_path = args[i].substr(9);
    }
    if (config_path.empty()) return;
    std::ifstream in(config_path);
    if (!in) throw CLI::ValidationError("--config", "cannot open " + config_path);
    json config = json::parse(in);
    if (!config.is_object())
        throw CLI::ValidationError("--config", "config must be a JSON object");
    for (const auto& [key, value] : config.items()) {
        const std::string flag = "--" + key;
        bool present = false;
        for (const auto& arg : args)
            if (arg == flag || arg.rfind(flag + "=", 0) == 0) present = true;
        if (present) continue;
        args.push_back(flag);
        if (value.is_string()) args.push_back(value.get<std::string>());
        else args.push_back(value.dump());
    }
}

}  // namespace

int run_cli(std::vector<std::string> args) {
    CLI::App app{"spinfloq — stroboscopic dynamics of driven homogeneous "
                 "central-spin models"};
    app.require_subcommand(1);
    std::string config_path;
    app.add_option("--config", config_path, "JSON file with default option values")
        ->expected(1);

    ModelFlags evolve_flags, phase_flags, krylov_flags, scar_flags, disorder_flags;
    std::string output;
    std::string initial = "J-down";
    std::int64_t cycles = 1000;
    std::int64_t stride = 1;
    std::int64_t n_cycles = 10000;
    std::string x_spec, y_spec;
    bool svg = false;
    unsigned threads = 0;
    std::string sampler = "fig2";
    double occupation_threshold = 1e-3;
    double delta_axy = 0.0;
    std::uint64_t seed = 1;
    int realizations = 1;
    bool series_mode = false;

    auto add_common = [&](CLI::App* cmd, bool needs_output) {
        cmd->add_option("--config", config_path, "JSON file with default option values");
        cmd->add_option("--threads", threads, "worker threads (default: all cores)");
        auto* opt = cmd->add_option("--output,-o", output, "output path prefix");
        if (needs_output) opt->required();
    };

    CLI::App* evolve_cmd =
        app.add_subcommand("evolve", "stroboscopic magnetization time series");
    evolve_flags.attach(evolve_cmd);
    add_common(evolve_cmd, true);
    evolve_cmd->add_option("--initial", initial, "J-up | J-down | m:<2m>,<up|down>");
    evolve_cmd->add_option("--cycles", cycles, "number of Floquet cycles");
    evolve_cmd->add_option("--stride", stride, "record every k-th cycle");

    CLI::App* phase_cmd =
        app.add_subcommand("phase", "order-parameter grid over two parameter axes");
    phase_flags.attach(phase_cmd);
    add_common(phase_cmd, true);
    phase_cmd->add_option("--x", x_spec, "x axis as name:start:stop:count")->required();
    phase_cmd->add_option("--y", y_spec, "y axis as name:start:stop:count")->required();
    phase_cmd->add_option("--initial", initial, "initial state");
    phase_cmd->add_option("--nc", n_cycles, "Floquet cycles per cell");
    phase_cmd->add_flag("--svg", svg, "also render an SVG heatmap");

    CLI::App* krylov_cmd =
        app.add_subcommand("krylov", "basis-overlap map and Krylov dimension census");
    krylov_flags.attach(krylov_cmd);
    add_common(krylov_cmd, true);
    krylov_cmd->add_option("--initial", initial, "initial state");
    krylov_cmd->add_option("--sampler", sampler, "fig2 | stride:<s>,max:<M>");
    krylov_cmd->add_option("--threshold", occupation_threshold,
                           "occupation threshold for summaries");

    CLI::App* scar_cmd =
        app.add_subcommand("scar", "Floquet eigenstate entropy/overlap scatter");
    scar_flags.attach(scar_cmd);
    add_common(scar_cmd, true);

    CLI::App* disorder_cmd =
        app.add_subcommand("disorder", "coupling-disorder averages in the full basis");
    disorder_flags.attach(disorder_cmd);
    add_common(disorder_cmd, true);
    disorder_cmd->add_option("--initial", initial, "J-up | J-down | bits:<uud...>,<u|d>");
    disorder_cmd->add_option("--delta-axy", delta_axy, "Gaussian coupling std");
    disorder_cmd->add_option("--seed", seed, "64-bit RNG seed");
    disorder_cmd->add_option("--realizations", realizations, "number of realizations");
    disorder_cmd->add_option("--nc", n_cycles, "Floquet cycles for the time average");
    disorder_cmd->add_flag("--series", series_mode, "write per-cycle time series instead");

    CLI::App* verify_cmd =
        app.add_subcommand("verify", "run the analytic-oracle and cross-engine checks");

    try {
        apply_config_file(args);
        // CLI11's vector overload takes the arguments reversed, no program name
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }

    try {
        if (evolve_cmd->parsed())
            return cmd_evolve(evolve_flags, initial, cycles, stride, output);
        if (phase_cmd->parsed())
            return cmd_phase(phase_flags, x_spec, y_spec, initial, n_cycles, svg,
                             threads, output);
        if (krylov_cmd->parsed())
            return cmd_krylov(krylov_flags, initial, sampler, occupation_threshold,
                              output);
        if (scar_cmd->parsed()) return cmd_scar(scar_flags, output);
        if (disorder_cmd->parsed())
            return cmd_disorder(disorder_flags, delta_axy, seed, realizations, n_cycles,
                                initial, series_mode, threads, output);
        if (verify_cmd->parsed()) return cmd_verify();
    } catch (const numerical_error& e) {
        std::fprintf(stderr, "numerical failure: %s\n", e.what());
        return 2;
    } catch (const CLI::ValidationError& e) {
        std::fprintf(stderr, "usage error: %s\n", e.what());
        return 1;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "usage error: %s\n", e.what());
        return 1;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 1;
}

}  // namespace spinfloq::cli
