#include "contact2d/cli.hpp"

#include <cmath>
#include <complex>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "contact2d/cutoff.hpp"
#include "contact2d/errors.hpp"
#include "contact2d/fewbody.hpp"
#include "contact2d/lattice.hpp"
#include "contact2d/params.hpp"
#include "contact2d/passivity.hpp"
#include "contact2d/squarewell.hpp"

namespace contact2d {

namespace {

std::vector<double> sweep_values(double lo, double hi, std::int64_t points,
                                 const std::string& spacing) {
    if (points < 1 || points > 1000000)
        throw config_error("points must be between 1 and 1000000");
    std::vector<double> v;
    v.reserve((std::size_t)points);
    if (points == 1) {
        v.push_back(lo);
        return v;
    }
    if (spacing == "log") {
        if (!(lo > 0.0) || !(hi > 0.0))
            throw config_error("log spacing needs positive sweep endpoints");
        const double la = std::log(lo), lb = std::log(hi);
        for (std::int64_t i = 0; i < points; ++i)
            v.push_back(std::exp(la + (lb - la) * (double)i / (double)(points - 1)));
    } else {
        for (std::int64_t i = 0; i < points; ++i)
            v.push_back(lo + (hi - lo) * (double)i / (double)(points - 1));
    }
    v.front() = lo;  // exact endpoints, independent of exp/log rounding
    v.back() = hi;
    return v;
}

LoopGeometry parse_geometry(const std::string& s) {
    if (s == "disk") return LoopGeometry::disk;
    if (s == "disk-asymptotic") return LoopGeometry::disk_asymptotic;
    if (s == "square") return LoopGeometry::square;
    throw config_error("unknown geometry '" + s + "'");
}

Table run_scatter(const RunConfig& cfg) {
    const std::string mode = cfg.text("mode");
    const std::string sweep = cfg.text("sweep");
    const std::string spacing = cfg.text("spacing");
    const double mu = cfg.real("mu");
    Table t;

    if (mode == "renormalized") {
        if (sweep != "k") throw config_error("sweep = kappa requires mode = bare");
        const double g = cfg.real("g");
        t.columns = {"k", "reT", "imT", "absT", "delta0", "ref", "imf", "defect"};
        for (double k :
             sweep_values(cfg.real("k_min"), cfg.real("k_max"), cfg.integer("points"), spacing)) {
            const ComplexAmplitude T = t_amplitude_renormalized(k, g, mu);
            const std::complex<double> f = angular_amplitude(k, T);
            t.add_row({k, T.value.real(), T.value.imag(), std::abs(T.value),
                       s_wave_phase_shift(k, g, mu), f.real(), f.imag(),
                       T.unitarity_defect()});
        }
        return t;
    }

    const double mass = cfg.real("mass");
    const LoopGeometry geom = parse_geometry(cfg.text("geometry"));
    const bool running = cfg.text("case") == "ii";
    auto g0_at = [&](double kappa) {
        if (!running) return cfg.real("g0");
        return bare_coupling(cfg.real("lambda0"),
                             running_bare_mass(cfg.real("m_sq"), cfg.real("c_log"), kappa,
                                               cfg.real("kappa_ref")));
    };

    if (sweep == "k") {
        const double kappa = cfg.real("kappa");
        const double g0 = g0_at(kappa);
        t.columns = {"k", "g0", "reT", "imT", "absT", "defect"};
        for (double k :
             sweep_values(cfg.real("k_min"), cfg.real("k_max"), cfg.integer("points"), spacing)) {
            const ComplexAmplitude T = t_amplitude_bare(k, g0, kappa, mass, geom);
            t.add_row({k, g0, T.value.real(), T.value.imag(), std::abs(T.value),
                       T.unitarity_defect()});
        }
    } else {
        const double k = cfg.real("k");
        t.columns = {"kappa", "g0", "reT", "imT", "absT", "defect"};
        for (double kappa : sweep_values(cfg.real("kappa_min"), cfg.real("kappa_max"),
                                         cfg.integer("points"), spacing)) {
            const double g0 = g0_at(kappa);
            const ComplexAmplitude T = t_amplitude_bare(k, g0, kappa, mass, geom);
            t.add_row({kappa, g0, T.value.real(), T.value.imag(), std::abs(T.value),
                       T.unitarity_defect()});
        }
    }
    return t;
}

Table run_bound(const RunConfig& cfg) {
    const double mu = cfg.real("mu");
    Table t;
    t.columns = {"g", "B", "sqrt2B", "residual", "nonpositive_g"};
    for (double g : sweep_values(cfg.real("g_min"), cfg.real("g_max"), cfg.integer("points"),
                                 cfg.text("spacing"))) {
        const BoundState bs = bound_state_energy(g, mu);
        t.add_row({g, bs.B, std::sqrt(2.0 * bs.B), bs.residual,
                   (std::int64_t)(bs.nonpositive_g ? 1 : 0)});
    }
    return t;
}

Table run_regcompare(const RunConfig& cfg) {
    const double eps_min = cfg.real("eps_min");
    const double eps_max = cfg.real("eps_max");
    if (!(eps_min > 0.0) || !(eps_max > eps_min))
        throw config_error("need 0 < eps_min < eps_max");
    const std::vector<double> eps_list =
        sweep_values(eps_max, eps_min, cfg.integer("points"), "log");  // coarse to fine

    const double mass = cfg.real("mass");
    LatticeSpec base;
    base.dim = 2;
    base.sigma = cfg.real("sigma");
    const auto lat_rows = continuum_limit_check(
        cfg.real("m_sq"), cfg.real("c_log"), cfg.real("kappa_ref"), cfg.real("lambda0"),
        eps_list, base, cfg.boolean("running"), cfg.real("g0"));

    Table t;
    t.columns = {"eps",    "kappa",      "g0",         "B_sharp", "B_well",
                 "B_lattice", "ratio_well", "ratio_lattice", "c_cal"};
    for (const ContinuumRow& row : lat_rows) {
        const BoundState sharp = cutoff_bound_state(row.g0, row.kappa, mass);
        WellSpec well{row.eps, row.g0, mass, WellNorm::unit};
        const auto states = well_bound_states(well);
        const double b_well = states.front().B;
        BoundState ref;
        ref.B = b_well;
        ref.scheme = RegScheme{SharpCutoff{row.kappa}};
        const double c_cal = effective_cutoff_calibration(well, ref);
        t.add_row({row.eps, row.kappa, row.g0, sharp.B, b_well, row.B, b_well / sharp.B,
                   row.B / sharp.B, c_cal});
    }
    return t;
}

Table run_edscan(const RunConfig& cfg) {
    Table t;
    if (cfg.text("task") == "tg") {
        const std::int64_t j_min = cfg.integer("j_min");
        const std::int64_t j_max = cfg.integer("j_max");
        if (j_min < 1 || j_max < j_min) throw config_error("need 1 <= j_min <= j_max");
        const int N = (int)cfg.integer("N");
        const double L = cfg.real("length");
        t.columns = {"j", "p", "dE", "identity", "thermo", "finite_size_dev"};
        for (std::int64_t j = j_min; j <= j_max; ++j) {
            const TgExcitation e = tg_excitation(N, L, (int)j);
            t.add_row({j, e.p, e.dE, e.identity, e.thermo, e.finite_size_dev});
        }
        return t;
    }

    const std::int64_t n_min = cfg.integer("n_min");
    const std::int64_t n_max = cfg.integer("n_max");
    if (n_min < 1 || n_max < n_min) throw config_error("need 1 <= n_min <= n_max");
    if (cfg.integer("cap") < 1) throw config_error("cap must be >= 1");
    HubbardLattice lat;
    lat.dim = (int)cfg.integer("dim");
    lat.L = (int)cfg.integer("L");
    lat.periodic = cfg.boolean("periodic");
    EDOptions opts;
    opts.tol = cfg.real("tol");
    opts.seed = (std::uint64_t)cfg.integer("seed");
    opts.basis_cap = (std::size_t)cfg.integer("cap");
    std::vector<int> ns;
    for (std::int64_t n = n_min; n <= n_max; ++n) ns.push_back((int)n);

    const StabilityReport rep = stability_scan(ns, lat, cfg.real("t"), cfg.real("U"), opts);
    t.columns = {"n", "dim_basis", "E", "E_per_n", "residual", "iterations", "verdict"};
    for (const StabilityRow& r : rep.rows)
        t.add_row({(std::int64_t)r.n, (std::int64_t)r.dim_basis, r.energy, r.per_particle,
                   r.residual, (std::int64_t)r.iterations, rep.verdict});
    return t;
}

Table run_passivity(const RunConfig& cfg) {
    const double m = cfg.real("m");
    const double c = cfg.real("c");
    const int n = (int)cfg.integer("n");
    Table t;
    t.columns = {"u",       "min_rel", "min_rel_subtracted", "min_nr",
                 "cone_half_angle", "rel_nonneg", "nr_neg"};
    for (double u :
         sweep_values(cfg.real("u_min"), cfg.real("u_max"), cfg.integer("points"), "linear")) {
        const BoostReport r = contraction_report(u, m, c, n);
        t.add_row({u, r.min_rel, r.min_rel_subtracted, r.min_nr, r.cone_half_angle,
                   (std::int64_t)(r.rel_nonnegative ? 1 : 0),
                   (std::int64_t)(r.nr_negative ? 1 : 0)});
    }
    return t;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw io_error("cannot open config file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    if (in.bad()) throw io_error("failed reading config file '" + path + "'");
    return ss.str();
}

std::string subcommand_help(const std::string& name) {
    if (name == "scatter") return "T-matrix sweeps (renormalized or bare cutoff model)";
    if (name == "bound") return "bound-state energy vs renormalized coupling";
    if (name == "regcompare") return "sharp-cutoff / square-well / lattice comparison";
    if (name == "edscan") return "exact-diagonalization stability scan or TG excitations";
    if (name == "passivity") return "boosted minimum-energy report";
    return "";
}

}  // namespace

Table run_subcommand(const RunConfig& cfg) {
    if (cfg.subcommand == "scatter") return run_scatter(cfg);
    if (cfg.subcommand == "bound") return run_bound(cfg);
    if (cfg.subcommand == "regcompare") return run_regcompare(cfg);
    if (cfg.subcommand == "edscan") return run_edscan(cfg);
    if (cfg.subcommand == "passivity") return run_passivity(cfg);
    throw config_error("unknown subcommand '" + cfg.subcommand + "'");
}

std::string run_to_string(const std::string& subcommand, const std::string& config_text,
                          const std::vector<std::pair<std::string, std::string>>& overrides) {
    const RunConfig cfg = parse_config(subcommand, config_text, overrides);
    return render_table(run_subcommand(cfg), parse_format(cfg.text("format")));
}

int cli_main(int argc, char** argv) {
    CLI::App app{"2D contact-interaction laboratory: scattering, bound states,\n"
                 "regulator comparisons, few-boson scans, boosted-energy checks"};
    app.require_subcommand(1);

    struct SubState {
        std::string config_path;
        std::vector<std::pair<std::string, std::string>> overrides;
    };
    std::map<std::string, SubState> states;

    for (const std::string& name : subcommand_names()) {
        SubState& st = states[name];
        CLI::App* sub = app.add_subcommand(name, subcommand_help(name));
        sub->add_option("--config", st.config_path,
                        "configuration file: 'key = value' lines, '#' comments");
        for (const auto& [key, spec] : key_registry(name)) {
            sub->add_option_function<std::string>(
                "--" + key,
                [&st, key = key](const std::string& v) { st.overrides.emplace_back(key, v); },
                spec.help + " [" + spec.default_value + "]");
        }
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        const std::string name = app.get_subcommands().front()->get_name();
        const SubState& st = states[name];
        std::string text;
        if (!st.config_path.empty()) text = read_file(st.config_path);
        const RunConfig cfg = parse_config(name, text, st.overrides);
        const Table t = run_subcommand(cfg);
        emit_table(t, parse_format(cfg.text("format")), cfg.text("out"));
        return 0;
    } catch (const config_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const solver_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const io_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    }
}

}  // namespace contact2d
