#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "contact2d/cli.hpp"
#include "contact2d/cutoff.hpp"
#include "contact2d/errors.hpp"
#include "contact2d/fewbody.hpp"
#include "contact2d/lattice.hpp"
#include "contact2d/params.hpp"
#include "contact2d/passivity.hpp"
#include "contact2d/squarewell.hpp"

namespace py = pybind11;
using namespace contact2d;

namespace {

LoopGeometry geometry_from(const std::string& s) {
    if (s == "disk") return LoopGeometry::disk;
    if (s == "disk-asymptotic") return LoopGeometry::disk_asymptotic;
    if (s == "square") return LoopGeometry::square;
    throw domain_error("unknown geometry '" + s + "'");
}

WellNorm norm_from(const std::string& s) {
    if (s == "literal") return WellNorm::literal;
    if (s == "unit") return WellNorm::unit;
    throw domain_error("unknown well normalization '" + s + "'");
}

}  // namespace

PYBIND11_MODULE(_contact2d, m) {
    m.doc() = "2D contact-interaction laboratory";

    py::register_exception<config_error>(m, "ConfigError");
    py::register_exception<solver_error>(m, "SolverError");
    py::register_exception<io_error>(m, "IoError");

    // parameter bookkeeping
    m.def("bare_coupling", &bare_coupling, py::arg("lambda0"), py::arg("m0_sq"));
    m.def("running_bare_mass", &running_bare_mass, py::arg("m_sq"), py::arg("c_log"),
          py::arg("kappa"), py::arg("kappa_ref"));
    m.def("dispersion_rel", &dispersion_rel, py::arg("p"), py::arg("m"), py::arg("c"));
    m.def("nr_expansion_remainder", &nr_expansion_remainder, py::arg("p"), py::arg("m"),
          py::arg("c"));

    // cutoff model and renormalized amplitude
    py::class_<ComplexAmplitude>(m, "ComplexAmplitude")
        .def_readonly("value", &ComplexAmplitude::value)
        .def_readonly("k", &ComplexAmplitude::k)
        .def("unitarity_defect", &ComplexAmplitude::unitarity_defect);

    py::class_<BoundState>(m, "BoundState")
        .def_readonly("B", &BoundState::B)
        .def_readonly("residual", &BoundState::residual)
        .def_readonly("nonpositive_g", &BoundState::nonpositive_g);

    m.def(
        "loop_integral_I",
        [](std::complex<double> z, double kappa, const std::string& geom) {
            return loop_integral_I(z, kappa, geometry_from(geom));
        },
        py::arg("z"), py::arg("kappa"), py::arg("geometry") = "disk");
    m.def(
        "loop_integral_on_shell",
        [](double k, double kappa, const std::string& geom) {
            return loop_integral_on_shell(k, kappa, geometry_from(geom));
        },
        py::arg("k"), py::arg("kappa"), py::arg("geometry") = "disk");
    m.def(
        "t_amplitude_bare",
        [](double k, double g0, double kappa, double mass, const std::string& geom) {
            return t_amplitude_bare(k, g0, kappa, mass, geometry_from(geom));
        },
        py::arg("k"), py::arg("g0"), py::arg("kappa"), py::arg("m") = 1.0,
        py::arg("geometry") = "disk");
    m.def("renormalized_coupling", &renormalized_coupling, py::arg("g0"), py::arg("kappa"),
          py::arg("mu"));
    m.def("t_amplitude_renormalized", &t_amplitude_renormalized, py::arg("k"), py::arg("g"),
          py::arg("mu"));
    m.def("s_wave_phase_shift", &s_wave_phase_shift, py::arg("k"), py::arg("g"), py::arg("mu"));
    m.def("bound_state_energy", &bound_state_energy, py::arg("g"), py::arg("mu"));
    m.def("t_amplitude_from_binding", &t_amplitude_from_binding, py::arg("k"), py::arg("B"));
    m.def(
        "angular_amplitude",
        [](double k, const ComplexAmplitude& T) { return angular_amplitude(k, T); },
        py::arg("k"), py::arg("T"));
    m.def(
        "cutoff_bound_state",
        [](double g0, double kappa, double mass, const std::string& geom) {
            return cutoff_bound_state(g0, kappa, mass, geometry_from(geom));
        },
        py::arg("g0"), py::arg("kappa"), py::arg("m") = 1.0, py::arg("geometry") = "disk");

    // square well
    py::class_<WellSpec>(m, "WellSpec")
        .def(py::init([](double eps, double g0, double mass, const std::string& norm) {
                 return WellSpec{eps, g0, mass, norm_from(norm)};
             }),
             py::arg("eps"), py::arg("g0"), py::arg("m") = 1.0, py::arg("norm") = "literal")
        .def_readonly("eps", &WellSpec::eps)
        .def_readonly("g0", &WellSpec::g0)
        .def_readonly("m", &WellSpec::m)
        .def("depth", &WellSpec::depth)
        .def("delta_strength", &WellSpec::delta_strength);

    py::class_<WellBoundState>(m, "WellBoundState")
        .def_readonly("B", &WellBoundState::B)
        .def_readonly("residual", &WellBoundState::residual);

    m.def("well_bound_states", &well_bound_states, py::arg("well"),
          py::arg("scan_points") = 512);
    m.def("s_wave_phase_shift_well", &s_wave_phase_shift_well, py::arg("well"), py::arg("k"));
    m.def(
        "effective_cutoff_calibration",
        [](const WellSpec& well, double B, double kappa) {
            BoundState ref;
            ref.B = B;
            ref.scheme = RegScheme{SharpCutoff{kappa}};
            return effective_cutoff_calibration(well, ref);
        },
        py::arg("well"), py::arg("B"), py::arg("kappa"));

    // lattice
    py::class_<LatticeSpec>(m, "LatticeSpec")
        .def(py::init([](double eps, int dim, double sigma) {
                 LatticeSpec s;
                 s.eps = eps;
                 s.dim = dim;
                 s.sigma = sigma;
                 return s;
             }),
             py::arg("eps") = 1.0, py::arg("dim") = 2, py::arg("sigma") = 1.0)
        .def_readonly("eps", &LatticeSpec::eps)
        .def_readonly("dim", &LatticeSpec::dim)
        .def_readonly("sigma", &LatticeSpec::sigma);

    py::class_<ContinuumRow>(m, "ContinuumRow")
        .def_readonly("eps", &ContinuumRow::eps)
        .def_readonly("kappa", &ContinuumRow::kappa)
        .def_readonly("g0", &ContinuumRow::g0)
        .def_readonly("B", &ContinuumRow::B);

    m.def("lattice_dispersion", &lattice_dispersion, py::arg("k"), py::arg("eps"));
    m.def("bz_green_integral", &bz_green_integral, py::arg("B"), py::arg("spec"));
    m.def("lattice_bound_state", &lattice_bound_state, py::arg("g0"), py::arg("spec"));
    m.def("continuum_limit_check", &continuum_limit_check, py::arg("m_sq"), py::arg("c_log"),
          py::arg("kappa_ref"), py::arg("lambda0"), py::arg("eps_list"), py::arg("base"),
          py::arg("running"), py::arg("g0_fixed") = -1.0);

    // few-body
    py::class_<HubbardLattice>(m, "HubbardLattice")
        .def(py::init([](int dim, int L, bool periodic) {
                 HubbardLattice l;
                 l.dim = dim;
                 l.L = L;
                 l.periodic = periodic;
                 return l;
             }),
             py::arg("dim") = 1, py::arg("L") = 2, py::arg("periodic") = true)
        .def_readonly("dim", &HubbardLattice::dim)
        .def_readonly("L", &HubbardLattice::L)
        .def_readonly("periodic", &HubbardLattice::periodic)
        .def("sites", &HubbardLattice::sites)
        .def("edges", &HubbardLattice::edges);

    py::class_<EDOptions>(m, "EDOptions")
        .def(py::init([](double tol, int krylov, int max_restarts, std::uint64_t seed,
                         std::size_t basis_cap) {
                 EDOptions o;
                 o.tol = tol;
                 o.krylov = krylov;
                 o.max_restarts = max_restarts;
                 o.seed = seed;
                 o.basis_cap = basis_cap;
                 return o;
             }),
             py::arg("tol") = 1e-8, py::arg("krylov") = 80, py::arg("max_restarts") = 400,
             py::arg("seed") = 0, py::arg("basis_cap") = 500000);

    py::class_<EDResult>(m, "EDResult")
        .def_readonly("E0", &EDResult::E0)
        .def_readonly("residual", &EDResult::residual)
        .def_readonly("iterations", &EDResult::iterations)
        .def_readonly("dim_basis", &EDResult::dim_basis);

    py::class_<StabilityRow>(m, "StabilityRow")
        .def_readonly("n", &StabilityRow::n)
        .def_readonly("dim_basis", &StabilityRow::dim_basis)
        .def_readonly("energy", &StabilityRow::energy)
        .def_readonly("per_particle", &StabilityRow::per_particle)
        .def_readonly("residual", &StabilityRow::residual)
        .def_readonly("iterations", &StabilityRow::iterations);

    py::class_<StabilityReport>(m, "StabilityReport")
        .def_readonly("rows", &StabilityReport::rows)
        .def_readonly("verdict", &StabilityReport::verdict);

    py::class_<TgExcitation>(m, "TgExcitation")
        .def_readonly("dE", &TgExcitation::dE)
        .def_readonly("p", &TgExcitation::p)
        .def_readonly("k_fermi", &TgExcitation::k_fermi)
        .def_readonly("identity", &TgExcitation::identity)
        .def_readonly("thermo", &TgExcitation::thermo)
        .def_readonly("finite_size_dev", &TgExcitation::finite_size_dev);

    m.def(
        "basis_dimension",
        [](int n, int sites, std::size_t cap) { return build_basis(n, sites, cap).dim_basis; },
        py::arg("n"), py::arg("sites"), py::arg("cap") = 500000);
    m.def("ground_energy", &ground_energy, py::arg("n"), py::arg("lattice"), py::arg("t"),
          py::arg("U"), py::arg("options") = EDOptions{});
    m.def("hubbard_hopping", &hubbard_hopping, py::arg("m"), py::arg("eps"));
    m.def("hubbard_onsite", &hubbard_onsite, py::arg("g0"), py::arg("eps"), py::arg("dim"));
    m.def("stability_scan", &stability_scan, py::arg("ns"), py::arg("lattice"), py::arg("t"),
          py::arg("U"), py::arg("options") = EDOptions{});
    m.def("tg_excitation", &tg_excitation, py::arg("N"), py::arg("L"), py::arg("j"),
          py::arg("j_max") = 1000000);

    // passivity
    py::class_<BoostReport>(m, "BoostReport")
        .def_readonly("u", &BoostReport::u)
        .def_readonly("m", &BoostReport::m)
        .def_readonly("c", &BoostReport::c)
        .def_readonly("n", &BoostReport::n)
        .def_readonly("min_rel", &BoostReport::min_rel)
        .def_readonly("min_rel_subtracted", &BoostReport::min_rel_subtracted)
        .def_readonly("min_nr", &BoostReport::min_nr)
        .def_readonly("cone_half_angle", &BoostReport::cone_half_angle)
        .def_readonly("rel_nonnegative", &BoostReport::rel_nonnegative)
        .def_readonly("nr_negative", &BoostReport::nr_negative);

    m.def("boosted_min_rel", &boosted_min_rel, py::arg("u"), py::arg("m"), py::arg("c"),
          py::arg("subtract_zitterbewegung") = false);
    m.def("boosted_min_nr", &boosted_min_nr, py::arg("u"), py::arg("m"), py::arg("n"));
    m.def("contraction_report", &contraction_report, py::arg("u"), py::arg("m"), py::arg("c"),
          py::arg("n"));

    // CLI pipeline, reusable from Python for determinism checks
    m.def("run_subcommand", &run_to_string, py::arg("subcommand"), py::arg("config_text") = "",
          py::arg("overrides") = std::vector<std::pair<std::string, std::string>>{});
    m.def("subcommand_names", [] { return subcommand_names(); });
}
