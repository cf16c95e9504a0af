#include "macroscopality/scenarios.hpp"

#include <cmath>
#include <string>

#include "macroscopality/errors.hpp"

namespace macroscopality {
namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kTwoPi = 2.0 * kPi;

// Order-2 forward-mode jet: value, first and second derivative carried
// through every operation, so curvatures come out exact instead of through
// finite differences.
struct Jet {
    double v;
    double d1;
    double d2;
};

Jet jet_variable(double u) { return {u, 1.0, 0.0}; }

Jet operator*(double c, const Jet& a) { return {c * a.v, c * a.d1, c * a.d2}; }

Jet operator-(const Jet& a, const Jet& b) {
    return {a.v - b.v, a.d1 - b.d1, a.d2 - b.d2};
}

Jet square(const Jet& a) {
    return {a.v * a.v, 2.0 * a.v * a.d1, 2.0 * (a.d1 * a.d1 + a.v * a.d2)};
}

Jet cosine(const Jet& a) {
    const double c = std::cos(a.v);
    const double s = std::sin(a.v);
    return {c, -s * a.d1, -c * a.d1 * a.d1 - s * a.d2};
}

Jet squid_potential_jet(const SquidParams& p, double u) {
    const Jet x = jet_variable(u);
    return p.e_inductive * square(x) - p.e_josephson * cosine(kTwoPi * x);
}

void check_squid(const SquidParams& p) {
    if (!(p.e_inductive > 0.0 && p.e_josephson > 0.0 &&
          p.level_spacing > 0.0 && p.flux_diff > 0.0))
        throw InvalidRange("ring parameters must all be positive");
}

void check_molecule(const MoleculeParams& p) {
    const bool positive = p.slit_width > 0.0 && p.grating_period > 0.0 &&
                          p.screen_distance > 0.0 && p.velocity > 0.0 &&
                          p.mass_amu > 0.0 &&
                          (!p.measured_node || *p.measured_node > 0.0);
    if (!positive) throw InvalidRange("beam parameters must all be positive");
    if (!(p.grating_period > p.slit_width))
        throw InvalidRange("grating period must exceed the slit width");
}

}  // namespace

ScenarioResult scenario_fock_cat(int n_excitations) {
    if (n_excitations < 2)
        throw InvalidRange("need at least two excitations, got " +
                           std::to_string(n_excitations));
    const Spectrum sup = fock_cat_spectrum(n_excitations);
    const Spectrum ref = coherent_halfdiff_spectrum(n_excitations);
    MacroscopalityReport report = macroscopality(sup, ref);
    ScenarioResult r;
    r.name = "fock_cat";
    r.theta_sing = report.theta_sing;
    r.theta_sup = report.theta_sup;
    r.m_paper = std::sqrt(static_cast<double>(n_excitations));
    r.m_numeric = report.m_numeric;
    r.details = {
        {"n_excitations", static_cast<double>(n_excitations)},
        {"delta_n_full", std::sqrt(static_cast<double>(n_excitations))},
        {"m_width", report.m_width},
    };
    r.notes = {
        "m_paper uses the full photon-number dispersion sqrt(N); the engine "
        "spectrum lives on the half difference, whose dispersion is "
        "sqrt(N)/2"};
    r.report = std::move(report);
    return r;
}

ScenarioResult scenario_qubits(int n_qubits, double eps) {
    const QubitAngles angles{kPi / 4.0, eps, n_qubits};
    const Spectrum sup = qubit_superposition_spectrum(angles);
    const Spectrum ref =
        qubit_product_spectrum(n_qubits, kPi / 4.0 + eps / 2.0);
    MacroscopalityReport report = macroscopality(sup, ref);
    const double root_n = std::sqrt(static_cast<double>(n_qubits));
    ScenarioResult r;
    r.name = "qubit";
    r.theta_sing = report.theta_sing;
    r.theta_sup = report.theta_sup;
    r.m_paper = 2.0 * root_n * eps;
    r.m_numeric = report.m_numeric;
    r.details = {
        {"n_qubits", static_cast<double>(n_qubits)},
        {"eps", eps},
        {"mean_direction", kPi / 4.0},
        {"m_sine", 2.0 * root_n * std::sin(eps)},
        {"peak_separation", report.peaks.a2 - report.peaks.a1},
        {"m_width", report.m_width},
    };
    r.notes = {"m_paper is the small-angle form 2 sqrt(N) eps; the finite-"
               "angle value 2 sqrt(N) sin(eps) is listed as m_sine"};
    r.report = std::move(report);
    return r;
}

ScenarioResult scenario_ghz(int n_qubits) {
    GhzSpectra spectra = ghz_spectra(n_qubits);
    MacroscopalityReport report =
        macroscopality(Spectrum(std::move(spectra.sup)),
                       Spectrum(std::move(spectra.ref)));
    ScenarioResult r;
    r.name = "ghz";
    r.theta_sing = report.theta_sing;
    r.theta_sup = report.theta_sup;
    r.m_paper = std::sqrt(static_cast<double>(n_qubits));
    r.m_numeric = report.m_numeric;
    r.details = {
        {"n_qubits", static_cast<double>(n_qubits)},
        {"m_width", report.m_width},
    };
    r.report = std::move(report);
    return r;
}

ScenarioResult scenario_coherent_cat(const CoherentCatParams& p) {
    const double distance = 2.0 * p.alpha_abs * std::sin(p.phi);
    if (!(distance > 1.0))
        throw InvalidSeparation(
            "superposition distance " + std::to_string(distance) +
            " does not resolve the components (need > 1)");
    const Spectrum sup = coherent_cat_quadrature_density(p);
    const Spectrum ref = gaussian_density(0.0, 0.5);
    MacroscopalityReport report = macroscopality(sup, ref);
    const double suppression = std::exp(-distance * distance / 2.0);
    const double a2 = p.alpha_abs * p.alpha_abs;
    ScenarioResult r;
    r.name = "coherent_cat";
    r.theta_sing = report.theta_sing;
    r.theta_sup = report.theta_sup;
    r.m_paper = distance;
    r.m_numeric = report.m_numeric;
    r.details = {
        {"alpha_abs", p.alpha_abs},
        {"phi", p.phi},
        {"distance", distance},
        {"norm", 2.0 * (1.0 + std::exp(-a2 * (1.0 - std::cos(2.0 * p.phi))) *
                                  std::cos(a2 * std::sin(2.0 * p.phi)))},
        {"decoherence_factor", suppression},
        {"m_width", report.m_width},
    };
    r.notes = {"environment suppression exp(-D^2/2) at distance D = m_paper: "
               "-2 ln(decoherence_factor) = m_paper^2"};
    r.report = std::move(report);
    return r;
}

ScenarioResult scenario_molecule(const MoleculeParams& p,
                                 const PhysicalConstants& constants) {
    check_molecule(p);
    const double mass_kg = p.mass_amu * constants.amu;
    const double lambda = constants.h / (mass_kg * p.velocity);
    const double wavenumber = kTwoPi / lambda;
    // Angular scale of single-slit orthogonality and its screen position.
    const double theta_single = constants.h / (p.slit_width * mass_kg * p.velocity);
    const double x_single = p.screen_distance * theta_single;

    // Aperture spectra in the conjugate variable u; screen positions follow
    // as L u / k.
    const Spectrum single_slit =
        slit_aperture_density({{0.0, p.slit_width}});
    const Spectrum double_slit = slit_aperture_density(
        {{-p.grating_period / 2.0, p.slit_width},
         {p.grating_period / 2.0, p.slit_width}});
    const OrthogonalityResult u_single = first_orthogonality(single_slit);
    const OrthogonalityResult u_double = first_orthogonality(double_slit);
    const double x_grating =
        p.screen_distance * u_double.theta_star / wavenumber;

    ScenarioResult r;
    r.name = "molecule";
    r.theta_sing = theta_single;
    r.theta_sup = p.measured_node ? *p.measured_node / p.screen_distance
                                  : x_grating / p.screen_distance;
    r.m_paper = r.theta_sing / r.theta_sup;
    r.m_numeric = u_single.theta_star / u_double.theta_star;
    r.details = {
        {"slit_width_m", p.slit_width},
        {"grating_period_m", p.grating_period},
        {"screen_distance_m", p.screen_distance},
        {"velocity_mps", p.velocity},
        {"mass_amu", p.mass_amu},
        {"lambda_m", lambda},
        {"x_single_m", x_single},
        {"x_grating_m", x_grating},
        {"u_zero_single", u_single.theta_star},
        {"u_zero_double", u_double.theta_star},
        {"m_model", x_single / x_grating},
    };
    if (p.measured_node)
        r.details.push_back({"measured_node_m", *p.measured_node});
    r.notes = {"the many-slit grating is reduced to its two-slit unit cell; "
               "the measured node, when given, sets the headline ratio"};
    return r;
}

double squid_potential_kelvin(const SquidParams& p, double u) {
    check_squid(p);
    return squid_potential_jet(p, u).v;
}

double squid_curvature_kelvin(const SquidParams& p, double u) {
    check_squid(p);
    return squid_potential_jet(p, u).d2;
}

ScenarioResult scenario_squid(const SquidParams& p) {
    check_squid(p);
    // Harmonic expansion about the potential minimum at zero flux.
    const double curvature = squid_potential_jet(p, 0.0).d2;
    const double flux_dispersion =
        0.5 * std::sqrt(p.level_spacing / curvature);
    const Spectrum sup = DiscreteSpectrum(
        {{-p.flux_diff / 2.0, 0.5}, {p.flux_diff / 2.0, 0.5}});
    const Spectrum ref = gaussian_density(0.0, flux_dispersion);
    MacroscopalityReport report = macroscopality(sup, ref);
    ScenarioResult r;
    r.name = "squid";
    r.theta_sing = report.theta_sing;
    r.theta_sup = report.theta_sup;
    r.m_paper = p.flux_diff / flux_dispersion;
    r.m_numeric = report.m_numeric;
    r.details = {
        {"e_inductive_K", p.e_inductive},
        {"e_josephson_K", p.e_josephson},
        {"level_spacing_K", p.level_spacing},
        {"flux_diff", p.flux_diff},
        {"curvature_K", curvature},
        {"flux_dispersion", flux_dispersion},
        {"m_width", report.m_width},
    };
    r.notes = {"energies in kelvin, flux in units of the flux quantum",
               "the ~1e10 Bohr-magneton screening-current moment and the "
               "0.86 ueV fluxoid splitting are quoted observables, not "
               "modeled here"};
    r.report = std::move(report);
    return r;
}

ScenarioResult scenario_mirror(double separation_over_width) {
    if (!(std::isfinite(separation_over_width) && separation_over_width > 0.0))
        throw InvalidSeparation("separation must be a positive multiple of "
                                "the packet width");
    const Spectrum kernel = gaussian_density(0.0, 1.0);
    const Spectrum sup = bimodal_compose(kernel, -separation_over_width / 2.0,
                                         separation_over_width / 2.0);
    // Below a separation of roughly 3.4 widths the pair has no half-depth
    // dip, so the ratio is reported by construction and the engine number
    // comes from the orthogonality times alone.
    const OrthogonalityResult sup_result = first_orthogonality(sup);
    const OrthogonalityResult ref_result = first_orthogonality(kernel);
    ScenarioResult r;
    r.name = "mirror";
    r.theta_sing = ref_result.theta_star;
    r.theta_sup = sup_result.theta_star;
    r.m_paper = separation_over_width;
    r.m_numeric = ref_result.theta_star / sup_result.theta_star;
    r.details = {{"separation_over_width", separation_over_width}};
    r.notes = {"order-unity estimate with no stated error bar; the "
               "separation equals m_paper packet widths by construction",
               "photon-phase revival dynamics are outside this width ratio"};
    return r;
}

std::vector<ScenarioResult> run_all_paper() {
    std::vector<ScenarioResult> rows;
    rows.push_back(scenario_coherent_cat({3.1, 0.5}));
    rows.push_back(scenario_fock_cat(20));
    rows.push_back(scenario_mirror());
    rows.push_back(scenario_molecule(MoleculeParams{}));
    rows.push_back(scenario_qubits(100, 0.3));
    rows.push_back(scenario_squid(SquidParams{}));
    return rows;
}

}  // namespace macroscopality
