#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "macroscopality/constants.hpp"
#include "macroscopality/orthogonality.hpp"
#include "macroscopality/states.hpp"

namespace macroscopality {

// Slit geometry and beam parameters of the molecule diffraction experiment.
// Lengths in meters, velocity in m/s, mass in atomic mass units.  When the
// measured first interference node on the screen is supplied, it replaces
// the two-slit model value in the headline ratio.
struct MoleculeParams {
    double slit_width = 50e-9;
    double grating_period = 100e-9;
    double screen_distance = 1.25;
    double velocity = 220.0;
    double mass_amu = 720.0;
    std::optional<double> measured_node = 12e-6;
};

// Flux-ring parameters: inductive and Josephson energies and the harmonic
// level spacing in kelvin, and the separation of the two superposed flux
// states as a fraction of the flux quantum.
struct SquidParams {
    double e_inductive = 645.0;
    double e_josephson = 76.0;
    double level_spacing = 1.0;
    double flux_diff = 0.25;
};

struct ScenarioResult {
    std::string name;
    double theta_sing;
    double theta_sup;
    // Headline value in the source convention for this system.
    double m_paper;
    // Engine value, theta_sing / theta_sup of the constructed spectra.
    double m_numeric;
    std::optional<MacroscopalityReport> report;
    // Echoed inputs and derived quantities, in print order.
    std::vector<std::pair<std::string, double>> details;
    std::vector<std::string> notes;
};

// Two-mode Fock cat against a single coherent beam of the same mean photon
// number; m_paper = sqrt(N) in the full-photon-number dispersion convention.
ScenarioResult scenario_fock_cat(int n_excitations);

// Two-component many-qubit state at mean direction pi/4; m_paper is the
// small-angle value 2 sqrt(N) eps.  Components must be resolvable
// (NotBimodal below eps ~ 1/sqrt(N)).
ScenarioResult scenario_qubits(int n_qubits, double eps);

// n-qubit GHZ state against the spin-coherent state of the same excitation;
// m_paper = sqrt(n).
ScenarioResult scenario_ghz(int n_qubits);

// Coherent-state cat against a single coherent wavepacket; m_paper is the
// superposition distance 2 |alpha| sin(phi), which must exceed one.
ScenarioResult scenario_coherent_cat(const CoherentCatParams& p);

// Far-field slit diffraction: single-slit node position on the screen versus
// the grating-period node, both from the aperture spectra in the conjugate
// variable; m_paper uses the measured node when given.
ScenarioResult scenario_molecule(const MoleculeParams& p,
                                 const PhysicalConstants& constants = {});

// Flux superposition in a ring: harmonic flux dispersion from the potential
// curvature versus the flux separation; m_paper = flux_diff / dispersion.
ScenarioResult scenario_squid(const SquidParams& p);

// Ring potential e_inductive u^2 - e_josephson cos(2 pi u) in kelvin, u in
// units of the flux quantum; curvature is its exact second derivative,
// carried by forward-mode differentiation rather than finite differences.
double squid_potential_kelvin(const SquidParams& p, double u);
double squid_curvature_kelvin(const SquidParams& p, double u);

// Mirror wavepacket displaced by the given multiple of its own width;
// m_paper is that ratio by construction.
ScenarioResult scenario_mirror(double separation_over_width = 1.0);

// The six case-study rows (one per physical system; the GHZ variant is
// reachable through scenario_ghz), ordered by name.
std::vector<ScenarioResult> run_all_paper();

}  // namespace macroscopality
