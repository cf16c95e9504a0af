#pragma once

namespace macroscopality {

// CODATA-2018 exact values (SI redefinition); amu is the 2018 recommended
// measurement.  Overridable per-instance for sensitivity checks.
struct PhysicalConstants {
    double h = 6.62607015e-34;         // Planck constant, J s
    double e_charge = 1.602176634e-19; // elementary charge, C
    double k_B = 1.380649e-23;         // Boltzmann constant, J/K
    double amu = 1.66053906660e-27;    // atomic mass unit, kg

    double hbar() const { return h / 6.283185307179586476925286766559; }
    // Superconducting flux quantum h / (2e), Wb.
    double flux_quantum() const { return h / (2.0 * e_charge); }
};

}  // namespace macroscopality
