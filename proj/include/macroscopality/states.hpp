#pragma once

#include <optional>
#include <vector>

#include "macroscopality/spectrum.hpp"

namespace macroscopality {

// Parameters of the N-qubit superposition (|phi+>^N + |phi->^N)/norm, where
// |phi+-> points at angle phi +- eps/2 on the Bloch great circle.
struct QubitAngles {
    double phi;
    double eps;  // component separation, 0 <= eps < pi
    int n_qubits;
};

// Coherent-state cat |alpha e^{i phi}> + |alpha e^{-i phi}> up to a global
// rotation; alpha_abs = |alpha|, 0 < phi <= pi/2.  The superposition
// "distance" along the measured quadrature is 2 alpha_abs sin(phi).
struct CoherentCatParams {
    double alpha_abs;
    double phi;
};

// Uniform evaluation grid for density constructors, endpoints included.
struct GridSpec {
    double a_min;
    double a_max;
    int n_points;
};

// Aperture of one slit: center position and full open width, both in the
// same length unit.
struct Slit {
    double center;
    double width;
};

// Two-mode Fock cat (|0,N> + |N,0>)/sqrt(2) measured in the half photon
// number difference: equal weights at -N/2 and +N/2.
DiscreteSpectrum fock_cat_spectrum(int n_excitations);

// Half photon number difference of |alpha> x |0> with |alpha|^2 = mean_n:
// Poisson(mean_n) weights on eigenvalues n/2, truncated at cutoff and
// renormalized.  The cutoff must leave tail mass below ~1e-12, which
// mean_n + 10 sqrt(mean_n) guarantees; CutoffTooSmall otherwise.
DiscreteSpectrum coherent_halfdiff_spectrum(double mean_n, int cutoff);
DiscreteSpectrum coherent_halfdiff_spectrum(double mean_n);

// Exact collective-spin distribution of the two-component qubit
// superposition, eigenvalues k - N/2 for k up-spins.  The weights carry the
// closed-form normalization 2 (1 + cos^N eps); no numerical renormalization
// is applied, so the sum-to-one check doubles as a test of that constant.
DiscreteSpectrum qubit_superposition_spectrum(const QubitAngles& p);

// Collective spin of the product state with every qubit at the given angle:
// binomial weights C(N,k) cos^2k sin^2(N-k) on eigenvalues k - N/2.
DiscreteSpectrum qubit_product_spectrum(int n_qubits, double angle);

struct GhzSpectra {
    DiscreteSpectrum sup;  // two-point +-n/2
    DiscreteSpectrum ref;  // spin-coherent comparison, binomial(n, 1/2)
};

GhzSpectra ghz_spectra(int n_qubits);

// Quadrature distribution of the coherent cat, including the interference
// term with constant relative phase Delta = alpha_abs^2 sin(2 phi):
//   P(x) = [f+^2 + f-^2 + 2 cos(Delta) f+ f-] / norm,
//   f+-(x) = (2/pi)^{1/4} exp(-(x -+ B)^2),  B = alpha_abs sin(phi).
// The analytic normalization is used as-is; the grid must hold all but 1e-6
// of the mass (GridTooNarrow).  alpha_abs = 0 is InvalidSeparation.  The
// default grid spans +-(B + 3) with 4096 points.
GridDensity coherent_cat_quadrature_density(const CoherentCatParams& p,
                                            const GridSpec& grid);
GridDensity coherent_cat_quadrature_density(const CoherentCatParams& p);

// Normal density; the default grid spans mean +- 8 sigma with 2049 points.
GridDensity gaussian_density(double mean, double sigma, const GridSpec& grid);
GridDensity gaussian_density(double mean, double sigma);

// Aperture function of a set of disjoint slits: constant height across each
// open interval, equal weight per unit open width, half height exactly on an
// edge.  The default grid spans the outer edges at 256 points per minimum
// slit width.  Overlapping apertures are rejected.
GridDensity slit_aperture_density(const std::vector<Slit>& slits,
                                  const GridSpec& grid);
GridDensity slit_aperture_density(const std::vector<Slit>& slits);

}  // namespace macroscopality
