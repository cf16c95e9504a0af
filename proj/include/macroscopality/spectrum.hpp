#pragma once

#include <cstddef>
#include <variant>
#include <vector>

namespace macroscopality {

// Probability distribution of a preferred observable over a discrete set of
// eigenvalues.  Points are kept sorted by eigenvalue, duplicates merged,
// zero-weight points dropped.  Weights must be non-negative and sum to one
// within kDiscreteNormTol.
struct SpectralPoint {
    double eigenvalue;
    double weight;
};

inline constexpr double kDiscreteNormTol = 1e-9;
inline constexpr double kDensityNormTol = 1e-6;

class DiscreteSpectrum {
public:
    explicit DiscreteSpectrum(std::vector<SpectralPoint> points);

    const std::vector<SpectralPoint>& points() const noexcept { return points_; }
    std::size_t size() const noexcept { return points_.size(); }
    double total_weight() const noexcept { return total_weight_; }
    bool is_delta() const noexcept { return points_.size() == 1; }

private:
    std::vector<SpectralPoint> points_;
    double total_weight_;
};

// Probability density sampled on a uniform grid over [a_min, a_max],
// inclusive of both endpoints.  Values must be non-negative and the trapezoid
// integral must be one within kDensityNormTol.
class GridDensity {
public:
    GridDensity(double a_min, double a_max, std::vector<double> values);

    double a_min() const noexcept { return a_min_; }
    double a_max() const noexcept { return a_max_; }
    const std::vector<double>& values() const noexcept { return values_; }
    std::size_t size() const noexcept { return values_.size(); }
    double step() const noexcept { return step_; }
    double position(std::size_t i) const noexcept {
        return a_min_ + step_ * static_cast<double>(i);
    }
    // Trapezoid mass; char_magnitude normalizes by this so the overlap at
    // theta = 0 is exactly one even when quadrature leaves the integral a
    // hair off unity.
    double mass() const noexcept { return mass_; }

private:
    double a_min_;
    double a_max_;
    double step_;
    double mass_;
    std::vector<double> values_;
};

using Spectrum = std::variant<DiscreteSpectrum, GridDensity>;

struct OverlapCurve {
    std::vector<double> thetas;
    std::vector<double> magnitudes;
};

struct Moments {
    double mean;
    double stddev;
};

struct PeakSummary {
    double a1;     // position of the left peak
    double a2;     // position of the right peak, a1 < a2
    double width;  // FWHM of the taller peak
};

// |<psi| e^{i theta A} |psi>| as the modulus of the characteristic function
// of the distribution, normalized to one at theta = 0.  Even in theta.
double char_magnitude(const Spectrum& spec, double theta);

// Uniform theta grid on [0, theta_max] with n_points samples (n_points >= 2).
OverlapCurve scan_overlap(const Spectrum& spec, double theta_max, int n_points);

Moments moments(const Spectrum& spec);

// Full width at half the global maximum, linear interpolation between
// samples.  Discrete spectra fall back to stddev * 2 sqrt(2 ln 2) when fewer
// than three points exceed half-max.  A single point mass is Degenerate.
double fwhm(const Spectrum& spec);

// Two highest local maxima separated by a dip below half of the lower one.
// A two-point discrete spectrum is the degenerate bimodal case: its points
// are the peaks and the constituent width is zero.
PeakSummary detect_peaks(const Spectrum& spec);

// Equal-weight mixture of the kernel shifted to a1 and to a2.  The overlap of
// the result factorizes into |cos(theta (a2 - a1)/2)| times the kernel's own
// overlap.
Spectrum bimodal_compose(const Spectrum& kernel, double a1, double a2);

}  // namespace macroscopality
