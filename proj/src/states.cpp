#include "macroscopality/states.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "macroscopality/errors.hpp"

namespace macroscopality {
namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

void check_qubit_angles(const QubitAngles& p) {
    if (!(std::isfinite(p.phi) && std::isfinite(p.eps)))
        throw InvalidRange("qubit angles must be finite");
    if (!(p.eps >= 0.0 && p.eps < kPi))
        throw InvalidRange("eps must lie in [0, pi), got " + std::to_string(p.eps));
    if (p.n_qubits < 1)
        throw InvalidRange("n_qubits must be >= 1, got " + std::to_string(p.n_qubits));
}

// c^k * s^(n-k) * sqrt(C(n,k)) in log space; the zero-base guards keep
// 0 * log(0) out of the exponent.
double half_binomial_amplitude(int n, int k, double c, double s) {
    if (c == 0.0 && k > 0) return 0.0;
    if (s == 0.0 && n - k > 0) return 0.0;
    double log_mag = 0.5 * (std::lgamma(n + 1.0) - std::lgamma(k + 1.0) -
                            std::lgamma(n - k + 1.0));
    if (k > 0) log_mag += k * std::log(std::fabs(c));
    if (n - k > 0) log_mag += (n - k) * std::log(std::fabs(s));
    double sign = 1.0;
    if (c < 0.0 && (k % 2) != 0) sign = -sign;
    if (s < 0.0 && ((n - k) % 2) != 0) sign = -sign;
    return sign * std::exp(log_mag);
}

}  // namespace

DiscreteSpectrum fock_cat_spectrum(int n_excitations) {
    if (n_excitations < 1)
        throw InvalidRange("excitation number must be >= 1, got " +
                           std::to_string(n_excitations));
    const double half = n_excitations / 2.0;
    return DiscreteSpectrum({{-half, 0.5}, {half, 0.5}});
}

DiscreteSpectrum coherent_halfdiff_spectrum(double mean_n, int cutoff) {
    if (!(std::isfinite(mean_n) && mean_n > 0.0))
        throw InvalidRange("mean photon number must be positive");
    if (cutoff < mean_n + 10.0 * std::sqrt(mean_n))
        throw CutoffTooSmall("cutoff " + std::to_string(cutoff) +
                             " leaves a Poisson(" + std::to_string(mean_n) +
                             ") tail above 1e-12");
    const double log_mean = std::log(mean_n);
    std::vector<SpectralPoint> pts;
    pts.reserve(cutoff + 1);
    double total = 0.0;
    for (int n = 0; n <= cutoff; ++n) {
        const double w =
            std::exp(n * log_mean - mean_n - std::lgamma(n + 1.0));
        pts.push_back({n / 2.0, w});
        total += w;
    }
    // Fold the truncated tail back proportionally.
    for (auto& pt : pts) pt.weight /= total;
    return DiscreteSpectrum(std::move(pts));
}

DiscreteSpectrum coherent_halfdiff_spectrum(double mean_n) {
    if (!(std::isfinite(mean_n) && mean_n > 0.0))
        throw InvalidRange("mean photon number must be positive");
    const int cutoff =
        static_cast<int>(std::ceil(mean_n + 10.0 * std::sqrt(mean_n)));
    return coherent_halfdiff_spectrum(mean_n, cutoff);
}

DiscreteSpectrum qubit_superposition_spectrum(const QubitAngles& p) {
    check_qubit_angles(p);
    const int n = p.n_qubits;
    const double c_plus = std::cos(p.phi + p.eps / 2.0);
    const double s_plus = std::sin(p.phi + p.eps / 2.0);
    const double c_minus = std::cos(p.phi - p.eps / 2.0);
    const double s_minus = std::sin(p.phi - p.eps / 2.0);
    // <phi+|phi->^N = cos^N eps fixes the normalization in closed form.
    const double norm = 2.0 * (1.0 + std::pow(std::cos(p.eps), n));
    std::vector<SpectralPoint> pts;
    pts.reserve(n + 1);
    for (int k = 0; k <= n; ++k) {
        const double amp = half_binomial_amplitude(n, k, c_plus, s_plus) +
                           half_binomial_amplitude(n, k, c_minus, s_minus);
        pts.push_back({k - n / 2.0, amp * amp / norm});
    }
    return DiscreteSpectrum(std::move(pts));
}

DiscreteSpectrum qubit_product_spectrum(int n_qubits, double angle) {
    if (n_qubits < 1)
        throw InvalidRange("n_qubits must be >= 1, got " +
                           std::to_string(n_qubits));
    if (!std::isfinite(angle)) throw InvalidRange("angle must be finite");
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    std::vector<SpectralPoint> pts;
    pts.reserve(n_qubits + 1);
    for (int k = 0; k <= n_qubits; ++k) {
        const double amp = half_binomial_amplitude(n_qubits, k, c, s);
        pts.push_back({k - n_qubits / 2.0, amp * amp});
    }
    return DiscreteSpectrum(std::move(pts));
}

GhzSpectra ghz_spectra(int n_qubits) {
    if (n_qubits < 1)
        throw InvalidRange("n_qubits must be >= 1, got " +
                           std::to_string(n_qubits));
    const double half = n_qubits / 2.0;
    return {DiscreteSpectrum({{-half, 0.5}, {half, 0.5}}),
            qubit_product_spectrum(n_qubits, kPi / 4.0)};
}

GridDensity coherent_cat_quadrature_density(const CoherentCatParams& p,
                                            const GridSpec& grid) {
    if (!(std::isfinite(p.alpha_abs) && p.alpha_abs >= 0.0))
        throw InvalidRange("alpha_abs must be non-negative");
    if (!(std::isfinite(p.phi) && p.phi > 0.0 && p.phi <= kPi / 2.0))
        throw InvalidRange("phi must lie in (0, pi/2]");
    if (p.alpha_abs == 0.0)
        throw InvalidSeparation("cat components coincide at alpha = 0");
    if (grid.n_points < 16 || !(grid.a_min < grid.a_max))
        throw InvalidRange("density grid needs a_min < a_max and >= 16 points");

    const double b = p.alpha_abs * std::sin(p.phi);
    const double delta = p.alpha_abs * p.alpha_abs * std::sin(2.0 * p.phi);
    const double cos_delta = std::cos(delta);
    const double norm = 2.0 * (1.0 + std::exp(-2.0 * b * b) * cos_delta);

    // Component tails beyond the grid, each component a normal(+-B, 1/2)
    // carrying about half the mass.
    const double sqrt2 = std::sqrt(2.0);
    double tail = 0.0;
    for (double center : {b, -b}) {
        tail += 0.25 * std::erfc(sqrt2 * (grid.a_max - center));
        tail += 0.25 * std::erfc(sqrt2 * (center - grid.a_min));
    }
    if (tail > 1e-6)
        throw GridTooNarrow("grid [" + std::to_string(grid.a_min) + ", " +
                            std::to_string(grid.a_max) + "] clips " +
                            std::to_string(tail) + " of the cat mass");

    const double prefactor = std::sqrt(2.0 / kPi);
    const double step =
        (grid.a_max - grid.a_min) / static_cast<double>(grid.n_points - 1);
    std::vector<double> values(grid.n_points);
    for (int i = 0; i < grid.n_points; ++i) {
        const double x = grid.a_min + step * i;
        const double f_plus = std::exp(-(x - b) * (x - b));
        const double f_minus = std::exp(-(x + b) * (x + b));
        values[i] = prefactor *
                    (f_plus * f_plus + f_minus * f_minus +
                     2.0 * cos_delta * f_plus * f_minus) /
                    norm;
    }
    return GridDensity(grid.a_min, grid.a_max, std::move(values));
}

GridDensity coherent_cat_quadrature_density(const CoherentCatParams& p) {
    if (!(std::isfinite(p.alpha_abs) && std::isfinite(p.phi)))
        throw InvalidRange("cat parameters must be finite");
    const double b = p.alpha_abs * std::sin(p.phi);
    return coherent_cat_quadrature_density(p, {-(b + 3.0), b + 3.0, 4096});
}

GridDensity gaussian_density(double mean, double sigma, const GridSpec& grid) {
    if (!(std::isfinite(sigma) && sigma > 0.0))
        throw InvalidRange("sigma must be positive");
    if (!std::isfinite(mean)) throw InvalidRange("mean must be finite");
    if (grid.n_points < 16 || !(grid.a_min < grid.a_max))
        throw InvalidRange("density grid needs a_min < a_max and >= 16 points");
    const double tail =
        0.5 * std::erfc((grid.a_max - mean) / (sigma * std::sqrt(2.0))) +
        0.5 * std::erfc((mean - grid.a_min) / (sigma * std::sqrt(2.0)));
    if (tail > 1e-6)
        throw GridTooNarrow("grid clips " + std::to_string(tail) +
                            " of the normal mass");
    const double step =
        (grid.a_max - grid.a_min) / static_cast<double>(grid.n_points - 1);
    const double scale = 1.0 / (sigma * std::sqrt(2.0 * kPi));
    std::vector<double> values(grid.n_points);
    for (int i = 0; i < grid.n_points; ++i) {
        const double z = (grid.a_min + step * i - mean) / sigma;
        values[i] = scale * std::exp(-0.5 * z * z);
    }
    return GridDensity(grid.a_min, grid.a_max, std::move(values));
}

GridDensity gaussian_density(double mean, double sigma) {
    if (!(std::isfinite(sigma) && sigma > 0.0))
        throw InvalidRange("sigma must be positive");
    return gaussian_density(mean, sigma,
                            {mean - 8.0 * sigma, mean + 8.0 * sigma, 2049});
}

GridDensity slit_aperture_density(const std::vector<Slit>& slits,
                                  const GridSpec& grid) {
    if (slits.empty()) throw InvalidRange("need at least one slit");
    double total_width = 0.0;
    std::vector<Slit> sorted = slits;
    for (const auto& s : sorted) {
        if (!(std::isfinite(s.center) && std::isfinite(s.width) && s.width > 0.0))
            throw InvalidRange("slit widths must be positive and finite");
        total_width += s.width;
    }
    std::sort(sorted.begin(), sorted.end(),
              [](const Slit& a, const Slit& b) { return a.center < b.center; });
    for (std::size_t i = 1; i < sorted.size(); ++i) {
        const double prev_hi = sorted[i - 1].center + sorted[i - 1].width / 2.0;
        const double lo = sorted[i].center - sorted[i].width / 2.0;
        if (lo < prev_hi)
            throw OverlappingSlits("slit at " + std::to_string(sorted[i].center) +
                                   " overlaps its neighbor");
    }
    if (grid.n_points < 16 || !(grid.a_min < grid.a_max))
        throw InvalidRange("density grid needs a_min < a_max and >= 16 points");

    const double height = 1.0 / total_width;
    const double step =
        (grid.a_max - grid.a_min) / static_cast<double>(grid.n_points - 1);
    // Rounding in a_min + i*step can land a node a few ulps off an aperture
    // edge, so edge matching gets a relative slack far below the step.
    const double edge_tol = step * 1e-9;
    std::vector<double> values(grid.n_points, 0.0);
    for (int i = 0; i < grid.n_points; ++i) {
        const double x = grid.a_min + step * i;
        double v = 0.0;
        for (const auto& s : sorted) {
            const double lo = s.center - s.width / 2.0;
            const double hi = s.center + s.width / 2.0;
            if (std::fabs(x - lo) <= edge_tol || std::fabs(x - hi) <= edge_tol)
                v += 0.5 * height;  // jump node: mean of the two limits
            else if (x > lo && x < hi)
                v += height;
        }
        values[i] = v;
    }
    // The uniform grid resolves edges only to O(step); renormalize so the
    // trapezoid mass is exactly one.
    double mass = 0.0;
    for (int i = 0; i < grid.n_points; ++i) {
        const double w = (i == 0 || i == grid.n_points - 1) ? 0.5 : 1.0;
        mass += w * values[i];
    }
    mass *= step;
    if (!(mass > 0.0))
        throw InvalidRange("no slit mass falls inside the grid");
    for (auto& v : values) v /= mass;
    return GridDensity(grid.a_min, grid.a_max, std::move(values));
}

GridDensity slit_aperture_density(const std::vector<Slit>& slits) {
    if (slits.empty()) throw InvalidRange("need at least one slit");
    double lo = slits.front().center - slits.front().width / 2.0;
    double hi = slits.front().center + slits.front().width / 2.0;
    double min_width = slits.front().width;
    for (const auto& s : slits) {
        if (!(std::isfinite(s.center) && std::isfinite(s.width) && s.width > 0.0))
            throw InvalidRange("slit widths must be positive and finite");
        lo = std::min(lo, s.center - s.width / 2.0);
        hi = std::max(hi, s.center + s.width / 2.0);
        min_width = std::min(min_width, s.width);
    }
    // One step of margin keeps the outer aperture edges on interior nodes;
    // a jump node that is also a trapezoid endpoint would be counted at a
    // quarter of its height and bias the spectrum.
    const double h = min_width / 256.0;
    const int n = static_cast<int>(std::ceil((hi - lo) / h - 1e-9)) + 3;
    return slit_aperture_density(slits, {lo - h, hi + h, n});
}

}  // namespace macroscopality
