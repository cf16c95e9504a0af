#include "macroscopality/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numeric>
#include <optional>
#include <string>

#include "macroscopality/errors.hpp"

namespace macroscopality {

namespace {

bool all_finite(const std::vector<double>& v) {
    return std::all_of(v.begin(), v.end(), [](double x) { return std::isfinite(x); });
}

// Trapezoid quadrature of f(x_i) * values[i] over the uniform grid.
template <typename F>
double trapezoid(const GridDensity& d, F&& f) {
    const auto& v = d.values();
    double acc = 0.5 * (f(d.position(0)) * v.front() +
                        f(d.position(v.size() - 1)) * v.back());
    for (std::size_t i = 1; i + 1 < v.size(); ++i)
        acc += f(d.position(i)) * v[i];
    return acc * d.step();
}

}  // namespace

DiscreteSpectrum::DiscreteSpectrum(std::vector<SpectralPoint> points) {
    if (points.empty())
        throw InvalidSpectrum("discrete spectrum needs at least one point");
    for (const auto& p : points) {
        if (!std::isfinite(p.eigenvalue) || !std::isfinite(p.weight))
            throw InvalidSpectrum("non-finite eigenvalue or weight");
        if (p.weight < 0.0)
            throw InvalidSpectrum("negative weight at eigenvalue " +
                                  std::to_string(p.eigenvalue));
    }
    std::sort(points.begin(), points.end(),
              [](const SpectralPoint& a, const SpectralPoint& b) {
                  return a.eigenvalue < b.eigenvalue;
              });
    // Merge duplicate eigenvalues, drop zero-weight points.
    for (const auto& p : points) {
        if (!points_.empty() && points_.back().eigenvalue == p.eigenvalue)
            points_.back().weight += p.weight;
        else
            points_.push_back(p);
    }
    std::erase_if(points_, [](const SpectralPoint& p) { return p.weight == 0.0; });
    if (points_.empty())
        throw InvalidSpectrum("all weights are zero");
    total_weight_ = 0.0;
    for (const auto& p : points_) total_weight_ += p.weight;
    if (std::abs(total_weight_ - 1.0) > kDiscreteNormTol)
        throw InvalidSpectrum("weights sum to " + std::to_string(total_weight_) +
                              ", expected 1 within 1e-9");
}

GridDensity::GridDensity(double a_min, double a_max, std::vector<double> values)
    : a_min_(a_min), a_max_(a_max), values_(std::move(values)) {
    if (!std::isfinite(a_min_) || !std::isfinite(a_max_) || a_min_ >= a_max_)
        throw InvalidSpectrum("density needs a finite range with a_min < a_max");
    if (values_.size() < 16)
        throw InvalidSpectrum("density grid needs at least 16 points");
    if (!all_finite(values_))
        throw InvalidSpectrum("non-finite density value");
    if (std::any_of(values_.begin(), values_.end(), [](double v) { return v < 0.0; }))
        throw InvalidSpectrum("negative density value");
    step_ = (a_max_ - a_min_) / static_cast<double>(values_.size() - 1);
    // Same accumulation order as char_magnitude, so the normalized modulus is
    // exactly 1 at theta = 0.
    mass_ = 0.5 * values_.front();
    for (std::size_t i = 1; i + 1 < values_.size(); ++i) mass_ += values_[i];
    mass_ += 0.5 * values_.back();
    mass_ *= step_;
    if (std::abs(mass_ - 1.0) > kDensityNormTol)
        throw InvalidSpectrum("density integrates to " + std::to_string(mass_) +
                              ", expected 1 within 1e-6");
}

double char_magnitude(const Spectrum& spec, double theta) {
    // The distribution is real, so the modulus is even in theta; evaluating at
    // |theta| makes that exact rather than up to rounding.
    const double t = std::abs(theta);
    if (std::holds_alternative<DiscreteSpectrum>(spec)) {
        const auto& d = std::get<DiscreteSpectrum>(spec);
        std::complex<double> acc{0.0, 0.0};
        for (const auto& p : d.points())
            acc += p.weight * std::complex<double>(std::cos(t * p.eigenvalue),
                                                   std::sin(t * p.eigenvalue));
        return std::abs(acc) / d.total_weight();
    }
    const auto& g = std::get<GridDensity>(spec);
    const auto& v = g.values();
    std::complex<double> acc{0.0, 0.0};
    for (std::size_t i = 0; i < v.size(); ++i) {
        const double w = (i == 0 || i + 1 == v.size()) ? 0.5 : 1.0;
        const double x = g.position(i);
        acc += (w * v[i]) * std::complex<double>(std::cos(t * x), std::sin(t * x));
    }
    return std::abs(acc) * g.step() / g.mass();
}

OverlapCurve scan_overlap(const Spectrum& spec, double theta_max, int n_points) {
    if (!(theta_max > 0.0) || !std::isfinite(theta_max))
        throw InvalidRange("theta_max must be positive and finite");
    if (n_points < 2)
        throw InvalidRange("overlap scan needs at least two points");
    OverlapCurve curve;
    curve.thetas.resize(static_cast<std::size_t>(n_points));
    curve.magnitudes.resize(static_cast<std::size_t>(n_points));
    for (int i = 0; i < n_points; ++i) {
        const double th = theta_max * static_cast<double>(i) /
                          static_cast<double>(n_points - 1);
        curve.thetas[static_cast<std::size_t>(i)] = th;
        curve.magnitudes[static_cast<std::size_t>(i)] = char_magnitude(spec, th);
    }
    return curve;
}

Moments moments(const Spectrum& spec) {
    if (std::holds_alternative<DiscreteSpectrum>(spec)) {
        const auto& d = std::get<DiscreteSpectrum>(spec);
        double mean = 0.0;
        for (const auto& p : d.points()) mean += p.weight * p.eigenvalue;
        mean /= d.total_weight();
        double var = 0.0;
        for (const auto& p : d.points()) {
            const double c = p.eigenvalue - mean;
            var += p.weight * c * c;
        }
        var /= d.total_weight();
        return {mean, std::sqrt(std::max(var, 0.0))};
    }
    const auto& g = std::get<GridDensity>(spec);
    const double mean = trapezoid(g, [](double x) { return x; }) / g.mass();
    const double var =
        trapezoid(g, [mean](double x) { return (x - mean) * (x - mean); }) / g.mass();
    return {mean, std::sqrt(std::max(var, 0.0))};
}

namespace {

struct SampledCurve {
    std::vector<double> pos;
    std::vector<double> val;
};

SampledCurve to_curve(const Spectrum& spec) {
    SampledCurve c;
    if (std::holds_alternative<DiscreteSpectrum>(spec)) {
        const auto& d = std::get<DiscreteSpectrum>(spec);
        c.pos.reserve(d.size());
        c.val.reserve(d.size());
        for (const auto& p : d.points()) {
            c.pos.push_back(p.eigenvalue);
            c.val.push_back(p.weight);
        }
    } else {
        const auto& g = std::get<GridDensity>(spec);
        c.pos.reserve(g.size());
        c.val = g.values();
        for (std::size_t i = 0; i < g.size(); ++i) c.pos.push_back(g.position(i));
    }
    return c;
}

// Position where the polyline through (pos, val) crosses `level` between
// samples i and i+1.
double cross_between(const SampledCurve& c, std::size_t i, double level) {
    const double v0 = c.val[i], v1 = c.val[i + 1];
    const double t = (level - v0) / (v1 - v0);
    return c.pos[i] + t * (c.pos[i + 1] - c.pos[i]);
}

// Leftmost and rightmost crossings of `level`; the boundary is used when the
// curve already starts or ends above the level.
std::pair<double, double> outer_crossings(const SampledCurve& c, double level) {
    const std::size_t n = c.val.size();
    double left = c.pos.front();
    for (std::size_t i = 0; i < n; ++i) {
        if (c.val[i] >= level) {
            left = (i == 0) ? c.pos.front() : cross_between(c, i - 1, level);
            break;
        }
    }
    double right = c.pos.back();
    for (std::size_t i = n; i-- > 0;) {
        if (c.val[i] >= level) {
            right = (i + 1 == n) ? c.pos.back() : cross_between(c, i, level);
            break;
        }
    }
    return {left, right};
}

// Indices of local maxima, runs of equal values merged to their midpoint.
std::vector<std::size_t> local_maxima(const std::vector<double>& v) {
    std::vector<std::size_t> maxima;
    const std::size_t n = v.size();
    std::size_t l = 0;
    while (l < n) {
        std::size_t r = l;
        while (r + 1 < n && v[r + 1] == v[l]) ++r;
        const bool rises = (l == 0) || (v[l - 1] < v[l]);
        const bool falls = (r + 1 == n) || (v[r + 1] < v[r]);
        if (rises && falls && v[l] > 0.0) maxima.push_back((l + r) / 2);
        l = r + 1;
    }
    return maxima;
}

}  // namespace

double fwhm(const Spectrum& spec) {
    if (std::holds_alternative<DiscreteSpectrum>(spec)) {
        const auto& d = std::get<DiscreteSpectrum>(spec);
        if (d.is_delta())
            throw Degenerate("width of a single point mass is undefined");
        const SampledCurve c = to_curve(spec);
        const double half = *std::max_element(c.val.begin(), c.val.end()) / 2.0;
        const auto above =
            std::count_if(c.val.begin(), c.val.end(), [half](double v) { return v > half; });
        if (above < 3) {
            // Too sparse to interpolate a width; use the Gaussian-equivalent one.
            return moments(spec).stddev * 2.0 * std::sqrt(2.0 * std::log(2.0));
        }
        const auto [left, right] = outer_crossings(c, half);
        return right - left;
    }
    const SampledCurve c = to_curve(spec);
    const double half = *std::max_element(c.val.begin(), c.val.end()) / 2.0;
    const auto [left, right] = outer_crossings(c, half);
    return right - left;
}

PeakSummary detect_peaks(const Spectrum& spec) {
    if (std::holds_alternative<DiscreteSpectrum>(spec)) {
        const auto& d = std::get<DiscreteSpectrum>(spec);
        if (d.is_delta()) throw NotBimodal("single point mass");
        if (d.size() == 2) {
            // Two point masses: the bimodal case in its sharpest form.  The
            // constituents are deltas, so the peak width is zero.
            return {d.points()[0].eigenvalue, d.points()[1].eigenvalue, 0.0};
        }
    }
    const SampledCurve c = to_curve(spec);
    const std::vector<std::size_t> maxima = local_maxima(c.val);
    if (maxima.size() < 2)
        throw NotBimodal("fewer than two local maxima");

    // Tallest maximum, then the tallest other maximum separated from it by a
    // dip below half of the lower of the two.
    const auto tallest =
        *std::max_element(maxima.begin(), maxima.end(),
                          [&](std::size_t a, std::size_t b) { return c.val[a] < c.val[b]; });
    std::optional<std::size_t> partner;
    for (std::size_t m : maxima) {
        if (m == tallest) continue;
        const auto [lo, hi] = std::minmax(m, tallest);
        double dip = std::numeric_limits<double>::infinity();
        for (std::size_t i = lo + 1; i < hi; ++i) dip = std::min(dip, c.val[i]);
        if (!(dip < 0.5 * std::min(c.val[m], c.val[tallest]))) continue;
        if (!partner || c.val[m] > c.val[*partner]) partner = m;
    }
    if (!partner)
        throw NotBimodal("no second maximum separated by a dip below half the lower peak");

    // A run of equal maximal values reads as one peak at its positional
    // midpoint; the stored index may sit half a sample off for even runs.
    const auto plateau_center = [&](std::size_t m) {
        std::size_t l = m, r = m;
        while (l > 0 && c.val[l - 1] == c.val[m]) --l;
        while (r + 1 < c.val.size() && c.val[r + 1] == c.val[m]) ++r;
        return 0.5 * (c.pos[l] + c.pos[r]);
    };
    PeakSummary s{};
    s.a1 = std::min(plateau_center(tallest), plateau_center(*partner));
    s.a2 = std::max(plateau_center(tallest), plateau_center(*partner));

    // FWHM of the taller peak to its nearest half-max crossings.
    const double half = c.val[tallest] / 2.0;
    std::optional<double> left, right;
    for (std::size_t i = tallest; i-- > 0;) {
        if (c.val[i] < half) {
            left = cross_between(c, i, half);
            break;
        }
    }
    for (std::size_t i = tallest + 1; i < c.val.size(); ++i) {
        if (c.val[i] < half) {
            right = cross_between(c, i - 1, half);
            break;
        }
    }
    if (left && right)
        s.width = *right - *left;
    else if (left)
        s.width = 2.0 * (c.pos[tallest] - *left);
    else if (right)
        s.width = 2.0 * (*right - c.pos[tallest]);
    else
        s.width = 0.0;
    return s;
}

Spectrum bimodal_compose(const Spectrum& kernel, double a1, double a2) {
    if (!std::isfinite(a1) || !std::isfinite(a2))
        throw InvalidRange("component positions must be finite");
    if (a1 == a2)
        throw InvalidSeparation("component positions coincide");
    const double lo = std::min(a1, a2), hi = std::max(a1, a2);

    if (std::holds_alternative<DiscreteSpectrum>(kernel)) {
        const auto& d = std::get<DiscreteSpectrum>(kernel);
        std::vector<SpectralPoint> pts;
        pts.reserve(2 * d.size());
        for (const auto& p : d.points()) {
            pts.push_back({p.eigenvalue + lo, 0.5 * p.weight});
            pts.push_back({p.eigenvalue + hi, 0.5 * p.weight});
        }
        return DiscreteSpectrum(std::move(pts));
    }

    const auto& g = std::get<GridDensity>(kernel);
    const double h = g.step();
    const double lo_edge = g.a_min() + lo;
    const double hi_edge = g.a_max() + hi;
    const auto n = static_cast<std::size_t>(
                       std::ceil((hi_edge - lo_edge) / h - 1e-9)) + 1;
    // Evaluate each shifted copy by linear interpolation on the kernel grid;
    // when the separation is a grid multiple this is exact.
    auto kernel_at = [&g](double x) {
        if (x <= g.a_min() || x >= g.a_max()) {
            if (x == g.a_min()) return g.values().front();
            if (x == g.a_max()) return g.values().back();
            return 0.0;
        }
        const double u = (x - g.a_min()) / g.step();
        const auto i = static_cast<std::size_t>(u);
        const double t = u - static_cast<double>(i);
        return g.values()[i] + t * (g.values()[i + 1] - g.values()[i]);
    };
    const double out_step = (hi_edge - lo_edge) / static_cast<double>(n - 1);
    std::vector<double> vals(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double x = lo_edge + out_step * static_cast<double>(i);
        vals[i] = 0.5 * (kernel_at(x - lo) + kernel_at(x - hi));
    }
    // Interpolation can drift the trapezoid mass; renormalize so the result
    // satisfies the density invariant.  char_magnitude is unaffected.
    double mass = 0.5 * (vals.front() + vals.back());
    for (std::size_t i = 1; i + 1 < n; ++i) mass += vals[i];
    mass *= out_step;
    if (!(mass > 0.0))
        throw InvalidSpectrum("composed density has no mass");
    for (double& v : vals) v /= mass;
    return GridDensity(lo_edge, hi_edge, std::move(vals));
}

}  // namespace macroscopality
