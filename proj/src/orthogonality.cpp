#include "macroscopality/orthogonality.hpp"

#include <cmath>
#include <string>

#include "macroscopality/errors.hpp"

namespace macroscopality {

namespace {

constexpr int kScanPoints = 100000;
constexpr double kRefineRelTol = 1e-9;
constexpr double kDefaultWindowOverSigma = 50.0;

// A minimum only counts as an interference null when it lands within this
// factor of the 1/e decay point.  Lattice spectra revive periodically and
// produce deep minima long after the envelope has decayed; those land far
// beyond the gate and resolve to the threshold reading instead.
constexpr double kZeroGate = 3.0;

// A candidate null is credited only after the overlap climbs back to this
// level.  The quadrature floor of a zero-free overlap sits below 1e-13 and
// never recovers this far, while a genuine null between lobes does even when
// the envelope has crushed the next lobe well below tol_zero.
constexpr double kNullRecovery = 1e-9;

void validate(const Criterion& c) {
    if (const auto* fz = std::get_if<FirstZero>(&c)) {
        if (!(fz->tol_zero > 0.0 && fz->tol_zero < 1.0))
            throw InvalidRange("tol_zero must lie in (0, 1)");
    } else if (const auto* th = std::get_if<Threshold>(&c)) {
        if (!(th->level > 0.0 && th->level < 1.0))
            throw InvalidRange("threshold level must lie in (0, 1)");
    }
}

// Golden-section search for the minimum of f on [a, b]; works on the
// non-smooth V shape of a modulus near a zero.  Returns the best point seen.
template <typename F>
std::pair<double, double> golden_min(F&& f, double a, double b) {
    constexpr double inv_phi = 0.6180339887498949;
    double x1 = b - inv_phi * (b - a);
    double x2 = a + inv_phi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    std::pair<double, double> best = f1 < f2 ? std::pair{x1, f1} : std::pair{x2, f2};
    for (int it = 0; it < 400 && (b - a) > kRefineRelTol * std::abs(b); ++it) {
        if (f1 < f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = f(x2);
        }
        const auto& cand = f1 < f2 ? std::pair{x1, f1} : std::pair{x2, f2};
        if (cand.second < best.second) best = cand;
    }
    return best;
}

// First downward crossing of `level` inside [lo, hi] with f(lo) >= level >
// f(hi); returns the below-level end so the result satisfies the criterion.
template <typename F>
std::pair<double, double> bisect_crossing(F&& f, double lo, double hi, double level) {
    for (int it = 0; it < 200 && (hi - lo) > kRefineRelTol * hi; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (f(mid) >= level)
            lo = mid;
        else
            hi = mid;
    }
    return {hi, f(hi)};
}

double resolve_window(const Spectrum& spec, std::optional<double> theta_max) {
    if (theta_max) {
        if (!(*theta_max > 0.0) || !std::isfinite(*theta_max))
            throw InvalidRange("theta_max must be positive and finite");
        return *theta_max;
    }
    const double sigma = moments(spec).stddev;
    if (sigma == 0.0)
        throw NoOrthogonality("point-mass spectrum keeps overlap at one");
    return kDefaultWindowOverSigma / sigma;
}

}  // namespace

OrthogonalityResult first_orthogonality(const Spectrum& spec, const Criterion& criterion,
                                        std::optional<double> theta_max) {
    validate(criterion);
    const double window = resolve_window(spec, theta_max);
    const bool is_auto = std::holds_alternative<Auto>(criterion);
    const bool want_zero = is_auto || std::holds_alternative<FirstZero>(criterion);
    const bool want_cross = is_auto || std::holds_alternative<Threshold>(criterion);
    const double tol_zero =
        want_zero ? (is_auto ? FirstZero{}.tol_zero : std::get<FirstZero>(criterion).tol_zero)
                  : 0.0;
    const double level =
        want_cross ? (is_auto ? Threshold{}.level : std::get<Threshold>(criterion).level)
                   : 0.0;

    auto overlap = [&spec](double th) { return char_magnitude(spec, th); };
    const double h = window / static_cast<double>(kScanPoints);

    std::optional<OrthogonalityResult> crossing;
    std::optional<OrthogonalityResult> pending_zero;
    double prev2 = 1.0, prev = 1.0, th_prev = 0.0;
    for (int i = 1; i <= kScanPoints; ++i) {
        const double th = window * static_cast<double>(i) /
                          static_cast<double>(kScanPoints);
        const double val = overlap(th);

        if (pending_zero && val >= std::min(tol_zero, kNullRecovery))
            return *pending_zero;

        if (want_cross && !crossing && prev >= level && val < level) {
            auto [t, o] = bisect_crossing(overlap, th_prev, th, level);
            crossing = OrthogonalityResult{t, o, Threshold{level}};
            if (!want_zero) return *crossing;
        }
        if (want_zero && !pending_zero && i >= 2 && prev <= prev2 && prev <= val &&
            prev < tol_zero) {
            auto [t, o] = golden_min(overlap, th - 2.0 * h, th);
            if (o < tol_zero) {
                if (!is_auto)
                    pending_zero = OrthogonalityResult{t, o, FirstZero{tol_zero}};
                else if (crossing && t <= kZeroGate * crossing->theta_star)
                    pending_zero = OrthogonalityResult{t, o, FirstZero{tol_zero}};
            }
        }
        if (is_auto && crossing && !pending_zero &&
            th_prev > kZeroGate * crossing->theta_star + 2.0 * h)
            return *crossing;

        prev2 = prev;
        prev = val;
        th_prev = th;
    }
    if (is_auto && crossing) return *crossing;
    throw NoOrthogonality("overlap never meets the criterion within theta_max = " +
                          std::to_string(window));
}

double width_theta_estimate(const Spectrum& spec, WidthKind kind) {
    const double width = kind == WidthKind::stddev ? moments(spec).stddev : fwhm(spec);
    if (!(width > 0.0))
        throw Degenerate("spectrum has zero width");
    return std::acos(-1.0) / width;
}

double separation_over_width(const Spectrum& spec, WidthKind kind) {
    const PeakSummary peaks = detect_peaks(spec);
    double width = peaks.width;
    if (kind == WidthKind::stddev)
        width /= 2.0 * std::sqrt(2.0 * std::log(2.0));
    if (!(width > 0.0))
        throw Degenerate("taller peak has zero width");
    return (peaks.a2 - peaks.a1) / width;
}

MacroscopalityReport macroscopality(const Spectrum& sup, const Spectrum& ref,
                                    const Criterion& criterion, WidthKind width_kind) {
    MacroscopalityReport r{};
    r.width_kind = width_kind;
    r.peaks = detect_peaks(sup);

    const OrthogonalityResult rs = first_orthogonality(sup, criterion);
    const OrthogonalityResult rr = first_orthogonality(ref, criterion);
    r.theta_sup = rs.theta_star;
    r.theta_sing = rr.theta_star;
    r.sup_criterion_used = rs.criterion_used;
    r.ref_criterion_used = rr.criterion_used;
    r.m_numeric = r.theta_sing / r.theta_sup;

    // The width path compares the separation with the reference's full width:
    // its distribution spans about two standard deviations, or one FWHM.
    r.ref_width =
        width_kind == WidthKind::stddev ? 2.0 * moments(ref).stddev : fwhm(ref);
    if (!(r.ref_width > 0.0))
        throw Degenerate("reference spectrum has zero width");
    r.m_width = (r.peaks.a2 - r.peaks.a1) / r.ref_width;
    return r;
}

}  // namespace macroscopality
