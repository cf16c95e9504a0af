#pragma once

#include <optional>
#include <variant>

#include "macroscopality/spectrum.hpp"

namespace macroscopality {

// How "the states have become distinguishable" is read off the overlap curve.
//
// FirstZero: the first local minimum of the overlap that dips below tol_zero
// (an interference null).  Threshold: the first downward crossing of a fixed
// level.  Auto resolves to FirstZero when a null exists in the scan window
// and falls back to Threshold at 1/e otherwise; the resolution is recorded in
// the result.
struct FirstZero {
    double tol_zero = 1e-3;
};
struct Threshold {
    double level = 0.36787944117144233;  // 1/e
};
struct Auto {};
using Criterion = std::variant<FirstZero, Threshold, Auto>;

enum class WidthKind { stddev, fwhm };

struct OrthogonalityResult {
    double theta_star;
    double overlap_at_theta;
    // FirstZero or Threshold; never Auto.
    Criterion criterion_used;
};

// Smallest theta > 0 at which the overlap meets the criterion, refined to
// relative precision better than 1e-6 (golden section for minima, bisection
// for level crossings).  The scan window defaults to 50 / stddev(spec).
OrthogonalityResult first_orthogonality(const Spectrum& spec,
                                        const Criterion& criterion = Auto{},
                                        std::optional<double> theta_max = std::nullopt);

// pi / width, the semiclassical estimate of the orthogonality scale.
double width_theta_estimate(const Spectrum& spec, WidthKind kind);

// Peak separation divided by the taller constituent's width (the FWHM from
// peak detection, converted to a standard deviation for WidthKind::stddev).
double separation_over_width(const Spectrum& spec, WidthKind kind);

struct MacroscopalityReport {
    double theta_sing;  // reference (semiclassical) orthogonality
    double theta_sup;   // superposition orthogonality
    double m_numeric;   // theta_sing / theta_sup
    double m_width;     // |a2 - a1| / full width of the reference
    WidthKind width_kind;
    PeakSummary peaks;      // constituents of the superposition spectrum
    double ref_width;       // full reference width used in m_width
    Criterion sup_criterion_used;
    Criterion ref_criterion_used;
};

// Interferometric macroscopality of a superposition spectrum against its
// semiclassical reference.  m_numeric compares orthogonality times; m_width
// compares the peak separation with the reference's full width (two standard
// deviations, or its FWHM).
MacroscopalityReport macroscopality(const Spectrum& sup, const Spectrum& ref,
                                    const Criterion& criterion = Auto{},
                                    WidthKind width_kind = WidthKind::stddev);

}  // namespace macroscopality
