#include "doctest.h"

#include "macroscopality/errors.hpp"
#include "macroscopality/orthogonality.hpp"
#include "macroscopality/states.hpp"

#include <cmath>
#include <variant>

using namespace macroscopality;

namespace {

constexpr double kPi = 3.14159265358979323846;

bool used_first_zero(const OrthogonalityResult& r) {
    return std::holds_alternative<FirstZero>(r.criterion_used);
}

bool used_threshold(const OrthogonalityResult& r) {
    return std::holds_alternative<Threshold>(r.criterion_used);
}

}  // namespace

TEST_CASE("two-point spectra are orthogonal at pi over the separation") {
    for (double delta : {0.001, 0.1, 1.0, 40.0, 1e6}) {
        Spectrum s = DiscreteSpectrum({{-delta / 2.0, 0.5}, {delta / 2.0, 0.5}});
        OrthogonalityResult r = first_orthogonality(s, FirstZero{});
        CHECK(r.theta_star == doctest::Approx(kPi / delta).epsilon(1e-6));
        CHECK(r.overlap_at_theta < 1e-3);
        CHECK(used_first_zero(r));
    }
}

TEST_CASE("a point mass never becomes orthogonal") {
    Spectrum s = DiscreteSpectrum({{3.0, 1.0}});
    CHECK_THROWS_AS(first_orthogonality(s), NoOrthogonality);
    CHECK_THROWS_AS(first_orthogonality(s, Threshold{}), NoOrthogonality);
}

TEST_CASE("gaussian overlap crosses 1/e at sqrt(2) over sigma") {
    const double sigma = 0.5;
    Spectrum g = gaussian_density(0.0, sigma);
    OrthogonalityResult r = first_orthogonality(g, Threshold{});
    CHECK(r.theta_star == doctest::Approx(2.8284271247461903).epsilon(1e-6));
    CHECK(r.overlap_at_theta <= 1.0 / std::exp(1.0) + 1e-9);
    // Auto resolves to the same threshold reading: a gaussian has no null.
    OrthogonalityResult ra = first_orthogonality(g);
    CHECK(used_threshold(ra));
    CHECK(ra.theta_star == doctest::Approx(r.theta_star).epsilon(1e-9));
    // Asking for a strict null on a gaussian fails.
    CHECK_THROWS_AS(first_orthogonality(g, FirstZero{}), NoOrthogonality);
}

TEST_CASE("auto rejects lattice revivals and keeps the threshold reading") {
    // Poisson weights live on a half-integer lattice; the exact revival near
    // theta = 2 pi is not a loss of distinguishability.
    Spectrum beam = coherent_halfdiff_spectrum(20.0);
    OrthogonalityResult r = first_orthogonality(beam);
    CHECK(used_threshold(r));
    CHECK(r.theta_star == doctest::Approx(2.0 * std::acos(1.0 - 1.0 / 20.0)).epsilon(1e-4));
}

TEST_CASE("auto accepts genuine interference nulls") {
    OrthogonalityResult cat = first_orthogonality(Spectrum(fock_cat_spectrum(20)));
    CHECK(used_first_zero(cat));
    CHECK(cat.theta_star == doctest::Approx(kPi / 20.0).epsilon(1e-6));

    // A composed pair at separation comparable to the kernel width still has
    // its null well inside the acceptance window.
    Spectrum pair = bimodal_compose(Spectrum(gaussian_density(0.0, 1.0)), -0.5, 0.5);
    OrthogonalityResult r = first_orthogonality(pair);
    CHECK(used_first_zero(r));
    CHECK(r.theta_star == doctest::Approx(kPi).epsilon(1e-4));
}

TEST_CASE("lower thresholds are reached later") {
    Spectrum g = gaussian_density(0.0, 1.0);
    Spectrum beam = coherent_halfdiff_spectrum(20.0);
    for (const Spectrum* s : {&g, &beam}) {
        const double hi = first_orthogonality(*s, Threshold{0.5}).theta_star;
        const double lo = first_orthogonality(*s, Threshold{0.2}).theta_star;
        CHECK(lo > hi);
    }
}

TEST_CASE("criterion parameters outside (0, 1) are rejected") {
    Spectrum s = DiscreteSpectrum({{-1.0, 0.5}, {1.0, 0.5}});
    CHECK_THROWS_AS(first_orthogonality(s, Threshold{1.5}), InvalidRange);
    CHECK_THROWS_AS(first_orthogonality(s, Threshold{0.0}), InvalidRange);
    CHECK_THROWS_AS(first_orthogonality(s, FirstZero{-1e-3}), InvalidRange);
    CHECK_THROWS_AS(first_orthogonality(s, Auto{}, -2.0), InvalidRange);
}

TEST_CASE("an explicit window that ends before the feature reports no orthogonality") {
    Spectrum s = DiscreteSpectrum({{-1.0, 0.5}, {1.0, 0.5}});
    CHECK_THROWS_AS(first_orthogonality(s, FirstZero{}, 0.5), NoOrthogonality);
    CHECK(first_orthogonality(s, FirstZero{}, 4.0).theta_star ==
          doctest::Approx(kPi / 2.0).epsilon(1e-6));
}

TEST_CASE("width-based estimates of the orthogonality scale") {
    CHECK(width_theta_estimate(Spectrum(gaussian_density(0.0, 1.0)), WidthKind::fwhm) ==
          doctest::Approx(kPi / 2.3548200450309493).epsilon(1e-3));
    // Binomial spin of 100 qubits at pi/4: stddev 5.
    CHECK(width_theta_estimate(Spectrum(qubit_product_spectrum(100, kPi / 4.0)),
                               WidthKind::stddev) == doctest::Approx(kPi / 5.0).epsilon(1e-9));
    // Half photon difference of a 20-photon beam: stddev sqrt(20)/2.
    CHECK(width_theta_estimate(Spectrum(coherent_halfdiff_spectrum(20.0)),
                               WidthKind::stddev) ==
          doctest::Approx(2.0 * kPi / std::sqrt(20.0)).epsilon(1e-6));
    CHECK_THROWS_AS(width_theta_estimate(Spectrum(DiscreteSpectrum({{0.0, 1.0}})),
                                         WidthKind::stddev), Degenerate);
}

TEST_CASE("separation over width in both width conventions") {
    Spectrum pair = bimodal_compose(Spectrum(gaussian_density(0.0, 1.0)), -5.0, 5.0);
    CHECK(separation_over_width(pair, WidthKind::stddev) == doctest::Approx(10.0).epsilon(0.02));
    CHECK(separation_over_width(pair, WidthKind::fwhm) ==
          doctest::Approx(10.0 / 2.3548200450309493).epsilon(0.02));
    CHECK_THROWS_AS(separation_over_width(Spectrum(gaussian_density(0.0, 1.0)),
                                          WidthKind::stddev), NotBimodal);
}

TEST_CASE("full report for the Fock cat against the coherent beam") {
    Spectrum sup = fock_cat_spectrum(20);
    Spectrum ref = coherent_halfdiff_spectrum(20.0);
    MacroscopalityReport rep = macroscopality::macroscopality(sup, ref);
    CHECK(rep.theta_sup == doctest::Approx(kPi / 20.0).epsilon(1e-6));
    CHECK(rep.theta_sing == doctest::Approx(2.0 * std::acos(0.95)).epsilon(1e-4));
    CHECK(rep.m_numeric == doctest::Approx(4.043304964170397).epsilon(1e-4));
    // Full separation 20 against two reference standard deviations sqrt(20).
    CHECK(rep.m_width == doctest::Approx(std::sqrt(20.0)).epsilon(1e-6));
    CHECK(rep.peaks.a1 == -10.0);
    CHECK(rep.peaks.a2 == 10.0);
    CHECK(std::holds_alternative<FirstZero>(rep.sup_criterion_used));
    CHECK(std::holds_alternative<Threshold>(rep.ref_criterion_used));
}

TEST_CASE("fwhm width kind divides by the reference full width at half maximum") {
    Spectrum sup = bimodal_compose(Spectrum(gaussian_density(0.0, 1.0)), -6.0, 6.0);
    Spectrum ref = gaussian_density(0.0, 1.0);
    MacroscopalityReport rep = macroscopality::macroscopality(sup, ref, Auto{}, WidthKind::fwhm);
    CHECK(rep.width_kind == WidthKind::fwhm);
    CHECK(rep.ref_width == doctest::Approx(2.3548200450309493).epsilon(1e-3));
    CHECK(rep.m_width == doctest::Approx(12.0 / 2.3548200450309493).epsilon(1e-3));
}

TEST_CASE("a delta reference propagates the failure") {
    Spectrum sup = fock_cat_spectrum(4);
    Spectrum ref = DiscreteSpectrum({{0.0, 1.0}});
    CHECK_THROWS_AS(macroscopality::macroscopality(sup, ref), NoOrthogonality);
}
