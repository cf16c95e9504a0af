#include "doctest.h"

#include "macroscopality/closed_form.hpp"
#include "macroscopality/errors.hpp"
#include "macroscopality/states.hpp"

#include <cmath>
#include <vector>

using namespace macroscopality;

namespace {

constexpr double kPi = 3.14159265358979323846;

// Integral of the unnormalized cat quadrature numerator, done with a plain
// trapezoid on a wide fine grid.  Equals the normalization constant.
double integrated_cat_norm(const CoherentCatParams& p) {
    const double b = p.alpha_abs * std::sin(p.phi);
    const double delta = p.alpha_abs * p.alpha_abs * std::sin(2.0 * p.phi);
    const double lo = -(b + 8.0), hi = b + 8.0;
    const std::size_t n = 20001;
    const double h = (hi - lo) / static_cast<double>(n - 1);
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double x = lo + h * static_cast<double>(i);
        const double fp = std::exp(-(x - b) * (x - b));
        const double fm = std::exp(-(x + b) * (x + b));
        double v = std::sqrt(2.0 / kPi) * (fp * fp + fm * fm + 2.0 * std::cos(delta) * fp * fm);
        if (i == 0 || i == n - 1) v *= 0.5;
        sum += v;
    }
    return sum * h;
}

}  // namespace

TEST_CASE("coherent state self overlap") {
    CHECK(coherent_self_overlap(0.0) == 1.0);
    CHECK(coherent_self_overlap(2.0 * std::sqrt(2.0)) ==
          doctest::Approx(std::exp(-1.0)).epsilon(1e-12));
    CHECK(coherent_self_overlap(2.0) == doctest::Approx(std::exp(-0.5)).epsilon(1e-12));
}

TEST_CASE("cat normalization constant") {
    CHECK(coherent_cat_norm({0.0, 0.5}) == 4.0);
    CHECK(coherent_cat_norm({3.0, kPi / 2.0}) == doctest::Approx(2.0).epsilon(1e-6));

    const CoherentCatParams p{3.1, 0.5};
    const double a2 = p.alpha_abs * p.alpha_abs;
    const double direct =
        2.0 * (1.0 + std::exp(-a2 * (1.0 - std::cos(2.0 * p.phi))) * std::cos(a2 * std::sin(2.0 * p.phi)));
    CHECK(coherent_cat_norm(p) == doctest::Approx(direct).epsilon(1e-15));
    CHECK(direct == doctest::Approx(1.9944402832170682).epsilon(1e-12));
    // The same constant normalizes the quadrature marginal.
    CHECK(integrated_cat_norm(p) == doctest::Approx(coherent_cat_norm(p)).epsilon(1e-9));
}

TEST_CASE("cat overlap starts at one and vanishes at the interference null") {
    for (const CoherentCatParams& p :
         std::vector<CoherentCatParams>{{1.2, 0.4}, {3.1, 0.5}, {5.0, kPi / 2.0}}) {
        CHECK(coherent_cat_overlap(p, 0.0) == 1.0);
    }
    // Null of cos(theta B) + R for the worked parameters.
    CHECK(coherent_cat_overlap({3.1, 0.5}, 1.0550371686889937) < 1e-6);
    // The residual term shifts the null slightly off pi / (2 B).
    const double b = 3.1 * std::sin(0.5);
    CHECK(coherent_cat_overlap({3.1, 0.5}, kPi / (2.0 * b)) > 1e-3);
}

TEST_CASE("qubit overlap closed form equals the spectral characteristic function") {
    const QubitAngles p{kPi / 4.0, 0.4, 12};
    Spectrum s = qubit_superposition_spectrum(p);
    for (double theta : {0.0, 0.1, 0.3, 1.0, 2.5}) {
        CHECK(std::fabs(qubit_overlap_closed(p, theta) - char_magnitude(s, theta)) < 1e-12);
    }
}

TEST_CASE("one qubit at pi/4 is orthogonal at theta = pi") {
    CHECK(qubit_overlap_closed({kPi / 4.0, 0.7, 1}, kPi) < 1e-12);
}

TEST_CASE("zero separation reduces the qubit overlap to the product state") {
    const QubitAngles p{0.7, 0.0, 9};
    Spectrum prod = qubit_product_spectrum(9, 0.7);
    for (double theta : {0.2, 1.1, 3.0}) {
        CHECK(std::fabs(qubit_overlap_closed(p, theta) - char_magnitude(prod, theta)) < 1e-12);
    }
}

TEST_CASE("component overlap of the qubit branches") {
    CHECK(component_overlap_qubits(10, 0.0) == 1.0);
    CHECK(component_overlap_qubits(50, std::acos(std::exp(-1.0 / 50.0))) ==
          doctest::Approx(std::exp(-1.0)).epsilon(1e-12));
    double by_hand = 1.0;
    for (int i = 0; i < 100; ++i) by_hand *= std::cos(0.3);
    CHECK(component_overlap_qubits(100, 0.3) == doctest::Approx(by_hand).epsilon(1e-13));
}

TEST_CASE("decoherence factor inverts to the squared distance") {
    CHECK(decoherence_factor(0.0) == 1.0);
    for (double d : {0.5, 1.0, 2.9724383393460586}) {
        CHECK(-2.0 * std::log(decoherence_factor(d)) == doctest::Approx(d * d).epsilon(1e-9));
    }
    CHECK(decoherence_factor(2.0 * 3.1 * std::sin(0.5)) ==
          doctest::Approx(0.01207).epsilon(2e-3));
    CHECK_THROWS_AS(decoherence_factor(-1.0), InvalidRange);
}
