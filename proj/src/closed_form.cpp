#include "macroscopality/closed_form.hpp"

#include <cmath>
#include <complex>

#include "macroscopality/errors.hpp"

namespace macroscopality {
namespace {

void check_cat_params(const CoherentCatParams& p) {
    constexpr double half_pi = 1.5707963267948966;
    if (!(std::isfinite(p.alpha_abs) && p.alpha_abs >= 0.0))
        throw InvalidRange("alpha_abs must be non-negative");
    if (!(std::isfinite(p.phi) && p.phi > 0.0 && p.phi <= half_pi))
        throw InvalidRange("phi must lie in (0, pi/2]");
}

}  // namespace

double coherent_self_overlap(double theta) {
    return std::exp(-theta * theta / 8.0);
}

double coherent_cat_norm(const CoherentCatParams& p) {
    check_cat_params(p);
    const double a2 = p.alpha_abs * p.alpha_abs;
    return 2.0 * (1.0 + std::exp(-a2 * (1.0 - std::cos(2.0 * p.phi))) *
                            std::cos(a2 * std::sin(2.0 * p.phi)));
}

double coherent_cat_overlap(const CoherentCatParams& p, double theta) {
    check_cat_params(p);
    const double a2 = p.alpha_abs * p.alpha_abs;
    const double b = p.alpha_abs * std::sin(p.phi);
    const double residual = std::exp(-a2 * (1.0 - std::cos(2.0 * p.phi))) *
                            std::cos(a2 * std::sin(2.0 * p.phi));
    const double norm = 2.0 * (1.0 + residual);
    return std::fabs(2.0 * std::exp(-theta * theta / 8.0) *
                     (std::cos(theta * b) + residual) / norm);
}

double qubit_overlap_closed(const QubitAngles& p, double theta) {
    if (p.n_qubits < 1) throw InvalidRange("n_qubits must be >= 1");
    if (!(p.eps >= 0.0 && p.eps < 3.141592653589793238462643383279502884))
        throw InvalidRange("eps must lie in [0, pi)");
    const double c_plus = std::cos(p.phi + p.eps / 2.0);
    const double s_plus = std::sin(p.phi + p.eps / 2.0);
    const double c_minus = std::cos(p.phi - p.eps / 2.0);
    const double s_minus = std::sin(p.phi - p.eps / 2.0);
    const std::complex<double> up = std::polar(1.0, theta / 2.0);
    const std::complex<double> down = std::conj(up);
    const auto transfer = [&](double ca, double cb, double sa, double sb) {
        return ca * cb * up + sa * sb * down;
    };
    const std::complex<double> sum =
        std::pow(transfer(c_plus, c_plus, s_plus, s_plus), p.n_qubits) +
        std::pow(transfer(c_minus, c_minus, s_minus, s_minus), p.n_qubits) +
        2.0 * std::pow(transfer(c_plus, c_minus, s_plus, s_minus), p.n_qubits);
    const double norm = 2.0 * (1.0 + std::pow(std::cos(p.eps), p.n_qubits));
    return std::abs(sum) / norm;
}

double component_overlap_qubits(int n_qubits, double eps) {
    if (n_qubits < 1) throw InvalidRange("n_qubits must be >= 1");
    return std::pow(std::fabs(std::cos(eps)), n_qubits);
}

double decoherence_factor(double distance) {
    if (!(std::isfinite(distance) && distance >= 0.0))
        throw InvalidRange("distance must be non-negative");
    return std::exp(-distance * distance / 2.0);
}

}  // namespace macroscopality
