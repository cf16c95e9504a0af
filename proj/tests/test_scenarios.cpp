#include "doctest.h"

#include "macroscopality/constants.hpp"
#include "macroscopality/errors.hpp"
#include "macroscopality/scenarios.hpp"

#include <cmath>
#include <string>

using namespace macroscopality;

namespace {

constexpr double kPi = 3.14159265358979323846;

double detail(const ScenarioResult& r, const std::string& key) {
    for (const auto& [k, v] : r.details) {
        if (k == key) return v;
    }
    FAIL(("missing detail key " + key));
    return 0.0;
}

}  // namespace

TEST_CASE("fock cat scenario") {
    ScenarioResult r = scenario_fock_cat(20);
    CHECK(r.m_paper == std::sqrt(20.0));
    CHECK(r.theta_sup == doctest::Approx(kPi / 20.0).epsilon(1e-6));
    CHECK(std::fabs(r.m_numeric - 4.043304964170397) < 1e-3);
    CHECK(detail(r, "m_width") == doctest::Approx(std::sqrt(20.0)).epsilon(1e-6));
    CHECK(detail(r, "delta_n_full") == std::sqrt(20.0));
    CHECK(scenario_fock_cat(4).m_paper == 2.0);
    CHECK_THROWS_AS(scenario_fock_cat(1), InvalidRange);
    CHECK_FALSE(r.notes.empty());
}

TEST_CASE("qubit scenario") {
    ScenarioResult r = scenario_qubits(100, 0.3);
    CHECK(r.m_paper == doctest::Approx(6.0).epsilon(1e-6));
    CHECK(std::fabs(r.m_numeric - 2.79) < 0.1);
    CHECK(detail(r, "m_sine") == doctest::Approx(20.0 * std::sin(0.3)).epsilon(1e-12));
    CHECK(std::fabs(detail(r, "peak_separation") - 29.6) <= 0.5);
    CHECK(r.theta_sing == doctest::Approx(0.2956676670123939).epsilon(1e-5));
    CHECK(r.theta_sup == doctest::Approx(0.10690706277109972).epsilon(1e-5));
    CHECK_THROWS_AS(scenario_qubits(100, 0.01), NotBimodal);
}

TEST_CASE("ghz scenario") {
    CHECK(scenario_ghz(1).m_paper == 1.0);
    ScenarioResult r = scenario_ghz(9);
    CHECK(r.m_paper == 3.0);
    CHECK(scenario_ghz(100).m_paper == 10.0);
    // Reference read at 1/e on the binomial; superposition null at pi/n.
    CHECK(r.theta_sing ==
          doctest::Approx(2.0 * std::acos(std::exp(-1.0 / 9.0))).epsilon(1e-6));
    CHECK(r.theta_sup == doctest::Approx(kPi / 9.0).epsilon(1e-6));
    CHECK(r.m_numeric == doctest::Approx(2.651220199268532).epsilon(1e-5));
    CHECK(detail(r, "m_width") == doctest::Approx(3.0).epsilon(1e-9));
}

TEST_CASE("coherent cat scenario at the worked parameters") {
    ScenarioResult r = scenario_coherent_cat({3.1, 0.5});
    CHECK(std::fabs(r.m_paper - 2.973) <= 1e-3);
    CHECK(std::fabs(r.m_numeric - 2.676) <= 0.05);
    CHECK(r.theta_sing == doctest::Approx(2.0 * std::sqrt(2.0)).epsilon(1e-6));
    CHECK(r.theta_sup == doctest::Approx(1.0550371686889937).epsilon(1e-4));
    CHECK(detail(r, "norm") == doctest::Approx(1.9944402832170682).epsilon(1e-9));
    CHECK(-2.0 * std::log(detail(r, "decoherence_factor")) ==
          doctest::Approx(r.m_paper * r.m_paper).epsilon(1e-9));
}

TEST_CASE("cat macroscopality grows with amplitude and opening angle") {
    ScenarioResult base = scenario_coherent_cat({3.1, 0.5});
    ScenarioResult smaller = scenario_coherent_cat({2.0, 0.5});
    ScenarioResult narrower = scenario_coherent_cat({3.1, 0.4});
    CHECK(smaller.m_paper < base.m_paper);
    CHECK(smaller.m_numeric < base.m_numeric);
    CHECK(narrower.m_paper < base.m_paper);
    CHECK(narrower.m_numeric < base.m_numeric);
}

TEST_CASE("unresolvable cat components are rejected") {
    CHECK_THROWS_AS(scenario_coherent_cat({0.6, 0.5}), InvalidSeparation);
}

TEST_CASE("molecule scenario at the published geometry") {
    ScenarioResult r = scenario_molecule(MoleculeParams{});
    CHECK(std::fabs(detail(r, "x_single_m") - 63e-6) <= 1e-6);
    CHECK(std::fabs(r.m_paper - 5.25) <= 0.05);
    CHECK(std::fabs(r.m_numeric - 4.0) <= 1e-3);
    CHECK(detail(r, "m_model") == doctest::Approx(4.0).epsilon(1e-3));
    CHECK(detail(r, "u_zero_single") ==
          doctest::Approx(2.0 * kPi / 50e-9).epsilon(1e-6));
    CHECK(detail(r, "u_zero_double") ==
          doctest::Approx(kPi / 100e-9).epsilon(1e-6));
    // x = lambda L / d with the same inputs, checked end to end.
    PhysicalConstants c;
    const double lambda = c.h / (720.0 * c.amu * 220.0);
    CHECK(std::fabs(detail(r, "lambda_m") - lambda) / lambda < 1e-12);
    CHECK(std::fabs(detail(r, "x_single_m") - lambda * 1.25 / 50e-9) /
              detail(r, "x_single_m") < 1e-12);
}

TEST_CASE("molecule scenario at half the velocity") {
    MoleculeParams p;
    p.velocity = 110.0;
    p.measured_node = 24e-6;
    ScenarioResult r = scenario_molecule(p);
    CHECK(std::fabs(detail(r, "x_single_m") - 126e-6) <= 1.5e-6);
    CHECK(std::fabs(r.m_paper - 5.25) <= 0.05);
}

TEST_CASE("molecule headline falls back to the model node without a measurement") {
    MoleculeParams p;
    p.measured_node = std::nullopt;
    ScenarioResult r = scenario_molecule(p);
    CHECK(r.m_paper == doctest::Approx(detail(r, "m_model")).epsilon(1e-12));
    CHECK(r.m_paper == doctest::Approx(4.0).epsilon(1e-3));
}

TEST_CASE("molecule geometry validation") {
    MoleculeParams p;
    p.slit_width = 100e-9;
    CHECK_THROWS_AS(scenario_molecule(p), InvalidRange);
    MoleculeParams q;
    q.velocity = -220.0;
    CHECK_THROWS_AS(scenario_molecule(q), InvalidRange);
}

TEST_CASE("squid scenario from the ring potential") {
    ScenarioResult r = scenario_squid(SquidParams{});
    const double curvature = 2.0 * 645.0 + 4.0 * kPi * kPi * 76.0;
    CHECK(std::fabs(detail(r, "curvature_K") - curvature) / curvature < 1e-12);
    const double dispersion = 0.5 * std::sqrt(1.0 / curvature);
    CHECK(detail(r, "flux_dispersion") == doctest::Approx(dispersion).epsilon(1e-12));
    CHECK(std::fabs(detail(r, "flux_dispersion") - 7.6e-3) <= 2e-4);
    CHECK(std::fabs(r.m_paper - 33.0) <= 1.0);
    CHECK(r.m_paper == doctest::Approx(0.25 / dispersion).epsilon(1e-12));
    // Null of the two-point flux spectrum at 4 pi; 1/e of the gaussian at
    // sqrt(2) over the dispersion.
    CHECK(r.theta_sup == doctest::Approx(4.0 * kPi).epsilon(1e-6));
    CHECK(r.m_numeric ==
          doctest::Approx(std::sqrt(2.0) / (dispersion * 4.0 * kPi)).epsilon(1e-4));
    CHECK(detail(r, "m_width") == doctest::Approx(r.m_paper / 2.0).epsilon(1e-9));
}

TEST_CASE("squid potential and its exact curvature") {
    SquidParams p;
    CHECK(squid_potential_kelvin(p, 0.3) ==
          doctest::Approx(645.0 * 0.09 - 76.0 * std::cos(0.6 * kPi)).epsilon(1e-12));
    CHECK(squid_curvature_kelvin(p, 0.0) ==
          doctest::Approx(2.0 * 645.0 + 4.0 * kPi * kPi * 76.0).epsilon(1e-12));
    // Away from the origin the cosine contribution softens.
    CHECK(squid_curvature_kelvin(p, 0.25) == doctest::Approx(2.0 * 645.0).epsilon(1e-9));
    // Wider level spacing doubles the dispersion and halves the ratio.
    SquidParams wide;
    wide.level_spacing = 4.0;
    ScenarioResult base = scenario_squid(SquidParams{});
    ScenarioResult scaled = scenario_squid(wide);
    CHECK(scaled.m_paper == doctest::Approx(base.m_paper / 2.0).epsilon(1e-12));
    SquidParams bad;
    bad.e_josephson = -1.0;
    CHECK_THROWS_AS(scenario_squid(bad), InvalidRange);
}

TEST_CASE("mirror scenario") {
    ScenarioResult r = scenario_mirror();
    CHECK(r.m_paper == 1.0);
    CHECK(std::fabs(r.m_numeric - std::sqrt(2.0) / kPi) < 1e-4);
    ScenarioResult r3 = scenario_mirror(3.0);
    CHECK(r3.m_paper == 3.0);
    CHECK(std::fabs(r3.m_numeric - 3.0 * std::sqrt(2.0) / kPi) < 1e-3);
    CHECK_THROWS_AS(scenario_mirror(0.0), InvalidSeparation);
    CHECK_THROWS_AS(scenario_mirror(-1.0), InvalidSeparation);
}

TEST_CASE("the six case-study rows are ordered and mutually consistent") {
    std::vector<ScenarioResult> rows = run_all_paper();
    REQUIRE(rows.size() == 6);
    const char* expected[] = {"coherent_cat", "fock_cat", "mirror",
                              "molecule",     "qubit",    "squid"};
    for (std::size_t i = 0; i < 6; ++i) {
        CHECK(rows[i].name == expected[i]);
        CHECK(rows[i].theta_sing > 0.0);
        CHECK(rows[i].theta_sup > 0.0);
        CHECK(rows[i].m_paper > 0.0);
        // The engine and headline conventions agree to better than a factor
        // of a few on every system.
        const double ratio = rows[i].m_numeric / rows[i].m_paper;
        CHECK(ratio >= 0.3);
        CHECK(ratio <= 3.0);
    }
}

TEST_CASE("physical constants are internally consistent") {
    PhysicalConstants c;
    CHECK(std::fabs(c.flux_quantum() * 2.0 * c.e_charge - c.h) / c.h < 1e-12);
    CHECK(c.hbar() == doctest::Approx(c.h / (2.0 * kPi)).epsilon(1e-15));
}
