#pragma once

#include <optional>
#include <string>

#include "macroscopality/orthogonality.hpp"
#include "macroscopality/spectrum.hpp"

namespace macroscopality {

// One scenario read from a flat key = value file (a TOML subset: numbers,
// quoted strings, single-line numeric arrays, # comments).  Unknown keys,
// duplicates, and missing required keys are ConfigError.
struct LoadedScenario {
    std::string type;
    Spectrum sup;
    // Absent for the custom types, whose reference is derived from the
    // taller peak of sup on demand.
    std::optional<Spectrum> ref;
    Criterion criterion = Auto{};
    WidthKind width_kind = WidthKind::stddev;
    std::optional<double> theta_max;
};

LoadedScenario load_scenario(const std::string& path);

// The comparison spectrum for measurements: the configured one when the
// type fixes it, otherwise a normal matched to the taller peak of sup
// (sigma = peak FWHM / 2 sqrt(2 ln 2)); the fallback propagates NotBimodal.
Spectrum reference_for(const LoadedScenario& scenario);

}  // namespace macroscopality
