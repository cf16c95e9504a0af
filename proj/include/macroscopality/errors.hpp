#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace macroscopality {

// Domain failures carry a stable kind string so callers (and the CLI's
// diagnostic stream) can report which contract was violated.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& what)
        : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}

    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

// A numeric argument is outside its allowed range.
struct InvalidRange : Error {
    explicit InvalidRange(const std::string& w) : Error("InvalidRange", w) {}
};

// Spectrum data violates a type invariant (weights, normalization, grid shape).
struct InvalidSpectrum : Error {
    explicit InvalidSpectrum(const std::string& w) : Error("InvalidSpectrum", w) {}
};

// The spectrum is a single point mass; widths and orthogonality are undefined.
struct Degenerate : Error {
    explicit Degenerate(const std::string& w) : Error("Degenerate", w) {}
};

// Peak detection did not find two maxima separated by a qualifying dip.
struct NotBimodal : Error {
    explicit NotBimodal(const std::string& w) : Error("NotBimodal", w) {}
};

// The overlap never meets the orthogonality criterion within the scan window.
struct NoOrthogonality : Error {
    explicit NoOrthogonality(const std::string& w) : Error("NoOrthogonality", w) {}
};

// A bimodal construction was asked for with coincident component positions.
struct InvalidSeparation : Error {
    explicit InvalidSeparation(const std::string& w) : Error("InvalidSeparation", w) {}
};

// A truncated series was cut before its tail became negligible.
struct CutoffTooSmall : Error {
    explicit CutoffTooSmall(const std::string& w) : Error("CutoffTooSmall", w) {}
};

// A density grid leaves more probability mass outside than tolerated.
struct GridTooNarrow : Error {
    explicit GridTooNarrow(const std::string& w) : Error("GridTooNarrow", w) {}
};

// Aperture intervals overlap.
struct OverlappingSlits : Error {
    explicit OverlappingSlits(const std::string& w) : Error("OverlappingSlits", w) {}
};

// A scenario/config file is structurally invalid.
struct ConfigError : Error {
    explicit ConfigError(const std::string& w) : Error("ConfigError", w) {}
};

}  // namespace macroscopality
