#pragma once

#include "macroscopality/states.hpp"

namespace macroscopality {

// |<alpha| e^{i theta a2} |alpha>| = exp(-theta^2/8), independent of alpha.
double coherent_self_overlap(double theta);

// Normalization of the coherent cat, 2 {1 + exp[-|a|^2 (1 - cos 2 phi)]
// cos(|a|^2 sin 2 phi)}; in (0, 4].
double coherent_cat_norm(const CoherentCatParams& p);

// Quadrature overlap of the evolved cat:
//   (2 e^{-theta^2/8} / norm) |cos(theta B) + R|,
// with B = |a| sin phi and R the residual component-overlap term.
double coherent_cat_overlap(const CoherentCatParams& p, double theta);

// Overlap of the evolved qubit superposition via the per-qubit transfer
// factors m_ab = c_a c_b e^{i theta/2} + s_a s_b e^{-i theta/2}:
//   |m++^N + m--^N + 2 m+-^N| / (2 (1 + cos^N eps)).
double qubit_overlap_closed(const QubitAngles& p, double theta);

// |<phi+|phi->|^N = |cos eps|^N.
double component_overlap_qubits(int n_qubits, double eps);

// Environment-induced suppression exp(-D^2/2) at superposition distance D;
// -2 ln of it recovers D^2, the square of the coherent cat's closed-form
// figure m_paper.
double decoherence_factor(double distance);

}  // namespace macroscopality
