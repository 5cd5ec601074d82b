// Reduced density matrices, the moment map and its pairing with local
// generators, the sorted trace normal form and the Cartan (all-diagonal)
// predicate.

#pragma once

#include <vector>

#include "lugeo/lie.hpp"
#include "lugeo/types.hpp"

namespace lugeo {

struct ReducedDensity {
    int subsystem = 0;
    Mat matrix;  // Hermitian, PSD, trace 1
};

// Partial trace over every factor except k.  Convention:
// rho(a,b) = sum_rest v[(a,rest)] conj(v[(b,rest)]); the transposed
// convention appears in some treatments and differs only by complex
// conjugation, which no spectrum or verdict here depends on.
ReducedDensity reduced_density(const PureState& v, int k);

// Traceless parts rho_k - I/N_k, one per factor.  The dual pairing with a
// generator inserts the i/2 factor, see moment_pairing.
struct MomentImage {
    std::vector<Mat> components;

    // largest per-component Frobenius norm
    double max_norm() const;
};

// (i/2) <v, xi v> for the embedded anti-Hermitian generator; real by
// construction and equal to (i/2) sum_k tr(rho_k X_k).
double moment_pairing(const PureState& v, const LocalGenerator& gen);

MomentImage moment_image(const PureState& v);

// <alpha, gen> = (i/2) sum_k tr(alpha_k X_k): the same pairing evaluated on
// a stored moment image.
double dual_pairing(const MomentImage& alpha, const LocalGenerator& gen);

struct SortedTraceForm {
    PureState state;                       // (W_1 x .. x W_L) original
    std::vector<Mat> witnesses;            // the W_k above
    std::vector<RVec> spectra;             // per factor, nonincreasing
    std::vector<std::vector<int>> blocks;  // per factor, degeneracy block sizes
};

// Local-unitary normal form with every reduced density diagonal and
// nonincreasing.  Degeneracy blocks are grouped with threshold
// tol*max(1, top eigenvalue).
SortedTraceForm sorted_trace_form(const PureState& v, double tol = 1e-9);

// True iff every reduced density is diagonal within tol (absolute, entries
// of a trace-1 matrix).
bool in_cartan(const PureState& v, double tol = 1e-9);

}  // namespace lugeo
