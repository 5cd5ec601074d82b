// Construction and basic manipulation of pure qudit states: normalization,
// overlaps, Schmidt decomposition, GHZ and seeded random states.

#pragma once

#include <cstdint>
#include <vector>

#include "lugeo/types.hpp"

namespace lugeo {

// Normalizes to unit norm.  Throws ZeroVector when every amplitude is below
// 1e-14 and DimensionMismatch when sizes disagree.
PureState make_state(std::vector<int> dims, Vec amplitudes);

// <u, v>, conjugate-linear in the first argument.
cxd overlap(const PureState& u, const PureState& v);

// 1 - |<u,v>|^2, a metric on rays: zero iff [u] = [v].
double projective_distance(const PureState& u, const PureState& v);

// (|0..0> + |1..1>)/sqrt(2) on L qubits, L >= 2.
PureState ghz(int L);

// Amplitudes drawn as iid standard complex Gaussians, then normalized
// (uniform on the unit sphere).  Same seed, same bits.
PureState random_state(const std::vector<int>& dims, std::uint64_t seed);

struct SchmidtDecomposition {
    RVec coefficients;    // nonincreasing, sum of squares 1
    Mat left_basis;       // columns e_k
    Mat right_basis;      // columns f_k
    MultiplicityProfile multiplicities;
};

// Bipartite N x N Schmidt decomposition computed from the Hermitian
// eigendecomposition of the first reduced density (not an SVD; the two
// routes agreeing is a property test).  Coefficients equal within
// tol*max(1, p_1) are grouped in the multiplicity profile.
SchmidtDecomposition schmidt(const PureState& v, double tol = 1e-9);

// Sum_k p_k e_k x f_k as a state; test aid for the round-trip invariant.
PureState schmidt_reconstruct(const SchmidtDecomposition& sd);

// Reorder tensor factors: new factor j is old factor perm[j].
PureState permute_subsystems(const PureState& v, const std::vector<int>& perm);

// (op_0 x .. x op_{L-1}) v; per-factor operator sizes must match dims.
PureState apply_local(const PureState& v, const std::vector<Mat>& ops);

// Group a nonincreasing coefficient list into a multiplicity profile with
// threshold tol*max(1, top value).
MultiplicityProfile multiplicity_profile(const RVec& coeffs, double tol);

}  // namespace lugeo
