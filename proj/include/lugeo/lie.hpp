// Anti-Hermitian traceless generator bases, their embedding into the local
// algebra acting on the full tensor space, fundamental vector fields and
// commutators.

#pragma once

#include <utility>
#include <vector>

#include "lugeo/types.hpp"

namespace lugeo {

// Element of su(N_1) + .. + su(N_L) as a sparse list of per-factor terms,
// at most one term per factor.  Matrices are anti-Hermitian traceless; the
// Hermitian-observable convention differs from this one by a factor of i and
// is applied only at the moment-map pairing boundary.
struct LocalGenerator {
    std::vector<std::pair<int, Mat>> terms;
};

// Validates anti-Hermiticity and tracelessness (1e-12) and term uniqueness.
LocalGenerator make_local_generator(std::vector<std::pair<int, Mat>> terms,
                                    const std::vector<int>& dims);

// Convenience: a single-factor generator.
LocalGenerator single_factor_generator(int k, Mat m, const std::vector<int>& dims);

// Basis of su(N): for each pair i<j the two off-diagonal generators
// i(E_ij + E_ji) and (E_ij - E_ji), then the N-1 diagonal generators
// i*diag(1,..,1,-m,0,..,0).  Pairwise orthogonal under -tr(AB); for N = 2
// this is (i sigma_x, i sigma_y, i sigma_z).
std::vector<Mat> su_basis(int N);

// Dense sum_k I x .. x X_k x .. x I on the full space.
Mat embed_dense(const LocalGenerator& gen, const std::vector<int>& dims);

// Matrix-free action of the embedded generator on a state vector.
Vec apply_generator(const LocalGenerator& gen, const PureState& v);

// Tangent vector at [base]: rep is complex-orthogonal to the base amplitudes.
struct TangentVector {
    PureState base;
    Vec rep;
};

// rep = xi v - <v, xi v> v with xi the embedded generator.
TangentVector fundamental_field(const LocalGenerator& gen, const PureState& v);

Mat commutator(const Mat& a, const Mat& b);

// exp(X) for anti-Hermitian X, computed through the eigendecomposition of
// iX so the result is exactly unitary up to rounding.
Mat expm_antihermitian(const Mat& x);

}  // namespace lugeo
