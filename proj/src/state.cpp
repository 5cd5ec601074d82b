#include "lugeo/state.hpp"

#include <algorithm>
#include <cmath>

#include "lugeo/kernels.hpp"
#include "lugeo/rng.hpp"

namespace lugeo {

namespace {

// Rotate eigenvector columns so the largest-modulus entry is real positive.
// Columns inside a degeneracy block (consecutive eigenvalues closer than
// group_tol) are left as the eigensolver produced them apart from the same
// phase fix, which is still deterministic.
void fix_column_phases(Mat& vecs) {
    for (int j = 0; j < vecs.cols(); ++j) {
        int arg_max = 0;
        double best = -1.0;
        for (int i = 0; i < vecs.rows(); ++i) {
            const double a = std::abs(vecs(i, j));
            if (a > best) {
                best = a;
                arg_max = i;
            }
        }
        const cxd top = vecs(arg_max, j);
        if (std::abs(top) > 0) vecs.col(j) *= std::conj(top) / std::abs(top);
    }
}

}  // namespace

PureState make_state(std::vector<int> dims, Vec amplitudes) {
    const long long expected = space_dim(dims);
    if (amplitudes.size() != expected)
        throw DimensionMismatch("amplitude count does not match factor dimensions");
    double max_abs = 0.0;
    for (long long i = 0; i < amplitudes.size(); ++i)
        max_abs = std::max(max_abs, std::abs(amplitudes[i]));
    if (max_abs < 1e-14) throw ZeroVector("cannot normalize the zero vector");
    amplitudes /= amplitudes.norm();
    return PureState{std::move(dims), std::move(amplitudes)};
}

cxd overlap(const PureState& u, const PureState& v) {
    if (u.dims != v.dims)
        throw DimensionMismatch("overlap requires identical factor dimensions");
    return u.amplitudes.dot(v.amplitudes);  // Eigen dot conjugates the left side
}

double projective_distance(const PureState& u, const PureState& v) {
    const double fid = std::norm(overlap(u, v));
    return std::max(0.0, 1.0 - fid);
}

PureState ghz(int L) {
    if (L < 2) throw BadArity("ghz requires at least two qubits");
    std::vector<int> dims(static_cast<size_t>(L), 2);
    Vec amps = Vec::Zero(1LL << L);
    const double w = 1.0 / std::sqrt(2.0);
    amps[0] = w;
    amps[(1LL << L) - 1] = w;
    return PureState{std::move(dims), std::move(amps)};
}

PureState random_state(const std::vector<int>& dims, std::uint64_t seed) {
    const long long total = space_dim(dims);
    Rng rng(seed);
    Vec amps(total);
    for (long long i = 0; i < total; ++i) amps[i] = rng.complex_gaussian();
    return make_state(dims, std::move(amps));
}

MultiplicityProfile multiplicity_profile(const RVec& coeffs, double tol) {
    const int n = static_cast<int>(coeffs.size());
    MultiplicityProfile prof;
    prof.N = n;
    if (n == 0) return prof;
    const double thr = tol * std::max(1.0, coeffs[0]);
    int i = 0;
    while (i < n && coeffs[i] > thr) {
        int j = i + 1;
        while (j < n && coeffs[j] > thr && coeffs[j - 1] - coeffs[j] <= thr) ++j;
        prof.nonzero.push_back(j - i);
        i = j;
    }
    prof.m0 = n - i;
    return prof;
}

SchmidtDecomposition schmidt(const PureState& v, double tol) {
    if (v.factors() != 2 || v.dims[0] != v.dims[1])
        throw NotBipartite("schmidt requires two factors of equal dimension");
    const int n = v.dims[0];

    // coefficient matrix C with v = sum_ab C(a,b) |a>|b>
    Eigen::Map<const Mat> cmat_rowmajor(v.amplitudes.data(), n, n);
    const Mat coeff = cmat_rowmajor.transpose();  // map is column-major

    const Mat rho_left = coeff * coeff.adjoint();
    Eigen::SelfAdjointEigenSolver<Mat> eig(rho_left);

    // descending order
    RVec evals(n);
    Mat left(n, n);
    for (int j = 0; j < n; ++j) {
        evals[j] = eig.eigenvalues()[n - 1 - j];
        left.col(j) = eig.eigenvectors().col(n - 1 - j);
    }
    fix_column_phases(left);

    SchmidtDecomposition sd;
    sd.coefficients = RVec(n);
    for (int j = 0; j < n; ++j)
        sd.coefficients[j] = std::sqrt(std::max(0.0, evals[j]));
    sd.multiplicities = multiplicity_profile(sd.coefficients, tol);
    sd.left_basis = left;

    const double zero_thr = tol * std::max(1.0, sd.coefficients[0]);
    sd.right_basis = Mat::Zero(n, n);
    int zeros = 0;
    for (int j = 0; j < n; ++j) {
        if (sd.coefficients[j] > zero_thr) {
            // f_j = C^T conj(e_j) / p_j
            sd.right_basis.col(j) =
                coeff.transpose() * left.col(j).conjugate() / sd.coefficients[j];
        } else {
            ++zeros;
        }
    }
    if (zeros > 0) {
        // complete the frame with the null space of the right reduced density
        const Mat rho_right = coeff.transpose() * coeff.conjugate();
        Eigen::SelfAdjointEigenSolver<Mat> eig_r(rho_right);
        Mat fill(n, zeros);
        for (int j = 0; j < zeros; ++j) fill.col(j) = eig_r.eigenvectors().col(j);
        fix_column_phases(fill);
        int at = 0;
        for (int j = 0; j < n; ++j)
            if (sd.coefficients[j] <= zero_thr) sd.right_basis.col(j) = fill.col(at++);
    }
    return sd;
}

PureState schmidt_reconstruct(const SchmidtDecomposition& sd) {
    const int n = static_cast<int>(sd.coefficients.size());
    const Mat coeff = sd.left_basis * sd.coefficients.asDiagonal() *
                      sd.right_basis.transpose();
    Vec amps(static_cast<long long>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) amps[a * n + b] = coeff(a, b);
    return make_state({n, n}, std::move(amps));
}

PureState permute_subsystems(const PureState& v, const std::vector<int>& perm) {
    const int L = v.factors();
    if (static_cast<int>(perm.size()) != L)
        throw DimensionMismatch("permutation length must equal factor count");
    std::vector<bool> seen(static_cast<size_t>(L), false);
    for (int p : perm) {
        if (p < 0 || p >= L || seen[static_cast<size_t>(p)])
            throw DimensionMismatch("not a permutation of the factors");
        seen[static_cast<size_t>(p)] = true;
    }
    std::vector<int> new_dims(static_cast<size_t>(L));
    for (int j = 0; j < L; ++j)
        new_dims[static_cast<size_t>(j)] = v.dims[static_cast<size_t>(perm[j])];
    Vec out(v.dim());
    MultiIndex old_idx;
    old_idx.indices.resize(static_cast<size_t>(L));
    for (long long flat = 0; flat < v.dim(); ++flat) {
        const MultiIndex new_idx = unflatten(new_dims, flat);
        for (int j = 0; j < L; ++j)
            old_idx.indices[static_cast<size_t>(perm[j])] =
                new_idx.indices[static_cast<size_t>(j)];
        out[flat] = v.amplitudes[flat_index(v.dims, old_idx)];
    }
    return PureState{std::move(new_dims), std::move(out)};
}

PureState apply_local(const PureState& v, const std::vector<Mat>& ops) {
    if (ops.size() != v.dims.size())
        throw DimensionMismatch("apply_local needs one operator per factor");
    for (size_t k = 0; k < ops.size(); ++k)
        if (ops[k].rows() != v.dims[k] || ops[k].cols() != v.dims[k])
            throw DimensionMismatch("operator size does not match its factor");
    Vec out = kernels::apply_product(v.dims, ops, v.amplitudes);
    // renormalize so the unit-norm invariant survives non-unitary factors
    return make_state(v.dims, std::move(out));
}

}  // namespace lugeo
