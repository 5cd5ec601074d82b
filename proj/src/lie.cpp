#include "lugeo/lie.hpp"

#include <cmath>

#include "lugeo/kernels.hpp"

namespace lugeo {

namespace {

void check_generator_matrix(const Mat& m) {
    if (m.rows() != m.cols())
        throw DimensionMismatch("generator matrices must be square");
    if ((m + m.adjoint()).cwiseAbs().maxCoeff() > 1e-12)
        throw DimensionMismatch("generator matrix is not anti-Hermitian");
    if (std::abs(m.trace()) > 1e-12)
        throw DimensionMismatch("generator matrix is not traceless");
}

}  // namespace

LocalGenerator make_local_generator(std::vector<std::pair<int, Mat>> terms,
                                    const std::vector<int>& dims) {
    std::vector<bool> used(dims.size(), false);
    for (const auto& [k, m] : terms) {
        if (k < 0 || k >= static_cast<int>(dims.size()))
            throw IndexOutOfRange("generator term addresses a missing factor");
        if (used[static_cast<size_t>(k)])
            throw DimensionMismatch("at most one term per factor");
        used[static_cast<size_t>(k)] = true;
        if (m.rows() != dims[static_cast<size_t>(k)])
            throw DimensionMismatch("term size does not match its factor");
        check_generator_matrix(m);
    }
    return LocalGenerator{std::move(terms)};
}

LocalGenerator single_factor_generator(int k, Mat m, const std::vector<int>& dims) {
    std::vector<std::pair<int, Mat>> terms;
    terms.emplace_back(k, std::move(m));
    return make_local_generator(std::move(terms), dims);
}

std::vector<Mat> su_basis(int N) {
    if (N < 2) throw BadArity("su basis needs N >= 2");
    std::vector<Mat> basis;
    basis.reserve(static_cast<size_t>(N) * N - 1);
    const cxd i1(0, 1);
    for (int i = 0; i < N; ++i) {
        for (int j = i + 1; j < N; ++j) {
            Mat sym = Mat::Zero(N, N);
            sym(i, j) = i1;
            sym(j, i) = i1;
            basis.push_back(sym);
            Mat asym = Mat::Zero(N, N);
            asym(i, j) = cxd(1, 0);
            asym(j, i) = cxd(-1, 0);
            basis.push_back(asym);
        }
    }
    for (int m = 1; m < N; ++m) {
        Mat diag = Mat::Zero(N, N);
        for (int i = 0; i < m; ++i) diag(i, i) = i1;
        diag(m, m) = -static_cast<double>(m) * i1;
        basis.push_back(diag);
    }
    return basis;
}

Mat embed_dense(const LocalGenerator& gen, const std::vector<int>& dims) {
    const long long total = space_dim(dims);
    Mat out = Mat::Zero(total, total);
    for (const auto& [k, m] : gen.terms) {
        if (m.rows() != dims[static_cast<size_t>(k)])
            throw DimensionMismatch("term size does not match its factor");
        const long long stride = factor_stride(dims, k);
        const int d = dims[static_cast<size_t>(k)];
        const long long blocks = total / (d * stride);
        for (long long blk = 0; blk < blocks; ++blk)
            for (long long r = 0; r < stride; ++r) {
                const long long base = blk * d * stride + r;
                for (int a = 0; a < d; ++a)
                    for (int b = 0; b < d; ++b)
                        out(base + a * stride, base + b * stride) += m(a, b);
            }
    }
    return out;
}

Vec apply_generator(const LocalGenerator& gen, const PureState& v) {
    for (const auto& [k, m] : gen.terms)
        if (k >= v.factors() || m.rows() != v.dims[static_cast<size_t>(k)])
            throw DimensionMismatch("generator does not fit the state");
    return kernels::apply_terms(v.dims, gen.terms, v.amplitudes);
}

TangentVector fundamental_field(const LocalGenerator& gen, const PureState& v) {
    Vec xv = apply_generator(gen, v);
    const cxd c = v.amplitudes.dot(xv);
    xv -= c * v.amplitudes;
    return TangentVector{v, std::move(xv)};
}

Mat commutator(const Mat& a, const Mat& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionMismatch("commutator needs equal shapes");
    return a * b - b * a;
}

Mat expm_antihermitian(const Mat& x) {
    // iX is Hermitian; exp(X) = V diag(exp(-i lambda)) V^+
    const Mat herm = cxd(0, 1) * x;
    Eigen::SelfAdjointEigenSolver<Mat> eig(herm);
    Vec phases(x.rows());
    for (int j = 0; j < x.rows(); ++j)
        phases[j] = std::polar(1.0, -eig.eigenvalues()[j]);
    return eig.eigenvectors() * phases.asDiagonal() * eig.eigenvectors().adjoint();
}

}  // namespace lugeo
