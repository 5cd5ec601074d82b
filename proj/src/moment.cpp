#include "lugeo/moment.hpp"

#include <cmath>

#include "lugeo/kernels.hpp"
#include "lugeo/state.hpp"

namespace lugeo {

ReducedDensity reduced_density(const PureState& v, int k) {
    if (k < 0 || k >= v.factors())
        throw IndexOutOfRange("reduced_density: no such factor");
    Mat rho = kernels::reduced_density(v.dims, k, v.amplitudes.data());
    return ReducedDensity{k, std::move(rho)};
}

double MomentImage::max_norm() const {
    double best = 0.0;
    for (const Mat& c : components) best = std::max(best, c.norm());
    return best;
}

double moment_pairing(const PureState& v, const LocalGenerator& gen) {
    const Vec xv = apply_generator(gen, v);
    const cxd val = cxd(0, 0.5) * v.amplitudes.dot(xv);
    return val.real();
}

MomentImage moment_image(const PureState& v) {
    MomentImage img;
    img.components.reserve(v.dims.size());
    for (int k = 0; k < v.factors(); ++k) {
        Mat y = reduced_density(v, k).matrix;
        const int n = v.dims[static_cast<size_t>(k)];
        y -= Mat::Identity(n, n) / static_cast<double>(n);
        img.components.push_back(std::move(y));
    }
    return img;
}

double dual_pairing(const MomentImage& alpha, const LocalGenerator& gen) {
    cxd acc(0, 0);
    for (const auto& [k, m] : gen.terms) {
        if (k < 0 || k >= static_cast<int>(alpha.components.size()))
            throw DimensionMismatch("pairing: generator term has no component");
        const Mat& y = alpha.components[static_cast<size_t>(k)];
        if (y.rows() != m.rows())
            throw DimensionMismatch("pairing: component size mismatch");
        acc += (y * m).trace();
    }
    return (cxd(0, 0.5) * acc).real();
}

SortedTraceForm sorted_trace_form(const PureState& v, double tol) {
    const int L = v.factors();
    SortedTraceForm out;
    out.witnesses.reserve(static_cast<size_t>(L));
    out.spectra.reserve(static_cast<size_t>(L));
    out.blocks.reserve(static_cast<size_t>(L));

    for (int k = 0; k < L; ++k) {
        const int n = v.dims[static_cast<size_t>(k)];
        const Mat rho = reduced_density(v, k).matrix;
        Eigen::SelfAdjointEigenSolver<Mat> eig(rho);

        RVec evals(n);
        Mat vecs(n, n);
        for (int j = 0; j < n; ++j) {
            evals[j] = eig.eigenvalues()[n - 1 - j];
            vecs.col(j) = eig.eigenvectors().col(n - 1 - j);
        }
        // deterministic eigenvector phases
        for (int j = 0; j < n; ++j) {
            int arg_max = 0;
            double best = -1.0;
            for (int i = 0; i < n; ++i)
                if (std::abs(vecs(i, j)) > best) {
                    best = std::abs(vecs(i, j));
                    arg_max = i;
                }
            const cxd top = vecs(arg_max, j);
            if (std::abs(top) > 0) vecs.col(j) *= std::conj(top) / std::abs(top);
        }

        // rho = vecs diag(evals) vecs^+, so vecs^+ rotates factor k into the
        // eigenbasis and the transformed reduced density is diagonal sorted.
        out.witnesses.push_back(vecs.adjoint());
        out.spectra.push_back(evals);

        std::vector<int> blocks;
        const double thr = tol * std::max(1.0, evals[0]);
        int i = 0;
        while (i < n) {
            int j = i + 1;
            while (j < n && evals[j - 1] - evals[j] <= thr) ++j;
            blocks.push_back(j - i);
            i = j;
        }
        out.blocks.push_back(std::move(blocks));
    }

    out.state = apply_local(v, out.witnesses);
    return out;
}

bool in_cartan(const PureState& v, double tol) {
    for (int k = 0; k < v.factors(); ++k) {
        const Mat rho = reduced_density(v, k).matrix;
        for (int i = 0; i < rho.rows(); ++i)
            for (int j = 0; j < rho.cols(); ++j)
                if (i != j && std::abs(rho(i, j)) > tol) return false;
    }
    return true;
}

}  // namespace lugeo
