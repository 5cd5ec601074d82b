#include "lugeo/verifiers.hpp"

#include <cmath>

#include "lugeo/moment.hpp"
#include "lugeo/state.hpp"

namespace lugeo {

namespace {

Mat kron(const Mat& a, const Mat& b) {
    Mat out(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) =
                a(i, j) * b;
    return out;
}

Mat pauli(char label) {
    Mat m(2, 2);
    switch (label) {
        case 'x': m << 0, 1, 1, 0; break;
        case 'y': m << cxd(0, 0), cxd(0, -1), cxd(0, 1), cxd(0, 0); break;
        case 'z': m << 1, 0, 0, -1; break;
        case '0': m = Mat::Identity(2, 2); break;
        default: throw BadWord("word labels must be one of x, y, z, 0");
    }
    return m;
}

// Schmidt coefficients read off a diagonal-support bipartite state.
RVec diagonal_coefficients(const PureState& v) {
    if (v.factors() != 2 || v.dims[0] != v.dims[1])
        throw NotBipartite("a Schmidt-form state has two equal factors");
    const int n = v.dims[0];
    RVec p(n);
    for (int j = 0; j < n; ++j) {
        for (int b = 0; b < n; ++b)
            if (b != j && std::abs(v.amplitudes[j * n + b]) > 1e-12)
                throw BadProfile("state is not in Schmidt form");
        p[j] = std::abs(v.amplitudes[j * n + j]);
    }
    return p;
}

Mat symmetric_pair(int n, int i, int j) {  // E_ij + E_ji
    Mat m = Mat::Zero(n, n);
    m(i, j) += 1;
    m(j, i) += 1;
    return m;
}

Mat antisymmetric_pair(int n, int i, int j) {  // i (E_ij - E_ji)
    Mat m = Mat::Zero(n, n);
    m(i, j) += cxd(0, 1);
    m(j, i) += cxd(0, -1);
    return m;
}

}  // namespace

Mat obstruction_probe(int N, int m0) {
    if (m0 < 1 || m0 > N - 1)
        throw BadProfile("probe needs 1 <= m0 <= N-1");
    Mat a = Mat::Zero(N, N);
    const double tail = -static_cast<double>(N - m0) / static_cast<double>(m0);
    for (int j = 0; j < N - m0; ++j) a(j, j) = cxd(0, 1);
    for (int j = N - m0; j < N; ++j) a(j, j) = cxd(0, tail);
    return a;
}

std::pair<TangentVector, TangentVector> vanishing_pair_fields(
    const PureState& v, int k, int l) {
    const RVec p = diagonal_coefficients(v);
    const int n = v.dims[0];
    if (k <= 0 || k >= n || l <= 0 || l >= n)
        throw IndexOutOfRange("pair indices must avoid the leading slot");
    const double thr = 1e-9 * std::max(1.0, p[0]);
    if (p[k] > thr || p[l] > thr)
        throw NonvanishingCoefficient("both referenced coefficients must vanish");
    if (p[0] <= thr)
        throw NonvanishingCoefficient("leading coefficient must not vanish");

    const Mat y0k = symmetric_pair(n, 0, k);
    const Mat x0l = antisymmetric_pair(n, 0, l);
    const Mat y0l = symmetric_pair(n, 0, l);
    const cxd i1(0, 1);

    // i Y_{0k} (x) X_{0l} moves v onto e_k x f_l; the Y (x) Y partner onto
    // i e_k x f_l.
    const auto field_of = [&](const Mat& second) {
        Vec xv = i1 * (kron(y0k, second) * v.amplitudes);
        xv -= v.amplitudes.dot(xv) * v.amplitudes;
        return TangentVector{v, std::move(xv)};
    };

    return {field_of(x0l), field_of(y0l)};
}

ObstructionResult obstruction(const PureState& v,
                              const VanishingPairDirection& dir, double h) {
    if (h < 1e-5 || h > 1e-2)
        throw StepOutOfRange("step must lie in [1e-5, 1e-2]");
    if (dir.base.dims != v.dims ||
        (dir.base.amplitudes - v.amplitudes).norm() > 1e-12)
        throw BaseMismatch("direction is attached to a different state");
    const RVec p = diagonal_coefficients(v);
    const int n = v.dims[0];
    const double thr = 1e-9 * std::max(1.0, p[0]);

    int m0 = 0;
    for (int j = 0; j < n; ++j)
        if (p[j] <= thr) ++m0;
    if (m0 == 0) throw BadProfile("no vanishing coefficients, nothing to probe");

    double weight = 0.0;
    for (const auto& [pair, ab] : dir.coefficients) {
        const auto [k, l] = pair;
        if (k < 0 || k >= n || l < 0 || l >= n)
            throw IndexOutOfRange("pair index out of range");
        if (p[k] > thr || p[l] > thr)
            throw NonvanishingCoefficient("direction touches a nonvanishing pair");
        weight += ab.first * ab.first + ab.second * ab.second;
    }
    if (weight <= 0.0)
        throw NonvanishingCoefficient("direction has no nonzero coefficient");

    const double alpha = static_cast<double>(n) / static_cast<double>(m0);
    const cxd i1(0, 1);

    // B generates exactly sum (a e_k x f_l + b i e_k x f_l) at v.
    Mat big_b = Mat::Zero(v.dim(), v.dim());
    for (const auto& [pair, ab] : dir.coefficients) {
        const auto [k, l] = pair;
        big_b += (ab.first / p[0]) * i1 * kron(symmetric_pair(n, 0, k),
                                               antisymmetric_pair(n, 0, l));
        big_b += (ab.second / p[0]) * i1 * kron(symmetric_pair(n, 0, k),
                                                symmetric_pair(n, 0, l));
    }

    const LocalGenerator probe =
        single_factor_generator(1, obstruction_probe(n, m0), v.dims);
    const Mat big_a = embed_dense(probe, v.dims);

    // analytic: (i/2) <v, [[A, B], B] v>
    const Mat double_comm = commutator(commutator(big_a, big_b), big_b);
    ObstructionResult out;
    out.alpha = alpha;
    out.analytic =
        (cxd(0, 0.5) * v.amplitudes.dot(double_comm * v.amplitudes)).real();

    // finite differences along the unitary curve, Richardson-refined
    const auto pairing_at = [&](double t) {
        const Mat u = expm_antihermitian(t * big_b);
        PureState w{v.dims, u * v.amplitudes};
        return moment_pairing(w, probe);
    };
    const auto central = [&](double step) {
        return (pairing_at(step) - 2.0 * pairing_at(0.0) + pairing_at(-step)) /
               (step * step);
    };
    const double coarse = central(h);
    const double fine = central(h / 2);
    out.finite_difference = (4.0 * fine - coarse) / 3.0;
    return out;
}

bool ghz_fiber_check(int L, const std::vector<char>& word,
                     const std::vector<double>& t_samples) {
    if (L < 3) throw BadWord("fiber check needs at least three qubits");
    if (static_cast<int>(word.size()) != L)
        throw BadWord("word length must equal the qubit count");

    Mat big_b = pauli(word[0]);
    for (int k = 1; k < L; ++k) big_b = kron(big_b, pauli(word[static_cast<size_t>(k)]));
    big_b *= cxd(0, 1);

    const PureState v = ghz(L);
    std::vector<LocalGenerator> locals;
    for (int k = 0; k < L; ++k)
        for (char b : {'x', 'y', 'z'})
            locals.push_back(single_factor_generator(k, cxd(0, 1) * pauli(b), v.dims));

    // field of B must be omega-orthogonal to every orbit direction
    const Vec bv = big_b * v.amplitudes;
    for (const LocalGenerator& gen : locals) {
        const Vec av = apply_generator(gen, v);
        const Vec abv = apply_generator(gen, PureState{v.dims, bv});
        const Vec bav = big_b * av;
        const cxd val = v.amplitudes.dot(abv - bav);  // <v, [A,B] v>
        if (std::abs(val) > 1e-12) return false;
    }

    for (double t : t_samples) {
        const Mat u = expm_antihermitian(t * big_b);
        const PureState w{v.dims, u * v.amplitudes};
        for (const LocalGenerator& gen : locals) {
            const Vec aw = apply_generator(gen, w);
            if (std::abs(w.amplitudes.dot(aw)) > 1e-10) return false;
        }
    }
    return true;
}

}  // namespace lugeo
