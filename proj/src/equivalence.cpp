#include "lugeo/equivalence.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "lugeo/kernels.hpp"
#include "lugeo/orbit.hpp"
#include "lugeo/rng.hpp"

namespace lugeo {

namespace {

double wrap_angle(double a) {
    double y = std::fmod(a + M_PI, 2.0 * M_PI);
    if (y < 0) y += 2.0 * M_PI;
    return y - M_PI;
}

RVec sorted_spectrum(const PureState& v, int k) {
    const Mat rho = reduced_density(v, k).matrix;
    Eigen::SelfAdjointEigenSolver<Mat> eig(rho, Eigen::EigenvaluesOnly);
    const int n = static_cast<int>(rho.rows());
    RVec out(n);
    for (int j = 0; j < n; ++j) out[j] = eig.eigenvalues()[n - 1 - j];
    return out;
}

bool spectrum_nondegenerate(const RVec& spec, double gap_tol) {
    for (int j = 1; j < spec.size(); ++j)
        if (spec[j - 1] - spec[j] <= gap_tol) return false;
    return true;
}

EquivalenceVerdict equivalent(std::string method,
                              std::optional<std::vector<Mat>> witness = {}) {
    EquivalenceVerdict v;
    v.status = VerdictStatus::Equivalent;
    v.method = std::move(method);
    v.witness = std::move(witness);
    return v;
}

EquivalenceVerdict not_equivalent(std::string method, Certificate cert) {
    EquivalenceVerdict v;
    v.status = VerdictStatus::NotEquivalent;
    v.method = std::move(method);
    v.certificate = std::move(cert);
    return v;
}

EquivalenceVerdict inconclusive(std::string method, std::string reason) {
    EquivalenceVerdict v;
    v.status = VerdictStatus::Inconclusive;
    v.method = std::move(method);
    v.reason = std::move(reason);
    return v;
}

}  // namespace

const char* to_string(VerdictStatus s) {
    switch (s) {
        case VerdictStatus::Equivalent: return "equivalent";
        case VerdictStatus::NotEquivalent: return "not-equivalent";
        case VerdictStatus::Inconclusive: return "inconclusive";
    }
    return "?";
}

const char* to_string(CertificateKind k) {
    switch (k) {
        case CertificateKind::none: return "none";
        case CertificateKind::spectra_mismatch: return "spectra-mismatch";
        case CertificateKind::modulus_mismatch: return "modulus-mismatch";
        case CertificateKind::phase_inconsistent: return "phase-system-inconsistent";
        case CertificateKind::pair_schmidt_mismatch: return "pair-schmidt-mismatch";
    }
    return "?";
}

double witness_error(const PureState& x, const PureState& y,
                     const std::vector<Mat>& witness) {
    return projective_distance(apply_local(x, witness), y);
}

bool spectra_match(const PureState& x, const PureState& y, double tol,
                   Certificate* certificate) {
    if (x.dims != y.dims)
        throw DimensionMismatch("spectra_match requires identical dimensions");
    for (int k = 0; k < x.factors(); ++k) {
        const RVec sx = sorted_spectrum(x, k);
        const RVec sy = sorted_spectrum(y, k);
        if ((sx - sy).cwiseAbs().maxCoeff() > tol) {
            if (certificate) {
                certificate->kind = CertificateKind::spectra_mismatch;
                certificate->subsystem = k;
                certificate->spectrum_x = sx;
                certificate->spectrum_y = sy;
            }
            return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// phase system

PhaseSystem build_phase_system(const SortedTraceForm& xs,
                               const SortedTraceForm& ys, double support_cut) {
    const PureState& x = xs.state;
    const PureState& y = ys.state;
    if (x.dims != y.dims)
        throw DimensionMismatch("phase system needs identical dimensions");

    PhaseSystem sys;
    sys.col_offset.resize(x.dims.size());
    int cols = 0;
    for (size_t k = 0; k < x.dims.size(); ++k) {
        sys.col_offset[k] = cols;
        cols += x.dims[k];
    }
    sys.cols = cols + 1;  // one extra global-phase column

    for (long long flat = 0; flat < x.dim(); ++flat) {
        const double ax = std::abs(x.amplitudes[flat]);
        const double ay = std::abs(y.amplitudes[flat]);
        if (ax <= support_cut || ay <= support_cut) continue;
        const MultiIndex idx = unflatten(x.dims, flat);
        std::vector<long long> row(static_cast<size_t>(sys.cols), 0);
        for (size_t k = 0; k < x.dims.size(); ++k)
            row[static_cast<size_t>(sys.col_offset[k] + idx.indices[k])] = 1;
        row[static_cast<size_t>(sys.cols - 1)] = 1;
        sys.rows.push_back(std::move(row));
        sys.rhs.push_back(wrap_angle(std::arg(x.amplitudes[flat]) -
                                     std::arg(y.amplitudes[flat])));
        sys.row_indices.push_back(idx.indices);
    }
    return sys;
}

PhaseSolution solve_phase_system(const PhaseSystem& system, double angle_tol) {
    const int R = static_cast<int>(system.rows.size());
    const int C = system.cols;
    std::vector<std::vector<long long>> a = system.rows;
    std::vector<double> r = system.rhs;
    // unimodular row-operation tracker: kernel rows read off at the end
    std::vector<std::vector<long long>> u(static_cast<size_t>(R));
    for (int i = 0; i < R; ++i) {
        u[static_cast<size_t>(i)].assign(static_cast<size_t>(R), 0);
        u[static_cast<size_t>(i)][static_cast<size_t>(i)] = 1;
    }

    const auto add_multiple = [&](int dst, int src, long long q) {
        if (q == 0) return;
        for (int c = 0; c < C; ++c)
            a[static_cast<size_t>(dst)][static_cast<size_t>(c)] -=
                q * a[static_cast<size_t>(src)][static_cast<size_t>(c)];
        for (int c = 0; c < R; ++c)
            u[static_cast<size_t>(dst)][static_cast<size_t>(c)] -=
                q * u[static_cast<size_t>(src)][static_cast<size_t>(c)];
        r[static_cast<size_t>(dst)] -= static_cast<double>(q) * r[static_cast<size_t>(src)];
    };
    const auto swap_rows = [&](int i, int j) {
        if (i == j) return;
        std::swap(a[static_cast<size_t>(i)], a[static_cast<size_t>(j)]);
        std::swap(u[static_cast<size_t>(i)], u[static_cast<size_t>(j)]);
        std::swap(r[static_cast<size_t>(i)], r[static_cast<size_t>(j)]);
    };

    std::vector<int> pivot_cols;
    int top = 0;
    for (int c = 0; c < C && top < R; ++c) {
        // Euclidean elimination of column c below row `top`
        while (true) {
            int pivot = -1;
            long long best = 0;
            for (int i = top; i < R; ++i) {
                const long long val =
                    std::llabs(a[static_cast<size_t>(i)][static_cast<size_t>(c)]);
                if (val != 0 && (pivot < 0 || val < best)) {
                    pivot = i;
                    best = val;
                }
            }
            if (pivot < 0) break;
            swap_rows(top, pivot);
            bool clean = true;
            for (int i = top + 1; i < R; ++i) {
                const long long val =
                    a[static_cast<size_t>(i)][static_cast<size_t>(c)];
                if (val == 0) continue;
                add_multiple(i, top,
                             val / a[static_cast<size_t>(top)][static_cast<size_t>(c)]);
                if (a[static_cast<size_t>(i)][static_cast<size_t>(c)] != 0) clean = false;
            }
            if (clean) {
                pivot_cols.push_back(c);
                ++top;
                break;
            }
        }
    }
    const int rank = top;

    PhaseSolution sol;
    // left-kernel rows: zero incidence part, rhs must vanish modulo 2*pi
    for (int i = rank; i < R; ++i) {
        const double res = wrap_angle(r[static_cast<size_t>(i)]);
        if (std::abs(res) > angle_tol) {
            sol.consistent = false;
            sol.violated_cycle = u[static_cast<size_t>(i)];
            sol.residual = std::abs(res);
            return sol;
        }
    }

    sol.consistent = true;
    sol.values.assign(static_cast<size_t>(C), 0.0);
    for (int i = rank - 1; i >= 0; --i) {
        const int c = pivot_cols[static_cast<size_t>(i)];
        double acc = r[static_cast<size_t>(i)];
        for (int c2 = c + 1; c2 < C; ++c2)
            acc -= static_cast<double>(
                       a[static_cast<size_t>(i)][static_cast<size_t>(c2)]) *
                   sol.values[static_cast<size_t>(c2)];
        sol.values[static_cast<size_t>(c)] =
            acc / static_cast<double>(a[static_cast<size_t>(i)][static_cast<size_t>(c)]);
    }
    return sol;
}

EquivalenceVerdict diagonal_phase_match(const SortedTraceForm& xs,
                                        const SortedTraceForm& ys, double tol,
                                        double gap_tol, double angle_tol) {
    const PureState& x = xs.state;
    const PureState& y = ys.state;
    if (x.dims != y.dims)
        throw DimensionMismatch("diagonal_phase_match needs identical dimensions");
    for (const RVec& spec : xs.spectra)
        if (!spectrum_nondegenerate(spec, gap_tol))
            throw DegenerateSpectrum("a reduced spectrum is degenerate");
    for (const RVec& spec : ys.spectra)
        if (!spectrum_nondegenerate(spec, gap_tol))
            throw DegenerateSpectrum("a reduced spectrum is degenerate");

    // moduli must agree pointwise before phases mean anything
    for (long long flat = 0; flat < x.dim(); ++flat) {
        const double diff =
            std::abs(std::abs(x.amplitudes[flat]) - std::abs(y.amplitudes[flat]));
        if (diff > tol) {
            Certificate cert;
            cert.kind = CertificateKind::modulus_mismatch;
            cert.multi_index = unflatten(x.dims, flat).indices;
            cert.residual = diff;
            return not_equivalent("diagonal-phase", std::move(cert));
        }
    }

    const PhaseSystem sys = build_phase_system(xs, ys);
    const PhaseSolution sol = solve_phase_system(sys, angle_tol);
    if (!sol.consistent) {
        Certificate cert;
        cert.kind = CertificateKind::phase_inconsistent;
        cert.cycle = sol.violated_cycle;
        cert.support = sys.row_indices;
        cert.residual = sol.residual;
        return not_equivalent("diagonal-phase", std::move(cert));
    }

    // witness maps xs.state to ys.state: conjugate diagonal phases
    std::vector<Mat> witness;
    witness.reserve(x.dims.size());
    for (size_t k = 0; k < x.dims.size(); ++k) {
        const int n = x.dims[k];
        Mat d = Mat::Zero(n, n);
        for (int lvl = 0; lvl < n; ++lvl)
            d(lvl, lvl) = std::polar(
                1.0, -sol.values[static_cast<size_t>(sys.col_offset[k] + lvl)]);
        witness.push_back(std::move(d));
    }
    if (witness_error(x, y, witness) > 1e-8)
        return inconclusive("diagonal-phase",
                            "phase solution failed witness verification");
    return equivalent("diagonal-phase", std::move(witness));
}

// ---------------------------------------------------------------------------
// bipartite

EquivalenceVerdict bipartite_equiv(const PureState& x, const PureState& y,
                                   double tol) {
    if (x.factors() != 2 || y.factors() != 2)
        throw NotBipartite("bipartite_equiv needs two factors");
    if (x.dims != y.dims)
        throw DimensionMismatch("bipartite_equiv needs identical dimensions");
    const SchmidtDecomposition sx = schmidt(x, tol);
    const SchmidtDecomposition sy = schmidt(y, tol);
    // snap vanishing coefficients to zero: sqrt amplifies eigenvalue noise
    // on zero modes far above the coefficient tolerance
    RVec px = sx.coefficients, py = sy.coefficients;
    const double thr_x = tol * std::max(1.0, px[0]);
    const double thr_y = tol * std::max(1.0, py[0]);
    for (int i = 0; i < px.size(); ++i) {
        if (px[i] * px[i] <= thr_x) px[i] = 0;
        if (py[i] * py[i] <= thr_y) py[i] = 0;
    }
    if ((px - py).cwiseAbs().maxCoeff() > tol) {
        Certificate cert;
        cert.kind = CertificateKind::spectra_mismatch;
        cert.subsystem = 0;
        cert.spectrum_x = sx.coefficients.cwiseProduct(sx.coefficients);
        cert.spectrum_y = sy.coefficients.cwiseProduct(sy.coefficients);
        return not_equivalent("bipartite-schmidt", std::move(cert));
    }
    // map x's Schmidt frames onto y's
    std::vector<Mat> witness{sy.left_basis * sx.left_basis.adjoint(),
                             sy.right_basis * sx.right_basis.adjoint()};
    return equivalent("bipartite-schmidt", std::move(witness));
}

// ---------------------------------------------------------------------------
// three qubits

EquivalenceVerdict three_qubit_equiv(const PureState& x, const PureState& y,
                                     double tol, double gap_tol) {
    if (x.dims != y.dims)
        throw DimensionMismatch("three_qubit_equiv needs identical dimensions");
    if (x.factors() != 3 || x.dims != std::vector<int>{2, 2, 2})
        throw DimensionMismatch("three_qubit_equiv needs three qubits");

    int lead = -1;
    for (int k = 0; k < 3 && lead < 0; ++k)
        if (spectrum_nondegenerate(sorted_spectrum(x, k), gap_tol)) lead = k;
    if (lead < 0)
        throw AllSpectraDegenerate("no factor has a nondegenerate spectrum");

    std::vector<int> perm{lead};
    for (int k = 0; k < 3; ++k)
        if (k != lead) perm.push_back(k);
    const SortedTraceForm xs = sorted_trace_form(permute_subsystems(x, perm), tol);
    const SortedTraceForm ys = sorted_trace_form(permute_subsystems(y, perm), tol);

    const auto block_states = [&](const SortedTraceForm& form) {
        std::vector<std::pair<double, PureState>> blocks;
        for (int a = 0; a < 2; ++a) {
            const Vec b = form.state.amplitudes.segment(4 * a, 4);
            const double p = b.norm();
            if (p * p > tol)
                blocks.emplace_back(p, make_state({2, 2}, b / p));
            else
                blocks.emplace_back(p, PureState{});
        }
        return blocks;
    };
    const auto bx = block_states(xs);
    const auto by = block_states(ys);

    for (int pair = 0; pair < 2; ++pair) {
        const double px2 = bx[static_cast<size_t>(pair)].first *
                           bx[static_cast<size_t>(pair)].first;
        const double py2 = by[static_cast<size_t>(pair)].first *
                           by[static_cast<size_t>(pair)].first;
        if (std::abs(px2 - py2) > tol) {
            // block weights are the leading factor's spectrum
            Certificate cert;
            cert.kind = CertificateKind::spectra_mismatch;
            cert.subsystem = 0;
            cert.spectrum_x = xs.spectra[0];
            cert.spectrum_y = ys.spectra[0];
            return not_equivalent("three-qubit", std::move(cert));
        }
        if (px2 <= tol || py2 <= tol) continue;  // spectrally absent block
        const RVec sx =
            schmidt(bx[static_cast<size_t>(pair)].second, tol).coefficients;
        const RVec sy =
            schmidt(by[static_cast<size_t>(pair)].second, tol).coefficients;
        if ((sx - sy).cwiseAbs().maxCoeff() > tol) {
            Certificate cert;
            cert.kind = CertificateKind::pair_schmidt_mismatch;
            cert.subsystem = pair;
            cert.spectrum_x = sx;
            cert.spectrum_y = sy;
            return not_equivalent("three-qubit", std::move(cert));
        }
    }
    // the block criterion gives no constructive unitary
    return equivalent("three-qubit");
}

// ---------------------------------------------------------------------------
// zero moment

EquivalenceVerdict zero_moment_equiv(const PureState& x, const PureState& y,
                                     double tol) {
    if (x.dims != y.dims)
        throw DimensionMismatch("zero_moment_equiv needs identical dimensions");
    if (x.factors() != 3 || x.dims != std::vector<int>{2, 2, 2})
        throw DimensionMismatch("zero_moment_equiv applies to three qubits");
    const double nx = moment_image(x).max_norm();
    const double ny = moment_image(y).max_norm();
    if (nx <= tol && ny <= tol) return equivalent("zero-moment");
    if (nx <= tol || ny <= tol) {
        // one of the two sits away from zero; its spectra certify the split
        const PureState& off = nx <= tol ? y : x;
        int worst = 0;
        double worst_norm = -1.0;
        const MomentImage img = moment_image(off);
        for (int k = 0; k < 3; ++k)
            if (img.components[static_cast<size_t>(k)].norm() > worst_norm) {
                worst_norm = img.components[static_cast<size_t>(k)].norm();
                worst = k;
            }
        Certificate cert;
        cert.kind = CertificateKind::spectra_mismatch;
        cert.subsystem = worst;
        cert.spectrum_x = sorted_spectrum(x, worst);
        cert.spectrum_y = sorted_spectrum(y, worst);
        return not_equivalent("zero-moment", std::move(cert));
    }
    return inconclusive("zero-moment", "not zero-moment");
}

// ---------------------------------------------------------------------------
// optimizer oracle

namespace {

struct OracleProblem {
    const PureState& x;
    const PureState& y;
    std::vector<std::vector<Mat>> bases;  // su basis per factor
    int param_count = 0;
};

struct StartResult {
    double objective = 2.0;
    std::vector<Mat> unitaries;
};

double oracle_objective(const OracleProblem& prob, const std::vector<Mat>& us,
                        Vec* mapped = nullptr) {
    const Vec z = kernels::apply_product(prob.x.dims, us, prob.x.amplitudes);
    const cxd s = prob.y.amplitudes.dot(z);
    if (mapped) *mapped = z;
    return std::max(0.0, 1.0 - std::norm(s));
}

StartResult run_start(const OracleProblem& prob, std::uint64_t seed,
                      bool identity_start, long long eval_budget,
                      double target) {
    const int L = prob.x.factors();
    Rng rng(seed);
    std::vector<Mat> us(static_cast<size_t>(L));
    for (int k = 0; k < L; ++k) {
        const int n = prob.x.dims[static_cast<size_t>(k)];
        if (identity_start) {
            us[static_cast<size_t>(k)] = Mat::Identity(n, n);
        } else {
            us[static_cast<size_t>(k)] = random_special_unitary(n, rng);
        }
    }

    long long evals = 0;
    Vec z;
    double f = oracle_objective(prob, us, &z);
    ++evals;

    // descent in left-trivialized exponential coordinates with a
    // Barzilai-Borwein step and Armijo backtracking
    std::vector<double> grad(static_cast<size_t>(prob.param_count));
    std::vector<double> prev_grad;
    double prev_step = 0.0;
    double step = 0.5;

    while (evals < eval_budget && f > target * 1e-2) {
        const cxd s = prob.y.amplitudes.dot(z);
        double grad_norm_sq = 0.0;
        {
            size_t at = 0;
            for (int k = 0; k < L; ++k) {
                for (const Mat& xi : prob.bases[static_cast<size_t>(k)]) {
                    const Vec dz = kernels::apply_factor_op(prob.x.dims, k, xi, z);
                    const cxd ds = prob.y.amplitudes.dot(dz);
                    const double g = -2.0 * (std::conj(s) * ds).real();
                    grad[at++] = g;
                    grad_norm_sq += g * g;
                }
            }
        }
        ++evals;  // gradient pass priced like an objective evaluation
        if (grad_norm_sq < 1e-24) break;

        if (!prev_grad.empty()) {
            // BB2 step from the previous displacement -prev_step * prev_grad
            double sy = 0.0, yy = 0.0;
            for (size_t i = 0; i < grad.size(); ++i) {
                const double dy = grad[i] - prev_grad[i];
                sy += -prev_step * prev_grad[i] * dy;
                yy += dy * dy;
            }
            step = (sy > 1e-30 && yy > 1e-30)
                       ? std::clamp(sy / yy, 1e-4, 50.0)
                       : 1.0;
        }

        bool improved = false;
        for (int tries = 0; tries < 25 && evals < eval_budget; ++tries) {
            std::vector<Mat> trial(static_cast<size_t>(L));
            size_t at = 0;
            for (int k = 0; k < L; ++k) {
                const int n = prob.x.dims[static_cast<size_t>(k)];
                Mat dir = Mat::Zero(n, n);
                for (const Mat& xi : prob.bases[static_cast<size_t>(k)])
                    dir -= step * grad[at++] * xi;
                trial[static_cast<size_t>(k)] =
                    expm_antihermitian(dir) * us[static_cast<size_t>(k)];
            }
            Vec zt;
            const double ft = oracle_objective(prob, trial, &zt);
            ++evals;
            if (ft <= f - 1e-4 * step * grad_norm_sq) {
                us = std::move(trial);
                z = std::move(zt);
                f = ft;
                improved = true;
                break;
            }
            step *= 0.5;
            at = 0;
        }
        if (!improved) break;
        prev_grad = grad;
        prev_step = step;
    }
    return StartResult{f, std::move(us)};
}

}  // namespace

EquivalenceVerdict optimizer_oracle(const PureState& x, const PureState& y,
                                    const OracleOptions& options) {
    if (x.dims != y.dims)
        throw DimensionMismatch("optimizer_oracle needs identical dimensions");
    OracleProblem prob{x, y, {}, 0};
    for (int k = 0; k < x.factors(); ++k) {
        prob.bases.push_back(su_basis(x.dims[static_cast<size_t>(k)]));
        prob.param_count += static_cast<int>(prob.bases.back().size());
    }

    const int starts = std::max(1, options.starts);
    const long long per_start = std::max<long long>(8, options.budget / starts);
    std::vector<StartResult> results(static_cast<size_t>(starts));

#pragma omp parallel for schedule(dynamic)
    for (int s = 0; s < starts; ++s) {
        const std::uint64_t seed =
            options.seed * 0x9E3779B97F4A7C15ULL + 0xD1B54A32D192ED03ULL +
            static_cast<std::uint64_t>(s);
        results[static_cast<size_t>(s)] =
            run_start(prob, seed, s == 0, per_start, options.target);
    }

    // earlier starts win ties so the identity start's witness is preferred
    int best = 0;
    for (int s = 1; s < starts; ++s)
        if (results[static_cast<size_t>(s)].objective <
            results[static_cast<size_t>(best)].objective - 1e-14)
            best = s;

    EquivalenceVerdict verdict;
    verdict.method = "oracle";
    verdict.objective = results[static_cast<size_t>(best)].objective;
    if (verdict.objective < options.target) {
        verdict.status = VerdictStatus::Equivalent;
        verdict.witness = std::move(results[static_cast<size_t>(best)].unitaries);
    } else {
        verdict.status = VerdictStatus::Inconclusive;
        verdict.reason = "optimizer did not reach the target objective";
    }
    return verdict;
}

// ---------------------------------------------------------------------------
// dispatcher

EquivalenceVerdict decide(const PureState& x, const PureState& y, double tol,
                          long long budget, std::uint64_t seed) {
    if (x.dims != y.dims)
        throw DimensionMismatch("decide requires identical dimensions");

    Certificate cert;
    if (!spectra_match(x, y, tol, &cert))
        return not_equivalent("spectra", std::move(cert));

    if (x.factors() == 2 && x.dims[0] == x.dims[1])
        return bipartite_equiv(x, y, tol);

    constexpr double kGapTol = 1e-6;
    const SortedTraceForm xs = sorted_trace_form(x, tol);
    const SortedTraceForm ys = sorted_trace_form(y, tol);

    bool all_nondegenerate = true;
    bool some_nondegenerate = false;
    for (const RVec& spec : xs.spectra) {
        const bool nd = spectrum_nondegenerate(spec, kGapTol);
        all_nondegenerate = all_nondegenerate && nd;
        some_nondegenerate = some_nondegenerate || nd;
    }

    if (all_nondegenerate) {
        EquivalenceVerdict v = diagonal_phase_match(xs, ys, tol, kGapTol);
        if (v.status == VerdictStatus::Equivalent && v.witness) {
            // lift the sorted-form witness back to the original states
            std::vector<Mat> lifted;
            lifted.reserve(x.dims.size());
            for (size_t k = 0; k < x.dims.size(); ++k)
                lifted.push_back(ys.witnesses[k].adjoint() * (*v.witness)[k] *
                                 xs.witnesses[k]);
            if (witness_error(x, y, lifted) <= 1e-8) {
                v.witness = std::move(lifted);
            } else {
                return inconclusive("diagonal-phase",
                                    "witness lift failed verification");
            }
        }
        return v;
    }

    const bool qubits3 = x.factors() == 3 && x.dims == std::vector<int>{2, 2, 2};
    if (qubits3) {
        if (moment_image(x).max_norm() <= tol && moment_image(y).max_norm() <= tol)
            return zero_moment_equiv(x, y, tol);
        if (some_nondegenerate) return three_qubit_equiv(x, y, tol, kGapTol);
    }

    OracleOptions opt;
    opt.budget = budget;
    opt.seed = seed;
    return optimizer_oracle(x, y, opt);
}

}  // namespace lugeo
