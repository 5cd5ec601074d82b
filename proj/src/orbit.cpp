#include "lugeo/orbit.hpp"

#include <algorithm>
#include <cmath>

namespace lugeo {

namespace {

constexpr double kContainmentResidual = 1e-8;

RVec real_embedding(const Vec& w) {
    RVec out(2 * w.size());
    for (long long i = 0; i < w.size(); ++i) {
        out[i] = w[i].real();
        out[w.size() + i] = w[i].imag();
    }
    return out;
}

Vec complex_from_real(const RVec& r) {
    const long long n = r.size() / 2;
    Vec out(n);
    for (long long i = 0; i < n; ++i) out[i] = cxd(r[i], r[n + i]);
    return out;
}

// Relative cutoff with an absolute floor: inputs are unit states and O(1)
// basis matrices, so a top singular value at rounding level means the map
// is zero, not that noise deserves full rank.
int rank_with_cutoff(const RVec& singular_values, double tol) {
    if (singular_values.size() == 0) return 0;
    if (singular_values[0] < 1e-12) return 0;
    const double cutoff = tol * singular_values[0];
    int rank = 0;
    for (int i = 0; i < singular_values.size(); ++i)
        if (singular_values[i] > cutoff) ++rank;
    return rank;
}

// Real inner product on complex vectors viewed as real ones.
double rdot(const Vec& a, const Vec& b) { return a.dot(b).real(); }

// max over u of the residual of projecting u onto span (orthonormal).
double containment_residual(const std::vector<Vec>& space,
                            const std::vector<Vec>& span) {
    double worst = 0.0;
    for (const Vec& u : space) {
        Vec proj = Vec::Zero(u.size());
        for (const Vec& t : span) proj += rdot(t, u) * t;
        worst = std::max(worst, (u - proj).norm());
    }
    return worst;
}

LocalGenerator local_bracket(const MomentImage& alpha, const LocalGenerator& g1,
                             const LocalGenerator& g2) {
    const int L = static_cast<int>(alpha.components.size());
    std::vector<Mat> a(static_cast<size_t>(L)), b(static_cast<size_t>(L));
    std::vector<bool> has_a(static_cast<size_t>(L), false),
        has_b(static_cast<size_t>(L), false);
    for (const auto& [k, m] : g1.terms) {
        if (k < 0 || k >= L) throw DimensionMismatch("generator/image mismatch");
        a[static_cast<size_t>(k)] = m;
        has_a[static_cast<size_t>(k)] = true;
    }
    for (const auto& [k, m] : g2.terms) {
        if (k < 0 || k >= L) throw DimensionMismatch("generator/image mismatch");
        b[static_cast<size_t>(k)] = m;
        has_b[static_cast<size_t>(k)] = true;
    }
    LocalGenerator out;
    for (int k = 0; k < L; ++k) {
        if (!has_a[static_cast<size_t>(k)] || !has_b[static_cast<size_t>(k)])
            continue;  // cross-factor terms commute
        if (a[static_cast<size_t>(k)].rows() !=
            alpha.components[static_cast<size_t>(k)].rows())
            throw DimensionMismatch("generator term does not match component size");
        out.terms.emplace_back(
            k, commutator(a[static_cast<size_t>(k)], b[static_cast<size_t>(k)]));
    }
    return out;
}

}  // namespace

const char* to_string(OrbitClass c) {
    switch (c) {
        case OrbitClass::symplectic: return "symplectic";
        case OrbitClass::coisotropic_strict: return "coisotropic";
        case OrbitClass::lagrangian: return "lagrangian";
        case OrbitClass::isotropic_strict: return "isotropic";
        case OrbitClass::none: return "none";
    }
    return "?";
}

double fs_form(const PureState& v, const TangentVector& a,
               const TangentVector& b) {
    const auto attached = [&](const TangentVector& t) {
        return t.base.dims == v.dims &&
               (t.base.amplitudes - v.amplitudes).norm() <= 1e-10;
    };
    if (!attached(a) || !attached(b))
        throw BaseMismatch("tangent vectors are attached to different points");
    return a.rep.dot(b.rep).imag();
}

OrbitTangent orbit_tangent(const PureState& v, double tol) {
    const long long total = v.dim();
    std::vector<Vec> fields;
    for (int k = 0; k < v.factors(); ++k)
        for (const Mat& xi : su_basis(v.dims[static_cast<size_t>(k)]))
            fields.push_back(
                fundamental_field(single_factor_generator(k, xi, v.dims), v).rep);

    RMat stacked(2 * total, static_cast<long long>(fields.size()));
    for (size_t p = 0; p < fields.size(); ++p)
        stacked.col(static_cast<long long>(p)) = real_embedding(fields[p]);

    Eigen::JacobiSVD<RMat> svd(stacked, Eigen::ComputeThinU);
    const int rank = rank_with_cutoff(svd.singularValues(), tol);

    OrbitTangent out;
    out.dim = rank;
    out.basis.reserve(static_cast<size_t>(rank));
    for (int j = 0; j < rank; ++j)
        out.basis.push_back(complex_from_real(svd.matrixU().col(j)));
    return out;
}

int coadjoint_dim(const PureState& v, double tol) {
    const MomentImage img = moment_image(v);
    int total = 0;
    for (int k = 0; k < v.factors(); ++k) {
        const Mat& y = img.components[static_cast<size_t>(k)];
        const int n = v.dims[static_cast<size_t>(k)];
        const auto basis = su_basis(n);
        RMat cols(2 * n * n, static_cast<long long>(basis.size()));
        for (size_t p = 0; p < basis.size(); ++p) {
            const Mat c = commutator(basis[p], y);
            RVec flat(2 * n * n);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    flat[(i * n + j)] = c(i, j).real();
                    flat[n * n + (i * n + j)] = c(i, j).imag();
                }
            cols.col(static_cast<long long>(p)) = flat;
        }
        Eigen::JacobiSVD<RMat> svd(cols);
        total += rank_with_cutoff(svd.singularValues(), tol);
    }
    return total;
}

int degeneracy(const PureState& v, double tol) {
    return orbit_tangent(v, tol).dim - coadjoint_dim(v, tol);
}

OrbitReport classify(const PureState& v, double tol) {
    const long long total = v.dim();
    const OrbitTangent tangent = orbit_tangent(v, tol);

    // complex orthonormal basis of the orthocomplement of v
    const Eigen::HouseholderQR<Mat> qr(v.amplitudes);
    const Mat q = qr.householderQ();
    std::vector<Vec> full;
    full.reserve(static_cast<size_t>(2 * (total - 1)));
    for (long long j = 1; j < total; ++j) {
        full.push_back(q.col(j));
        full.push_back(cxd(0, 1) * q.col(j));
    }

    // omega(t_i, b_j) over the full projective tangent space
    RMat pairing(tangent.dim, static_cast<long long>(full.size()));
    for (int i = 0; i < tangent.dim; ++i)
        for (size_t j = 0; j < full.size(); ++j)
            pairing(i, static_cast<long long>(j)) =
                tangent.basis[static_cast<size_t>(i)].dot(full[j]).imag();

    Eigen::JacobiSVD<RMat> svd(pairing, Eigen::ComputeFullV);
    const int rank = rank_with_cutoff(svd.singularValues(), tol);
    const int perp_dim = static_cast<int>(full.size()) - rank;

    std::vector<Vec> perp;
    perp.reserve(static_cast<size_t>(perp_dim));
    for (int j = rank; j < static_cast<int>(full.size()); ++j) {
        Vec u = Vec::Zero(total);
        for (size_t b = 0; b < full.size(); ++b)
            u += svd.matrixV()(static_cast<long long>(b), j) * full[b];
        perp.push_back(std::move(u));
    }

    const bool perp_in_t =
        containment_residual(perp, tangent.basis) <= kContainmentResidual;
    const bool t_in_perp =
        containment_residual(tangent.basis, perp) <= kContainmentResidual;

    OrbitReport report;
    report.dim_orbit = tangent.dim;
    report.dim_coadjoint = coadjoint_dim(v, tol);
    report.degeneracy = report.dim_orbit - report.dim_coadjoint;
    report.dim_orthocomplement = perp_dim;
    report.tol_used = tol;
    if (perp_in_t && t_in_perp)
        report.classification = OrbitClass::lagrangian;
    else if (perp_in_t)
        report.classification = report.degeneracy == 0 ? OrbitClass::symplectic
                                                       : OrbitClass::coisotropic_strict;
    else if (t_in_perp)
        report.classification = OrbitClass::isotropic_strict;
    else
        report.classification = report.degeneracy == 0 ? OrbitClass::symplectic
                                                       : OrbitClass::none;
    return report;
}

BipartiteDims bipartite_dims(const MultiplicityProfile& profile) {
    const int n = profile.N;
    if (n < 2) throw InvalidProfile("profile needs N >= 2");
    if (profile.m0 < 0) throw InvalidProfile("negative zero count");
    if (profile.m0 >= n) throw InvalidProfile("all coefficients vanish");
    int sum = profile.m0;
    int sum_sq = 0;
    for (int m : profile.nonzero) {
        if (m < 1) throw InvalidProfile("multiplicities must be positive");
        sum += m;
        sum_sq += m * m;
    }
    if (sum != n) throw InvalidProfile("multiplicities must sum to N");

    const int m0_sq = profile.m0 * profile.m0;
    BipartiteDims out;
    out.dim_orbit = 2 * n * n - 2 * m0_sq - sum_sq - 1;
    out.dim_coadjoint = 2 * n * n - 2 * (m0_sq + sum_sq);
    out.dim_orthocomplement = 2 * m0_sq + sum_sq - 1;
    out.degeneracy = sum_sq - 1;
    return out;
}

double kks_form(const MomentImage& alpha, const LocalGenerator& g1,
                const LocalGenerator& g2) {
    return dual_pairing(alpha, local_bracket(alpha, g1, g2));
}

}  // namespace lugeo
