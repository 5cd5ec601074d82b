#include "lugeo/rng.hpp"

#include <cmath>

namespace lugeo {

double Rng::gaussian() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    // Box-Muller on two uniforms; u1 shifted away from 0 so log is finite.
    double u1 = 0.0;
    do {
        u1 = uniform();
    } while (u1 <= 0.0);
    const double u2 = uniform();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * M_PI * u2;
    spare_ = radius * std::sin(angle);
    have_spare_ = true;
    return radius * std::cos(angle);
}

Mat random_unitary(int n, Rng& rng) {
    Mat ginibre(n, n);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) ginibre(i, j) = rng.complex_gaussian();
    Eigen::HouseholderQR<Mat> qr(ginibre);
    Mat q = qr.householderQ();
    const Mat r = qr.matrixQR().triangularView<Eigen::Upper>();
    // normalize so the distribution is Haar, not just orthonormal
    for (int j = 0; j < n; ++j) {
        const cxd d = r(j, j);
        const double a = std::abs(d);
        q.col(j) *= (a > 0 ? d / a : cxd(1, 0));
    }
    return q;
}

Mat random_special_unitary(int n, Rng& rng) {
    Mat u = random_unitary(n, rng);
    const cxd det = u.determinant();
    // spread the det-correcting phase evenly over the columns
    const cxd phase = std::polar(1.0, -std::arg(det) / n);
    return phase * u;
}

}  // namespace lugeo
