#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numeric>

#include "lugeo/moment.hpp"
#include "lugeo/rng.hpp"
#include "lugeo/state.hpp"

using namespace lugeo;

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

PureState bell() {
    Vec amps(4);
    amps << 1, 0, 0, 1;
    return make_state({2, 2}, amps);
}

}  // namespace

TEST_CASE("make_state basis vector") {
    Vec amps = Vec::Zero(4);
    amps[0] = 1;
    const PureState v = make_state({2, 2}, amps);
    CHECK(v.amplitudes.norm() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::abs(v.amplitudes[0] - cxd(1, 0)) < 1e-15);
}

TEST_CASE("make_state forces normalization") {
    const PureState v = bell();
    CHECK(std::abs(v.amplitudes[0]) == doctest::Approx(kInvSqrt2));
    CHECK(std::abs(v.amplitudes[3]) == doctest::Approx(kInvSqrt2));
    CHECK(std::abs(v.amplitudes.squaredNorm() - 1.0) < 1e-12);
}

TEST_CASE("make_state two-qutrit diagonal profile") {
    Vec amps = Vec::Zero(9);
    amps[0] = 0.8;
    amps[4] = 0.6;
    const PureState v = make_state({3, 3}, amps);
    const SchmidtDecomposition sd = schmidt(v, 1e-9);
    CHECK(sd.coefficients[0] == doctest::Approx(0.8).epsilon(1e-12));
    CHECK(sd.coefficients[1] == doctest::Approx(0.6).epsilon(1e-12));
    CHECK(sd.coefficients[2] == doctest::Approx(0.0));
    CHECK(sd.multiplicities.m0 == 1);
    CHECK(sd.multiplicities.nonzero == std::vector<int>{1, 1});
}

TEST_CASE("make_state rejects bad input") {
    CHECK_THROWS_AS(make_state({2, 2}, Vec::Zero(4)), ZeroVector);
    CHECK_THROWS_AS(make_state({2, 2, 2}, Vec::Ones(7)), DimensionMismatch);
}

TEST_CASE("overlap basics") {
    Vec e00 = Vec::Zero(4), e11 = Vec::Zero(4);
    e00[0] = 1;
    e11[3] = 1;
    const PureState a = make_state({2, 2}, e00);
    const PureState b = make_state({2, 2}, e11);
    CHECK(std::abs(overlap(a, a) - cxd(1, 0)) < 1e-14);
    CHECK(std::abs(overlap(a, b)) < 1e-14);

    // <GHZ_3, |000>> by direct expansion
    Vec e000 = Vec::Zero(8);
    e000[0] = 1;
    const PureState basis = make_state({2, 2, 2}, e000);
    CHECK(std::abs(overlap(ghz(3), basis) - cxd(kInvSqrt2, 0)) < 1e-14);
}

TEST_CASE("overlap is conjugate-linear in the first slot") {
    const PureState u = random_state({2, 2}, 5);
    const PureState v = random_state({2, 2}, 6);
    PureState iu = u;
    iu.amplitudes *= cxd(0, 1);
    CHECK(std::abs(overlap(iu, v) - cxd(0, -1) * overlap(u, v)) < 1e-14);
}

TEST_CASE("projective distance") {
    const PureState u = random_state({2, 2}, 11);
    CHECK(projective_distance(u, u) == doctest::Approx(0.0));

    PureState rotated = u;
    rotated.amplitudes *= std::polar(1.0, 1.234);
    CHECK(projective_distance(u, rotated) < 1e-14);
    CHECK(projective_distance(rotated, u) < 1e-14);

    Vec e00 = Vec::Zero(4);
    e00[0] = 1;
    // |<00|Bell>|^2 = 1/2
    CHECK(projective_distance(make_state({2, 2}, e00), bell()) ==
          doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("schmidt of the Bell state") {
    const SchmidtDecomposition sd = schmidt(bell(), 1e-9);
    CHECK(sd.coefficients[0] == doctest::Approx(kInvSqrt2));
    CHECK(sd.coefficients[1] == doctest::Approx(kInvSqrt2));
    CHECK(sd.multiplicities.m0 == 0);
    CHECK(sd.multiplicities.nonzero == std::vector<int>{2});
}

TEST_CASE("schmidt of a product state") {
    Vec amps = Vec::Zero(9);
    amps[0] = 1;
    const SchmidtDecomposition sd = schmidt(make_state({3, 3}, amps), 1e-9);
    CHECK(sd.coefficients[0] == doctest::Approx(1.0));
    CHECK(sd.multiplicities.m0 == 2);
    CHECK(sd.multiplicities.nonzero == std::vector<int>{1});
}

TEST_CASE("schmidt of the maximally entangled two-qutrit state") {
    Vec amps = Vec::Zero(9);
    amps[0] = amps[4] = amps[8] = 1;
    const SchmidtDecomposition sd = schmidt(make_state({3, 3}, amps), 1e-9);
    for (int i = 0; i < 3; ++i)
        CHECK(sd.coefficients[i] == doctest::Approx(1.0 / std::sqrt(3.0)));
    CHECK(sd.multiplicities.m0 == 0);
    CHECK(sd.multiplicities.nonzero == std::vector<int>{3});
}

TEST_CASE("schmidt requires a square bipartite state") {
    CHECK_THROWS_AS(schmidt(ghz(3), 1e-9), NotBipartite);
}

TEST_CASE("schmidt round-trip on seeded random states") {
    for (int trial = 0; trial < 1000; ++trial) {
        const int n = trial % 2 == 0 ? 2 : 3;
        const PureState v = random_state({n, n}, 1000 + trial);
        const SchmidtDecomposition sd = schmidt(v, 1e-9);
        CHECK(std::abs(sd.coefficients.squaredNorm() - 1.0) < 1e-12);
        CHECK(sd.multiplicities.m0 +
                  std::accumulate(sd.multiplicities.nonzero.begin(),
                                  sd.multiplicities.nonzero.end(), 0) ==
              n);
        const PureState back = schmidt_reconstruct(sd);
        CHECK(projective_distance(v, back) < 1e-10);
        CHECK((sd.left_basis.adjoint() * sd.left_basis - Mat::Identity(n, n))
                  .cwiseAbs()
                  .maxCoeff() < 1e-10);
        CHECK((sd.right_basis.adjoint() * sd.right_basis - Mat::Identity(n, n))
                  .cwiseAbs()
                  .maxCoeff() < 1e-10);
    }
}

TEST_CASE("schmidt coefficients match both reduced spectra") {
    for (int trial = 0; trial < 50; ++trial) {
        const PureState v = random_state({3, 3}, 7000 + trial);
        const SchmidtDecomposition sd = schmidt(v, 1e-9);
        for (int k = 0; k < 2; ++k) {
            const Mat rho = reduced_density(v, k).matrix;
            Eigen::SelfAdjointEigenSolver<Mat> eig(rho, Eigen::EigenvaluesOnly);
            for (int j = 0; j < 3; ++j) {
                const double p2 = sd.coefficients[j] * sd.coefficients[j];
                CHECK(std::abs(p2 - eig.eigenvalues()[2 - j]) < 1e-10);
            }
        }
    }
}

TEST_CASE("schmidt eigen-route agrees with the SVD route") {
    for (int trial = 0; trial < 100; ++trial) {
        const int n = trial % 2 == 0 ? 2 : 4;
        const PureState v = random_state({n, n}, 4200 + trial);
        Mat coeff(n, n);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) coeff(a, b) = v.amplitudes[a * n + b];
        Eigen::JacobiSVD<Mat> svd(coeff);
        const SchmidtDecomposition sd = schmidt(v, 1e-9);
        for (int j = 0; j < n; ++j)
            CHECK(std::abs(sd.coefficients[j] - svd.singularValues()[j]) < 1e-10);
    }
}

TEST_CASE("ghz fixtures") {
    const PureState v3 = ghz(3);
    CHECK(std::abs(v3.amplitudes[0] - cxd(kInvSqrt2, 0)) < 1e-14);
    CHECK(std::abs(v3.amplitudes[7] - cxd(kInvSqrt2, 0)) < 1e-14);
    for (long long i = 1; i < 7; ++i) CHECK(std::abs(v3.amplitudes[i]) == 0.0);

    const SchmidtDecomposition sd = schmidt(ghz(2), 1e-9);
    CHECK(sd.coefficients[0] == doctest::Approx(kInvSqrt2));
    CHECK(sd.coefficients[1] == doctest::Approx(kInvSqrt2));

    for (int k = 0; k < 4; ++k) {
        const Mat rho = reduced_density(ghz(4), k).matrix;
        CHECK((rho - 0.5 * Mat::Identity(2, 2)).cwiseAbs().maxCoeff() < 1e-14);
    }
    CHECK_THROWS_AS(ghz(1), BadArity);
}

TEST_CASE("random_state determinism and norm") {
    const PureState a = random_state({2, 2}, 7);
    const PureState b = random_state({2, 2}, 7);
    CHECK((a.amplitudes - b.amplitudes).norm() == 0.0);

    const PureState c = random_state({2, 2, 2}, 1);
    CHECK(std::abs(c.amplitudes.squaredNorm() - 1.0) < 1e-12);
}

TEST_CASE("random_state matches the uniform second moment") {
    double acc = 0.0;
    const int samples = 10000;
    for (int s = 0; s < samples; ++s)
        acc += std::norm(random_state({2, 2}, 20000 + s).amplitudes[0]);
    CHECK(std::abs(acc / samples - 0.25) < 0.02);
}

TEST_CASE("permute_subsystems round trip") {
    const PureState v = random_state({2, 3, 2}, 99);
    const PureState w = permute_subsystems(v, {2, 0, 1});
    CHECK(w.dims == std::vector<int>{2, 2, 3});
    const PureState back = permute_subsystems(w, {1, 2, 0});
    CHECK((back.amplitudes - v.amplitudes).norm() < 1e-15);
}

TEST_CASE("apply_local keeps fidelity with unitaries") {
    Rng rng(3);
    const PureState v = random_state({2, 3}, 55);
    const std::vector<Mat> us{random_unitary(2, rng), random_unitary(3, rng)};
    const PureState w = apply_local(v, us);
    CHECK(std::abs(w.amplitudes.norm() - 1.0) < 1e-12);
    const std::vector<Mat> back{us[0].adjoint(), us[1].adjoint()};
    CHECK(projective_distance(apply_local(w, back), v) < 1e-12);
}
