#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "lugeo/lie.hpp"
#include "lugeo/orbit.hpp"
#include "lugeo/rng.hpp"
#include "lugeo/state.hpp"

using namespace lugeo;

namespace {

Mat pauli_x() {
    Mat m(2, 2);
    m << 0, 1, 1, 0;
    return m;
}
Mat pauli_y() {
    Mat m(2, 2);
    m << cxd(0, 0), cxd(0, -1), cxd(0, 1), cxd(0, 0);
    return m;
}
Mat pauli_z() {
    Mat m(2, 2);
    m << 1, 0, 0, -1;
    return m;
}

LocalGenerator random_generator(const std::vector<int>& dims, Rng& rng) {
    std::vector<std::pair<int, Mat>> terms;
    for (int k = 0; k < static_cast<int>(dims.size()); ++k) {
        const auto basis = su_basis(dims[static_cast<size_t>(k)]);
        Mat m = Mat::Zero(dims[static_cast<size_t>(k)], dims[static_cast<size_t>(k)]);
        for (const Mat& xi : basis) m += rng.gaussian() * xi;
        terms.emplace_back(k, m);
    }
    return make_local_generator(std::move(terms), dims);
}

}  // namespace

TEST_CASE("su(2) basis is i times the Pauli matrices") {
    const auto basis = su_basis(2);
    REQUIRE(basis.size() == 3);
    const cxd i1(0, 1);
    CHECK((basis[0] - i1 * pauli_x()).cwiseAbs().maxCoeff() < 1e-15);
    CHECK((basis[1] - i1 * pauli_y()).cwiseAbs().maxCoeff() < 1e-15);
    CHECK((basis[2] - i1 * pauli_z()).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("su(N) basis: anti-Hermitian, traceless, trace-orthogonal") {
    for (int n : {2, 3, 4}) {
        const auto basis = su_basis(n);
        REQUIRE(static_cast<int>(basis.size()) == n * n - 1);
        for (const Mat& m : basis) {
            CHECK((m + m.adjoint()).cwiseAbs().maxCoeff() == 0.0);
            CHECK(std::abs(m.trace()) == 0.0);
        }
        // Gram matrix of -tr(AB) must be diagonal with positive diagonal
        for (size_t a = 0; a < basis.size(); ++a)
            for (size_t b = 0; b < basis.size(); ++b) {
                const double g = -(basis[a] * basis[b]).trace().real();
                if (a == b)
                    CHECK(g > 0);
                else
                    CHECK(std::abs(g) < 1e-14);
            }
    }
    CHECK_THROWS_AS(su_basis(1), BadArity);
}

TEST_CASE("embed places single factors correctly") {
    const std::vector<int> dims{2, 2};
    const cxd i1(0, 1);
    const LocalGenerator gz = single_factor_generator(0, i1 * pauli_z(), dims);
    const Mat dense = embed_dense(gz, dims);

    Mat expect = Mat::Zero(4, 4);
    expect(0, 0) = expect(1, 1) = i1;
    expect(2, 2) = expect(3, 3) = -i1;  // i sigma_z (x) I
    CHECK((dense - expect).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("embed of two sigma_x terms acts as expected on |00>") {
    const std::vector<int> dims{2, 2};
    const cxd i1(0, 1);
    const LocalGenerator gen = make_local_generator(
        {{0, i1 * pauli_x()}, {1, i1 * pauli_x()}}, dims);
    Vec e00 = Vec::Zero(4);
    e00[0] = 1;
    const PureState v = make_state(dims, e00);
    const Vec out = apply_generator(gen, v);
    // i(|10> + |01>)
    CHECK(std::abs(out[2] - i1) < 1e-14);
    CHECK(std::abs(out[1] - i1) < 1e-14);
    CHECK(std::abs(out[0]) < 1e-14);
    CHECK(std::abs(out[3]) < 1e-14);
}

TEST_CASE("embed of the zero generator is zero") {
    const std::vector<int> dims{2, 3};
    const LocalGenerator zero = make_local_generator({}, dims);
    CHECK(embed_dense(zero, dims).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("fundamental field at GHZ_3 via sigma_z") {
    const PureState v = ghz(3);
    const cxd i1(0, 1);
    const TangentVector t = fundamental_field(
        single_factor_generator(0, i1 * pauli_z(), v.dims), v);
    // i(|000> - |111>)/sqrt(2)
    const double w = 1.0 / std::sqrt(2.0);
    CHECK(std::abs(t.rep[0] - i1 * w) < 1e-14);
    CHECK(std::abs(t.rep[7] + i1 * w) < 1e-14);
    CHECK(std::abs(v.amplitudes.dot(t.rep)) < 1e-12);
}

TEST_CASE("generator acting as i times identity gives the zero field") {
    // diag(i, i, -2i) on the second factor of (|00>+|11>)/sqrt(2) in C3 x C3
    Vec amps = Vec::Zero(9);
    amps[0] = amps[4] = 1;
    const PureState v = make_state({3, 3}, amps);
    Mat a = Mat::Zero(3, 3);
    a(0, 0) = a(1, 1) = cxd(0, 1);
    a(2, 2) = cxd(0, -2);
    const TangentVector t =
        fundamental_field(single_factor_generator(1, a, v.dims), v);
    CHECK(t.rep.norm() < 1e-12);
}

TEST_CASE("fundamental field already orthogonal for sigma_x on |00>") {
    Vec e00 = Vec::Zero(4);
    e00[0] = 1;
    const PureState v = make_state({2, 2}, e00);
    const cxd i1(0, 1);
    const TangentVector t = fundamental_field(
        single_factor_generator(0, i1 * pauli_x(), v.dims), v);
    CHECK(std::abs(t.rep[2] - i1) < 1e-14);  // i|10>
    CHECK(t.rep.norm() == doctest::Approx(1.0));
}

TEST_CASE("fundamental field is linear in the generator") {
    const std::vector<int> dims{2, 2, 2};
    const PureState v = random_state(dims, 31);
    Rng rng(32);
    const LocalGenerator g1 = random_generator(dims, rng);
    const LocalGenerator g2 = random_generator(dims, rng);

    LocalGenerator sum;
    for (size_t k = 0; k < dims.size(); ++k)
        sum.terms.emplace_back(static_cast<int>(k),
                               g1.terms[k].second + g2.terms[k].second);
    const Vec lhs = fundamental_field(sum, v).rep;
    const Vec rhs =
        fundamental_field(g1, v).rep + fundamental_field(g2, v).rep;
    CHECK((lhs - rhs).norm() < 1e-12);
}

TEST_CASE("fields stay orthogonal to the base point") {
    for (int trial = 0; trial < 50; ++trial) {
        const std::vector<int> dims{3, 3};
        const PureState v = random_state(dims, 500 + trial);
        Rng rng(600 + trial);
        const LocalGenerator g = random_generator(dims, rng);
        const TangentVector t = fundamental_field(g, v);
        CHECK(std::abs(v.amplitudes.dot(t.rep)) < 1e-10);
    }
}

TEST_CASE("commutator algebra") {
    const Mat sx = pauli_x(), sy = pauli_y(), sz = pauli_z();
    // [sigma_x, sigma_y] = 2 i sigma_z in the standard normalization
    CHECK((commutator(sx, sy) - cxd(0, 2) * sz).cwiseAbs().maxCoeff() < 1e-15);
    CHECK(commutator(sx, sx).cwiseAbs().maxCoeff() == 0.0);
    CHECK_THROWS_AS(commutator(sx, Mat::Identity(3, 3)), DimensionMismatch);
}

TEST_CASE("Jacobi identity on random su(3) triples") {
    Rng rng(77);
    const auto basis = su_basis(3);
    for (int trial = 0; trial < 20; ++trial) {
        Mat a = Mat::Zero(3, 3), b = Mat::Zero(3, 3), c = Mat::Zero(3, 3);
        for (const Mat& xi : basis) {
            a += rng.gaussian() * xi;
            b += rng.gaussian() * xi;
            c += rng.gaussian() * xi;
        }
        const Mat jac = commutator(a, commutator(b, c)) +
                        commutator(b, commutator(c, a)) +
                        commutator(c, commutator(a, b));
        CHECK(jac.cwiseAbs().maxCoeff() < 1e-12);
    }
}

TEST_CASE("expm of anti-Hermitian generators is unitary") {
    Rng rng(88);
    for (int trial = 0; trial < 20; ++trial) {
        Mat a = Mat::Zero(3, 3);
        for (const Mat& xi : su_basis(3)) a += rng.gaussian() * xi;
        const Mat u = expm_antihermitian(a);
        CHECK((u * u.adjoint() - Mat::Identity(3, 3)).cwiseAbs().maxCoeff() <
              1e-12);
    }
    // exp(i pi sigma_z) = -I
    const Mat u = expm_antihermitian(cxd(0, M_PI) * pauli_z());
    CHECK((u + Mat::Identity(2, 2)).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("field span dimension equals the orbit dimension") {
    // real span of all basis fields has the rank orbit_tangent reports
    const PureState v = random_state({2, 2}, 91);
    const OrbitTangent t = orbit_tangent(v, 1e-7);
    const SchmidtDecomposition sd = schmidt(v, 1e-9);
    CHECK(t.dim == bipartite_dims(sd.multiplicities).dim_orbit);
}

TEST_CASE("local generator validation") {
    const std::vector<int> dims{2, 2};
    const cxd i1(0, 1);
    CHECK_THROWS_AS(
        make_local_generator({{0, pauli_z()}}, dims),  // Hermitian, not anti
        DimensionMismatch);
    CHECK_THROWS_AS(
        make_local_generator({{0, i1 * pauli_z()}, {0, i1 * pauli_x()}}, dims),
        DimensionMismatch);
    CHECK_THROWS_AS(make_local_generator({{3, i1 * pauli_z()}}, dims),
                    IndexOutOfRange);
    CHECK_THROWS_AS(
        make_local_generator({{0, i1 * Mat::Identity(2, 2)}}, dims),
        DimensionMismatch);  // not traceless
}
