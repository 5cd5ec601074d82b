#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "lugeo/moment.hpp"
#include "lugeo/rng.hpp"
#include "lugeo/state.hpp"

using namespace lugeo;

namespace {

Mat pauli(char which) {
    Mat m(2, 2);
    switch (which) {
        case 'x': m << 0, 1, 1, 0; break;
        case 'y': m << cxd(0, 0), cxd(0, -1), cxd(0, 1), cxd(0, 0); break;
        default: m << 1, 0, 0, -1; break;
    }
    return m;
}

LocalGenerator random_generator(const std::vector<int>& dims, Rng& rng) {
    std::vector<std::pair<int, Mat>> terms;
    for (int k = 0; k < static_cast<int>(dims.size()); ++k) {
        Mat m = Mat::Zero(dims[static_cast<size_t>(k)], dims[static_cast<size_t>(k)]);
        for (const Mat& xi : su_basis(dims[static_cast<size_t>(k)]))
            m += rng.gaussian() * xi;
        terms.emplace_back(k, m);
    }
    return make_local_generator(std::move(terms), dims);
}

std::vector<Mat> random_locals(const std::vector<int>& dims, Rng& rng) {
    std::vector<Mat> us;
    for (int d : dims) us.push_back(random_special_unitary(d, rng));
    return us;
}

}  // namespace

TEST_CASE("reduced densities of stock states") {
    for (int L : {3, 4, 5}) {
        const PureState v = ghz(L);
        for (int k = 0; k < L; ++k) {
            const Mat rho = reduced_density(v, k).matrix;
            CHECK((rho - 0.5 * Mat::Identity(2, 2)).cwiseAbs().maxCoeff() <
                  1e-14);
        }
    }

    Vec e00 = Vec::Zero(4);
    e00[0] = 1;
    const Mat rho = reduced_density(make_state({2, 2}, e00), 0).matrix;
    CHECK(rho(0, 0).real() == doctest::Approx(1.0));
    CHECK(std::abs(rho(1, 1)) < 1e-15);

    // two-qutrit profile (p1, p1, p3)
    Vec amps = Vec::Zero(9);
    amps[0] = amps[4] = 0.6;
    amps[8] = std::sqrt(1 - 0.72);
    const PureState w = make_state({3, 3}, amps);
    const Mat rho0 = reduced_density(w, 0).matrix;
    CHECK(rho0(0, 0).real() == doctest::Approx(0.36));
    CHECK(rho0(1, 1).real() == doctest::Approx(0.36));
    CHECK(rho0(2, 2).real() == doctest::Approx(0.28));

    CHECK_THROWS_AS(reduced_density(w, 2), IndexOutOfRange);
}

TEST_CASE("reduced densities are Hermitian PSD trace-1") {
    for (int trial = 0; trial < 30; ++trial) {
        const PureState v = random_state({2, 3, 2}, 900 + trial);
        for (int k = 0; k < 3; ++k) {
            const Mat rho = reduced_density(v, k).matrix;
            CHECK((rho - rho.adjoint()).cwiseAbs().maxCoeff() < 1e-12);
            CHECK(std::abs(rho.trace().real() - 1.0) < 1e-12);
            Eigen::SelfAdjointEigenSolver<Mat> eig(rho, Eigen::EigenvaluesOnly);
            CHECK(eig.eigenvalues().minCoeff() > -1e-12);
        }
    }
}

TEST_CASE("moment pairing on fixtures") {
    const cxd i1(0, 1);
    // any single-factor generator pairs to zero at GHZ states
    for (int L : {3, 4}) {
        const PureState v = ghz(L);
        for (int k = 0; k < L; ++k)
            for (char b : {'x', 'y', 'z'})
                CHECK(std::abs(moment_pairing(
                          v, single_factor_generator(k, i1 * pauli(b), v.dims))) <
                      1e-14);
    }

    Vec e00 = Vec::Zero(4);
    e00[0] = 1;
    const PureState v = make_state({2, 2}, e00);
    CHECK(moment_pairing(v, single_factor_generator(0, i1 * pauli('z'), v.dims)) ==
          doctest::Approx(-0.5));
    CHECK(moment_pairing(v, make_local_generator({}, v.dims)) == 0.0);
}

TEST_CASE("pairing via state equals pairing via reduced densities") {
    for (int trial = 0; trial < 50; ++trial) {
        const std::vector<int> dims = trial % 2 == 0
                                          ? std::vector<int>{2, 2, 2}
                                          : std::vector<int>{3, 3};
        const PureState v = random_state(dims, 1700 + trial);
        Rng rng(1800 + trial);
        const LocalGenerator gen = random_generator(dims, rng);
        const double direct = moment_pairing(v, gen);
        const double via_rho = dual_pairing(moment_image(v), gen);
        CHECK(std::abs(direct - via_rho) < 1e-10);
    }
}

TEST_CASE("moment image fixtures") {
    for (int L : {3, 4, 5})
        CHECK(moment_image(ghz(L)).max_norm() < 1e-14);

    Vec e00 = Vec::Zero(4);
    e00[0] = 1;
    const MomentImage img = moment_image(make_state({2, 2}, e00));
    for (const Mat& y : img.components) {
        CHECK(y(0, 0).real() == doctest::Approx(0.5));
        CHECK(y(1, 1).real() == doctest::Approx(-0.5));
    }

    Vec me = Vec::Zero(9);
    me[0] = me[4] = me[8] = 1;
    CHECK(moment_image(make_state({3, 3}, me)).max_norm() < 1e-14);
}

TEST_CASE("moment image components are traceless Hermitian") {
    const PureState v = random_state({3, 2}, 23);
    for (const Mat& y : moment_image(v).components) {
        CHECK(std::abs(y.trace()) < 1e-12);
        CHECK((y - y.adjoint()).cwiseAbs().maxCoeff() < 1e-12);
    }
}

TEST_CASE("equivariance of reduced densities") {
    for (int trial = 0; trial < 200; ++trial) {
        const std::vector<int> dims =
            trial % 2 == 0 ? std::vector<int>{2, 2, 2} : std::vector<int>{3, 3};
        const PureState v = random_state(dims, 2500 + trial);
        Rng rng(2600 + trial);
        const std::vector<Mat> us = random_locals(dims, rng);
        const PureState w = apply_local(v, us);
        for (int k = 0; k < v.factors(); ++k) {
            const Mat lhs = reduced_density(w, k).matrix;
            const Mat rhs = us[static_cast<size_t>(k)] *
                            reduced_density(v, k).matrix *
                            us[static_cast<size_t>(k)].adjoint();
            CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-10);
        }
    }
}

TEST_CASE("sorted trace form has diagonal nonincreasing densities") {
    for (int trial = 0; trial < 40; ++trial) {
        const std::vector<int> dims =
            trial % 2 == 0 ? std::vector<int>{2, 2, 2} : std::vector<int>{3, 3};
        const PureState v = random_state(dims, 3100 + trial);
        const SortedTraceForm form = sorted_trace_form(v, 1e-9);

        CHECK(projective_distance(apply_local(v, form.witnesses), form.state) <
              1e-12);
        for (int k = 0; k < v.factors(); ++k) {
            const Mat rho = reduced_density(form.state, k).matrix;
            for (int i = 0; i < rho.rows(); ++i)
                for (int j = 0; j < rho.cols(); ++j)
                    if (i != j) CHECK(std::abs(rho(i, j)) < 1e-9);
            const RVec& spec = form.spectra[static_cast<size_t>(k)];
            for (int i = 1; i < spec.size(); ++i) CHECK(spec[i - 1] >= spec[i] - 1e-12);
            for (int i = 0; i < spec.size(); ++i)
                CHECK(std::abs(rho(i, i).real() - spec[i]) < 1e-10);
        }
    }
}

TEST_CASE("sorted trace form spectra are unitarily invariant") {
    for (int trial = 0; trial < 30; ++trial) {
        const PureState v = random_state({2, 2, 2}, 4000 + trial);
        Rng rng(4100 + trial);
        const PureState w = apply_local(v, random_locals(v.dims, rng));
        const SortedTraceForm fv = sorted_trace_form(v, 1e-9);
        const SortedTraceForm fw = sorted_trace_form(w, 1e-9);
        for (size_t k = 0; k < fv.spectra.size(); ++k)
            CHECK((fv.spectra[k] - fw.spectra[k]).cwiseAbs().maxCoeff() < 1e-10);
    }
}

TEST_CASE("sorted trace form on Schmidt-form input is the identity") {
    Vec amps = Vec::Zero(9);
    amps[0] = 0.8;
    amps[4] = 0.6;
    const PureState v = make_state({3, 3}, amps);
    const SortedTraceForm form = sorted_trace_form(v, 1e-9);
    CHECK(projective_distance(form.state, v) < 1e-12);
    CHECK(form.spectra[0][0] == doctest::Approx(0.64));
    CHECK(form.spectra[0][1] == doctest::Approx(0.36));
}

TEST_CASE("sorted trace form of the swap Bell state") {
    Vec amps = Vec::Zero(4);
    amps[1] = amps[2] = 1;  // (|01> + |10>)/sqrt(2)
    const PureState v = make_state({2, 2}, amps);
    const SortedTraceForm form = sorted_trace_form(v, 1e-9);
    for (int k = 0; k < 2; ++k) {
        CHECK(form.spectra[static_cast<size_t>(k)][0] == doctest::Approx(0.5));
        CHECK(form.spectra[static_cast<size_t>(k)][1] == doctest::Approx(0.5));
        const Mat rho = reduced_density(form.state, k).matrix;
        CHECK(std::abs(rho(0, 1)) < 1e-12);
    }
}

TEST_CASE("sorted trace form of GHZ_3 keeps the spectra") {
    const SortedTraceForm form = sorted_trace_form(ghz(3), 1e-9);
    for (const RVec& spec : form.spectra) {
        CHECK(spec[0] == doctest::Approx(0.5));
        CHECK(spec[1] == doctest::Approx(0.5));
    }
    CHECK(in_cartan(form.state, 1e-9));
}

TEST_CASE("idempotence: second pass is block-diagonal") {
    for (int trial = 0; trial < 20; ++trial) {
        const PureState v = random_state({3, 3}, 5200 + trial);
        const SortedTraceForm first = sorted_trace_form(v, 1e-9);
        const SortedTraceForm second = sorted_trace_form(first.state, 1e-9);
        for (size_t k = 0; k < first.spectra.size(); ++k) {
            CHECK((first.spectra[k] - second.spectra[k]).cwiseAbs().maxCoeff() <
                  1e-10);
            // witness entries vanish outside the degeneracy blocks
            const Mat& w = second.witnesses[k];
            const RVec& spec = first.spectra[k];
            const double thr = 1e-9 * std::max(1.0, spec[0]);
            for (int i = 0; i < w.rows(); ++i)
                for (int j = 0; j < w.cols(); ++j)
                    if (std::abs(spec[i] - spec[j]) > thr)
                        CHECK(std::abs(w(i, j)) < 1e-8);
        }
    }
}

TEST_CASE("in_cartan fixtures") {
    Vec amps = Vec::Zero(4);
    amps[0] = 0.8;
    amps[3] = 0.6;
    CHECK(in_cartan(make_state({2, 2}, amps), 1e-9));

    Vec plus = Vec::Zero(4);
    plus[0] = plus[1] = 1;  // |0>(|0>+|1>)/sqrt(2): second factor off-diagonal
    CHECK_FALSE(in_cartan(make_state({2, 2}, plus), 1e-9));

    CHECK(in_cartan(ghz(4), 1e-9));
}
