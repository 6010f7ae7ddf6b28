#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oatsim/observables.hpp"
#include "oatsim/spin.hpp"
#include "test_helpers.hpp"

using namespace oatsim;
namespace oracle = test_oracle;

TEST_CASE("collective operators: N=1 gives Pauli halves") {
    SpinEnsemble ens(1);
    auto ops = collective_operators(ens);
    Matrix sx(2, 2), sy(2, 2), sz(2, 2);
    sx << 0, 0.5, 0.5, 0;
    sy << 0, Complex(0, 0.5), Complex(0, -0.5), 0;  // ascending m: |down>, |up>
    sz << -0.5, 0, 0, 0.5;
    CHECK(oracle::max_abs_diff(ops.s_x.data, sx) < 1e-15);
    CHECK(oracle::max_abs_diff(ops.s_y.data, sy) < 1e-15);
    CHECK(oracle::max_abs_diff(ops.s_z.data, sz) < 1e-15);
}

TEST_CASE("collective operators: N=2 triplet projection") {
    SpinEnsemble ens(2);
    auto ops = collective_operators(ens);
    CHECK(ops.s_z.data(0, 0).real() == doctest::Approx(-1.0));
    CHECK(ops.s_z.data(1, 1).real() == doctest::Approx(0.0));
    CHECK(ops.s_z.data(2, 2).real() == doctest::Approx(1.0));
}

TEST_CASE("collective operators: su(2) algebra at N=10") {
    SpinEnsemble ens(10);
    auto ops = collective_operators(ens);
    Matrix comm = ops.s_x.data * ops.s_y.data - ops.s_y.data * ops.s_x.data;
    CHECK(oracle::max_abs_diff(comm, Complex(0, 1) * ops.s_z.data) < 1e-12);
}

TEST_CASE("Casimir invariant through N=20") {
    for (int n : {1, 2, 3, 5, 10, 20}) {
        SpinEnsemble ens(n);
        auto ops = collective_operators(ens);
        const double s = ens.total_spin();
        Matrix casimir = ops.s_x.data * ops.s_x.data + ops.s_y.data * ops.s_y.data +
                         ops.s_z.data * ops.s_z.data;
        CHECK(oracle::max_abs_diff(casimir, s * (s + 1) * Matrix::Identity(n + 1, n + 1)) < 1e-10);
    }
}

TEST_CASE("herm_eig of S_z gives exactly -S..S") {
    SpinEnsemble ens(10);
    auto ops = collective_operators(ens);
    auto [lambda, v] = herm_eig(ops.s_z);
    for (int i = 0; i <= 10; ++i) CHECK(std::abs(lambda(i) - (i - 5.0)) < 1e-12);
}

TEST_CASE("css_state: north pole") {
    SpinEnsemble ens(6);
    QuantumState s = css_state(ens, {0.0, 0.0});
    Vector v = s.vec();
    CHECK(std::abs(std::abs(v(6)) - 1.0) < 1e-12);
    for (int i = 0; i < 6; ++i) CHECK(std::abs(v(i)) < 1e-12);
}

TEST_CASE("css_state: N=2 equatorial amplitudes (1/2, 1/sqrt 2, 1/2)") {
    SpinEnsemble ens(2);
    Vector v = css_state(ens, {M_PI / 2, 0.0}).vec();
    CHECK(std::abs(v(0) - 0.5) < 1e-12);
    CHECK(std::abs(v(1) - 1.0 / std::sqrt(2.0)) < 1e-12);
    CHECK(std::abs(v(2) - 0.5) < 1e-12);
}

TEST_CASE("css_state equals the binomial formula at (pi/2, 0)") {
    for (int n : {1, 4, 10, 15}) {
        SpinEnsemble ens(n);
        Vector rotated = css_state(ens, {M_PI / 2, 0.0}).vec();
        Vector closed = css_amplitudes(ens, M_PI / 2, 0.0);
        CHECK((rotated - closed).cwiseAbs().maxCoeff() < 1e-12);
    }
}

TEST_CASE("css_state equals the closed-form amplitudes at general angles") {
    SpinEnsemble ens(7);
    for (auto [th, ph] : {std::pair{0.7, 1.3}, {2.1, 4.0}, {1.2, 5.9}}) {
        Vector rotated = css_state(ens, {th, ph}).vec();
        Vector closed = css_amplitudes(ens, th, ph);
        CHECK((rotated - closed).cwiseAbs().maxCoeff() < 1e-11);
    }
}

TEST_CASE("css mean spin: N=10 equatorial state points along x") {
    SpinEnsemble ens(10);
    auto ops = collective_operators(ens);
    QuantumState s = css_state(ens, {M_PI / 2, 0.0});
    CHECK(expectation(s, ops.s_x) == doctest::Approx(5.0).epsilon(1e-10));
    CHECK(std::abs(expectation(s, ops.s_y)) < 1e-10);
    CHECK(std::abs(expectation(s, ops.s_z)) < 1e-10);
}

TEST_CASE("css amplitudes at (pi/2,0) are positive and symmetric") {
    SpinEnsemble ens(9);
    Vector v = css_amplitudes(ens, M_PI / 2, 0.0);
    for (int i = 0; i <= 9; ++i) {
        CHECK(v(i).real() > 0.0);
        CHECK(std::abs(v(i) - v(9 - i)) < 1e-13);
    }
}

TEST_CASE("rotate: zero angle is the identity") {
    SpinEnsemble ens(5);
    QuantumState s = css_state(ens, {1.1, 0.4});
    QuantumState r = rotate(s, SpinAxis::Y, 0.0);
    CHECK((r.vec() - s.vec()).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("rotate: pi about x flips |S,S> to |S,-S>") {
    SpinEnsemble ens(4);
    QuantumState north = css_state(ens, {0.0, 0.0});
    QuantumState flipped = rotate(north, SpinAxis::X, M_PI);
    Vector v = flipped.vec();
    CHECK(std::abs(std::abs(v(0)) - 1.0) < 1e-12);
    for (int i = 1; i <= 4; ++i) CHECK(std::abs(v(i)) < 1e-12);
}

TEST_CASE("rotate about z maps CSS(pi/2,0) to CSS(pi/2,phi)") {
    SpinEnsemble ens(8);
    for (double phi : {0.3, 1.7, 4.4}) {
        Vector a = rotate(css_state(ens, {M_PI / 2, 0.0}), SpinAxis::Z, phi).vec();
        Vector b = css_state(ens, {M_PI / 2, phi}).vec();
        CHECK(oracle::overlap2(a, b) == doctest::Approx(1.0).epsilon(1e-10));
    }
}

TEST_CASE("rotate by 2 pi gives the (-1)^(2S) global phase") {
    for (int n : {2, 3}) {
        SpinEnsemble ens(n);
        QuantumState s = css_state(ens, {0.9, 2.2});
        Vector r = rotate(s, SpinAxis::Y, 2 * M_PI).vec();
        const double expected_sign = (n % 2 == 0) ? 1.0 : -1.0;
        CHECK((r - expected_sign * s.vec()).cwiseAbs().maxCoeff() < 1e-10);
    }
}

TEST_CASE("oat_state: mu=0 reduces to the equatorial CSS") {
    SpinEnsemble ens(6);
    Vector a = oat_state(ens, 0.0, 0.0).vec();
    Vector b = css_state(ens, {M_PI / 2, 0.0}).vec();
    CHECK((a - b).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("oat_state: mu=pi is the GHZ cat") {
    SpinEnsemble ens(10);
    CHECK(oracle::overlap2(oat_state(ens, M_PI, 0.0).vec(), ghz_state(ens).vec()) ==
          doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("oat_state: small twist squeezes below the CSS level") {
    SpinEnsemble ens(10);
    auto report = squeezing_parameter(oat_state(ens, 0.1, 0.0));
    CHECK(report.xi2 < 1.0);
}

TEST_CASE("ghz_state: N=1 equal-weight components") {
    SpinEnsemble ens(1);
    Vector v = ghz_state(ens).vec();
    CHECK(std::abs(v.norm() - 1.0) < 1e-12);
    CHECK(std::abs(std::abs(v(0)) - std::abs(v(1))) < 1e-12);
}

TEST_CASE("ghz_state: orthogonal to its pi-rotated partner") {
    SpinEnsemble ens(10);
    QuantumState g = ghz_state(ens);
    QuantumState rotated = rotate(g, SpinAxis::Z, M_PI);
    CHECK(std::norm(g.vec().dot(rotated.vec())) < 1e-10);
}

TEST_CASE("ghz_state at N=10 matches the two-CSS superposition") {
    // |pi/2,Phi> - i |pi/2,Phi+pi> with Phi = -N pi/2 in the e^{i m phi}
    // phase convention; holds for N = 2 mod 4, which covers the working size.
    SpinEnsemble ens(10);
    const double big_phi = -10.0 * M_PI / 2;
    Vector a = Vector::Zero(11), b = Vector::Zero(11);
    Vector base = css_amplitudes(ens, M_PI / 2, 0.0);
    for (int i = 0; i <= 10; ++i) {
        const double m = ens.m_of(i);
        a(i) = base(i) * std::exp(Complex(0, m * big_phi));
        b(i) = base(i) * std::exp(Complex(0, m * (big_phi + M_PI)));
    }
    Vector combo = a - Complex(0, 1) * b;
    combo /= combo.norm();
    CHECK(oracle::overlap2(combo, ghz_state(ens).vec()) == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("ghz_state decomposes into two antipodal equatorial CSS for even N") {
    SpinEnsemble ens(8);
    Vector g = ghz_state(ens).vec();
    Vector e0 = css_amplitudes(ens, M_PI / 2, 0.0);
    Vector epi = css_amplitudes(ens, M_PI / 2, M_PI);
    // project out the two-dimensional cat subspace; nothing should remain
    Matrix basis(9, 2);
    basis.col(0) = e0 / e0.norm();
    basis.col(1) = epi / epi.norm();
    Vector residual = g - basis * (basis.adjoint() * g);
    CHECK(residual.norm() < 1e-10);
}
