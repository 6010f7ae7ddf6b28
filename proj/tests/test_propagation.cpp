#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oatsim/observables.hpp"
#include "oatsim/propagation.hpp"
#include "test_helpers.hpp"

using namespace oatsim;
namespace oracle = test_oracle;

namespace {

QuantumState composite_pure(const SpinEnsemble& ens, const BosonSpace& space,
                            const QuantumState& spin, const QuantumState& boson) {
    Vector psi(ens.dim() * space.dim());
    for (int i = 0; i < ens.dim(); ++i) {
        psi.segment(i * space.dim(), space.dim()) = spin.vec()(i) * boson.vec();
    }
    return QuantumState::vector(psi, BasisTag::composite(ens.n_atoms, space.n_max));
}

}  // namespace

TEST_CASE("evolve_unitary_static: t=0 sample returns psi0 exactly") {
    SpinEnsemble ens(5);
    auto ops = collective_operators(ens);
    QuantumState psi0 = css_state(ens, {1.2, 0.3});
    auto states = evolve_unitary_static(h_ideal_oat(SpinAxis::Z, 1.0, ops), psi0,
                                        TimeGrid::uniform(0.0, 1.0, 5));
    CHECK((states.front().vec() - psi0.vec()).cwiseAbs().maxCoeff() == 0.0);
    for (const auto& s : states) CHECK(s.norm_defect() < 1e-10);
}

TEST_CASE("vacuum Fock input gives a GHZ marginal at chi t = pi/2") {
    const int n_atoms = 10;
    SpinEnsemble ens(n_atoms);
    BosonSpace space(3);
    auto spin_ops = collective_operators(ens);
    auto boson_ops = ladder_operators(space);
    ModelParams params;
    params.n_atoms = n_atoms;
    QuantumState psi0 = composite_pure(ens, space, css_state(ens, {M_PI / 2, 0.0}),
                                       input_state(space, BosonInput::fock(0)));
    auto states = evolve_unitary_static(h_eff_tc(params, spin_ops, boson_ops), psi0,
                                        TimeGrid::uniform(0.0, M_PI / 2, 3));
    QuantumState marginal = partial_trace_boson(states.back());
    CHECK(fidelity(marginal, ghz_state(ens)) == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("coherent input: GHZ fidelity decays to (1+e^-2)/2") {
    const int n_atoms = 10;
    SpinEnsemble ens(n_atoms);
    const BosonInput input = BosonInput::coherent(1.0);
    BosonSpace space(truncation_recommendation(input));
    auto spin_ops = collective_operators(ens);
    auto boson_ops = ladder_operators(space);
    ModelParams params;
    params.n_atoms = n_atoms;
    QuantumState psi0 =
        composite_pure(ens, space, css_state(ens, {M_PI / 2, 0.0}), input_state(space, input));
    auto states = evolve_unitary_static(h_eff_tc(params, spin_ops, boson_ops), psi0,
                                        TimeGrid::uniform(0.0, M_PI / 2, 2));
    QuantumState marginal = partial_trace_boson(states.back());
    CHECK(fidelity(marginal, ghz_state(ens)) ==
          doctest::Approx(0.5 * (1.0 + std::exp(-2.0))).epsilon(1e-6));
}

TEST_CASE("density-matrix propagation path matches the vector path") {
    SpinEnsemble ens(4);
    auto ops = collective_operators(ens);
    OperatorMatrix h = h_ideal_oat(SpinAxis::Z, 1.0, ops);
    QuantumState psi0 = css_state(ens, {M_PI / 2, 0.0});
    auto grid = TimeGrid::uniform(0.0, 0.7, 4);
    auto vec_states = evolve_unitary_static(h, psi0, grid);
    auto den_states =
        evolve_unitary_static(h, QuantumState::density(psi0.density(), psi0.basis), grid);
    for (size_t i = 0; i < grid.samples.size(); ++i) {
        CHECK(oracle::max_abs_diff(vec_states[i].density(), den_states[i].data) < 1e-12);
    }
}

TEST_CASE("evolve_unitary_pulsed: constant waveform reduces to the static path") {
    const int n_atoms = 4;
    SpinEnsemble ens(n_atoms);
    BosonSpace space(6);
    auto spin_ops = collective_operators(ens);
    auto boson_ops = ladder_operators(space);
    ModelParams params;
    params.n_atoms = n_atoms;
    QuantumState psi0 = composite_pure(ens, space, css_state(ens, {0.0, 0.0}),
                                       input_state(space, BosonInput::coherent(1.0)));
    auto grid = TimeGrid::uniform(0.0, 0.35, 8);
    auto pulsed = evolve_unitary_pulsed(params, DriveWaveform::constant(12.0), psi0, grid);
    auto direct = evolve_unitary_static(h_eff_driven(params, 12.0, spin_ops, boson_ops), psi0, grid);
    for (size_t i = 0; i < grid.samples.size(); ++i) {
        CHECK((pulsed[i].vec() - direct[i].vec()).cwiseAbs().maxCoeff() < 1e-10);
    }
}

TEST_CASE("evolve_unitary_pulsed: norm preserved and samples inside pulses rejected") {
    const int n_atoms = 6;
    SpinEnsemble ens(n_atoms);
    BosonSpace space(8);
    ModelParams params;
    params.n_atoms = n_atoms;
    QuantumState psi0 = composite_pure(ens, space, css_state(ens, {M_PI / 2, 0.0}),
                                       input_state(space, BosonInput::fock(1)));
    DriveWaveform train = DriveWaveform::canonical_pulse_train(0.05, 0.1);
    auto grid = TimeGrid::from_samples({0.0, 0.05, 0.15, 0.25});
    auto states = evolve_unitary_pulsed(params, train, psi0, grid);
    CHECK(std::abs(states.back().vec().norm() - 1.0) < 1e-9);

    auto bad = TimeGrid::from_samples({0.0, 0.1});  // pulse center
    CHECK_THROWS_AS(evolve_unitary_pulsed(params, train, psi0, bad), StepTooCoarseError);
}

TEST_CASE("pulse-train step phase drives echo-complete readout") {
    // Verifies the piecewise propagation against a directly composed product
    // of segment exponentials over two periods.
    const int n_atoms = 2;
    SpinEnsemble ens(n_atoms);
    BosonSpace space(4);
    auto spin_ops = collective_operators(ens);
    auto boson_ops = ladder_operators(space);
    ModelParams params;
    params.n_atoms = n_atoms;
    DriveWaveform train = DriveWaveform::canonical_pulse_train(0.2, 0.1);
    QuantumState psi0 = composite_pure(ens, space, css_state(ens, {M_PI / 2, 0.0}),
                                       input_state(space, BosonInput::coherent(0.7)));
    const double t_read = 2 * 0.1 - train.pulse_width() / 2;
    auto states = evolve_unitary_pulsed(params, train, psi0,
                                        TimeGrid::from_samples({0.0, t_read}));

    const Matrix h_in = h_eff_driven(params, train.omega0 + train.amplitude, spin_ops,
                                     boson_ops).data;
    const Matrix h_out = h_eff_driven(params, train.omega0, spin_ops, boson_ops).data;
    const double tau0 = train.pulse_width();
    Vector psi = psi0.vec();
    psi = oracle::expm_series(h_in, tau0 / 2) * psi;                 // trailing half pulse at 0
    psi = oracle::expm_series(h_out, 0.1 - tau0) * psi;              // gap 0
    psi = oracle::expm_series(h_in, tau0) * psi;                     // pulse at T
    psi = oracle::expm_series(h_out, 0.1 - tau0) * psi;              // gap 1
    CHECK((states.back().vec() - psi).cwiseAbs().maxCoeff() < 1e-9);
}

TEST_CASE("evolve_lindblad: zero rates match unitary evolution") {
    SpinEnsemble ens(6);
    auto ops = collective_operators(ens);
    LindbladSpec spec;
    spec.hamiltonian = h_ideal_oat(SpinAxis::Z, 1.0, ops);
    spec.channels = {{ops.s_minus, 0.0}};
    QuantumState rho0 = QuantumState::density(css_state(ens, {M_PI / 2, 0.0}).density(),
                                              ens.basis());
    auto grid = TimeGrid::uniform(0.0, 0.6, 7);
    auto lind = evolve_lindblad(spec, rho0, grid);
    auto unit = evolve_unitary_static(spec.hamiltonian, rho0, grid);
    for (size_t i = 0; i < grid.samples.size(); ++i) {
        CHECK(oracle::max_abs_diff(lind[i].data, unit[i].data) < 1e-9);
    }
}

TEST_CASE("evolve_lindblad: single-atom decay law") {
    SpinEnsemble ens(1);
    auto ops = collective_operators(ens);
    const double gamma = 0.8;
    LindbladSpec spec;
    spec.hamiltonian = OperatorMatrix(Matrix::Zero(2, 2), ens.basis());
    spec.channels = {{ops.s_minus, gamma}};
    Matrix excited = Matrix::Zero(2, 2);
    excited(1, 1) = 1.0;  // |S,S><S,S| at the top of the ascending basis
    auto grid = TimeGrid::uniform(0.0, 2.0, 9);
    auto states = evolve_lindblad(spec, QuantumState::density(excited, ens.basis()), grid);
    for (size_t i = 0; i < grid.samples.size(); ++i) {
        CHECK(states[i].data(1, 1).real() ==
              doctest::Approx(std::exp(-gamma * grid.samples[i])).epsilon(1e-8));
    }
}

TEST_CASE("evolve_lindblad: trace, Hermiticity, and positivity at all samples") {
    SpinEnsemble ens(10);
    auto ops = collective_operators(ens);
    ModelParams params;
    params.n_atoms = 10;
    params.gamma = 0.02;
    LindbladSpec spec = lindblad_builders(LindbladKind::Eq27, params, ops);
    QuantumState rho0 =
        QuantumState::density(css_state(ens, {M_PI / 2, 0.0}).density(), ens.basis());
    auto states = evolve_lindblad(spec, rho0, TimeGrid::uniform(0.0, 2.0, 41));
    for (const auto& s : states) {
        CHECK(std::abs(s.data.trace().real() - 1.0) < 1e-10);
        CHECK((s.data - s.data.adjoint()).cwiseAbs().maxCoeff() < 1e-10);
        Eigen::SelfAdjointEigenSolver<Matrix> solver(s.data, Eigen::EigenvaluesOnly);
        CHECK(solver.eigenvalues().minCoeff() >= -1e-8);
    }
}

TEST_CASE("segment composition: one call equals two half-range calls") {
    SpinEnsemble ens(6);
    auto ops = collective_operators(ens);
    const double t_mid = 0.45, t_end = 0.9;

    SUBCASE("unitary") {
        OperatorMatrix h = h_ideal_oat(SpinAxis::Z, 1.0, ops);
        QuantumState psi0 = css_state(ens, {M_PI / 2, 0.0});
        auto full = evolve_unitary_static(h, psi0, TimeGrid::from_samples({0.0, t_end}));
        auto half1 = evolve_unitary_static(h, psi0, TimeGrid::from_samples({0.0, t_mid}));
        TimeGrid second;
        second.t_start = t_mid;
        second.t_end = t_end;
        second.samples = {t_mid, t_end};
        auto half2 = evolve_unitary_static(h, half1.back(), second);
        CHECK((full.back().vec() - half2.back().vec()).cwiseAbs().maxCoeff() < 1e-9);
    }

    SUBCASE("lindblad") {
        ModelParams params;
        params.n_atoms = 6;
        params.gamma = 0.05;
        LindbladSpec spec = lindblad_builders(LindbladKind::Eq26, params, ops);
        QuantumState rho0 =
            QuantumState::density(css_state(ens, {0.0, 0.0}).density(), ens.basis());
        auto full = evolve_lindblad(spec, rho0, TimeGrid::from_samples({0.0, t_end}));
        auto half1 = evolve_lindblad(spec, rho0, TimeGrid::from_samples({0.0, t_mid}));
        TimeGrid second;
        second.t_start = t_mid;
        second.t_end = t_end;
        second.samples = {t_mid, t_end};
        auto half2 = evolve_lindblad(spec, half1.back(), second);
        CHECK(oracle::max_abs_diff(full.back().data, half2.back().data) < 1e-9);
    }
}

TEST_CASE("lindblad_builders: channel structure") {
    SpinEnsemble ens(5);
    auto ops = collective_operators(ens);
    ModelParams params;
    params.n_atoms = 5;
    params.chi = 1.0;
    params.gamma = 0.04;

    LindbladSpec eq25 = lindblad_builders(LindbladKind::Eq25, params, ops, 2.0);
    REQUIRE(eq25.channels.size() == 1);
    CHECK(eq25.channels[0].rate == doctest::Approx(0.04));
    CHECK(oracle::max_abs_diff(eq25.channels[0].jump.data, ops.s_minus.data) == 0.0);

    LindbladSpec eq26 = lindblad_builders(LindbladKind::Eq26, params, ops);
    REQUIRE(eq26.channels.size() == 3);
    CHECK(eq26.channels[0].rate == doctest::Approx(0.04));
    CHECK(eq26.channels[1].rate == doctest::Approx(0.02));
    CHECK(eq26.channels[2].rate == doctest::Approx(0.02));
    CHECK(oracle::max_abs_diff(eq26.hamiltonian.data, -0.5 * (ops.s_x.data * ops.s_x.data)) <
          1e-14);

    LindbladSpec doubled = lindblad_builders(LindbladKind::Eq26Doubled, params, ops);
    CHECK(oracle::max_abs_diff(doubled.hamiltonian.data, 2.0 * eq26.hamiltonian.data) < 1e-14);

    LindbladSpec eq27 = lindblad_builders(LindbladKind::Eq27, params, ops);
    REQUIRE(eq27.channels.size() == 2);
    CHECK(eq27.channels[0].rate == doctest::Approx(0.02));
    CHECK(eq27.channels[1].rate == doctest::Approx(0.02));
    CHECK(oracle::max_abs_diff(eq27.hamiltonian.data, ops.s_y.data * ops.s_y.data) < 1e-14);

    // Gamma = 0 keeps the channels with zero rate and gives pure OAT dynamics
    params.gamma = 0.0;
    LindbladSpec free26 = lindblad_builders(LindbladKind::Eq26, params, ops);
    CHECK(free26.channels.size() == 3);
    for (const auto& ch : free26.channels) CHECK(ch.rate == 0.0);
}

TEST_CASE("eq26 vs eq27: time-varying dissipation preserves squeezing better") {
    SpinEnsemble ens(10);
    auto ops = collective_operators(ens);
    ModelParams params;
    params.n_atoms = 10;
    params.gamma = 0.01;
    auto grid = TimeGrid::uniform(0.0, 1.2, 61);
    auto r26 = evolve_lindblad(lindblad_builders(LindbladKind::Eq26, params, ops),
                               QuantumState::density(css_state(ens, {0.0, 0.0}).density(),
                                                     ens.basis()),
                               grid);
    auto r27 = evolve_lindblad(lindblad_builders(LindbladKind::Eq27, params, ops),
                               QuantumState::density(css_state(ens, {M_PI / 2, 0.0}).density(),
                                                     ens.basis()),
                               grid);
    double min26 = 1e9, min27 = 1e9;
    for (size_t i = 0; i < grid.samples.size(); ++i) {
        min26 = std::min(min26, squeezing_parameter(r26[i]).xi2);
        min27 = std::min(min27, squeezing_parameter(r27[i]).xi2);
    }
    CHECK(min27 <= min26);
}

TEST_CASE("rotating-frame equivalence at Omega0 = 160") {
    // xi^2 from the driven effective model vs the -(chi/2) S_x^2 limit.
    const int n_atoms = 10;
    SpinEnsemble ens(n_atoms);
    const BosonInput input = BosonInput::coherent(1.0);
    BosonSpace space(truncation_recommendation(input));
    auto spin_ops = collective_operators(ens);
    auto boson_ops = ladder_operators(space);
    ModelParams params;
    params.n_atoms = n_atoms;
    QuantumState psi0 =
        composite_pure(ens, space, css_state(ens, {0.0, 0.0}), input_state(space, input));
    auto grid = TimeGrid::uniform(0.0, 0.5, 26);
    auto driven = evolve_unitary_static(h_eff_driven(params, 160.0, spin_ops, boson_ops), psi0,
                                        grid);
    auto ideal = evolve_unitary_static(h_ideal_oat(SpinAxis::X, -0.5, spin_ops),
                                       css_state(ens, {0.0, 0.0}), grid);
    for (size_t i = 1; i < grid.samples.size(); ++i) {
        const double a = squeezing_parameter(partial_trace_boson(driven[i])).xi2;
        const double b = squeezing_parameter(ideal[i]).xi2;
        CHECK(std::abs(a - b) / b < 0.05);
    }
}

TEST_CASE("time-dependent RK4 fallback agrees with the superoperator path") {
    SpinEnsemble ens(4);
    auto ops = collective_operators(ens);
    ModelParams params;
    params.n_atoms = 4;
    params.gamma = 0.05;
    LindbladSpec spec = lindblad_builders(LindbladKind::Eq27, params, ops);
    QuantumState rho0 =
        QuantumState::density(css_state(ens, {M_PI / 2, 0.0}).density(), ens.basis());
    auto grid = TimeGrid::uniform(0.0, 0.5, 6);
    auto exact = evolve_lindblad(spec, rho0, grid);
    auto rk = evolve_lindblad_time_dependent(
        [&](double) { return spec.hamiltonian.data; }, spec.channels, rho0, grid, 1e-9);
    for (size_t i = 0; i < grid.samples.size(); ++i) {
        CHECK(oracle::max_abs_diff(exact[i].data, rk[i].data) < 1e-7);
    }
}
