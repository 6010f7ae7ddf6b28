#include "oatsim/propagation.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

namespace oatsim {

TimeGrid TimeGrid::uniform(double t_start, double t_end, int n_samples) {
    if (n_samples < 1) throw ConfigurationViolationError("TimeGrid: need at least one sample");
    TimeGrid g;
    g.t_start = t_start;
    g.t_end = t_end;
    g.samples.resize(n_samples);
    for (int i = 0; i < n_samples; ++i) {
        g.samples[i] =
            (n_samples == 1) ? t_start : t_start + (t_end - t_start) * i / (n_samples - 1.0);
    }
    g.validate();
    return g;
}

TimeGrid TimeGrid::from_samples(std::vector<double> samples) {
    if (samples.empty()) throw ConfigurationViolationError("TimeGrid: empty sample list");
    TimeGrid g;
    g.samples = std::move(samples);
    g.t_start = g.samples.front();
    g.t_end = g.samples.back();
    g.validate();
    return g;
}

void TimeGrid::validate() const {
    if (samples.empty()) throw ConfigurationViolationError("TimeGrid: empty sample list");
    if (samples.front() != t_start) {
        throw ConfigurationViolationError("TimeGrid: first sample must equal t_start");
    }
    for (size_t i = 1; i < samples.size(); ++i) {
        if (samples[i] <= samples[i - 1]) {
            throw ConfigurationViolationError("TimeGrid: samples must be strictly increasing");
        }
    }
    if (samples.back() > t_end + 1e-15) {
        throw ConfigurationViolationError("TimeGrid: sample beyond t_end");
    }
}

void LindbladSpec::validate() const {
    for (const auto& ch : channels) {
        require_same_basis(ch.jump.basis, hamiltonian.basis, "LindbladSpec");
        if (ch.rate < 0) throw ConfigurationViolationError("LindbladSpec: negative rate");
    }
}

std::vector<QuantumState> evolve_unitary_static(const OperatorMatrix& h, const QuantumState& psi0,
                                                const TimeGrid& grid) {
    require_same_basis(h.basis, psi0.basis, "evolve_unitary_static");
    grid.validate();
    HermitianPropagator prop(h);
    std::vector<QuantumState> out;
    out.reserve(grid.samples.size());
    if (psi0.is_vector()) {
        const Vector v0 = psi0.vec();
        for (double t : grid.samples) {
            out.push_back(QuantumState::vector(prop.apply(v0, t - grid.t_start), psi0.basis));
        }
    } else {
        for (double t : grid.samples) {
            out.push_back(
                QuantumState::density(prop.conjugate(psi0.data, t - grid.t_start), psi0.basis));
        }
    }
    return out;
}

namespace {

struct Segment {
    double t0, t1;
    bool inside;  // inside a pulse
};

// Splits [t_start, t_end] at pulse edges. Pulses of width tau0 are centered
// at integer multiples of the period.
std::vector<Segment> pulse_segments(const DriveWaveform& w, double t_start, double t_end) {
    std::set<double> edges{t_start, t_end};
    const double tau0 = w.pulse_width();
    const long k_lo = static_cast<long>(std::floor(t_start / w.period)) - 1;
    const long k_hi = static_cast<long>(std::ceil(t_end / w.period)) + 1;
    for (long k = k_lo; k <= k_hi; ++k) {
        for (double e : {k * w.period - tau0 / 2, k * w.period + tau0 / 2}) {
            if (e > t_start && e < t_end) edges.insert(e);
        }
    }
    std::vector<Segment> segs;
    double prev = t_start;
    for (auto it = std::next(edges.begin()); it != edges.end(); ++it) {
        const double mid = 0.5 * (prev + *it);
        double phase = std::fmod(mid, w.period);
        if (phase < 0) phase += w.period;
        const bool inside = (phase < tau0 / 2) || (phase > w.period - tau0 / 2);
        segs.push_back({prev, *it, inside});
        prev = *it;
    }
    return segs;
}

}  // namespace

std::vector<QuantumState> evolve_unitary_pulsed(const ModelParams& params,
                                                const DriveWaveform& waveform,
                                                const QuantumState& psi0, const TimeGrid& grid) {
    grid.validate();
    if (psi0.basis.kind != BasisKind::Composite) {
        throw BasisMismatchError("evolve_unitary_pulsed: composite state required");
    }
    const SpinEnsemble ens(psi0.basis.n_atoms);
    const BosonSpace space(psi0.basis.n_max);
    const auto spin_ops = collective_operators(ens);
    const auto boson_ops = ladder_operators(space);

    if (waveform.kind == DriveWaveform::Kind::Constant) {
        return evolve_unitary_static(h_eff_driven(params, waveform.omega0, spin_ops, boson_ops),
                                     psi0, grid);
    }

    // Reject samples strictly inside a pulse: results there depend on the
    // sub-pulse phase and are not meaningful readout points.
    const double tau0 = waveform.pulse_width();
    for (double t : grid.samples) {
        double phase = std::fmod(t, waveform.period);
        if (phase < 0) phase += waveform.period;
        const double eps = 1e-12 * std::max(1.0, waveform.period);
        if ((phase < tau0 / 2 - eps) || (phase > waveform.period - tau0 / 2 + eps)) {
            if (t > grid.t_start + eps) {
                throw StepTooCoarseError("evolve_unitary_pulsed: sample t=" + std::to_string(t) +
                                         " falls strictly inside a pulse");
            }
        }
    }

    HermitianPropagator prop_in(
        h_eff_driven(params, waveform.omega0 + waveform.amplitude, spin_ops, boson_ops));
    HermitianPropagator prop_out(h_eff_driven(params, waveform.omega0, spin_ops, boson_ops));

    std::vector<QuantumState> out;
    out.reserve(grid.samples.size());
    const bool vector_path = psi0.is_vector();
    Vector psi = vector_path ? psi0.vec() : Vector();
    Matrix rho = vector_path ? Matrix() : psi0.data;
    double t_now = grid.t_start;
    size_t next_sample = 0;
    auto emit_due = [&](double t) {
        while (next_sample < grid.samples.size() &&
               std::abs(grid.samples[next_sample] - t) <= 1e-12 * std::max(1.0, std::abs(t))) {
            out.push_back(vector_path ? QuantumState::vector(psi, psi0.basis)
                                      : QuantumState::density(rho, psi0.basis));
            ++next_sample;
        }
    };
    emit_due(t_now);

    // Sample times become segment boundaries so every sample lands exactly
    // on a propagated edge.
    std::set<double> cuts;
    for (const auto& s : pulse_segments(waveform, grid.t_start, grid.t_end)) cuts.insert(s.t1);
    for (double t : grid.samples) {
        if (t > grid.t_start) cuts.insert(t);
    }
    for (double edge : cuts) {
        const double dt = edge - t_now;
        if (dt <= 0) continue;
        const double mid = 0.5 * (t_now + edge);
        double phase = std::fmod(mid, waveform.period);
        if (phase < 0) phase += waveform.period;
        const bool inside = (phase < tau0 / 2) || (phase > waveform.period - tau0 / 2);
        const HermitianPropagator& prop = inside ? prop_in : prop_out;
        if (vector_path) {
            psi = prop.apply(psi, dt);
        } else {
            rho = prop.conjugate(rho, dt);
        }
        t_now = edge;
        emit_due(t_now);
    }
    if (next_sample != grid.samples.size()) {
        throw StepTooCoarseError("evolve_unitary_pulsed: not all samples were reached");
    }
    return out;
}

Matrix liouvillian(const LindbladSpec& spec) {
    spec.validate();
    const int d = spec.hamiltonian.dim();
    const Matrix& h = spec.hamiltonian.data;
    Matrix lv = Complex(0, -1) * (left_multiply_superop(h) - right_multiply_superop(h));
    for (const auto& ch : spec.channels) {
        const Matrix& a = ch.jump.data;
        const Matrix ada = a.adjoint() * a;
        // vec(A rho A^dag) = (conj(A) (x) A) vec(rho)
        Matrix sandwich = Matrix::Zero(d * d, d * d);
        const Matrix ac = a.conjugate();
        for (int i = 0; i < d; ++i) {
            for (int j = 0; j < d; ++j) {
                if (ac(i, j) != Complex(0)) sandwich.block(i * d, j * d, d, d) += ac(i, j) * a;
            }
        }
        lv += ch.rate * (sandwich - 0.5 * left_multiply_superop(ada) -
                         0.5 * right_multiply_superop(ada));
    }
    return lv;
}

namespace {

void check_density_invariants(const Matrix& rho, double t) {
    const double trace_defect = std::abs(rho.trace() - Complex(1, 0));
    if (trace_defect > kTol.trace) {
        throw PositivityViolationError("evolve_lindblad: trace defect " +
                                           std::to_string(trace_defect) + " at t=" +
                                           std::to_string(t),
                                       trace_defect);
    }
    const double herm = (rho - rho.adjoint()).cwiseAbs().maxCoeff();
    if (herm > kTol.trace) {
        throw PositivityViolationError(
            "evolve_lindblad: Hermiticity defect " + std::to_string(herm) + " at t=" +
                std::to_string(t),
            herm);
    }
    Eigen::SelfAdjointEigenSolver<Matrix> solver(rho, Eigen::EigenvaluesOnly);
    const double min_eig = solver.eigenvalues().minCoeff();
    if (min_eig < kTol.eigenvalue_floor) {
        throw PositivityViolationError("evolve_lindblad: eigenvalue " + std::to_string(min_eig) +
                                           " below floor at t=" + std::to_string(t),
                                       min_eig);
    }
}

}  // namespace

std::vector<QuantumState> evolve_lindblad(const LindbladSpec& spec, const QuantumState& rho0,
                                          const TimeGrid& grid) {
    require_same_basis(spec.hamiltonian.basis, rho0.basis, "evolve_lindblad");
    grid.validate();
    const int d = rho0.dim();
    const Matrix lv = liouvillian(spec);
    std::map<double, Matrix> step_cache;
    Vector v = vectorize(rho0.density());
    std::vector<QuantumState> out;
    out.reserve(grid.samples.size());
    double t_now = grid.t_start;
    for (double t : grid.samples) {
        const double dt = t - t_now;
        if (dt > 0) {
            auto it = step_cache.find(dt);
            if (it == step_cache.end()) {
                it = step_cache.emplace(dt, Matrix((lv * dt).exp())).first;
            }
            v = it->second * v;
            t_now = t;
        }
        Matrix rho = unvectorize(v, d, d);
        rho = 0.5 * (rho + rho.adjoint().eval());  // shave integrator roundoff
        check_density_invariants(rho, t);
        out.push_back(QuantumState::density(std::move(rho), rho0.basis));
    }
    return out;
}

std::vector<QuantumState> evolve_lindblad_time_dependent(
    const std::function<Matrix(double)>& hamiltonian, const std::vector<LindbladChannel>& channels,
    const QuantumState& rho0, const TimeGrid& grid, double tol) {
    grid.validate();
    const int d = rho0.dim();

    auto rhs = [&](double t, const Matrix& rho) -> Matrix {
        const Matrix h = hamiltonian(t);
        Matrix drho = Complex(0, -1) * (h * rho - rho * h);
        for (const auto& ch : channels) {
            const Matrix& a = ch.jump.data;
            const Matrix ada = a.adjoint() * a;
            drho += ch.rate * (a * rho * a.adjoint() - 0.5 * (ada * rho + rho * ada));
        }
        return drho;
    };

    auto integrate = [&](int steps_per_unit) {
        std::vector<Matrix> res;
        Matrix rho = rho0.density();
        double t_now = grid.t_start;
        for (double t : grid.samples) {
            double span = t - t_now;
            if (span > 0) {
                const int n = std::max(1, static_cast<int>(std::ceil(span * steps_per_unit)));
                const double h = span / n;
                for (int i = 0; i < n; ++i) {
                    const double ti = t_now + i * h;
                    const Matrix k1 = rhs(ti, rho);
                    const Matrix k2 = rhs(ti + h / 2, rho + (h / 2) * k1);
                    const Matrix k3 = rhs(ti + h / 2, rho + (h / 2) * k2);
                    const Matrix k4 = rhs(ti + h, rho + h * k3);
                    rho += (h / 6) * (k1 + 2 * k2 + 2 * k3 + k4);
                }
                t_now = t;
            }
            res.push_back(rho);
        }
        return res;
    };

    int steps = 256;
    std::vector<Matrix> coarse = integrate(steps);
    for (;;) {
        std::vector<Matrix> fine = integrate(steps * 2);
        double change = 0.0;
        for (size_t i = 0; i < fine.size(); ++i) {
            change = std::max(change, (fine[i] - coarse[i]).cwiseAbs().maxCoeff());
        }
        coarse = std::move(fine);
        steps *= 2;
        if (change < tol) break;
        if (steps > (1 << 22)) {
            throw PositivityViolationError("evolve_lindblad_time_dependent: no convergence",
                                           change);
        }
    }
    std::vector<QuantumState> out;
    out.reserve(coarse.size());
    for (size_t i = 0; i < coarse.size(); ++i) {
        Matrix rho = 0.5 * (coarse[i] + coarse[i].adjoint().eval());
        check_density_invariants(rho, grid.samples[i]);
        out.push_back(QuantumState::density(std::move(rho), rho0.basis));
    }
    (void)d;
    return out;
}

LindbladSpec lindblad_builders(LindbladKind kind, const ModelParams& params,
                               const CollectiveOperators& spin_ops, double drive_value) {
    if (params.gamma < 0) throw ConfigurationViolationError("lindblad_builders: Gamma < 0");
    const double g = params.gamma;
    const double chi = params.chi;
    LindbladSpec spec;
    switch (kind) {
        case LindbladKind::Eq25: {
            // Cavity adiabatically eliminated: the Stark piece acts on the
            // (empty) cavity and drops, leaving the drive and twisting terms.
            Matrix h = drive_value * spin_ops.s_x.data +
                       chi * (spin_ops.s_z.data * spin_ops.s_z.data);
            spec.hamiltonian = OperatorMatrix(std::move(h), spin_ops.s_z.basis);
            spec.channels = {{spin_ops.s_minus, g}};
            break;
        }
        case LindbladKind::Eq26:
            spec.hamiltonian = h_ideal_oat(SpinAxis::X, -chi / 2, spin_ops);
            spec.channels = {{spin_ops.s_x, g}, {spin_ops.s_y, g / 2}, {spin_ops.s_z, g / 2}};
            break;
        case LindbladKind::Eq26Doubled:
            spec.hamiltonian = h_ideal_oat(SpinAxis::X, -chi, spin_ops);
            spec.channels = {{spin_ops.s_x, g}, {spin_ops.s_y, g / 2}, {spin_ops.s_z, g / 2}};
            break;
        case LindbladKind::Eq27:
            spec.hamiltonian = h_ideal_oat(SpinAxis::Y, chi, spin_ops);
            spec.channels = {{spin_ops.s_minus, g / 2}, {spin_ops.s_plus, g / 2}};
            break;
    }
    return spec;
}

}  // namespace oatsim
