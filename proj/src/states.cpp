// states.cpp — Pure states, density matrices, pointer spectrum and dephasing evolution

#include "bathent/states.hpp"

#include "bathent/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace bathent {

namespace {

double norm_squared(std::span<const Complex> v) {
    double s = 0.0;
    for (const auto& z : v) s += std::norm(z);
    return s;
}

} // namespace

PureState::PureState(std::vector<Complex> amplitudes) : amplitudes_(std::move(amplitudes)) {
    if (amplitudes_.empty()) throw InvalidArgument("PureState: empty amplitude list");
    const double n2 = norm_squared(amplitudes_);
    if (std::abs(n2 - 1.0) > 1e-12) {
        throw NotNormalized("PureState: sum |amplitude|^2 = " + std::to_string(n2));
    }
}

PureState PureState::normalized(std::vector<Complex> amplitudes) {
    const double n = std::sqrt(norm_squared(amplitudes));
    if (!(n > 0.0) || !std::isfinite(n)) throw NotNormalized("PureState: cannot normalize a zero vector");
    for (auto& z : amplitudes) z /= n;
    return PureState(std::move(amplitudes));
}

PureState PureState::uniform(std::size_t dim) {
    if (dim == 0) throw InvalidArgument("PureState::uniform: dim must be positive");
    return PureState(std::vector<Complex>(dim, Complex{1.0 / std::sqrt(static_cast<double>(dim)), 0.0}));
}

PureState PureState::basis(std::size_t dim, std::size_t index) {
    if (index >= dim) throw InvalidArgument("PureState::basis: index out of range");
    std::vector<Complex> v(dim, Complex{0.0, 0.0});
    v[index] = 1.0;
    return PureState(std::move(v));
}

DensityMatrix::DensityMatrix(ComplexMatrix matrix, BipartiteDims dims, Unchecked)
    : matrix_(std::move(matrix)), dims_(dims) {
    if (dims_.dA == 0 || dims_.dB == 0) throw InvalidArgument("DensityMatrix: dimensions must be positive");
    if (matrix_.dim() != dims_.total()) {
        throw DimensionMismatch("DensityMatrix: matrix dim " + std::to_string(matrix_.dim()) +
                                " != dA*dB = " + std::to_string(dims_.total()));
    }
}

DensityMatrix::DensityMatrix(ComplexMatrix matrix, BipartiteDims dims)
    : DensityMatrix(std::move(matrix), dims, Unchecked{}) {
    if (hermiticity_defect(matrix_) > 1e-9) throw NonHermitianInput("DensityMatrix: not Hermitian");
    const Complex tr = matrix_.trace();
    if (std::abs(tr - 1.0) > 1e-10) {
        throw InvalidArgument("DensityMatrix: trace " + std::to_string(tr.real()) + " != 1");
    }
    const auto eig = hermitian_eigenvalues(matrix_);
    if (eig.front() < -1e-9) {
        throw InvalidArgument("DensityMatrix: negative eigenvalue " + std::to_string(eig.front()));
    }
}

DensityMatrix DensityMatrix::trusted(ComplexMatrix matrix, BipartiteDims dims) {
    return DensityMatrix(std::move(matrix), dims, Unchecked{});
}

double DensityMatrix::purity() const { return (matrix_ * matrix_).trace().real(); }

bool PointerSpectrum::degenerate() const noexcept {
    return std::any_of(classes.begin(), classes.end(), [](const auto& c) { return c.size() > 1; });
}

PointerSpectrum pointer_values(const CouplingSpectrum& spectrum) {
    PointerSpectrum out;
    const std::size_t dB = spectrum.b.size();
    out.values.reserve(spectrum.a.size() * dB);
    for (double ai : spectrum.a)
        for (double bj : spectrum.b) {
            const double v = ai + bj;
            if (!std::isfinite(v)) throw InvalidArgument("pointer_values: non-finite coupling eigenvalue");
            out.values.push_back(v);
        }

    std::vector<std::size_t> order(out.values.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return out.values[x] < out.values[y]; });

    out.class_of.assign(out.values.size(), 0);
    for (std::size_t pos = 0; pos < order.size(); ++pos) {
        const std::size_t idx = order[pos];
        if (pos == 0 || out.values[idx] - out.values[order[pos - 1]] > kDegeneracyTolerance) {
            out.classes.emplace_back();
        }
        out.classes.back().push_back(idx);
        out.class_of[idx] = out.classes.size() - 1;
    }
    for (auto& c : out.classes) std::sort(c.begin(), c.end());
    return out;
}

DensityMatrix product_state(const PureState& psi_a, const PureState& psi_b) {
    const auto pa = ComplexMatrix::projector(psi_a.amplitudes());
    const auto pb = ComplexMatrix::projector(psi_b.amplitudes());
    return DensityMatrix::trusted(tensor_product(pa, pb), {psi_a.dim(), psi_b.dim()});
}

namespace {

void check_spectrum(const DensityMatrix& rho, const CouplingSpectrum& spectrum, const char* who) {
    if (spectrum.dims() != rho.dims()) {
        throw DimensionMismatch(std::string(who) + ": spectrum lengths (" + std::to_string(spectrum.a.size()) +
                                "," + std::to_string(spectrum.b.size()) + ") do not match state dims (" +
                                std::to_string(rho.dims().dA) + "," + std::to_string(rho.dims().dB) + ")");
    }
}

} // namespace

DensityMatrix evolve(const DensityMatrix& rho0, const CouplingSpectrum& spectrum, KernelValue kernel) {
    check_spectrum(rho0, spectrum, "evolve");
    if (!(kernel.f >= 0.0) || !std::isfinite(kernel.phi)) {
        throw InvalidArgument("evolve: kernel needs f >= 0 and finite phi");
    }
    const auto pointer = pointer_values(spectrum);
    const auto& lam = pointer.values;
    const std::size_t n = lam.size();

    ComplexMatrix out = rho0.matrix();
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) {
            if (pointer.class_of[r] == pointer.class_of[c]) continue;
            const double diff = lam[r] - lam[c];
            const double damping = -diff * diff * kernel.f;
            const double phase = (lam[r] * lam[r] - lam[c] * lam[c]) * kernel.phi;
            out(r, c) *= std::exp(damping) * Complex{std::cos(phase), std::sin(phase)};
        }
    return DensityMatrix::trusted(std::move(out), rho0.dims());
}

DensityMatrix dephased_limit(const DensityMatrix& rho0, const CouplingSpectrum& spectrum) {
    check_spectrum(rho0, spectrum, "dephased_limit");
    const auto pointer = pointer_values(spectrum);
    ComplexMatrix out = rho0.matrix();
    for (std::size_t r = 0; r < out.dim(); ++r)
        for (std::size_t c = 0; c < out.dim(); ++c)
            if (pointer.class_of[r] != pointer.class_of[c]) out(r, c) = 0.0;
    return DensityMatrix::trusted(std::move(out), rho0.dims());
}

DensityMatrix reference_initial_state(std::size_t dB) {
    const double h = 1.0 / std::sqrt(2.0);
    return product_state(PureState({h, -h}), PureState::uniform(dB));
}

} // namespace bathent
