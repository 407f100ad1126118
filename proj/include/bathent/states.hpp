// states.hpp — Qudit pure states, bipartite density matrices and exact pure-dephasing evolution

#pragma once

#include "bathent/linalg.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace bathent {

/// Normalized state vector of a single qudit.
class PureState {
public:
    /// Throws NotNormalized unless sum |amp|^2 = 1 within 1e-12.
    explicit PureState(std::vector<Complex> amplitudes);
    /// Rescales arbitrary non-zero amplitudes to unit norm.
    static PureState normalized(std::vector<Complex> amplitudes);

    /// (|0> + |1> + ... + |d-1>) / sqrt(d)
    static PureState uniform(std::size_t dim);
    static PureState basis(std::size_t dim, std::size_t index);

    std::size_t dim() const noexcept { return amplitudes_.size(); }
    std::span<const Complex> amplitudes() const noexcept { return amplitudes_; }

private:
    std::vector<Complex> amplitudes_;
};

/// Bipartite density matrix in the pointer (computational) basis.
class DensityMatrix {
public:
    /// Validates: Hermitian within 1e-9, unit trace within 1e-10, min eigenvalue >= -1e-9.
    DensityMatrix(ComplexMatrix matrix, BipartiteDims dims);

    /// Skips the spectral checks; for matrices that are valid by construction.
    static DensityMatrix trusted(ComplexMatrix matrix, BipartiteDims dims);

    const ComplexMatrix& matrix() const noexcept { return matrix_; }
    BipartiteDims dims() const noexcept { return dims_; }
    const Complex& operator()(std::size_t row, std::size_t col) const noexcept { return matrix_(row, col); }

    double purity() const;

private:
    struct Unchecked {};
    DensityMatrix(ComplexMatrix matrix, BipartiteDims dims, Unchecked);

    ComplexMatrix matrix_;
    BipartiteDims dims_;
};

/// Eigenvalues of the coupling agents S^A and S^B in the pointer basis.
struct CouplingSpectrum {
    std::vector<double> a;
    std::vector<double> b;

    BipartiteDims dims() const noexcept { return {a.size(), b.size()}; }
};

/// Decoherence exponent f and accumulated phase phi at one instant.
struct KernelValue {
    double f = 0.0;
    double phi = 0.0;

    friend bool operator==(const KernelValue&, const KernelValue&) = default;
};

/// Pointer values Lambda_ij = a_i + b_j equal within this absolute tolerance are degenerate.
inline constexpr double kDegeneracyTolerance = 1e-12;

struct PointerSpectrum {
    /// Lambda at flat index i*dB + j.
    std::vector<double> values;
    /// Flat indices grouped into degeneracy classes, ordered by value.
    std::vector<std::vector<std::size_t>> classes;
    /// class_of[flat index] -> position in `classes`
    std::vector<std::size_t> class_of;

    bool degenerate() const noexcept;
};

PointerSpectrum pointer_values(const CouplingSpectrum& spectrum);

/// |psiA><psiA| (x) |psiB><psiB|
DensityMatrix product_state(const PureState& psi_a, const PureState& psi_b);

/// Exact reduced dynamics under a common dephasing bath:
///   rho_{ij,kl} -> rho_{ij,kl} exp(-(L_ij - L_kl)^2 f + i (L_ij^2 - L_kl^2) phi).
/// Entries inside one degeneracy class are copied unchanged. Requires f >= 0;
/// phi may have either sign.
DensityMatrix evolve(const DensityMatrix& rho0, const CouplingSpectrum& spectrum, KernelValue kernel);

/// f -> infinity limit: only coherences inside degeneracy classes survive.
DensityMatrix dephased_limit(const DensityMatrix& rho0, const CouplingSpectrum& spectrum);

/// The product state (|0>-|1>)/sqrt2 (x) (|0>+|1>)/sqrt(dB)-uniform used as the reference
/// initial condition; dB = 2 gives the standard two-qubit case.
DensityMatrix reference_initial_state(std::size_t dB = 2);

} // namespace bathent
