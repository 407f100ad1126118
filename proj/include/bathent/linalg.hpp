// linalg.hpp — Small dense complex matrices: Hermitian spectra, partial transpose, Kronecker products
//
// Index convention (used by every module): a bipartite basis state |i>_A |k>_B
// has flat index i*dB + k, and matrices are stored row-major.

#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace bathent {

using Complex = std::complex<double>;

class ComplexMatrix {
public:
    ComplexMatrix() = default;
    /// Zero matrix of size dim x dim.
    explicit ComplexMatrix(std::size_t dim);
    /// Row-major entries; throws DimensionMismatch unless entries.size() == dim*dim.
    ComplexMatrix(std::size_t dim, std::vector<Complex> entries);

    static ComplexMatrix identity(std::size_t dim);
    static ComplexMatrix diagonal(std::span<const double> values);
    /// |v><v|
    static ComplexMatrix projector(std::span<const Complex> v);

    std::size_t dim() const noexcept { return dim_; }
    Complex& operator()(std::size_t row, std::size_t col) noexcept { return data_[row * dim_ + col]; }
    const Complex& operator()(std::size_t row, std::size_t col) const noexcept { return data_[row * dim_ + col]; }
    std::span<const Complex> entries() const noexcept { return data_; }

    Complex trace() const noexcept;
    ComplexMatrix adjoint() const;
    double max_abs() const noexcept;
    double frobenius_norm() const noexcept;

    ComplexMatrix& operator+=(const ComplexMatrix& rhs);
    ComplexMatrix& operator-=(const ComplexMatrix& rhs);
    ComplexMatrix& operator*=(Complex s) noexcept;

    friend ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs += rhs; }
    friend ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs -= rhs; }
    friend ComplexMatrix operator*(ComplexMatrix m, Complex s) noexcept { return m *= s; }
    friend ComplexMatrix operator*(Complex s, ComplexMatrix m) noexcept { return m *= s; }
    friend ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs);
    friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

private:
    std::size_t dim_ = 0;
    std::vector<Complex> data_;
};

struct BipartiteDims {
    std::size_t dA = 2;
    std::size_t dB = 2;

    std::size_t total() const noexcept { return dA * dB; }
    /// PPT is necessary and sufficient for separability only for 2x2, 2x3 and 3x2.
    bool ppt_conclusive() const noexcept {
        return (dA == 2 && dB == 2) || (dA == 2 && dB == 3) || (dA == 3 && dB == 2);
    }
    friend bool operator==(const BipartiteDims&, const BipartiteDims&) = default;
};

/// Hermiticity check tolerance, relative to the largest entry magnitude.
inline constexpr double kHermitianTolerance = 1e-9;

/// max_{r,c} |M(r,c) - conj(M(c,r))|
double hermiticity_defect(const ComplexMatrix& m) noexcept;

/// All eigenvalues of a Hermitian matrix in ascending order (cyclic complex Jacobi).
/// Throws NonHermitianInput when the defect exceeds kHermitianTolerance * max|M|;
/// otherwise the input is symmetrized before rotating.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m);

/// rho^{T_A}: N(i*dB+k, j*dB+l) = M(j*dB+k, i*dB+l).
ComplexMatrix partial_transpose(const ComplexMatrix& m, BipartiteDims dims);

/// (A (x) B)(i*dB+k, j*dB+l) = A(i,j) B(k,l)
ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b);

} // namespace bathent
