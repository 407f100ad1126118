// linalg.cpp — Dense complex kernel; cyclic Jacobi eigensolver for Hermitian matrices

#include "bathent/linalg.hpp"

#include "bathent/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace bathent {

ComplexMatrix::ComplexMatrix(std::size_t dim) : dim_(dim), data_(dim * dim, Complex{0.0, 0.0}) {}

ComplexMatrix::ComplexMatrix(std::size_t dim, std::vector<Complex> entries)
    : dim_(dim), data_(std::move(entries)) {
    if (data_.size() != dim_ * dim_) {
        throw DimensionMismatch("ComplexMatrix: expected " + std::to_string(dim_ * dim_) +
                                " entries, got " + std::to_string(data_.size()));
    }
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
    ComplexMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
    ComplexMatrix m(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
    return m;
}

ComplexMatrix ComplexMatrix::projector(std::span<const Complex> v) {
    ComplexMatrix m(v.size());
    for (std::size_t r = 0; r < v.size(); ++r)
        for (std::size_t c = 0; c < v.size(); ++c) m(r, c) = v[r] * std::conj(v[c]);
    return m;
}

Complex ComplexMatrix::trace() const noexcept {
    Complex t{0.0, 0.0};
    for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
    return t;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(dim_);
    for (std::size_t r = 0; r < dim_; ++r)
        for (std::size_t c = 0; c < dim_; ++c) out(c, r) = std::conj((*this)(r, c));
    return out;
}

double ComplexMatrix::max_abs() const noexcept {
    double m = 0.0;
    for (const auto& z : data_) m = std::max(m, std::abs(z));
    return m;
}

double ComplexMatrix::frobenius_norm() const noexcept {
    double s = 0.0;
    for (const auto& z : data_) s += std::norm(z);
    return std::sqrt(s);
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& rhs) {
    if (rhs.dim_ != dim_) throw DimensionMismatch("ComplexMatrix +: dimension mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += rhs.data_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& rhs) {
    if (rhs.dim_ != dim_) throw DimensionMismatch("ComplexMatrix -: dimension mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= rhs.data_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex s) noexcept {
    for (auto& z : data_) z *= s;
    return *this;
}

ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
    if (lhs.dim_ != rhs.dim_) throw DimensionMismatch("ComplexMatrix *: dimension mismatch");
    const std::size_t n = lhs.dim_;
    ComplexMatrix out(n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t k = 0; k < n; ++k) {
            const Complex a = lhs(r, k);
            for (std::size_t c = 0; c < n; ++c) out(r, c) += a * rhs(k, c);
        }
    return out;
}

double hermiticity_defect(const ComplexMatrix& m) noexcept {
    double worst = 0.0;
    for (std::size_t r = 0; r < m.dim(); ++r)
        for (std::size_t c = r; c < m.dim(); ++c)
            worst = std::max(worst, std::abs(m(r, c) - std::conj(m(c, r))));
    return worst;
}

namespace {

double off_diagonal_norm(const ComplexMatrix& a) {
    double s = 0.0;
    for (std::size_t r = 0; r < a.dim(); ++r)
        for (std::size_t c = 0; c < a.dim(); ++c)
            if (r != c) s += std::norm(a(r, c));
    return std::sqrt(s);
}

// Zeroes a(p,q) with the unitary R = diag(1, e^{-i alpha}) * [[c, s], [-s, c]] acting on (p,q),
// where a(p,q) = |a(p,q)| e^{i alpha}. Reduces to the real symmetric Jacobi rotation.
void rotate(ComplexMatrix& a, std::size_t p, std::size_t q) {
    const Complex apq = a(p, q);
    const double r = std::abs(apq);
    if (r == 0.0) return;
    const Complex phase = std::conj(apq) / r; // e^{-i alpha}

    const double app = a(p, p).real();
    const double aqq = a(q, q).real();
    const double theta = (aqq - app) / (2.0 * r);
    const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
    const double c = 1.0 / std::sqrt(t * t + 1.0);
    const double s = t * c;

    const Complex rpp = c;
    const Complex rpq = s;
    const Complex rqp = -s * phase;
    const Complex rqq = c * phase;

    const std::size_t n = a.dim();
    for (std::size_t k = 0; k < n; ++k) { // a <- a R
        const Complex akp = a(k, p);
        const Complex akq = a(k, q);
        a(k, p) = akp * rpp + akq * rqp;
        a(k, q) = akp * rpq + akq * rqq;
    }
    for (std::size_t k = 0; k < n; ++k) { // a <- R^dagger a
        const Complex apk = a(p, k);
        const Complex aqk = a(q, k);
        a(p, k) = std::conj(rpp) * apk + std::conj(rqp) * aqk;
        a(q, k) = std::conj(rpq) * apk + std::conj(rqq) * aqk;
    }
    a(p, q) = 0.0;
    a(q, p) = 0.0;
    a(p, p) = app - t * r;
    a(q, q) = aqq + t * r;
}

} // namespace

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m) {
    const std::size_t n = m.dim();
    const double scale = m.max_abs();
    if (hermiticity_defect(m) > kHermitianTolerance * scale) {
        throw NonHermitianInput("hermitian_eigenvalues: matrix is not Hermitian (defect " +
                                std::to_string(hermiticity_defect(m)) + ")");
    }

    ComplexMatrix a = m;
    for (std::size_t r = 0; r < n; ++r) {
        a(r, r) = a(r, r).real();
        for (std::size_t c = r + 1; c < n; ++c) {
            const Complex sym = 0.5 * (a(r, c) + std::conj(a(c, r)));
            a(r, c) = sym;
            a(c, r) = std::conj(sym);
        }
    }

    const double target = 1e-13 * a.frobenius_norm();
    constexpr int kMaxSweeps = 64;
    int sweep = 0;
    while (off_diagonal_norm(a) > target) {
        if (++sweep > kMaxSweeps) throw ConvergenceFailure("hermitian_eigenvalues: Jacobi sweeps exhausted");
        for (std::size_t p = 0; p + 1 < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) rotate(a, p, q);
    }

    std::vector<double> eig(n);
    for (std::size_t i = 0; i < n; ++i) eig[i] = a(i, i).real();
    std::sort(eig.begin(), eig.end());
    return eig;
}

ComplexMatrix partial_transpose(const ComplexMatrix& m, BipartiteDims dims) {
    if (m.dim() != dims.total()) {
        throw DimensionMismatch("partial_transpose: matrix dim " + std::to_string(m.dim()) +
                                " != dA*dB = " + std::to_string(dims.total()));
    }
    const std::size_t dA = dims.dA;
    const std::size_t dB = dims.dB;
    ComplexMatrix out(m.dim());
    for (std::size_t i = 0; i < dA; ++i)
        for (std::size_t k = 0; k < dB; ++k)
            for (std::size_t j = 0; j < dA; ++j)
                for (std::size_t l = 0; l < dB; ++l) out(i * dB + k, j * dB + l) = m(j * dB + k, i * dB + l);
    return out;
}

ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b) {
    const std::size_t dA = a.dim();
    const std::size_t dB = b.dim();
    ComplexMatrix out(dA * dB);
    for (std::size_t i = 0; i < dA; ++i)
        for (std::size_t j = 0; j < dA; ++j)
            for (std::size_t k = 0; k < dB; ++k)
                for (std::size_t l = 0; l < dB; ++l) out(i * dB + k, j * dB + l) = a(i, j) * b(k, l);
    return out;
}

} // namespace bathent
