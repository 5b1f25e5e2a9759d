/*
 * Dense complex Hermitian linear algebra for desk-scale operators (d <= ~64).
 *
 * Self-contained kernel: row-major complex matrices, a cyclic Jacobi
 * eigensolver for Hermitian matrices, PSD square roots, operator norms,
 * and isometry completion. Everything is deterministic: fixed sweep
 * order, fixed eigenvector sign convention, stable index tie-breaks.
 */
#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

namespace entrobound {

using Complex = std::complex<double>;
using CVector = std::vector<Complex>;

// Row-major dense complex matrix.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols, Complex{0.0, 0.0}) {}

    static ComplexMatrix identity(std::size_t d);
    static ComplexMatrix from_rows(std::initializer_list<std::initializer_list<Complex>> rows);
    // v w^dagger
    static ComplexMatrix outer(const CVector& v, const CVector& w);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Complex& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Complex& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    ComplexMatrix adjoint() const;
    ComplexMatrix operator+(const ComplexMatrix& other) const;
    ComplexMatrix operator-(const ComplexMatrix& other) const;
    ComplexMatrix operator*(const ComplexMatrix& other) const;
    ComplexMatrix operator*(Complex scalar) const;
    ComplexMatrix operator*(double scalar) const { return (*this) * Complex{scalar, 0.0}; }

    CVector apply(const CVector& x) const;     // A x
    Complex trace() const;
    double max_abs() const;                    // max_ij |a_ij|
    double frobenius() const;
    bool all_finite() const;

    // Largest |a_ij - conj(a_ji)| over all entries.
    double hermiticity_deviation() const;

    CVector column(std::size_t j) const;
    void set_column(std::size_t j, const CVector& v);
    // Copies `block` into this matrix with top-left corner at (r0, c0).
    void set_block(std::size_t r0, std::size_t c0, const ComplexMatrix& block);
    ComplexMatrix block(std::size_t r0, std::size_t c0, std::size_t nrows, std::size_t ncols) const;

    bool operator==(const ComplexMatrix& other) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    CVector entries_;
};

// Vector helpers. Inner product is conjugate-linear in the first argument.
Complex inner(const CVector& x, const CVector& y);
double norm(const CVector& x);
CVector scaled(const CVector& x, Complex factor);
CVector sub(const CVector& x, const CVector& y);

// Square matrix certified Hermitian on construction:
// max |A - A^dagger| <= 1e-12 * max|A|.
class HermitianOperator {
public:
    explicit HermitianOperator(ComplexMatrix m);

    std::size_t dim() const { return matrix_.rows(); }
    const ComplexMatrix& matrix() const { return matrix_; }

    bool operator==(const HermitianOperator& other) const = default;

private:
    ComplexMatrix matrix_;
};

// Eigenvalues descending; eigenvectors stored as orthonormal columns,
// column k paired with eigenvalues[k]. Sign convention: the first
// component of each eigenvector with modulus > 1e-12 is real positive.
struct SpectralDecomposition {
    std::vector<double> eigenvalues;
    ComplexMatrix eigenvectors;
};

// Cyclic Jacobi diagonalization. Converges when the off-diagonal
// Frobenius norm drops below 1e-13 * ||A||_F, capped at 100 sweeps.
SpectralDecomposition hermitian_eig(const HermitianOperator& a);

// Unique PSD square root. Eigenvalues in [-1e-10, 0) are clamped to 0;
// anything below -1e-10 raises ValidationError.
HermitianOperator psd_sqrt(const HermitianOperator& a);

// Largest singular value, computed from hermitian_eig of A^dagger A.
double operator_norm(const ComplexMatrix& a);

// Completes a D x d isometry W (orthonormal columns) to a D x D unitary
// whose first d columns are W. Remaining columns come from Gram-Schmidt
// over the standard basis in index order; candidates with residual norm
// below 1e-8 are skipped.
ComplexMatrix complete_to_unitary(const ComplexMatrix& w);

} // namespace entrobound
