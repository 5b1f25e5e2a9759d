#include "entrobound/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "entrobound/errors.hpp"

namespace entrobound {

namespace {

constexpr double kHermTolFactor = 1e-12;
constexpr double kJacobiConvergence = 1e-13;
constexpr int kJacobiMaxSweeps = 100;
constexpr double kPsdClamp = 1e-10;
constexpr double kIsometryTol = 1e-10;
constexpr double kGramSchmidtResidual = 1e-8;
constexpr double kSignComponentTol = 1e-12;

std::string deviation_message(const char* where, const char* what, double dev, double tol) {
    std::ostringstream os;
    os << where << ": " << what << " (max deviation " << dev << " exceeds tolerance " << tol << ")";
    return os.str();
}

} // namespace

ComplexMatrix ComplexMatrix::identity(std::size_t d) {
    ComplexMatrix m(d, d);
    for (std::size_t i = 0; i < d; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::from_rows(std::initializer_list<std::initializer_list<Complex>> rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.begin()->size();
    ComplexMatrix m(r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != c) throw ValidationError("ComplexMatrix::from_rows: ragged rows");
        std::size_t j = 0;
        for (const Complex& z : row) m(i, j++) = z;
        ++i;
    }
    return m;
}

ComplexMatrix ComplexMatrix::outer(const CVector& v, const CVector& w) {
    ComplexMatrix m(v.size(), w.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = 0; j < w.size(); ++j)
            m(i, j) = v[i] * std::conj(w[j]);
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix m(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            m(j, i) = std::conj((*this)(i, j));
    return m;
}

ComplexMatrix ComplexMatrix::operator+(const ComplexMatrix& other) const {
    ComplexMatrix m(rows_, cols_);
    for (std::size_t k = 0; k < entries_.size(); ++k) m.entries_[k] = entries_[k] + other.entries_[k];
    return m;
}

ComplexMatrix ComplexMatrix::operator-(const ComplexMatrix& other) const {
    ComplexMatrix m(rows_, cols_);
    for (std::size_t k = 0; k < entries_.size(); ++k) m.entries_[k] = entries_[k] - other.entries_[k];
    return m;
}

ComplexMatrix ComplexMatrix::operator*(const ComplexMatrix& other) const {
    if (cols_ != other.rows_) throw ValidationError("ComplexMatrix::operator*: dimension mismatch");
    ComplexMatrix m(rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const Complex aik = (*this)(i, k);
            if (aik == Complex{0.0, 0.0}) continue;
            for (std::size_t j = 0; j < other.cols_; ++j) m(i, j) += aik * other(k, j);
        }
    }
    return m;
}

ComplexMatrix ComplexMatrix::operator*(Complex scalar) const {
    ComplexMatrix m(rows_, cols_);
    for (std::size_t k = 0; k < entries_.size(); ++k) m.entries_[k] = entries_[k] * scalar;
    return m;
}

CVector ComplexMatrix::apply(const CVector& x) const {
    if (x.size() != cols_) throw ValidationError("ComplexMatrix::apply: dimension mismatch");
    CVector y(rows_, Complex{0.0, 0.0});
    for (std::size_t i = 0; i < rows_; ++i) {
        Complex acc{0.0, 0.0};
        for (std::size_t j = 0; j < cols_; ++j) acc += (*this)(i, j) * x[j];
        y[i] = acc;
    }
    return y;
}

Complex ComplexMatrix::trace() const {
    Complex t{0.0, 0.0};
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
    return t;
}

double ComplexMatrix::max_abs() const {
    double m = 0.0;
    for (const Complex& z : entries_) m = std::max(m, std::abs(z));
    return m;
}

double ComplexMatrix::frobenius() const {
    double s = 0.0;
    for (const Complex& z : entries_) s += std::norm(z);
    return std::sqrt(s);
}

bool ComplexMatrix::all_finite() const {
    for (const Complex& z : entries_)
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    return true;
}

double ComplexMatrix::hermiticity_deviation() const {
    double dev = 0.0;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i; j < cols_; ++j)
            dev = std::max(dev, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
    return dev;
}

CVector ComplexMatrix::column(std::size_t j) const {
    CVector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
}

void ComplexMatrix::set_column(std::size_t j, const CVector& v) {
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
}

void ComplexMatrix::set_block(std::size_t r0, std::size_t c0, const ComplexMatrix& block) {
    for (std::size_t i = 0; i < block.rows(); ++i)
        for (std::size_t j = 0; j < block.cols(); ++j)
            (*this)(r0 + i, c0 + j) = block(i, j);
}

ComplexMatrix ComplexMatrix::block(std::size_t r0, std::size_t c0, std::size_t nrows,
                                   std::size_t ncols) const {
    ComplexMatrix m(nrows, ncols);
    for (std::size_t i = 0; i < nrows; ++i)
        for (std::size_t j = 0; j < ncols; ++j)
            m(i, j) = (*this)(r0 + i, c0 + j);
    return m;
}

Complex inner(const CVector& x, const CVector& y) {
    if (x.size() != y.size()) throw ValidationError("inner: dimension mismatch");
    Complex acc{0.0, 0.0};
    for (std::size_t i = 0; i < x.size(); ++i) acc += std::conj(x[i]) * y[i];
    return acc;
}

double norm(const CVector& x) {
    double s = 0.0;
    for (const Complex& z : x) s += std::norm(z);
    return std::sqrt(s);
}

CVector scaled(const CVector& x, Complex factor) {
    CVector y(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) y[i] = x[i] * factor;
    return y;
}

CVector sub(const CVector& x, const CVector& y) {
    CVector z(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) z[i] = x[i] - y[i];
    return z;
}

HermitianOperator::HermitianOperator(ComplexMatrix m) : matrix_(std::move(m)) {
    if (matrix_.rows() != matrix_.cols())
        throw ValidationError("HermitianOperator: matrix is not square");
    if (!matrix_.all_finite())
        throw ValidationError("HermitianOperator: matrix has non-finite entries");
    const double dev = matrix_.hermiticity_deviation();
    const double tol = kHermTolFactor * matrix_.max_abs();
    if (dev > tol)
        throw ValidationError(deviation_message("HermitianOperator", "matrix is not Hermitian", dev, tol));
}

SpectralDecomposition hermitian_eig(const HermitianOperator& input) {
    const std::size_t d = input.dim();
    // Work on the exactly-symmetrized copy; the input is already within
    // tolerance, this just removes the residual asymmetry.
    ComplexMatrix a(d, d);
    for (std::size_t i = 0; i < d; ++i) {
        a(i, i) = Complex{input.matrix()(i, i).real(), 0.0};
        for (std::size_t j = i + 1; j < d; ++j) {
            const Complex z = 0.5 * (input.matrix()(i, j) + std::conj(input.matrix()(j, i)));
            a(i, j) = z;
            a(j, i) = std::conj(z);
        }
    }
    ComplexMatrix v = ComplexMatrix::identity(d);

    const double norm_f = a.frobenius();
    const double target = kJacobiConvergence * norm_f;

    auto off_diagonal_norm = [&]() {
        double s = 0.0;
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = i + 1; j < d; ++j) s += 2.0 * std::norm(a(i, j));
        return std::sqrt(s);
    };

    for (int sweep = 0; sweep < kJacobiMaxSweeps; ++sweep) {
        if (off_diagonal_norm() <= target) break;
        for (std::size_t p = 0; p + 1 < d; ++p) {
            for (std::size_t q = p + 1; q < d; ++q) {
                const Complex apq = a(p, q);
                const double r = std::abs(apq);
                if (r == 0.0) continue;

                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                const double tau = (aqq - app) / (2.0 * r);
                const double sign = tau >= 0.0 ? 1.0 : -1.0;
                const double t = sign / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                const Complex phase = apq / r;              // e^{i theta}
                const Complex phase_c = std::conj(phase);   // e^{-i theta}

                // A <- U^dagger A U with the (p,q)-plane rotation
                //   U_pp = c, U_pq = s, U_qp = -s e^{-i theta}, U_qq = c e^{-i theta}.
                for (std::size_t k = 0; k < d; ++k) {
                    const Complex akp = a(k, p);
                    const Complex akq = a(k, q);
                    a(k, p) = c * akp - s * phase_c * akq;
                    a(k, q) = s * akp + c * phase_c * akq;
                }
                for (std::size_t k = 0; k < d; ++k) {
                    const Complex apk = a(p, k);
                    const Complex aqk = a(q, k);
                    a(p, k) = c * apk - s * phase * aqk;
                    a(q, k) = s * apk + c * phase * aqk;
                }
                a(p, p) = Complex{app - t * r, 0.0};
                a(q, q) = Complex{aqq + t * r, 0.0};
                a(p, q) = Complex{0.0, 0.0};
                a(q, p) = Complex{0.0, 0.0};

                for (std::size_t k = 0; k < d; ++k) {
                    const Complex vkp = v(k, p);
                    const Complex vkq = v(k, q);
                    v(k, p) = c * vkp - s * phase_c * vkq;
                    v(k, q) = s * vkp + c * phase_c * vkq;
                }
            }
        }
    }

    // Descending eigenvalue order, original index breaks ties.
    std::vector<std::size_t> idx(d);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t i, std::size_t j) {
        return a(i, i).real() > a(j, j).real();
    });

    SpectralDecomposition out;
    out.eigenvalues.resize(d);
    out.eigenvectors = ComplexMatrix(d, d);
    for (std::size_t k = 0; k < d; ++k) {
        out.eigenvalues[k] = a(idx[k], idx[k]).real();
        CVector col = v.column(idx[k]);
        // First component with modulus above tolerance becomes real positive.
        for (std::size_t i = 0; i < d; ++i) {
            const double m = std::abs(col[i]);
            if (m > kSignComponentTol) {
                col = scaled(col, std::conj(col[i]) / m);
                break;
            }
        }
        out.eigenvectors.set_column(k, col);
    }
    return out;
}

HermitianOperator psd_sqrt(const HermitianOperator& a) {
    const SpectralDecomposition eig = hermitian_eig(a);
    const std::size_t d = a.dim();
    std::vector<double> roots(d);
    for (std::size_t k = 0; k < d; ++k) {
        double lambda = eig.eigenvalues[k];
        if (lambda < -kPsdClamp) {
            std::ostringstream os;
            os << "psd_sqrt: operator is not PSD (eigenvalue " << lambda << " below -" << kPsdClamp << ")";
            throw ValidationError(os.str());
        }
        roots[k] = lambda <= 0.0 ? 0.0 : std::sqrt(lambda);
    }
    ComplexMatrix r(d, d);
    for (std::size_t k = 0; k < d; ++k) {
        if (roots[k] == 0.0) continue;
        const CVector vk = eig.eigenvectors.column(k);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j)
                r(i, j) += roots[k] * vk[i] * std::conj(vk[j]);
    }
    // Symmetrize away the last bits of roundoff from the reconstruction.
    for (std::size_t i = 0; i < d; ++i) {
        r(i, i) = Complex{r(i, i).real(), 0.0};
        for (std::size_t j = i + 1; j < d; ++j) {
            const Complex z = 0.5 * (r(i, j) + std::conj(r(j, i)));
            r(i, j) = z;
            r(j, i) = std::conj(z);
        }
    }
    return HermitianOperator(std::move(r));
}

double operator_norm(const ComplexMatrix& a) {
    if (!a.all_finite()) throw ValidationError("operator_norm: matrix has non-finite entries");
    if (a.rows() == 0 || a.cols() == 0) return 0.0;
    const HermitianOperator gram(a.adjoint() * a);
    const SpectralDecomposition eig = hermitian_eig(gram);
    const double top = eig.eigenvalues.empty() ? 0.0 : eig.eigenvalues.front();
    return top <= 0.0 ? 0.0 : std::sqrt(top);
}

ComplexMatrix complete_to_unitary(const ComplexMatrix& w) {
    const std::size_t big = w.rows();
    const std::size_t small = w.cols();
    if (small > big) throw ValidationError("complete_to_unitary: more columns than rows");

    const ComplexMatrix gram = w.adjoint() * w;
    const double iso_dev = (gram - ComplexMatrix::identity(small)).max_abs();
    if (iso_dev > kIsometryTol)
        throw ValidationError(
            deviation_message("complete_to_unitary", "input columns are not orthonormal", iso_dev, kIsometryTol));

    std::vector<CVector> cols;
    cols.reserve(big);
    for (std::size_t j = 0; j < small; ++j) cols.push_back(w.column(j));

    for (std::size_t k = 0; k < big && cols.size() < big; ++k) {
        CVector cand(big, Complex{0.0, 0.0});
        cand[k] = Complex{1.0, 0.0};
        // Modified Gram-Schmidt, run twice to scrub the residual projection.
        for (int pass = 0; pass < 2; ++pass)
            for (const CVector& u : cols) cand = sub(cand, scaled(u, inner(u, cand)));
        const double res = norm(cand);
        if (res < kGramSchmidtResidual) continue;
        cols.push_back(scaled(cand, Complex{1.0 / res, 0.0}));
    }
    if (cols.size() != big)
        throw ValidationError("complete_to_unitary: could not complete the isometry to a unitary");

    ComplexMatrix u(big, big);
    for (std::size_t j = 0; j < big; ++j) u.set_column(j, cols[j]);
    return u;
}

} // namespace entrobound
