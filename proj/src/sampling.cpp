#include "entrobound/sampling.hpp"

#include <algorithm>
#include <cmath>

#include "entrobound/errors.hpp"

namespace entrobound {

namespace {

// S^{-1/2} for a strictly positive S.
ComplexMatrix inverse_sqrt(const HermitianOperator& s) {
    const SpectralDecomposition eig = hermitian_eig(s);
    const std::size_t d = s.dim();
    if (eig.eigenvalues.back() <= 1e-12 * eig.eigenvalues.front())
        throw ValidationError("inverse_sqrt: operator is numerically singular");
    ComplexMatrix m(d, d);
    for (std::size_t k = 0; k < d; ++k) {
        const double w = 1.0 / std::sqrt(eig.eigenvalues[k]);
        const CVector vk = eig.eigenvectors.column(k);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j)
                m(i, j) += w * vk[i] * std::conj(vk[j]);
    }
    return m;
}

Measurement normalize_psd_set(std::vector<ComplexMatrix> raw, std::size_t d) {
    ComplexMatrix s(d, d);
    for (const auto& a : raw) s = s + a;
    const ComplexMatrix root = inverse_sqrt(HermitianOperator(s));

    std::vector<HermitianOperator> elements;
    elements.reserve(raw.size());
    for (const auto& a : raw) {
        ComplexMatrix m = root * a * root;
        // Conjugation is Hermitian in exact arithmetic; scrub roundoff.
        for (std::size_t i = 0; i < d; ++i) {
            m(i, i) = Complex{m(i, i).real(), 0.0};
            for (std::size_t j = i + 1; j < d; ++j) {
                const Complex z = 0.5 * (m(i, j) + std::conj(m(j, i)));
                m(i, j) = z;
                m(j, i) = std::conj(z);
            }
        }
        elements.emplace_back(std::move(m));
    }
    return validate_measurement(std::move(elements), MeasurementKind::POVM);
}

} // namespace

ComplexMatrix sample_gaussian_matrix(SplitMix64& rng, std::size_t rows, std::size_t cols) {
    ComplexMatrix g(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            g(i, j) = rng.complex_gaussian();
    return g;
}

PureState sample_pure_haar(SplitMix64& rng, std::size_t d) {
    CVector amp(d);
    for (std::size_t i = 0; i < d; ++i) amp[i] = rng.complex_gaussian();
    const double len = norm(amp);
    return PureState(scaled(amp, Complex{1.0 / len, 0.0}));
}

DensityMatrix sample_mixed(SplitMix64& rng, std::size_t d) {
    const ComplexMatrix g = sample_gaussian_matrix(rng, d, d);
    ComplexMatrix m = g * g.adjoint();
    const double tr = m.trace().real();
    m = m * (1.0 / tr);
    for (std::size_t i = 0; i < d; ++i) {
        m(i, i) = Complex{m(i, i).real(), 0.0};
        for (std::size_t j = i + 1; j < d; ++j) {
            const Complex z = 0.5 * (m(i, j) + std::conj(m(j, i)));
            m(i, j) = z;
            m(j, i) = std::conj(z);
        }
    }
    return DensityMatrix(HermitianOperator(std::move(m)));
}

Measurement sample_povm(SplitMix64& rng, std::size_t d, std::size_t n) {
    std::vector<ComplexMatrix> raw;
    raw.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const ComplexMatrix g = sample_gaussian_matrix(rng, d, d);
        raw.push_back(g * g.adjoint());
    }
    return normalize_psd_set(std::move(raw), d);
}

Measurement sample_rank_one_povm(SplitMix64& rng, std::size_t d, std::size_t n) {
    n = std::max(n, d);
    std::vector<ComplexMatrix> raw;
    raw.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        CVector g(d);
        for (std::size_t k = 0; k < d; ++k) g[k] = rng.complex_gaussian();
        raw.push_back(ComplexMatrix::outer(g, g));
    }
    return normalize_psd_set(std::move(raw), d);
}

Measurement sample_pvm(SplitMix64& rng, std::size_t d, std::size_t n) {
    n = std::min(n, d);
    // Gram-Schmidt on a Gaussian matrix gives a Haar unitary.
    const ComplexMatrix g = sample_gaussian_matrix(rng, d, d);
    std::vector<CVector> cols;
    cols.reserve(d);
    for (std::size_t j = 0; j < d; ++j) {
        CVector v = g.column(j);
        for (int pass = 0; pass < 2; ++pass)
            for (const CVector& u : cols) v = sub(v, scaled(u, inner(u, v)));
        const double len = norm(v);
        if (len < 1e-8) throw ValidationError("sample_pvm: Gaussian matrix was rank deficient");
        cols.push_back(scaled(v, Complex{1.0 / len, 0.0}));
    }

    std::vector<HermitianOperator> elements;
    elements.reserve(n);
    std::size_t next_col = 0;
    for (std::size_t k = 0; k < n; ++k) {
        const std::size_t rank = d / n + (k < d % n ? 1 : 0);
        ComplexMatrix p(d, d);
        for (std::size_t r = 0; r < rank; ++r) {
            const CVector& v = cols[next_col++];
            for (std::size_t i = 0; i < d; ++i)
                for (std::size_t j = 0; j < d; ++j)
                    p(i, j) += v[i] * std::conj(v[j]);
        }
        for (std::size_t i = 0; i < d; ++i) {
            p(i, i) = Complex{p(i, i).real(), 0.0};
            for (std::size_t j = i + 1; j < d; ++j) {
                const Complex z = 0.5 * (p(i, j) + std::conj(p(j, i)));
                p(i, j) = z;
                p(j, i) = std::conj(z);
            }
        }
        elements.emplace_back(std::move(p));
    }
    return validate_measurement(std::move(elements), MeasurementKind::PVM);
}

ComplexMatrix sample_contraction(SplitMix64& rng, std::size_t rows, std::size_t cols) {
    ComplexMatrix t = sample_gaussian_matrix(rng, rows, cols);
    const double top = operator_norm(t);
    const double target = rng.uniform_positive();
    if (top > 0.0) t = t * (target / top);
    return t;
}

} // namespace entrobound
