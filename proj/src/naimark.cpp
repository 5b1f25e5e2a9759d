#include "entrobound/naimark.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "entrobound/bounds.hpp"
#include "entrobound/errors.hpp"

namespace entrobound {

namespace {

constexpr double kProjectorSnap = 1e-8;
constexpr double kVerifyTol = 1e-9;

// Snaps eigenvalues to {0,1} and rebuilds; decouples the projector
// property from eigensolver roundoff.
HermitianOperator snap_to_projector(const HermitianOperator& op) {
    const SpectralDecomposition eig = hermitian_eig(op);
    const std::size_t d = op.dim();
    ComplexMatrix m(d, d);
    for (std::size_t k = 0; k < d; ++k) {
        const double lambda = eig.eigenvalues[k];
        if (std::abs(lambda) <= kProjectorSnap) continue;
        if (std::abs(lambda - 1.0) > kProjectorSnap) {
            std::ostringstream os;
            os << "dilate: block conjugation produced eigenvalue " << lambda
               << ", not within " << kProjectorSnap << " of {0,1}";
            throw ValidationError(os.str());
        }
        const CVector vk = eig.eigenvectors.column(k);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j)
                m(i, j) += vk[i] * std::conj(vk[j]);
    }
    for (std::size_t i = 0; i < d; ++i) {
        m(i, i) = Complex{m(i, i).real(), 0.0};
        for (std::size_t j = i + 1; j < d; ++j) {
            const Complex z = 0.5 * (m(i, j) + std::conj(m(j, i)));
            m(i, j) = z;
            m(j, i) = std::conj(z);
        }
    }
    return HermitianOperator(std::move(m));
}

DilationCheck make_check(std::string name, double deviation, double tol) {
    DilationCheck c;
    c.name = std::move(name);
    c.deviation = deviation;
    c.tol = tol;
    c.pass = deviation <= tol;
    return c;
}

} // namespace

bool DilationReport::all_pass() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

double DilationReport::max_norm_gap() const {
    double m = 0.0;
    for (double g : norm_gap) m = std::max(m, g);
    return m;
}

NaimarkDilation dilate(const Measurement& e) {
    const std::size_t d = e.dim();
    const std::size_t n = e.size();
    const std::size_t big = n * d;

    ComplexMatrix w(big, d);
    for (std::size_t i = 0; i < n; ++i) w.set_block(i * d, 0, e.element_sqrt(i));
    // W^dagger W = sum_i E_i = I, so W is an isometry.
    const ComplexMatrix u = complete_to_unitary(w);

    std::vector<HermitianOperator> projectors;
    projectors.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const ComplexMatrix rows = u.block(i * d, 0, d, big);
        projectors.push_back(snap_to_projector(HermitianOperator(rows.adjoint() * rows)));
    }

    NaimarkDilation dilation{e, big,
                             validate_measurement(std::move(projectors), MeasurementKind::PVM,
                                                  e.labels()),
                             u};
    return dilation;
}

PureState embed_state(const PureState& psi, const NaimarkDilation& dilation) {
    if (psi.dim() != dilation.original.dim())
        throw ValidationError("embed_state: dimension mismatch");
    CVector amp(dilation.enlarged_dim, Complex{0.0, 0.0});
    for (std::size_t i = 0; i < psi.dim(); ++i) amp[i] = psi.amplitudes()[i];
    return PureState(std::move(amp));
}

DensityMatrix embed_density(const DensityMatrix& rho, const NaimarkDilation& dilation) {
    if (rho.dim() != dilation.original.dim())
        throw ValidationError("embed_density: dimension mismatch");
    ComplexMatrix m(dilation.enlarged_dim, dilation.enlarged_dim);
    m.set_block(0, 0, rho.op().matrix());
    return DensityMatrix(HermitianOperator(std::move(m)));
}

Measurement extend_companion(const Measurement& g, const NaimarkDilation& dilation) {
    const std::size_t d = dilation.original.dim();
    if (g.dim() != d) throw ValidationError("extend_companion: dimension mismatch");
    const std::size_t big = dilation.enlarged_dim;

    std::vector<HermitianOperator> extended;
    extended.reserve(g.size());
    for (std::size_t j = 0; j < g.size(); ++j) {
        ComplexMatrix m(big, big);
        m.set_block(0, 0, g.element(j).matrix());
        if (j == 0)
            for (std::size_t k = d; k < big; ++k) m(k, k) = Complex{1.0, 0.0};
        extended.emplace_back(std::move(m));
    }
    return validate_measurement(std::move(extended), g.kind(), g.labels());
}

DilationReport verify_dilation(const NaimarkDilation& dilation, const Measurement& g,
                               const std::vector<PureState>& states) {
    const Measurement& e = dilation.original;
    const Measurement& et = dilation.projectors;
    const std::size_t d = e.dim();
    const std::size_t big = dilation.enlarged_dim;
    const Measurement gt = extend_companion(g, dilation);

    DilationReport report;

    double projector_dev = 0.0;
    double corner_dev = 0.0;
    for (std::size_t i = 0; i < et.size(); ++i) {
        const ComplexMatrix& p = et.element(i).matrix();
        projector_dev = std::max(projector_dev, (p * p - p).max_abs());
        corner_dev = std::max(corner_dev, (p.block(0, 0, d, d) - e.element(i).matrix()).max_abs());
    }
    ComplexMatrix sum(big, big);
    for (std::size_t i = 0; i < et.size(); ++i) sum = sum + et.element(i).matrix();
    const double completeness_dev = (sum - ComplexMatrix::identity(big)).max_abs();

    double probability_dev = 0.0;
    double norm_e_dev = 0.0;
    double norm_g_dev = 0.0;
    double inner_dev = 0.0;
    double f_dev = 0.0;
    report.norm_gap.assign(e.size(), 0.0);

    for (const PureState& psi : states) {
        const PureState psit = embed_state(psi, dilation);
        const CVector& amp = psi.amplitudes();
        const CVector& ampt = psit.amplitudes();

        for (std::size_t i = 0; i < e.size(); ++i) {
            const CVector e_psi = e.element(i).matrix().apply(amp);
            const CVector et_psit = et.element(i).matrix().apply(ampt);
            probability_dev = std::max(
                probability_dev, std::abs(inner(ampt, et_psit).real() - inner(amp, e_psi).real()));
            norm_e_dev = std::max(norm_e_dev,
                                  std::abs(norm(et.element_sqrt(i).apply(ampt)) -
                                           norm(e.element_sqrt(i).apply(amp))));
            report.norm_gap[i] =
                std::max(report.norm_gap[i], std::abs(norm(et_psit) - norm(e_psi)));

            for (std::size_t j = 0; j < g.size(); ++j) {
                const Complex lhs = inner(et_psit, gt.element(j).matrix().apply(ampt));
                const Complex rhs = inner(e_psi, g.element(j).matrix().apply(amp));
                inner_dev = std::max(inner_dev, std::abs(lhs - rhs));
            }
        }
        for (std::size_t j = 0; j < g.size(); ++j)
            norm_g_dev = std::max(norm_g_dev, std::abs(norm(gt.element_sqrt(j).apply(ampt)) -
                                                       norm(g.element_sqrt(j).apply(amp))));

        f_dev = std::max(f_dev, std::abs(f_pure(et, gt, psit) - f_pure(e, g, psi)));
    }

    report.checks.push_back(make_check("projector", projector_dev, kVerifyTol));
    report.checks.push_back(make_check("completeness", completeness_dev, kVerifyTol));
    report.checks.push_back(make_check("corner_block", corner_dev, kVerifyTol));
    report.checks.push_back(make_check("probability", probability_dev, kVerifyTol));
    report.checks.push_back(make_check("norm_e", norm_e_dev, kVerifyTol));
    report.checks.push_back(make_check("norm_g", norm_g_dev, kVerifyTol));
    report.checks.push_back(make_check("inner_product", inner_dev, kVerifyTol));
    report.checks.push_back(make_check("f_preservation", f_dev, kVerifyTol));
    return report;
}

} // namespace entrobound
