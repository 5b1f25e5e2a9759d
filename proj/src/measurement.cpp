#include "entrobound/measurement.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "entrobound/errors.hpp"

namespace entrobound {

namespace {

constexpr double kStateNormTol = 1e-10;
constexpr double kTraceTol = 1e-10;
constexpr double kPsdClamp = 1e-10;
constexpr double kCompletenessTol = 1e-10;
constexpr double kPvmOrthoTol = 1e-10;
constexpr double kElementEigMax = 1.0 + 1e-10;
constexpr double kProbClamp = 1e-12;
constexpr double kProbDriftTol = 1e-9;
constexpr double kSupportCutoff = 1e-12;
constexpr double kRankOneTol = 1e-10;

ComplexMatrix rebuild_from_spectrum(const SpectralDecomposition& eig,
                                    const std::vector<double>& values) {
    const std::size_t d = eig.eigenvalues.size();
    ComplexMatrix m(d, d);
    for (std::size_t k = 0; k < d; ++k) {
        if (values[k] == 0.0) continue;
        const CVector vk = eig.eigenvectors.column(k);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j)
                m(i, j) += values[k] * vk[i] * std::conj(vk[j]);
    }
    for (std::size_t i = 0; i < d; ++i) {
        m(i, i) = Complex{m(i, i).real(), 0.0};
        for (std::size_t j = i + 1; j < d; ++j) {
            const Complex z = 0.5 * (m(i, j) + std::conj(m(j, i)));
            m(i, j) = z;
            m(j, i) = std::conj(z);
        }
    }
    return m;
}

} // namespace

PureState::PureState(CVector amplitudes) : amplitudes_(std::move(amplitudes)) {
    if (amplitudes_.empty()) throw ValidationError("PureState: empty amplitude vector");
    const double n = norm(amplitudes_);
    if (std::abs(n - 1.0) > kStateNormTol) {
        std::ostringstream os;
        os << "PureState: amplitudes are not normalized (||psi|| = " << n << ")";
        throw ValidationError(os.str());
    }
}

DensityMatrix::DensityMatrix(HermitianOperator op) : op_(std::move(op)), spectrum_(hermitian_eig(op_)) {
    const double tr = op_.matrix().trace().real();
    if (std::abs(tr - 1.0) > kTraceTol) {
        std::ostringstream os;
        os << "DensityMatrix: trace " << tr << " differs from 1 beyond " << kTraceTol;
        throw ValidationError(os.str());
    }
    for (double lambda : spectrum_.eigenvalues) {
        if (lambda < -kPsdClamp) {
            std::ostringstream os;
            os << "DensityMatrix: not PSD (eigenvalue " << lambda << ")";
            throw ValidationError(os.str());
        }
    }
    for (std::size_t k = 0; k < spectrum_.eigenvalues.size(); ++k)
        if (spectrum_.eigenvalues[k] > kSupportCutoff) support_.push_back(k);
}

DensityMatrix::DensityMatrix(HermitianOperator op, SpectralDecomposition spectrum)
    : op_(std::move(op)), spectrum_(std::move(spectrum)) {
    for (std::size_t k = 0; k < spectrum_.eigenvalues.size(); ++k)
        if (spectrum_.eigenvalues[k] > kSupportCutoff) support_.push_back(k);
}

double OutcomeDistribution::max() const {
    double m = 0.0;
    for (double p : probabilities) m = std::max(m, p);
    return m;
}

OutcomeDistribution clamp_distribution(std::vector<double> raw) {
    for (std::size_t i = 0; i < raw.size(); ++i) {
        if (raw[i] < -kProbClamp) {
            std::ostringstream os;
            os << "clamp_distribution: probability " << i << " is " << raw[i]
               << ", below the clamp threshold -" << kProbClamp;
            throw ValidationError(os.str());
        }
        if (raw[i] < 0.0) raw[i] = 0.0;
    }
    double sum = 0.0;
    for (double p : raw) sum += p;
    if (std::abs(sum - 1.0) > kProbDriftTol) {
        std::ostringstream os;
        os << "clamp_distribution: probabilities sum to " << sum << ", drift exceeds " << kProbDriftTol;
        throw ValidationError(os.str());
    }
    for (double& p : raw) p /= sum;
    return OutcomeDistribution{std::move(raw)};
}

Measurement::Measurement(std::vector<HermitianOperator> elements, MeasurementKind kind,
                         std::vector<std::string> labels)
    : elements_(std::move(elements)), kind_(kind), labels_(std::move(labels)) {
    if (elements_.empty()) throw ValidationError("Measurement: no elements");
    const std::size_t d = elements_[0].dim();
    for (std::size_t i = 1; i < elements_.size(); ++i)
        if (elements_[i].dim() != d)
            throw ValidationError("Measurement: elements have mixed dimensions");

    if (labels_.empty()) {
        for (std::size_t i = 0; i < elements_.size(); ++i) labels_.push_back(std::to_string(i));
    } else if (labels_.size() != elements_.size()) {
        throw ValidationError("Measurement: label count differs from element count");
    }

    element_eigs_.reserve(elements_.size());
    for (std::size_t i = 0; i < elements_.size(); ++i) {
        element_eigs_.push_back(hermitian_eig(elements_[i]));
        const auto& ev = element_eigs_.back().eigenvalues;
        if (ev.back() < -kPsdClamp) {
            std::ostringstream os;
            os << "Measurement: element " << i << " is not PSD (eigenvalue " << ev.back() << ")";
            throw ValidationError(os.str());
        }
        if (ev.front() > kElementEigMax) {
            std::ostringstream os;
            os << "Measurement: element " << i << " has eigenvalue " << ev.front() << " above 1";
            throw ValidationError(os.str());
        }
    }

    ComplexMatrix sum(d, d);
    for (const auto& e : elements_) sum = sum + e.matrix();
    const double completeness_dev = (sum - ComplexMatrix::identity(d)).max_abs();
    if (completeness_dev > kCompletenessTol) {
        std::ostringstream os;
        os << "Measurement: elements do not sum to identity (max deviation " << completeness_dev << ")";
        throw ValidationError(os.str());
    }

    if (kind_ == MeasurementKind::PVM) {
        for (std::size_t i = 0; i < elements_.size(); ++i) {
            for (std::size_t k = 0; k < elements_.size(); ++k) {
                ComplexMatrix prod = elements_[i].matrix() * elements_[k].matrix();
                if (i == k) prod = prod - elements_[i].matrix();
                const double dev = prod.max_abs();
                if (dev > kPvmOrthoTol) {
                    std::ostringstream os;
                    os << "Measurement: PVM orthogonality fails for pair (" << i << ", " << k
                       << ") with deviation " << dev;
                    throw ValidationError(os.str());
                }
            }
        }
    }

    element_sqrts_.reserve(elements_.size());
    for (std::size_t i = 0; i < elements_.size(); ++i) {
        std::vector<double> roots(d);
        for (std::size_t k = 0; k < d; ++k) {
            const double lambda = element_eigs_[i].eigenvalues[k];
            roots[k] = lambda <= 0.0 ? 0.0 : std::sqrt(lambda);
        }
        element_sqrts_.push_back(rebuild_from_spectrum(element_eigs_[i], roots));
    }
}

std::size_t Measurement::dim() const { return elements_[0].dim(); }

Measurement validate_measurement(std::vector<HermitianOperator> elements, MeasurementKind kind,
                                 std::vector<std::string> labels) {
    return Measurement(std::move(elements), kind, std::move(labels));
}

OutcomeDistribution outcome_distribution(const Measurement& m, const DensityMatrix& rho) {
    if (m.dim() != rho.dim()) throw ValidationError("outcome_distribution: dimension mismatch");
    std::vector<double> raw(m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
        raw[i] = (m.element(i).matrix() * rho.op().matrix()).trace().real();
    return clamp_distribution(std::move(raw));
}

OutcomeDistribution outcome_distribution(const Measurement& m, const PureState& psi) {
    if (m.dim() != psi.dim()) throw ValidationError("outcome_distribution: dimension mismatch");
    std::vector<double> raw(m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
        raw[i] = inner(psi.amplitudes(), m.element(i).matrix().apply(psi.amplitudes())).real();
    return clamp_distribution(std::move(raw));
}

std::optional<RankOneDecomposition> rank_one_decomposition(const Measurement& m,
                                                           std::size_t* offending) {
    RankOneDecomposition out;
    for (std::size_t i = 0; i < m.size(); ++i) {
        const auto& eig = m.element_eig(i);
        const double second = eig.eigenvalues.size() > 1 ? eig.eigenvalues[1] : 0.0;
        if (second > kRankOneTol) {
            if (offending) *offending = i;
            return std::nullopt;
        }
        out.weights.push_back(std::max(eig.eigenvalues[0], 0.0));
        out.vectors.push_back(eig.eigenvectors.column(0));
    }
    return out;
}

DensityMatrix pure_to_density(const PureState& psi) {
    const std::size_t d = psi.dim();
    ComplexMatrix column(d, 1);
    for (std::size_t i = 0; i < d; ++i) column(i, 0) = psi.amplitudes()[i];
    // Spectrum is known exactly: eigenvalue 1 on psi, zeros on a
    // completed orthonormal basis.
    SpectralDecomposition spectrum;
    spectrum.eigenvalues.assign(d, 0.0);
    spectrum.eigenvalues[0] = 1.0;
    spectrum.eigenvectors = complete_to_unitary(column);
    HermitianOperator op(ComplexMatrix::outer(psi.amplitudes(), psi.amplitudes()));
    return DensityMatrix(std::move(op), std::move(spectrum));
}

} // namespace entrobound
