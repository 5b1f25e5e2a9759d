/*
 * Quantum states and generalized measurements.
 *
 * A Measurement is an ordered list of PSD elements M_i summing to the
 * identity (POVM); PVM additionally requires M_i M_k = delta_ik M_i.
 * Outcome probabilities follow the Born rule p_i = tr(M_i rho).
 * Element eigendecompositions and square roots are computed once at
 * validation time and cached, since every bound functional needs them.
 */
#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "entrobound/linalg.hpp"

namespace entrobound {

enum class MeasurementKind { POVM, PVM };

class PureState {
public:
    // Requires || psi || = 1 within 1e-10.
    explicit PureState(CVector amplitudes);

    std::size_t dim() const { return amplitudes_.size(); }
    const CVector& amplitudes() const { return amplitudes_; }

    bool operator==(const PureState& other) const = default;

private:
    CVector amplitudes_;
};

class DensityMatrix {
public:
    // Requires unit trace within 1e-10 and eigenvalues >= -1e-10.
    explicit DensityMatrix(HermitianOperator op);

    std::size_t dim() const { return op_.dim(); }
    const HermitianOperator& op() const { return op_; }
    const SpectralDecomposition& spectrum() const { return spectrum_; }
    // Indices of eigenvalues above the support cutoff 1e-12.
    const std::vector<std::size_t>& support() const { return support_; }

private:
    DensityMatrix(HermitianOperator op, SpectralDecomposition spectrum);

    HermitianOperator op_;
    SpectralDecomposition spectrum_;
    std::vector<std::size_t> support_;

    friend DensityMatrix pure_to_density(const PureState& psi);
};

struct OutcomeDistribution {
    std::vector<double> probabilities;

    std::size_t size() const { return probabilities.size(); }
    double operator[](std::size_t i) const { return probabilities[i]; }
    double max() const;
};

// Raw Born-rule values can dip a hair below zero; entries in [-1e-12, 0)
// are clamped to 0 and the vector renormalized. Total drift beyond 1e-9
// signals a broken measurement and raises ValidationError.
OutcomeDistribution clamp_distribution(std::vector<double> raw);

class Measurement {
public:
    Measurement(std::vector<HermitianOperator> elements, MeasurementKind kind,
                std::vector<std::string> labels = {});

    std::size_t dim() const;
    std::size_t size() const { return elements_.size(); }
    MeasurementKind kind() const { return kind_; }
    const std::vector<std::string>& labels() const { return labels_; }

    const HermitianOperator& element(std::size_t i) const { return elements_[i]; }
    const SpectralDecomposition& element_eig(std::size_t i) const { return element_eigs_[i]; }
    // M_i^{1/2}, rebuilt from the cached eigendecomposition.
    const ComplexMatrix& element_sqrt(std::size_t i) const { return element_sqrts_[i]; }

private:
    std::vector<HermitianOperator> elements_;
    MeasurementKind kind_;
    std::vector<std::string> labels_;
    std::vector<SpectralDecomposition> element_eigs_;
    std::vector<ComplexMatrix> element_sqrts_;
};

// Validating constructor wrapper; reports which invariant failed, at
// which element index, and by how much.
Measurement validate_measurement(std::vector<HermitianOperator> elements, MeasurementKind kind,
                                 std::vector<std::string> labels = {});

OutcomeDistribution outcome_distribution(const Measurement& m, const DensityMatrix& rho);
// Pure-state shortcut: p_i = <psi, M_i psi>.
OutcomeDistribution outcome_distribution(const Measurement& m, const PureState& psi);

struct RankOneDecomposition {
    std::vector<double> weights;   // mu_i in [0, 1]
    std::vector<CVector> vectors;  // unit m_i with M_i = mu_i m_i m_i^dagger
};

// Per element: accept when the second-largest eigenvalue is <= 1e-10.
// Returns nullopt otherwise; `offending`, when non-null, receives the
// first index that is not rank one.
std::optional<RankOneDecomposition> rank_one_decomposition(const Measurement& m,
                                                           std::size_t* offending = nullptr);

DensityMatrix pure_to_density(const PureState& psi);

} // namespace entrobound
