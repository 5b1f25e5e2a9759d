/*
 * Naimark extension of a POVM to a projective measurement.
 *
 * Construction: stack the element roots E_i^{1/2} into an isometry
 * W : C^d -> C^{nd}, complete W to a unitary U, and set
 *
 *   Etilde_i = U^dagger Pi_i U = B_i^dagger B_i,
 *
 * where Pi_i selects the i-th d-dimensional block and B_i is the
 * corresponding row block of U. In the embedded basis (original space =
 * first d coordinates) each Etilde_i is a projector whose top-left d x d
 * block equals E_i, the set resolves the identity, and every embedded
 * state reproduces the original outcome statistics.
 *
 * A companion measurement G on the original space extends block-
 * diagonally: Gtilde_1 = diag(G_1, I_L), Gtilde_j = diag(G_j, 0). The
 * extension attaches the identity on the ancilla to outcome 1.
 */
#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "entrobound/linalg.hpp"
#include "entrobound/measurement.hpp"

namespace entrobound {

struct NaimarkDilation {
    Measurement original;            // the E_i (POVM) on C^d
    std::size_t enlarged_dim = 0;    // n * d
    Measurement projectors;          // the Etilde_i (PVM) on the enlarged space
    ComplexMatrix embedding_unitary; // U, first d columns = stacked roots
};

NaimarkDilation dilate(const Measurement& e);

// Zero-pads psi to the enlarged dimension.
PureState embed_state(const PureState& psi, const NaimarkDilation& dilation);

// rho padded into the top-left block; spectrum carries over with zeros.
DensityMatrix embed_density(const DensityMatrix& rho, const NaimarkDilation& dilation);

Measurement extend_companion(const Measurement& g, const NaimarkDilation& dilation);

struct DilationCheck {
    std::string name;
    double deviation = 0.0;
    double tol = 0.0;
    bool pass = false;
};

struct DilationReport {
    std::vector<DilationCheck> checks;
    // Per outcome i, max over states of | ||Etilde_i psitilde|| - ||E_i psi|| |.
    // Nonzero whenever the off-diagonal corner blocks act on psi; the
    // projector/POVM statistics still agree because the *root* norms match.
    std::vector<double> norm_gap;

    bool all_pass() const;
    double max_norm_gap() const;
};

DilationReport verify_dilation(const NaimarkDilation& dilation, const Measurement& g,
                               const std::vector<PureState>& states);

} // namespace entrobound
