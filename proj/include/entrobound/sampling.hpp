/*
 * Seeded random ensembles for certificate campaigns.
 *
 * Pure states are Haar-uniform (normalized complex Gaussians). Mixed
 * states are Wishart-style rho = G G^dagger / tr. POVMs normalize a set
 * of random PSD operators A_i through S^{-1/2} A_i S^{-1/2} with
 * S = sum_i A_i, which makes completeness exact up to roundoff; rank-one
 * POVMs feed rank-one A_i through the same map. PVMs partition the
 * columns of a Haar unitary into projectors.
 */
#pragma once

#include <cstddef>

#include "entrobound/linalg.hpp"
#include "entrobound/measurement.hpp"
#include "entrobound/rng.hpp"

namespace entrobound {

ComplexMatrix sample_gaussian_matrix(SplitMix64& rng, std::size_t rows, std::size_t cols);

PureState sample_pure_haar(SplitMix64& rng, std::size_t d);
DensityMatrix sample_mixed(SplitMix64& rng, std::size_t d);

Measurement sample_povm(SplitMix64& rng, std::size_t d, std::size_t n);
// Needs n >= d (a rank-one resolution of the identity has at least d
// elements); n is raised to d when below.
Measurement sample_rank_one_povm(SplitMix64& rng, std::size_t d, std::size_t n);
// Needs n <= d; n is clamped to d when above. Projector ranks are spread
// as evenly as the dimension allows.
Measurement sample_pvm(SplitMix64& rng, std::size_t d, std::size_t n);

// Random matrix rescaled so its largest singular value is uniform in
// (0, 1]; always passes the contraction certificate.
ComplexMatrix sample_contraction(SplitMix64& rng, std::size_t rows, std::size_t cols);

} // namespace entrobound
