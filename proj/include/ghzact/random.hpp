#pragma once

// Seeded generators of small exact test inputs. Entries are small integers so
// exact arithmetic stays cheap; every generator is deterministic per rng state.

#include <random>

#include "ghzact/channels.hpp"

namespace ghzact {

using Rng = std::mt19937_64;

/// Integer in [lo, hi].
long random_int(Rng& rng, long lo, long hi);
/// Unit-trace PSD: normalized sum of `terms` outer products of integer vectors.
RMatrix random_state(std::size_t dim, Rng& rng, std::size_t terms = 3);
RMatrix random_symmetric(std::size_t dim, Rng& rng, long range = 3);
/// Non-negative Θ coefficients. Half of the draws are the depolarized
/// Jamiołkowski state of a random separable map (always PPT), half are
/// independent small integers (mostly not PPT).
ThetaCoeffs random_coefficients(std::size_t n, Rng& rng);
/// Product Kraus terms with integer factors and weights in {1, 2, 3}.
SeparableMap random_separable_map(const std::vector<std::size_t>& input_dims,
                                  const std::vector<std::size_t>& output_dims, std::size_t terms, Rng& rng);

}  // namespace ghzact
