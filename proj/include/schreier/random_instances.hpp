#pragma once

// Seeded generators for the randomized suites. Every generator draws only
// from the engine passed in, so an instance is reproducible from
// (master seed, suite id, instance number) via instance_rng.

#include <cstdint>
#include <random>
#include <vector>

#include "schreier/fin_vec.hpp"
#include "schreier/gl_index.hpp"
#include "schreier/norms.hpp"
#include "schreier/sequences.hpp"

namespace schreier::random {

std::mt19937_64 instance_rng(std::uint64_t master_seed, std::uint64_t suite, std::uint64_t instance);

// Random vector supported in [1, max_index]. Half the draws use values from
// {+-1, +-2} so ties between coordinates are common.
FinVec vector(std::mt19937_64& rng, Natural max_index);

// Strictly increasing sequence of `length` values in [1, max_value].
IndexSeq increasing(std::mt19937_64& rng, Natural length, Natural max_value);

// (m, n) with m_j <= n_j, both of the given length, values <= max_value.
std::pair<IndexSeq, IndexSeq> dominated_pair(std::mt19937_64& rng, Natural length, Natural max_value);

// (m, n) with m_j <= n_{j+1}, values <= max_value.
std::pair<IndexSeq, IndexSeq> interleaved_pair(std::mt19937_64& rng, Natural length, Natural max_value);

// Normalized block sequence for `space` with up to max_blocks blocks of up
// to max_block_size coordinates, starting near 1 with gaps of 0..2.
BlockSeq normalized_blocks(std::mt19937_64& rng, const SpaceSpec& space, std::size_t max_blocks,
                           std::size_t max_block_size);

// Normalized block sequence whose blocks all have sup-norm >= delta.
BlockSeq spiked_blocks(std::mt19937_64& rng, const SpaceSpec& space, double delta, std::size_t max_blocks);

// Vector with 2n - 1 coordinates of modulus >= 1 inside [1, max_index] plus small noise.
FinVec flat_candidate(std::mt19937_64& rng, Natural n, Natural max_index);

// `dim` linearly independent vectors supported in [1, max_index].
std::vector<FinVec> subspace_basis(std::mt19937_64& rng, Natural dim, Natural max_index);

}  // namespace schreier::random
