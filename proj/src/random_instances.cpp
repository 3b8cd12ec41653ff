#include "schreier/random_instances.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numeric>

namespace schreier::random {

std::mt19937_64 instance_rng(std::uint64_t master_seed, std::uint64_t suite, std::uint64_t instance) {
  std::seed_seq seq{static_cast<std::uint32_t>(master_seed), static_cast<std::uint32_t>(master_seed >> 32),
                    static_cast<std::uint32_t>(suite), static_cast<std::uint32_t>(instance),
                    static_cast<std::uint32_t>(instance >> 32)};
  return std::mt19937_64(seq);
}

namespace {

Natural uniform(std::mt19937_64& rng, Natural lo, Natural hi) {
  return std::uniform_int_distribution<Natural>(lo, hi)(rng);
}

double uniform_real(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

double random_sign(std::mt19937_64& rng) { return std::bernoulli_distribution(0.5)(rng) ? -1.0 : 1.0; }

// Distinct values from [lo, hi], sorted.
std::vector<Natural> sample_sorted(std::mt19937_64& rng, Natural count, Natural lo, Natural hi) {
  std::vector<Natural> pool(hi - lo + 1);
  std::iota(pool.begin(), pool.end(), lo);
  std::shuffle(pool.begin(), pool.end(), rng);
  pool.resize(std::min<std::size_t>(count, pool.size()));
  std::sort(pool.begin(), pool.end());
  return pool;
}

}  // namespace

FinVec vector(std::mt19937_64& rng, Natural max_index) {
  const bool ties = std::bernoulli_distribution(0.5)(rng);
  const Natural count = uniform(rng, 0, max_index);
  FinVec x;
  for (Natural n : sample_sorted(rng, count, 1, max_index)) {
    const double v = ties ? static_cast<double>(uniform(rng, 1, 2)) * random_sign(rng)
                          : uniform_real(rng, -1.0, 1.0);
    x.set(n, v);
  }
  return x;
}

IndexSeq increasing(std::mt19937_64& rng, Natural length, Natural max_value) {
  return IndexSeq(sample_sorted(rng, length, 1, max_value));
}

std::pair<IndexSeq, IndexSeq> dominated_pair(std::mt19937_64& rng, Natural length, Natural max_value) {
  // Draw 2 * length values and split them so that n_j >= m_j: take a sorted
  // sample for m, then lift each n_j to at least m_j and past n_{j-1}.
  const Natural room = max_value - length;
  std::vector<Natural> m = sample_sorted(rng, length, 1, room);
  std::vector<Natural> n(length);
  for (Natural j = 0; j < length; ++j) {
    const Natural floor = std::max(m[j], j > 0 ? n[j - 1] + 1 : Natural{1});
    const Natural ceiling = std::min(max_value - (length - 1 - j), floor + 4);
    n[j] = uniform(rng, floor, std::max(floor, ceiling));
  }
  return {IndexSeq(std::move(m)), IndexSeq(std::move(n))};
}

std::pair<IndexSeq, IndexSeq> interleaved_pair(std::mt19937_64& rng, Natural length, Natural max_value) {
  // n first; then m_j in (m_{j-1}, n_{j+1}], biased toward the top so the
  // constraint is tight. The last m_j only needs to exceed m_{j-1}.
  std::vector<Natural> n = sample_sorted(rng, length, 1, max_value);
  std::vector<Natural> m(length);
  for (Natural j = 0; j < length; ++j) {
    const Natural lo = j > 0 ? m[j - 1] + 1 : 1;
    const Natural hi = j + 1 < length ? n[j + 1] : std::max(lo, std::min(max_value, n[j] + 3));
    const Natural tight_lo = hi > lo + 2 ? hi - 2 : lo;
    m[j] = std::bernoulli_distribution(0.7)(rng) ? uniform(rng, tight_lo, hi) : uniform(rng, lo, hi);
  }
  return {IndexSeq(std::move(m)), IndexSeq(std::move(n))};
}

namespace {

FinVec normalized(FinVec v, const SpaceSpec& space) {
  const double length = norm(v, space).value;
  return (1.0 / length) * v;
}

}  // namespace

BlockSeq normalized_blocks(std::mt19937_64& rng, const SpaceSpec& space, std::size_t max_blocks,
                           std::size_t max_block_size) {
  const std::size_t blocks = uniform(rng, 1, max_blocks);
  std::vector<FinVec> out;
  Natural next = uniform(rng, 1, 3);
  for (std::size_t b = 0; b < blocks; ++b) {
    // Lengths around min supp + 1 straddle the Schreier threshold for a single block.
    const Natural span = uniform(rng, 1, std::min<Natural>(max_block_size, next + 1));
    FinVec u;
    // Flat blocks share one sign so their mass does not cancel on a Schreier set.
    const bool flat = std::bernoulli_distribution(0.5)(rng);
    const double sign = random_sign(rng);
    for (Natural i = 0; i < span; ++i) {
      const double v = flat ? sign : uniform_real(rng, -1.0, 1.0);
      if (flat || i == 0 || std::bernoulli_distribution(0.8)(rng)) u.set(next + i, v == 0.0 ? 1.0 : v);
    }
    if (u.is_zero()) u.set(next, 1.0);
    next = u.max_support() + 1 + uniform(rng, 0, 1);
    out.push_back(normalized(std::move(u), space));
  }
  return BlockSeq(std::move(out));
}

BlockSeq spiked_blocks(std::mt19937_64& rng, const SpaceSpec& space, double delta, std::size_t max_blocks) {
  const std::size_t blocks = uniform(rng, 1, max_blocks);
  std::vector<FinVec> out;
  Natural next = uniform(rng, 1, 3);
  for (std::size_t b = 0; b < blocks; ++b) {
    FinVec accepted = FinVec::unit(next);
    for (int attempt = 0; attempt < 32; ++attempt) {
      const Natural span = uniform(rng, 1, 4);
      const Natural spike = uniform(rng, 0, span - 1);
      const double noise = uniform_real(rng, 0.0, 1.0);
      FinVec u;
      for (Natural i = 0; i < span; ++i) {
        const double v = i == spike ? random_sign(rng) : uniform_real(rng, -noise, noise);
        u.set(next + i, v);
      }
      if (u.is_zero()) continue;
      u = normalized(std::move(u), space);
      if (u.sup_norm() >= delta) {
        accepted = std::move(u);
        break;
      }
    }
    next = accepted.max_support() + 1 + uniform(rng, 0, 2);
    out.push_back(std::move(accepted));
  }
  return BlockSeq(std::move(out));
}

FinVec flat_candidate(std::mt19937_64& rng, Natural n, Natural max_index) {
  const Natural peaks = 2 * n - 1;
  FinVec x;
  for (Natural idx : sample_sorted(rng, peaks, 1, max_index)) {
    x.set(idx, random_sign(rng) * uniform_real(rng, 1.0, 2.0));
  }
  for (Natural idx = 1; idx <= max_index; ++idx) {
    if (x[idx] == 0.0 && std::bernoulli_distribution(0.3)(rng)) x.set(idx, uniform_real(rng, -0.9, 0.9));
  }
  return x;
}

std::vector<FinVec> subspace_basis(std::mt19937_64& rng, Natural dim, Natural max_index) {
  for (;;) {
    std::vector<FinVec> basis;
    for (Natural d = 0; d < dim; ++d) {
      FinVec b;
      const Natural count = uniform(rng, 1, max_index);
      for (Natural idx : sample_sorted(rng, count, 1, max_index)) b.set(idx, uniform_real(rng, -1.0, 1.0));
      basis.push_back(std::move(b));
    }
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(max_index), static_cast<Eigen::Index>(dim));
    for (Natural d = 0; d < dim; ++d) {
      for (const auto& [idx, v] : basis[d].entries()) a(static_cast<Eigen::Index>(idx - 1), static_cast<Eigen::Index>(d)) = v;
    }
    if (Eigen::FullPivLU<Eigen::MatrixXd>(a).rank() == static_cast<Eigen::Index>(dim)) return basis;
  }
}

}  // namespace schreier::random
