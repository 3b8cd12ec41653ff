#include "schreier/sequences.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "schreier/errors.hpp"

namespace schreier {

BlockSeq::BlockSeq(std::vector<FinVec> blocks) : blocks_(std::move(blocks)) {
  for (std::size_t j = 0; j < blocks_.size(); ++j) {
    if (blocks_[j].is_zero()) throw PreconditionError("block " + std::to_string(j + 1) + " is zero");
    if (j > 0 && blocks_[j - 1].max_support() >= blocks_[j].min_support()) {
      throw PreconditionError("block supports must be strictly increasing at block " +
                              std::to_string(j + 1));
    }
  }
}

bool BlockSeq::is_normalized(const SpaceSpec& space, double tolerance) const {
  return std::all_of(blocks_.begin(), blocks_.end(), [&](const FinVec& u) {
    return std::fabs(norm(u, space).value - 1.0) <= tolerance;
  });
}

bool BlockSeq::is_skipped() const noexcept {
  for (std::size_t j = 1; j < blocks_.size(); ++j) {
    if (blocks_[j].min_support() - blocks_[j - 1].max_support() < 2) return false;
  }
  return true;
}

FinVec BlockSeq::combine(const CoeffVec& alpha) const { return schreier::combine(blocks_, alpha); }

IndexSeq BlockSeq::maxima() const {
  std::vector<Natural> out;
  out.reserve(blocks_.size());
  for (const auto& u : blocks_) out.push_back(u.max_support());
  return IndexSeq(std::move(out));
}

FinVec combine(const std::vector<FinVec>& vectors, const CoeffVec& alpha) {
  if (alpha.size() > vectors.size()) {
    throw PreconditionError("more coefficients (" + std::to_string(alpha.size()) + ") than vectors (" +
                            std::to_string(vectors.size()) + ")");
  }
  FinVec out;
  for (std::size_t j = 0; j < alpha.size(); ++j) {
    if (alpha[j] != 0.0) out += alpha[j] * vectors[j];
  }
  return out;
}

FinVec expand(const CoeffVec& alpha, const IndexSeq& m) {
  if (alpha.size() > m.length()) {
    throw PreconditionError("expand: " + std::to_string(alpha.size()) + " coefficients for " +
                            std::to_string(m.length()) + " indices");
  }
  FinVec out;
  for (std::size_t j = 0; j < alpha.size(); ++j) out.set(m.at(j + 1), alpha[j]);
  return out;
}

std::vector<FinVec> unit_vectors(const IndexSeq& indices) {
  std::vector<FinVec> out;
  out.reserve(indices.length());
  for (Natural n : indices.as_set()) out.push_back(FinVec::unit(n));
  return out;
}

namespace {

InequalityCheck compare(double lhs, double rhs) {
  return {lhs, rhs, lhs <= rhs + kInequalitySlack};
}

}  // namespace

InequalityCheck check_domination(const SpaceSpec& space, const std::vector<FinVec>& source,
                                 const std::vector<FinVec>& target, double constant,
                                 const CoeffVec& alpha) {
  if (source.size() != target.size()) {
    throw PreconditionError("check_domination: source and target lengths differ");
  }
  const double lhs = norm(combine(target, alpha), space).value;
  const double rhs = constant * norm(combine(source, alpha), space).value;
  return compare(lhs, rhs);
}

double interleave_constant(const SpaceSpec& space) {
  return space.kind() == SpaceKind::Bp ? 2.0 : std::pow(2.0, 1.0 / space.p());
}

double block_upper_constant(const SpaceSpec& space) {
  return space.kind() == SpaceKind::Bp ? std::pow(3.0, 1.0 / space.p()) : 1.0;
}

double projection_constant(const SpaceSpec& space, double delta) {
  return interleave_constant(space) * block_upper_constant(space) / delta;
}

InequalityCheck check_block_upper_bound(const SpaceSpec& space, const BlockSeq& u, const CoeffVec& alpha) {
  return check_block_upper_bound(space, u, alpha, block_upper_constant(space));
}

InequalityCheck check_block_upper_bound(const SpaceSpec& space, const BlockSeq& u, const CoeffVec& alpha,
                                        double constant) {
  if (!u.is_normalized(space)) {
    throw PreconditionError("check_block_upper_bound: blocks are not normalized in " + space.name());
  }
  const double lhs = norm(u.combine(alpha), space).value;
  const double rhs = constant * norm(expand(alpha, u.maxima()), space).value;
  return compare(lhs, rhs);
}

IndexSeq spike_coordinates(const BlockSeq& u, double delta) {
  if (!(delta > 0.0)) throw PreconditionError("spike threshold delta must be positive");
  std::vector<Natural> out;
  out.reserve(u.size());
  for (std::size_t j = 0; j < u.size(); ++j) {
    const auto& entries = u[j].entries();
    const auto it = std::find_if(entries.begin(), entries.end(),
                                 [&](const auto& e) { return std::fabs(e.second) >= delta; });
    if (it == entries.end()) {
      throw PreconditionError("block " + std::to_string(j + 1) + " has no coordinate of modulus >= " +
                              std::to_string(delta));
    }
    out.push_back(it->first);
  }
  return IndexSeq(std::move(out));
}

double min_sup_norm(const BlockSeq& u) {
  if (u.size() == 0) throw PreconditionError("empty block sequence");
  double out = HUGE_VAL;
  for (const auto& b : u.blocks()) out = std::min(out, b.sup_norm());
  return out;
}

InequalityCheck check_spike_lower_bound(const SpaceSpec& space, const BlockSeq& u, double delta,
                                        const CoeffVec& alpha) {
  const IndexSeq spikes = spike_coordinates(u, delta);
  const double lhs = norm(expand(alpha, spikes), space).value;
  const double rhs = norm(u.combine(alpha), space).value / delta;
  return compare(lhs, rhs);
}

FinVec apply_projection(const BlockSeq& u, const FinVec& x, double delta) {
  const IndexSeq spikes = spike_coordinates(u, delta);
  FinVec out;
  for (std::size_t j = 0; j < u.size(); ++j) {
    const Natural n = spikes.at(j + 1);
    const double coefficient = x[n] / u[j][n];
    if (coefficient != 0.0) out += coefficient * u[j];
  }
  return out;
}

FinVec apply_projection(const SpaceSpec&, const BlockSeq& u, const FinVec& x) {
  return apply_projection(u, x, min_sup_norm(u));
}

InequalityCheck check_projection_bound(const SpaceSpec& space, const BlockSeq& u, double delta,
                                       const FinVec& x) {
  const double lhs = norm(apply_projection(u, x, delta), space).value;
  const double rhs = projection_constant(space, delta) * norm(x, space).value;
  return compare(lhs, rhs);
}

double uncomplemented_weight(Natural n) {
  if (n == 0) throw PreconditionError("weights are indexed from n = 1");
  Natural k = 0;
  while (n > 0) {
    n >>= 1;
    ++k;
  }
  return 1.0 / static_cast<double>(k);
}

BlockSeq build_uncomplemented(const SpaceSpec& space, const BlockSeq& u) {
  if (!u.is_skipped()) throw PreconditionError("build_uncomplemented: block sequence is not skipped");
  if (!u.is_normalized(space)) {
    throw PreconditionError("build_uncomplemented: blocks are not normalized in " + space.name());
  }
  std::vector<FinVec> out;
  out.reserve(u.size());
  for (std::size_t j = 0; j < u.size(); ++j) {
    FinVec v = u[j];
    v.set(u[j].max_support() + 1, uncomplemented_weight(j + 1));
    out.push_back(std::move(v));
  }
  return BlockSeq(std::move(out));
}

double growth_closed_form(const SpaceSpec& space, Natural k) {
  const double p = space.p();
  const double km1 = static_cast<double>(k - 1);
  if (space.kind() == SpaceKind::Sp) return std::pow(2.0, km1 / p) / static_cast<double>(k);
  return std::pow(std::pow(2.0, 1.0 - 1.0 / p), km1) / static_cast<double>(k);
}

std::vector<GrowthRow> growth_table(const SpaceSpec& space, Natural k_max) {
  if (k_max < 1 || k_max > kGrowthTableMaxK) {
    throw BoundExceeded("growth_table: k_max must lie in [1, " + std::to_string(kGrowthTableMaxK) + "]");
  }
  std::vector<GrowthRow> rows;
  for (Natural k = 1; k <= k_max; ++k) {
    const Natural lo = Natural{1} << (k - 1);
    const FinVec block = FinVec::constant_on(FinSet::interval(lo, 2 * lo - 1));
    GrowthRow row;
    row.k = k;
    row.companion_norm = norm_companion(block, space);
    row.spike_norm = norm(block, space).value / static_cast<double>(k);
    row.lower_bound_c = row.spike_norm / row.companion_norm;
    rows.push_back(row);
  }
  return rows;
}

FinSet common_equivalent_indices(const IndexSeq& m, const IndexSeq& n) {
  const Natural length = std::min(m.length(), n.length());
  std::vector<Natural> chosen{1};
  for (Natural j = 2; j <= length; ++j) {
    const Natural prev = chosen.back();
    if (m.at(prev) <= n.at(j) && n.at(prev) <= m.at(j)) chosen.push_back(j);
  }
  return FinSet(std::move(chosen));
}

CoeffVec random_coefficients(std::size_t length, std::mt19937_64& rng) {
  CoeffVec alpha(length);
  if (length == 0) return alpha;
  std::uniform_real_distribution<double> entry(-1.0, 1.0);
  for (auto& a : alpha) a = entry(rng);
  std::uniform_int_distribution<std::size_t> pick(0, length - 1);
  std::uniform_real_distribution<double> magnitude(0.5, 1.0);
  std::bernoulli_distribution negative(0.5);
  const double forced = magnitude(rng);
  alpha[pick(rng)] = negative(rng) ? -forced : forced;
  return alpha;
}

double estimate_domination_ratio(const SpaceSpec& space, const std::vector<FinVec>& source,
                                 const std::vector<FinVec>& target, std::size_t trials,
                                 std::mt19937_64& rng) {
  double best = 0.0;
  for (std::size_t t = 0; t < trials; ++t) {
    const auto alpha = random_coefficients(source.size(), rng);
    const auto check = check_domination(space, source, target, 1.0, alpha);
    best = std::max(best, check.ratio());
  }
  return best;
}

}  // namespace schreier
