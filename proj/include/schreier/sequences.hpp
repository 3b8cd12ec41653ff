#pragma once

// Block basic sequences of the unit vector basis and the finite-section
// inequalities that relate them to subsequences of the basis:
//   * domination between basis subsequences (1 when m_j <= n_j; 2 for B_p and
//     2^{1/p} for S_p when m_j <= n_{j+1}),
//   * the upper estimate by the maxima of the supports (3^{1/p} for B_p, 1 for S_p),
//   * the lower estimate by spike coordinates and the associated projection,
//   * the skipped-block construction with weights t_n = 1/k whose
//     complementation constants grow without bound,
//   * Milman's flat vector in a finite-dimensional subspace.
//
// Every check works on one coefficient vector at a time: it reports both
// sides of the inequality and whether it holds up to kInequalitySlack.

#include <cmath>
#include <random>
#include <vector>

#include "schreier/fin_vec.hpp"
#include "schreier/gl_index.hpp"
#include "schreier/norms.hpp"

namespace schreier {

inline constexpr double kInequalitySlack = 1e-9;
inline constexpr double kNormalizationTolerance = 1e-9;

using CoeffVec = std::vector<double>;

/// Nonzero vectors with strictly increasing supports: max supp u_j < min supp u_{j+1}.
class BlockSeq {
 public:
  BlockSeq() = default;
  explicit BlockSeq(std::vector<FinVec> blocks);

  const std::vector<FinVec>& blocks() const noexcept { return blocks_; }
  std::size_t size() const noexcept { return blocks_.size(); }
  const FinVec& operator[](std::size_t j) const { return blocks_[j]; }

  bool is_normalized(const SpaceSpec& space, double tolerance = kNormalizationTolerance) const;
  // At least one unused coordinate between consecutive blocks.
  bool is_skipped() const noexcept;

  // sum_j alpha_j u_j; alpha may be shorter than the sequence.
  FinVec combine(const CoeffVec& alpha) const;

  // (max supp u_j)_j
  IndexSeq maxima() const;

 private:
  std::vector<FinVec> blocks_;
};

struct InequalityCheck {
  double lhs = 0.0;
  double rhs = 0.0;
  bool holds = true;
  double ratio() const { return rhs > 0.0 ? lhs / rhs : (lhs > 0.0 ? HUGE_VAL : 0.0); }
};

// x = sum_j alpha_j e_{m_j}.
FinVec expand(const CoeffVec& alpha, const IndexSeq& m);

// sum_j alpha_j v_j for a list of vectors.
FinVec combine(const std::vector<FinVec>& vectors, const CoeffVec& alpha);

// ||sum alpha_j target_j||_E <= C ||sum alpha_j source_j||_E.
InequalityCheck check_domination(const SpaceSpec& space, const std::vector<FinVec>& source,
                                 const std::vector<FinVec>& target, double constant,
                                 const CoeffVec& alpha);

std::vector<FinVec> unit_vectors(const IndexSeq& indices);

// 1 for m_j <= n_j; 2 (B_p) or 2^{1/p} (S_p) for m_j <= n_{j+1}.
double interleave_constant(const SpaceSpec& space);
// 3^{1/p} for B_p, 1 for S_p.
double block_upper_constant(const SpaceSpec& space);
// 2 * 3^{1/p} / delta for B_p, 2^{1/p} / delta for S_p.
double projection_constant(const SpaceSpec& space, double delta);

// ||sum alpha_j u_j||_E <= C_1 ||sum alpha_j e_{max supp u_j}||_E. The
// constant defaults to block_upper_constant(space); passing another value is
// how negative controls probe the suite.
InequalityCheck check_block_upper_bound(const SpaceSpec& space, const BlockSeq& u, const CoeffVec& alpha);
InequalityCheck check_block_upper_bound(const SpaceSpec& space, const BlockSeq& u, const CoeffVec& alpha,
                                        double constant);

// Smallest coordinate n in supp u with |u(n)| >= delta, per block.
IndexSeq spike_coordinates(const BlockSeq& u, double delta);
// inf_j ||u_j||_inf
double min_sup_norm(const BlockSeq& u);

// ||sum alpha_j e_{n_j}||_E <= delta^{-1} ||sum alpha_j u_j||_E with n_j the spike coordinates.
InequalityCheck check_spike_lower_bound(const SpaceSpec& space, const BlockSeq& u, double delta,
                                        const CoeffVec& alpha);

// Qx = sum_j (x(n_j) / u_j(n_j)) u_j. Spike coordinates use delta, which
// defaults to min_sup_norm(u).
FinVec apply_projection(const BlockSeq& u, const FinVec& x, double delta);
FinVec apply_projection(const SpaceSpec& space, const BlockSeq& u, const FinVec& x);

// ||Qx||_E <= C_2 ||x||_E.
InequalityCheck check_projection_bound(const SpaceSpec& space, const BlockSeq& u, double delta,
                                       const FinVec& x);

// t_n = 1/k for n in [2^{k-1}, 2^k).
double uncomplemented_weight(Natural n);

// (u_n + t_n e_{m_n}) with m_n = max supp u_n + 1, the first coordinate of the gap.
BlockSeq build_uncomplemented(const SpaceSpec& space, const BlockSeq& u);

struct GrowthRow {
  Natural k = 0;
  double companion_norm = 0.0;
  double spike_norm = 0.0;
  double lower_bound_c = 0.0;
};

inline constexpr Natural kGrowthTableMaxK = 8;

// Row k: the companion norm of d_{2^{k-1}} + ... + d_{2^k - 1}, the engine norm of
// (1/k)(e_{2^{k-1}} + ... + e_{2^k - 1}) and their ratio.
std::vector<GrowthRow> growth_table(const SpaceSpec& space, Natural k_max);

// 2^{(k-1)/p} / k for S_p, (2^{1-1/p})^{k-1} / k for B_p.
double growth_closed_form(const SpaceSpec& space, Natural k);

// Indices 1 = j_1 < j_2 < ... chosen greedily with m_{j_k} <= n_{j_{k+1}} and
// n_{j_k} <= m_{j_{k+1}}; both subsequences then dominate each other with
// interleave_constant.
FinSet common_equivalent_indices(const IndexSeq& m, const IndexSeq& n);

// Lower estimate of sup_alpha ||sum alpha target|| / ||sum alpha source|| by
// random sampling. Never claimed exact.
double estimate_domination_ratio(const SpaceSpec& space, const std::vector<FinVec>& source,
                                 const std::vector<FinVec>& target, std::size_t trials,
                                 std::mt19937_64& rng);

// Entries uniform in [-1, 1] with one entry forced nonzero.
CoeffVec random_coefficients(std::size_t length, std::mt19937_64& rng);

struct MilmanOptions {
  Natural max_support = 12;
  Natural max_dimension = 5;
  double tolerance = 1e-9;
};

/// A vector w in span(basis) with ||w||_inf = 1 and |w(j)| = 1 (within
/// tolerance) on at least n coordinates. Throws SearchExhausted if none is
/// found, which would contradict Milman's lemma for n <= dim.
FinVec milman_flat_vector(const std::vector<FinVec>& basis, Natural n, const MilmanOptions& options = {});

// Number of coordinates with |w(j)| >= 1 - tolerance.
Natural peak_count(const FinVec& w, double tolerance = 1e-9);

}  // namespace schreier
