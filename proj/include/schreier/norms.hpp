#pragma once

// Exact norms of finitely supported vectors in the p-convexified Schreier
// space S_p and the Baernstein space B_p, plus the companion norms (l_p for
// B_p, sup-norm for S_p). Each engine returns a maximizing Schreier set or
// chain, and each has an exhaustive oracle for differential testing.

#include <string>
#include <variant>

#include "schreier/fin_vec.hpp"
#include "schreier/schreier_core.hpp"

namespace schreier {

enum class SpaceKind { Sp, Bp };

/// The ambient space: B_p needs p > 1, S_p needs p >= 1.
class SpaceSpec {
 public:
  SpaceSpec(SpaceKind kind, double p);
  static SpaceSpec Sp(double p) { return {SpaceKind::Sp, p}; }
  static SpaceSpec Bp(double p) { return {SpaceKind::Bp, p}; }

  SpaceKind kind() const noexcept { return kind_; }
  double p() const noexcept { return p_; }
  std::string name() const;

  friend bool operator==(const SpaceSpec&, const SpaceSpec&) = default;

 private:
  SpaceKind kind_;
  double p_;
};

using NormWitness = std::variant<std::monostate, SchreierSet, SchreierChain>;

struct NormResult {
  double value = 0.0;
  // value^p as accumulated by the engine; comparisons are done on this.
  double power = 0.0;
  // Empty (monostate) only for the zero vector.
  NormWitness witness;

  std::string witness_string() const;
};

// mu_p(x, F) = (sum_{n in F} |x(n)|^p)^{1/p}, 0 for empty F.
double mu_p(const FinVec& x, const SchreierSet& f, double p);
double mu_p_power(const FinVec& x, const FinSet& f, double p);

// beta_p(x, C) = (sum_{F in C} (sum_{n in F} |x(n)|)^p)^{1/p}.
double beta_p(const FinVec& x, const SchreierChain& chain, double p);
double beta_p_power(const FinVec& x, const SchreierChain& chain, double p);

NormResult norm_Sp(const FinVec& x, double p);
NormResult norm_Bp(const FinVec& x, double p);
NormResult norm(const FinVec& x, const SpaceSpec& space);

// Exhaustive oracles. Both return the p-th power of the norm.
double norm_Sp_bruteforce_power(const FinVec& x, double p, const OracleBounds& bounds = {});
double norm_Bp_bruteforce_power(const FinVec& x, double p, const OracleBounds& bounds = {});
double norm_Sp_bruteforce(const FinVec& x, double p, const OracleBounds& bounds = {});
double norm_Bp_bruteforce(const FinVec& x, double p, const OracleBounds& bounds = {});

// l_p norm for B_p, sup-norm for S_p.
double norm_companion(const FinVec& x, const SpaceSpec& space);

// Re-evaluates the seminorm on the witness (p-th power). Zero for an empty witness.
double witness_power(const FinVec& x, const NormResult& result, double p);

}  // namespace schreier
