#include "schreier/norms.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <queue>
#include <sstream>
#include <vector>

#include "schreier/errors.hpp"

namespace schreier {

SpaceSpec::SpaceSpec(SpaceKind kind, double p) : kind_(kind), p_(p) {
  if (!std::isfinite(p)) throw PreconditionError("p must be finite");
  if (kind == SpaceKind::Bp && !(p > 1.0)) {
    throw PreconditionError("B_p requires p > 1");
  }
  if (kind == SpaceKind::Sp && !(p >= 1.0)) {
    throw PreconditionError("S_p requires p >= 1");
  }
}

std::string SpaceSpec::name() const {
  std::ostringstream os;
  os << (kind_ == SpaceKind::Bp ? "B_" : "S_") << p_;
  return os.str();
}

std::string NormResult::witness_string() const {
  if (const auto* set = std::get_if<SchreierSet>(&witness)) return set->to_string();
  if (const auto* chain = std::get_if<SchreierChain>(&witness)) return chain->to_string();
  return "{}";
}

// ---------------------------------------------------------------------------
// Seminorms

double mu_p_power(const FinVec& x, const FinSet& f, double p) {
  double sum = 0.0;
  for (Natural n : f) sum += std::pow(std::fabs(x[n]), p);
  return sum;
}

double mu_p(const FinVec& x, const SchreierSet& f, double p) {
  if (p < 1.0) throw PreconditionError("mu_p requires p >= 1");
  return std::pow(mu_p_power(x, f.set(), p), 1.0 / p);
}

double beta_p_power(const FinVec& x, const SchreierChain& chain, double p) {
  double sum = 0.0;
  for (const auto& f : chain) sum += std::pow(mu_p_power(x, f.set(), 1.0), p);
  return sum;
}

double beta_p(const FinVec& x, const SchreierChain& chain, double p) {
  if (!(p > 1.0)) throw PreconditionError("beta_p requires p > 1");
  return std::pow(beta_p_power(x, chain, p), 1.0 / p);
}

namespace {

struct Entry {
  Natural index;
  double magnitude;
};

std::vector<Entry> magnitudes(const FinVec& x) {
  std::vector<Entry> out;
  out.reserve(x.entries().size());
  for (const auto& [n, v] : x.entries()) out.push_back({n, std::fabs(v)});
  return out;
}

// Larger magnitude first; the smaller coordinate wins a tie.
bool heavier(const Entry& a, const Entry& b) {
  if (a.magnitude != b.magnitude) return a.magnitude > b.magnitude;
  return a.index < b.index;
}

// The `count` heaviest entries of entries[first, last), returned sorted by index.
std::vector<Entry> heaviest(const std::vector<Entry>& entries, std::size_t first, std::size_t last,
                            std::size_t count) {
  std::vector<Entry> pool(entries.begin() + first, entries.begin() + last);
  count = std::min(count, pool.size());
  std::partial_sort(pool.begin(), pool.begin() + count, pool.end(), heavier);
  pool.resize(count);
  std::sort(pool.begin(), pool.end(), [](const Entry& a, const Entry& b) { return a.index < b.index; });
  return pool;
}

FinSet indices_of(const std::vector<Entry>& entries) {
  std::vector<Natural> out;
  out.reserve(entries.size());
  for (const auto& e : entries) out.push_back(e.index);
  return FinSet(std::move(out));
}

}  // namespace

// ---------------------------------------------------------------------------
// S_p
//
// A Schreier set with minimum m has at most m elements, all >= m, so the best
// one for a given m is the m heaviest coordinates at or after m. Only minima
// in the support need to be tried: moving m up to the next support point
// keeps the same candidates and raises the cardinality cap.

NormResult norm_Sp(const FinVec& x, double p) {
  if (p < 1.0) throw PreconditionError("S_p requires p >= 1");
  const auto entries = magnitudes(x);
  NormResult result;
  for (std::size_t start = 0; start < entries.size(); ++start) {
    auto chosen = heaviest(entries, start, entries.size(), entries[start].index);
    // Sum heaviest-first so the accumulation order does not depend on layout.
    std::vector<double> mags;
    for (const auto& e : chosen) mags.push_back(e.magnitude);
    std::sort(mags.begin(), mags.end(), std::greater<>());
    double power = 0.0;
    for (double m : mags) power += std::pow(m, p);
    if (power > result.power) {
      result.power = power;
      result.witness = SchreierSet(indices_of(chosen));
    }
  }
  result.value = std::pow(result.power, 1.0 / p);
  return result;
}

// ---------------------------------------------------------------------------
// B_p
//
// best[j] is the largest sum of mu_1(x,F)^p over Schreier chains living in
// [s_j, infinity), where s_0 < s_1 < ... is the support. A first set starting
// at s_j and ending at s_e holds both endpoints plus up to s_j - 2 interior
// coordinates; the chain constraint only sees its maximum, so the interior is
// the heaviest s_j - 2 coordinates strictly between the endpoints.

NormResult norm_Bp(const FinVec& x, double p) {
  if (!(p > 1.0)) throw PreconditionError("B_p requires p > 1");
  const auto entries = magnitudes(x);
  const std::size_t s = entries.size();

  constexpr std::size_t kSkip = static_cast<std::size_t>(-1);
  std::vector<double> best(s + 1, 0.0);
  std::vector<std::size_t> last_of_first(s + 1, kSkip);

  for (std::size_t j = s; j-- > 0;) {
    best[j] = best[j + 1];
    last_of_first[j] = kSkip;

    const double head = entries[j].magnitude;
    const double single = std::pow(head, p) + best[j + 1];
    if (single > best[j]) {
      best[j] = single;
      last_of_first[j] = j;
    }

    const std::size_t cap = entries[j].index;  // |F| <= min F
    if (cap < 2) continue;
    const std::size_t interior_cap = cap - 2;
    std::priority_queue<double, std::vector<double>, std::greater<>> interior;
    double interior_sum = 0.0;
    for (std::size_t e = j + 1; e < s; ++e) {
      const double sum = head + interior_sum + entries[e].magnitude;
      const double candidate = std::pow(sum, p) + best[e + 1];
      if (candidate > best[j]) {
        best[j] = candidate;
        last_of_first[j] = e;
      }
      if (interior_cap == 0) continue;
      interior.push(entries[e].magnitude);
      interior_sum += entries[e].magnitude;
      if (interior.size() > interior_cap) {
        interior_sum -= interior.top();
        interior.pop();
      }
    }
  }

  NormResult result;
  result.power = best[0];
  result.value = std::pow(result.power, 1.0 / p);

  std::vector<SchreierSet> sets;
  for (std::size_t j = 0; j < s;) {
    if (last_of_first[j] == kSkip) {
      ++j;
      continue;
    }
    const std::size_t e = last_of_first[j];
    std::vector<Natural> members{entries[j].index};
    if (e > j) {
      for (const auto& in : heaviest(entries, j + 1, e, entries[j].index - 2)) {
        members.push_back(in.index);
      }
      members.push_back(entries[e].index);
    }
    sets.emplace_back(FinSet(std::move(members)));
    j = e + 1;
  }
  if (!sets.empty()) result.witness = SchreierChain(std::move(sets));
  return result;
}

NormResult norm(const FinVec& x, const SpaceSpec& space) {
  return space.kind() == SpaceKind::Sp ? norm_Sp(x, space.p()) : norm_Bp(x, space.p());
}

// ---------------------------------------------------------------------------
// Oracles

namespace {

void require_oracle_range(const FinVec& x, Natural bound, const char* who) {
  if (!x.is_zero() && x.max_support() > bound) {
    throw BoundExceeded(std::string(who) + ": max supp x = " + std::to_string(x.max_support()) +
                        " exceeds oracle bound " + std::to_string(bound));
  }
}

}  // namespace

double norm_Sp_bruteforce_power(const FinVec& x, double p, const OracleBounds& bounds) {
  if (p < 1.0) throw PreconditionError("S_p requires p >= 1");
  require_oracle_range(x, bounds.sp_bruteforce, "norm_Sp_bruteforce");
  if (x.is_zero()) return 0.0;
  OracleBounds enumeration = bounds;
  enumeration.enumeration = std::max(bounds.enumeration, bounds.sp_bruteforce);
  double best = 0.0;
  for_each_schreier_subset(
      x.max_support(), [&](const FinSet& f) { best = std::max(best, mu_p_power(x, f, p)); },
      enumeration);
  return best;
}

double norm_Bp_bruteforce_power(const FinVec& x, double p, const OracleBounds& bounds) {
  if (!(p > 1.0)) throw PreconditionError("B_p requires p > 1");
  require_oracle_range(x, bounds.bp_bruteforce, "norm_Bp_bruteforce");
  if (x.is_zero()) return 0.0;
  const Natural top = x.max_support();

  // Every nonempty Schreier subset of [1, top], bucketed by its minimum.
  std::vector<std::vector<FinSet>> by_min(top + 2);
  OracleBounds enumeration = bounds;
  enumeration.enumeration = std::max(bounds.enumeration, bounds.bp_bruteforce);
  for_each_schreier_subset(
      top, [&](const FinSet& f) { if (!f.empty()) by_min[f.min()].push_back(f); }, enumeration);

  // chain_best[i]: best chain inside [i, top]. Either nothing starts at i,
  // or some Schreier set with minimum i is the first set of the chain.
  std::vector<double> chain_best(top + 2, 0.0);
  for (Natural i = top; i >= 1; --i) {
    double value = chain_best[i + 1];
    for (const auto& f : by_min[i]) {
      value = std::max(value, std::pow(mu_p_power(x, f, 1.0), p) + chain_best[f.max() + 1]);
    }
    chain_best[i] = value;
  }
  return chain_best[1];
}

double norm_Sp_bruteforce(const FinVec& x, double p, const OracleBounds& bounds) {
  return std::pow(norm_Sp_bruteforce_power(x, p, bounds), 1.0 / p);
}

double norm_Bp_bruteforce(const FinVec& x, double p, const OracleBounds& bounds) {
  return std::pow(norm_Bp_bruteforce_power(x, p, bounds), 1.0 / p);
}

double norm_companion(const FinVec& x, const SpaceSpec& space) {
  return space.kind() == SpaceKind::Bp ? x.lp_norm(space.p()) : x.sup_norm();
}

double witness_power(const FinVec& x, const NormResult& result, double p) {
  if (const auto* set = std::get_if<SchreierSet>(&result.witness)) return mu_p_power(x, set->set(), p);
  if (const auto* chain = std::get_if<SchreierChain>(&result.witness)) return beta_p_power(x, *chain, p);
  return 0.0;
}

}  // namespace schreier
