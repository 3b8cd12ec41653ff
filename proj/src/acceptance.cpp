#include "schreier/acceptance.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <sstream>

#include "schreier/errors.hpp"
#include "schreier/gl_index.hpp"
#include "schreier/random_instances.hpp"
#include "schreier/sequences.hpp"

namespace schreier::acceptance {

namespace {

constexpr double kOracleRelTol = 1e-12;

std::string fmt(double v, int precision = 17) {
  std::ostringstream os;
  os << std::setprecision(precision) << v;
  return os.str();
}

std::string coeffs_string(const CoeffVec& alpha) {
  std::string out = "(";
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    if (i > 0) out += ',';
    out += fmt(alpha[i]);
  }
  return out + ")";
}

std::string blocks_string(const BlockSeq& u) {
  std::string out = "[";
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (i > 0) out += " | ";
    out += u[i].to_string();
  }
  return out + "]";
}

bool powers_match(double fast, double oracle) {
  return std::fabs(fast - oracle) <= kOracleRelTol * std::max(std::fabs(oracle), 1e-300);
}

std::size_t count(const Options& options, std::size_t full, std::size_t quick) {
  return options.level == Level::Full ? full : quick;
}

const std::vector<SpaceSpec>& all_spaces() {
  static const std::vector<SpaceSpec> spaces{SpaceSpec::Sp(1.0), SpaceSpec::Sp(1.5), SpaceSpec::Sp(2.0),
                                             SpaceSpec::Sp(3.0), SpaceSpec::Bp(1.5), SpaceSpec::Bp(2.0),
                                             SpaceSpec::Bp(3.0)};
  return spaces;
}

const std::vector<SpaceSpec>& bp_spaces() {
  static const std::vector<SpaceSpec> spaces{SpaceSpec::Bp(1.5), SpaceSpec::Bp(2.0), SpaceSpec::Bp(3.0)};
  return spaces;
}

const std::vector<SpaceSpec>& sp_spaces() {
  static const std::vector<SpaceSpec> spaces{SpaceSpec::Sp(1.0), SpaceSpec::Sp(1.5), SpaceSpec::Sp(2.0),
                                             SpaceSpec::Sp(3.0)};
  return spaces;
}

// Collects sub-check lines for one criterion and keeps the first certificate.
class Recorder {
 public:
  explicit Recorder(CriterionReport& report) : report_(report) {}

  // Records one sub-check. `failures` counts violating instances; `first`
  // describes the first of them.
  void check(const std::string& name, std::size_t instances, std::size_t failures,
             const std::string& first, const std::string& extra = {}) {
    CheckLine line;
    line.name = name;
    line.passed = failures == 0;
    std::ostringstream os;
    os << instances << " instances, " << failures << " failures";
    if (!extra.empty()) os << "; " << extra;
    line.detail = os.str();
    report_.checks.push_back(line);
    if (failures > 0 && !report_.certificate) report_.certificate = name + ": " + first;
  }

  // Records a sub-check whose pass condition is not a failure count.
  void verdict(const std::string& name, bool passed, const std::string& detail,
               const std::string& certificate = {}) {
    report_.checks.push_back({name, passed, detail});
    if (!passed && !report_.certificate) report_.certificate = name + ": " + (certificate.empty() ? detail : certificate);
  }

 private:
  CriterionReport& report_;
};

// Failure counter that keeps the first counterexample description.
struct Tally {
  std::size_t instances = 0;
  std::size_t failures = 0;
  std::string first;

  void record(bool ok, const std::function<std::string()>& describe) {
    ++instances;
    if (ok) return;
    if (failures == 0) first = describe();
    ++failures;
  }
};

// ---------------------------------------------------------------------------

void criterion_tau1(const Options& options, Recorder& rec) {
  const Natural top = options.level == Level::Full ? 12 : 10;
  Tally tally;
  for (std::uint32_t mask = 1; mask < (1u << top); ++mask) {
    std::vector<Natural> el;
    for (Natural b = 0; b < top; ++b) {
      if (mask & (1u << b)) el.push_back(b + 1);
    }
    const FinSet a(std::move(el));
    const Natural fast = options.engines.tau1(a);
    const Natural oracle = tau1_bruteforce(a, options.bounds);
    tally.record(fast == oracle, [&] {
      return "A=" + a.to_string() + " greedy=" + std::to_string(fast) + " bruteforce=" + std::to_string(oracle);
    });
  }
  rec.check("greedy tau1 == exhaustive tau1 on all nonempty subsets of [1," + std::to_string(top) + "]",
            tally.instances, tally.failures, tally.first);
}

void criterion_sp_oracle(const Options& options, Recorder& rec) {
  const std::size_t vectors = count(options, 1000, 200);
  Tally values;
  Tally witnesses;
  for (std::size_t i = 0; i < vectors; ++i) {
    auto rng = random::instance_rng(options.seed, 2, i);
    const FinVec x = random::vector(rng, 12);
    for (double p : {1.0, 1.5, 2.0, 3.0}) {
      const NormResult fast = options.engines.norm_sp(x, p);
      const double oracle = norm_Sp_bruteforce_power(x, p, options.bounds);
      values.record(powers_match(fast.power, oracle), [&] {
        return "x=" + x.to_string() + " p=" + fmt(p) + " fast^p=" + fmt(fast.power) + " oracle^p=" + fmt(oracle);
      });
      witnesses.record(powers_match(witness_power(x, fast, p), fast.power), [&] {
        return "x=" + x.to_string() + " p=" + fmt(p) + " witness=" + fast.witness_string();
      });
    }
  }
  rec.check("S_p fast == exhaustive (rel 1e-12 on p-th powers), p in {1,1.5,2,3}", values.instances,
            values.failures, values.first);
  rec.check("S_p witness reproduces value", witnesses.instances, witnesses.failures, witnesses.first);
}

void criterion_bp_oracle(const Options& options, Recorder& rec) {
  const std::size_t vectors = count(options, 500, 100);
  Tally values;
  Tally witnesses;
  for (std::size_t i = 0; i < vectors; ++i) {
    auto rng = random::instance_rng(options.seed, 3, i);
    const FinVec x = random::vector(rng, 10);
    for (double p : {1.5, 2.0, 3.0}) {
      const NormResult fast = options.engines.norm_bp(x, p);
      const double oracle = norm_Bp_bruteforce_power(x, p, options.bounds);
      values.record(powers_match(fast.power, oracle), [&] {
        return "x=" + x.to_string() + " p=" + fmt(p) + " dp^p=" + fmt(fast.power) + " oracle^p=" + fmt(oracle);
      });
      witnesses.record(powers_match(witness_power(x, fast, p), fast.power), [&] {
        return "x=" + x.to_string() + " p=" + fmt(p) + " witness=" + fast.witness_string();
      });
    }
  }
  rec.check("B_p dynamic program == exhaustive (rel 1e-12 on p-th powers), p in {1.5,2,3}", values.instances,
            values.failures, values.first);
  rec.check("B_p witness reproduces value", witnesses.instances, witnesses.failures, witnesses.first);
}

void criterion_gl(const Options& options, Recorder& rec) {
  constexpr Natural window = 12;
  constexpr Natural top = 60;

  Tally sub;
  Tally witness;
  for (std::size_t i = 0; i < count(options, 500, 100); ++i) {
    auto rng = random::instance_rng(options.seed, 41, i);
    const IndexSeq l = random::increasing(rng, window, top);
    const IndexSeq m = random::increasing(rng, window, top);
    const IndexSeq n = random::increasing(rng, window, top);
    sub.record(check_submultiplicative(l, m, n, window, options.bounds), [&] {
      return "L=" + l.to_string() + " M=" + m.to_string() + " N=" + n.to_string() +
             " GL(L,N)=" + std::to_string(gl1_windowed(l, n, window).value) +
             " GL(L,M)=" + std::to_string(gl1_windowed(l, m, window).value) +
             " GL(M,N)=" + std::to_string(gl1_windowed(m, n, window).value);
    });
    const auto r = gl1_windowed(l, n, window, options.bounds);
    witness.record(gl_result_consistent(l, n, r) && r.value >= 1,
                   [&] { return "L=" + l.to_string() + " N=" + n.to_string() + " J=" + r.argmax_j.to_string(); });
  }
  rec.check("GL(L,N) <= GL(L,M) GL(M,N), window 12", sub.instances, sub.failures, sub.first);
  rec.check("argmax J witnesses re-validate", witness.instances, witness.failures, witness.first);

  const std::size_t each = count(options, 200, 50);
  Tally spread;
  for (std::size_t i = 0; i < each; ++i) {
    auto rng = random::instance_rng(options.seed, 42, i);
    auto [m, n] = random::dominated_pair(rng, window, top);
    spread.record(check_spread_bound(n, m, window, options.bounds),
                  [&] { return "M=" + m.to_string() + " N=" + n.to_string(); });
  }
  rec.check("spread: GL(N,M) = 1", spread.instances, spread.failures, spread.first);

  Tally removal;
  for (std::size_t i = 0; i < each; ++i) {
    auto rng = random::instance_rng(options.seed, 43, i);
    const Natural removed = std::uniform_int_distribution<Natural>(0, 4)(rng);
    const IndexSeq n = random::increasing(rng, window + removed, top);
    std::vector<Natural> pool(n.as_set().begin(), n.as_set().end());
    std::shuffle(pool.begin(), pool.end(), rng);
    pool.resize(removed);
    std::sort(pool.begin(), pool.end());
    const FinSet f(pool);
    removal.record(check_removal_bound(n, f, window, options.bounds),
                   [&] { return "N=" + n.to_string() + " F=" + f.to_string(); });
  }
  rec.check("removal: GL(N, N\\F) <= tau1(n_1..n_|F|) + 1", removal.instances, removal.failures, removal.first);

  Tally interleave;
  for (std::size_t i = 0; i < each; ++i) {
    auto rng = random::instance_rng(options.seed, 44, i);
    auto [m, n] = random::interleaved_pair(rng, window, top);
    interleave.record(check_interleave_bound(n, m, window, options.bounds),
                      [&] { return "M=" + m.to_string() + " N=" + n.to_string(); });
  }
  rec.check("interleave: GL(N,M) <= 2", interleave.instances, interleave.failures, interleave.first);
}

// Runs check_domination for the interleaved family at a given constant
// (nullopt: the proven constant for the space) over the B_p or all spaces.
Tally interleave_domination(const Options& options, const std::vector<SpaceSpec>& spaces,
                            std::optional<double> constant, double* max_ratio) {
  Tally tally;
  const std::size_t instances = count(options, 2000, 300);
  for (std::size_t i = 0; i < instances; ++i) {
    auto rng = random::instance_rng(options.seed, 52, i);
    const SpaceSpec& space = spaces[i % spaces.size()];
    const Natural length = std::uniform_int_distribution<Natural>(1, 8)(rng);
    auto [m, n] = random::interleaved_pair(rng, length, 30);
    const CoeffVec alpha = random_coefficients(length, rng);
    const double c = constant.value_or(interleave_constant(space));
    const auto check = check_domination(space, unit_vectors(n), unit_vectors(m), c, alpha);
    if (max_ratio != nullptr) *max_ratio = std::max(*max_ratio, c * check.ratio());
    tally.record(check.holds, [&] {
      return space.name() + " M=" + m.to_string() + " N=" + n.to_string() + " alpha=" + coeffs_string(alpha) +
             " lhs=" + fmt(check.lhs) + " rhs=" + fmt(check.rhs) + " C=" + fmt(c);
    });
  }
  return tally;
}

Tally block_upper(const Options& options, const std::vector<SpaceSpec>& spaces, std::optional<double> constant,
                  std::uint64_t suite, double* max_ratio) {
  Tally tally;
  const std::size_t instances = count(options, 2000, 300);
  for (std::size_t i = 0; i < instances; ++i) {
    auto rng = random::instance_rng(options.seed, suite, i);
    const SpaceSpec& space = spaces[i % spaces.size()];
    const BlockSeq u = random::normalized_blocks(rng, space, 5, 6);
    const CoeffVec alpha = random_coefficients(u.size(), rng);
    const double c = constant.value_or(block_upper_constant(space));
    const auto check = check_block_upper_bound(space, u, alpha, c);
    if (max_ratio != nullptr) *max_ratio = std::max(*max_ratio, c * check.ratio());
    tally.record(check.holds, [&] {
      return space.name() + " u=" + blocks_string(u) + " alpha=" + coeffs_string(alpha) + " lhs=" + fmt(check.lhs) +
             " rhs=" + fmt(check.rhs) + " C1=" + fmt(c);
    });
  }
  return tally;
}

void criterion_domination(const Options& options, Recorder& rec) {
  // 1-domination when m_j <= n_j, every alpha in {-1,0,1}^k.
  {
    Tally tally;
    const std::size_t pairs = count(options, 10, 2);
    for (Natural k = 1; k <= 6; ++k) {
      for (std::size_t i = 0; i < pairs; ++i) {
        auto rng = random::instance_rng(options.seed, 51, k * 1000 + i);
        auto [m, n] = random::dominated_pair(rng, k, 30);
        const auto source = unit_vectors(n);
        const auto target = unit_vectors(m);
        std::size_t grid = 1;
        for (Natural j = 0; j < k; ++j) grid *= 3;
        for (std::size_t code = 0; code < grid; ++code) {
          CoeffVec alpha(k);
          std::size_t rest = code;
          for (Natural j = 0; j < k; ++j) {
            alpha[j] = static_cast<double>(rest % 3) - 1.0;
            rest /= 3;
          }
          for (const auto& space : all_spaces()) {
            const auto check = check_domination(space, source, target, 1.0, alpha);
            tally.record(check.holds, [&] {
              return space.name() + " M=" + m.to_string() + " N=" + n.to_string() + " alpha=" +
                     coeffs_string(alpha) + " lhs=" + fmt(check.lhs) + " rhs=" + fmt(check.rhs);
            });
          }
        }
      }
    }
    rec.check("m_j <= n_j: 1-domination, exhaustive sign grid, k <= 6", tally.instances, tally.failures, tally.first);
  }

  {
    const Tally tally = interleave_domination(options, all_spaces(), std::nullopt, nullptr);
    rec.check("m_j <= n_{j+1}: C = 2 (B_p), 2^{1/p} (S_p)", tally.instances, tally.failures, tally.first);
  }

  // Common subsequence on which both directions hold with the interleave constant.
  {
    Tally tally;
    const std::size_t instances = count(options, 200, 50);
    for (std::size_t i = 0; i < instances; ++i) {
      auto rng = random::instance_rng(options.seed, 53, i);
      const SpaceSpec& space = all_spaces()[i % all_spaces().size()];
      const IndexSeq m = random::increasing(rng, 12, 40);
      const IndexSeq n = random::increasing(rng, 12, 40);
      const FinSet picked = common_equivalent_indices(m, n);
      const IndexSeq mm(m.image(picked));
      const IndexSeq nn(n.image(picked));
      const CoeffVec alpha = random_coefficients(picked.size(), rng);
      const double c = interleave_constant(space);
      const auto forward = check_domination(space, unit_vectors(nn), unit_vectors(mm), c, alpha);
      const auto backward = check_domination(space, unit_vectors(mm), unit_vectors(nn), c, alpha);
      tally.record(forward.holds && backward.holds, [&] {
        return space.name() + " M=" + m.to_string() + " N=" + n.to_string() + " J=" + picked.to_string() +
               " alpha=" + coeffs_string(alpha);
      });
    }
    rec.check("common subsequence: mutual domination", tally.instances, tally.failures, tally.first);
  }

  {
    const Tally s = block_upper(options, sp_spaces(), std::nullopt, 54, nullptr);
    rec.check("block upper bound, S_p, C1 = 1", s.instances, s.failures, s.first);
    const Tally b = block_upper(options, bp_spaces(), std::nullopt, 55, nullptr);
    rec.check("block upper bound, B_p, C1 = 3^{1/p}", b.instances, b.failures, b.first);
  }

  {
    Tally spike;
    Tally projection;
    Tally idempotent;
    const std::size_t instances = count(options, 2000, 300);
    const double deltas[] = {0.3, 0.5, 1.0};
    for (std::size_t i = 0; i < instances; ++i) {
      auto rng = random::instance_rng(options.seed, 56, i);
      const SpaceSpec& space = all_spaces()[i % all_spaces().size()];
      const double delta = deltas[(i / all_spaces().size()) % 3];
      const BlockSeq u = random::spiked_blocks(rng, space, delta, 5);
      const CoeffVec alpha = random_coefficients(u.size(), rng);
      const auto lower = check_spike_lower_bound(space, u, delta, alpha);
      spike.record(lower.holds, [&] {
        return space.name() + " delta=" + fmt(delta) + " u=" + blocks_string(u) + " alpha=" + coeffs_string(alpha) +
               " lhs=" + fmt(lower.lhs) + " rhs=" + fmt(lower.rhs);
      });

      const FinVec x = random::vector(rng, u[u.size() - 1].max_support() + 2);
      const auto bound = check_projection_bound(space, u, delta, x);
      projection.record(bound.holds, [&] {
        return space.name() + " delta=" + fmt(delta) + " u=" + blocks_string(u) + " x=" + x.to_string() +
               " |Qx|=" + fmt(bound.lhs) + " C2|x|=" + fmt(bound.rhs);
      });

      const FinVec in_span = u.combine(random_coefficients(u.size(), rng));
      const FinVec image = apply_projection(u, in_span, delta);
      FinVec diff = image + (-1.0) * in_span;
      const double scale = std::max(in_span.sup_norm(), 1e-300);
      idempotent.record(diff.sup_norm() <= 1e-9 * scale, [&] {
        return space.name() + " u=" + blocks_string(u) + " y=" + in_span.to_string() + " Qy=" + image.to_string();
      });
    }
    rec.check("spike lower bound: delta^{-1}-domination, delta in {0.3,0.5,1}", spike.instances, spike.failures,
              spike.first);
    rec.check("projection bound C2 = 2*3^{1/p}/delta (B_p), 2^{1/p}/delta (S_p)", projection.instances,
              projection.failures, projection.first);
    rec.check("projection fixes the block span (rel 1e-9)", idempotent.instances, idempotent.failures,
              idempotent.first);
  }
}

void criterion_closed_forms(const Options&, Recorder& rec) {
  constexpr double tol = 1e-9;
  auto rel_ok = [](double got, double want) { return std::fabs(got - want) <= tol * std::fabs(want); };

  {
    Tally tally;
    for (const auto& space : all_spaces()) {
      for (Natural k = 1; k <= 7; ++k) {
        const Natural lo = Natural{1} << (k - 1);
        const FinVec block = FinVec::constant_on(FinSet::interval(lo, 2 * lo - 1));
        const double got = norm(block, space).value;
        const double want = space.kind() == SpaceKind::Sp ? std::pow(2.0, static_cast<double>(k - 1) / space.p())
                                                          : static_cast<double>(lo);
        tally.record(rel_ok(got, want), [&] {
          return space.name() + " k=" + std::to_string(k) + " engine=" + fmt(got) + " closed form=" + fmt(want);
        });
      }
    }
    rec.check("norm of the indicator of [2^{k-1}, 2^k), k <= 7", tally.instances, tally.failures, tally.first);
  }

  {
    Tally tally;
    for (const auto& space : all_spaces()) {
      for (const auto& row : growth_table(space, kGrowthTableMaxK)) {
        const double want = growth_closed_form(space, row.k);
        const double companion = space.kind() == SpaceKind::Sp
                                     ? 1.0
                                     : std::pow(2.0, static_cast<double>(row.k - 1) / space.p());
        tally.record(rel_ok(row.lower_bound_c, want) && rel_ok(row.companion_norm, companion), [&] {
          return space.name() + " k=" + std::to_string(row.k) + " bound=" + fmt(row.lower_bound_c) +
                 " closed form=" + fmt(want);
        });
      }
    }
    rec.check("growth table matches 2^{(k-1)/p}/k (S_p) and (2^{1-1/p})^{k-1}/k (B_p), k <= 8", tally.instances,
              tally.failures, tally.first);
  }

  // row(k+1)/row(k) > 1 exactly when the per-step factor beats (k+1)/k.
  {
    Tally tally;
    for (const auto& space : all_spaces()) {
      const auto rows = growth_table(space, kGrowthTableMaxK);
      const double factor = space.kind() == SpaceKind::Sp ? std::pow(2.0, 1.0 / space.p())
                                                          : std::pow(2.0, 1.0 - 1.0 / space.p());
      for (std::size_t i = 1; i + 1 < rows.size(); ++i) {
        const double k = static_cast<double>(rows[i].k);
        const double ratio = rows[i + 1].lower_bound_c / rows[i].lower_bound_c;
        const bool predicted = factor > (k + 1.0) / k;
        tally.record((ratio > 1.0) == predicted, [&] {
          return space.name() + " k=" + fmt(k) + " ratio=" + fmt(ratio) + " factor=" + fmt(factor);
        });
      }
    }
    rec.check("ratio test: row(k+1)/row(k) > 1 iff factor > (k+1)/k, k >= 2", tally.instances, tally.failures,
              tally.first);
  }

  {
    Tally tally;
    for (const auto& space : bp_spaces()) {
      const auto rows = growth_table(space, kGrowthTableMaxK);
      for (std::size_t i = 1; i + 1 < rows.size(); ++i) {
        tally.record(rows[i + 1].lower_bound_c > rows[i].lower_bound_c, [&] {
          return space.name() + " row k=" + std::to_string(rows[i].k) + " is " + fmt(rows[i].lower_bound_c) +
                 " but row k=" + std::to_string(rows[i + 1].k) + " is " + fmt(rows[i + 1].lower_bound_c);
        });
      }
    }
    rec.check("B_p column strictly increasing for k >= 2, p in {1.5,2,3}", tally.instances, tally.failures,
              tally.first);
  }

  {
    const SpaceSpec b2 = SpaceSpec::Bp(2.0);
    const auto rows = growth_table(b2, kGrowthTableMaxK);
    const auto hit = std::find_if(rows.begin(), rows.end(), [](const GrowthRow& r) { return r.lower_bound_c > 10.0; });
    double best = 0.0;
    for (const auto& r : rows) best = std::max(best, r.lower_bound_c);
    Natural crossing = 1;
    while (growth_closed_form(b2, crossing) <= 10.0) ++crossing;
    std::ostringstream detail;
    detail << "largest B_2 row for k <= " << kGrowthTableMaxK << " is " << fmt(best, 6)
           << "; closed form first exceeds 10 at k = " << crossing;
    rec.verdict("B_2 growth table has a row > 10 within k <= 8", hit != rows.end(), detail.str());
  }
}

void criterion_flat(const Options& options, Recorder& rec) {
  Tally tally;
  const std::size_t instances = count(options, 200, 50);
  const double ps[] = {1.0, 1.5, 2.0, 3.0};
  for (std::size_t i = 0; i < instances; ++i) {
    auto rng = random::instance_rng(options.seed, 7, i);
    const Natural n = std::uniform_int_distribution<Natural>(1, 6)(rng);
    const double p = ps[i % 4];
    const FinVec x = random::flat_candidate(rng, n, 20);
    const double value = norm_Sp(x, p).value;
    const double floor = std::pow(static_cast<double>(n), 1.0 / p);
    tally.record(value >= floor - kInequalitySlack, [&] {
      return "x=" + x.to_string() + " n=" + std::to_string(n) + " p=" + fmt(p) + " norm=" + fmt(value) +
             " n^{1/p}=" + fmt(floor);
    });
  }
  rec.check("2n-1 coordinates of modulus >= 1 imply ||x||_{S_p} >= n^{1/p}", tally.instances, tally.failures,
            tally.first);
}

// Residual of projecting w onto span(basis), relative to ||w||_inf.
double span_residual(const std::vector<FinVec>& basis, const FinVec& w, Natural max_index) {
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(max_index), static_cast<Eigen::Index>(basis.size()));
  Eigen::VectorXd target = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(max_index));
  for (std::size_t d = 0; d < basis.size(); ++d) {
    for (const auto& [idx, v] : basis[d].entries()) a(static_cast<Eigen::Index>(idx - 1), static_cast<Eigen::Index>(d)) = v;
  }
  for (const auto& [idx, v] : w.entries()) target(static_cast<Eigen::Index>(idx - 1)) = v;
  const Eigen::VectorXd coef = a.completeOrthogonalDecomposition().solve(target);
  return (a * coef - target).cwiseAbs().maxCoeff();
}

void criterion_milman(const Options& options, Recorder& rec) {
  Tally tally;
  std::size_t exhausted = 0;
  const std::size_t subspaces = count(options, 100, 25);
  constexpr Natural support = 10;
  for (std::size_t i = 0; i < subspaces; ++i) {
    auto rng = random::instance_rng(options.seed, 8, i);
    const Natural dim = std::uniform_int_distribution<Natural>(1, 4)(rng);
    const auto basis = random::subspace_basis(rng, dim, support);
    for (Natural n = 1; n <= dim; ++n) {
      std::string failure;
      try {
        const FinVec w = milman_flat_vector(basis, n);
        const bool ok = std::fabs(w.sup_norm() - 1.0) <= 1e-9 && peak_count(w) >= n &&
                        span_residual(basis, w, support) <= 1e-9;
        if (!ok) failure = "w=" + w.to_string() + " violates the postcondition";
      } catch (const SearchExhausted& e) {
        ++exhausted;
        failure = e.what();
      }
      tally.record(failure.empty(), [&] {
        std::string out = "dim=" + std::to_string(dim) + " n=" + std::to_string(n) + " basis=";
        for (const auto& b : basis) out += "[" + b.to_string() + "]";
        return out + " " + failure;
      });
    }
  }
  rec.check("flat vector found with >= n peaks, in span, sup-norm 1", tally.instances, tally.failures, tally.first,
            std::to_string(exhausted) + " search exhaustions");
}

void criterion_negative_controls(const Options& options, Recorder& rec) {
  {
    double max_ratio = 0.0;
    const Tally tally = interleave_domination(options, bp_spaces(), 1.9, &max_ratio);
    std::ostringstream detail;
    detail << tally.failures << " counterexamples in " << tally.instances
           << " B_p interleave instances at C = 1.9; largest unscaled ratio seen " << fmt(max_ratio, 6);
    rec.verdict("wrong constant C = 1.9 (B_p interleave) is caught", tally.failures > 0,
                detail.str() + (tally.failures > 0 ? "; first: " + tally.first : ""));
  }
  {
    double max_ratio = 0.0;
    const Tally tally = block_upper(options, bp_spaces(), 1.0, 55, &max_ratio);
    std::ostringstream detail;
    detail << tally.failures << " counterexamples in " << tally.instances
           << " B_p block instances at C1 = 1; largest unscaled ratio seen " << fmt(max_ratio, 6);
    rec.verdict("wrong constant C1 = 1 (B_p block) is caught", tally.failures > 0,
                detail.str() + (tally.failures > 0 ? "; first: " + tally.first : ""));
  }
}

struct CriterionEntry {
  const char* title;
  double limit_seconds;
  void (*run)(const Options&, Recorder&);
};

const CriterionEntry kCriteria[kCriterionCount] = {
    {"tau1 greedy vs exhaustive oracle", 5.0, criterion_tau1},
    {"S_p norm vs exhaustive oracle", 30.0, criterion_sp_oracle},
    {"B_p norm vs exhaustive oracle", 60.0, criterion_bp_oracle},
    {"Gasparis-Leung index inequalities", 60.0, criterion_gl},
    {"domination constants", 120.0, criterion_domination},
    {"Schreier-interval closed forms and growth table", 30.0, criterion_closed_forms},
    {"flat-vector norm bound", 10.0, criterion_flat},
    {"Milman flat-vector search", 60.0, criterion_milman},
    {"negative controls", 120.0, criterion_negative_controls},
};

}  // namespace

// ---------------------------------------------------------------------------

Engines mutated_engines(const std::string& mutation) {
  Engines engines;
  if (mutation == "tau1-greedy-short") {
    // Pieces one element shorter than allowed.
    engines.tau1 = [](const FinSet& a) {
      Natural pieces = 0;
      std::size_t i = 0;
      const auto& el = a.elements();
      while (i < el.size()) {
        i += std::max<std::size_t>(1, std::min<std::size_t>(el[i] - 1, el.size() - i));
        ++pieces;
      }
      return pieces;
    };
  } else if (mutation == "sp-drop-heaviest") {
    engines.norm_sp = [](const FinVec& x, double p) {
      FinVec y = x;
      Natural heaviest = 0;
      double size = 0.0;
      for (const auto& [n, v] : x.entries()) {
        if (std::fabs(v) > size) {
          size = std::fabs(v);
          heaviest = n;
        }
      }
      if (heaviest != 0) y.set(heaviest, 0.0);
      return norm_Sp(y, p);
    };
  } else if (mutation == "bp-drop-first") {
    engines.norm_bp = [](const FinVec& x, double p) {
      FinVec y = x;
      y.set(1, 0.0);
      return norm_Bp(y, p);
    };
  } else {
    throw PreconditionError("unknown mutation '" + mutation + "'");
  }
  return engines;
}

std::vector<std::string> mutation_names() { return {"tau1-greedy-short", "sp-drop-heaviest", "bp-drop-first"}; }

CriterionReport run_criterion(int id, const Options& options) {
  if (id < 1 || id > kCriterionCount) throw PreconditionError("criterion id must be 1.." + std::to_string(kCriterionCount));
  const CriterionEntry& entry = kCriteria[id - 1];
  CriterionReport report;
  report.id = id;
  report.title = entry.title;
  report.limit_seconds = entry.limit_seconds;
  Recorder rec(report);
  const auto start = std::chrono::steady_clock::now();
  try {
    entry.run(options, rec);
  } catch (const std::exception& e) {
    rec.verdict("suite completed without error", false, e.what());
  }
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::ostringstream timing;
  timing << std::fixed << std::setprecision(3) << report.seconds << " s (limit " << entry.limit_seconds << " s)";
  rec.verdict("runtime", report.seconds < entry.limit_seconds, timing.str());
  report.passed = std::all_of(report.checks.begin(), report.checks.end(), [](const CheckLine& c) { return c.passed; });
  return report;
}

std::vector<CriterionReport> run_all(const Options& options) {
  std::vector<CriterionReport> out;
  for (int id = 1; id <= kCriterionCount; ++id) out.push_back(run_criterion(id, options));
  return out;
}

std::string format_report(const CriterionReport& report) {
  std::ostringstream os;
  os << (report.passed ? "PASS" : "FAIL") << "  criterion " << report.id << ": " << report.title << '\n';
  for (const auto& c : report.checks) {
    os << "    [" << (c.passed ? "ok" : "FAIL") << "] " << c.name << " -- " << c.detail << '\n';
  }
  if (report.certificate) os << "    certificate: " << *report.certificate << '\n';
  return os.str();
}

}  // namespace schreier::acceptance
