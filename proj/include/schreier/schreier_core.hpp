#pragma once

// Finite subsets of N = {1, 2, 3, ...}, Schreier sets, Schreier chains and
// the Schreier covering number tau_1.

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

namespace schreier {

using Natural = std::size_t;

// Limits for the exhaustive oracles. The environment variable
// SCHREIER_LAB_ORACLE_BOUND overrides every enumeration bound at once.
struct OracleBounds {
  Natural tau1_cardinality = 16;
  Natural enumeration = 16;
  Natural sp_bruteforce = 16;
  Natural bp_bruteforce = 12;
  Natural gl_window = 24;
  Natural milman_support = 12;

  static OracleBounds from_env();
};

/// Strictly increasing finite sequence of positive naturals.
class FinSet {
 public:
  FinSet() = default;
  FinSet(std::initializer_list<Natural> elements);
  explicit FinSet(std::vector<Natural> elements);

  // Interval [lo, hi] of N, empty when hi < lo.
  static FinSet interval(Natural lo, Natural hi);

  const std::vector<Natural>& elements() const noexcept { return elements_; }
  Natural size() const noexcept { return elements_.size(); }
  bool empty() const noexcept { return elements_.empty(); }
  Natural min() const;
  Natural max() const;
  bool contains(Natural n) const;

  auto begin() const noexcept { return elements_.begin(); }
  auto end() const noexcept { return elements_.end(); }

  std::string to_string() const;

  friend bool operator==(const FinSet&, const FinSet&) = default;
  friend auto operator<=>(const FinSet&, const FinSet&) = default;

 private:
  std::vector<Natural> elements_;
};

std::ostream& operator<<(std::ostream& os, const FinSet& set);

bool is_schreier(const FinSet& set) noexcept;

// G is a spread of F: same cardinality and g_j >= f_j for every j.
bool is_spread(const FinSet& f, const FinSet& g) noexcept;

/// A finite set that is empty or has |F| <= min F.
class SchreierSet {
 public:
  SchreierSet() = default;
  SchreierSet(std::initializer_list<Natural> elements);
  explicit SchreierSet(FinSet set);

  const FinSet& set() const noexcept { return set_; }
  const std::vector<Natural>& elements() const noexcept { return set_.elements(); }
  Natural size() const noexcept { return set_.size(); }
  bool empty() const noexcept { return set_.empty(); }
  Natural min() const { return set_.min(); }
  Natural max() const { return set_.max(); }
  auto begin() const noexcept { return set_.begin(); }
  auto end() const noexcept { return set_.end(); }

  std::string to_string() const { return set_.to_string(); }

  friend bool operator==(const SchreierSet&, const SchreierSet&) = default;

 private:
  FinSet set_;
};

/// Nonempty list of nonempty Schreier sets F_1 < F_2 < ... (max F_j < min F_{j+1}).
class SchreierChain {
 public:
  explicit SchreierChain(std::vector<SchreierSet> sets);

  const std::vector<SchreierSet>& sets() const noexcept { return sets_; }
  Natural size() const noexcept { return sets_.size(); }
  auto begin() const noexcept { return sets_.begin(); }
  auto end() const noexcept { return sets_.end(); }

  std::string to_string() const;

  friend bool operator==(const SchreierChain&, const SchreierChain&) = default;

 private:
  std::vector<SchreierSet> sets_;
};

// True when the sets are nonempty, pairwise consecutive and each Schreier.
bool is_schreier_chain(const std::vector<SchreierSet>& sets) noexcept;
bool are_consecutive(const std::vector<FinSet>& sets) noexcept;

/// Schreier covering number: the least number of consecutive Schreier sets
/// covering A, computed greedily from the left. tau1({}) = 0.
Natural tau1(const FinSet& a);

// Greedy canonical decomposition of a nonempty A into tau1(A) pieces: each
// piece starts at the first uncovered element a and takes min(a, remaining)
// elements.
std::vector<SchreierSet> tau1_decompose(const FinSet& a);

// Exhaustive minimum over all splittings of A into consecutive blocks.
Natural tau1_bruteforce(const FinSet& a, const OracleBounds& bounds = {});

/// Incremental form of the greedy tau1 rule for elements fed in increasing
/// order. Used by the index search, where sets grow one element at a time.
class GreedyCover {
 public:
  void push(Natural element) noexcept {
    if (pieces_ == 0 || used_ >= capacity_) {
      ++pieces_;
      capacity_ = element;
      used_ = 1;
    } else {
      ++used_;
    }
  }
  Natural pieces() const noexcept { return pieces_; }

 private:
  Natural pieces_ = 0;
  Natural capacity_ = 0;
  Natural used_ = 0;
};

// Visits every Schreier subset of [1, n] exactly once, in lexicographic order
// of element lists (the empty set first).
void for_each_schreier_subset(Natural n, const std::function<void(const FinSet&)>& visit,
                              const OracleBounds& bounds = {});
std::vector<SchreierSet> enumerate_schreier_subsets(Natural n, const OracleBounds& bounds = {});

}  // namespace schreier
