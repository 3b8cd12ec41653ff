#pragma once

// Windowed Gasparis--Leung index
//
//   GL_1(M, N) = sup { tau1(M(J)) : J finite, N(J) Schreier },
//
// restricted to J inside [1, L]. The windowed value is a lower bound for the
// full supremum. The properties checked below (submultiplicativity, spreads,
// removal of a finite set, interleaving) all hold for the windowed value,
// because their proofs only ever split J into subsets of itself.

#include "schreier/schreier_core.hpp"

namespace schreier {

/// Nonempty strictly increasing prefix m_1 < m_2 < ... < m_L of an infinite
/// subset of N. Indexed from 1.
class IndexSeq {
 public:
  IndexSeq(std::initializer_list<Natural> elements);
  explicit IndexSeq(FinSet elements);
  explicit IndexSeq(std::vector<Natural> elements) : IndexSeq(FinSet(std::move(elements))) {}

  // (first, first + step, ..., first + (count - 1) * step)
  static IndexSeq arithmetic(Natural first, Natural step, Natural count);

  Natural length() const noexcept { return set_.size(); }
  // m_j for 1 <= j <= length().
  Natural at(Natural j) const;
  // M(J) = {m_j : j in J}.
  FinSet image(const FinSet& j) const;
  const FinSet& as_set() const noexcept { return set_; }

  // Drops the elements of `removed`, which must all occur in the sequence.
  IndexSeq without(const FinSet& removed) const;
  FinSet prefix(Natural count) const;

  std::string to_string() const { return set_.to_string(); }

 private:
  FinSet set_;
};

struct GLWindowResult {
  Natural value = 0;
  FinSet argmax_j;
  Natural window = 0;
};

GLWindowResult gl1_windowed(const IndexSeq& m, const IndexSeq& n, Natural window,
                            const OracleBounds& bounds = {});

// Re-validates a result: argmax_J inside [1, window], N(argmax_J) Schreier,
// tau1(M(argmax_J)) equal to the reported value.
bool gl_result_consistent(const IndexSeq& m, const IndexSeq& n, const GLWindowResult& result);

// GL(L,N) <= GL(L,M) * GL(M,N) on the window.
bool check_submultiplicative(const IndexSeq& l, const IndexSeq& m, const IndexSeq& n, Natural window,
                             const OracleBounds& bounds = {});

// Requires n_j >= m_j on the window; checks GL(N, M) = 1.
bool check_spread_bound(const IndexSeq& n, const IndexSeq& m, Natural window,
                        const OracleBounds& bounds = {});

// Requires F inside N with at least `window` elements of N left over; checks
// GL(N, N \ F) <= tau1({n_1, ..., n_|F|}) + 1.
bool check_removal_bound(const IndexSeq& n, const FinSet& f, Natural window,
                         const OracleBounds& bounds = {});

// Requires m_j <= n_{j+1} on the window; checks GL(N, M) <= 2.
bool check_interleave_bound(const IndexSeq& n, const IndexSeq& m, Natural window,
                            const OracleBounds& bounds = {});

}  // namespace schreier
