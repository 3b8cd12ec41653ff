#include "schreier/gl_index.hpp"

#include <algorithm>
#include <string>

#include "schreier/errors.hpp"

namespace schreier {

IndexSeq::IndexSeq(std::initializer_list<Natural> elements) : IndexSeq(FinSet(elements)) {}

IndexSeq::IndexSeq(FinSet elements) : set_(std::move(elements)) {
  if (set_.empty()) throw PreconditionError("index sequence must be nonempty");
}

IndexSeq IndexSeq::arithmetic(Natural first, Natural step, Natural count) {
  if (step == 0) throw PreconditionError("arithmetic index sequence needs a positive step");
  std::vector<Natural> out;
  out.reserve(count);
  for (Natural j = 0; j < count; ++j) out.push_back(first + j * step);
  return IndexSeq(std::move(out));
}

Natural IndexSeq::at(Natural j) const {
  if (j == 0 || j > set_.size()) {
    throw PreconditionError("index " + std::to_string(j) + " outside sequence of length " +
                            std::to_string(set_.size()));
  }
  return set_.elements()[j - 1];
}

FinSet IndexSeq::image(const FinSet& j) const {
  std::vector<Natural> out;
  out.reserve(j.size());
  for (Natural k : j) out.push_back(at(k));
  return FinSet(std::move(out));
}

IndexSeq IndexSeq::without(const FinSet& removed) const {
  std::vector<Natural> out;
  for (Natural v : removed) {
    if (!set_.contains(v)) {
      throw PreconditionError("removed element " + std::to_string(v) + " is not in the sequence");
    }
  }
  for (Natural v : set_) {
    if (!removed.contains(v)) out.push_back(v);
  }
  return IndexSeq(std::move(out));
}

FinSet IndexSeq::prefix(Natural count) const {
  count = std::min(count, set_.size());
  return FinSet(std::vector<Natural>(set_.begin(), set_.begin() + count));
}

namespace {

// Depth-first search over admissible J in lexicographic order. Only strict
// improvements are recorded, so the first maximizer found is the
// lexicographically smallest one.
class WindowSearch {
 public:
  WindowSearch(const IndexSeq& m, const IndexSeq& n, Natural window)
      : m_(m), n_(n), window_(window) {}

  GLWindowResult run() {
    for (Natural first = 1; first <= window_; ++first) {
      // N(J) Schreier with min J = first forces |J| <= n_first.
      const Natural budget = n_.at(first);
      GreedyCover cover;
      cover.push(m_.at(first));
      current_.assign(1, first);
      visit(cover, budget);
    }
    return {best_, FinSet(best_j_), window_};
  }

 private:
  void visit(const GreedyCover& cover, Natural budget) {
    if (cover.pieces() > best_) {
      best_ = cover.pieces();
      best_j_ = current_;
    }
    const Natural last = current_.back();
    const Natural room = std::min<Natural>(budget - current_.size(), window_ - last);
    // Each added element opens at most one new piece.
    if (room == 0 || cover.pieces() + room <= best_) return;
    for (Natural next = last + 1; next <= window_; ++next) {
      GreedyCover extended = cover;
      extended.push(m_.at(next));
      current_.push_back(next);
      visit(extended, budget);
      current_.pop_back();
      const Natural left = std::min<Natural>(budget - current_.size(), window_ - next);
      if (cover.pieces() + left <= best_) break;
    }
  }

  const IndexSeq& m_;
  const IndexSeq& n_;
  Natural window_;
  Natural best_ = 0;
  std::vector<Natural> best_j_;
  std::vector<Natural> current_;
};

void require_window(const IndexSeq& m, const IndexSeq& n, Natural window, const OracleBounds& bounds) {
  if (window == 0) throw PreconditionError("window must be at least 1");
  if (window > bounds.gl_window) {
    throw BoundExceeded("window " + std::to_string(window) + " exceeds search bound " +
                        std::to_string(bounds.gl_window));
  }
  if (window > m.length() || window > n.length()) {
    throw PreconditionError("window " + std::to_string(window) +
                            " is longer than one of the index sequences");
  }
}

}  // namespace

GLWindowResult gl1_windowed(const IndexSeq& m, const IndexSeq& n, Natural window,
                            const OracleBounds& bounds) {
  require_window(m, n, window, bounds);
  return WindowSearch(m, n, window).run();
}

bool gl_result_consistent(const IndexSeq& m, const IndexSeq& n, const GLWindowResult& result) {
  if (result.argmax_j.empty()) return result.value == 0;
  if (result.argmax_j.max() > result.window) return false;
  if (!is_schreier(n.image(result.argmax_j))) return false;
  return tau1(m.image(result.argmax_j)) == result.value;
}

bool check_submultiplicative(const IndexSeq& l, const IndexSeq& m, const IndexSeq& n, Natural window,
                             const OracleBounds& bounds) {
  const auto ln = gl1_windowed(l, n, window, bounds).value;
  const auto lm = gl1_windowed(l, m, window, bounds).value;
  const auto mn = gl1_windowed(m, n, window, bounds).value;
  return ln <= lm * mn;
}

bool check_spread_bound(const IndexSeq& n, const IndexSeq& m, Natural window, const OracleBounds& bounds) {
  require_window(n, m, window, bounds);
  for (Natural j = 1; j <= window; ++j) {
    if (n.at(j) < m.at(j)) {
      throw PreconditionError("check_spread_bound: N is not a spread of M at j = " + std::to_string(j));
    }
  }
  return gl1_windowed(n, m, window, bounds).value == 1;
}

bool check_removal_bound(const IndexSeq& n, const FinSet& f, Natural window, const OracleBounds& bounds) {
  const IndexSeq rest = n.without(f);
  require_window(n, rest, window, bounds);
  const Natural bound = tau1(n.prefix(f.size())) + 1;
  return gl1_windowed(n, rest, window, bounds).value <= bound;
}

bool check_interleave_bound(const IndexSeq& n, const IndexSeq& m, Natural window,
                            const OracleBounds& bounds) {
  require_window(n, m, window, bounds);
  // A J with two or more elements has min J < window, so j < window suffices.
  for (Natural j = 1; j < window; ++j) {
    if (m.at(j) > n.at(j + 1)) {
      throw PreconditionError("check_interleave_bound: m_j > n_{j+1} at j = " + std::to_string(j));
    }
  }
  return gl1_windowed(n, m, window, bounds).value <= 2;
}

}  // namespace schreier
