#include "schreier/schreier_core.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <ostream>
#include <sstream>

#include "schreier/errors.hpp"

namespace schreier {

OracleBounds OracleBounds::from_env() {
  OracleBounds bounds;
  const char* raw = std::getenv("SCHREIER_LAB_ORACLE_BOUND");
  if (raw == nullptr || *raw == '\0') return bounds;
  char* end = nullptr;
  const unsigned long long value = std::strtoull(raw, &end, 10);
  if (end == raw || *end != '\0' || value == 0 || value > 64) {
    throw PreconditionError("SCHREIER_LAB_ORACLE_BOUND must be an integer in [1, 64]");
  }
  bounds.tau1_cardinality = value;
  bounds.enumeration = value;
  bounds.sp_bruteforce = value;
  bounds.bp_bruteforce = value;
  return bounds;
}

// ---------------------------------------------------------------------------
// FinSet

FinSet::FinSet(std::initializer_list<Natural> elements)
    : FinSet(std::vector<Natural>(elements)) {}

FinSet::FinSet(std::vector<Natural> elements) : elements_(std::move(elements)) {
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (elements_[i] == 0) throw PreconditionError("finite set elements must be >= 1");
    if (i > 0 && elements_[i - 1] >= elements_[i]) {
      throw PreconditionError("finite set elements must be strictly increasing");
    }
  }
}

FinSet FinSet::interval(Natural lo, Natural hi) {
  std::vector<Natural> out;
  for (Natural n = std::max<Natural>(lo, 1); n <= hi; ++n) out.push_back(n);
  return FinSet(std::move(out));
}

Natural FinSet::min() const {
  if (elements_.empty()) throw PreconditionError("min of empty set");
  return elements_.front();
}

Natural FinSet::max() const {
  if (elements_.empty()) throw PreconditionError("max of empty set");
  return elements_.back();
}

bool FinSet::contains(Natural n) const {
  return std::binary_search(elements_.begin(), elements_.end(), n);
}

std::string FinSet::to_string() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (i > 0) os << ',';
    os << elements_[i];
  }
  os << '}';
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const FinSet& set) { return os << set.to_string(); }

bool is_schreier(const FinSet& set) noexcept {
  return set.empty() || set.size() <= set.elements().front();
}

bool is_spread(const FinSet& f, const FinSet& g) noexcept {
  if (f.size() != g.size()) return false;
  for (std::size_t j = 0; j < f.size(); ++j) {
    if (g.elements()[j] < f.elements()[j]) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// SchreierSet / SchreierChain

SchreierSet::SchreierSet(std::initializer_list<Natural> elements) : SchreierSet(FinSet(elements)) {}

SchreierSet::SchreierSet(FinSet set) : set_(std::move(set)) {
  if (!is_schreier(set_)) {
    throw PreconditionError("not a Schreier set: " + set_.to_string());
  }
}

bool are_consecutive(const std::vector<FinSet>& sets) noexcept {
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (sets[i].empty()) return false;
    if (i > 0 && sets[i - 1].elements().back() >= sets[i].elements().front()) return false;
  }
  return true;
}

bool is_schreier_chain(const std::vector<SchreierSet>& sets) noexcept {
  if (sets.empty()) return false;
  std::vector<FinSet> plain;
  plain.reserve(sets.size());
  for (const auto& s : sets) plain.push_back(s.set());
  return are_consecutive(plain);
}

SchreierChain::SchreierChain(std::vector<SchreierSet> sets) : sets_(std::move(sets)) {
  if (!is_schreier_chain(sets_)) {
    throw PreconditionError("Schreier chain must be a nonempty list of nonempty consecutive sets");
  }
}

std::string SchreierChain::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < sets_.size(); ++i) {
    if (i > 0) out += ',';
    out += sets_[i].to_string();
  }
  return out + "]";
}

// ---------------------------------------------------------------------------
// tau_1

Natural tau1(const FinSet& a) {
  GreedyCover cover;
  for (Natural n : a) cover.push(n);
  return cover.pieces();
}

std::vector<SchreierSet> tau1_decompose(const FinSet& a) {
  if (a.empty()) throw PreconditionError("tau1_decompose requires a nonempty set");
  std::vector<SchreierSet> pieces;
  const auto& el = a.elements();
  std::size_t i = 0;
  while (i < el.size()) {
    const std::size_t take = std::min<std::size_t>(el[i], el.size() - i);
    pieces.emplace_back(FinSet(std::vector<Natural>(el.begin() + i, el.begin() + i + take)));
    i += take;
  }
  return pieces;
}

namespace {

// Minimum number of Schreier blocks covering el[start..], trying every
// possible length for the block that begins at `start`.
Natural min_blocks_from(const std::vector<Natural>& el, std::size_t start) {
  if (start == el.size()) return 0;
  Natural best = std::numeric_limits<Natural>::max();
  for (std::size_t stop = start + 1; stop <= el.size(); ++stop) {
    // el[start..stop) is Schreier iff its length is at most its first element.
    if (stop - start > el[start]) continue;
    const Natural rest = min_blocks_from(el, stop);
    best = std::min(best, rest + 1);
  }
  return best;
}

void enumerate_from(Natural next, Natural n, std::vector<Natural>& current,
                    const std::function<void(const FinSet&)>& visit) {
  for (Natural k = next; k <= n; ++k) {
    if (!current.empty() && current.size() + 1 > current.front()) return;
    current.push_back(k);
    if (current.size() <= current.front()) {
      visit(FinSet(current));
      enumerate_from(k + 1, n, current, visit);
    }
    current.pop_back();
  }
}

}  // namespace

Natural tau1_bruteforce(const FinSet& a, const OracleBounds& bounds) {
  if (a.size() > bounds.tau1_cardinality) {
    throw BoundExceeded("tau1_bruteforce: |A| = " + std::to_string(a.size()) +
                        " exceeds oracle bound " + std::to_string(bounds.tau1_cardinality));
  }
  return min_blocks_from(a.elements(), 0);
}

void for_each_schreier_subset(Natural n, const std::function<void(const FinSet&)>& visit,
                              const OracleBounds& bounds) {
  if (n > bounds.enumeration) {
    throw BoundExceeded("enumerate_schreier_subsets: N = " + std::to_string(n) +
                        " exceeds enumeration bound " + std::to_string(bounds.enumeration));
  }
  visit(FinSet{});
  std::vector<Natural> current;
  enumerate_from(1, n, current, visit);
}

std::vector<SchreierSet> enumerate_schreier_subsets(Natural n, const OracleBounds& bounds) {
  std::vector<SchreierSet> out;
  for_each_schreier_subset(n, [&](const FinSet& s) { out.emplace_back(s); }, bounds);
  return out;
}

}  // namespace schreier
