#include <doctest.h>

#include <random>

#include "schreier/errors.hpp"
#include "schreier/schreier_core.hpp"

using namespace schreier;

namespace {

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Schreier subsets of [1,n] counted by minimum m and size k <= m.
std::size_t schreier_count(std::size_t n) {
  std::size_t total = 1;
  for (std::size_t m = 1; m <= n; ++m) {
    for (std::size_t k = 1; k <= m; ++k) total += binomial(n - m, k - 1);
  }
  return total;
}

FinSet subset_of_mask(unsigned mask) {
  std::vector<Natural> elements;
  for (Natural i = 0; i < 32; ++i) {
    if (mask & (1u << i)) elements.push_back(i + 1);
  }
  return FinSet(std::move(elements));
}

}  // namespace

TEST_CASE("FinSet validation") {
  CHECK(FinSet{}.empty());
  CHECK(FinSet{2, 5}.to_string() == "{2,5}");
  CHECK_THROWS_AS(FinSet({3, 2}), PreconditionError);
  CHECK_THROWS_AS(FinSet({2, 2}), PreconditionError);
  CHECK_THROWS_AS(FinSet({0, 1}), PreconditionError);
  CHECK(FinSet::interval(3, 5) == FinSet{3, 4, 5});
  CHECK(FinSet::interval(4, 3).empty());
}

TEST_CASE("is_schreier") {
  CHECK(is_schreier(FinSet{}));
  CHECK_FALSE(is_schreier(FinSet{1, 2}));
  CHECK(is_schreier(FinSet{3, 5, 9}));
  CHECK(is_schreier(FinSet{1}));
  CHECK_FALSE(is_schreier(FinSet{3, 4, 5, 6}));
  CHECK_THROWS_AS(SchreierSet({1, 2}), PreconditionError);
}

TEST_CASE("is_spread") {
  CHECK(is_spread(FinSet{1, 3}, FinSet{2, 3}));
  CHECK_FALSE(is_spread(FinSet{1, 3}, FinSet{2}));
  CHECK(is_spread(FinSet{2, 4}, FinSet{2, 4}));
  CHECK_FALSE(is_spread(FinSet{2, 4}, FinSet{1, 5}));
}

TEST_CASE("spreads of Schreier sets are Schreier") {
  std::mt19937_64 rng(7);
  for (unsigned mask = 1; mask < (1u << 10); ++mask) {
    const FinSet f = subset_of_mask(mask);
    if (!is_schreier(f)) continue;
    std::vector<Natural> g;
    Natural floor = 0;
    for (Natural x : f) {
      floor = std::max(floor + 1, x + std::uniform_int_distribution<Natural>(0, 3)(rng));
      g.push_back(floor);
    }
    const FinSet spread(std::move(g));
    REQUIRE(is_spread(f, spread));
    CHECK(is_schreier(spread));
  }
}

TEST_CASE("chains") {
  const SchreierChain chain({SchreierSet{1}, SchreierSet{2, 3}});
  CHECK(chain.to_string() == "[{1},{2,3}]");
  CHECK(is_schreier_chain({SchreierSet{2, 3}, SchreierSet{4, 5}}));
  CHECK_FALSE(is_schreier_chain({SchreierSet{2, 4}, SchreierSet{3, 5}}));
  CHECK_FALSE(is_schreier_chain({}));
  CHECK_THROWS_AS(SchreierChain({SchreierSet{3}, SchreierSet{2}}), PreconditionError);
}

TEST_CASE("tau1 examples") {
  CHECK(tau1(FinSet{}) == 0);
  CHECK(tau1(FinSet{1, 2, 3}) == 2);
  CHECK(tau1(FinSet{1, 2, 4, 5, 6, 7}) == 3);
  CHECK(tau1(FinSet{7}) == 1);
  CHECK(tau1_bruteforce(FinSet{1, 2, 3}) == 2);
  CHECK(tau1_bruteforce(FinSet{}) == 0);
  CHECK(tau1_bruteforce(FinSet{5, 6, 7, 8, 9}) == 1);
}

TEST_CASE("tau1_decompose examples") {
  auto pieces = tau1_decompose(FinSet{1, 2, 3});
  REQUIRE(pieces.size() == 2);
  CHECK(pieces[0] == SchreierSet{1});
  CHECK(pieces[1] == SchreierSet{2, 3});

  pieces = tau1_decompose(FinSet{5});
  REQUIRE(pieces.size() == 1);
  CHECK(pieces[0] == SchreierSet{5});

  pieces = tau1_decompose(FinSet{2, 3, 4, 5});
  REQUIRE(pieces.size() == 2);
  CHECK(pieces[0] == SchreierSet{2, 3});
  CHECK(pieces[1] == SchreierSet{4, 5});

  pieces = tau1_decompose(FinSet{1, 2, 4, 5, 6, 7});
  REQUIRE(pieces.size() == 3);
  CHECK(pieces[1] == SchreierSet{2, 4});
  CHECK(pieces[2] == SchreierSet{5, 6, 7});

  CHECK_THROWS_AS(tau1_decompose(FinSet{}), PreconditionError);
}

TEST_CASE("greedy tau1 equals the exhaustive oracle on every subset of [1,12]") {
  for (unsigned mask = 1; mask < (1u << 12); ++mask) {
    const FinSet a = subset_of_mask(mask);
    INFO("A = " << a);
    REQUIRE(tau1(a) == tau1_bruteforce(a));
  }
}

TEST_CASE("decomposition covers A with consecutive Schreier pieces") {
  for (unsigned mask = 1; mask < (1u << 11); ++mask) {
    const FinSet a = subset_of_mask(mask);
    const auto pieces = tau1_decompose(a);
    CHECK(pieces.size() == tau1(a));
    std::vector<Natural> joined;
    for (std::size_t i = 0; i < pieces.size(); ++i) {
      CHECK(is_schreier(pieces[i].set()));
      if (i > 0) CHECK(pieces[i - 1].max() < pieces[i].min());
      joined.insert(joined.end(), pieces[i].begin(), pieces[i].end());
    }
    CHECK(FinSet(joined) == a);
  }
}

TEST_CASE("tau1 is subadditive over consecutive unions") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<unsigned> mask(0, (1u << 16) - 1);
  for (int trial = 0; trial < 500; ++trial) {
    const FinSet a = subset_of_mask(mask(rng));
    if (a.empty()) continue;
    const Natural cut = a.elements()[a.size() / 2];
    std::vector<Natural> left, right;
    for (Natural x : a) (x < cut ? left : right).push_back(x);
    CHECK(tau1(a) <= tau1(FinSet(left)) + tau1(FinSet(right)));
  }
}

TEST_CASE("tau1 is monotone under removal of elements") {
  for (unsigned mask = 1; mask < (1u << 10); ++mask) {
    const FinSet a = subset_of_mask(mask);
    for (unsigned bit = 0; bit < 10; ++bit) {
      if (!(mask & (1u << bit))) continue;
      CHECK(tau1(subset_of_mask(mask & ~(1u << bit))) <= tau1(a));
    }
  }
}

TEST_CASE("oracle bound is enforced") {
  OracleBounds bounds;
  bounds.tau1_cardinality = 4;
  CHECK_THROWS_AS(tau1_bruteforce(FinSet::interval(1, 5), bounds), BoundExceeded);
  CHECK(tau1_bruteforce(FinSet::interval(1, 4), bounds) == 3);
  bounds.enumeration = 3;
  CHECK_THROWS_AS(enumerate_schreier_subsets(4, bounds), BoundExceeded);
}

TEST_CASE("enumeration") {
  auto sets = enumerate_schreier_subsets(1);
  REQUIRE(sets.size() == 2);
  CHECK(sets[0].empty());
  CHECK(sets[1] == SchreierSet{1});

  sets = enumerate_schreier_subsets(3);
  CHECK(sets.size() == 5);
  CHECK(enumerate_schreier_subsets(2).size() == 3);
}

TEST_CASE("enumeration count matches the binomial count") {
  for (Natural n = 0; n <= 16; ++n) {
    std::size_t visited = 0;
    for_each_schreier_subset(n, [&](const FinSet& f) {
      CHECK(is_schreier(f));
      CHECK((f.empty() || f.max() <= n));
      ++visited;
    });
    CHECK(visited == schreier_count(n));
  }
}

TEST_CASE("enumeration matches filtering all subsets") {
  const Natural n = 12;
  std::vector<FinSet> filtered;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    const FinSet f = subset_of_mask(mask);
    if (is_schreier(f)) filtered.push_back(f);
  }
  std::vector<FinSet> enumerated;
  for (const auto& s : enumerate_schreier_subsets(n)) enumerated.push_back(s.set());
  std::sort(filtered.begin(), filtered.end());
  std::sort(enumerated.begin(), enumerated.end());
  CHECK(filtered == enumerated);
}
