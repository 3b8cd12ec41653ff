#include <doctest.h>

#include <random>

#include "schreier/errors.hpp"
#include "schreier/gl_index.hpp"
#include "schreier/random_instances.hpp"

using namespace schreier;

namespace {

IndexSeq range(Natural first, Natural count) { return IndexSeq::arithmetic(first, 1, count); }

FinSet mask_set(unsigned mask) {
  std::vector<Natural> out;
  for (Natural i = 0; i < 32; ++i) {
    if (mask & (1u << i)) out.push_back(i + 1);
  }
  return FinSet(std::move(out));
}

// Every J in [1,L], exhaustive tau1; returns value and the smallest maximizer.
GLWindowResult brute_gl(const IndexSeq& m, const IndexSeq& n, Natural window) {
  GLWindowResult best;
  best.window = window;
  bool found = false;
  for (unsigned mask = 1; mask < (1u << window); ++mask) {
    const FinSet j = mask_set(mask);
    if (!is_schreier(n.image(j))) continue;
    const Natural value = tau1_bruteforce(m.image(j));
    if (!found || value > best.value || (value == best.value && j < best.argmax_j)) {
      best.value = value;
      best.argmax_j = j;
      found = true;
    }
  }
  return best;
}

}  // namespace

TEST_CASE("IndexSeq basics") {
  const IndexSeq n = IndexSeq::arithmetic(2, 2, 5);
  CHECK(n.length() == 5);
  CHECK(n.at(1) == 2);
  CHECK(n.at(5) == 10);
  CHECK_THROWS(n.at(0));
  CHECK_THROWS(n.at(6));
  CHECK(n.image(FinSet{1, 3}) == FinSet{2, 6});
  CHECK(n.without(FinSet{4, 8}).as_set() == FinSet{2, 6, 10});
  CHECK_THROWS_AS(n.without(FinSet{3}), PreconditionError);
  CHECK(n.prefix(2) == FinSet{2, 4});
  CHECK_THROWS_AS(IndexSeq(FinSet{}), PreconditionError);
}

TEST_CASE("windowed index examples") {
  const IndexSeq m = range(1, 8);
  auto r = gl1_windowed(m, m, 8);
  CHECK(r.value == 1);
  CHECK(gl_result_consistent(m, m, r));

  const IndexSeq ones_to_20 = range(1, 20);
  const IndexSeq evens = IndexSeq::arithmetic(2, 2, 20);
  r = gl1_windowed(ones_to_20, evens, 20);
  CHECK(r.value == 2);
  CHECK(gl_result_consistent(ones_to_20, evens, r));

  const IndexSeq shifted = range(2, 30);
  CHECK(gl1_windowed(shifted, range(1, 30), 24).value == 1);
}

TEST_CASE("window errors") {
  const IndexSeq m = range(1, 30);
  CHECK_THROWS_AS(gl1_windowed(m, m, 0), PreconditionError);
  CHECK_THROWS_AS(gl1_windowed(m, m, 25), BoundExceeded);
  CHECK_THROWS_AS(gl1_windowed(range(1, 5), m, 6), PreconditionError);
  OracleBounds bounds;
  bounds.gl_window = 30;
  CHECK_NOTHROW(gl1_windowed(m, m, 30, bounds));
}

TEST_CASE("windowed search equals exhaustive search") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 150; ++trial) {
    const IndexSeq m = random::increasing(rng, 10, 40);
    const IndexSeq n = random::increasing(rng, 10, 40);
    const Natural window = 1 + trial % 10;
    const auto fast = gl1_windowed(m, n, window);
    const auto slow = brute_gl(m, n, window);
    INFO("M = " << m.to_string() << ", N = " << n.to_string() << ", L = " << window);
    CHECK(fast.value == slow.value);
    CHECK(fast.argmax_j == slow.argmax_j);
  }
}

TEST_CASE("value is at least one and monotone in the window") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const IndexSeq m = random::increasing(rng, 14, 60);
    const IndexSeq n = random::increasing(rng, 14, 60);
    Natural previous = 0;
    for (Natural window = 1; window <= 14; ++window) {
      const Natural value = gl1_windowed(m, n, window).value;
      CHECK(value >= 1);
      CHECK(value >= previous);
      previous = value;
    }
  }
}

TEST_CASE("submultiplicativity") {
  const IndexSeq m = range(1, 12);
  CHECK(check_submultiplicative(m, m, m, 12));
  CHECK(check_submultiplicative(range(3, 12), range(2, 12), range(1, 12), 12));
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 100; ++trial) {
    CHECK(check_submultiplicative(random::increasing(rng, 12, 60), random::increasing(rng, 12, 60),
                                  random::increasing(rng, 12, 60), 12));
  }
}

TEST_CASE("spread bound") {
  const IndexSeq m = range(1, 12);
  CHECK(check_spread_bound(m, m, 12));
  CHECK(check_spread_bound(range(2, 12), m, 12));
  CHECK(check_spread_bound(IndexSeq::arithmetic(2, 2, 12), IndexSeq::arithmetic(1, 2, 12), 12));
  CHECK_THROWS_AS(check_spread_bound(m, range(2, 12), 12), PreconditionError);
}

TEST_CASE("removal bound") {
  const IndexSeq n = range(1, 30);
  CHECK(check_removal_bound(n, FinSet{}, 12));
  CHECK(check_removal_bound(n, FinSet{1}, 12));
  CHECK(check_removal_bound(n, FinSet{2, 5, 9}, 12));
  CHECK_THROWS_AS(check_removal_bound(IndexSeq::arithmetic(2, 2, 20), FinSet{3}, 12), PreconditionError);
}

TEST_CASE("interleave bound") {
  const IndexSeq m = range(1, 13);
  CHECK(check_interleave_bound(m, m, 12));
  CHECK(check_interleave_bound(IndexSeq::arithmetic(3, 2, 13), IndexSeq::arithmetic(2, 2, 13), 12));
  CHECK(check_interleave_bound(range(1, 13), range(2, 13), 12));
  CHECK_THROWS_AS(check_interleave_bound(range(1, 13), range(5, 13), 12), PreconditionError);

  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 100; ++trial) {
    const auto [mm, nn] = random::interleaved_pair(rng, 13, 60);
    CHECK(check_interleave_bound(nn, mm, 12));
  }
}
