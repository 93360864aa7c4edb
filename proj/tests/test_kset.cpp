// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ksc/kset.hpp"

#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "ksc/rng.hpp"
#include "test_util.hpp"

using ksc::ElementId;
using ksc::KSet;
using ksc::Position;
using ksc::testing::kset_from;

namespace {

// All (k+1)^n k-sets over (n, k), odometer order.
std::vector<KSet> all_ksets(int n, int k) {
  std::vector<KSet> out;
  std::vector<Position> assign(static_cast<std::size_t>(n), 0);
  while (true) {
    out.push_back(kset_from(assign, k));
    int e = 0;
    while (e < n && assign[static_cast<std::size_t>(e)] == k) {
      assign[static_cast<std::size_t>(e)] = 0;
      ++e;
    }
    if (e == n) break;
    ++assign[static_cast<std::size_t>(e)];
  }
  return out;
}

KSet random_kset(int n, int k, ksc::RngStream& rng) {
  KSet x(n, k);
  for (ElementId e = 0; e < n; ++e) {
    const auto pos = static_cast<Position>(
        rng.uniform_below(static_cast<std::uint64_t>(k) + 1));
    if (pos != 0) x.insert_in_place(e, pos);
  }
  return x;
}

}  // namespace

TEST_CASE("construction validates the shape") {
  CHECK_THROWS_AS(KSet(0, 2), std::domain_error);
  CHECK_THROWS_AS(KSet(-3, 2), std::domain_error);
  CHECK_THROWS_AS(KSet(5, 1), std::domain_error);
  CHECK_THROWS_AS(KSet(5, 0), std::domain_error);
  const KSet x(5, 3);
  CHECK(x.n() == 5);
  CHECK(x.k() == 3);
  CHECK(x.support_size() == 0);
  for (ElementId e = 0; e < 5; ++e) CHECK(x.at(e) == 0);
}

TEST_CASE("insert places a single element") {
  KSet x = KSet::empty(2, 2);
  const KSet y = x.insert(0, 1);
  CHECK(y.at(0) == 1);
  CHECK(y.at(1) == 0);
  CHECK(y.support_size() == 1);
  // The original is untouched (insert returns a fresh value).
  CHECK(x.support_size() == 0);

  const KSet z = y.insert(1, 2);
  CHECK(z.at(0) == 1);
  CHECK(z.at(1) == 2);
  CHECK(z.support_size() == 2);
}

TEST_CASE("insert rejects occupied elements and bad positions") {
  const KSet x = kset_from({1, 0}, 2);
  CHECK_THROWS_WITH_AS(static_cast<void>(x.insert(0, 2)),
                       doctest::Contains("already assigned"),
                       std::domain_error);
  CHECK_THROWS_AS(static_cast<void>(x.insert(1, 0)), std::domain_error);
  CHECK_THROWS_AS(static_cast<void>(x.insert(1, 3)), std::domain_error);
  CHECK_THROWS_AS(static_cast<void>(x.insert(-1, 1)), std::domain_error);
  CHECK_THROWS_AS(static_cast<void>(x.insert(2, 1)), std::domain_error);
}

TEST_CASE("insert grows the support by exactly one and keeps other entries") {
  ksc::RngStream rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    KSet x = random_kset(6, 3, rng);
    const auto pool = x.unassigned_elements();
    if (pool.empty()) continue;
    const ElementId e =
        pool[rng.uniform_below(static_cast<std::uint64_t>(pool.size()))];
    const auto i = static_cast<Position>(1 + rng.uniform_below(3));
    const KSet y = x.insert(e, i);
    CHECK(y.support_size() == x.support_size() + 1);
    CHECK(y.at(e) == i);
    for (ElementId other = 0; other < 6; ++other) {
      if (other != e) CHECK(y.at(other) == x.at(other));
    }
  }
}

TEST_CASE("support and unassigned_elements partition the ground set") {
  const KSet x = kset_from({2, 0, 1, 0, 3}, 3);
  CHECK(x.support() == std::vector<ElementId>{0, 2, 4});
  CHECK(x.unassigned_elements() == std::vector<ElementId>{1, 3});
  CHECK(x.support_size() == 3);
  CHECK(x.assigned(0));
  CHECK_FALSE(x.assigned(1));
}

TEST_CASE("pairs and to_string render sorted by element id") {
  const KSet x = kset_from({0, 2, 0, 1}, 2);
  const std::vector<std::pair<ElementId, Position>> expected{{1, 2}, {3, 1}};
  CHECK(x.pairs() == expected);
  CHECK(x.to_string() == "(1:2, 3:1)");
  CHECK(KSet(3, 2).to_string() == "()");
}

TEST_CASE("meet is the coordinate-wise intersection") {
  CHECK(meet(kset_from({1, 2}, 2), kset_from({1, 0}, 2)) ==
        kset_from({1, 0}, 2));
  CHECK(meet(kset_from({1, 0}, 2), kset_from({2, 0}, 2)) ==
        kset_from({0, 0}, 2));
}

TEST_CASE("join unions coordinates and drops conflicted elements") {
  CHECK(join(kset_from({1, 0}, 2), kset_from({0, 2}, 2)) ==
        kset_from({1, 2}, 2));
  CHECK(join(kset_from({1, 2}, 2), kset_from({2, 1}, 2)) ==
        kset_from({0, 0}, 2));
  const KSet x = kset_from({2, 0, 1}, 2);
  CHECK(join(x, KSet(3, 2)) == x);
  CHECK(join(KSet(3, 2), x) == x);
}

TEST_CASE("is_subset matches the coordinate-wise containment order") {
  CHECK(is_subset(kset_from({1, 0}, 2), kset_from({1, 2}, 2)));
  CHECK_FALSE(is_subset(kset_from({1, 0}, 2), kset_from({2, 2}, 2)));
  ksc::RngStream rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const KSet y = random_kset(5, 3, rng);
    CHECK(is_subset(KSet(5, 3), y));
  }
}

TEST_CASE("lattice operations reject mismatched shapes") {
  const KSet a(3, 2);
  const KSet b(4, 2);
  const KSet c(3, 3);
  CHECK_THROWS_AS(static_cast<void>(meet(a, b)), std::domain_error);
  CHECK_THROWS_AS(static_cast<void>(join(a, c)), std::domain_error);
  CHECK_THROWS_AS(static_cast<void>(is_subset(b, c)), std::domain_error);
}

TEST_CASE("meet lower-bounds both operands exhaustively at n=4, k=2") {
  const std::vector<KSet> states = all_ksets(4, 2);
  REQUIRE(states.size() == 81);
  long long pairs = 0;
  for (const KSet& x : states) {
    for (const KSet& y : states) {
      const KSet m = meet(x, y);
      CHECK(is_subset(m, x));
      CHECK(is_subset(m, y));
      // Meet and join are commutative.
      CHECK(m == meet(y, x));
      CHECK(join(x, y) == join(y, x));
      ++pairs;
    }
  }
  CHECK(pairs == 6561);
}

TEST_CASE("meet is idempotent and join has the empty set as identity") {
  for (const KSet& x : all_ksets(3, 3)) {
    CHECK(meet(x, x) == x);
    CHECK(join(x, KSet(3, 3)) == x);
  }
}

TEST_CASE("is_subset is a partial order on sampled triples") {
  ksc::RngStream rng(23);
  for (int trial = 0; trial < 300; ++trial) {
    const KSet x = random_kset(5, 2, rng);
    const KSet y = random_kset(5, 2, rng);
    const KSet z = random_kset(5, 2, rng);
    CHECK(is_subset(x, x));  // reflexive
    if (is_subset(x, y) && is_subset(y, x)) CHECK(x == y);  // antisymmetric
    if (is_subset(x, y) && is_subset(y, z)) CHECK(is_subset(x, z));
  }
}

TEST_CASE("join positions follow the conflict rule element-wise") {
  // For each element the joined position is the unique nonzero position when
  // the two sides agree or one side is unassigned, and 0 on conflicts.
  for (const KSet& x : all_ksets(3, 2)) {
    for (const KSet& y : all_ksets(3, 2)) {
      const KSet j = join(x, y);
      for (ElementId e = 0; e < 3; ++e) {
        const Position p = x.at(e);
        const Position q = y.at(e);
        Position expected = 0;
        if (p == 0) {
          expected = q;
        } else if (q == 0 || q == p) {
          expected = p;
        }
        CHECK(j.at(e) == expected);
      }
    }
  }
}
