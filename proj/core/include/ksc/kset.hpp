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

#ifndef KSC_KSET_HPP_
#define KSC_KSET_HPP_

#include <string>
#include <utility>
#include <vector>

namespace ksc {

// Elements of the ground set V are the integers 0..n-1.
using ElementId = int;
// A position is one of the k coordinates, numbered 1..k; 0 means unassigned.
using Position = int;

// A k-set: a disjoint assignment of ground-set elements to k positions,
// equivalently a vector x in {0, 1, ..., k}^n where x(e) = 0 means element e
// is unassigned and x(e) = i means e sits in coordinate i.
//
// The public const API treats values as immutable: lattice operations and
// insert() return fresh values. insert_in_place() mutates and exists for
// solver loops that own their working copy.
class KSet {
 public:
  // The empty k-set over n elements and k positions. n >= 1, k >= 2.
  KSet(int n, int k);

  static KSet empty(int n, int k) { return KSet(n, k); }

  int n() const { return static_cast<int>(assign_.size()); }
  int k() const { return k_; }

  // Position of element e (0 if unassigned).
  Position at(ElementId e) const;
  bool assigned(ElementId e) const { return at(e) != 0; }

  // |supp(x)|, maintained incrementally; O(1).
  int support_size() const { return support_size_; }

  // Assigned element ids, ascending.
  std::vector<ElementId> support() const;
  // Unassigned element ids, ascending.
  std::vector<ElementId> unassigned_elements() const;

  // x with element e placed at position i (1 <= i <= k). Errors if e is
  // already assigned or out of range.
  KSet insert(ElementId e, Position i) const;
  void insert_in_place(ElementId e, Position i);

  // The pair list ((e, i) for assigned e) sorted by element id.
  std::vector<std::pair<ElementId, Position>> pairs() const;

  // Renders the pair list as "(e:i, e:i, ...)"; "()" when empty.
  std::string to_string() const;

  bool operator==(const KSet& other) const = default;

 private:
  int k_;
  int support_size_;
  std::vector<Position> assign_;
};

// Coordinate-wise intersection: (x meet y)(e) = x(e) if x(e) == y(e), else 0.
KSet meet(const KSet& x, const KSet& y);

// Coordinate-wise union with conflict removal: element e lands at position i
// when exactly one position is named by {x(e), y(e)} \ {0}; elements claimed
// by both sides at different positions are dropped.
KSet join(const KSet& x, const KSet& y);

// The lattice partial order: x is below y iff X_i is a subset of Y_i for all
// coordinates i.
bool is_subset(const KSet& x, const KSet& y);

}  // namespace ksc

#endif  // KSC_KSET_HPP_
