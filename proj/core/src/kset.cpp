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

#include <sstream>
#include <stdexcept>

namespace ksc {

namespace {

void check_same_shape(const KSet& x, const KSet& y) {
  if (x.n() != y.n() || x.k() != y.k()) {
    throw std::domain_error("k-set shape mismatch: (" + std::to_string(x.n()) +
                            "," + std::to_string(x.k()) + ") vs (" +
                            std::to_string(y.n()) + "," +
                            std::to_string(y.k()) + ")");
  }
}

}  // namespace

KSet::KSet(int n, int k) : k_(k), support_size_(0) {
  if (n < 1) throw std::domain_error("k-set requires n >= 1, got " + std::to_string(n));
  if (k < 2) throw std::domain_error("k-set requires k >= 2, got " + std::to_string(k));
  assign_.assign(static_cast<std::size_t>(n), 0);
}

Position KSet::at(ElementId e) const {
  if (e < 0 || e >= n()) {
    throw std::domain_error("element id " + std::to_string(e) +
                            " out of range [0," + std::to_string(n()) + ")");
  }
  return assign_[static_cast<std::size_t>(e)];
}

std::vector<ElementId> KSet::support() const {
  std::vector<ElementId> out;
  out.reserve(static_cast<std::size_t>(support_size_));
  for (ElementId e = 0; e < n(); ++e) {
    if (assign_[static_cast<std::size_t>(e)] != 0) out.push_back(e);
  }
  return out;
}

std::vector<ElementId> KSet::unassigned_elements() const {
  std::vector<ElementId> out;
  out.reserve(static_cast<std::size_t>(n() - support_size_));
  for (ElementId e = 0; e < n(); ++e) {
    if (assign_[static_cast<std::size_t>(e)] == 0) out.push_back(e);
  }
  return out;
}

void KSet::insert_in_place(ElementId e, Position i) {
  if (i < 1 || i > k_) {
    throw std::domain_error("position " + std::to_string(i) +
                            " out of range [1," + std::to_string(k_) + "]");
  }
  if (at(e) != 0) {
    throw std::domain_error("element " + std::to_string(e) +
                            " is already assigned");
  }
  assign_[static_cast<std::size_t>(e)] = i;
  ++support_size_;
}

KSet KSet::insert(ElementId e, Position i) const {
  KSet out = *this;
  out.insert_in_place(e, i);
  return out;
}

std::vector<std::pair<ElementId, Position>> KSet::pairs() const {
  std::vector<std::pair<ElementId, Position>> out;
  out.reserve(static_cast<std::size_t>(support_size_));
  for (ElementId e = 0; e < n(); ++e) {
    Position p = assign_[static_cast<std::size_t>(e)];
    if (p != 0) out.emplace_back(e, p);
  }
  return out;
}

std::string KSet::to_string() const {
  std::ostringstream os;
  os << '(';
  bool first = true;
  for (const auto& [e, i] : pairs()) {
    if (!first) os << ", ";
    os << e << ':' << i;
    first = false;
  }
  os << ')';
  return os.str();
}

KSet meet(const KSet& x, const KSet& y) {
  check_same_shape(x, y);
  KSet out(x.n(), x.k());
  for (ElementId e = 0; e < x.n(); ++e) {
    Position p = x.at(e);
    if (p != 0 && p == y.at(e)) out.insert_in_place(e, p);
  }
  return out;
}

KSet join(const KSet& x, const KSet& y) {
  check_same_shape(x, y);
  KSet out(x.n(), x.k());
  for (ElementId e = 0; e < x.n(); ++e) {
    Position p = x.at(e);
    Position q = y.at(e);
    if (p == 0 && q == 0) continue;
    if (p == 0) {
      out.insert_in_place(e, q);
    } else if (q == 0 || q == p) {
      out.insert_in_place(e, p);
    }
    // p != 0, q != 0, p != q: both sides claim e at different positions,
    // so e is excluded from the join.
  }
  return out;
}

bool is_subset(const KSet& x, const KSet& y) {
  check_same_shape(x, y);
  for (ElementId e = 0; e < x.n(); ++e) {
    Position p = x.at(e);
    if (p != 0 && p != y.at(e)) return false;
  }
  return true;
}

}  // namespace ksc
