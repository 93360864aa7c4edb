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

#ifndef KSC_ORACLE_HPP_
#define KSC_ORACLE_HPP_

#include <atomic>
#include <memory>

#include "ksc/kset.hpp"

namespace ksc {

class GainEvaluator;

// Value-oracle access to a set function f over k-sets.
//
// Query accounting: evaluate() is the counted unit — after any sequence of m
// evaluate() calls the counter has advanced by exactly m. Every counted
// marginal computed by a GainEvaluator charges exactly one query through
// count_query(), so "one candidate considered" always equals "one query".
// peek() returns the same value without charging and exists for reporting
// and test fixtures only.
//
// The counter is not part of the logical value state, so all accounting
// methods are const (atomic mutable counter; safe under concurrent
// evaluation, where the final count equals the sequential count).
class ValueOracle {
 public:
  ValueOracle() = default;
  virtual ~ValueOracle() = default;

  // The atomic counter would otherwise delete copy/move for every oracle;
  // copies carry the source's count so accounting stays monotone either way.
  ValueOracle(const ValueOracle& other)
      : count_(other.count_.load(std::memory_order_relaxed)) {}
  ValueOracle& operator=(const ValueOracle& other) {
    count_.store(other.count_.load(std::memory_order_relaxed),
                 std::memory_order_relaxed);
    return *this;
  }

  // f(x), charging one query.
  virtual double evaluate(const KSet& x) const {
    count_query();
    return peek(x);
  }

  // f(x) without accounting.
  virtual double peek(const KSet& x) const = 0;

  virtual long long query_count() const {
    return count_.load(std::memory_order_relaxed);
  }

  virtual void reset_count() const { count_.store(0, std::memory_order_relaxed); }

  // Incremental marginal evaluation anchored at `base` (which must be a
  // k-set of this oracle's shape). The default walks insert()+evaluate();
  // oracles with cheaper structure override it. Building the evaluator does
  // not charge queries.
  virtual std::unique_ptr<GainEvaluator> make_evaluator(const KSet& base) const;

  // Charges one query without evaluating; the hook used by evaluators that
  // compute f-differences directly.
  void count_query() const { count_.fetch_add(1, std::memory_order_relaxed); }

 private:
  mutable std::atomic<long long> count_{0};
};

// Marginal gains against a moving base solution.
//
// gain(e, i) returns f(base + (e, i)) - f(base) and charges exactly one
// query. commit(e, i) moves the base to the inserted k-set without charging
// (bookkeeping over already-queried values).
class GainEvaluator {
 public:
  virtual ~GainEvaluator() = default;

  virtual double gain(ElementId e, Position i) = 0;
  virtual void commit(ElementId e, Position i) = 0;

  virtual double base_value() const = 0;
  virtual const KSet& base() const = 0;
};

// Delta_{(e,i)} f(x) = f(x + (e,i)) - base_value, charging one query.
// base_value must be the caller's cached f(x) so a candidate costs one query,
// not two.
double marginal_gain(const ValueOracle& oracle, const KSet& x,
                     double base_value, ElementId e, Position i);

// f truncated at cap T/2: g(x) = min(f(x), T/2).
//
// Truncation preserves monotone k-submodularity, and every truncated
// evaluation costs exactly one raw query — the counter *is* the inner
// oracle's counter.
class TruncatedOracle final : public ValueOracle {
 public:
  // threshold is the cover target T; the cap is T/2. T <= 0 is rejected.
  TruncatedOracle(const ValueOracle& inner, double threshold);

  double cap() const { return cap_; }
  const ValueOracle& inner() const { return inner_; }

  double evaluate(const KSet& x) const override;
  double peek(const KSet& x) const override;
  long long query_count() const override { return inner_.query_count(); }
  void reset_count() const override { inner_.reset_count(); }
  std::unique_ptr<GainEvaluator> make_evaluator(const KSet& base) const override;

 private:
  const ValueOracle& inner_;
  double cap_;
};

inline TruncatedOracle truncate(const ValueOracle& oracle, double threshold) {
  return TruncatedOracle(oracle, threshold);
}

// f(x) = |supp(x)|^2: monotone and normalized but *not* k-submodular (the
// pair inequality fails already at two disjoint singletons). Used to check
// that the property verifiers actually reject broken oracles.
class SupportSquaredOracle final : public ValueOracle {
 public:
  SupportSquaredOracle(int n, int k) : n_(n), k_(k) {}

  int n() const { return n_; }
  int k() const { return k_; }

  double peek(const KSet& x) const override {
    double s = static_cast<double>(x.support_size());
    return s * s;
  }

 private:
  int n_;
  int k_;
};

}  // namespace ksc

#endif  // KSC_ORACLE_HPP_
