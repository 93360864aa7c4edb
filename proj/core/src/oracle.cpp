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

#include "ksc/oracle.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace ksc {

namespace {

// Fallback evaluator: one insert()+evaluate() per gain, one uncounted peek
// per commit.
class GenericGainEvaluator final : public GainEvaluator {
 public:
  GenericGainEvaluator(const ValueOracle& oracle, KSet base)
      : oracle_(oracle), base_(std::move(base)), value_(oracle.peek(base_)) {}

  double gain(ElementId e, Position i) override {
    return oracle_.evaluate(base_.insert(e, i)) - value_;
  }

  void commit(ElementId e, Position i) override {
    base_.insert_in_place(e, i);
    value_ = oracle_.peek(base_);
  }

  double base_value() const override { return value_; }
  const KSet& base() const override { return base_; }

 private:
  const ValueOracle& oracle_;
  KSet base_;
  double value_;
};

// Caps an inner evaluator's raw values at `cap`. Each gain() delegates to the
// inner evaluator, which charges the (single) raw query.
class TruncatedGainEvaluator final : public GainEvaluator {
 public:
  TruncatedGainEvaluator(std::unique_ptr<GainEvaluator> inner, double cap)
      : inner_(std::move(inner)), cap_(cap) {}

  double gain(ElementId e, Position i) override {
    const double raw_base = inner_->base_value();
    const double raw_gain = inner_->gain(e, i);
    return std::min(raw_base + raw_gain, cap_) - std::min(raw_base, cap_);
  }

  void commit(ElementId e, Position i) override { inner_->commit(e, i); }

  double base_value() const override {
    return std::min(inner_->base_value(), cap_);
  }

  const KSet& base() const override { return inner_->base(); }

 private:
  std::unique_ptr<GainEvaluator> inner_;
  double cap_;
};

}  // namespace

std::unique_ptr<GainEvaluator> ValueOracle::make_evaluator(
    const KSet& base) const {
  return std::make_unique<GenericGainEvaluator>(*this, base);
}

double marginal_gain(const ValueOracle& oracle, const KSet& x,
                     double base_value, ElementId e, Position i) {
  return oracle.evaluate(x.insert(e, i)) - base_value;
}

TruncatedOracle::TruncatedOracle(const ValueOracle& inner, double threshold)
    : inner_(inner), cap_(threshold / 2.0) {
  if (!(threshold > 0.0)) {
    throw std::invalid_argument("truncation threshold must be > 0, got " +
                                std::to_string(threshold));
  }
}

double TruncatedOracle::evaluate(const KSet& x) const {
  return std::min(inner_.evaluate(x), cap_);
}

double TruncatedOracle::peek(const KSet& x) const {
  return std::min(inner_.peek(x), cap_);
}

std::unique_ptr<GainEvaluator> TruncatedOracle::make_evaluator(
    const KSet& base) const {
  return std::make_unique<TruncatedGainEvaluator>(inner_.make_evaluator(base),
                                                  cap_);
}

}  // namespace ksc
