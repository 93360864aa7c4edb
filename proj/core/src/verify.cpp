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

#include "ksc/verify.hpp"

#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ksc/format.hpp"

namespace ksc {

namespace {

// (k+1)^n, guarded against overflow far above any permitted size.
long long state_count(int n, int k) {
  long long total = 1;
  for (int e = 0; e < n; ++e) {
    if (total > (1LL << 40)) return 1LL << 40;
    total *= k + 1;
  }
  return total;
}

void check_shape(int n, int k) {
  if (n < 1 || k < 2) {
    throw std::invalid_argument("property check requires n >= 1, k >= 2");
  }
}

void check_exhaustive_guard(int n, int k, bool allow_large) {
  if (!allow_large && state_count(n, k) > kExhaustiveGuard) {
    throw std::domain_error(
        "exhaustive check refused: (k+1)^n = " +
        std::to_string(state_count(n, k)) + " exceeds " +
        std::to_string(kExhaustiveGuard) +
        " (pass allow_large to override)");
  }
}

// Decodes a base-(k+1) state index (element 0 = least significant digit).
KSet decode(long long index, int n, int k) {
  KSet x(n, k);
  for (ElementId e = 0; e < n; ++e) {
    Position p = static_cast<Position>(index % (k + 1));
    index /= k + 1;
    if (p != 0) x.insert_in_place(e, p);
  }
  return x;
}

std::vector<Position> decode_digits(long long index, int n, int k) {
  std::vector<Position> digits(static_cast<std::size_t>(n));
  for (int e = 0; e < n; ++e) {
    digits[static_cast<std::size_t>(e)] = static_cast<Position>(index % (k + 1));
    index /= k + 1;
  }
  return digits;
}

long long encode(const KSet& x) {
  long long index = 0;
  long long place = 1;
  for (ElementId e = 0; e < x.n(); ++e) {
    index += place * x.at(e);
    place *= x.k() + 1;
  }
  return index;
}

// All f values indexed by state; (k+1)^n evaluate() calls.
std::vector<double> value_table(const ValueOracle& oracle, int n, int k) {
  const long long total = state_count(n, k);
  std::vector<double> table(static_cast<std::size_t>(total));
  for (long long ix = 0; ix < total; ++ix) {
    table[static_cast<std::size_t>(ix)] = oracle.evaluate(decode(ix, n, k));
  }
  return table;
}

void add_witness(PropertyReport& report, std::string context, double lhs,
                 double rhs) {
  ++report.violation_count;
  if (report.witnesses.size() < kMaxWitnesses) {
    report.witnesses.push_back(Witness{std::move(context), lhs, rhs});
  }
}

KSet random_kset(int n, int k, RngStream& rng) {
  KSet x(n, k);
  for (ElementId e = 0; e < n; ++e) {
    Position p = static_cast<Position>(
        rng.uniform_below(static_cast<std::uint64_t>(k + 1)));
    if (p != 0) x.insert_in_place(e, p);
  }
  return x;
}

// Random k-set with at least one unassigned element.
KSet random_nonfull_kset(int n, int k, RngStream& rng) {
  while (true) {
    KSet x = random_kset(n, k, rng);
    if (x.support_size() < n) return x;
  }
}

ElementId random_unassigned(const KSet& x, RngStream& rng) {
  auto pool = x.unassigned_elements();
  return pool[static_cast<std::size_t>(
      rng.uniform_below(static_cast<std::uint64_t>(pool.size())))];
}

std::string marginal_context(const KSet& x, ElementId e, Position i) {
  return "x=" + x.to_string() + ", e=" + std::to_string(e) +
         ", i=" + std::to_string(i);
}

}  // namespace

std::string to_string(CheckMode mode) {
  return mode == CheckMode::exhaustive ? "exhaustive" : "randomized";
}

PropertyReport check_ksubmodular(const ValueOracle& oracle, int n, int k,
                                 CheckMode mode, long long budget,
                                 RngStream& rng, bool allow_large) {
  check_shape(n, k);
  PropertyReport report{.property = "ksubmodular", .mode = mode};
  if (mode == CheckMode::exhaustive) {
    check_exhaustive_guard(n, k, allow_large);
    const long long total = state_count(n, k);
    const std::vector<double> table = value_table(oracle, n, k);
    for (long long ix = 0; ix < total; ++ix) {
      const KSet x = decode(ix, n, k);
      for (long long iy = 0; iy < total; ++iy) {
        const KSet y = decode(iy, n, k);
        const double lhs = table[static_cast<std::size_t>(ix)] +
                           table[static_cast<std::size_t>(iy)];
        const double rhs = table[static_cast<std::size_t>(encode(meet(x, y)))] +
                           table[static_cast<std::size_t>(encode(join(x, y)))];
        ++report.cases_checked;
        if (lhs < rhs - kPropertyTolerance) {
          add_witness(report, "x=" + x.to_string() + ", y=" + y.to_string(),
                      lhs, rhs);
        }
      }
    }
  } else {
    for (long long c = 0; c < budget; ++c) {
      const KSet x = random_kset(n, k, rng);
      const KSet y = random_kset(n, k, rng);
      const double lhs = oracle.evaluate(x) + oracle.evaluate(y);
      const double rhs =
          oracle.evaluate(meet(x, y)) + oracle.evaluate(join(x, y));
      ++report.cases_checked;
      if (lhs < rhs - kPropertyTolerance) {
        add_witness(report, "x=" + x.to_string() + ", y=" + y.to_string(), lhs,
                    rhs);
      }
    }
  }
  return report;
}

PropertyReport check_orthant_submodular(const ValueOracle& oracle, int n,
                                        int k, CheckMode mode,
                                        long long budget, RngStream& rng,
                                        bool allow_large) {
  check_shape(n, k);
  PropertyReport report{.property = "orthant", .mode = mode};
  if (mode == CheckMode::exhaustive) {
    check_exhaustive_guard(n, k, allow_large);
    const long long total = state_count(n, k);
    const std::vector<double> table = value_table(oracle, n, k);
    std::vector<long long> place(static_cast<std::size_t>(n));
    long long powv = 1;
    for (int e = 0; e < n; ++e) {
      place[static_cast<std::size_t>(e)] = powv;
      powv *= k + 1;
    }
    for (long long iy = 0; iy < total; ++iy) {
      const auto y_digits = decode_digits(iy, n, k);
      std::vector<ElementId> supp, unassigned;
      for (ElementId e = 0; e < n; ++e) {
        (y_digits[static_cast<std::size_t>(e)] != 0 ? supp : unassigned)
            .push_back(e);
      }
      const int m = static_cast<int>(supp.size());
      for (long long mask = 0; mask < (1LL << m); ++mask) {
        // x keeps exactly the masked-in assigned elements of y, so x <= y.
        long long ix = 0;
        for (int b = 0; b < m; ++b) {
          if (mask & (1LL << b)) {
            const ElementId e = supp[static_cast<std::size_t>(b)];
            ix += place[static_cast<std::size_t>(e)] *
                  y_digits[static_cast<std::size_t>(e)];
          }
        }
        for (ElementId e : unassigned) {
          for (Position i = 1; i <= k; ++i) {
            const long long step = place[static_cast<std::size_t>(e)] * i;
            const double gain_x = table[static_cast<std::size_t>(ix + step)] -
                                  table[static_cast<std::size_t>(ix)];
            const double gain_y = table[static_cast<std::size_t>(iy + step)] -
                                  table[static_cast<std::size_t>(iy)];
            ++report.cases_checked;
            if (gain_x < gain_y - kPropertyTolerance) {
              add_witness(report,
                          "x=" + decode(ix, n, k).to_string() +
                              ", y=" + decode(iy, n, k).to_string() +
                              ", e=" + std::to_string(e) +
                              ", i=" + std::to_string(i),
                          gain_x, gain_y);
            }
          }
        }
      }
    }
  } else {
    for (long long c = 0; c < budget; ++c) {
      const KSet y = random_nonfull_kset(n, k, rng);
      KSet x(n, k);
      for (ElementId e = 0; e < n; ++e) {
        const Position p = y.at(e);
        if (p != 0 && rng.uniform_below(2) == 1) x.insert_in_place(e, p);
      }
      const ElementId e = random_unassigned(y, rng);
      const Position i =
          1 + static_cast<Position>(rng.uniform_below(static_cast<std::uint64_t>(k)));
      const double gain_x = oracle.evaluate(x.insert(e, i)) - oracle.evaluate(x);
      const double gain_y = oracle.evaluate(y.insert(e, i)) - oracle.evaluate(y);
      ++report.cases_checked;
      if (gain_x < gain_y - kPropertyTolerance) {
        add_witness(report,
                    "x=" + x.to_string() + ", y=" + y.to_string() +
                        ", e=" + std::to_string(e) + ", i=" + std::to_string(i),
                    gain_x, gain_y);
      }
    }
  }
  return report;
}

PropertyReport check_pairwise_monotone(const ValueOracle& oracle, int n,
                                       int k, CheckMode mode, long long budget,
                                       RngStream& rng, bool allow_large) {
  check_shape(n, k);
  PropertyReport report{.property = "pairwise", .mode = mode};
  if (mode == CheckMode::exhaustive) {
    check_exhaustive_guard(n, k, allow_large);
    const long long total = state_count(n, k);
    const std::vector<double> table = value_table(oracle, n, k);
    std::vector<long long> place(static_cast<std::size_t>(n));
    long long powv = 1;
    for (int e = 0; e < n; ++e) {
      place[static_cast<std::size_t>(e)] = powv;
      powv *= k + 1;
    }
    for (long long ix = 0; ix < total; ++ix) {
      const auto digits = decode_digits(ix, n, k);
      for (ElementId e = 0; e < n; ++e) {
        if (digits[static_cast<std::size_t>(e)] != 0) continue;
        for (Position i = 1; i <= k; ++i) {
          for (Position j = i + 1; j <= k; ++j) {
            const double gain_i =
                table[static_cast<std::size_t>(ix + place[e] * i)] -
                table[static_cast<std::size_t>(ix)];
            const double gain_j =
                table[static_cast<std::size_t>(ix + place[e] * j)] -
                table[static_cast<std::size_t>(ix)];
            ++report.cases_checked;
            if (gain_i + gain_j < -kPropertyTolerance) {
              add_witness(report,
                          "x=" + decode(ix, n, k).to_string() +
                              ", e=" + std::to_string(e) +
                              ", i=" + std::to_string(i) +
                              ", j=" + std::to_string(j),
                          gain_i + gain_j, 0.0);
            }
          }
        }
      }
    }
  } else {
    for (long long c = 0; c < budget; ++c) {
      const KSet x = random_nonfull_kset(n, k, rng);
      const ElementId e = random_unassigned(x, rng);
      const Position i =
          1 + static_cast<Position>(rng.uniform_below(static_cast<std::uint64_t>(k)));
      Position j = i;
      while (j == i) {
        j = 1 + static_cast<Position>(
                    rng.uniform_below(static_cast<std::uint64_t>(k)));
      }
      const double base = oracle.evaluate(x);
      const double gain_i = oracle.evaluate(x.insert(e, i)) - base;
      const double gain_j = oracle.evaluate(x.insert(e, j)) - base;
      ++report.cases_checked;
      if (gain_i + gain_j < -kPropertyTolerance) {
        add_witness(report,
                    "x=" + x.to_string() + ", e=" + std::to_string(e) +
                        ", i=" + std::to_string(i) + ", j=" + std::to_string(j),
                    gain_i + gain_j, 0.0);
      }
    }
  }
  return report;
}

PropertyReport check_monotone(const ValueOracle& oracle, int n, int k,
                              CheckMode mode, long long budget, RngStream& rng,
                              bool allow_large) {
  check_shape(n, k);
  PropertyReport report{.property = "monotone", .mode = mode};
  if (mode == CheckMode::exhaustive) {
    check_exhaustive_guard(n, k, allow_large);
    const long long total = state_count(n, k);
    const std::vector<double> table = value_table(oracle, n, k);
    std::vector<long long> place(static_cast<std::size_t>(n));
    long long powv = 1;
    for (int e = 0; e < n; ++e) {
      place[static_cast<std::size_t>(e)] = powv;
      powv *= k + 1;
    }
    for (long long ix = 0; ix < total; ++ix) {
      const auto digits = decode_digits(ix, n, k);
      for (ElementId e = 0; e < n; ++e) {
        if (digits[static_cast<std::size_t>(e)] != 0) continue;
        for (Position i = 1; i <= k; ++i) {
          const double gain = table[static_cast<std::size_t>(ix + place[e] * i)] -
                              table[static_cast<std::size_t>(ix)];
          ++report.cases_checked;
          if (gain < -kPropertyTolerance) {
            add_witness(report, marginal_context(decode(ix, n, k), e, i), gain,
                        0.0);
          }
        }
      }
    }
  } else {
    for (long long c = 0; c < budget; ++c) {
      const KSet x = random_nonfull_kset(n, k, rng);
      const ElementId e = random_unassigned(x, rng);
      const Position i =
          1 + static_cast<Position>(rng.uniform_below(static_cast<std::uint64_t>(k)));
      const double gain = oracle.evaluate(x.insert(e, i)) - oracle.evaluate(x);
      ++report.cases_checked;
      if (gain < -kPropertyTolerance) {
        add_witness(report, marginal_context(x, e, i), gain, 0.0);
      }
    }
  }
  return report;
}

PropertyReport check_normalized(const ValueOracle& oracle, int n, int k) {
  check_shape(n, k);
  PropertyReport report{.property = "normalized", .mode = CheckMode::exhaustive};
  const double value = oracle.evaluate(KSet(n, k));
  report.cases_checked = 1;
  if (value < -kPropertyTolerance || value > kPropertyTolerance) {
    add_witness(report, "x=()", value, 0.0);
  }
  return report;
}

std::string render_report_table(const std::vector<PropertyReport>& reports) {
  std::ostringstream os;
  os << std::left << std::setw(14) << "property" << std::setw(12) << "mode"
     << std::right << std::setw(14) << "cases" << std::setw(12) << "violations"
     << "  verdict\n";
  for (const auto& r : reports) {
    os << std::left << std::setw(14) << r.property << std::setw(12)
       << to_string(r.mode) << std::right << std::setw(14) << r.cases_checked
       << std::setw(12) << r.violation_count << "  "
       << (r.passed() ? "PASS" : "FAIL") << "\n";
    for (const auto& w : r.witnesses) {
      os << "    witness: " << w.context << "  lhs=" << format_double(w.lhs)
         << " rhs=" << format_double(w.rhs) << "\n";
    }
  }
  return os.str();
}

namespace {

std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

}  // namespace

std::string render_report_jsonl(const std::vector<PropertyReport>& reports) {
  std::ostringstream os;
  for (const auto& r : reports) {
    os << "{\"property\":\"" << r.property << "\",\"mode\":\""
       << to_string(r.mode) << "\",\"cases\":" << r.cases_checked
       << ",\"violations\":" << r.violation_count
       << ",\"passed\":" << (r.passed() ? "true" : "false")
       << ",\"witnesses\":[";
    for (std::size_t w = 0; w < r.witnesses.size(); ++w) {
      if (w > 0) os << ",";
      os << "{\"context\":\"" << json_escape(r.witnesses[w].context)
         << "\",\"lhs\":" << format_double(r.witnesses[w].lhs)
         << ",\"rhs\":" << format_double(r.witnesses[w].rhs) << "}";
    }
    os << "]}\n";
  }
  return os.str();
}

}  // namespace ksc
