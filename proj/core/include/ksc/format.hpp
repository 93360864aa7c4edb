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

#ifndef KSC_FORMAT_HPP_
#define KSC_FORMAT_HPP_

#include <charconv>
#include <string>

namespace ksc {

// Shortest decimal string that round-trips the double exactly; used for all
// serialized numbers (CSV, instance dumps) so reruns are byte-identical and
// reloads reproduce values bit-for-bit.
inline std::string format_double(double value) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, res.ptr);
}

}  // namespace ksc

#endif  // KSC_FORMAT_HPP_
