// Copyright 2026 The utree Authors
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

#ifndef UTREE_RATIONAL_H_
#define UTREE_RATIONAL_H_

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>

namespace utree {

using Rat = boost::multiprecision::cpp_rational;
using Int = boost::multiprecision::cpp_int;

// Thrown on malformed external input (bad rational strings, bad JSON shapes).
// Distinct from validation failures, which are reported, not thrown.
struct InputError : std::runtime_error {
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// Parses "p/q" or "p" with optional sign. Throws InputError on anything else.
Rat ParseRat(const std::string& s);

// Non-throwing variant.
std::optional<Rat> TryParseRat(const std::string& s);

// "p/q", or just "p" when the denominator is 1.
std::string FormatRat(const Rat& r);

inline double ToDouble(const Rat& r) {
  return static_cast<double>(r);
}

// Cross-multiplied comparison a < b. The library operator< runs a
// continued-fraction loop with repeated integer divisions; with the small
// canonical operands used throughout this codebase two multiplications are
// far cheaper, so hot paths use this instead.
inline bool RatLess(const Rat& a, const Rat& b) {
  return boost::multiprecision::numerator(a) *
             boost::multiprecision::denominator(b) <
         boost::multiprecision::numerator(b) *
             boost::multiprecision::denominator(a);
}

// Depth of a level u in (0,1]: t = -ln u. Display only.
inline double DepthOf(const Rat& level) { return -std::log(ToDouble(level)); }

}  // namespace utree

#endif  // UTREE_RATIONAL_H_
