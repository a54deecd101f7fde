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

#include "utree/rational.hpp"

#include <cctype>

namespace utree {

namespace {

bool IsInteger(const std::string& s) {
  if (s.empty()) return false;
  size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

std::optional<Rat> TryParseRat(const std::string& s) {
  const size_t slash = s.find('/');
  if (slash == std::string::npos) {
    if (!IsInteger(s)) return std::nullopt;
    return Rat(Int(s));
  }
  const std::string num = s.substr(0, slash);
  const std::string den = s.substr(slash + 1);
  if (!IsInteger(num) || !IsInteger(den)) return std::nullopt;
  Int d(den);
  if (d == 0) return std::nullopt;
  return Rat(Int(num), d);
}

Rat ParseRat(const std::string& s) {
  auto r = TryParseRat(s);
  if (!r) throw InputError("not a rational: '" + s + "'");
  return *r;
}

std::string FormatRat(const Rat& r) {
  const Int num = numerator(r);
  const Int den = denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

}  // namespace utree
