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

#pragma once

#include <string>
#include <string_view>

#include "cflat/matroid.hpp"
#include "cflat/poset.hpp"
#include "cflat/tutte.hpp"

namespace cflat {

// Documents:
//   matroid:    {"ground": [...], "cyclic_flats": [{"set": [...], "rank": n}, ...]}
//   lattice:    {"elements": [...], "covers": [["lower", "upper"], ...]}
//   polynomial: {"terms": [{"x": p, "y": q, "c": n}, ...]}
// Parsers throw kParseError with a line (syntax) or field path (schema) in
// the message, and pass through kUnknownLabel, kDuplicateLabel and
// kDuplicateSet from the ground set and family. `source` prefixes messages.

RankedFamily parse_matroid(std::string_view text, const std::string& source = "<input>");
RankedFamily read_matroid_file(const std::string& path);
// Canonical form: ground in order, flats in canonical order, members of each
// set in ground order, one flat per line.
std::string emit_matroid(const RankedFamily& family);
inline std::string emit_matroid(const Matroid& m) { return emit_matroid(m.family()); }

FiniteLattice parse_lattice(std::string_view text, const std::string& source = "<input>");
FiniteLattice read_lattice_file(const std::string& path);
std::string emit_lattice(const FiniteLattice& lattice);

Poly2 parse_polynomial(std::string_view text, const std::string& source = "<input>");
std::string emit_polynomial(const Poly2& p);

// ["a", "b"] in ground order.
std::string emit_set(const GroundSet& ground, Subset s);

// Reads a whole file; throws kParseError when it cannot be opened.
std::string read_text_file(const std::string& path);

}  // namespace cflat
