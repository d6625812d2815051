/* Copyright 2026 The ddm-match Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <iosfwd>
#include <string>

#include "ddm/bit_matrix.hpp"
#include "ddm/core.hpp"

namespace ddm {

// Extent set text format:
//
//   # d=<d>
//   <id>,<kind>,<low_1>,<high_1>,...,<low_d>,<high_d>
//
// kind is S or U. Subscriptions and updates are numbered independently from 1.
// Coordinates are written with enough digits to round-trip exactly.

void write_extents(std::ostream& out, const MatchInstance& inst);
/// Throws std::runtime_error with the offending line number on malformed input.
MatchInstance read_extents(std::istream& in);

void write_extents_file(const std::string& path, const MatchInstance& inst);
MatchInstance read_extents_file(const std::string& path);

// Matrix format: a header line "n m K" followed by one "i,j" line per set
// bit, in lexicographic order.
void write_matrix(std::ostream& out, const IntersectionMatrix& matrix);
IntersectionMatrix read_matrix(std::istream& in);

}  // namespace ddm
