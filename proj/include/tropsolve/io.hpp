/*
 *   Copyright 2026 The tropsolve Authors
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

/**
 * @file
 *
 * Matrix text format.
 *
 *     # comment to end of line
 *     3 3
 *     1    -inf -inf
 *     3    2    -inf
 *     -inf 0    -1
 *
 * A header with the row and column counts, then rows * cols scalar tokens in
 * row-major order. Line breaks inside the body carry no meaning. Scalars are
 * integers, fractions p/q, or -inf.
 */

#ifndef TROPSOLVE_IO_HPP
#define TROPSOLVE_IO_HPP

#include <string>
#include <string_view>
#include <vector>

#include "tropsolve/linalg.hpp"

namespace tropsolve {

/// Throws ParseError carrying the 1-based line and column of the offending
/// token.
TropMatrix parse_matrix(std::string_view text);

TropMatrix read_matrix_file(const std::string& path);

TropVector parse_vector(const std::vector<std::string>& tokens);

/// Header plus right-aligned rows; parse_matrix(format_matrix(m)) == m.
std::string format_matrix(const TropMatrix& m);

/// Right-aligned rows only, each prefixed by `indent`.
std::string format_rows(const TropMatrix& m, std::string_view indent = "  ");

/// (a, b, c)
std::string format_vector(const TropVector& v);

}  // namespace tropsolve

#endif  // TROPSOLVE_IO_HPP
