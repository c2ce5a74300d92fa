// Copyright 2026 The isored Authors
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

#include <iosfwd>
#include <string>
#include <vector>

#include "isored/graph.hpp"

namespace isored {

/**
 * Entry point behind the `isored` binary, callable in-process for tests.
 * `args` excludes the program name.
 *
 * Exit codes are part of the interface:
 *   0 success / equivalent
 *   1 usage, I/O or parse error
 *   2 reduction degeneracy (a loop weight hit λ)
 *   3 empty rule selection
 *   4 determinant-identity verification failure
 *   5 not equivalent
 */
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// DOT rendering of a graph (undirected inputs use undirected DOT edges);
/// edge labels are canonical weight strings.
std::string export_dot(const Graph& g, const std::string& name);

/// FNV-1a 64-bit content hash used for report provenance, as 16 hex digits.
std::string fnv1a64_hex(std::string_view bytes);

}  // namespace isored
