/* Copyright 2026 The liegraph authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */

#ifndef LIEGRAPH_CHECKS_HPP
#define LIEGRAPH_CHECKS_HPP

#include "liegraph/json_io.hpp"

namespace liegraph {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;  // empty when passed
};

/// Named invariants of a built algebra and its graph: Jacobi and
/// antisymmetry, grading, nilpotency step, centre projection, splitting
/// properties, automorphism order product, JSON round trips.
std::vector<CheckResult> run_graph_checks(const Graph& g, int c,
                                          const AutSearchOptions& aopts = {},
                                          const BuildOptions& bopts = {});

/// Invariants checkable from an exported structure-constant table alone.
std::vector<CheckResult> run_table_checks(const AlgebraTable& t);

/// Jacobi identity over the table for every index triple; the violating
/// triple is reported in `detail`.
CheckResult check_table_jacobi(const AlgebraTable& t);

}  // namespace liegraph

#endif  // LIEGRAPH_CHECKS_HPP
