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

#ifndef LIEGRAPH_JSON_IO_HPP
#define LIEGRAPH_JSON_IO_HPP

#include <json.hpp>

#include "liegraph/descent.hpp"

namespace liegraph {

/// Insertion-ordered JSON keeps every export byte-stable.
using Json = nlohmann::ordered_json;

Json graph_to_json(const Graph& g);
Graph graph_from_json(const Json& j);

Json quotient_to_json(const QuotientGraph& q, const Graph& g);
Json group_to_json(const FiniteGroup& g);
Json aut_description_to_json(const AutDescription& d, const Graph& g);

/// Basis labels and structure constants of a graded algebra, detached from
/// the construction; the JSON-facing view used by export, import and the
/// table-level checks.
struct AlgebraTable {
    std::vector<std::vector<std::string>> basis;  // labels per degree
    std::map<std::pair<int, int>, SparseVec> brackets;

    int dim() const;
    int degree_of(int index) const;  // 1-based degree from the layout
    bool operator==(const AlgebraTable&) const = default;
};

AlgebraTable algebra_table(const GradedAlgebra& a);
Json algebra_to_json(const AlgebraTable& t);
AlgebraTable algebra_from_json(const Json& j);

Json form_to_json(const FormPresentation& f);
FormPresentation form_from_json(const Json& j);
bool forms_equal(const FormPresentation& a, const FormPresentation& b);

}  // namespace liegraph

#endif  // LIEGRAPH_JSON_IO_HPP
