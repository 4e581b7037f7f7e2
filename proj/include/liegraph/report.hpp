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

#ifndef LIEGRAPH_REPORT_HPP
#define LIEGRAPH_REPORT_HPP

#include <string>

#include "liegraph/json_io.hpp"

namespace liegraph {

/// "Z1", "-Z1", "3 Z1", "Z1 + 2 Z2", "0" for the empty vector.
std::string format_sparse(const SparseVec& v, const std::vector<std::string>& labels);

/// One basis vector of a form as a flat sum of radical-scaled algebra
/// terms, e.g. "sqrt(3) a1 - sqrt(3) a2".
std::string format_form_vector(const QuadraticTower& field, const LVec& v,
                               const std::vector<std::string>& labels);

struct AnalyzeReport {
    Graph graph;
    QuotientGraph quotient;
    std::vector<std::vector<int>> connected;
    std::size_t aut_order = 0;
    std::size_t quotient_aut_order = 0;
    AutDescription description;
    bool transpositions_generate = false;
    RationalFormCount rational_forms = RationalFormCount::one;
    int real_form_count = 0;
};

AnalyzeReport analyze(const Graph& g, const AutSearchOptions& opts);
std::string render_analyze_text(const AnalyzeReport& r);
Json render_analyze_json(const AnalyzeReport& r);

std::string render_algebra_text(const GradedAlgebra& a);

std::string render_form_text(const FormPresentation& f, bool indecomposable,
                             bool real_descending, FormMode mode);
Json render_form_json(const FormPresentation& f, bool indecomposable,
                      bool real_descending);

std::string render_realforms_text(
    const std::vector<std::pair<Perm, FormPresentation>>& forms);
Json render_realforms_json(
    const std::vector<std::pair<Perm, FormPresentation>>& forms);

std::string dot_graph(const Graph& g);
std::string dot_quotient(const QuotientGraph& q, const Graph& g);

}  // namespace liegraph

#endif  // LIEGRAPH_REPORT_HPP
