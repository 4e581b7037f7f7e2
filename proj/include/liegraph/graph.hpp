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

#ifndef LIEGRAPH_GRAPH_HPP
#define LIEGRAPH_GRAPH_HPP

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "liegraph/common.hpp"

namespace liegraph {

/// Simple undirected graph with a fixed vertex order.  The order is frozen
/// at construction and determines every basis ordering downstream, so two
/// graphs with the same edges but different vertex orders are distinct
/// objects on purpose.  Immutable after construction.
class Graph {
public:
    Graph(std::vector<std::string> vertices,
          std::vector<std::pair<int, int>> edges);

    int vertex_count() const { return static_cast<int>(labels_.size()); }
    const std::vector<std::string>& vertices() const { return labels_; }
    const std::string& label(int v) const { return labels_.at(v); }
    /// Throws ValidationError for an unknown label.
    int index_of(const std::string& label) const;

    bool adjacent(int u, int v) const { return adj_[u][v]; }
    /// Edges as index pairs u < v, sorted.
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    std::vector<int> open_neighborhood(int v) const;
    std::vector<int> closed_neighborhood(int v) const;
    int degree(int v) const;

    /// u is dominated by v: every neighbour of u lies in the closed
    /// neighbourhood of v.  Reflexive.
    bool precedes(int u, int v) const;
    /// Domination both ways; equivalently, swapping u and v is a graph
    /// automorphism.
    bool equivalent(int u, int v) const;

    /// Equivalence classes of `equivalent`, each sorted by vertex order,
    /// classes ordered by least member.
    std::vector<std::vector<int>> coherent_components() const;
    /// Ordinary connectivity classes, same ordering conventions.
    std::vector<std::vector<int>> connected_components() const;

private:
    std::vector<std::string> labels_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<bool>> adj_;
    std::map<std::string, int> index_;
};

/// Vertex-weighted graph with loops on the coherent components of a source
/// graph.  Component order (least contained vertex) and the order of
/// vertices inside each component fix the lift of quotient automorphisms.
class QuotientGraph {
public:
    explicit QuotientGraph(const Graph& g);

    int component_count() const { return static_cast<int>(components_.size()); }
    const std::vector<std::vector<int>>& components() const { return components_; }
    int weight(int c) const { return static_cast<int>(components_.at(c).size()); }
    bool has_loop(int c) const { return edges_.count({c, c}) > 0; }
    bool adjacent(int c, int d) const;
    /// Component index pairs c <= d; a pair (c, c) is a loop.
    const std::set<std::pair<int, int>>& edges() const { return edges_; }
    int component_of(int vertex) const { return component_of_.at(vertex); }
    int source_vertex_count() const { return static_cast<int>(component_of_.size()); }

private:
    std::vector<std::vector<int>> components_;
    std::set<std::pair<int, int>> edges_;
    std::vector<int> component_of_;
};

/// Parses the edge-list format: one "u v" edge or "vertex u" declaration per
/// line, '#' comments.  Vertices appear in first-use order.
Graph parse_graph(const std::string& text);

inline QuotientGraph quotient_graph(const Graph& g) { return QuotientGraph(g); }

}  // namespace liegraph

#endif  // LIEGRAPH_GRAPH_HPP
