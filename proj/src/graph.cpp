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

#include "liegraph/graph.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace liegraph {

Graph::Graph(std::vector<std::string> vertices,
             std::vector<std::pair<int, int>> edges)
    : labels_(std::move(vertices)) {
    const int n = static_cast<int>(labels_.size());
    if (n == 0) throw ValidationError("graph has no vertices");
    for (int v = 0; v < n; ++v) {
        if (!index_.emplace(labels_[v], v).second)
            throw ValidationError("duplicate vertex label '" + labels_[v] + "'");
    }
    adj_.assign(n, std::vector<bool>(n, false));
    std::set<std::pair<int, int>> dedup;
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw ValidationError("edge endpoint out of range");
        if (u == v)
            throw ValidationError("self-loop at vertex '" + labels_[u] + "'");
        dedup.emplace(std::min(u, v), std::max(u, v));
        adj_[u][v] = adj_[v][u] = true;
    }
    edges_.assign(dedup.begin(), dedup.end());
}

int Graph::index_of(const std::string& label) const {
    auto it = index_.find(label);
    if (it == index_.end())
        throw ValidationError("unknown vertex '" + label + "'");
    return it->second;
}

std::vector<int> Graph::open_neighborhood(int v) const {
    if (v < 0 || v >= vertex_count())
        throw ValidationError("vertex index out of range");
    std::vector<int> out;
    for (int u = 0; u < vertex_count(); ++u)
        if (adj_[v][u]) out.push_back(u);
    return out;
}

std::vector<int> Graph::closed_neighborhood(int v) const {
    std::vector<int> out = open_neighborhood(v);
    out.push_back(v);
    std::sort(out.begin(), out.end());
    return out;
}

int Graph::degree(int v) const {
    return static_cast<int>(open_neighborhood(v).size());
}

bool Graph::precedes(int u, int v) const {
    if (u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count())
        throw ValidationError("vertex index out of range");
    for (int w = 0; w < vertex_count(); ++w) {
        if (!adj_[u][w]) continue;
        if (w != v && !adj_[v][w]) return false;
    }
    return true;
}

bool Graph::equivalent(int u, int v) const {
    return precedes(u, v) && precedes(v, u);
}

namespace {

std::vector<std::vector<int>> group_classes(int n, const std::vector<int>& cls) {
    // cls[v] = least vertex of v's class; classes come out sorted by it.
    std::vector<std::vector<int>> out;
    std::vector<int> where(n, -1);
    for (int v = 0; v < n; ++v) {
        if (where[cls[v]] < 0) {
            where[cls[v]] = static_cast<int>(out.size());
            out.emplace_back();
        }
        out[where[cls[v]]].push_back(v);
    }
    return out;
}

}  // namespace

std::vector<std::vector<int>> Graph::coherent_components() const {
    const int n = vertex_count();
    std::vector<int> cls(n);
    for (int v = 0; v < n; ++v) cls[v] = v;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < u; ++v)
            if (cls[u] == u && equivalent(u, v)) cls[u] = cls[v];
    return group_classes(n, cls);
}

std::vector<std::vector<int>> Graph::connected_components() const {
    const int n = vertex_count();
    std::vector<int> cls(n, -1);
    for (int start = 0; start < n; ++start) {
        if (cls[start] >= 0) continue;
        std::vector<int> stack{start};
        cls[start] = start;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int u = 0; u < n; ++u) {
                if (adj_[v][u] && cls[u] < 0) {
                    cls[u] = start;
                    stack.push_back(u);
                }
            }
        }
    }
    return group_classes(n, cls);
}

QuotientGraph::QuotientGraph(const Graph& g) {
    components_ = g.coherent_components();
    component_of_.assign(g.vertex_count(), -1);
    for (int c = 0; c < component_count(); ++c)
        for (int v : components_[c]) component_of_[v] = c;
    for (auto [u, v] : g.edges()) {
        int cu = component_of_[u], cv = component_of_[v];
        edges_.emplace(std::min(cu, cv), std::max(cu, cv));
    }
}

bool QuotientGraph::adjacent(int c, int d) const {
    return edges_.count({std::min(c, d), std::max(c, d)}) > 0;
}

namespace {

void check_label(const std::string& label, int line_no) {
    for (char ch : label) {
        if (ch == '[' || ch == ']' || ch == ',' || ch == '"')
            throw ValidationError("line " + std::to_string(line_no) +
                                  ": vertex label '" + label +
                                  "' contains a reserved character");
    }
}

}  // namespace

Graph parse_graph(const std::string& text) {
    std::vector<std::string> vertices;
    std::map<std::string, int> index;
    std::vector<std::pair<int, int>> edges;

    auto declare = [&](const std::string& label, int line_no) {
        check_label(label, line_no);
        auto it = index.find(label);
        if (it != index.end()) return it->second;
        int id = static_cast<int>(vertices.size());
        vertices.push_back(label);
        index.emplace(label, id);
        return id;
    };

    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        std::istringstream ls(line);
        std::vector<std::string> tokens;
        for (std::string tok; ls >> tok;) tokens.push_back(tok);
        if (tokens.empty()) continue;
        if (tokens[0] == "vertex") {
            if (tokens.size() != 2)
                throw ValidationError("line " + std::to_string(line_no) +
                                      ": expected 'vertex <label>'");
            declare(tokens[1], line_no);
            continue;
        }
        if (tokens.size() != 2)
            throw ValidationError("line " + std::to_string(line_no) +
                                  ": expected two tokens, got " +
                                  std::to_string(tokens.size()));
        if (tokens[0] == tokens[1])
            throw ValidationError("line " + std::to_string(line_no) +
                                  ": self-loop '" + tokens[0] + " " +
                                  tokens[1] + "'");
        int u = declare(tokens[0], line_no);
        int v = declare(tokens[1], line_no);
        edges.emplace_back(u, v);
    }
    if (vertices.empty())
        throw ValidationError("graph document declares no vertices");
    return Graph(std::move(vertices), std::move(edges));
}

}  // namespace liegraph
