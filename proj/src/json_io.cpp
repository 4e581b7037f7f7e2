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

#include "liegraph/json_io.hpp"

#include <algorithm>

namespace liegraph {

namespace {

[[noreturn]] void bad(const std::string& what) {
    throw ValidationError("malformed JSON document: " + what);
}

const Json& field_of(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) bad(std::string("missing key '") + key + "'");
    return j.at(key);
}

}  // namespace

Json graph_to_json(const Graph& g) {
    Json j;
    j["vertices"] = g.vertices();
    Json edges = Json::array();
    for (auto [u, v] : g.edges())
        edges.push_back(Json::array({g.label(u), g.label(v)}));
    j["edges"] = std::move(edges);
    return j;
}

Graph graph_from_json(const Json& j) {
    const Json& verts = field_of(j, "vertices");
    if (!verts.is_array()) bad("'vertices' is not an array");
    std::vector<std::string> labels;
    for (const Json& v : verts) labels.push_back(v.get<std::string>());
    Graph probe(labels, {});
    std::vector<std::pair<int, int>> edges;
    for (const Json& e : field_of(j, "edges")) {
        if (!e.is_array() || e.size() != 2) bad("edge is not a pair");
        edges.emplace_back(probe.index_of(e[0].get<std::string>()),
                           probe.index_of(e[1].get<std::string>()));
    }
    return Graph(std::move(labels), std::move(edges));
}

Json quotient_to_json(const QuotientGraph& q, const Graph& g) {
    Json j;
    Json comps = Json::array();
    for (const auto& comp : q.components()) {
        Json c = Json::array();
        for (int v : comp) c.push_back(g.label(v));
        comps.push_back(std::move(c));
    }
    j["components"] = std::move(comps);
    Json edges = Json::array();
    for (auto [c, d] : q.edges())
        if (c != d) edges.push_back(Json::array({c, d}));
    j["edges"] = std::move(edges);
    Json weights = Json::array();
    for (int c = 0; c < q.component_count(); ++c) weights.push_back(q.weight(c));
    j["weights"] = std::move(weights);
    Json loops = Json::array();
    for (int c = 0; c < q.component_count(); ++c)
        if (q.has_loop(c)) loops.push_back(c);
    j["loops"] = std::move(loops);
    return j;
}

Json group_to_json(const FiniteGroup& g) {
    Json j;
    j["degree"] = g.degree();
    j["order"] = g.order();
    Json elems = Json::array();
    for (const Perm& p : g.elements()) elems.push_back(p);
    j["elements"] = std::move(elems);
    return j;
}

Json aut_description_to_json(const AutDescription& d, const Graph& g) {
    Json j;
    Json pairs = Json::array();
    for (auto [u, v] : d.m_pairs)
        pairs.push_back(Json::array({g.label(u), g.label(v)}));
    j["m_pairs"] = std::move(pairs);
    j["gl_blocks"] = d.gl_block_sizes;
    j["dim_reductive"] = d.dim_reductive;
    j["dim_unipotent"] = d.dim_unipotent;
    j["component_group"] = group_to_json(d.component_group);
    return j;
}

int AlgebraTable::dim() const {
    int n = 0;
    for (const auto& deg : basis) n += static_cast<int>(deg.size());
    return n;
}

int AlgebraTable::degree_of(int index) const {
    int d = 1;
    for (const auto& deg : basis) {
        if (index < static_cast<int>(deg.size())) return d;
        index -= static_cast<int>(deg.size());
        ++d;
    }
    throw ValidationError("basis index out of range");
}

AlgebraTable algebra_table(const GradedAlgebra& a) {
    AlgebraTable t;
    t.basis.resize(a.nil_class());
    for (int i = 0; i < a.dim(); ++i)
        t.basis[a.degree_of(i) - 1].push_back(a.label(i));
    for (int i = 0; i < a.dim(); ++i)
        for (int j = i + 1; j < a.dim(); ++j)
            if (a.degree_of(i) + a.degree_of(j) <= a.nil_class() &&
                !a.structure(i, j).empty())
                t.brackets[{i, j}] = a.structure(i, j);
    return t;
}

namespace {

Json sparse_to_json(const SparseVec& v) {
    Json out = Json::object();
    for (const auto& [idx, coef] : v)
        out[std::to_string(idx)] = rational_string(coef);
    return out;
}

SparseVec sparse_from_json(const Json& j, int dim) {
    if (!j.is_object()) bad("'coeffs' is not an object");
    SparseVec out;
    for (auto it = j.begin(); it != j.end(); ++it) {
        int idx = -1;
        try {
            idx = std::stoi(it.key());
        } catch (const std::exception&) {
            bad("coefficient key '" + it.key() + "' is not an index");
        }
        if (idx < 0 || idx >= dim) bad("coefficient index out of range");
        out.emplace_back(idx, parse_rational(it.value().get<std::string>()));
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

}  // namespace

Json algebra_to_json(const AlgebraTable& t) {
    Json j;
    j["basis"] = t.basis;
    Json brackets = Json::array();
    for (const auto& [pair, coeffs] : t.brackets) {
        Json row;
        row["i"] = pair.first;
        row["j"] = pair.second;
        row["coeffs"] = sparse_to_json(coeffs);
        brackets.push_back(std::move(row));
    }
    j["brackets"] = std::move(brackets);
    return j;
}

AlgebraTable algebra_from_json(const Json& j) {
    AlgebraTable t;
    const Json& basis = field_of(j, "basis");
    if (!basis.is_array() || basis.empty()) bad("'basis' is not a nonempty array");
    for (const Json& deg : basis) {
        std::vector<std::string> labels;
        for (const Json& l : deg) labels.push_back(l.get<std::string>());
        t.basis.push_back(std::move(labels));
    }
    const int n = t.dim();
    for (const Json& row : field_of(j, "brackets")) {
        int i = field_of(row, "i").get<int>();
        int jj = field_of(row, "j").get<int>();
        if (i < 0 || jj < 0 || i >= n || jj >= n || i >= jj)
            bad("bracket indices must satisfy 0 <= i < j < dim");
        t.brackets[{i, jj}] = sparse_from_json(field_of(row, "coeffs"), n);
    }
    return t;
}

Json form_to_json(const FormPresentation& f) {
    QuadraticTower field{f.radicands};
    Json j;
    j["field"] = f.radicands;
    Json images = Json::array();
    for (const Perm& p : f.images) images.push_back(p);
    j["images"] = std::move(images);
    j["class"] = f.nil_class;
    j["algebra_basis"] = f.algebra_labels;
    j["labels"] = f.labels;
    j["degrees"] = f.degrees;
    Json basis = Json::array();
    for (const LVec& v : f.basis) {
        Json vec = Json::object();
        for (int r = 0; r < v.rows(); ++r) {
            Json coords = Json::object();
            for (int mask = 0; mask < v.cols(); ++mask)
                if (v(r, mask) != 0)
                    coords[std::to_string(field.radical(mask))] =
                        rational_string(v(r, mask));
            if (!coords.empty()) vec[f.algebra_labels.at(r)] = std::move(coords);
        }
        basis.push_back(std::move(vec));
    }
    j["basis"] = std::move(basis);
    Json brackets = Json::array();
    for (const auto& [pair, coeffs] : f.table) {
        Json row;
        row["i"] = pair.first;
        row["j"] = pair.second;
        row["coeffs"] = sparse_to_json(coeffs);
        brackets.push_back(std::move(row));
    }
    j["brackets"] = std::move(brackets);
    return j;
}

FormPresentation form_from_json(const Json& j) {
    FormPresentation f;
    for (const Json& d : field_of(j, "field")) f.radicands.push_back(d.get<long long>());
    QuadraticTower field{f.radicands};
    std::map<long long, int> mask_of;
    for (int mask = 0; mask < field.basis_size(); ++mask)
        mask_of[field.radical(mask)] = mask;
    for (const Json& p : field_of(j, "images")) f.images.push_back(p.get<Perm>());
    f.nil_class = field_of(j, "class").get<int>();
    for (const Json& l : field_of(j, "algebra_basis"))
        f.algebra_labels.push_back(l.get<std::string>());
    for (const Json& l : field_of(j, "labels")) f.labels.push_back(l.get<std::string>());
    for (const Json& d : field_of(j, "degrees")) f.degrees.push_back(d.get<int>());
    std::map<std::string, int> row_of;
    for (std::size_t r = 0; r < f.algebra_labels.size(); ++r)
        row_of[f.algebra_labels[r]] = static_cast<int>(r);
    for (const Json& vec : field_of(j, "basis")) {
        LVec v = MatQ::Zero(static_cast<int>(f.algebra_labels.size()), field.basis_size());
        if (!vec.is_object()) bad("basis vector is not an object");
        for (auto it = vec.begin(); it != vec.end(); ++it) {
            auto row = row_of.find(it.key());
            if (row == row_of.end()) bad("unknown basis label '" + it.key() + "'");
            for (auto ct = it.value().begin(); ct != it.value().end(); ++ct) {
                long long radical = 0;
                try {
                    radical = std::stoll(ct.key());
                } catch (const std::exception&) {
                    bad("radical key '" + ct.key() + "' is not an integer");
                }
                auto mask = mask_of.find(radical);
                if (mask == mask_of.end()) bad("radical outside the field");
                v(row->second, mask->second) =
                    parse_rational(ct.value().get<std::string>());
            }
        }
        f.basis.push_back(std::move(v));
    }
    const int n = f.dim();
    for (const Json& row : field_of(j, "brackets")) {
        int a = field_of(row, "i").get<int>();
        int b = field_of(row, "j").get<int>();
        if (a < 0 || b < 0 || a >= n || b >= n || a >= b)
            bad("bracket indices must satisfy 0 <= i < j < dim");
        f.table[{a, b}] = sparse_from_json(field_of(row, "coeffs"), n);
    }
    return f;
}

bool forms_equal(const FormPresentation& a, const FormPresentation& b) {
    if (a.radicands != b.radicands || a.images != b.images ||
        a.nil_class != b.nil_class || a.algebra_labels != b.algebra_labels ||
        a.labels != b.labels || a.degrees != b.degrees || a.table != b.table)
        return false;
    if (a.basis.size() != b.basis.size()) return false;
    for (std::size_t i = 0; i < a.basis.size(); ++i) {
        if (a.basis[i].rows() != b.basis[i].rows() ||
            a.basis[i].cols() != b.basis[i].cols() ||
            !is_zero((a.basis[i] - b.basis[i]).eval()))
            return false;
    }
    return true;
}

}  // namespace liegraph
