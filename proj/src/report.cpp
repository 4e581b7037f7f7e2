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

#include "liegraph/report.hpp"

#include <sstream>

namespace liegraph {

namespace {

// Appends "c label" with the sign folded into the separator.
void append_term(std::ostringstream& out, bool& first, const Rational& c,
                 const std::string& term) {
    Rational mag = c < 0 ? Rational(-c) : c;
    if (first) {
        if (c < 0) out << '-';
        first = false;
    } else {
        out << (c < 0 ? " - " : " + ");
    }
    if (mag != 1) out << rational_string(mag) << ' ';
    out << term;
}

std::string join_dims(const std::vector<int>& dims) {
    std::ostringstream out;
    out << '[';
    for (std::size_t i = 0; i < dims.size(); ++i) {
        if (i) out << ", ";
        out << dims[i];
    }
    out << ']';
    return out.str();
}

}  // namespace

std::string format_sparse(const SparseVec& v, const std::vector<std::string>& labels) {
    if (v.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [idx, c] : v) append_term(out, first, c, labels.at(idx));
    return out.str();
}

std::string format_form_vector(const QuadraticTower& field, const LVec& v,
                               const std::vector<std::string>& labels) {
    std::ostringstream out;
    bool first = true;
    for (int r = 0; r < v.rows(); ++r) {
        for (int mask = 0; mask < v.cols(); ++mask) {
            if (v(r, mask) == 0) continue;
            std::string term = labels.at(r);
            if (mask != 0) term = field.radical_label(mask) + " " + term;
            append_term(out, first, v(r, mask), term);
        }
    }
    return first ? "0" : out.str();
}

AnalyzeReport analyze(const Graph& g, const AutSearchOptions& opts) {
    AnalyzeReport r{g, QuotientGraph(g), g.connected_components(), 0, 0,
                    describe_linear_group(g, opts), false,
                    RationalFormCount::one, 0};
    r.aut_order = graph_automorphisms(g, opts).order();
    r.quotient_aut_order = r.description.component_group.order();
    r.transpositions_generate = r.quotient_aut_order == 1;
    r.rational_forms = r.transpositions_generate ? RationalFormCount::one
                                                 : RationalFormCount::infinite;
    r.real_form_count = static_cast<int>(
        involution_class_representatives(r.description.component_group).size());
    return r;
}

namespace {

std::string vertex_set(const Graph& g, const std::vector<int>& verts) {
    std::ostringstream out;
    out << '{';
    for (std::size_t i = 0; i < verts.size(); ++i) {
        if (i) out << ", ";
        out << g.label(verts[i]);
    }
    out << '}';
    return out.str();
}

}  // namespace

std::string render_analyze_text(const AnalyzeReport& r) {
    std::ostringstream out;
    const Graph& g = r.graph;
    out << "graph: " << g.vertex_count() << " vertices, " << g.edge_count()
        << " edges\n";
    if (g.edge_count() == 0)
        out << "note: no edges, so every associated algebra is abelian\n";
    out << "connected components (" << r.connected.size() << "):";
    for (const auto& comp : r.connected) out << ' ' << vertex_set(g, comp);
    out << '\n';
    out << "coherent components (" << r.quotient.component_count() << "):";
    for (const auto& comp : r.quotient.components()) out << ' ' << vertex_set(g, comp);
    out << '\n';
    out << "quotient graph: weights [";
    for (int c = 0; c < r.quotient.component_count(); ++c) {
        if (c) out << ", ";
        out << r.quotient.weight(c);
    }
    out << "]; loops at {";
    bool first = true;
    for (int c = 0; c < r.quotient.component_count(); ++c) {
        if (!r.quotient.has_loop(c)) continue;
        if (!first) out << ", ";
        out << (c + 1);
        first = false;
    }
    out << "}; edges {";
    first = true;
    for (auto [c, d] : r.quotient.edges()) {
        if (c == d) continue;
        if (!first) out << ", ";
        out << (c + 1) << "-" << (d + 1);
        first = false;
    }
    out << "}\n";
    out << "|Aut(graph)| = " << r.aut_order << '\n';
    out << "|Aut(quotient)| = " << r.quotient_aut_order << '\n';
    out << "linear group: unipotent dim " << r.description.dim_unipotent
        << "; GL blocks " << join_dims(r.description.gl_block_sizes)
        << " (reductive dim " << r.description.dim_reductive
        << "); component group order " << r.description.component_group.order()
        << '\n';
    out << "generated by transpositions: "
        << (r.transpositions_generate ? "true" : "false") << '\n';
    out << "rational forms: "
        << (r.rational_forms == RationalFormCount::one ? "one" : "infinitely many")
        << '\n';
    out << "real forms: " << r.real_form_count << '\n';
    return out.str();
}

Json render_analyze_json(const AnalyzeReport& r) {
    Json j;
    j["graph"] = graph_to_json(r.graph);
    j["quotient"] = quotient_to_json(r.quotient, r.graph);
    Json connected = Json::array();
    for (const auto& comp : r.connected) {
        Json c = Json::array();
        for (int v : comp) c.push_back(r.graph.label(v));
        connected.push_back(std::move(c));
    }
    j["connected_components"] = std::move(connected);
    j["aut_order"] = r.aut_order;
    j["quotient_aut_order"] = r.quotient_aut_order;
    j["linear_group"] = aut_description_to_json(r.description, r.graph);
    j["transpositions_generate"] = r.transpositions_generate;
    j["rational_forms"] =
        r.rational_forms == RationalFormCount::one ? "one" : "infinite";
    j["real_form_count"] = r.real_form_count;
    return j;
}

std::string render_algebra_text(const GradedAlgebra& a) {
    std::ostringstream out;
    out << "graph: " << a.graph().vertex_count() << " vertices, "
        << a.graph().edge_count() << " edges\n";
    out << "class: " << a.nil_class() << '\n';
    out << "dimensions: " << join_dims(a.graded_dimensions()) << " (total "
        << a.dim() << ")\n";
    out << "lower central series: " << join_dims(a.lower_central_dimensions())
        << '\n';
    out << "basis:\n";
    for (int d = 1; d <= a.nil_class(); ++d) {
        out << "  degree " << d << ':';
        for (int i = a.degree_start(d); i < a.degree_start(d) + a.degree_dim(d); ++i)
            out << ' ' << a.label(i);
        out << '\n';
    }
    std::vector<std::string> labels;
    for (int i = 0; i < a.dim(); ++i) labels.push_back(a.label(i));
    out << "brackets:\n";
    bool any = false;
    for (int i = 0; i < a.dim(); ++i) {
        for (int j = i + 1; j < a.dim(); ++j) {
            if (a.degree_of(i) + a.degree_of(j) > a.nil_class()) continue;
            const SparseVec& sc = a.structure(i, j);
            if (sc.empty()) continue;
            out << "  [" << a.label(i) << ", " << a.label(j)
                << "] = " << format_sparse(sc, labels) << '\n';
            any = true;
        }
    }
    if (!any) out << "  (abelian)\n";
    return out.str();
}

std::string render_form_text(const FormPresentation& f, bool indecomposable,
                             bool real_descending, FormMode mode) {
    QuadraticTower field{f.radicands};
    std::ostringstream out;
    out << "field: Q(";
    for (std::size_t i = 0; i < f.radicands.size(); ++i) {
        if (i) out << ", ";
        out << "sqrt(" << f.radicands[i] << ")";
    }
    out << ")\n";
    out << "galois images:";
    if (f.images.empty()) out << " (none)";
    for (const Perm& p : f.images) out << ' ' << cycle_string(p);
    out << '\n';
    out << "class: " << f.nil_class << '\n';
    out << "mode: "
        << (f.radicands.empty()
                ? "standard"
                : (mode == FormMode::paper_basis ? "paper basis" : "echelon"))
        << '\n';
    out << "dimensions: " << join_dims(f.graded_dimensions()) << '\n';
    out << "basis:\n";
    for (int i = 0; i < f.dim(); ++i)
        out << "  " << f.labels[i] << " = "
            << format_form_vector(field, f.basis[i], f.algebra_labels) << '\n';
    out << "brackets:\n";
    if (f.table.empty()) out << "  (abelian)\n";
    for (const auto& [pair, coeffs] : f.table)
        out << "  [" << f.labels[pair.first] << ", " << f.labels[pair.second]
            << "] = " << format_sparse(coeffs, f.labels) << '\n';
    out << "indecomposable: " << (indecomposable ? "true" : "false") << '\n';
    out << "descends to a real form: " << (real_descending ? "true" : "false")
        << '\n';
    return out.str();
}

Json render_form_json(const FormPresentation& f, bool indecomposable,
                      bool real_descending) {
    Json j = form_to_json(f);
    j["indecomposable"] = indecomposable;
    j["real"] = real_descending;
    return j;
}

std::string render_realforms_text(
    const std::vector<std::pair<Perm, FormPresentation>>& forms) {
    std::ostringstream out;
    out << "real forms: " << forms.size() << '\n';
    for (std::size_t i = 0; i < forms.size(); ++i) {
        const auto& [inv, form] = forms[i];
        out << "[" << (i + 1) << "] involution " << cycle_string(inv)
            << ", dimensions " << join_dims(form.graded_dimensions()) << '\n';
        for (const auto& [pair, coeffs] : form.table)
            out << "    [" << form.labels[pair.first] << ", "
                << form.labels[pair.second]
                << "] = " << format_sparse(coeffs, form.labels) << '\n';
    }
    return out.str();
}

Json render_realforms_json(
    const std::vector<std::pair<Perm, FormPresentation>>& forms) {
    Json j = Json::array();
    for (const auto& [inv, form] : forms) {
        Json entry;
        entry["involution"] = cycle_string(inv);
        entry["form"] = form_to_json(form);
        j.push_back(std::move(entry));
    }
    return j;
}

std::string dot_graph(const Graph& g) {
    std::ostringstream out;
    out << "graph Gamma {\n";
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (g.degree(v) == 0) out << "  \"" << g.label(v) << "\";\n";
    }
    for (auto [u, v] : g.edges())
        out << "  \"" << g.label(u) << "\" -- \"" << g.label(v) << "\";\n";
    out << "}\n";
    return out.str();
}

std::string dot_quotient(const QuotientGraph& q, const Graph& g) {
    std::ostringstream out;
    out << "graph QuotientGamma {\n";
    for (int c = 0; c < q.component_count(); ++c) {
        out << "  c" << (c + 1) << " [label=\"" << vertex_set(g, q.components()[c])
            << " w=" << q.weight(c) << "\"];\n";
    }
    for (auto [c, d] : q.edges())
        out << "  c" << (c + 1) << " -- c" << (d + 1) << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace liegraph
