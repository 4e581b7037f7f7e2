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

#include "liegraph/checks.hpp"

#include <map>
#include <sstream>

namespace liegraph {

namespace {

using Accum = std::map<int, Rational>;

void accum_add(Accum& acc, int idx, const Rational& c) {
    Rational& slot = acc[idx];
    slot += c;
    if (slot == 0) acc.erase(idx);
}

SparseVec table_lookup(const AlgebraTable& t, int i, int j) {
    if (i == j) return {};
    const bool flip = i > j;
    auto it = t.brackets.find({std::min(i, j), std::max(i, j)});
    if (it == t.brackets.end()) return {};
    SparseVec out = it->second;
    if (flip)
        for (auto& [idx, c] : out) c = -c;
    return out;
}

// [v, e_k] extended linearly over a sparse v.
Accum table_ad(const AlgebraTable& t, const Accum& v, int k) {
    Accum out;
    for (const auto& [i, c] : v)
        for (const auto& [idx, r] : table_lookup(t, i, k)) accum_add(out, idx, c * r);
    return out;
}

}  // namespace

CheckResult check_table_jacobi(const AlgebraTable& t) {
    const int n = t.dim();
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            for (int k = j + 1; k < n; ++k) {
                Accum total;
                auto add_term = [&](int a, int b, int c) {
                    Accum ab;
                    for (const auto& [idx, r] : table_lookup(t, a, b))
                        accum_add(ab, idx, r);
                    for (const auto& [idx, r] : table_ad(t, ab, c))
                        accum_add(total, idx, r);
                };
                add_term(i, j, k);  // [[i,j],k]
                add_term(j, k, i);  // [[j,k],i]
                add_term(k, i, j);  // [[k,i],j]
                if (!total.empty()) {
                    std::ostringstream detail;
                    detail << "violated at triple (" << i << ", " << j << ", " << k
                           << ")";
                    return {"jacobi", false, detail.str()};
                }
            }
        }
    }
    return {"jacobi", true, ""};
}

std::vector<CheckResult> run_table_checks(const AlgebraTable& t) {
    std::vector<CheckResult> results;
    const int n = t.dim();
    const int c = static_cast<int>(t.basis.size());

    {
        CheckResult r{"grading-additivity", true, ""};
        for (const auto& [pair, coeffs] : t.brackets) {
            const int d = t.degree_of(pair.first) + t.degree_of(pair.second);
            if (d > c) {
                r = {"grading-additivity", false,
                     "bracket lands beyond the nilpotency class"};
                break;
            }
            for (const auto& [idx, coef] : coeffs) {
                if (idx < 0 || idx >= n || t.degree_of(idx) != d || coef == 0) {
                    r = {"grading-additivity", false,
                         "bracket target outside the expected degree"};
                    break;
                }
            }
            if (!r.passed) break;
        }
        results.push_back(std::move(r));
    }
    results.push_back(check_table_jacobi(t));
    return results;
}

std::vector<CheckResult> run_graph_checks(const Graph& g, int c,
                                          const AutSearchOptions& aopts,
                                          const BuildOptions& bopts) {
    std::vector<CheckResult> results;
    GradedAlgebra a = build_algebra(g, c, bopts);
    const int n = a.dim();

    // structural grading facts
    {
        CheckResult r{"grading", true, ""};
        if (c >= 2 && a.degree_dim(2) != g.edge_count())
            r = {"grading", false, "degree-2 dimension differs from the edge count"};
        for (int i = 0; i < n && r.passed; ++i) {
            for (int j = i + 1; j < n && r.passed; ++j) {
                const int d = a.degree_of(i) + a.degree_of(j);
                if (d > c) continue;
                for (const auto& [t, coef] : a.structure(i, j))
                    if (a.degree_of(t) != d || coef == 0)
                        r = {"grading", false, "bracket target outside its degree"};
            }
        }
        results.push_back(std::move(r));
    }

    {
        CheckResult r{"nilpotency-step", true, ""};
        if (g.edge_count() > 0 && c >= 2 && a.degree_dim(c) == 0)
            r = {"nilpotency-step", false, "top degree collapsed"};
        results.push_back(std::move(r));
    }

    {
        CheckResult r{"antisymmetry-jacobi", true, ""};
        for (int i = 0; i < n && r.passed; ++i) {
            VecQ ei = VecQ::Zero(n);
            ei(i) = 1;
            if (!is_zero(a.bracket(ei, ei)))
                r = {"antisymmetry-jacobi", false, "[x, x] is nonzero"};
        }
        for (int i = 0; i < n && r.passed; ++i) {
            for (int j = i + 1; j < n && r.passed; ++j) {
                for (int k = j + 1; k < n && r.passed; ++k) {
                    VecQ ei = VecQ::Zero(n), ej = VecQ::Zero(n), ek = VecQ::Zero(n);
                    ei(i) = 1;
                    ej(j) = 1;
                    ek(k) = 1;
                    VecQ total = a.bracket(a.bracket(ei, ej), ek) +
                                 a.bracket(a.bracket(ej, ek), ei) +
                                 a.bracket(a.bracket(ek, ei), ej);
                    if (!is_zero(total)) {
                        std::ostringstream detail;
                        detail << "violated at (" << a.label(i) << ", " << a.label(j)
                               << ", " << a.label(k) << ")";
                        r = {"antisymmetry-jacobi", false, detail.str()};
                    }
                }
            }
        }
        results.push_back(std::move(r));
    }

    if (c >= 2) {
        CheckResult r{"center-projection", true, ""};
        std::vector<int> expected;
        for (int v = 0; v < g.vertex_count(); ++v)
            if (g.degree(v) == 0) expected.push_back(v);
        if (center_projection(a) != expected)
            r = {"center-projection", false,
                 "centre projection differs from the degree-0 vertex span"};
        results.push_back(std::move(r));
    }

    QuotientGraph q(g);
    FiniteGroup quotient_aut = quotient_automorphisms(q, aopts);
    {
        CheckResult r{"splitting", true, ""};
        for (const Perm& phi : quotient_aut.elements()) {
            Perm lift = splitting_lift(q, phi);
            if (!is_graph_automorphism(g, lift) ||
                project_automorphism(q, lift) != phi) {
                r = {"splitting", false, "lift does not project back"};
                break;
            }
            for (int comp = 0; comp < q.component_count(); ++comp) {
                if (phi[comp] != comp) continue;
                for (int v : q.components()[comp])
                    if (lift[v] != v)
                        r = {"splitting", false, "lift moves a fixed component"};
            }
            if (!r.passed) break;
        }
        if (r.passed) {
            for (const Perm& phi : quotient_aut.elements()) {
                for (const Perm& psi : quotient_aut.elements()) {
                    if (splitting_lift(q, compose(phi, psi)) !=
                        compose(splitting_lift(q, phi), splitting_lift(q, psi))) {
                        r = {"splitting", false, "lift is not a homomorphism"};
                        break;
                    }
                }
                if (!r.passed) break;
            }
        }
        results.push_back(std::move(r));
    }

    {
        CheckResult r{"aut-order-product", true, ""};
        unsigned long long expected = quotient_aut.order();
        for (int comp = 0; comp < q.component_count(); ++comp)
            for (int i = 2; i <= q.weight(comp); ++i) expected *= i;
        if (graph_automorphisms(g, aopts).order() != expected)
            r = {"aut-order-product", false,
                 "automorphism order differs from the semidirect product count"};
        results.push_back(std::move(r));
    }

    {
        CheckResult r{"induced-bracket-preservation", true, ""};
        int used = 0;
        for (const Perm& phi : quotient_aut.elements()) {
            if (++used > 4) break;  // spot check; unit suites cover the rest
            MatQ m = induced_automorphism(a, splitting_lift(q, phi)).matrix;
            for (int i = 0; i < n && r.passed; ++i) {
                for (int j = i + 1; j < n && r.passed; ++j) {
                    VecQ ei = VecQ::Zero(n), ej = VecQ::Zero(n);
                    ei(i) = 1;
                    ej(j) = 1;
                    VecQ lhs = m * a.bracket(ei, ej);
                    VecQ rhs = a.bracket((m * ei).eval(), (m * ej).eval());
                    if (!is_zero((lhs - rhs).eval()))
                        r = {"induced-bracket-preservation", false,
                             "induced map does not preserve the bracket"};
                }
            }
            if (!r.passed) break;
        }
        results.push_back(std::move(r));
    }

    {
        CheckResult r{"json-round-trip", true, ""};
        Graph g2 = graph_from_json(graph_to_json(g));
        if (g2.vertices() != g.vertices() || g2.edges() != g.edges())
            r = {"json-round-trip", false, "graph export does not round-trip"};
        AlgebraTable t = algebra_table(a);
        if (algebra_from_json(algebra_to_json(t)) != t)
            r = {"json-round-trip", false, "algebra export does not round-trip"};
        results.push_back(std::move(r));
    }

    return results;
}

}  // namespace liegraph
