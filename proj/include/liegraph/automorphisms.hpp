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

#ifndef LIEGRAPH_AUTOMORPHISMS_HPP
#define LIEGRAPH_AUTOMORPHISMS_HPP

#include <string>
#include <vector>

#include "liegraph/graph.hpp"

namespace liegraph {

/// Permutation of {0, ..., n-1} stored as the image list.
using Perm = std::vector<int>;

Perm identity_perm(int n);
/// (f after g)(x) = f(g(x)).
Perm compose(const Perm& f, const Perm& g);
Perm inverse(const Perm& f);
bool is_identity(const Perm& f);
bool is_involution(const Perm& f);

/// Disjoint-cycle rendering, fixed points omitted; identity renders as "()".
/// Indices are printed 1-based to match the analyze report.
std::string cycle_string(const Perm& f);
/// Parses "(1 2)(3 4)" style text into a permutation of n points.  Cycles
/// must be disjoint; "()" is the identity.
Perm parse_cycles(const std::string& text, int n);

/// Finite permutation group carried by its full, lexicographically sorted
/// element list.  Identity and inverses are verified at construction;
/// closure is the caller's responsibility (all constructors in this library
/// produce genuine groups).
class FiniteGroup {
public:
    FiniteGroup(int degree, std::vector<Perm> elements);

    int degree() const { return degree_; }
    std::size_t order() const { return elements_.size(); }
    const std::vector<Perm>& elements() const { return elements_; }
    bool contains(const Perm& p) const;
    const Perm& identity() const { return id_; }

    /// Small generating set found greedily; empty for the trivial group.
    std::vector<Perm> small_generating_set() const;

    static FiniteGroup closure(int degree, const std::vector<Perm>& generators);
    /// Full symmetric group on n points (test and check carrier).
    static FiniteGroup symmetric(int n);

private:
    int degree_;
    std::vector<Perm> elements_;
    Perm id_;
};

struct AutSearchOptions {
    int max_vertices = 10;  // also bounds quotient component counts
};

/// All edge-preserving vertex permutations, by backtracking over
/// degree-compatible assignments.  Throws BudgetError above the bound.
FiniteGroup graph_automorphisms(const Graph& g, const AutSearchOptions& opts = {});

/// All weight-, edge- and loop-preserving component permutations.
FiniteGroup quotient_automorphisms(const QuotientGraph& q,
                                   const AutSearchOptions& opts = {});

bool is_graph_automorphism(const Graph& g, const Perm& p);
bool is_quotient_automorphism(const QuotientGraph& q, const Perm& p);

/// Lift of a quotient automorphism to the vertices along the per-component
/// orderings: the i-th vertex of a component maps to the i-th vertex of the
/// image component.  Restricts to the identity on fixed components.
Perm splitting_lift(const QuotientGraph& q, const Perm& phi);

/// Permutation induced on the coherent components by a graph automorphism.
Perm project_automorphism(const QuotientGraph& q, const Perm& theta);

/// One representative per conjugacy class of involutions (identity
/// included), each the lexicographically least member of its class; classes
/// sorted by representative.
std::vector<Perm> involution_class_representatives(const FiniteGroup& g);

/// True iff some single element of g conjugates rho[i] to eta[i] for every
/// index simultaneously.
bool conjugate_data(const FiniteGroup& g, const std::vector<Perm>& rho,
                    const std::vector<Perm>& eta);

/// Action of a quotient automorphism on the connected components: a
/// component of size >= 2 follows its coherent pieces, singletons are fixed.
Perm chi_action(const Graph& g, const QuotientGraph& q,
                const std::vector<std::vector<int>>& connected,
                const Perm& phi);

/// Generator-level description of the graded linear automorphism group on
/// the vertex span: unipotent generator pairs, GL block sizes per coherent
/// component, and the component group.
struct AutDescription {
    std::vector<std::pair<int, int>> m_pairs;  // (u, v): u dominated, v not
    std::vector<int> gl_block_sizes;
    FiniteGroup component_group;
    long long dim_reductive = 0;  // sum of squared block sizes
    long long dim_unipotent = 0;  // number of m_pairs
};

AutDescription describe_linear_group(const Graph& g,
                                     const AutSearchOptions& opts = {});

/// True iff the automorphism group is generated by the transpositions of
/// equivalent vertices, i.e. the quotient graph has no symmetry.
bool transpositions_generate(const Graph& g, const AutSearchOptions& opts = {});

}  // namespace liegraph

#endif  // LIEGRAPH_AUTOMORPHISMS_HPP
