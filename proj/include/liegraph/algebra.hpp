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

#ifndef LIEGRAPH_ALGEBRA_HPP
#define LIEGRAPH_ALGEBRA_HPP

#include <memory>

#include "liegraph/automorphisms.hpp"
#include "liegraph/graph.hpp"
#include "liegraph/hall.hpp"
#include "liegraph/linalg.hpp"

namespace liegraph {

/// Sparse rational coordinate vector, sorted by basis index.
using SparseVec = std::vector<std::pair<int, Rational>>;

struct BuildOptions {
    /// Refuse builds whose free Lie algebra would exceed this dimension in
    /// any single degree.
    long long max_free_dimension = 5000;
};

/// The class-c nilpotent quotient of the free Lie algebra on the vertices by
/// the ideal generated by brackets of non-adjacent vertex pairs.  The basis
/// is graded: degree 1 is the vertices in input order, each higher degree
/// keeps the lexicographically earliest Lyndon bracketings that survive
/// reduction modulo the relation span.  Structure constants are exact
/// rationals.  Immutable after construction.
class GradedAlgebra {
public:
    const Graph& graph() const { return graph_; }
    int nil_class() const { return c_; }
    int dim() const { return static_cast<int>(labels_.size()); }

    int degree_of(int i) const { return degree_of_.at(i); }
    int degree_start(int d) const { return degree_start_.at(d); }
    int degree_dim(int d) const;
    const std::string& label(int i) const { return labels_.at(i); }
    /// Lyndon word of basis element i (its leaf sequence).
    const Word& basis_word(int i) const;

    std::vector<int> graded_dimensions() const;
    /// Lower central series dimensions: the i-th entry is the dimension of
    /// the span of all degrees >= i.
    std::vector<int> lower_central_dimensions() const;

    /// Structure constants of [e_i, e_j] for i < j; empty when zero.
    const SparseVec& structure(int i, int j) const;
    /// Bilinear antisymmetric extension.
    VecQ bracket(const VecQ& v, const VecQ& w) const;

    const HallSet& hall() const { return *hall_; }
    /// Reduces free degree-d Lyndon coordinates modulo the relation span and
    /// re-expresses them over this algebra's degree-d basis slice.
    VecQ reduce_to_basis(int degree, VecQ free_coords) const;

private:
    friend GradedAlgebra build_algebra(const Graph&, int, const BuildOptions&);
    GradedAlgebra(Graph g, int c) : graph_(std::move(g)), c_(c) {}

    Graph graph_;
    int c_;
    std::shared_ptr<const HallSet> hall_;
    std::vector<Echelon> relations_;                  // by degree
    std::vector<std::vector<int>> survivors_;         // degree -> Lyndon indices
    std::vector<std::vector<int>> global_of_lyndon_;  // degree -> Lyndon idx -> global or -1
    std::vector<std::string> labels_;
    std::vector<int> degree_of_;
    std::vector<int> degree_start_;
    std::vector<std::pair<int, int>> word_ref_;       // global -> (degree, Lyndon idx)
    std::vector<std::vector<SparseVec>> table_;       // i -> j -> coords, i < j
};

GradedAlgebra build_algebra(const Graph& g, int c, const BuildOptions& opts = {});

struct LinearMap {
    MatQ matrix;
    bool is_lie_automorphism = false;
};

/// The unique graded automorphism extending a vertex permutation; the
/// permutation must preserve the edge set.
LinearMap induced_automorphism(const GradedAlgebra& a, const Perm& vertex_perm);

/// Diagonal automorphism scaling each vertex; a degree-m basis element
/// scales by the product over its leaves.  All scales must be nonzero.
LinearMap vertex_diagonal(const GradedAlgebra& a, const std::vector<Rational>& scale);

/// Projection of the centre onto the vertex span, computed as the common
/// kernel of the adjoint maps of the generators; returns the spanning
/// vertex set (sorted indices).
std::vector<int> center_projection(const GradedAlgebra& a);

}  // namespace liegraph

#endif  // LIEGRAPH_ALGEBRA_HPP
