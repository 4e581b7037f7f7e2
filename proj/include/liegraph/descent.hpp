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

#ifndef LIEGRAPH_DESCENT_HPP
#define LIEGRAPH_DESCENT_HPP

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "liegraph/algebra.hpp"
#include "liegraph/automorphisms.hpp"
#include "liegraph/field.hpp"

namespace liegraph {

/// A Galois action on the extended algebra: one quotient-graph automorphism
/// per sign-flip generator of the field.  Valid data have commuting
/// involutive images generating a subgroup of full order 2^k, so the
/// morphism is injective.
struct DescentDatum {
    QuadraticTower field;
    std::vector<Perm> images;
};

/// Throws ValidationError with the failing condition spelled out
/// (non-automorphism, non-involution, non-commuting, non-injective).
void validate_datum(const QuotientGraph& q, const DescentDatum& datum);

/// Vectors over the extended field: row = algebra basis element, column =
/// radical basis mask of the field.
using LVec = MatQ;

/// Bilinear bracket of two extended-field vectors.
LVec bracket_over(const GradedAlgebra& a, const QuadraticTower& f,
                  const LVec& v, const LVec& w);

/// One semilinear step: conjugate every coordinate by the j-th sign flip,
/// then apply the graded automorphism induced by the lifted image.
LVec semilinear_apply(const GradedAlgebra& a, const QuotientGraph& q,
                      const DescentDatum& datum, int generator, const LVec& v);

enum class FormMode { echelon, paper_basis };

/// A rational presentation of the fixed-point form: a basis of the fixed
/// set (each vector with extended-field coordinates over the algebra basis)
/// together with its exact rational bracket table.
struct FormPresentation {
    std::vector<long long> radicands;
    std::vector<Perm> images;
    int nil_class = 2;
    std::vector<std::string> algebra_labels;
    std::vector<std::string> labels;  // per basis vector
    std::vector<int> degrees;         // per basis vector
    std::vector<LVec> basis;
    std::map<std::pair<int, int>, SparseVec> table;  // i < j, nonzero rows only

    int dim() const { return static_cast<int>(basis.size()); }
    std::vector<int> graded_dimensions() const;
};

/// Solves the simultaneous fixed-point system of the datum over the
/// rationals, degree by degree.  The echelon mode returns the canonical
/// kernel basis; the paper-basis mode (one generator only) pairs basis
/// words with their images into sum / radical-difference vectors and is
/// rejected when the induced map does not act as a signed permutation of
/// the basis.
FormPresentation compute_fixed_form(const GradedAlgebra& a, const QuotientGraph& q,
                                    const DescentDatum& datum, FormMode mode);

/// One entry per conjugacy class of involutions of the quotient-graph
/// automorphism group.  The identity entry is the standard rational form;
/// every other involution is presented over the Gaussian field so that the
/// rational table, read over the reals, presents the real form.
std::vector<std::pair<Perm, FormPresentation>> enumerate_real_forms(
    const Graph& g, int c, const AutSearchOptions& aopts = {},
    const BuildOptions& bopts = {});

enum class RationalFormCount { one, infinite };

/// One form exactly when the quotient graph has no symmetry, infinitely
/// many otherwise.
RationalFormCount rational_form_count(const Graph& g,
                                      const AutSearchOptions& aopts = {});

struct ClassifiedData {
    std::vector<std::vector<int>> classes;  // indices into the input list
    std::vector<bool> real_descending;      // per class
};

/// Partitions descent data into isomorphism classes: same field (as a
/// field, not as a generator list) and simultaneously conjugate images
/// after aligning the sign-flip generators through the field identity.
ClassifiedData classify_rational_data(const Graph& g,
                                      const std::vector<DescentDatum>& data,
                                      const AutSearchOptions& aopts = {});

/// Transitivity of the induced action on connected components.
bool is_indecomposable(const Graph& g, const DescentDatum& datum,
                       const AutSearchOptions& aopts = {});

}  // namespace liegraph

#endif  // LIEGRAPH_DESCENT_HPP
