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

#ifndef LIEGRAPH_FIELD_HPP
#define LIEGRAPH_FIELD_HPP

#include <string>
#include <vector>

#include "liegraph/rational.hpp"

namespace liegraph {

/// Squarefree part with the sign kept: 12 -> 3, -18 -> -2.
long long squarefree_part(long long n);

/// The field generated over the rationals by the square roots of k
/// squarefree integers.  Elements are rational coordinate vectors over the
/// 2^k radical products, indexed by subset mask; mask 0 is the rational
/// part and each product is reduced to its squarefree radical.  Complex
/// embeddings take principal square roots, so sqrt(-a)*sqrt(-b) =
/// -sqrt(ab) for positive a, b.
class QuadraticTower {
public:
    /// Radicands must be squarefree, different from 0 and 1, and
    /// multiplicatively independent (no nonempty subset with a square
    /// product); throws ValidationError otherwise.  An empty list gives
    /// the rationals themselves.
    explicit QuadraticTower(std::vector<long long> radicands);

    int generator_count() const { return static_cast<int>(radicands_.size()); }
    int basis_size() const { return 1 << generator_count(); }
    const std::vector<long long>& radicands() const { return radicands_; }
    long long radical(int mask) const { return radical_.at(mask); }
    /// True iff the field embeds in the reals (all radicands positive).
    bool is_real() const;

    VecQ zero() const { return VecQ::Zero(basis_size()); }
    VecQ from_rational(const Rational& q) const;
    VecQ multiply(const VecQ& a, const VecQ& b) const;
    /// Galois generator flipping the sign of the j-th square root.
    VecQ conjugate(const VecQ& a, int generator) const;
    bool is_rational_element(const VecQ& a) const;

    /// All squarefree radical values including 1, sorted ascending; two
    /// radicand lists generate the same field iff these sets agree.
    std::vector<long long> closure_values() const;
    /// Deterministic generator choice for the field (smallest |value|
    /// first); shared by all presentations of the same field.
    std::vector<long long> canonical_generators() const;
    /// Expansion of a closure value as a product of canonical generators,
    /// returned as a bitmask over canonical_generators().
    int canonical_mask(long long value) const;

    std::string radical_label(int mask) const;  // "1", "sqrt(-6)", ...

private:
    std::vector<long long> radicands_;
    std::vector<long long> radical_;  // per mask
    MatQ mul_coef_;                   // basis_size x basis_size; target mask is xor
};

}  // namespace liegraph

#endif  // LIEGRAPH_FIELD_HPP
